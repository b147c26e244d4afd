#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

#include "rivw/detail/kernel_constants.hpp"
#include "rivw/rng.hpp"

// Scalar reference kernels. The AVX2 variants in src/kernels_avx2.cpp follow
// the exact same operation order (same fma placement, same branch/blend
// conditions), so scalar and vector results agree bitwise; equivalence tests
// enforce this. Keep the two files in sync when touching either.
//
// All functions assume finite inputs; argument validation lives in the public
// wrappers (rivw/gauss.hpp).

namespace rivw::kern::scalar {

using namespace rivw::kern::detail;

// e^x over the full double range; |rel err| is a few ulp. Arguments outside
// [-750, 710] are clamped, which only pins the already-saturated result.
inline double exp_core(double x) {
    if (x > 710.0) x = 710.0;
    if (x < -750.0) x = -750.0;
    double t  = std::fma(x, kLog2E, kShifter);
    double kd = t - kShifter;
    double r  = std::fma(-kd, kLn2Hi, x);
    r = std::fma(-kd, kLn2Lo, r);
    double acc = kExpC[11];
    for (int i = 10; i >= 0; --i) acc = std::fma(acc, r, kExpC[i]);
    double er = std::fma(acc * r, r, r) + 1.0;
    // 2^k in two factors so that subnormal/overflow scaling stays in range
    auto k  = static_cast<std::int64_t>(kd);
    std::int64_t k1 = k >> 1;
    std::int64_t k2 = k - k1;
    double s1 = std::bit_cast<double>(static_cast<std::uint64_t>(k1 + 1023) << 52);
    double s2 = std::bit_cast<double>(static_cast<std::uint64_t>(k2 + 1023) << 52);
    return er * s1 * s2;
}

// exp(-x^2/2) with the argument split into an exact product plus remainder,
// so the result keeps ~1 ulp relative accuracy even when x^2/2 is large.
inline double exp_neg_half_square(double x) {
    double p = x * x;
    double e = std::fma(x, x, -p);
    double E = exp_core(-0.5 * p);
    return std::fma(E, -0.5 * e, E);
}

// log x for positive normal x.
inline double log_core(double x) {
    auto bits = std::bit_cast<std::uint64_t>(x);
    auto e    = static_cast<std::int64_t>(bits >> 52) - 1023;
    double m  = std::bit_cast<double>((bits & 0x000FFFFFFFFFFFFFull) | 0x3FF0000000000000ull);
    if (m > kSqrt2) {
        m *= 0.5;
        e += 1;
    }
    double s  = (m - 1.0) / (m + 1.0);
    double s2 = s * s;
    double acc = kLogC[9];
    for (int i = 8; i >= 0; --i) acc = std::fma(acc, s2, kLogC[i]);
    double u    = 2.0 * s;
    double logm = std::fma(u * s2, acc, u);
    auto ed = static_cast<double>(e);
    return std::fma(ed, kLn2Hi, logm) + ed * kLn2Lo;
}

// erf(t) for t in [0, 0.46875]: t * R(t^2).
inline double erf_small(double t) {
    double ysq  = t * t;
    double xnum = kErfA[4] * ysq;
    double xden = ysq;
    for (int i = 0; i < 3; ++i) {
        xnum = (xnum + kErfA[i]) * ysq;
        xden = (xden + kErfB[i]) * ysq;
    }
    return t * (xnum + kErfA[3]) / (xden + kErfB[3]);
}

// exp(t^2)*erfc(t) for t in (0.46875, 4].
inline double erfcx_mid(double t) {
    double xnum = kErfC[8] * t;
    double xden = t;
    for (int i = 0; i < 7; ++i) {
        xnum = (xnum + kErfC[i]) * t;
        xden = (xden + kErfD[i]) * t;
    }
    return (xnum + kErfC[7]) / (xden + kErfD[7]);
}

// exp(t^2)*erfc(t) for t > 4.
inline double erfcx_far(double t) {
    double u    = 1.0 / (t * t);
    double xnum = kErfP[5] * u;
    double xden = u;
    for (int i = 0; i < 4; ++i) {
        xnum = (xnum + kErfP[i]) * u;
        xden = (xden + kErfQ[i]) * u;
    }
    double r = u * (xnum + kErfP[4]) / (xden + kErfQ[4]);
    return (kInvSqrtPi - r) / t;
}

// exp(t^2)*erfc(t) for t > 0.46875 (regions 2 and 3 merged).
inline double erfcx_tail(double t) {
    return (t <= kErfMid) ? erfcx_mid(t) : erfcx_far(t);
}

// Survival function 1 - Phi(x) for x >= 0. Tail values are computed through
// the scaled form, never by subtraction from 1.
inline double normal_sf_pos(double x) {
    double t = x * kInvSqrt2;
    if (t <= kErfThresh) return std::fma(-0.5, erf_small(t), 0.5);
    return (0.5 * exp_neg_half_square(x)) * erfcx_tail(t);
}

inline double normal_sf(double x) {
    return (x >= 0.0) ? normal_sf_pos(x) : 1.0 - normal_sf_pos(-x);
}

inline double normal_cdf(double x) {
    return (x >= 0.0) ? 1.0 - normal_sf_pos(x) : normal_sf_pos(-x);
}

inline double normal_pdf(double x) {
    return kInvSqrt2Pi * exp_neg_half_square(x);
}

// Mills ratio (1-Phi(x))/phi(x) for x >= 0, evaluated in scaled form so it
// stays finite long after both numerator and denominator underflow.
inline double mills_ratio_pos(double x) {
    double t = x * kInvSqrt2;
    if (t <= kErfThresh) {
        double sf = std::fma(-0.5, erf_small(t), 0.5);
        return sf / (kInvSqrt2Pi * exp_neg_half_square(x));
    }
    return kSqrtPiOver2 * erfcx_tail(t);
}

// Normal quantile of u in (0,1), algorithm AS 241.
inline double normal_quantile_unit(double u) {
    double q = u - 0.5;
    if (q <= kQntSplit1 && q >= -kQntSplit1) {
        double r    = std::fma(-q, q, kQntConst1);
        double xnum = kQntA[7];
        for (int i = 6; i >= 0; --i) xnum = std::fma(xnum, r, kQntA[i]);
        double xden = kQntB[6];
        for (int i = 5; i >= 0; --i) xden = std::fma(xden, r, kQntB[i]);
        xden = std::fma(xden, r, 1.0);
        return q * xnum / xden;
    }
    double rt = (q < 0.0) ? u : 1.0 - u;
    double s  = std::sqrt(-log_core(rt));
    double z;
    if (s <= kQntSplit2) {
        double r    = s - kQntConst2;
        double xnum = kQntC[7];
        for (int i = 6; i >= 0; --i) xnum = std::fma(xnum, r, kQntC[i]);
        double xden = kQntD[6];
        for (int i = 5; i >= 0; --i) xden = std::fma(xden, r, kQntD[i]);
        xden = std::fma(xden, r, 1.0);
        z = xnum / xden;
    } else {
        double r    = s - kQntSplit2;
        double xnum = kQntE[7];
        for (int i = 6; i >= 0; --i) xnum = std::fma(xnum, r, kQntE[i]);
        double xden = kQntF[6];
        for (int i = 5; i >= 0; --i) xden = std::fma(xden, r, kQntF[i]);
        xden = std::fma(xden, r, 1.0);
        z = xnum / xden;
    }
    return (q < 0.0) ? -z : z;
}

// Two-sided truncation terms for an interval [b, a] with a >= b. With the
// exterior mass D = 1 - Phi(a) + Phi(b), returns
//   r1   = (phi(a) - phi(b)) / D
//   r2   = (a*phi(a) - b*phi(b)) / D
//   mass = D
// r1 and r2 stay finite for any finite inputs: when both boundaries are far
// out (D underflows), the ratios are evaluated through Mills ratios of the
// nearer boundary, so the tiny denominator is never divided by.
struct TruncTerms {
    double r1;
    double r2;
    double mass;
};

inline TruncTerms trunc_terms(double a, double b) {
    double abs_a = std::fabs(a);
    double abs_b = std::fabs(b);
    double Ea = exp_neg_half_square(abs_a);
    double Eb = exp_neg_half_square(abs_b);

    TruncTerms out;
    if (a < 0.0 || b > 0.0) {
        // one side holds at least half the mass; direct evaluation
        double ta = abs_a * kInvSqrt2;
        double tb = abs_b * kInvSqrt2;
        double sfa = (ta <= kErfThresh) ? std::fma(-0.5, erf_small(ta), 0.5)
                                        : (0.5 * Ea) * erfcx_tail(ta);
        double sfb = (tb <= kErfThresh) ? std::fma(-0.5, erf_small(tb), 0.5)
                                        : (0.5 * Eb) * erfcx_tail(tb);
        double mass = (a < 0.0) ? (1.0 - sfa) + sfb : sfa + (1.0 - sfb);
        double pa = kInvSqrt2Pi * Ea;
        double pb = kInvSqrt2Pi * Eb;
        out.r1   = (pa - pb) / mass;
        out.r2   = (a * pa - b * pb) / mass;
        out.mass = mass;
    } else {
        // a >= 0 >= b: both tails may be far out. Factor the dominant
        // density out of numerator and denominator.
        double u  = (abs_a <= abs_b) ? abs_a : abs_b;
        double v  = (abs_a <= abs_b) ? abs_b : abs_a;
        double Eu = (abs_a <= abs_b) ? Ea : Eb;
        double Ev = (abs_a <= abs_b) ? Eb : Ea;
        double rr = exp_core((0.5 * (u - v)) * (u + v));  // phi(v)/phi(u)
        double tu = u * kInvSqrt2;
        double tv = v * kInvSqrt2;
        double Qu = (tu <= kErfThresh)
                        ? std::fma(-0.5, erf_small(tu), 0.5) / (kInvSqrt2Pi * Eu)
                        : kSqrtPiOver2 * erfcx_tail(tu);
        double Qv = (tv <= kErfThresh)
                        ? std::fma(-0.5, erf_small(tv), 0.5) / (kInvSqrt2Pi * Ev)
                        : kSqrtPiOver2 * erfcx_tail(tv);
        double den = std::fma(rr, Qv, Qu);
        double r1m = (1.0 - rr) / den;
        out.r1   = (abs_a <= abs_b) ? r1m : -r1m;
        out.r2   = std::fma(rr, v, u) / den;
        out.mass = (kInvSqrt2Pi * Eu) * den;
    }
    return out;
}

// Same terms parameterized by the standardized effect: a = (lambda - z)/eta,
// b = -(lambda + z)/eta.
inline TruncTerms trunc_terms_z(double z, double lambda, double eta) {
    double inv_eta = 1.0 / eta;
    double a = (lambda - z) * inv_eta;
    double b = -(lambda + z) * inv_eta;
    return trunc_terms(a, b);
}

}  // namespace rivw::kern::scalar
