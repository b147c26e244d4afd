#pragma once

// Polynomial/rational coefficients shared by the scalar reference kernels and
// the AVX2 variants. Both lanes must read the same constants and apply them
// in the same operation order so that results agree bitwise.

namespace rivw::kern::detail {

inline constexpr double kInvSqrt2    = 0.70710678118654752440;   // 1/sqrt(2)
inline constexpr double kInvSqrt2Pi  = 0.39894228040143267794;   // 1/sqrt(2*pi)
inline constexpr double kSqrtPiOver2 = 1.2533141373155002512;    // sqrt(pi/2)
inline constexpr double kInvSqrtPi   = 0.56418958354775628695;   // 1/sqrt(pi)

// ---------------------------------------------------------------------------
// exp: argument reduction x = k*ln2 + r, |r| <= ln2/2, e^r by Taylor series.
// Valid over the full double range; output flushes to 0/inf via the two-step
// exponent scaling.
inline constexpr double kLog2E  = 1.4426950408889634074;
inline constexpr double kLn2Hi  = 6.93147180369123816490e-01;  // 21 trailing zero bits
inline constexpr double kLn2Lo  = 1.90821492927058770002e-10;
inline constexpr double kShifter = 0x1.8p52;  // round-to-nearest-even magic constant

// 1/k! for k = 2..13; truncation error of the degree-13 series is ~4e-18
// relative at |r| = ln2/2.
inline constexpr double kExpC[12] = {
    1.0 / 2,          1.0 / 6,           1.0 / 24,           1.0 / 120,
    1.0 / 720,        1.0 / 5040,        1.0 / 40320,        1.0 / 362880,
    1.0 / 3628800.0,  1.0 / 39916800.0,  1.0 / 479001600.0,  1.0 / 6227020800.0,
};

// ---------------------------------------------------------------------------
// log: x = 2^e * m with m in [sqrt(2)/2, sqrt(2)), s = (m-1)/(m+1),
// log(m) = 2*atanh(s) via the odd series; input assumed positive and normal.
inline constexpr double kSqrt2 = 1.4142135623730951;
// 1/(2k+1) for k = 1..10 (term s^(2k)); tail < 2e-17 relative at |s|max.
inline constexpr double kLogC[10] = {
    1.0 / 3,  1.0 / 5,  1.0 / 7,  1.0 / 9,  1.0 / 11,
    1.0 / 13, 1.0 / 15, 1.0 / 17, 1.0 / 19, 1.0 / 21,
};

// ---------------------------------------------------------------------------
// Rational approximations for erf/erfc (W. J. Cody, Math. Comp. 1969; netlib
// SPECFUN constants). Region variable is t = x/sqrt(2) for the normal
// survival function.
//   region 1: t <= 0.46875           erf(t)  = t * R1(t^2)
//   region 2: 0.46875 < t <= 4       erfcx(t) = R2(t)
//   region 3: t > 4                  erfcx(t) = (1/sqrt(pi) - u*R3(u))/t, u = 1/t^2
inline constexpr double kErfThresh = 0.46875;
inline constexpr double kErfMid    = 4.0;

inline constexpr double kErfA[5] = {
    3.1611237438705656, 113.864154151050156, 377.485237685302021,
    3209.37758913846947, 0.185777706184603153,
};
inline constexpr double kErfB[4] = {
    23.6012909523441209, 244.024637934444173, 1282.61652607737228,
    2844.23683343917062,
};
inline constexpr double kErfC[9] = {
    0.564188496988670089, 8.88314979438837594, 66.1191906371416295,
    298.635138197400131,  881.95222124176909,  1712.04761263407058,
    2051.07837782607147,  1230.33935479799725, 2.15311535474403846e-8,
};
inline constexpr double kErfD[8] = {
    15.7449261107098347, 117.693950891312499, 537.181101862009858,
    1621.38957456669019, 3290.79923573345963, 4362.61909014324716,
    3439.36767414372164, 1230.33935480374942,
};
inline constexpr double kErfP[6] = {
    0.305326634961232344, 0.360344899949804439, 0.125781726111229246,
    0.0160837851487422766, 6.58749161529837803e-4, 0.0163153871373020978,
};
inline constexpr double kErfQ[5] = {
    2.56852019228982242, 1.87295284992346047, 0.527905102951428412,
    0.0605183413124413191, 0.00233520497626869185,
};

// ---------------------------------------------------------------------------
// Normal quantile, algorithm AS 241 (Wichura 1988), double-precision fit.
//   |q| <= 0.425:        z = q * A(r)/B(r),  r = 0.180625 - q^2
//   r = sqrt(-log(min(p,1-p))), r <= 5:  z = C(r-1.6)/D(r-1.6)
//   r > 5:                               z = E(r-5)/F(r-5)
inline constexpr double kQntSplit1 = 0.425;
inline constexpr double kQntSplit2 = 5.0;
inline constexpr double kQntConst1 = 0.180625;
inline constexpr double kQntConst2 = 1.6;

inline constexpr double kQntA[8] = {
    3.3871328727963666080e0,  1.3314166789178437745e2, 1.9715909503065514427e3,
    1.3731693765509461125e4,  4.5921953931549871457e4, 6.7265770927008700853e4,
    3.3430575583588128105e4,  2.5090809287301226727e3,
};
inline constexpr double kQntB[7] = {
    4.2313330701600911252e1, 6.8718700749205790830e2, 5.3941960214247511077e3,
    2.1213794301586595867e4, 3.9307895800092710610e4, 2.8729085735721942674e4,
    5.2264952788528545610e3,
};
inline constexpr double kQntC[8] = {
    1.42343711074968357734e0,  4.63033784615654529590e0,
    5.76949722146069140550e0,  3.64784832476320460504e0,
    1.27045825245236838258e0,  2.41780725177450611770e-1,
    2.27238449892691845833e-2, 7.74545014278341407640e-4,
};
inline constexpr double kQntD[7] = {
    2.05319162663775882187e0,  1.67638483018380384940e0,
    6.89767334985100004550e-1, 1.48103976427480074590e-1,
    1.51986665636164571966e-2, 5.47593808499534494600e-4,
    1.05075007164441684324e-9,
};
inline constexpr double kQntE[8] = {
    6.65790464350110377720e0,  5.46378491116411436990e0,
    1.78482653991729133580e0,  2.96560571828504891230e-1,
    2.65321895265761230930e-2, 1.24266094738807843860e-3,
    2.71155556874348757815e-5, 2.01033439929228813265e-7,
};
inline constexpr double kQntF[7] = {
    5.99832206555887937690e-1, 1.36929880922735805310e-1,
    1.48753612908506148525e-2, 7.86869131145613259100e-4,
    1.84631831751005468180e-5, 1.42151175831644588870e-7,
    2.04426310338993978564e-15,
};

}  // namespace rivw::kern::detail
