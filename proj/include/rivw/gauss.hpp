#pragma once

#include <functional>

namespace rivw::gauss {

// Standard normal density, cumulative, survival. Tail values are computed
// through scaled complementary-error-function forms, never by subtracting
// from 1: the survival function keeps better than 1e-12 relative accuracy
// over the representable range (checked against an extended-precision oracle
// in the tests). Non-finite input throws std::domain_error.
double norm_pdf(double x);
double norm_cdf(double x);
double norm_sf(double x);

// Inverse of norm_cdf for p in (0,1); throws std::domain_error otherwise.
double norm_quantile(double p);

// (phi(a) - phi(b)) / (1 - Phi(a) + Phi(b)) for a >= b, finite for all
// finite inputs including deep two-sided tails where the denominator
// underflows. Throws std::invalid_argument if a < b.
double mills_ratio_diff(double a, double b);

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    double lower = -12.0;
    double upper = 12.0;
};

// Adaptive Gauss-Kronrod (G7,K15) quadrature of f over [lower, upper].
// Deterministic: worst-interval-first refinement with index tie-breaking.
// Throws rivw::convergence_error (carrying the running estimate and error
// bound) if max_subdivisions is exhausted, std::invalid_argument on a bad
// spec.
double integrate(const std::function<double(double)>& f, const QuadratureSpec& spec);

}  // namespace rivw::gauss
