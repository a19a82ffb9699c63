#ifndef FRACDIFF_MLF_HPP
#define FRACDIFF_MLF_HPP

#include <complex>

#include "fracdiff/ddouble.hpp"
#include "fracdiff/errors.hpp"

namespace fracdiff::mlf {

using cplx = std::complex<double>;

// Parameters of the three-parameter Mittag-Leffler function
// E^delta_{alpha,beta}(z) = sum_k (delta)_k z^k / (Gamma(alpha k + beta) k!).
// alpha > 0 and delta > 0; negative first parameters are reached only
// through ml2_negative_alpha.
struct MLParams {
    double alpha;
    double beta;
    double delta;

    MLParams(double a, double b, double d = 1.0);
};

struct SeriesPolicy {
    double rel_tol = 1e-12;
    int max_terms = 6000;
    int consecutive_small = 3;

    SeriesPolicy() = default;
    SeriesPolicy(double tol, int terms, int consec);
};

// Dispatch radius in the scaled variable |z|^(1/alpha). Below it the power
// series (double-double internals) is accurate; above it the algebraic
// expansion is past its optimal-truncation floor. The two regions overlap
// for roughly |z|^(1/alpha) in [30, 46].
inline constexpr double scaled_switch_radius = 38.0;

// Power-series branch. Requires |z|^(1/alpha) below the switch radius
// (or z on the closed right half plane, where there is no cancellation).
cplx ml3_series(const MLParams& p, cplx z, const SeriesPolicy& pol);

// Algebraic large-|z| expansion for directions around the negative real
// axis, truncated at its smallest term.
cplx ml3_asymptotic(const MLParams& p, cplx z);

// E^delta_{alpha,beta}(z) with automatic branch dispatch.
cplx ml3(const MLParams& p, cplx z, const SeriesPolicy& pol = {});

inline double ml3_real(const MLParams& p, double z, const SeriesPolicy& pol = {}) {
    return ml3(p, cplx(z), pol).real();
}

// Laplace image of t^(beta-1) E^delta_{alpha,beta}(sign * a t^alpha):
// s^(alpha delta - beta) / (s^alpha - sign * a)^delta, Re(s) > |a|^(1/alpha).
cplx ml_laplace_pair(const MLParams& p, double a, cplx s, int sign);

// E_{-alpha,beta}(z) = -z^(-1) E_{alpha,alpha+beta}(1/z), z != 0.
cplx ml2_negative_alpha(double alpha, double beta, cplx z, const SeriesPolicy& pol = {});

// Physicists' Hermite polynomial H_n(x).
double hermite(int n, double x);

namespace detail {

// Internal series core with double-double parameters; exposed for the
// solution-engine modules that build Prabhakar sums with shifted betas.
struct SeriesAccum {
    cdd value;
    double max_mag = 0.0; // largest partial-term magnitude (roundoff floor scale)
    int terms = 0;
    bool converged = false;
};

SeriesAccum prabhakar_series(dd alpha, dd beta, dd delta, cplx z, const SeriesPolicy& pol);

} // namespace detail

} // namespace fracdiff::mlf

#endif
