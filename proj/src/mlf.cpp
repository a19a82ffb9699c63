#include "fracdiff/mlf.hpp"

#include <cmath>
#include <vector>

#include "fracdiff/gamma.hpp"

namespace fracdiff::mlf {

MLParams::MLParams(double a, double b, double d) : alpha(a), beta(b), delta(d) {
    if (!(alpha > 0.0)) throw std::invalid_argument("MLParams: alpha must be > 0");
    if (!std::isfinite(beta)) throw std::invalid_argument("MLParams: beta must be finite");
    if (!(delta > 0.0)) throw std::invalid_argument("MLParams: delta must be > 0");
}

SeriesPolicy::SeriesPolicy(double tol, int terms, int consec)
    : rel_tol(tol), max_terms(terms), consecutive_small(consec) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw std::invalid_argument("SeriesPolicy: rel_tol must be in (0,1)");
    if (max_terms < 1) throw std::invalid_argument("SeriesPolicy: max_terms must be >= 1");
    if (consecutive_small < 1)
        throw std::invalid_argument("SeriesPolicy: consecutive_small must be >= 1");
}

namespace detail {

SeriesAccum prabhakar_series(dd alpha, dd beta, dd delta, cplx z, const SeriesPolicy& pol) {
    SeriesAccum out;
    cdd sum;
    cdd zk{dd(1.0), dd(0.0)};
    cdd zc{dd(z.real()), dd(z.imag())};
    dd poch(1.0); // (delta)_k / k!
    int small = 0;

    for (int k = 0; k < pol.max_terms; ++k) {
        dd arg = alpha * dd(double(k)) + beta;
        dd coef = poch * dd_rgamma(arg);
        cdd term = zk * coef;

        sum += term;
        double tm = cdd_mag(term);
        double sm = cdd_mag(sum);
        if (tm > out.max_mag) out.max_mag = tm;
        out.terms = k + 1;

        if (k > 0 && tm <= pol.rel_tol * sm) {
            if (++small >= pol.consecutive_small) {
                out.converged = true;
                break;
            }
        } else {
            small = 0;
        }

        poch = poch * (delta + dd(double(k))) / dd(double(k + 1));
        zk = zk * zc;
        if (!std::isfinite(cdd_mag(zk))) break; // overflow on the growing axis
    }
    out.value = sum;
    return out;
}

} // namespace detail

cplx ml3_series(const MLParams& p, cplx z, const SeriesPolicy& pol) {
    auto acc = detail::prabhakar_series(dd(p.alpha), dd(p.beta), dd(p.delta), z, pol);
    if (!acc.converged)
        throw NonConvergence("ml3_series: stop rule not met within max_terms");
    return {to_double(acc.value.re), to_double(acc.value.im)};
}

cplx ml3_asymptotic(const MLParams& p, cplx z) {
    // E^d_{a,b}(z) = Z^:-d / Gamma(d) * sum_n Gamma(d+n)/Gamma(b - a(d+n)) (-1)^n Z^-n / n!
    // with Z = -z; valid toward the negative real axis for large |z|.
    if (z == cplx(0.0)) throw AsymptoticUnreliable("ml3_asymptotic: z = 0");
    cplx Z = -z;
    double zeta = std::pow(std::abs(z), 1.0 / p.alpha);
    if (zeta < scaled_switch_radius)
        throw AsymptoticUnreliable("ml3_asymptotic: |z|^(1/alpha) below switch radius");
    if (std::fabs(std::arg(Z)) > 0.75 * std::numbers::pi)
        throw AsymptoticUnreliable("ml3_asymptotic: argument too far from the negative axis");

    // Collect terms; reciprocal-gamma zeros make single magnitudes dip, so the
    // optimal truncation point is found on a 3-term envelope.
    cplx inv_z = 1.0 / Z;
    cplx zpow = 1.0;   // (-1)^n Z^-n
    double poch = 1.0; // Gamma(d+n)/(Gamma(d) n!)
    std::vector<cplx> terms;
    std::vector<double> mags;
    terms.reserve(64);

    const int nmax = 4000;
    double run_min = std::numeric_limits<double>::infinity();
    for (int n = 0; n < nmax; ++n) {
        double coef = poch * reciprocal_gamma_real(p.beta - p.alpha * (p.delta + n));
        cplx term = coef * zpow;
        terms.push_back(term);
        double tm = std::abs(term);
        mags.push_back(tm);
        if (tm > 0.0 && tm < run_min) run_min = tm;
        if (tm > 0.0 && tm < 1e-18) break;
        if (n >= 8 && mags[n] > 50.0 * run_min && mags[n - 1] > 10.0 * run_min) break;
        poch *= (p.delta + n) / (n + 1.0);
        zpow *= -inv_z;
    }

    const int n_terms = static_cast<int>(terms.size());
    auto envelope = [&](int i) {
        double m = mags[i];
        if (i > 0) m = std::max(m, mags[i - 1]);
        if (i + 1 < n_terms) m = std::max(m, mags[i + 1]);
        return m;
    };
    int n_star = 0;
    double env_min = envelope(0);
    for (int i = 1; i < n_terms; ++i) {
        double e = envelope(i);
        if (e < env_min) {
            env_min = e;
            n_star = i;
        }
    }
    cplx sum = 0.0;
    for (int i = n_star; i >= 0; --i) sum += terms[i];

    if (!(env_min <= 1e-9 * std::max(std::abs(sum), 1e-280)))
        throw AsymptoticUnreliable("ml3_asymptotic: smallest term exceeds tolerance");

    return std::pow(Z, -p.delta) * sum;
}

cplx ml3(const MLParams& p, cplx z, const SeriesPolicy& pol) {
    if (z == cplx(0.0)) return reciprocal_gamma(p.beta);
    double zeta = std::pow(std::abs(z), 1.0 / p.alpha);
    bool right_half = z.real() >= 0.0 && std::fabs(z.imag()) <= z.real();
    if (right_half || zeta <= scaled_switch_radius) return ml3_series(p, z, pol);
    return ml3_asymptotic(p, z);
}

cplx ml_laplace_pair(const MLParams& p, double a, cplx s, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("ml_laplace_pair: sign must be +1 or -1");
    if (!(s.real() > std::pow(std::fabs(a), 1.0 / p.alpha)))
        throw DomainError("ml_laplace_pair: Re(s) <= |a|^(1/alpha)");
    cplx sa = std::pow(s, p.alpha);
    return std::pow(s, p.alpha * p.delta - p.beta) / std::pow(sa - double(sign) * a, p.delta);
}

cplx ml2_negative_alpha(double alpha, double beta, cplx z, const SeriesPolicy& pol) {
    if (!(alpha > 0.0)) throw std::invalid_argument("ml2_negative_alpha: alpha must be > 0");
    if (z == cplx(0.0)) throw DomainError("ml2_negative_alpha: z = 0");
    return -ml3(MLParams(alpha, alpha + beta, 1.0), 1.0 / z, pol) / z;
}

double hermite(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite: n must be >= 0");
    if (n == 0) return 1.0;
    double hm = 1.0, h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        double next = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = next;
    }
    return h;
}

} // namespace fracdiff::mlf
