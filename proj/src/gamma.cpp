#include "fracdiff/gamma.hpp"

#include <cmath>
#include <numbers>

namespace fracdiff {

namespace {

// Lanczos g = 7, n = 9 (Godfrey coefficients)
constexpr double lanczos_g = 7.0;
constexpr double lanczos_c[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double pi = std::numbers::pi;

bool is_nonpositive_integer(std::complex<double> z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

std::complex<double> log_gamma_core(std::complex<double> z) {
    // valid for Re(z) >= 1/2
    std::complex<double> x = lanczos_c[0];
    for (int i = 1; i < 9; ++i) x += lanczos_c[i] / (z + double(i - 1));
    std::complex<double> t = z + (lanczos_g - 0.5);
    return 0.5 * std::log(2.0 * pi) + (z - 0.5) * std::log(t) - t + std::log(x);
}

} // namespace

double sinpi(double x) {
    double n = std::floor(x + 0.5);
    double u = x - n;
    double r = std::sin(pi * u);
    return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -r : r;
}

double cospi(double x) { return sinpi(x + 0.5); }

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() >= 0.5) return log_gamma_core(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    // log sin(pi z) computed overflow-safely for large |Im z|
    std::complex<double> lsin;
    double y = z.imag();
    if (std::fabs(y) > 20.0) {
        // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / 2i; keep the dominant exponential
        std::complex<double> ipz(-pi * y, pi * z.real());
        if (y > 0.0)
            lsin = std::complex<double>(0.0, -pi / 2.0) + ipz + std::log(std::complex<double>(0.5))
                   + std::log(1.0 - std::exp(-2.0 * ipz));
        else
            lsin = std::complex<double>(0.0, pi / 2.0) - ipz + std::log(std::complex<double>(0.5))
                   + std::log(1.0 - std::exp(2.0 * ipz));
    } else {
        double n = std::floor(z.real() + 0.5);
        std::complex<double> u = z - n;
        lsin = std::log(std::sin(pi * u));
        if (std::fmod(std::fabs(n), 2.0) == 1.0) lsin += std::complex<double>(0.0, pi);
    }
    return std::log(std::complex<double>(pi)) - lsin - log_gamma_core(1.0 - z);
}

std::complex<double> reciprocal_gamma(std::complex<double> z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() >= 0.5) return std::exp(-log_gamma_core(z));
    // 1/Gamma(z) = Gamma(1-z) sin(pi z) / pi : entire, no overflow surprises
    std::complex<double> g = std::exp(log_gamma_core(1.0 - z));
    std::complex<double> s;
    if (z.imag() == 0.0) s = sinpi(z.real());
    else {
        double n = std::floor(z.real() + 0.5);
        s = std::sin(pi * (z - n));
        if (std::fmod(std::fabs(n), 2.0) == 1.0) s = -s;
    }
    return g * s / pi;
}

double log_gamma_real(double x) {
    if (x > 0.0) return std::lgamma(x);
    // log|Gamma(x)| via reflection
    return std::log(pi) - std::log(std::fabs(sinpi(x))) - std::lgamma(1.0 - x);
}

int gamma_sign(double x) {
    if (x > 0.0) return 1;
    if (x == std::floor(x)) return 0; // pole
    // sign alternates between consecutive negative integers
    double s = sinpi(x);
    return s > 0.0 ? 1 : -1;
}

double reciprocal_gamma_real(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    if (x >= 0.5) return std::exp(-std::lgamma(x));
    double g = sinpi(x) / pi * std::exp(std::lgamma(1.0 - x));
    return g;
}

double digamma(double x) {
    double result = 0.0;
    if (x <= 0.0 && x == std::floor(x))
        return std::numeric_limits<double>::quiet_NaN();
    if (x < 0.0) {
        // psi(x) = psi(1-x) - pi cot(pi x)
        result -= pi * cospi(x) / sinpi(x);
        x = 1.0 - x;
    }
    while (x < 8.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic series
    double inv = 1.0 / x, inv2 = inv * inv;
    result += std::log(x) - 0.5 * inv;
    static const double b[] = {1.0 / 12, -1.0 / 120, 1.0 / 252, -1.0 / 240,
                               1.0 / 132, -691.0 / 32760, 1.0 / 12};
    double p = inv2;
    for (double c : b) {
        result -= c * p;
        p *= inv2;
    }
    return result;
}

} // namespace fracdiff
