#ifndef FRACDIFF_GAMMA_HPP
#define FRACDIFF_GAMMA_HPP

#include <complex>

namespace fracdiff {

inline constexpr double euler_gamma = 0.5772156649015328606;

// Principal branch of log Gamma(z), Lanczos approximation with reflection
// for Re(z) < 1/2. Relative accuracy ~1e-14 away from the poles.
std::complex<double> log_gamma(std::complex<double> z);

// 1/Gamma(z); returns exactly 0 at the poles z = 0, -1, -2, ...
std::complex<double> reciprocal_gamma(std::complex<double> z);

// Real-argument fast paths.
double log_gamma_real(double x);       // log|Gamma(x)|
int gamma_sign(double x);              // sign of Gamma(x); 0 at poles
double reciprocal_gamma_real(double x);

// psi(x) = Gamma'(x)/Gamma(x) for x not a non-positive integer.
double digamma(double x);

// sin(pi x), cos(pi x) with exact integer/half-integer behaviour.
double sinpi(double x);
double cospi(double x);

} // namespace fracdiff

#endif
