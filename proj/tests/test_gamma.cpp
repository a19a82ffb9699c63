#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "fracdiff/gamma.hpp"

using namespace fracdiff;
using cplx = std::complex<double>;

TEST_CASE("reciprocal_gamma trivial and pole values") {
    CHECK(reciprocal_gamma(cplx(1.0)).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(reciprocal_gamma(cplx(0.0)) == cplx(0.0));
    CHECK(reciprocal_gamma(cplx(-1.0)) == cplx(0.0));
    CHECK(reciprocal_gamma(cplx(-17.0)) == cplx(0.0));
    // 1/Gamma(0.5) = 1/sqrt(pi), checked against an independent high-precision
    // evaluation of Gamma
    CHECK(reciprocal_gamma(cplx(0.5)).real() ==
          doctest::Approx(0.5641895835477563).epsilon(1e-14));
    CHECK(reciprocal_gamma(cplx(0.5)).imag() == 0.0);
    CHECK(reciprocal_gamma_real(6.0) == doctest::Approx(1.0 / 120.0).epsilon(1e-14));
    CHECK(reciprocal_gamma_real(-6.0) == 0.0);
}

TEST_CASE("reciprocal_gamma reflection identity on complex points") {
    // 1/Gamma(z) * 1/Gamma(1-z) = sin(pi z)/pi
    for (cplx z : {cplx(0.3, 0.7), cplx(-1.2, 0.4), cplx(2.5, -1.5), cplx(-3.3, -2.0)}) {
        cplx lhs = reciprocal_gamma(z) * reciprocal_gamma(1.0 - z);
        cplx rhs = std::sin(3.14159265358979323846 * z) / 3.14159265358979323846;
        CHECK(std::abs(lhs - rhs) < 1e-13 * std::abs(rhs));
    }
}

TEST_CASE("log_gamma known values and recurrence") {
    CHECK(log_gamma(cplx(6.0)).real() == doctest::Approx(std::log(120.0)).epsilon(1e-14));
    CHECK(log_gamma(cplx(6.0)).imag() == doctest::Approx(0.0));
    // Gamma(z+1) = z Gamma(z)
    for (cplx z : {cplx(0.7, 1.3), cplx(3.2, -0.5), cplx(-0.4, 2.1)}) {
        cplx lhs = std::exp(log_gamma(z + 1.0));
        cplx rhs = z * std::exp(log_gamma(z));
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
    }
    // |Gamma(1+i)| = 0.49801566811835604
    double m = std::abs(std::exp(log_gamma(cplx(1.0, 1.0))));
    CHECK(m == doctest::Approx(0.49801566811835604).epsilon(1e-13));
}

TEST_CASE("digamma") {
    CHECK(digamma(1.0) == doctest::Approx(-euler_gamma).epsilon(1e-13));
    CHECK(digamma(0.5) == doctest::Approx(-euler_gamma - 2.0 * std::log(2.0)).epsilon(1e-13));
    CHECK(digamma(2.0) == doctest::Approx(1.0 - euler_gamma).epsilon(1e-13));
    // psi(0.1), cross-checked at 40 digits
    CHECK(digamma(0.1) == doctest::Approx(-10.423754940411076795).epsilon(1e-13));
}

TEST_CASE("euler constant stated precision") {
    CHECK(euler_gamma == doctest::Approx(0.577216).epsilon(1e-6));
    CHECK(euler_gamma == doctest::Approx(0.5772156649015329).epsilon(1e-15));
}

TEST_CASE("sinpi/cospi exact points") {
    CHECK(sinpi(3.0) == 0.0);
    CHECK(sinpi(2.5) == doctest::Approx(1.0));
    CHECK(cospi(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(sinpi(-0.25) == doctest::Approx(-std::sqrt(0.5)).epsilon(1e-15));
}
