#ifndef FRACDIFF_DDOUBLE_HPP
#define FRACDIFF_DDOUBLE_HPP

#include <cmath>
#include <limits>

namespace fracdiff {

// Double-double value: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
// Gives ~31 significant decimal digits. Used for strongly alternating
// series whose partial sums exceed the final value by many orders of
// magnitude; plain double (or Kahan) summation loses the result entirely
// once the cancellation passes ~16 digits.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    constexpr dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace detail {

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

// requires |a| >= |b| or a == 0
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

} // namespace detail

inline dd operator+(dd a, dd b) {
    dd s = detail::two_sum(a.hi, b.hi);
    dd t = detail::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = detail::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd operator*(dd a, double b) { return a * dd(b); }
inline dd operator*(double a, dd b) { return dd(a) * b; }
inline dd operator+(dd a, double b) { return a + dd(b); }
inline dd operator+(double a, dd b) { return dd(a) + b; }
inline dd operator-(dd a, double b) { return a - dd(b); }
inline dd operator-(double a, dd b) { return dd(a) - b; }
inline dd operator/(dd a, double b) { return a / dd(b); }
inline dd operator/(double a, dd b) { return dd(a) / b; }

inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator-=(dd& a, dd b) { a = a - b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }
inline dd& operator/=(dd& a, dd b) { a = a / b; return a; }

inline bool operator<(dd a, dd b)  { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b)  { return b < a; }
inline bool operator==(dd a, dd b) { return a.hi == b.hi && a.lo == b.lo; }

inline dd fabs(dd a) { return (a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0)) ? -a : a; }
inline double to_double(dd a) { return a.hi + a.lo; }

// ~2^-104
inline constexpr double dd_eps = 4.93038065763132e-32;

// Transcendentals (exp/log/pow/sinpi/cospi) and lgamma on double-doubles.
dd dd_exp(dd a);
dd dd_log(dd a);            // a > 0
dd dd_pow(dd a, dd b);      // a > 0
dd dd_sinpi(dd a);
dd dd_cospi(dd a);

// log Gamma(x) for x > 0 (Stirling series with argument shift).
dd dd_lgamma(dd x);

// 1/Gamma(x) for any real x; exactly 0 at non-positive integers.
dd dd_rgamma(dd x);

// Complex value with double-double components; only the operations the
// Mittag-Leffler series needs.
struct cdd {
    dd re, im;
    cdd() = default;
    cdd(dd r) : re(r), im(0.0) {}
    cdd(dd r, dd i) : re(r), im(i) {}
};

inline cdd operator+(cdd a, cdd b) { return {a.re + b.re, a.im + b.im}; }
inline cdd operator*(cdd a, cdd b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline cdd operator*(cdd a, dd b) { return {a.re * b, a.im * b}; }
inline cdd& operator+=(cdd& a, cdd b) { a = a + b; return a; }
inline double cdd_mag(cdd a) {
    return std::fabs(to_double(a.re)) + std::fabs(to_double(a.im));
}

} // namespace fracdiff

#endif
