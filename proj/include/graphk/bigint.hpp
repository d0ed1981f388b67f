// Exact arithmetic substrate: arbitrary-precision integers and rationals,
// and the Gaussian rationals Q(i) used as coefficient field for Leavitt
// path algebra elements.

#ifndef GRAPHK_BIGINT_HPP_
#define GRAPHK_BIGINT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <string>
#include <vector>

namespace graphk {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// gcd of a coordinate vector; 0 for the zero vector.
inline Int content(const std::vector<Int>& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

// Nonnegative residue of a mod m (m > 0).
inline Int mod_floor(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Extended Euclid: returns g = gcd(a,b) and x, y with a*x + b*y = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    x = (a < 0) ? -1 : 1;
    y = 0;
    return abs(a);
  }
  Int x1, y1;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Element of Q(i) with exact rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRational(long n) : re(n) {}

  static GaussianRational one() { return GaussianRational(Rational(1)); }
  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  GaussianRational operator-() const { return {-re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

std::string to_string(const GaussianRational& c);

}  // namespace graphk

#endif  // GRAPHK_BIGINT_HPP_
