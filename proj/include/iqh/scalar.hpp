#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "iqh/errors.hpp"

namespace iqh {

/// Exact rational scalar. All algebraic modules work over these; floating
/// point appears only in the little-group numerics and eigenvalue bounds.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" with nonzero q. Throws DataError otherwise.
Rational rational_from_string(std::string_view text);

std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// Complex number with exact rational real and imaginary parts.
struct Complex {
  Rational re{0};
  Rational im{0};

  Complex() = default;
  Complex(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  Complex(int real) : re(real) {}                  // NOLINT(google-explicit-constructor)
  Complex(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static Complex i() { return Complex{Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Complex conj() const { return Complex{re, -im}; }
  Rational norm_sq() const { return re * re + im * im; }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex{-a.re, -a.im}; }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

std::string to_string(const Complex& z);

}  // namespace iqh
