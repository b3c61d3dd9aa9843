#pragma once

#include <string>

#include "leaftype/rational.hpp"

namespace leaftype {

// re + i*im with rational parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit by design of literals
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(int r) : re(r) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }  // |z|^2

  GaussianRational operator-() const { return {-re, -im}; }
  friend GaussianRational operator+(GaussianRational const& x, GaussianRational const& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianRational operator-(GaussianRational const& x, GaussianRational const& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianRational operator*(GaussianRational const& x, GaussianRational const& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend GaussianRational operator/(GaussianRational const& x, GaussianRational const& y);
  friend bool operator==(GaussianRational const&, GaussianRational const&) = default;

  std::string to_string() const;
};

}  // namespace leaftype
