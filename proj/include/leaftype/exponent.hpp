#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leaftype/rational.hpp"

namespace leaftype {

using SymbolId = std::uint32_t;

// Declared symbols. Together with 1 they are asserted linearly independent
// over Q; nothing here checks that assertion.
class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(std::vector<std::string> names);

  SymbolId declare(std::string const& name);
  std::optional<SymbolId> find(std::string_view name) const;
  std::string const& name(SymbolId id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }
  std::vector<std::string> const& names() const noexcept { return names_; }

 private:
  std::vector<std::string> names_;
};

// constant + sum_k coeff_k * symbol_k with rational coefficients; zero
// coefficients are never stored.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(Rational constant) : constant_(std::move(constant)) {}

  static LinearForm symbol(SymbolId id, Rational coeff = 1);

  Rational const& constant() const noexcept { return constant_; }
  std::map<SymbolId, Rational> const& coefficients() const noexcept {
    return coeffs_;
  }
  Rational coefficient(SymbolId id) const;

  bool is_zero() const { return constant_ == 0 && coeffs_.empty(); }
  bool is_constant() const { return coeffs_.empty(); }

  LinearForm& operator+=(LinearForm const& other);
  LinearForm& operator-=(LinearForm const& other);
  LinearForm& operator*=(Rational const& s);
  LinearForm operator-() const;

  friend LinearForm operator+(LinearForm a, LinearForm const& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, LinearForm const& b) { return a -= b; }
  friend LinearForm operator*(LinearForm a, Rational const& s) { return a *= s; }
  friend bool operator==(LinearForm const&, LinearForm const&) = default;

  void set_constant(Rational c) { constant_ = std::move(c); }

 private:
  Rational constant_{0};
  std::map<SymbolId, Rational> coeffs_;
};

// Exact complex scalar re + i*im, both parts linear forms over the declared
// symbols. Used for residues, their ratios and circle-holonomy exponents.
class ExponentScalar {
 public:
  ExponentScalar() = default;
  ExponentScalar(LinearForm re, LinearForm im)
      : re_(std::move(re)), im_(std::move(im)) {}
  explicit ExponentScalar(Rational re) : re_(std::move(re)) {}
  ExponentScalar(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static ExponentScalar symbol(SymbolId id) {
    return ExponentScalar(LinearForm::symbol(id), LinearForm{});
  }

  LinearForm const& re() const noexcept { return re_; }
  LinearForm const& im() const noexcept { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  // No symbols in either part.
  bool is_gaussian_rational() const {
    return re_.is_constant() && im_.is_constant();
  }
  // Symbol-free and real.
  bool is_rational() const {
    return is_gaussian_rational() && im_.constant() == 0;
  }

  ExponentScalar& operator+=(ExponentScalar const& o);
  ExponentScalar& operator-=(ExponentScalar const& o);
  ExponentScalar& operator*=(Rational const& s);
  ExponentScalar operator-() const { return ExponentScalar(-re_, -im_); }

  friend ExponentScalar operator+(ExponentScalar a, ExponentScalar const& b) { return a += b; }
  friend ExponentScalar operator-(ExponentScalar a, ExponentScalar const& b) { return a -= b; }
  friend ExponentScalar operator*(ExponentScalar a, Rational const& s) { return a *= s; }
  friend bool operator==(ExponentScalar const&, ExponentScalar const&) = default;

  // Multiplication by a Gaussian rational (re + i*im).
  ExponentScalar times_gaussian(Rational const& re, Rational const& im) const;

  // Human-readable, e.g. "1/2 + t - i*s".
  std::string to_string(SymbolTable const& symbols) const;
  // Stable, table-independent serialization.
  std::string key() const;

 private:
  LinearForm re_;
  LinearForm im_;
};

// Parses sums of terms such as "1 - t1 - 2/3*t2 + i*s" or "-i". A term is a
// product of an optional rational, an optional "i" and an optional symbol.
// Unknown symbol names are rejected.
ExponentScalar parse_exponent(std::string_view text, SymbolTable const& symbols);

}  // namespace leaftype
