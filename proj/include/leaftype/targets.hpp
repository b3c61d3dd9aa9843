#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "leaftype/exponent.hpp"
#include "leaftype/gaussian.hpp"
#include "leaftype/surface_words.hpp"

namespace leaftype {

// exp(2*pi*i*exponent) in C^*.
class CircleElement {
 public:
  CircleElement() = default;
  explicit CircleElement(ExponentScalar exponent);

  // Real constant reduced into [0, 1).
  ExponentScalar const& exponent() const noexcept { return exponent_; }

  CircleElement operator*(CircleElement const& o) const {
    return CircleElement(exponent_ + o.exponent_);
  }
  CircleElement inverse() const { return CircleElement(-exponent_); }
  CircleElement power(long k) const { return CircleElement(exponent_ * Rational(k)); }
  bool is_identity() const { return exponent_.is_zero(); }

  std::string key() const { return "C" + exponent_.key(); }
  friend bool operator==(CircleElement const&, CircleElement const&) = default;

 private:
  ExponentScalar exponent_;
};

// z -> (a z + b) / (c z + d), kept projectively normalized: the first nonzero
// entry of (a, b, c, d) is 1.
class MoebiusElement {
 public:
  MoebiusElement();  // identity
  MoebiusElement(GaussianRational a, GaussianRational b, GaussianRational c,
                 GaussianRational d);

  std::array<GaussianRational, 4> const& entries() const noexcept { return m_; }
  GaussianRational determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
  GaussianRational trace() const { return m_[0] + m_[3]; }
  // trace^2 / det: conjugation and scaling invariant.
  GaussianRational trace_invariant() const;

  MoebiusElement operator*(MoebiusElement const& o) const;
  MoebiusElement inverse() const;
  MoebiusElement power(long k) const;
  bool is_identity() const;
  bool is_parabolic() const;
  // Number of fixed points on the Riemann sphere (1 or 2), or nullopt for id.
  std::optional<int> fixed_point_count() const;

  std::string key() const;
  friend bool operator==(MoebiusElement const&, MoebiusElement const&) = default;

 private:
  std::array<GaussianRational, 4> m_;
};

// Permutation of {0, ..., degree-1} in one-line form; (p*q)(x) = p(q(x)).
class PermElement {
 public:
  PermElement() = default;
  explicit PermElement(std::vector<std::uint32_t> images);
  static PermElement identity(std::size_t degree);

  std::vector<std::uint32_t> const& images() const noexcept { return p_; }
  std::size_t degree() const noexcept { return p_.size(); }

  PermElement operator*(PermElement const& o) const;
  PermElement inverse() const;
  PermElement power(long k) const;
  bool is_identity() const;
  // lcm of cycle lengths
  std::uint64_t order() const;

  std::string key() const;
  friend bool operator==(PermElement const&, PermElement const&) = default;

 private:
  std::vector<std::uint32_t> p_;
};

enum class TargetKind { circle, moebius, permutation };

std::string to_string(TargetKind kind);

using Element = std::variant<CircleElement, MoebiusElement, PermElement>;

TargetKind kind_of(Element const& e);
Element compose(Element const& x, Element const& y);
Element inverse(Element const& x);
Element power(Element const& x, long k);
bool is_identity(Element const& e);
// Canonical serialization; equal keys iff equal group elements.
std::string element_key(Element const& e);
std::string element_to_string(Element const& e, SymbolTable const& symbols);

struct ElementOrder {
  enum class Kind { finite, infinite, unknown };
  Kind kind;
  std::uint64_t value = 0;  // order when finite, bound when unknown

  static ElementOrder finite(std::uint64_t q) { return {Kind::finite, q}; }
  static ElementOrder infinite() { return {Kind::infinite, 0}; }
  bool is_finite() const { return kind == Kind::finite; }
  std::string to_string() const;
  friend bool operator==(ElementOrder const&, ElementOrder const&) = default;
};

// Exact for all three targets: circle via the exponent's denominator,
// Moebius via trace^2/det in {0,1,2,3} (orders 2,3,4,6; the only values a
// Gaussian-rational matrix of finite order can take), permutations via cycle
// type. `bound` is reserved for targets without an exact test.
ElementOrder element_order(Element const& e, std::uint64_t bound = 0);

// Homomorphism from the surface group into one target group.
class Representation {
 public:
  // `images` has one entry per canonical generator (2g + n). Throws
  // InvalidInput on kind/degree mismatch or when the surface relation fails.
  Representation(SurfacePresentation surface, std::vector<Element> images);

  // n >= 1: images for all generators but c_n; c_n gets the value forced by
  // the relation.
  static Representation with_derived_last_boundary(SurfacePresentation surface,
                                                   std::vector<Element> images);

  static Representation trivial(SurfacePresentation surface, TargetKind kind,
                                std::size_t perm_degree = 1);

  SurfacePresentation const& surface() const noexcept { return surface_; }
  TargetKind kind() const noexcept { return kind_; }
  std::vector<Element> const& images() const noexcept { return images_; }
  Element const& image(GeneratorId id) const { return images_.at(id); }
  Element identity() const;

  Element evaluate(Word const& w) const;
  bool in_kernel(Word const& w) const { return is_identity(evaluate(w)); }

 private:
  SurfacePresentation surface_;
  TargetKind kind_;
  std::vector<Element> images_;
};

// Structure Z^free_rank x Z/torsion of a circle image group.
struct AbelianStructure {
  std::size_t free_rank = 0;
  Integer torsion = 1;

  bool is_finite() const { return free_rank == 0; }
};

// Image of a set of circle exponents inside (exponent space)/Z.
AbelianStructure circle_image_structure(std::vector<ExponentScalar> const& exponents);

// Torsion-free rank of a circle representation's image. Throws InvalidInput
// for other targets.
std::size_t abelian_free_rank(Representation const& rep);
AbelianStructure abelian_structure(Representation const& rep);

// True when <e1, e2> is certified free of rank two by ping-pong: both are
// parabolic with distinct fixed points and, after simultaneous conjugation to
// (1 x; 0 1), (1 0; y 1), |xy| >= 4. False means "not certified".
bool ping_pong_free_certificate(MoebiusElement const& e1, MoebiusElement const& e2);

}  // namespace leaftype
