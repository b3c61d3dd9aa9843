#include "leaftype/targets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "leaftype/error.hpp"

namespace leaftype {

GaussianRational operator/(GaussianRational const& x, GaussianRational const& y) {
  Rational n = y.norm();
  if (n == 0) {
    throw InvalidInput("division by zero Gaussian rational");
  }
  GaussianRational p = x * y.conj();
  return {p.re / n, p.im / n};
}

std::string GaussianRational::to_string() const {
  if (im == 0) {
    return leaftype::to_string(re);
  }
  std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : leaftype::to_string(im) + "i";
  if (re == 0) {
    return imag;
  }
  if (im < 0) {
    return leaftype::to_string(re) + imag;
  }
  return leaftype::to_string(re) + "+" + imag;
}

// ---------------------------------------------------------------- circle

CircleElement::CircleElement(ExponentScalar exponent) {
  LinearForm re = exponent.re();
  re.set_constant(fractional_part(re.constant()));
  exponent_ = ExponentScalar(std::move(re), exponent.im());
}

// ---------------------------------------------------------------- moebius

MoebiusElement::MoebiusElement() : m_{GaussianRational(1), 0, 0, GaussianRational(1)} {}

MoebiusElement::MoebiusElement(GaussianRational a, GaussianRational b,
                               GaussianRational c, GaussianRational d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  if (determinant().is_zero()) {
    throw InvalidInput("Moebius matrix is singular");
  }
  auto lead = std::find_if(m_.begin(), m_.end(),
                           [](GaussianRational const& z) { return !z.is_zero(); });
  GaussianRational s = *lead;
  for (auto& z : m_) {
    z = z / s;
  }
}

GaussianRational MoebiusElement::trace_invariant() const {
  GaussianRational t = trace();
  return t * t / determinant();
}

MoebiusElement MoebiusElement::operator*(MoebiusElement const& o) const {
  auto const& x = m_;
  auto const& y = o.m_;
  return MoebiusElement(x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                        x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]);
}

MoebiusElement MoebiusElement::inverse() const {
  return MoebiusElement(m_[3], -m_[1], -m_[2], m_[0]);
}

MoebiusElement MoebiusElement::power(long k) const {
  MoebiusElement base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  MoebiusElement result;
  while (e) {
    if (e & 1UL) {
      result = result * base;
    }
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool MoebiusElement::is_identity() const {
  return m_[0] == GaussianRational(1) && m_[1].is_zero() && m_[2].is_zero() &&
         m_[3] == GaussianRational(1);
}

bool MoebiusElement::is_parabolic() const {
  return !is_identity() && trace_invariant() == GaussianRational(4);
}

std::optional<int> MoebiusElement::fixed_point_count() const {
  if (is_identity()) {
    return std::nullopt;
  }
  return is_parabolic() ? 1 : 2;
}

std::string MoebiusElement::key() const {
  std::ostringstream os;
  os << 'M';
  for (auto const& z : m_) {
    os << to_string(z.re) << ',' << to_string(z.im) << ';';
  }
  return os.str();
}

// ---------------------------------------------------------------- permutation

PermElement::PermElement(std::vector<std::uint32_t> images) : p_(std::move(images)) {
  std::vector<bool> seen(p_.size(), false);
  for (auto x : p_) {
    if (x >= p_.size() || seen[x]) {
      throw InvalidInput("not a permutation");
    }
    seen[x] = true;
  }
}

PermElement PermElement::identity(std::size_t degree) {
  std::vector<std::uint32_t> p(degree);
  std::iota(p.begin(), p.end(), 0U);
  return PermElement(std::move(p));
}

PermElement PermElement::operator*(PermElement const& o) const {
  if (o.degree() != degree()) {
    throw InvalidInput("permutation degree mismatch");
  }
  std::vector<std::uint32_t> r(p_.size());
  for (std::size_t x = 0; x < p_.size(); ++x) {
    r[x] = p_[o.p_[x]];
  }
  PermElement out;
  out.p_ = std::move(r);
  return out;
}

PermElement PermElement::inverse() const {
  std::vector<std::uint32_t> r(p_.size());
  for (std::size_t x = 0; x < p_.size(); ++x) {
    r[p_[x]] = static_cast<std::uint32_t>(x);
  }
  PermElement out;
  out.p_ = std::move(r);
  return out;
}

PermElement PermElement::power(long k) const {
  PermElement base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  PermElement result = identity(degree());
  while (e) {
    if (e & 1UL) {
      result = result * base;
    }
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool PermElement::is_identity() const {
  for (std::size_t x = 0; x < p_.size(); ++x) {
    if (p_[x] != x) {
      return false;
    }
  }
  return true;
}

std::uint64_t PermElement::order() const {
  std::vector<bool> seen(p_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t x = 0; x < p_.size(); ++x) {
    if (seen[x]) {
      continue;
    }
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = p_[y]) {
      seen[y] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string PermElement::key() const {
  std::ostringstream os;
  os << 'P';
  for (std::size_t x = 0; x < p_.size(); ++x) {
    os << (x ? "," : "") << p_[x];
  }
  return os.str();
}

// ---------------------------------------------------------------- variant ops

std::string to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::circle:
      return "circle";
    case TargetKind::moebius:
      return "moebius";
    case TargetKind::permutation:
      return "permutation";
  }
  return "?";
}

TargetKind kind_of(Element const& e) { return static_cast<TargetKind>(e.index()); }

Element compose(Element const& x, Element const& y) {
  if (x.index() != y.index()) {
    throw InvalidInput("cannot compose elements of different target groups");
  }
  return std::visit(
      [&](auto const& a) -> Element {
        using T = std::decay_t<decltype(a)>;
        return a * std::get<T>(y);
      },
      x);
}

Element inverse(Element const& x) {
  return std::visit([](auto const& a) -> Element { return a.inverse(); }, x);
}

Element power(Element const& x, long k) {
  return std::visit([k](auto const& a) -> Element { return a.power(k); }, x);
}

bool is_identity(Element const& e) {
  return std::visit([](auto const& a) { return a.is_identity(); }, e);
}

std::string element_key(Element const& e) {
  return std::visit([](auto const& a) { return a.key(); }, e);
}

std::string element_to_string(Element const& e, SymbolTable const& symbols) {
  if (auto const* c = std::get_if<CircleElement>(&e)) {
    return "exp(2 pi i (" + c->exponent().to_string(symbols) + "))";
  }
  if (auto const* m = std::get_if<MoebiusElement>(&e)) {
    auto const& x = m->entries();
    return "[" + x[0].to_string() + ", " + x[1].to_string() + "; " + x[2].to_string() +
           ", " + x[3].to_string() + "]";
  }
  auto const& p = std::get<PermElement>(e);
  std::string s = "(";
  for (std::size_t k = 0; k < p.degree(); ++k) {
    s += (k ? " " : "") + std::to_string(p.images()[k]);
  }
  return s + ")";
}

std::string ElementOrder::to_string() const {
  switch (kind) {
    case Kind::finite:
      return std::to_string(value);
    case Kind::infinite:
      return "infinite";
    case Kind::unknown:
      return "unknown(" + std::to_string(value) + ")";
  }
  return "?";
}

ElementOrder element_order(Element const& e, std::uint64_t /*bound*/) {
  if (auto const* c = std::get_if<CircleElement>(&e)) {
    ExponentScalar const& x = c->exponent();
    if (!x.is_rational()) {
      return ElementOrder::infinite();
    }
    Integer q = denominator(x.re().constant());
    return ElementOrder::finite(static_cast<std::uint64_t>(q));
  }
  if (auto const* m = std::get_if<MoebiusElement>(&e)) {
    if (m->is_identity()) {
      return ElementOrder::finite(1);
    }
    GaussianRational t = m->trace_invariant();
    if (t == GaussianRational(0)) return ElementOrder::finite(2);
    if (t == GaussianRational(1)) return ElementOrder::finite(3);
    if (t == GaussianRational(2)) return ElementOrder::finite(4);
    if (t == GaussianRational(3)) return ElementOrder::finite(6);
    return ElementOrder::infinite();
  }
  return ElementOrder::finite(std::get<PermElement>(e).order());
}

// ---------------------------------------------------------------- representation

namespace {

std::size_t perm_degree(std::vector<Element> const& images) {
  for (auto const& e : images) {
    if (auto const* p = std::get_if<PermElement>(&e)) {
      return p->degree();
    }
  }
  return 1;
}

Element identity_of(TargetKind kind, std::size_t degree) {
  switch (kind) {
    case TargetKind::circle:
      return CircleElement();
    case TargetKind::moebius:
      return MoebiusElement();
    case TargetKind::permutation:
      return PermElement::identity(degree);
  }
  throw InternalError("bad target kind");
}

}  // namespace

Representation::Representation(SurfacePresentation surface, std::vector<Element> images)
    : surface_(surface), kind_(TargetKind::circle), images_(std::move(images)) {
  if (images_.size() != surface_.rank()) {
    throw InvalidInput("representation needs " + std::to_string(surface_.rank()) +
                       " generator images, got " + std::to_string(images_.size()));
  }
  kind_ = kind_of(images_.front());
  std::size_t deg = perm_degree(images_);
  for (auto const& e : images_) {
    if (kind_of(e) != kind_) {
      throw InvalidInput("generator images live in different target groups");
    }
    if (auto const* p = std::get_if<PermElement>(&e); p && p->degree() != deg) {
      throw InvalidInput("permutation images have different degrees");
    }
  }
  if (!in_kernel(surface_relator(surface_))) {
    throw InvalidInput("images violate the surface relation [a1,b1]...[ag,bg] c1...cn = 1");
  }
}

Representation Representation::with_derived_last_boundary(SurfacePresentation surface,
                                                          std::vector<Element> images) {
  if (surface.punctures() == 0) {
    throw InvalidInput("no boundary generator to derive");
  }
  if (images.size() + 1 != surface.rank()) {
    throw InvalidInput("expected images for all generators except c_n");
  }
  if (images.empty()) {
    throw InvalidInput("c_1 alone cannot be derived; give its image");
  }
  // Evaluate c_n's free-generator expression with a placeholder in its slot.
  Element placeholder = identity_of(kind_of(images.front()), perm_degree(images));
  images.push_back(placeholder);
  Word w = last_boundary_in_free_generators(surface);
  Element cn = placeholder;
  for (auto const& l : w.letters()) {
    Element x = images[l.gen];
    cn = compose(cn, l.sign > 0 ? x : inverse(x));
  }
  images.back() = cn;
  return Representation(surface, std::move(images));
}

Representation Representation::trivial(SurfacePresentation surface, TargetKind kind,
                                       std::size_t degree) {
  return Representation(surface,
                        std::vector<Element>(surface.rank(), identity_of(kind, degree)));
}

Element Representation::identity() const { return identity_of(kind_, perm_degree(images_)); }

Element Representation::evaluate(Word const& w) const {
  Element acc = identity();
  for (auto const& l : w.letters()) {
    if (l.gen >= images_.size()) {
      throw InvalidInput("word uses a generator outside the representation's alphabet");
    }
    Element const& x = images_[l.gen];
    acc = compose(acc, l.sign > 0 ? x : inverse(x));
  }
  return acc;
}

// ---------------------------------------------------------------- abelian images

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

Integer abs_int(Integer const& x) { return x < 0 ? Integer(-x) : x; }

// Row echelon form over Z by unimodular row operations on all columns;
// only the first `pivot_cols` columns are used for pivots. Returns the rank
// in those columns; rows [rank, rows) are zero there.
std::size_t integer_row_echelon(IntMatrix& m, std::size_t pivot_cols) {
  std::size_t rows = m.size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < pivot_cols && r < rows; ++col) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < rows; ++i) {
        if (m[i][col] != 0 && (!best || abs_int(m[i][col]) < abs_int(m[*best][col]))) {
          best = i;
        }
      }
      if (!best) {
        break;
      }
      std::swap(m[r], m[*best]);
      bool others = false;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][col] == 0) {
          continue;
        }
        Integer q = m[i][col] / m[r][col];
        for (std::size_t k = 0; k < m[i].size(); ++k) {
          m[i][k] -= q * m[r][k];
        }
        if (m[i][col] != 0) {
          others = true;
        }
      }
      if (!others) {
        ++r;
        break;
      }
    }
  }
  return r;
}

}  // namespace

AbelianStructure circle_image_structure(std::vector<ExponentScalar> const& exponents) {
  // Coordinates of (exponent space)/(Q*1): real symbols, imaginary constant,
  // imaginary symbols.
  std::vector<SymbolId> re_syms;
  std::vector<SymbolId> im_syms;
  for (auto const& x : exponents) {
    for (auto const& [id, c] : x.re().coefficients()) re_syms.push_back(id);
    for (auto const& [id, c] : x.im().coefficients()) im_syms.push_back(id);
  }
  auto uniq = [](std::vector<SymbolId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(re_syms);
  uniq(im_syms);
  std::size_t n = exponents.size();
  std::size_t d = re_syms.size() + 1 + im_syms.size();

  std::vector<std::vector<Rational>> coords(n, std::vector<Rational>(d));
  Integer common = 1;
  for (std::size_t j = 0; j < n; ++j) {
    auto const& x = exponents[j];
    std::size_t k = 0;
    for (auto id : re_syms) coords[j][k++] = x.re().coefficient(id);
    coords[j][k++] = x.im().constant();
    for (auto id : im_syms) coords[j][k++] = x.im().coefficient(id);
    for (auto const& q : coords[j]) {
      common = boost::multiprecision::lcm(common, denominator(q));
    }
  }

  IntMatrix m(n, std::vector<Integer>(d + n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      m[j][k] = numerator(coords[j][k] * Rational(common));
    }
    m[j][d + j] = 1;
  }
  std::size_t rank = integer_row_echelon(m, d);

  AbelianStructure out;
  out.free_rank = rank;
  Integer torsion = 1;
  for (std::size_t row = rank; row < n; ++row) {
    Rational v = 0;
    for (std::size_t j = 0; j < n; ++j) {
      v += Rational(m[row][d + j]) * exponents[j].re().constant();
    }
    torsion = boost::multiprecision::lcm(torsion, denominator(v));
  }
  out.torsion = torsion;
  return out;
}

namespace {

std::vector<ExponentScalar> circle_exponents(Representation const& rep) {
  if (rep.kind() != TargetKind::circle) {
    throw InvalidInput("abelian structure needs a circle representation");
  }
  std::vector<ExponentScalar> xs;
  for (auto const& e : rep.images()) {
    xs.push_back(std::get<CircleElement>(e).exponent());
  }
  return xs;
}

}  // namespace

AbelianStructure abelian_structure(Representation const& rep) {
  return circle_image_structure(circle_exponents(rep));
}

std::size_t abelian_free_rank(Representation const& rep) {
  return abelian_structure(rep).free_rank;
}

bool ping_pong_free_certificate(MoebiusElement const& e1, MoebiusElement const& e2) {
  if (!e1.is_parabolic() || !e2.is_parabolic()) {
    return false;
  }
  // Rescale to trace-2 lifts; then tr(E1 E2) = 2 + xy for the conjugated
  // pair (1 x; 0 1), (1 0; y 1).
  auto lift = [](MoebiusElement const& e) {
    GaussianRational s = GaussianRational(2) / e.trace();
    auto const& m = e.entries();
    return std::array<GaussianRational, 4>{m[0] * s, m[1] * s, m[2] * s, m[3] * s};
  };
  auto x = lift(e1);
  auto y = lift(e2);
  GaussianRational tr = x[0] * y[0] + x[1] * y[2] + x[2] * y[1] + x[3] * y[3];
  GaussianRational xy = tr - GaussianRational(2);
  return xy.norm() >= 16;
}

}  // namespace leaftype
