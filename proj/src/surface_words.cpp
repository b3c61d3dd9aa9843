#include "leaftype/surface_words.hpp"

#include <sstream>

#include "leaftype/error.hpp"

namespace leaftype {

SurfacePresentation::SurfacePresentation(unsigned genus, unsigned punctures)
    : genus_(genus), punctures_(punctures) {
  if (2 * genus + punctures < 1) {
    throw InvalidInput("surface needs 2g + n >= 1");
  }
}

GeneratorId SurfacePresentation::a(unsigned i) const {
  if (i < 1 || i > genus_) {
    throw InvalidInput("handle index a_" + std::to_string(i) + " out of range");
  }
  return 2 * (i - 1);
}

GeneratorId SurfacePresentation::b(unsigned i) const {
  if (i < 1 || i > genus_) {
    throw InvalidInput("handle index b_" + std::to_string(i) + " out of range");
  }
  return 2 * (i - 1) + 1;
}

GeneratorId SurfacePresentation::c(unsigned j) const {
  if (j < 1 || j > punctures_) {
    throw InvalidInput("puncture index c_" + std::to_string(j) + " out of range");
  }
  return 2 * genus_ + (j - 1);
}

std::string SurfacePresentation::name(GeneratorId id) const {
  if (id < 2 * genus_) {
    return std::string(id % 2 == 0 ? "a" : "b") + std::to_string(id / 2 + 1);
  }
  if (id < rank()) {
    return "c" + std::to_string(id - 2 * genus_ + 1);
  }
  throw InvalidInput("generator id " + std::to_string(id) + " out of range");
}

std::optional<GeneratorId> SurfacePresentation::parse_name(std::string const& name) const {
  for (GeneratorId id = 0; id < rank(); ++id) {
    if (this->name(id) == name) {
      return id;
    }
  }
  return std::nullopt;
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

Word Word::power(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word result;
  for (int t = 0; t < (k < 0 ? -k : k); ++t) {
    result = result * base;
  }
  return result;
}

int Word::exponent_sum(GeneratorId gen) const {
  int s = 0;
  for (auto const& l : letters_) {
    if (l.gen == gen) {
      s += l.sign;
    }
  }
  return s;
}

std::string Word::to_string(SurfacePresentation const& surface) const {
  if (letters_.empty()) {
    return "1";
  }
  std::ostringstream os;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) {
      os << ' ';
    }
    os << surface.name(letters_[k].gen);
    if (letters_[k].sign < 0) {
      os << "^-1";
    }
  }
  return os.str();
}

Word operator*(Word const& u, Word const& v) {
  std::vector<Letter> out = u.letters_;
  for (auto const& l : v.letters_) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word reduce(SurfacePresentation const& surface, std::vector<Letter> const& raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (auto const& l : raw) {
    if (l.gen >= surface.rank()) {
      throw InvalidInput("unknown generator id " + std::to_string(l.gen));
    }
    if (l.sign != 1 && l.sign != -1) {
      throw InvalidInput("letter sign must be +1 or -1");
    }
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word generator_power(SurfacePresentation const& surface, GeneratorId gen, int k) {
  return reduce(surface, {{gen, 1}}).power(k);
}

Word commutator(Word const& x, Word const& y) {
  return x * y * x.inverse() * y.inverse();
}

Word surface_relator(SurfacePresentation const& surface) {
  Word r;
  for (unsigned i = 1; i <= surface.genus(); ++i) {
    r = r * commutator(generator_power(surface, surface.a(i), 1),
                       generator_power(surface, surface.b(i), 1));
  }
  for (unsigned j = 1; j <= surface.punctures(); ++j) {
    r = r * generator_power(surface, surface.c(j), 1);
  }
  return r;
}

Word last_boundary_in_free_generators(SurfacePresentation const& surface) {
  if (surface.punctures() == 0) {
    throw InvalidInput("surface has no punctures");
  }
  Word r;
  for (unsigned i = 1; i <= surface.genus(); ++i) {
    r = r * commutator(generator_power(surface, surface.a(i), 1),
                       generator_power(surface, surface.b(i), 1));
  }
  for (unsigned j = 1; j < surface.punctures(); ++j) {
    r = r * generator_power(surface, surface.c(j), 1);
  }
  return r.inverse();
}

std::pair<Word, Word> witness_words_case_a(SurfacePresentation const& surface,
                                           unsigned i, unsigned j, int m,
                                           int m_prime, int l) {
  if (surface.genus() != 0 || surface.punctures() < 3) {
    throw InvalidInput("planar witness needs g = 0 and n >= 3");
  }
  if (i == j) {
    throw InvalidInput("planar witness needs distinct punctures");
  }
  if (m < 1 || m_prime < 1 || l < 1) {
    throw InvalidInput("witness exponents must be positive");
  }
  GeneratorId ci = surface.c(i);
  GeneratorId cj = surface.c(j);
  Word cjl = generator_power(surface, cj, l);
  return {commutator(generator_power(surface, ci, m), cjl),
          commutator(generator_power(surface, ci, -m_prime), cjl)};
}

std::pair<Word, Word> witness_words_case_b(SurfacePresentation const& surface,
                                           unsigned j, GeneratorId d, int m,
                                           int l, int k, int k_prime,
                                           TorsionShortcut shortcut) {
  if (surface.genus() < 1 || surface.rank() < 3) {
    throw InvalidInput("handle witness needs g >= 1 and 2g + n >= 3");
  }
  GeneratorId aj = surface.a(j);
  GeneratorId bj = surface.b(j);
  if (d >= surface.rank() || d == aj || d == bj) {
    throw InvalidInput("auxiliary generator must differ from a_j and b_j");
  }
  if (m < 1 || l < 1 || k < 1 || k_prime < 1) {
    throw InvalidInput("witness exponents must be positive");
  }
  auto p = [&](GeneratorId g, int e) { return generator_power(surface, g, e); };
  Word g1 = shortcut.a_power
                ? p(aj, m)
                : p(aj, m) * p(d, -k) * p(aj, -2 * m) * p(d, k) * p(aj, m);
  Word g2 = shortcut.b_power
                ? p(bj, l)
                : p(bj, l) * p(d, k_prime) * p(bj, -2 * l) * p(d, -k_prime) * p(bj, l);
  return {g1, g2};
}

}  // namespace leaftype
