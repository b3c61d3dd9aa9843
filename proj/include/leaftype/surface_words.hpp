#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace leaftype {

using GeneratorId = std::uint32_t;

// Punctured surface Sigma_{g,n}. Canonical generators are numbered
// a_1, b_1, ..., a_g, b_g, c_1, ..., c_n, and satisfy the single relation
//   [a_1,b_1] ... [a_g,b_g] c_1 ... c_n = 1,   [x,y] = x y x^-1 y^-1.
// For n >= 1 the group is free on all generators except c_n.
class SurfacePresentation {
 public:
  SurfacePresentation(unsigned genus, unsigned punctures);

  unsigned genus() const noexcept { return genus_; }
  unsigned punctures() const noexcept { return punctures_; }
  std::size_t rank() const noexcept { return 2 * genus_ + punctures_; }

  // 1-based handle/puncture indices, as in a_i, b_i, c_j.
  GeneratorId a(unsigned i) const;
  GeneratorId b(unsigned i) const;
  GeneratorId c(unsigned j) const;

  bool is_handle_generator(GeneratorId id) const { return id < 2 * genus_; }
  std::string name(GeneratorId id) const;
  std::optional<GeneratorId> parse_name(std::string const& name) const;

  // 2 - 2g - n
  int euler_characteristic() const {
    return 2 - 2 * static_cast<int>(genus_) - static_cast<int>(punctures_);
  }

  friend bool operator==(SurfacePresentation const&, SurfacePresentation const&) = default;

 private:
  unsigned genus_;
  unsigned punctures_;
};

struct Letter {
  GeneratorId gen;
  int sign;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  friend bool operator==(Letter const&, Letter const&) = default;
};

// Freely reduced word. Construct through reduce() or the builders below.
class Word {
 public:
  Word() = default;

  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word power(int k) const;
  // Sum of signs of the letters on generator `gen`.
  int exponent_sum(GeneratorId gen) const;

  std::string to_string(SurfacePresentation const& surface) const;

  friend Word operator*(Word const& u, Word const& v);
  friend bool operator==(Word const&, Word const&) = default;

 private:
  friend Word reduce(SurfacePresentation const&, std::vector<Letter> const&);
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;
};

// Free reduction; throws InvalidInput on a generator outside the alphabet or a
// sign other than +-1.
Word reduce(SurfacePresentation const& surface, std::vector<Letter> const& raw);

Word generator_power(SurfacePresentation const& surface, GeneratorId gen, int k);
Word commutator(Word const& x, Word const& y);

// [a_1,b_1]...[a_g,b_g] c_1...c_n, trivial in the surface group.
Word surface_relator(SurfacePresentation const& surface);

// c_n expressed in the free generators: ([a_1,b_1]...[a_g,b_g] c_1...c_{n-1})^-1.
Word last_boundary_in_free_generators(SurfacePresentation const& surface);

// Handle-detecting cycle pairs.
//
// Planar case (g = 0, n >= 3, i != j):
//   ( [c_i^m, c_j^l], [c_i^-m', c_j^l] ).
std::pair<Word, Word> witness_words_case_a(SurfacePresentation const& surface,
                                           unsigned i, unsigned j, int m,
                                           int m_prime, int l);

// Which of the two cycles of the handle case are replaced by pure powers.
struct TorsionShortcut {
  bool a_power = false;  // gamma_1 := a_j^m
  bool b_power = false;  // gamma_2 := b_j^l
};

// Handle case (g >= 1, 2g + n >= 3, d not in {a_j, b_j}):
//   gamma_1 = a_j^m d^-k a_j^-2m d^k a_j^m,
//   gamma_2 = b_j^l d^k' b_j^-2l d^-k' b_j^l,
// with the pure-power substitutions selected by `shortcut`.
std::pair<Word, Word> witness_words_case_b(SurfacePresentation const& surface,
                                           unsigned j, GeneratorId d, int m,
                                           int l, int k, int k_prime,
                                           TorsionShortcut shortcut = {});

}  // namespace leaftype
