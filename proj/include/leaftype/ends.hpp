#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leaftype/glued_surface.hpp"

namespace leaftype {

enum class EndSpace { zero, one, two, cantor, inconclusive };
std::string to_string(EndSpace e);

struct DeckGroup {
  enum class Kind { finite, infinite, unknown };
  Kind kind;
  std::uint64_t order = 0;  // when finite

  bool is_finite() const { return kind == Kind::finite; }
  bool is_infinite() const { return kind == Kind::infinite; }
};

// Exact for circle and permutation targets. Moebius images are enumerated up
// to the budget; a generator or ball element of infinite order proves
// infiniteness, otherwise the answer is unknown.
DeckGroup deck_group(Representation const& rep,
                     std::size_t vertex_budget = default_vertex_budget);

// Order of rho(c_j) for each puncture.
std::vector<ElementOrder> boundary_orders(Representation const& rep);

// Number of ends of the image group where it can be decided.
EndSpace ends_of_deck_group(Representation const& rep,
                            std::size_t vertex_budget = default_vertex_budget);

// Z/2 intersection number of the lifts of two kernel words at the identity
// tile of the full cover. Each tile is a copy of the cut domain indexed by a
// group element; inside a tile the lifts are chords, and two chords cross iff
// their endpoints interleave. Throws InvalidInput if a word is not in H.
int lifted_intersection_mod2(Representation const& rep, Word const& w1, Word const& w2);

struct HandleWitness {
  char pattern;  // 'a' (punctured sphere) or 'b' (handle)
  // Pattern a: punctures i, j with exponents m, m', l.
  // Pattern b: handle j, letter d, exponents m, l, k, k'.
  unsigned i = 0;
  unsigned j = 0;
  GeneratorId d = 0;
  int m = 0;
  int m_prime = 0;
  int l = 0;
  int k = 0;
  int k_prime = 0;
  TorsionShortcut shortcut;
  Word gamma1;
  Word gamma2;

  int exponent_total() const { return m + m_prime + l + k + k_prime; }
};

nlohmann::json to_json(HandleWitness const& w, SurfacePresentation const& surface);

// Enumerates the word pairs of both patterns with every exponent at most
// `max_exponent`, ordered by exponent total (pattern a before b on ties).
// A candidate is accepted when both words lie in H, the listed powers do
// not, and the lifts at the base tile cross an odd number of times.
// Throws InvalidInput when neither pattern applies to the surface.
std::optional<HandleWitness> handle_witness_search(Representation const& rep,
                                                   int max_exponent);
bool witness_search_applies(SurfacePresentation const& surface);

struct FiniteCoverType {
  std::uint64_t deck_order;
  long chi;
  long punctures;
  long genus;
};

// Throws InvalidInput when the deck group is not known to be finite.
FiniteCoverType riemann_hurwitz_finite(Representation const& rep,
                                       std::size_t vertex_budget = default_vertex_budget);

struct GenusClass {
  enum class Kind { zero_certified_to_radius, finite, infinite, inconclusive };
  Kind kind;
  long value = 0;  // radius or genus
  std::string to_string() const;
};

struct EndsReport {
  DeckGroup deck;
  std::vector<ElementOrder> boundary_orders;
  bool planar_discrete_ends = false;
  EndSpace eprime = EndSpace::inconclusive;
  GenusClass genus;
  std::optional<HandleWitness> witness;
  std::vector<GenusGrowthRow> growth;
};

struct ClassifyOptions {
  int search_bound = 6;
  std::vector<unsigned> radii{2, 4, 6};
  std::size_t vertex_budget = default_vertex_budget;
};

struct CoverClassification {
  EndsReport report;
  std::optional<std::string> label;  // absent when inconclusive
  std::optional<FiniteCoverType> finite_cover;
  std::vector<std::string> caveats;
  bool budget_limited = false;  // label withheld because the budget ran out
};

CoverClassification classify_cover(Representation const& rep,
                                   ClassifyOptions const& options = {});

// (end space, infinite genus, planar discrete ends) -> type name.
std::optional<std::string> surface_type_name(EndSpace eprime, bool infinite_genus,
                                             bool planar_discrete_ends);

nlohmann::json to_json(EndsReport const& r, SurfacePresentation const& surface);

}  // namespace leaftype
