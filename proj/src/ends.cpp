#include "leaftype/ends.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "leaftype/error.hpp"

namespace leaftype {

std::string to_string(EndSpace e) {
  switch (e) {
    case EndSpace::zero:
      return "empty";
    case EndSpace::one:
      return "one";
    case EndSpace::two:
      return "two";
    case EndSpace::cantor:
      return "cantor";
    case EndSpace::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::uint64_t to_u64(Integer const& v) {
  if (v < 0 || v > Integer(std::numeric_limits<std::uint64_t>::max())) {
    throw InvalidInput("deck group order out of range: " + v.str());
  }
  return v.convert_to<std::uint64_t>();
}

bool has_infinite_order(Element const& e) {
  return element_order(e).kind == ElementOrder::Kind::infinite;
}

}  // namespace

DeckGroup deck_group(Representation const& rep, std::size_t vertex_budget) {
  switch (rep.kind()) {
    case TargetKind::circle: {
      auto s = abelian_structure(rep);
      if (!s.is_finite()) {
        return {DeckGroup::Kind::infinite, 0};
      }
      return {DeckGroup::Kind::finite, to_u64(s.torsion)};
    }
    case TargetKind::permutation:
      return {DeckGroup::Kind::finite, build_group(rep, vertex_budget).size()};
    case TargetKind::moebius:
      break;
  }
  for (auto const& e : rep.images()) {
    if (has_infinite_order(e)) {
      return {DeckGroup::Kind::infinite, 0};
    }
  }
  try {
    for (unsigned r = 1;; ++r) {
      auto ball = build_ball(rep, r, vertex_budget);
      if (ball.saturated()) {
        return {DeckGroup::Kind::finite, ball.size()};
      }
      for (auto const& v : ball.vertices()) {
        if (v.distance == r && has_infinite_order(v.element)) {
          return {DeckGroup::Kind::infinite, 0};
        }
      }
    }
  } catch (BudgetExceeded const&) {
    return {DeckGroup::Kind::unknown, 0};
  }
}

std::vector<ElementOrder> boundary_orders(Representation const& rep) {
  auto const& s = rep.surface();
  std::vector<ElementOrder> out;
  for (unsigned j = 1; j <= s.punctures(); ++j) {
    out.push_back(element_order(rep.image(s.c(j))));
  }
  return out;
}

EndSpace ends_of_deck_group(Representation const& rep, std::size_t vertex_budget) {
  auto deck = deck_group(rep, vertex_budget);
  if (deck.is_finite()) {
    return EndSpace::zero;
  }
  if (!deck.is_infinite()) {
    return EndSpace::inconclusive;
  }
  if (rep.kind() == TargetKind::circle) {
    return abelian_free_rank(rep) == 1 ? EndSpace::two : EndSpace::one;
  }
  // Moebius: distinct nontrivial generator images up to inversion.
  std::vector<MoebiusElement> gens;
  std::set<std::string> seen;
  for (auto const& e : rep.images()) {
    if (is_identity(e) || seen.count(element_key(e))) {
      continue;
    }
    seen.insert(element_key(e));
    seen.insert(element_key(inverse(e)));
    gens.push_back(std::get<MoebiusElement>(e));
  }
  if (gens.size() == 1 && has_infinite_order(gens[0])) {
    return EndSpace::two;
  }
  if (gens.size() == 2 && ping_pong_free_certificate(gens[0], gens[1])) {
    return EndSpace::cantor;
  }
  return EndSpace::inconclusive;
}

// ------------------------------------------------------------ intersections

namespace {

struct Crossing {
  std::string from;
  std::uint32_t out_slot;
  std::string to;
  std::uint32_t in_slot;
  bool canonical_is_from;  // the +1 side of the edge is the tile left
};

std::vector<Crossing> trace_lift(Representation const& rep,
                                 FundamentalDomainTemplate const& tmpl, Word const& w) {
  std::vector<Crossing> out;
  Element v = rep.identity();
  for (auto const& letter : w.letters()) {
    std::uint32_t slot = tmpl.slot_of(letter.gen, +1);
    if (crossing_exponent(tmpl.slots()[slot]) != -letter.sign) {
      slot = tmpl.slot_of(letter.gen, -1);
    }
    auto const& ts = tmpl.slots()[slot];
    Element g = rep.image(letter.gen);
    if (crossing_exponent(ts) < 0) {
      g = inverse(g);
    }
    Element next = compose(g, v);
    out.push_back({element_key(v), slot, element_key(next), tmpl.slot_of(ts.label, -ts.sign),
                   ts.sign > 0});
    v = std::move(next);
  }
  return out;
}

struct Chord {
  long lo;
  long hi;
};

}  // namespace

int lifted_intersection_mod2(Representation const& rep, Word const& w1, Word const& w2) {
  if (!rep.in_kernel(w1) || !rep.in_kernel(w2)) {
    throw InvalidInput("lift of a word outside the kernel is not closed");
  }
  FundamentalDomainTemplate tmpl(rep.surface());
  std::vector<Crossing> paths[2] = {trace_lift(rep, tmpl, w1), trace_lift(rep, tmpl, w2)};
  // Points on a glued edge get a coordinate along the edge's arrow; the two
  // curves use disjoint bands. Seen from the -1 side the order is reversed.
  long band = static_cast<long>(paths[0].size() + paths[1].size()) + 1;
  long span = 2 * band + 1;
  auto boundary_coord = [&](std::uint32_t slot, bool plus_side, long along) {
    return static_cast<long>(slot) * span + (plus_side ? along : span - along);
  };
  std::map<std::string, std::vector<Chord>> chords[2];
  for (int c = 0; c < 2; ++c) {
    auto const& p = paths[c];
    std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
      long along_in = 1 + c * band + static_cast<long>(i);
      long along_out = 1 + c * band + static_cast<long>((i + 1) % n);
      Crossing const& enter = p[i];
      Crossing const& leave = p[(i + 1) % n];
      long x = boundary_coord(enter.in_slot, !enter.canonical_is_from, along_in);
      long y = boundary_coord(leave.out_slot, leave.canonical_is_from, along_out);
      chords[c][enter.to].push_back({std::min(x, y), std::max(x, y)});
    }
  }
  int total = 0;
  for (auto const& [tile, list] : chords[0]) {
    auto it = chords[1].find(tile);
    if (it == chords[1].end()) {
      continue;
    }
    for (auto const& a : list) {
      for (auto const& b : it->second) {
        bool b_lo_in = a.lo < b.lo && b.lo < a.hi;
        bool b_hi_in = a.lo < b.hi && b.hi < a.hi;
        total ^= (b_lo_in != b_hi_in) ? 1 : 0;
      }
    }
  }
  return total;
}

// ------------------------------------------------------------ witness search

bool witness_search_applies(SurfacePresentation const& surface) {
  if (surface.genus() == 0) {
    return surface.punctures() >= 3;
  }
  return surface.rank() >= 3;
}

namespace {

class PowerOracle {
 public:
  explicit PowerOracle(Representation const& rep) : rep_(rep) {
    for (auto const& e : rep.images()) {
      orders_.push_back(element_order(e));
    }
  }
  bool power_in_kernel(GeneratorId g, int k) const {
    auto const& o = orders_[g];
    if (o.is_finite()) {
      return k % static_cast<long>(o.value) == 0;
    }
    return k == 0;
  }
  std::optional<int> minimal_kernel_power(GeneratorId g) const {
    auto const& o = orders_[g];
    if (o.is_finite() && o.value <= static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
      return static_cast<int>(o.value);
    }
    return std::nullopt;
  }
  bool product_in_kernel(GeneratorId x, int p, GeneratorId y, int q) const {
    return is_identity(compose(power(rep_.image(x), p), power(rep_.image(y), q)));
  }

 private:
  Representation const& rep_;
  std::vector<ElementOrder> orders_;
};

bool accept_pair(Representation const& rep, HandleWitness& w,
                 std::pair<Word, Word> words) {
  if (!rep.in_kernel(words.first) || !rep.in_kernel(words.second)) {
    return false;
  }
  if (lifted_intersection_mod2(rep, words.first, words.second) != 1) {
    return false;
  }
  w.gamma1 = std::move(words.first);
  w.gamma2 = std::move(words.second);
  return true;
}

std::optional<HandleWitness> search_a(Representation const& rep, PowerOracle const& oracle,
                                      int total, int max_exp) {
  auto const& s = rep.surface();
  unsigned n = s.punctures();
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      if (i == j) {
        continue;
      }
      for (int m = 1; m <= max_exp; ++m) {
        for (int mp = 1; mp <= max_exp; ++mp) {
          int l = total - m - mp;
          if (l < 1 || l > max_exp) {
            continue;
          }
          bool ok = true;
          for (int a = 1; ok && a <= m + mp; ++a) {
            ok = !oracle.power_in_kernel(s.c(i), a);
          }
          for (int b = 1; ok && b <= l; ++b) {
            ok = !oracle.power_in_kernel(s.c(j), b);
          }
          if (!ok) {
            continue;
          }
          HandleWitness w{'a', i, j, 0, m, mp, l, 0, 0, {}, {}, {}};
          if (accept_pair(rep, w, witness_words_case_a(s, i, j, m, mp, l))) {
            return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Both readings of "b^beta d^delta not in H" are enforced: the product and
// each factor separately.
bool case_b_conditions(PowerOracle const& oracle, GeneratorId a, GeneratorId b,
                       GeneratorId d, int m, int l, int k, int kp, TorsionShortcut sc) {
  if (!sc.a_power) {
    for (int x = 1; x <= m; ++x) {
      if (oracle.power_in_kernel(a, x)) {
        return false;
      }
    }
  }
  if (!sc.b_power) {
    for (int y = 1; y <= l; ++y) {
      if (oracle.power_in_kernel(b, y)) {
        return false;
      }
    }
  }
  for (int z = 1; z <= k + kp; ++z) {
    if (oracle.power_in_kernel(d, z)) {
      return false;
    }
    if (sc.b_power) {
      continue;
    }
    for (int y = 1; y <= l; ++y) {
      if (oracle.product_in_kernel(b, y, d, z)) {
        return false;
      }
    }
  }
  return true;
}

std::optional<HandleWitness> search_b(Representation const& rep, PowerOracle const& oracle,
                                      int total, int max_exp) {
  auto const& s = rep.surface();
  for (unsigned j = 1; j <= s.genus(); ++j) {
    GeneratorId a = s.a(j);
    GeneratorId b = s.b(j);
    auto ma = oracle.minimal_kernel_power(a);
    auto lb = oracle.minimal_kernel_power(b);
    bool first_d = true;
    for (GeneratorId d = 0; d < s.rank(); ++d) {
      if (d == a || d == b) {
        continue;
      }
      for (int m = 1; m <= max_exp; ++m) {
        for (int l = 1; l <= max_exp; ++l) {
          for (int k = 0; k <= max_exp; ++k) {
            int kp = total - m - l - k;
            if (kp < 0 || kp > max_exp) {
              continue;
            }
            TorsionShortcut sc{k == 0, kp == 0};
            if (sc.a_power && (!ma || *ma != m)) {
              continue;
            }
            if (sc.b_power && (!lb || *lb != l)) {
              continue;
            }
            if (sc.a_power && sc.b_power && !first_d) {
              continue;
            }
            if (!case_b_conditions(oracle, a, b, d, m, l, k, kp, sc)) {
              continue;
            }
            HandleWitness w{'b', 0, j, d, m, 0, l, k, kp, sc, {}, {}};
            auto words = witness_words_case_b(s, j, d, m, l, std::max(k, 1), std::max(kp, 1), sc);
            if (accept_pair(rep, w, std::move(words))) {
              return w;
            }
          }
        }
      }
      first_d = false;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<HandleWitness> handle_witness_search(Representation const& rep,
                                                   int max_exponent) {
  auto const& s = rep.surface();
  if (!witness_search_applies(s)) {
    throw InvalidInput("no handle-witness pattern for this surface");
  }
  if (max_exponent < 1) {
    throw InvalidInput("search bound must be positive");
  }
  PowerOracle oracle(rep);
  for (int total = 2; total <= 4 * max_exponent; ++total) {
    if (s.genus() == 0) {
      if (auto w = search_a(rep, oracle, total, max_exponent)) {
        return w;
      }
    } else if (auto w = search_b(rep, oracle, total, max_exponent)) {
      return w;
    }
  }
  return std::nullopt;
}

nlohmann::json to_json(HandleWitness const& w, SurfacePresentation const& surface) {
  nlohmann::json j;
  j["pattern"] = std::string(1, w.pattern);
  if (w.pattern == 'a') {
    j["i"] = w.i;
    j["j"] = w.j;
    j["m"] = w.m;
    j["m_prime"] = w.m_prime;
    j["l"] = w.l;
  } else {
    j["j"] = w.j;
    j["d"] = surface.name(w.d);
    j["m"] = w.m;
    j["l"] = w.l;
    j["k"] = w.k;
    j["k_prime"] = w.k_prime;
    j["torsion_a"] = w.shortcut.a_power;
    j["torsion_b"] = w.shortcut.b_power;
  }
  j["gamma1"] = w.gamma1.to_string(surface);
  j["gamma2"] = w.gamma2.to_string(surface);
  j["intersection_mod2"] = 1;
  return j;
}

// ------------------------------------------------------------ classification

FiniteCoverType riemann_hurwitz_finite(Representation const& rep, std::size_t vertex_budget) {
  auto deck = deck_group(rep, vertex_budget);
  if (!deck.is_finite()) {
    throw InvalidInput("Riemann-Hurwitz needs a finite deck group");
  }
  auto const& s = rep.surface();
  long k = static_cast<long>(deck.order);
  long punctures = 0;
  for (auto const& o : boundary_orders(rep)) {
    punctures += k / static_cast<long>(o.value);
  }
  long chi = k * s.euler_characteristic();
  long twice = 2 - chi - punctures;
  if (twice < 0 || twice % 2 != 0) {
    throw InternalError("Riemann-Hurwitz produced a non-integral genus");
  }
  return {deck.order, chi, punctures, twice / 2};
}

std::string GenusClass::to_string() const {
  switch (kind) {
    case Kind::zero_certified_to_radius:
      return "zero_certified_to_radius(" + std::to_string(value) + ")";
    case Kind::finite:
      return "finite(" + std::to_string(value) + ")";
    case Kind::infinite:
      return "infinite";
    case Kind::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

std::optional<std::string> surface_type_name(EndSpace eprime, bool infinite_genus,
                                             bool planar_discrete_ends) {
  std::string base;
  switch (eprime) {
    case EndSpace::one:
      base = infinite_genus ? (planar_discrete_ends ? "lnm" : "loch_ness_monster") : "plane";
      break;
    case EndSpace::two:
      base = infinite_genus ? "jacobs_ladder" : "cylinder";
      break;
    case EndSpace::cantor:
      base = infinite_genus ? "blooming_cantor_tree" : "cantor_tree";
      break;
    default:
      return std::nullopt;
  }
  return planar_discrete_ends ? base + "_minus_discrete" : base;
}

CoverClassification classify_cover(Representation const& rep, ClassifyOptions const& options) {
  auto const& s = rep.surface();
  CoverClassification out;
  EndsReport& r = out.report;
  r.deck = deck_group(rep, options.vertex_budget);
  r.boundary_orders = boundary_orders(rep);

  if (r.deck.is_finite()) {
    auto rh = riemann_hurwitz_finite(rep, options.vertex_budget);
    auto whole = build_group(rep, options.vertex_budget);
    long glued = glue_ball(rep, whole).genus();
    if (glued != rh.genus) {
      throw InternalError("Riemann-Hurwitz genus " + std::to_string(rh.genus) +
                          " disagrees with the glued cover genus " + std::to_string(glued));
    }
    r.eprime = EndSpace::zero;
    r.genus = {GenusClass::Kind::finite, rh.genus};
    out.finite_cover = rh;
    out.label = "finite_cover";
    return out;
  }
  if (!r.deck.is_infinite()) {
    r.genus = {GenusClass::Kind::inconclusive, 0};
    out.caveats.push_back("deck group finiteness undecided within the vertex budget");
    out.budget_limited = true;
    return out;
  }

  bool some_infinite_boundary = false;
  for (auto const& o : r.boundary_orders) {
    if (o.is_finite()) {
      r.planar_discrete_ends = true;
    } else {
      some_infinite_boundary = true;
    }
  }
  r.eprime = some_infinite_boundary ? EndSpace::one
                                    : ends_of_deck_group(rep, options.vertex_budget);

  if (witness_search_applies(s)) {
    r.witness = handle_witness_search(rep, options.search_bound);
  }
  r.growth = genus_growth(rep, options.radii, options.vertex_budget);
  std::optional<unsigned> zero_to;
  bool positive = false;
  for (auto const& row : r.growth) {
    if (!row.invariants) {
      break;
    }
    if (row.invariants->genus > 0) {
      positive = true;
      break;
    }
    zero_to = row.radius;
  }
  if (r.witness || positive) {
    r.genus = {GenusClass::Kind::infinite, 0};
  } else if (zero_to) {
    r.genus = {GenusClass::Kind::zero_certified_to_radius, static_cast<long>(*zero_to)};
    out.caveats.push_back("genus zero verified on balls up to radius " +
                          std::to_string(*zero_to));
  } else {
    r.genus = {GenusClass::Kind::inconclusive, 0};
    out.caveats.push_back("no ball could be built within the vertex budget");
    out.budget_limited = true;
  }
  if (r.eprime == EndSpace::inconclusive) {
    out.caveats.push_back("end space of the deck group not recognized");
  }
  if (r.genus.kind != GenusClass::Kind::inconclusive) {
    out.label = surface_type_name(r.eprime, r.genus.kind == GenusClass::Kind::infinite,
                                  r.planar_discrete_ends);
  }
  return out;
}

nlohmann::json to_json(EndsReport const& r, SurfacePresentation const& surface) {
  nlohmann::json j;
  j["deck_is_finite"] = r.deck.is_finite();
  if (r.deck.is_finite()) {
    j["deck_order"] = r.deck.order;
  } else if (!r.deck.is_infinite()) {
    j["deck_is_finite"] = "unknown";
  }
  auto orders = nlohmann::json::array();
  for (auto const& o : r.boundary_orders) {
    if (o.is_finite()) {
      orders.push_back(o.value);
    } else {
      orders.push_back(o.to_string());
    }
  }
  j["boundary_orders"] = orders;
  j["planar_discrete_ends"] = r.planar_discrete_ends;
  j["eprime_class"] = to_string(r.eprime);
  j["genus_class"] = r.genus.to_string();
  j["witness"] = r.witness ? to_json(*r.witness, surface) : nlohmann::json(nullptr);
  auto growth = nlohmann::json::array();
  for (auto const& row : r.growth) {
    if (row.invariants) {
      growth.push_back(to_json(*row.invariants));
    } else {
      growth.push_back({{"N", row.radius}, {"error", row.error}});
    }
  }
  j["genus_growth"] = growth;
  return j;
}

}  // namespace leaftype
