// One line per acceptance criterion. Random cases use fixed seeds.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "leaftype/config.hpp"
#include "leaftype/error.hpp"

namespace fs = std::filesystem;
using namespace leaftype;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

PermElement random_perm(Rng& rng, std::size_t degree) {
  std::vector<std::uint32_t> p(degree);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return PermElement(std::move(p));
}

// ---- criterion 1

Outcome reference_examples() {
  struct Case {
    char const* file;
    char const* label;
  };
  std::vector<Case> cases{{"blooming_cantor_tree.json", "blooming_cantor_tree"},
                          {"cantor_tree.json", "cantor_tree"},
                          {"jacobs_ladder.json", "jacobs_ladder"},
                          {"plane_homogeneous.json", "plane"},
                          {"homogeneous_case1.json", "plane_minus_discrete"},
                          {"homogeneous_case2.json", "lnm_minus_discrete"},
                          {"homogeneous_case3.json", "loch_ness_monster"},
                          {"three_lines.json", "plane_biholomorphic_to_C"},
                          {"four_lines.json", "loch_ness_monster"}};
  auto start = std::chrono::steady_clock::now();
  std::string wrong;
  for (auto const& c : cases) {
    std::string got = "<none>";
    try {
      auto v = classify(load_config(std::string(LEAFTYPE_CONFIG_DIR) + "/" + c.file), {});
      got = v.label.value_or("<none>");
    } catch (std::exception const& e) {
      got = std::string("error: ") + e.what();
    }
    if (got != c.label) {
      wrong += std::string(" ") + c.file + "->" + got;
    }
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream out;
  out << cases.size() << " examples in " << secs << " s";
  if (!wrong.empty()) {
    out << ", mismatches:" << wrong;
  }
  return {wrong.empty() && secs < 10.0, out.str()};
}

// ---- criteria 2 and 3

// Finite image, order at most 24, 2g + n <= 6.
Representation random_finite_rep(Rng& rng) {
  for (;;) {
    unsigned g = static_cast<unsigned>(uniform(rng, 0, 3));
    unsigned n = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(6 - 2 * g)));
    if (2 * g + n <= 1) {
      continue;
    }
    SurfacePresentation s(g, n);
    std::size_t free_count = s.rank() - (n > 0 ? 1 : 0);
    std::vector<Element> images;
    if (uniform(rng, 0, 1) == 0) {
      int modulus = uniform(rng, 1, 24);
      for (std::size_t k = 0; k < s.rank(); ++k) {
        images.emplace_back(CircleElement(ExponentScalar(Rational(uniform(rng, 0, modulus - 1), modulus))));
      }
      if (n > 0) {
        images.resize(free_count);
        return Representation::with_derived_last_boundary(s, std::move(images));
      }
      return Representation(s, std::move(images));
    }
    std::size_t degree = static_cast<std::size_t>(uniform(rng, 2, 4));
    if (n == 0) {
      // powers of one permutation keep the relator trivial
      auto sigma = random_perm(rng, degree);
      for (std::size_t k = 0; k < s.rank(); ++k) {
        images.emplace_back(sigma.power(uniform(rng, 0, 3)));
      }
      return Representation(s, std::move(images));
    }
    for (std::size_t k = 0; k < free_count; ++k) {
      images.emplace_back(random_perm(rng, degree));
    }
    return Representation::with_derived_last_boundary(s, std::move(images));
  }
}

std::vector<Representation> finite_reps() {
  Rng rng(20240611);
  std::vector<Representation> reps;
  while (reps.size() < 240) {
    auto r = random_finite_rep(rng);
    if (deck_group(r).order <= 24) {
      reps.push_back(std::move(r));
    }
  }
  return reps;
}

Outcome riemann_hurwitz_agreement(std::vector<Representation> const& reps) {
  std::size_t ok = 0;
  std::string first_bad;
  for (auto const& rep : reps) {
    bool good = false;
    std::string why;
    try {
      auto rh = riemann_hurwitz_finite(rep);
      auto group = build_group(rep);
      auto inv = invariants(glue_ball(rep, group), group.radius());
      good = inv.faces == rh.deck_order && inv.chi == rh.chi &&
             static_cast<long>(inv.boundary_components) == rh.punctures && inv.genus == rh.genus &&
             inv.connected;
      if (!good) {
        why = "glued (chi " + std::to_string(inv.chi) + ", r " +
              std::to_string(inv.boundary_components) + ", g " + std::to_string(inv.genus) +
              ") vs formula (chi " + std::to_string(rh.chi) + ", r " +
              std::to_string(rh.punctures) + ", g " + std::to_string(rh.genus) + ")";
      }
    } catch (std::exception const& e) {
      why = e.what();
    }
    ok += good;
    if (!good && first_bad.empty()) {
      first_bad = why;
    }
  }
  std::string detail = std::to_string(ok) + "/" + std::to_string(reps.size()) +
                       " finite reps agree";
  if (!first_bad.empty()) {
    detail += "; first mismatch: " + first_bad;
  }
  return {ok == reps.size() && reps.size() >= 200, detail};
}

Outcome euler_consistency(std::vector<Representation> const& finite) {
  SymbolTable st({"t", "u"});
  std::vector<Representation> reps = finite;
  auto circ = [&](unsigned g, unsigned n, std::vector<std::string> const& ex) {
    std::vector<Element> images;
    for (auto const& e : ex) {
      images.emplace_back(CircleElement(parse_exponent(e, st)));
    }
    return Representation(SurfacePresentation(g, n), std::move(images));
  };
  reps.push_back(circ(0, 3, {"t", "1", "-t"}));
  reps.push_back(circ(0, 3, {"t", "1/2", "1/2 - t"}));
  reps.push_back(circ(0, 3, {"t", "u", "1 - t - u"}));
  reps.push_back(circ(1, 2, {"t", "1/3", "u", "-u"}));
  reps.push_back(circ(2, 0, {"t", "0", "u", "1/2"}));
  {
    SurfacePresentation s(2, 0);
    std::vector<Element> images(s.rank(), MoebiusElement());
    images[s.a(1)] = MoebiusElement(1, 2, 0, 1);
    images[s.a(2)] = MoebiusElement(1, 0, 2, 1);
    reps.emplace_back(s, std::move(images));
  }
  std::size_t surfaces = 0;
  std::size_t ok = 0;
  for (auto const& rep : reps) {
    for (unsigned n : {1u, 2u, 3u}) {
      auto ball = build_ball(rep, n, 200000);
      auto s = glue_ball(rep, ball);
      long r = static_cast<long>(s.boundary_count());
      long chi = s.euler_characteristic();
      bool good = s.traced_euler_characteristic() == chi && (2 - chi - r) % 2 == 0 &&
                  s.genus() >= 0 && s.genus() == (2 - chi - r) / 2 && s.orientable();
      ++surfaces;
      ok += good;
    }
  }
  return {ok == surfaces,
          std::to_string(ok) + "/" + std::to_string(surfaces) + " glued balls consistent"};
}

// ---- criteria 4 and 5

// Circle images a*t + b*u + p/q mixing free and torsion parts.
Representation random_abelian_rep(Rng& rng, SymbolTable const& st) {
  for (;;) {
    unsigned g = static_cast<unsigned>(uniform(rng, 0, 1));
    unsigned n = g == 0 ? static_cast<unsigned>(uniform(rng, 3, 5))
                        : static_cast<unsigned>(uniform(rng, 1, 3));
    SurfacePresentation s(g, n);
    std::vector<Element> images;
    bool torsion = false;
    bool free = false;
    for (std::size_t k = 0; k + 1 < s.rank(); ++k) {
      int a = uniform(rng, -2, 2);
      int b = uniform(rng, 0, 3) == 0 ? uniform(rng, -1, 1) : 0;
      int q = uniform(rng, 1, 4);
      int p = uniform(rng, 0, q - 1);
      if (uniform(rng, 0, 2) == 0) {
        a = 0;
        b = 0;
      }
      ExponentScalar e = ExponentScalar::symbol(0) * Rational(a) +
                         ExponentScalar::symbol(1) * Rational(b) + ExponentScalar(Rational(p, q));
      torsion |= a == 0 && b == 0 && p != 0;
      free |= a != 0 || b != 0;
      images.emplace_back(CircleElement(e));
    }
    (void)st;
    if (!torsion || !free) {
      continue;
    }
    return Representation::with_derived_last_boundary(s, std::move(images));
  }
}

std::vector<Representation> abelian_reps(std::size_t count) {
  Rng rng(77031);
  SymbolTable st({"t", "u"});
  std::vector<Representation> reps;
  while (reps.size() < count) {
    reps.push_back(random_abelian_rep(rng, st));
  }
  return reps;
}

Outcome witness_vs_growth(std::vector<Representation> const& reps) {
  std::size_t agree = 0;
  std::size_t with_witness = 0;
  std::size_t odd = 0;
  std::string first_bad;
  for (auto const& rep : reps) {
    auto rows = genus_growth(rep, {2, 4, 6});
    bool positive = false;
    for (auto const& row : rows) {
      positive |= row.invariants && row.invariants->genus > 0;
    }
    auto w = handle_witness_search(rep, 6);
    if (static_cast<bool>(w) == positive) {
      ++agree;
    } else if (first_bad.empty()) {
      std::ostringstream out;
      out << "genus_growth " << (positive ? "positive" : "zero") << " but witness "
          << (w ? "found" : "absent") << " on (g=" << rep.surface().genus()
          << ", n=" << rep.surface().punctures() << ", images";
      SymbolTable st({"t", "u"});
      for (auto const& e : rep.images()) {
        out << " " << element_to_string(e, st);
      }
      out << ")";
      first_bad = out.str();
    }
    if (w) {
      ++with_witness;
      auto ball = build_ball(rep, 6);
      auto surf = glue_ball(rep, ball);
      auto p1 = lift_cycle(rep, ball, surf, w->gamma1, ball.root());
      auto p2 = lift_cycle(rep, ball, surf, w->gamma2, ball.root());
      if (p1.closed() && p2.closed() && intersection_number_mod2(surf, p1, p2) == 1) {
        ++odd;
      }
    }
  }
  std::ostringstream out;
  out << agree << "/" << reps.size() << " reps: witness iff positive genus by radius 6; " << odd
      << "/" << with_witness << " witnesses intersect oddly on the radius-6 surface";
  if (!first_bad.empty()) {
    out << "; first disagreement: " << first_bad;
  }
  return {agree == reps.size() && odd == with_witness && reps.size() >= 50, out.str()};
}

Outcome planar_dichotomy(std::vector<Representation> reps) {
  {
    // c1 -> z + 1, c2 -> -1/z, c3 derived: infinite image with torsion
    SurfacePresentation s(0, 3);
    reps.push_back(Representation::with_derived_last_boundary(
        s, {MoebiusElement(1, 1, 0, 1), MoebiusElement(0, -1, 1, 0)}));
    SurfacePresentation t(1, 1);
    reps.push_back(Representation::with_derived_last_boundary(
        t, {MoebiusElement(1, 1, 0, 1), MoebiusElement(1, 1, 0, 1)}));
  }
  std::size_t checked = 0;
  std::size_t agree = 0;
  for (auto const& rep : reps) {
    auto deck = deck_group(rep);
    if (!deck.is_infinite() || rep.surface().punctures() == 0) {
      continue;
    }
    ++checked;
    auto orders = boundary_orders(rep);
    bool predicted = false;
    unsigned radius = 3;
    for (auto const& o : orders) {
      if (o.is_finite()) {
        predicted = true;
        radius = std::max<unsigned>(radius, static_cast<unsigned>(o.value));
      }
    }
    auto ball = build_ball(rep, radius, 200000);
    auto surf = glue_ball(rep, ball);
    auto const& s = rep.surface();
    bool some_closes = false;
    bool all_exit = true;
    for (unsigned j = 1; j <= s.punctures(); ++j) {
      // closing from the base face
      for (std::size_t m = 1; m <= ball.size(); ++m) {
        auto p = lift_cycle(rep, ball, surf, generator_power(s, s.c(j), static_cast<int>(m)),
                            ball.root());
        if (p.exits_ball) {
          break;
        }
        if (p.closed()) {
          some_closes = true;
          break;
        }
      }
      if (orders[j - 1].is_finite()) {
        continue;
      }
      auto long_power = generator_power(s, s.c(j), static_cast<int>(ball.size() + 1));
      for (std::size_t v = 0; v < ball.size(); ++v) {
        all_exit &= lift_cycle(rep, ball, surf, long_power, v).exits_ball;
      }
    }
    bool ok = predicted == some_closes && (predicted || all_exit);
    agree += ok;
  }
  return {agree == checked && checked > 0,
          std::to_string(agree) + "/" + std::to_string(checked) +
              " infinite-deck reps match the planar-ends prediction"};
}

// ---- criterion 6

std::string slurp(fs::path const& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome deterministic_cli() {
  auto root = fs::temp_directory_path() / ("leaftype_accept_" + std::to_string(::getpid()));
  fs::remove_all(root);
  std::vector<std::pair<std::string, std::string>> runs{
      {"classify", "homogeneous_case2.json"},
      {"classify", "four_lines.json"},
      {"classify", "blooming_cantor_tree.json"},
      {"ball", "cantor_tree.json"},
      {"surface", "homogeneous_case3.json"}};
  std::size_t files = 0;
  std::string diff;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    std::vector<fs::path> dirs;
    for (int rep = 0; rep < 2; ++rep) {
      auto dir = root / (std::to_string(k) + "_" + std::to_string(rep));
      fs::create_directories(dir);
      std::string cmd = std::string("\"") + LEAFTYPE_CLI + "\" " + runs[k].first + " --config \"" +
                        LEAFTYPE_CONFIG_DIR + "/" + runs[k].second + "\" --out \"" +
                        dir.string() + "\" > \"" + (dir / "stdout.txt").string() + "\" 2>&1";
      if (std::system(cmd.c_str()) != 0) {
        diff += " " + runs[k].first + ":" + runs[k].second + " failed";
      }
      dirs.push_back(dir);
    }
    for (auto const& entry : fs::directory_iterator(dirs[0])) {
      auto other = dirs[1] / entry.path().filename();
      ++files;
      if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
        diff += " " + entry.path().filename().string();
      }
    }
  }
  fs::remove_all(root);
  return {diff.empty() && files > 0,
          std::to_string(files) + " output files compared" +
              (diff.empty() ? "" : ", differences:" + diff)};
}

// ---- criterion 7

Word random_word(Rng& rng, SurfacePresentation const& s, int max_len) {
  std::vector<Letter> raw;
  int len = uniform(rng, 0, max_len);
  for (int k = 0; k < len; ++k) {
    raw.push_back({static_cast<GeneratorId>(uniform(rng, 0, static_cast<int>(s.rank()) - 1)),
                   uniform(rng, 0, 1) ? 1 : -1});
  }
  return reduce(s, raw);
}

GaussianRational small_gaussian(Rng& rng) {
  return {Rational(uniform(rng, -3, 3)), Rational(uniform(rng, 0, 3) == 0 ? uniform(rng, -2, 2) : 0)};
}

Outcome property_cases() {
  Rng rng(9001);
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first;
  auto note = [&](bool ok, std::string const& what) {
    ++cases;
    if (!ok) {
      ++failures;
      if (first.empty()) {
        first = what;
      }
    }
  };
  SymbolTable st({"t", "u"});

  // homomorphism
  std::vector<Representation> reps;
  reps.push_back(Representation::with_derived_last_boundary(
      SurfacePresentation(1, 2),
      {CircleElement(parse_exponent("t + 1/3", st)), CircleElement(parse_exponent("u", st)),
       CircleElement(parse_exponent("1/4", st))}));
  reps.push_back(Representation::with_derived_last_boundary(
      SurfacePresentation(1, 2), {random_perm(rng, 5), random_perm(rng, 5), random_perm(rng, 5)}));
  reps.push_back(Representation::with_derived_last_boundary(
      SurfacePresentation(0, 4), {MoebiusElement(1, 2, 0, 1), MoebiusElement(1, 0, 2, 1),
                                  MoebiusElement(0, -1, 1, 1)}));
  for (std::size_t k = 0; k < 4500; ++k) {
    auto const& rep = reps[k % reps.size()];
    auto u = random_word(rng, rep.surface(), 8);
    auto v = random_word(rng, rep.surface(), 8);
    bool ok = element_key(rep.evaluate(u * v)) ==
                  element_key(compose(rep.evaluate(u), rep.evaluate(v))) &&
              element_key(rep.evaluate(u.inverse())) == element_key(inverse(rep.evaluate(u)));
    note(ok, "homomorphism on " + u.to_string(rep.surface()) + " * " + v.to_string(rep.surface()));
  }

  // circle orders
  for (std::size_t k = 0; k < 3000; ++k) {
    long q = uniform(rng, 1, 12);
    long p = uniform(rng, -30, 30);
    CircleElement e{ExponentScalar(Rational(p, q))};
    auto expect = static_cast<std::uint64_t>(q / std::gcd(std::abs(p), q));
    bool ok = element_order(e) == ElementOrder::finite(expect) &&
              e.power(static_cast<long>(expect)).is_identity();
    for (std::uint64_t d = 1; d < expect; ++d) {
      ok &= !e.power(static_cast<long>(d)).is_identity();
    }
    note(ok, "circle order of " + std::to_string(p) + "/" + std::to_string(q));
  }

  // moebius orders vs powering
  std::vector<MoebiusElement> rotations{MoebiusElement(0, -1, 1, 0), MoebiusElement(0, -1, 1, 1),
                                        MoebiusElement(0, -1, 1, -1), MoebiusElement(1, -1, 1, 1),
                                        MoebiusElement(1, -1, 1, 2)};
  for (std::size_t k = 0; k < 3000; ++k) {
    MoebiusElement m;
    auto random_matrix = [&]() -> std::optional<MoebiusElement> {
      auto a = small_gaussian(rng);
      auto b = small_gaussian(rng);
      auto c = small_gaussian(rng);
      auto d = small_gaussian(rng);
      if ((a * d - b * c).is_zero()) {
        return std::nullopt;
      }
      return MoebiusElement(a, b, c, d);
    };
    auto r = random_matrix();
    if (!r) {
      continue;
    }
    m = k % 2 == 0 ? *r * rotations[k / 2 % rotations.size()] * r->inverse() : *r;
    std::uint64_t found = 0;
    MoebiusElement acc = m;
    for (std::uint64_t d = 1; d <= 24; ++d) {
      if (acc.is_identity()) {
        found = d;
        break;
      }
      acc = acc * m;
    }
    auto o = element_order(m);
    bool ok = found ? o == ElementOrder::finite(found) : o.kind == ElementOrder::Kind::infinite;
    note(ok, "moebius order of " + m.key());
  }

  std::string detail = std::to_string(cases - failures) + "/" + std::to_string(cases) +
                       " property cases hold";
  if (!first.empty()) {
    detail += "; first failure: " + first;
  }
  return {failures == 0 && cases >= 10000, detail};
}

}  // namespace

// With no argument every criterion runs; "acceptance N" runs only criterion N.
int main(int argc, char** argv) {
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  auto guard = [](auto&& f) -> Outcome {
    try {
      return f();
    } catch (std::exception const& e) {
      return {false, std::string("threw: ") + e.what()};
    }
  };
  std::vector<Representation> finite;
  std::vector<Representation> abelian;
  if (only == 0 || only == 2 || only == 3) {
    finite = finite_reps();
  }
  if (only == 0 || only == 4 || only == 5) {
    abelian = abelian_reps(60);
  }
  std::vector<std::function<Outcome()>> criteria{
      [] { return reference_examples(); },
      [&] { return riemann_hurwitz_agreement(finite); },
      [&] { return euler_consistency(finite); },
      [&] { return witness_vs_growth(abelian); },
      [&] { return planar_dichotomy(abelian); },
      [] { return deterministic_cli(); },
      [] { return property_cases(); }};
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (only != 0 && static_cast<std::size_t>(only) != k + 1) {
      continue;
    }
    auto r = guard(criteria[k]);
    std::cout << "criterion " << k + 1 << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.detail
              << "\n";
    all &= r.pass;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
