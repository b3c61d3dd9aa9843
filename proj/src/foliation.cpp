#include "leaftype/foliation.hpp"

#include <algorithm>

#include "leaftype/error.hpp"

namespace leaftype {

nlohmann::json to_json(Verdict const& v) {
  nlohmann::json j;
  j["label"] = v.label ? nlohmann::json(*v.label) : nlohmann::json(nullptr);
  j["theorem_route"] = v.theorem_route;
  j["computational_evidence"] = v.evidence;
  j["caveats"] = v.caveats;
  return j;
}

namespace {

std::string finite_label(FiniteCoverType const& f) {
  return "finite_cover{genus=" + std::to_string(f.genus) +
         ",punctures=" + std::to_string(f.punctures) + "}";
}

nlohmann::json finite_json(FiniteCoverType const& f) {
  return {{"deck_order", f.deck_order},
          {"chi", f.chi},
          {"punctures", f.punctures},
          {"genus", f.genus}};
}

Verdict from_cover(Representation const& rep, CoverClassification const& c) {
  Verdict v;
  v.evidence["ends_report"] = to_json(c.report, rep.surface());
  if (c.finite_cover) {
    v.evidence["finite_cover"] = finite_json(*c.finite_cover);
    v.label = finite_label(*c.finite_cover);
  } else {
    v.label = c.label;
  }
  v.caveats = c.caveats;
  v.budget_limited = !v.label && c.budget_limited;
  return v;
}

std::string pair_name(std::size_t k, std::size_t j) {
  return "lambda" + std::to_string(k) + "/lambda" + std::to_string(j);
}

// lambda_k = q * lambda_j for a rational q, if so.
std::optional<Rational> rational_ratio(ExponentScalar const& num, ExponentScalar const& den) {
  // Pick any nonzero coordinate of den and test num == q * den.
  std::optional<Rational> q;
  auto probe = [&](Rational const& a, Rational const& b) {
    if (!q && b != 0) {
      q = a / b;
    }
  };
  probe(num.re().constant(), den.re().constant());
  probe(num.im().constant(), den.im().constant());
  for (auto const& [id, c] : den.re().coefficients()) {
    probe(num.re().coefficient(id), c);
  }
  for (auto const& [id, c] : den.im().coefficients()) {
    probe(num.im().coefficient(id), c);
  }
  if (!q || !(den * *q == num)) {
    return std::nullopt;
  }
  return q;
}

GaussianRational as_gaussian(ExponentScalar const& e) {
  return {e.re().constant(), e.im().constant()};
}

ExponentScalar as_exponent(GaussianRational const& z) { return ExponentScalar(z.re, z.im); }

}  // namespace

GenericityReport validate_log_spec(LogFoliationSpec const& spec, SymbolTable const& symbols) {
  auto const& cs = spec.components;
  if (cs.size() < 2) {
    throw InvalidInput("a logarithmic foliation needs at least two polar components");
  }
  ExponentScalar sum;
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j].degree == 0) {
      throw InvalidInput("component " + std::to_string(j + 1) + " has degree 0");
    }
    if (cs[j].residue.is_zero()) {
      throw InvalidInput("component " + std::to_string(j + 1) + " has zero residue");
    }
    if (spec.mode == ResidueMode::proportional && !cs[j].residue.is_gaussian_rational()) {
      throw InvalidInput("proportional mode takes Gaussian-rational coefficients, got '" +
                         cs[j].residue.to_string(symbols) + "'");
    }
    sum += cs[j].residue * Rational(cs[j].degree);
  }
  if (!sum.is_zero()) {
    throw InvalidInput("sum of d_j * lambda_j is " + sum.to_string(symbols) + ", not 0");
  }
  GenericityReport report;
  if (cs.size() == 2) {
    report.failure = "two components force " + pair_name(2, 1) + " = -" +
                     std::to_string(cs[0].degree) + "/" + std::to_string(cs[1].degree) +
                     ", a negative real";
    return report;
  }
  for (std::size_t j = 0; j < cs.size(); ++j) {
    for (std::size_t k = j + 1; k < cs.size(); ++k) {
      auto const& lj = cs[j].residue;
      auto const& lk = cs[k].residue;
      std::string name = pair_name(k + 1, j + 1);
      if (lj.is_gaussian_rational() && lk.is_gaussian_rational()) {
        auto r = as_gaussian(lk) / as_gaussian(lj);
        if (r.is_real() && r.re < 0) {
          report.failure = name + " = " + r.to_string() + " is a negative real";
          return report;
        }
        report.notes.push_back(name + " = " + r.to_string());
      } else if (auto q = rational_ratio(lk, lj)) {
        if (*q < 0) {
          report.failure = name + " = " + to_string(*q) + " is a negative real";
          return report;
        }
        report.notes.push_back(name + " = " + to_string(*q));
      } else if (spec.ratios_not_negative_real) {
        report.notes.push_back(name + " not a negative real (asserted)");
      } else {
        report.failure = name + " cannot be decided and no assertion was given";
        return report;
      }
    }
  }
  return report;
}

Representation component_holonomy(LogFoliationSpec const& spec, std::size_t j) {
  auto const& cs = spec.components;
  if (j < 1 || j > cs.size()) {
    throw InvalidInput("no polar component " + std::to_string(j));
  }
  unsigned dj = cs[j - 1].degree;
  unsigned genus = (dj - 1) * (dj - 2) / 2;
  std::vector<ExponentScalar> punct;
  for (std::size_t k = 1; k <= cs.size(); ++k) {
    if (k == j) {
      continue;
    }
    ExponentScalar ratio;
    if (spec.mode == ResidueMode::proportional) {
      ratio = as_exponent(as_gaussian(cs[k - 1].residue) / as_gaussian(cs[j - 1].residue));
    } else {
      auto base = spec.ratios.find(j);
      if (base == spec.ratios.end() || !base->second.count(k)) {
        throw InvalidInput("missing ratio " + pair_name(k, j));
      }
      ratio = base->second.at(k);
    }
    unsigned points = cs[k - 1].degree * dj;
    if (auto o = spec.crossings.find(j); o != spec.crossings.end() && o->second.count(k)) {
      points = o->second.at(k);
    }
    for (unsigned p = 0; p < points; ++p) {
      punct.push_back(ratio);
    }
  }
  std::vector<Element> images(2 * genus, CircleElement(ExponentScalar{}));
  for (auto const& e : punct) {
    images.emplace_back(CircleElement(e));
  }
  return Representation(SurfacePresentation(genus, static_cast<unsigned>(punct.size())),
                        std::move(images));
}

Verdict classify_logarithmic(LogFoliationSpec const& spec, SymbolTable const& symbols,
                             ClassifyOptions const& options) {
  auto gen = validate_log_spec(spec, symbols);
  if (gen.failure) {
    throw InvalidInput("genericity failure: " + *gen.failure);
  }
  if (!spec.normal_crossing) {
    throw InvalidInput("normal crossings of the polar divisor must be asserted");
  }
  Verdict v;
  v.evidence["ratios"] = gen.notes;
  v.caveats.push_back("all leaves except a finite set");
  auto const& cs = spec.components;
  bool three_lines = cs.size() == 3 &&
                     std::all_of(cs.begin(), cs.end(), [](auto const& c) { return c.degree == 1; });
  if (three_lines) {
    v.label = "plane_biholomorphic_to_C";
    v.theorem_route = "three lines in general position with non-negative-real residue ratios";
    return v;
  }
  v.label = "loch_ness_monster";
  v.theorem_route =
      "single end from the polar-divisor rule; infinitely many handles from an invariant "
      "component whose holonomy cover carries a handle witness";
  auto components = nlohmann::json::array();
  std::optional<std::size_t> witnessed;
  for (std::size_t j = 1; j <= cs.size(); ++j) {
    nlohmann::json c{{"component", j}};
    try {
      auto rep = component_holonomy(spec, j);
      auto const& s = rep.surface();
      c["genus"] = s.genus();
      c["punctures"] = s.punctures();
      auto deck = deck_group(rep, options.vertex_budget);
      c["deck_is_finite"] = deck.is_finite();
      if (!witnessed && deck.is_infinite() && witness_search_applies(s)) {
        if (auto w = handle_witness_search(rep, options.search_bound)) {
          c["witness"] = to_json(*w, s);
          witnessed = j;
        }
      }
    } catch (InvalidInput const& e) {
      c["skipped"] = e.what();
    }
    components.push_back(c);
  }
  v.evidence["components"] = components;
  if (witnessed) {
    v.evidence["witness_status"] = "verified on component " + std::to_string(*witnessed);
  } else {
    v.evidence["witness_status"] =
        "unverified at bound " + std::to_string(options.search_bound);
    v.caveats.push_back("handle witness not found within the search bound");
  }
  return v;
}

Representation homogeneous_holonomy(std::vector<ExponentScalar> const& exponents) {
  if (exponents.empty()) {
    throw InvalidInput("a homogeneous foliation needs at least one exponent");
  }
  std::vector<Element> images;
  for (auto const& e : exponents) {
    images.emplace_back(CircleElement(e));
  }
  return Representation(SurfacePresentation(0, static_cast<unsigned>(exponents.size())),
                        std::move(images));
}

Verdict classify_homogeneous(std::vector<ExponentScalar> const& exponents,
                             SymbolTable const& symbols, ClassifyOptions const& options) {
  auto rep = homogeneous_holonomy(exponents);
  Verdict v = from_cover(rep, classify_cover(rep, options));
  auto ex = nlohmann::json::array();
  for (auto const& e : exponents) {
    ex.push_back(e.to_string(symbols));
  }
  v.evidence["exponents"] = ex;
  if (v.evidence.contains("finite_cover")) {
    v.theorem_route = "finite holonomy: rational first integral, algebraic generic leaves";
    return v;
  }
  v.theorem_route = "infinite holonomy: generic leaf is a regular cover of the punctured line";
  static const std::vector<std::string> admissible{
      "plane", "cylinder", "plane_minus_discrete", "loch_ness_monster", "lnm_minus_discrete"};
  if (v.label && std::find(admissible.begin(), admissible.end(), *v.label) == admissible.end()) {
    v.caveats.push_back("label outside the five homogeneous types");
  }
  return v;
}

Verdict classify_riccati(Representation const& rep,
                         ClassifyOptions const& options) {
  if (rep.kind() != TargetKind::moebius) {
    throw InvalidInput("a Riccati foliation needs a Moebius representation");
  }
  auto fixed = nlohmann::json::array();
  for (GeneratorId g = 0; g < rep.surface().rank(); ++g) {
    auto const& m = std::get<MoebiusElement>(rep.image(g));
    auto count = m.fixed_point_count();
    if (count && *count > 2) {
      throw InvalidInput("generator " + rep.surface().name(g) + " has more than two fixed points");
    }
    fixed.push_back(count ? nlohmann::json(*count) : nlohmann::json("identity"));
  }
  Verdict v = from_cover(rep, classify_cover(rep, options));
  v.theorem_route =
      "suspension: generic leaves are regular covers of the base with deck group the holonomy "
      "image";
  v.evidence["fixed_points"] = fixed;
  v.caveats.push_back("holds for all leaves outside a countable set");
  return v;
}

Verdict classify_representation(Representation const& rep,
                                ClassifyOptions const& options) {
  Verdict v = from_cover(rep, classify_cover(rep, options));
  v.theorem_route = v.evidence.contains("finite_cover")
                        ? "finite deck group: Riemann-Hurwitz"
                        : "infinite deck group: end space and genus class";
  return v;
}

}  // namespace leaftype
