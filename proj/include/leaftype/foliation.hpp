#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leaftype/ends.hpp"

namespace leaftype {

// Result shared by all front-ends. `theorem_route` names the rule applied;
// `evidence` holds only what was computed.
struct Verdict {
  std::optional<std::string> label;
  std::string theorem_route;
  nlohmann::json evidence = nlohmann::json::object();
  std::vector<std::string> caveats;
  bool budget_limited = false;  // an unlabeled verdict caused by the budget
};

nlohmann::json to_json(Verdict const& v);

enum class ResidueMode { proportional, explicit_ratios };

struct LogComponent {
  unsigned degree;
  ExponentScalar residue;  // proportional mode: the coefficient r_j
};

// Closed logarithmic 1-form sum_j lambda_j dF_j / F_j on the projective
// plane. Components are numbered from 1.
struct LogFoliationSpec {
  std::vector<LogComponent> components;
  ResidueMode mode = ResidueMode::proportional;
  bool normal_crossing = false;
  // Assertion that no ratio lambda_k / lambda_j is a negative real; consulted
  // only for ratios the arithmetic cannot decide.
  bool ratios_not_negative_real = false;
  // explicit_ratios: base j -> (k -> lambda_k / lambda_j).
  std::map<std::size_t, std::map<std::size_t, ExponentScalar>> ratios;
  // Override of the crossing counts d_j * d_k: base j -> (k -> points).
  std::map<std::size_t, std::map<std::size_t, unsigned>> crossings;
};

struct GenericityReport {
  std::vector<std::string> notes;
  std::optional<std::string> failure;  // a negative real ratio
};

// Throws InvalidInput when sum d_j lambda_j != 0, a residue vanishes or there
// are fewer than two components.
GenericityReport validate_log_spec(LogFoliationSpec const& spec, SymbolTable const& symbols);

// Circle holonomy of D_j minus its crossing points: genus (d-1)(d-2)/2, one
// puncture per crossing with D_k carrying exponent lambda_k / lambda_j, and
// trivial handle holonomy.
Representation component_holonomy(LogFoliationSpec const& spec, std::size_t j);

Verdict classify_logarithmic(LogFoliationSpec const& spec, SymbolTable const& symbols,
                             ClassifyOptions const& options = {});

// Homogeneous foliation with Camacho-Sad exponents eta_1..eta_n.
Representation homogeneous_holonomy(std::vector<ExponentScalar> const& exponents);
Verdict classify_homogeneous(std::vector<ExponentScalar> const& exponents,
                             SymbolTable const& symbols, ClassifyOptions const& options = {});

// Suspension of a Moebius representation.
Verdict classify_riccati(Representation const& rep,
                         ClassifyOptions const& options = {});

// Plain regular cover.
Verdict classify_representation(Representation const& rep,
                                ClassifyOptions const& options = {});

}  // namespace leaftype
