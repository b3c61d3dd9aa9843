#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "leaftype/foliation.hpp"

namespace leaftype {

enum class ConfigKind { logarithmic, homogeneous, riccati, representation };

std::string to_string(ConfigKind k);

// One parsed configuration file. Exactly the member matching `kind` is set
// (riccati and representation both use `representation`).
struct Config {
  ConfigKind kind;
  SymbolTable symbols;
  std::optional<Representation> representation;
  std::optional<LogFoliationSpec> log_spec;
  std::vector<ExponentScalar> exponents;  // homogeneous
  std::size_t component = 1;              // logarithmic: base for ball/surface
};

// Throws InvalidInput; JSON syntax errors carry "line L, column C".
Config parse_config(std::string const& text);
Config load_config(std::filesystem::path const& path);

// The representation that ball and surface commands operate on.
Representation working_representation(Config const& c);

Verdict classify(Config const& c, ClassifyOptions const& options);

}  // namespace leaftype
