#include "leaftype/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "leaftype/error.hpp"

namespace leaftype {

using nlohmann::json;

std::string to_string(ConfigKind k) {
  switch (k) {
    case ConfigKind::logarithmic:
      return "logarithmic";
    case ConfigKind::homogeneous:
      return "homogeneous";
    case ConfigKind::riccati:
      return "riccati";
    case ConfigKind::representation:
      return "representation";
  }
  return "representation";
}

namespace {

std::string line_column(std::string const& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json const& require(json const& obj, char const* key, std::string const& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InvalidInput(where + ": missing \"" + key + "\"");
  }
  return obj.at(key);
}

template <class T>
T get_as(json const& v, std::string const& where) {
  try {
    return v.get<T>();
  } catch (json::exception const&) {
    throw InvalidInput(where + ": unexpected value " + v.dump());
  }
}

ExponentScalar scalar(json const& v, SymbolTable const& symbols, std::string const& where) {
  if (v.is_number_integer()) {
    return ExponentScalar(Rational(v.get<long long>()));
  }
  if (!v.is_string()) {
    throw InvalidInput(where + ": expected a string expression, got " + v.dump());
  }
  try {
    return parse_exponent(v.get<std::string>(), symbols);
  } catch (InvalidInput const& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

GaussianRational gaussian(json const& v, std::string const& where) {
  auto e = scalar(v, SymbolTable{}, where);
  return {e.re().constant(), e.im().constant()};
}

SurfacePresentation surface_of(json const& root) {
  auto const& s = require(root, "surface", "config");
  return SurfacePresentation(get_as<unsigned>(require(s, "genus", "surface"), "surface.genus"),
                             get_as<unsigned>(require(s, "punctures", "surface"),
                                              "surface.punctures"));
}

Element element_of(json const& v, TargetKind kind, std::size_t degree,
                   SymbolTable const& symbols, std::string const& where) {
  switch (kind) {
    case TargetKind::circle:
      return CircleElement(scalar(v, symbols, where));
    case TargetKind::moebius: {
      if (!v.is_array() || v.size() != 2 || !v[0].is_array() || !v[1].is_array() ||
          v[0].size() != 2 || v[1].size() != 2) {
        throw InvalidInput(where + ": expected [[a, b], [c, d]]");
      }
      return MoebiusElement(gaussian(v[0][0], where), gaussian(v[0][1], where),
                            gaussian(v[1][0], where), gaussian(v[1][1], where));
    }
    case TargetKind::permutation: {
      auto p = get_as<std::vector<std::uint32_t>>(v, where);
      if (p.size() != degree) {
        throw InvalidInput(where + ": permutation of length " + std::to_string(p.size()) +
                           ", degree is " + std::to_string(degree));
      }
      return PermElement(std::move(p));
    }
  }
  throw InvalidInput(where + ": unknown target");
}

Representation representation_of(json const& root, SymbolTable const& symbols,
                                 TargetKind kind) {
  auto surface = surface_of(root);
  std::size_t degree = 1;
  if (kind == TargetKind::permutation) {
    degree = get_as<std::size_t>(require(root, "degree", "config"), "degree");
    if (degree == 0) {
      throw InvalidInput("degree must be positive");
    }
  }
  bool derive = root.value("derive_last_boundary", false);
  json images = root.contains("images") ? root.at("images") : json::object();
  if (!images.is_object()) {
    throw InvalidInput("images: expected an object keyed by generator name");
  }
  for (auto const& [name, _] : images.items()) {
    if (!surface.parse_name(name)) {
      throw InvalidInput("images: unknown generator \"" + name + "\"");
    }
  }
  Element identity = Representation::trivial(surface, kind, degree).identity();
  std::vector<Element> out;
  std::size_t count = surface.rank() - (derive ? 1 : 0);
  if (derive && surface.punctures() == 0) {
    throw InvalidInput("derive_last_boundary needs a puncture");
  }
  for (GeneratorId g = 0; g < surface.rank(); ++g) {
    std::string name = surface.name(g);
    if (g >= count) {
      if (images.contains(name)) {
        throw InvalidInput("images: " + name + " is derived and must not be given");
      }
      continue;
    }
    out.push_back(images.contains(name)
                      ? element_of(images.at(name), kind, degree, symbols, "images." + name)
                      : identity);
  }
  if (derive) {
    return Representation::with_derived_last_boundary(surface, std::move(out));
  }
  return Representation(surface, std::move(out));
}

TargetKind target_of(json const& root) {
  auto t = get_as<std::string>(require(root, "target", "config"), "target");
  if (t == "circle") {
    return TargetKind::circle;
  }
  if (t == "moebius") {
    return TargetKind::moebius;
  }
  if (t == "permutation") {
    return TargetKind::permutation;
  }
  throw InvalidInput("target: expected circle, moebius or permutation, got \"" + t + "\"");
}

std::size_t index_key(std::string const& key, std::size_t count, std::string const& where) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (std::exception const&) {
    pos = 0;
  }
  if (pos != key.size() || v < 1 || v > count) {
    throw InvalidInput(where + ": \"" + key + "\" is not a component number 1.." +
                       std::to_string(count));
  }
  return v;
}

LogFoliationSpec log_spec_of(json const& root, SymbolTable const& symbols) {
  LogFoliationSpec spec;
  auto mode = root.value("mode", std::string("proportional"));
  if (mode == "proportional") {
    spec.mode = ResidueMode::proportional;
  } else if (mode == "explicit_ratios") {
    spec.mode = ResidueMode::explicit_ratios;
  } else {
    throw InvalidInput("mode: expected proportional or explicit_ratios, got \"" + mode + "\"");
  }
  auto const& comps = require(root, "components", "config");
  if (!comps.is_array()) {
    throw InvalidInput("components: expected an array");
  }
  for (std::size_t j = 0; j < comps.size(); ++j) {
    std::string where = "components[" + std::to_string(j) + "]";
    spec.components.push_back(
        {get_as<unsigned>(require(comps[j], "degree", where), where + ".degree"),
         scalar(require(comps[j], "residue", where), symbols, where + ".residue")});
  }
  spec.normal_crossing = root.value("normal_crossing", false);
  spec.ratios_not_negative_real = root.value("ratios_not_negative_real", false);
  std::size_t r = spec.components.size();
  if (root.contains("ratios")) {
    for (auto const& [jk, row] : root.at("ratios").items()) {
      std::size_t j = index_key(jk, r, "ratios");
      for (auto const& [kk, val] : row.items()) {
        std::size_t k = index_key(kk, r, "ratios." + jk);
        spec.ratios[j][k] = scalar(val, symbols, "ratios." + jk + "." + kk);
      }
    }
  }
  if (root.contains("crossings")) {
    for (auto const& [jk, row] : root.at("crossings").items()) {
      std::size_t j = index_key(jk, r, "crossings");
      for (auto const& [kk, val] : row.items()) {
        std::size_t k = index_key(kk, r, "crossings." + jk);
        spec.crossings[j][k] = get_as<unsigned>(val, "crossings." + jk + "." + kk);
      }
    }
  }
  return spec;
}

}  // namespace

Config parse_config(std::string const& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (json::parse_error const& e) {
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) {
      msg = msg.substr(p);
    }
    throw InvalidInput("malformed JSON at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) +
                       ": " + msg);
  }
  if (!root.is_object()) {
    throw InvalidInput("config must be a JSON object");
  }
  Config c{ConfigKind::representation, {}, std::nullopt, std::nullopt, {}, 1};
  for (auto const& name :
       get_as<std::vector<std::string>>(root.value("symbols", json::array()), "symbols")) {
    c.symbols.declare(name);
  }
  auto kind = get_as<std::string>(require(root, "kind", "config"), "kind");
  if (kind == "representation") {
    c.kind = ConfigKind::representation;
    c.representation = representation_of(root, c.symbols, target_of(root));
  } else if (kind == "riccati") {
    c.kind = ConfigKind::riccati;
    c.representation = representation_of(root, c.symbols, TargetKind::moebius);
  } else if (kind == "homogeneous") {
    c.kind = ConfigKind::homogeneous;
    auto const& ex = require(root, "exponents", "config");
    if (!ex.is_array()) {
      throw InvalidInput("exponents: expected an array");
    }
    for (std::size_t j = 0; j < ex.size(); ++j) {
      c.exponents.push_back(scalar(ex[j], c.symbols, "exponents[" + std::to_string(j) + "]"));
    }
  } else if (kind == "logarithmic") {
    c.kind = ConfigKind::logarithmic;
    c.log_spec = log_spec_of(root, c.symbols);
    c.component = root.value("component", std::size_t{1});
  } else {
    throw InvalidInput("kind: expected logarithmic, homogeneous, riccati or representation, got \"" +
                       kind + "\"");
  }
  return c;
}

Config load_config(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidInput("cannot read config " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

Representation working_representation(Config const& c) {
  switch (c.kind) {
    case ConfigKind::representation:
    case ConfigKind::riccati:
      return *c.representation;
    case ConfigKind::homogeneous:
      return homogeneous_holonomy(c.exponents);
    case ConfigKind::logarithmic:
      return component_holonomy(*c.log_spec, c.component);
  }
  throw InvalidInput("unknown config kind");
}

Verdict classify(Config const& c, ClassifyOptions const& options) {
  switch (c.kind) {
    case ConfigKind::representation:
      return classify_representation(*c.representation, options);
    case ConfigKind::riccati:
      return classify_riccati(*c.representation, options);
    case ConfigKind::homogeneous:
      return classify_homogeneous(c.exponents, c.symbols, options);
    case ConfigKind::logarithmic:
      return classify_logarithmic(*c.log_spec, c.symbols, options);
  }
  throw InvalidInput("unknown config kind");
}

}  // namespace leaftype
