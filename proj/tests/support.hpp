#pragma once

#include <string>
#include <vector>

#include "leaftype/config.hpp"
#include "leaftype/glued_surface.hpp"

namespace testing {

using namespace leaftype;

inline Representation circle_rep(unsigned g, unsigned n, std::vector<std::string> const& exps,
                                 SymbolTable const& symbols) {
  std::vector<Element> images;
  for (auto const& e : exps) {
    images.emplace_back(CircleElement(parse_exponent(e, symbols)));
  }
  return Representation(SurfacePresentation(g, n), std::move(images));
}

inline MoebiusElement mat(GaussianRational a, GaussianRational b, GaussianRational c,
                          GaussianRational d) {
  return MoebiusElement(std::move(a), std::move(b), std::move(c), std::move(d));
}

// Two parabolics generating a free group (|x| >= 2) on a1, a2; everything
// else trivial.
inline Representation free_parabolic_rep(unsigned genus, int x = 2) {
  SurfacePresentation s(genus, 0);
  std::vector<Element> images(s.rank(), MoebiusElement());
  images[s.a(1)] = mat(1, x, 0, 1);
  images[s.a(2)] = mat(1, 0, x, 1);
  return Representation(s, std::move(images));
}

// z -> z + 1 on a1 of a genus-2 surface.
inline Representation translation_rep() {
  SurfacePresentation s(2, 0);
  std::vector<Element> images(s.rank(), MoebiusElement());
  images[s.a(1)] = mat(1, 1, 0, 1);
  return Representation(s, std::move(images));
}

inline std::string config_path(std::string const& name) {
  return std::string(LEAFTYPE_CONFIG_DIR) + "/" + name;
}

}  // namespace testing
