#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "leaftype/targets.hpp"

namespace leaftype {

inline constexpr std::size_t default_vertex_budget = 1'000'000;

struct CayleyVertex {
  std::string key;
  Element element;
  unsigned distance;
};

struct CayleyEdge {
  std::size_t source;  // vertex index
  GeneratorId generator;
  std::size_t target;  // rho(generator) * source
  friend bool operator==(CayleyEdge const&, CayleyEdge const&) = default;
};

// Ball of radius N around the identity in the Cayley graph of the image
// group with respect to the images of all canonical generators. Vertices are
// sorted by key, so vertex 0 is not necessarily the root.
class CayleyBall {
 public:
  CayleyBall(unsigned radius, std::vector<CayleyVertex> vertices,
             std::vector<CayleyEdge> edges, bool saturated);

  unsigned radius() const noexcept { return radius_; }
  std::vector<CayleyVertex> const& vertices() const noexcept { return vertices_; }
  std::vector<CayleyEdge> const& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t root() const noexcept { return root_; }
  // True when the BFS frontier died out: the ball is the whole (finite) group.
  bool saturated() const noexcept { return saturated_; }

  std::optional<std::size_t> find(std::string const& key) const;
  std::optional<std::size_t> find(Element const& e) const { return find(element_key(e)); }

 private:
  unsigned radius_;
  std::vector<CayleyVertex> vertices_;
  std::vector<CayleyEdge> edges_;
  std::size_t root_ = 0;
  bool saturated_;
  std::map<std::string, std::size_t> index_;
};

// Throws BudgetExceeded when the ball would hold more than `vertex_budget`
// vertices.
CayleyBall build_ball(Representation const& rep, unsigned radius,
                      std::size_t vertex_budget = default_vertex_budget);

// Enumerates the whole image group when it has at most `vertex_budget`
// elements; returns a saturated ball, or throws BudgetExceeded.
CayleyBall build_group(Representation const& rep,
                       std::size_t vertex_budget = default_vertex_budget);

std::string export_dot(CayleyBall const& ball, SurfacePresentation const& surface);
nlohmann::json ball_to_json(CayleyBall const& ball, SurfacePresentation const& surface,
                            SymbolTable const& symbols);

}  // namespace leaftype
