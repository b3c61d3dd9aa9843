#include "leaftype/cayley.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "leaftype/error.hpp"

namespace leaftype {

CayleyBall::CayleyBall(unsigned radius, std::vector<CayleyVertex> vertices,
                       std::vector<CayleyEdge> edges, bool saturated)
    : radius_(radius),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      saturated_(saturated) {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    index_.emplace(vertices_[v].key, v);
    if (vertices_[v].distance == 0) {
      root_ = v;
    }
  }
}

std::optional<std::size_t> CayleyBall::find(std::string const& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

namespace {

CayleyBall breadth_first(Representation const& rep, unsigned radius,
                         std::size_t budget) {
  struct Node {
    Element element;
    unsigned distance;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, std::size_t> seen;

  // Moves: every generator image and its inverse, in generator order.
  std::vector<Element> moves;
  for (auto const& g : rep.images()) {
    moves.push_back(g);
    moves.push_back(inverse(g));
  }

  Element id = rep.identity();
  seen.emplace(element_key(id), 0);
  nodes.push_back({id, 0});
  std::size_t frontier_begin = 0;
  bool saturated = false;
  for (unsigned d = 0; d < radius; ++d) {
    std::size_t frontier_end = nodes.size();
    if (frontier_begin == frontier_end) {
      saturated = true;
      break;
    }
    for (std::size_t v = frontier_begin; v < frontier_end; ++v) {
      for (auto const& g : moves) {
        Element next = compose(g, nodes[v].element);
        std::string k = element_key(next);
        if (seen.contains(k)) {
          continue;
        }
        if (nodes.size() >= budget) {
          throw BudgetExceeded("Cayley ball of radius " + std::to_string(radius) +
                                   " exceeds the vertex budget",
                               budget);
        }
        seen.emplace(std::move(k), nodes.size());
        nodes.push_back({std::move(next), d + 1});
      }
    }
    frontier_begin = frontier_end;
  }
  if (!saturated && frontier_begin == nodes.size()) {
    saturated = true;
  }
  if (!saturated) {
    // The last layer may still close the group: check whether it has
    // unseen neighbours.
    saturated = true;
    for (std::size_t v = frontier_begin; v < nodes.size() && saturated; ++v) {
      for (auto const& g : moves) {
        if (!seen.contains(element_key(compose(g, nodes[v].element)))) {
          saturated = false;
          break;
        }
      }
    }
  }

  std::vector<CayleyVertex> vertices;
  vertices.reserve(nodes.size());
  for (auto& n : nodes) {
    vertices.push_back({element_key(n.element), n.element, n.distance});
  }
  std::sort(vertices.begin(), vertices.end(),
            [](CayleyVertex const& x, CayleyVertex const& y) { return x.key < y.key; });
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    index.emplace(vertices[v].key, v);
  }

  std::vector<CayleyEdge> edges;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (GeneratorId gen = 0; gen < rep.images().size(); ++gen) {
      auto it = index.find(element_key(compose(rep.image(gen), vertices[v].element)));
      if (it != index.end()) {
        edges.push_back({v, gen, it->second});
      }
    }
  }
  return CayleyBall(radius, std::move(vertices), std::move(edges), saturated);
}

}  // namespace

CayleyBall build_ball(Representation const& rep, unsigned radius, std::size_t vertex_budget) {
  return breadth_first(rep, radius, vertex_budget);
}

CayleyBall build_group(Representation const& rep, std::size_t vertex_budget) {
  CayleyBall ball = breadth_first(rep, std::numeric_limits<unsigned>::max(), vertex_budget);
  unsigned depth = 0;
  for (auto const& v : ball.vertices()) {
    depth = std::max(depth, v.distance);
  }
  return CayleyBall(depth, ball.vertices(), ball.edges(), true);
}

std::string export_dot(CayleyBall const& ball, SurfacePresentation const& surface) {
  std::ostringstream os;
  os << "digraph cayley_ball {\n";
  os << "  // radius " << ball.radius() << ", " << ball.size() << " vertices, "
     << ball.edges().size() << " edges\n";
  for (std::size_t v = 0; v < ball.size(); ++v) {
    os << "  v" << v << " [label=\"" << ball.vertices()[v].distance << "\"";
    if (v == ball.root()) {
      os << ", shape=doublecircle";
    }
    os << "];\n";
  }
  for (auto const& e : ball.edges()) {
    os << "  v" << e.source << " -> v" << e.target << " [label=\""
       << surface.name(e.generator) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json ball_to_json(CayleyBall const& ball, SurfacePresentation const& surface,
                            SymbolTable const& symbols) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t v = 0; v < ball.size(); ++v) {
    auto const& x = ball.vertices()[v];
    vertices.push_back({{"id", v},
                        {"key", x.key},
                        {"element", element_to_string(x.element, symbols)},
                        {"distance", x.distance}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (auto const& e : ball.edges()) {
    edges.push_back(
        {{"source", e.source}, {"generator", surface.name(e.generator)}, {"target", e.target}});
  }
  return {{"radius", ball.radius()},
          {"root", ball.root()},
          {"saturated", ball.saturated()},
          {"vertex_count", ball.size()},
          {"edge_count", ball.edges().size()},
          {"vertices", vertices},
          {"edges", edges}};
}

}  // namespace leaftype
