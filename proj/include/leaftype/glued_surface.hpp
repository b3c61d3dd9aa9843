#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leaftype/cayley.hpp"

namespace leaftype {

enum class SlotKind { handle, slit, arc };

// One boundary edge of the cut fundamental domain.
struct TemplateSlot {
  SlotKind kind;
  GeneratorId label;  // a_i / b_i for handles, c_j for slits and arcs
  int sign;           // +1: traversed along its orientation, -1: against
};

// The cut domain of Sigma_{g,n}(delta) as a single polygon with boundary word
//   a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1  s1 beta1 s1^-1 ... sn betan sn^-1.
// Slits s_j join the base vertex to the j-th delta-circle; arcs beta_j are
// that circle and are never glued.
class FundamentalDomainTemplate {
 public:
  explicit FundamentalDomainTemplate(SurfacePresentation const& surface);

  std::vector<TemplateSlot> const& slots() const noexcept { return slots_; }
  std::size_t size() const noexcept { return slots_.size(); }
  // Slot carrying label `gen` with the given sign (handles and slits).
  std::uint32_t slot_of(GeneratorId gen, int sign) const;

 private:
  std::vector<TemplateSlot> slots_;
};

struct SlotRef {
  std::size_t face;
  std::uint32_t slot;
  friend bool operator==(SlotRef const&, SlotRef const&) = default;
};

// Combinatorial surface B_{N,delta}: one template copy per ball vertex,
// glued along matching edges whose neighbour lies in the ball.
class GluedSurface {
 public:
  GluedSurface(FundamentalDomainTemplate tmpl, std::size_t faces);

  FundamentalDomainTemplate const& domain() const noexcept { return template_; }
  std::size_t face_count() const noexcept { return faces_; }
  std::size_t slots_per_face() const noexcept { return template_.size(); }

  std::optional<SlotRef> partner(SlotRef s) const { return partner_[flat(s)]; }
  bool is_free(SlotRef s) const { return !partner_[flat(s)].has_value(); }

  // Pairs two slots; updates the incremental vertex/edge counts.
  void glue(SlotRef x, SlotRef y);

  // Incremental bookkeeping (union-find over corners).
  long vertices() const noexcept { return vertices_; }
  long edges() const noexcept { return edges_; }
  long euler_characteristic() const noexcept {
    return vertices_ - edges_ + static_cast<long>(faces_);
  }

  // Independent recount by following corner rotations around each vertex.
  long traced_vertices() const;
  long traced_euler_characteristic() const;

  // Boundary components as cyclic sequences of free slots.
  std::vector<std::vector<SlotRef>> boundary_components() const;
  std::size_t boundary_count() const { return boundary_components().size(); }

  bool connected() const;
  bool orientable() const;
  // (2 - chi - r) / 2; throws InternalError if not a non-negative integer
  // or the surface is disconnected.
  long genus() const;

  // Dense id of the (possibly glued) edge occupying a slot.
  std::size_t edge_id(SlotRef s) const;

 private:
  std::size_t flat(SlotRef s) const { return s.face * template_.size() + s.slot; }
  SlotRef unflat(std::size_t i) const {
    return {i / template_.size(), static_cast<std::uint32_t>(i % template_.size())};
  }
  std::size_t corner(std::size_t face, std::size_t k) const {
    return face * template_.size() + (k % template_.size());
  }
  std::size_t find(std::size_t x) const;
  void unite(std::size_t x, std::size_t y);
  // Corner reached by rotating across the slot that leaves `corner`.
  std::optional<std::size_t> rotate(std::size_t c) const;
  std::optional<std::size_t> rotate_back(std::size_t c) const;

  FundamentalDomainTemplate template_;
  std::size_t faces_;
  std::vector<std::optional<SlotRef>> partner_;
  mutable std::vector<std::size_t> parent_;
  long vertices_;
  long edges_;
};

struct SurfaceInvariants {
  unsigned radius;
  std::size_t faces;
  long edges;
  long vertices;
  long chi;
  std::size_t boundary_components;
  long genus;
  bool connected;
};

SurfaceInvariants invariants(GluedSurface const& s, unsigned radius);
nlohmann::json to_json(SurfaceInvariants const& inv);

// Face reached from face `v` by crossing occurrence `slot`: rho(x)^tau * v
// with tau = +1 on (a_i,-), (b_i,+), (s_j,-) and tau = -1 on their partners.
int crossing_exponent(TemplateSlot const& slot);

// Face index = ball vertex index.
GluedSurface glue_ball(Representation const& rep, CayleyBall const& ball);

// Lift of a word: letter x^e crosses the occurrence leading to rho(x)^-e * v,
// so after w the path sits at rho(w)^-1 * base.
struct LiftedPath {
  std::size_t start_face;
  std::vector<SlotRef> crossings;  // face left and slot crossed, in order
  std::size_t end_face;
  bool exits_ball = false;  // the path hit a free edge
  bool closed() const { return !exits_ball && start_face == end_face; }
};

LiftedPath lift_cycle(Representation const& rep, CayleyBall const& ball,
                      GluedSurface const& surface, Word const& w, std::size_t base_face);

// Z/2 intersection number of two closed lifted paths: the first is pushed
// onto the 1-skeleton, the second is read as its crossing cochain. Throws
// InvalidInput for an open path.
int intersection_number_mod2(GluedSurface const& surface, LiftedPath const& p1,
                             LiftedPath const& p2);

struct GenusGrowthRow {
  unsigned radius;
  std::optional<SurfaceInvariants> invariants;  // empty when over budget
  std::string error;
};

std::vector<GenusGrowthRow> genus_growth(Representation const& rep,
                                         std::vector<unsigned> const& radii,
                                         std::size_t vertex_budget = default_vertex_budget);

}  // namespace leaftype
