#include "leaftype/glued_surface.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "leaftype/error.hpp"

namespace leaftype {

FundamentalDomainTemplate::FundamentalDomainTemplate(SurfacePresentation const& surface) {
  for (unsigned i = 1; i <= surface.genus(); ++i) {
    GeneratorId a = surface.a(i);
    GeneratorId b = surface.b(i);
    slots_.push_back({SlotKind::handle, a, +1});
    slots_.push_back({SlotKind::handle, b, +1});
    slots_.push_back({SlotKind::handle, a, -1});
    slots_.push_back({SlotKind::handle, b, -1});
  }
  for (unsigned j = 1; j <= surface.punctures(); ++j) {
    GeneratorId c = surface.c(j);
    slots_.push_back({SlotKind::slit, c, +1});
    slots_.push_back({SlotKind::arc, c, +1});
    slots_.push_back({SlotKind::slit, c, -1});
  }
}

std::uint32_t FundamentalDomainTemplate::slot_of(GeneratorId gen, int sign) const {
  for (std::uint32_t k = 0; k < slots_.size(); ++k) {
    if (slots_[k].kind != SlotKind::arc && slots_[k].label == gen && slots_[k].sign == sign) {
      return k;
    }
  }
  throw InvalidInput("no template slot for generator " + std::to_string(gen));
}

int crossing_exponent(TemplateSlot const& slot) {
  if (slot.kind == SlotKind::arc) {
    throw InvalidInput("boundary arcs are never crossed");
  }
  bool b_edge = slot.kind == SlotKind::handle && slot.label % 2 == 1;
  int forward_sign = b_edge ? +1 : -1;
  return slot.sign == forward_sign ? +1 : -1;
}

// ---------------------------------------------------------------- GluedSurface

GluedSurface::GluedSurface(FundamentalDomainTemplate tmpl, std::size_t faces)
    : template_(std::move(tmpl)),
      faces_(faces),
      partner_(faces * template_.size()),
      parent_(faces * template_.size()),
      vertices_(static_cast<long>(faces * template_.size())),
      edges_(static_cast<long>(faces * template_.size())) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t GluedSurface::find(std::size_t x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void GluedSurface::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x != y) {
    parent_[std::max(x, y)] = std::min(x, y);
    --vertices_;
  }
}

void GluedSurface::glue(SlotRef x, SlotRef y) {
  auto const& sx = template_.slots()[x.slot];
  auto const& sy = template_.slots()[y.slot];
  if (sx.kind == SlotKind::arc || sy.kind == SlotKind::arc || sx.label != sy.label ||
      sx.sign == sy.sign) {
    throw InternalError("gluing incompatible slots");
  }
  if (partner_[flat(x)] || partner_[flat(y)] || x == y) {
    throw InternalError("slot glued twice");
  }
  partner_[flat(x)] = y;
  partner_[flat(y)] = x;
  --edges_;
  // The start of either occurrence meets the end of the other.
  unite(corner(x.face, x.slot), corner(y.face, y.slot + 1));
  unite(corner(x.face, x.slot + 1), corner(y.face, y.slot));
}

std::optional<std::size_t> GluedSurface::rotate(std::size_t c) const {
  auto p = partner_[c];  // corner c is the start of slot c
  if (!p) {
    return std::nullopt;
  }
  return corner(p->face, p->slot + 1);
}

std::optional<std::size_t> GluedSurface::rotate_back(std::size_t c) const {
  std::size_t L = template_.size();
  std::size_t face = c / L;
  std::size_t k = c % L;
  auto p = partner_[corner(face, k + L - 1)];  // corner c is the end of slot k-1
  if (!p) {
    return std::nullopt;
  }
  return corner(p->face, p->slot);
}

long GluedSurface::traced_vertices() const {
  std::size_t total = faces_ * template_.size();
  std::vector<bool> seen(total, false);
  long count = 0;
  for (std::size_t c0 = 0; c0 < total; ++c0) {
    if (seen[c0]) {
      continue;
    }
    ++count;
    seen[c0] = true;
    for (auto c = rotate(c0); c && !seen[*c]; c = rotate(*c)) {
      seen[*c] = true;
    }
    for (auto c = rotate_back(c0); c && !seen[*c]; c = rotate_back(*c)) {
      seen[*c] = true;
    }
  }
  return count;
}

long GluedSurface::traced_euler_characteristic() const {
  long glued = 0;
  long free_slots = 0;
  for (auto const& p : partner_) {
    (p ? glued : free_slots) += 1;
  }
  long e = glued / 2 + free_slots;
  return traced_vertices() - e + static_cast<long>(faces_);
}

std::vector<std::vector<SlotRef>> GluedSurface::boundary_components() const {
  std::size_t total = faces_ * template_.size();
  std::vector<bool> seen(total, false);
  std::vector<std::vector<SlotRef>> out;
  for (std::size_t s0 = 0; s0 < total; ++s0) {
    if (partner_[s0] || seen[s0]) {
      continue;
    }
    std::vector<SlotRef> cycle;
    std::size_t s = s0;
    while (!seen[s]) {
      seen[s] = true;
      cycle.push_back(unflat(s));
      // Walk from the end of slot s around the vertex to the next free slot.
      std::size_t c = corner(s / template_.size(), s % template_.size() + 1);
      while (partner_[c]) {
        c = *rotate(c);
      }
      s = c;
    }
    if (s != s0) {
      throw InternalError("boundary walk did not close");
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

bool GluedSurface::connected() const {
  if (faces_ == 0) {
    return false;
  }
  std::vector<bool> seen(faces_, false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!q.empty()) {
    std::size_t f = q.front();
    q.pop();
    for (std::uint32_t k = 0; k < template_.size(); ++k) {
      if (auto p = partner_[flat({f, k})]; p && !seen[p->face]) {
        seen[p->face] = true;
        ++reached;
        q.push(p->face);
      }
    }
  }
  return reached == faces_;
}

bool GluedSurface::orientable() const {
  // Propagate face orientations; gluing opposite-sign occurrences keeps the
  // orientation, equal signs would flip it.
  std::vector<int> orient(faces_, 0);
  for (std::size_t f0 = 0; f0 < faces_; ++f0) {
    if (orient[f0]) {
      continue;
    }
    orient[f0] = 1;
    std::queue<std::size_t> q;
    q.push(f0);
    while (!q.empty()) {
      std::size_t f = q.front();
      q.pop();
      for (std::uint32_t k = 0; k < template_.size(); ++k) {
        auto p = partner_[flat({f, k})];
        if (!p) {
          continue;
        }
        bool same_sign = template_.slots()[k].sign == template_.slots()[p->slot].sign;
        int want = same_sign ? -orient[f] : orient[f];
        if (orient[p->face] == 0) {
          orient[p->face] = want;
          q.push(p->face);
        } else if (orient[p->face] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

long GluedSurface::genus() const {
  if (!connected()) {
    throw InternalError("glued surface is disconnected");
  }
  long twice = 2 - euler_characteristic() - static_cast<long>(boundary_count());
  if (twice < 0 || twice % 2 != 0) {
    throw InternalError("genus is not a non-negative integer");
  }
  return twice / 2;
}

std::size_t GluedSurface::edge_id(SlotRef s) const {
  auto p = partner_[flat(s)];
  return p ? std::min(flat(s), flat(*p)) : flat(s);
}

SurfaceInvariants invariants(GluedSurface const& s, unsigned radius) {
  bool conn = s.connected();
  return {radius,
          s.face_count(),
          s.edges(),
          s.vertices(),
          s.euler_characteristic(),
          s.boundary_count(),
          conn ? s.genus() : -1,
          conn};
}

nlohmann::json to_json(SurfaceInvariants const& inv) {
  return {{"N", inv.radius},
          {"F", inv.faces},
          {"E", inv.edges},
          {"V", inv.vertices},
          {"chi", inv.chi},
          {"boundary_components", inv.boundary_components},
          {"genus", inv.genus},
          {"connected", inv.connected}};
}

// ---------------------------------------------------------------- gluing

GluedSurface glue_ball(Representation const& rep, CayleyBall const& ball) {
  FundamentalDomainTemplate tmpl(rep.surface());
  GluedSurface surface(tmpl, ball.size());
  for (std::size_t v = 0; v < ball.size(); ++v) {
    for (std::uint32_t k = 0; k < tmpl.size(); ++k) {
      auto const& slot = tmpl.slots()[k];
      if (slot.kind == SlotKind::arc || slot.sign < 0) {
        continue;  // each pair is glued from its positive occurrence
      }
      Element g = rep.image(slot.label);
      if (crossing_exponent(slot) < 0) {
        g = inverse(g);
      }
      auto w = ball.find(compose(g, ball.vertices()[v].element));
      if (!w) {
        continue;
      }
      surface.glue({v, k}, {*w, tmpl.slot_of(slot.label, -1)});
    }
  }
  if (!surface.connected()) {
    throw InternalError("glued ball is disconnected");
  }
  return surface;
}

LiftedPath lift_cycle(Representation const& rep, CayleyBall const& ball,
                      GluedSurface const& surface, Word const& w, std::size_t base_face) {
  if (base_face >= ball.size()) {
    throw InvalidInput("base face outside the ball");
  }
  auto const& tmpl = surface.domain();
  LiftedPath path{base_face, {}, base_face, false};
  std::size_t face = base_face;
  for (auto const& letter : w.letters()) {
    // The occurrence with crossing exponent -sign moves v to rho(x)^-sign v.
    std::uint32_t slot = tmpl.slot_of(letter.gen, +1);
    if (crossing_exponent(tmpl.slots()[slot]) != -letter.sign) {
      slot = tmpl.slot_of(letter.gen, -1);
    }
    auto p = surface.partner({face, slot});
    if (!p) {
      path.exits_ball = true;
      path.end_face = face;
      return path;
    }
    path.crossings.push_back({face, slot});
    face = p->face;
  }
  path.end_face = face;
  (void)rep;
  return path;
}

int intersection_number_mod2(GluedSurface const& surface, LiftedPath const& p1,
                             LiftedPath const& p2) {
  if (!p1.closed() || !p2.closed()) {
    throw InvalidInput("intersection numbers need closed paths");
  }
  std::size_t L = surface.slots_per_face();
  std::vector<std::uint8_t> primal(surface.face_count() * L, 0);
  // Push p1 onto the 1-skeleton: from corner 0 of the face left, along its
  // boundary to the crossed edge, then along the next face back to corner 0.
  for (auto const& step : p1.crossings) {
    SlotRef q = *surface.partner(step);
    for (std::uint32_t k = 0; k < step.slot; ++k) {
      primal[surface.edge_id({step.face, k})] ^= 1;
    }
    for (std::uint32_t k = q.slot + 1; k < L; ++k) {
      primal[surface.edge_id({q.face, k})] ^= 1;
    }
  }
  int total = 0;
  for (auto const& step : p2.crossings) {
    total ^= primal[surface.edge_id(step)];
  }
  return total;
}

std::vector<GenusGrowthRow> genus_growth(Representation const& rep,
                                         std::vector<unsigned> const& radii,
                                         std::size_t vertex_budget) {
  for (std::size_t k = 1; k < radii.size(); ++k) {
    if (radii[k] <= radii[k - 1]) {
      throw InvalidInput("radius schedule must be strictly increasing");
    }
  }
  std::vector<GenusGrowthRow> rows;
  for (unsigned n : radii) {
    try {
      CayleyBall ball = build_ball(rep, n, vertex_budget);
      GluedSurface s = glue_ball(rep, ball);
      rows.push_back({n, invariants(s, n), {}});
    } catch (BudgetExceeded const& e) {
      rows.push_back({n, std::nullopt, e.what()});
    }
  }
  return rows;
}

}  // namespace leaftype
