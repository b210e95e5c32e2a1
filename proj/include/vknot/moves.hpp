#pragma once

#include <cstdint>
#include <vector>

#include "vknot/diagram.hpp"

namespace vknot {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3 };
enum class R1Order { OverFirst, UnderFirst };
enum class R2Variant { Parallel, Antiparallel };

// One applicable move with its parameters. Only the fields relevant to `kind`
// are meaningful.
struct MoveSite {
  MoveKind kind = MoveKind::R1Add;
  ArcRef arc1{};
  ArcRef arc2{};
  int sign = +1;                           // R1Add
  R1Order order = R1Order::OverFirst;      // R1Add
  R2Variant variant = R2Variant::Parallel; // R2Add
  int c1 = 0, c2 = 0, c3 = 0;              // removals / R3

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

// Kink insertion on an arc; all four (sign, order) variants are legal.
Diagram r1_add(const Diagram& d, ArcRef arc, int sign, R1Order order);

// Removes a crossing whose two passages are cyclically adjacent on one
// component. Throws Error("not_a_kink").
Diagram r1_remove(const Diagram& d, int crossing);

// Pushes the strand at arc1 across the strand at arc2 (arc1's strand ends up
// over at both new crossings). Throws Error("same_arc").
Diagram r2_add(const Diagram& d, ArcRef arc1, ArcRef arc2, R2Variant variant);

// Removes a standard pair: opposite signs, passages pairwise cyclically
// adjacent, one strand over at both crossings and the other under at both.
// Throws Error("not_an_r2_pair").
Diagram r2_remove(const Diagram& d, int c1, int c2);

// Slides a strand across the crossing of the other two: the three adjacent
// passage pairs are each transposed in place. The site must match one of the
// planar-derived oriented patterns (one strand over at both its crossings,
// one under at both, sign/order parities consistent with a planar triangle).
// Throws Error("not_an_r3_triangle"). Applying twice at the same triple is
// the identity.
Diagram r3_apply(const Diagram& d, int c1, int c2, int c3);

// All applicable removal sites and all insertion sites (every arc for R1,
// every ordered arc pair for R2).
std::vector<MoveSite> enumerate_sites(const Diagram& d);

Diagram apply_site(const Diagram& d, const MoveSite& site);

struct ScrambleResult {
  Diagram diagram;
  std::vector<MoveSite> trace;
};

// Applies n moves drawn uniformly from the applicable site set, with a
// generator seeded deterministically: the result depends only on (d, n, seed).
ScrambleResult scramble(const Diagram& d, int n, std::uint64_t seed);

}  // namespace vknot
