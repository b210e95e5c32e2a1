#pragma once

#include "vknot/diagram.hpp"

namespace vknot {

// Orientation reversal: every component's cyclic sequence reversed, roles and
// signs unchanged.
Diagram reverse(const Diagram& d);

// Flat mirror: every crossing switched (roles swapped, sign flipped).
Diagram switch_all(const Diagram& d);

// Switch a single crossing. Throws Error("unknown_crossing").
Diagram switch_crossing(const Diagram& d, int crossing);

// Vertical mirror: reversal plus a global sign flip, roles unchanged.
Diagram vertical_mirror(const Diagram& d);

// Splice two knots at the chosen arcs; crossing ids of k2 are shifted past
// those of k1. Both diagrams must be single-component.
Diagram connected_sum(const Diagram& k1, ArcRef a1, const Diagram& k2, ArcRef a2);

}  // namespace vknot
