#pragma once

#include <optional>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

enum class Parity { Even, Odd };

// Arc label: either a pinned integer (base absent, value = offset) or a
// symbolic component base x_i plus an integer offset. Labels are comparable
// only within the same mode; a symbolic difference yields an AffineExponent
// with component 0 gauged away.
struct AffineLabel {
  std::optional<int> base;  // component index of the symbolic base variable
  long long offset = 0;

  bool pinned() const { return !base.has_value(); }
  AffineLabel shifted(long long delta) const { return {base, offset + delta}; }

  friend bool operator==(const AffineLabel&, const AffineLabel&) = default;
};

AffineExponent label_difference(const AffineLabel& a, const AffineLabel& b);

// Arc labels of a diagram satisfying the crossing rule: following a component,
// each passage changes the label by label_delta(). labels[c][p] is the label
// of the arc after passage p; an empty component stores its single circle
// label at position 0.
struct AffineLabeling {
  bool symbolic = true;
  std::vector<std::vector<AffineLabel>> labels;

  const AffineLabel& arc_label(ArcRef a) const {
    return labels[a.component][a.position];
  }
  // Label of the arc entering the passage at (component, position).
  const AffineLabel& in_label(int component, int position) const {
    const auto& comp = labels[component];
    return comp[(static_cast<std::size_t>(position) + comp.size() - 1) % comp.size()];
  }
};

struct CompatibilityReport {
  bool compatible = true;
  std::vector<long long> defects;  // per-component net label delta
};

// A multi-component diagram is labelable iff every component's net traversal
// delta vanishes; the defects report each component's net sum.
CompatibilityReport is_compatible(const Diagram& d);

// Symbolic labeling: component i starts from base x_i, with x_0 == 0.
// Throws Error("incompatible_link") naming a component that fails to close.
AffineLabeling compute_labeling(const Diagram& d);

// Pinned labeling: component i starts from the given integer base.
AffineLabeling compute_labeling_pinned(const Diagram& d,
                                       const std::vector<long long>& bases);

// Checks the per-passage delta relation, closure, and mode consistency.
void validate_labeling(const Diagram& d, const AffineLabeling& labeling);

struct CrossingWeight {
  int crossing = 0;
  AffineExponent weight;
  int sign = +1;
  // Interleavement parity; set only for self-crossings of an even-length
  // component (always the case on knots).
  std::optional<Parity> parity;
};

// W(c) = in-label(over passage) - in-label(under passage) - sign(c).
// Self-crossing weights are pure integers; a crossing between components i
// and j carries the symbolic part x_i - x_j.
std::vector<CrossingWeight> crossing_weights(const Diagram& d,
                                             const AffineLabeling& labeling);

// Odd iff the crossing's two passages flank an odd number of passages along
// their component. Throws Error("crossing_spans_components") when the
// passages live on different components.
Parity crossing_parity(const Diagram& d, int crossing);

}  // namespace vknot
