#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace vknot {

enum class Role { Over, Under };

// One visit of a strand to a classical crossing. The two passages of a
// crossing share its id and sign and carry opposite roles.
struct Passage {
  int crossing = 0;
  Role role = Role::Over;
  int sign = +1;  // +1 or -1

  friend bool operator==(const Passage&, const Passage&) = default;
};

// Label delta of the calibrated traversal rule: an over-passage decreases the
// arc label by the crossing sign, an under-passage increases it. Everything
// downstream (labelings, weights, chirality) is phrased in terms of this rule.
inline int label_delta(const Passage& p) {
  return p.role == Role::Over ? -p.sign : +p.sign;
}

// The arc that immediately follows the passage at `position` of `component`.
// An empty component (crossing-free circle) has a single whole-circle arc at
// position 0.
struct ArcRef {
  int component = 0;
  int position = 0;

  friend bool operator==(const ArcRef&, const ArcRef&) = default;
  friend auto operator<=>(const ArcRef&, const ArcRef&) = default;
};

// A virtual knot or link as a signed oriented Gauss code: one cyclic passage
// sequence per component. Virtual crossings are not recorded; the code already
// carries all the structure the invariants here need.
struct Diagram {
  std::vector<std::vector<Passage>> components;

  int component_count() const { return static_cast<int>(components.size()); }
  bool is_knot() const { return components.size() == 1; }
  std::size_t passage_count() const;
  int crossing_count() const;
  int max_crossing_id() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;
};

struct CrossingSite {
  ArcRef over;   // location of the Over passage
  ArcRef under;  // location of the Under passage
  int sign = +1;
};

// Locations of both passages of every crossing, keyed by id.
// Assumes a valid diagram.
std::map<int, CrossingSite> crossing_index(const Diagram& d);

// Throws Error("validation_error", ...) naming the offending crossing when a
// crossing id does not occur exactly twice with one Over and one Under role
// and equal signs.
void validate(const Diagram& d);

// Grammar: diagram := component ("|" component)* ; component := passage* ;
// passage := ("O"|"U") positive-integer ("+"|"-"); whitespace ignored.
// Empty component text denotes a crossing-free circle.
Diagram parse(const std::string& text);

// Canonical text: crossings renumbered 1..n in first-visit order, no
// whitespace. parse(serialize(d)) == d up to renumbering.
std::string serialize(const Diagram& d);

std::vector<ArcRef> arcs(const Diagram& d);
bool arc_valid(const Diagram& d, ArcRef a);

enum class Chirality { LeftIncoming, RightIncoming };

struct FlatPassage {
  int crossing = 0;
  Chirality chirality = Chirality::LeftIncoming;

  friend bool operator==(const FlatPassage&, const FlatPassage&) = default;
};

// Projection of a diagram that forgets over/under and signs, keeping only
// which side each strand enters its crossings from.
struct FlatDiagram {
  std::vector<std::vector<FlatPassage>> components;

  friend bool operator==(const FlatDiagram&, const FlatDiagram&) = default;
};

// Chirality is LeftIncoming exactly when the passage's label delta is -1.
FlatDiagram flatten(const Diagram& d);

}  // namespace vknot
