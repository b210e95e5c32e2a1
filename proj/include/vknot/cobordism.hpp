#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/labeling.hpp"
#include "vknot/moves.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

// Oriented smoothing: the crossing is removed and the strands reconnect
// in-over -> out-under and in-under -> out-over. The component count changes
// by exactly one (split or merge).
Diagram smooth_crossing(const Diagram& d, int crossing);

struct SeifertStats {
  int n = 0;                 // classical crossings
  int r = 0;                 // circles after smoothing every crossing
  std::optional<int> genus;  // (-r + n + 1) / 2; knots only
};

SeifertStats seifert_stats(const Diagram& d);

struct GenusBounds {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
};

// Upper bound: the Seifert genus. Lower bound 1 when the polynomial is
// nonzero (slice knots have zero polynomial). For positive diagrams (and by
// mirror symmetry all-negative ones) the Seifert genus is exact. Knots only.
GenusBounds four_ball_genus_bounds(const Diagram& d);

struct ReductionResult {
  Diagram diagram;
  AffineLabeling labeling;  // inherited, pinned, valid on the reduced diagram
};

// Smooths every crossing of weight zero in one pass. The inherited labeling
// stays valid, surviving weights are unchanged, and the pinned polynomial is
// preserved. The labeling must be pinned.
ReductionResult null_weight_reduction(const Diagram& d, const AffineLabeling& labeling);

// Cuts both arcs and rejoins respecting orientation: two arcs on one
// component split it, arcs on different components merge them.
// Throws Error("same_arc") when the arcs coincide.
Diagram saddle(const Diagram& d, ArcRef a1, ArcRef a2);

// Appends an isolated crossing-free circle.
Diagram birth(const Diagram& d);

// Removes a crossing-free component.
// Throws Error("component_not_circle") when the component has passages.
Diagram death(const Diagram& d, int component);

// True iff the two arc labels agree; requires a pinned labeling. When true, a
// saddle at these arcs inherits the labeling.
bool labels_equal_at(const Diagram& d, const AffineLabeling& labeling,
                     ArcRef a1, ArcRef a2);

struct BirthEvent {};
struct DeathEvent { int component = 0; };
struct SaddleEvent { ArcRef a1, a2; };
struct IsotopyEvent { std::vector<MoveSite> moves; };
using CobordismEvent = std::variant<BirthEvent, DeathEvent, SaddleEvent, IsotopyEvent>;

// Event list applied in order to the start diagram. Indices refer to the
// running diagram at event time.
struct CobordismTrace {
  Diagram start;
  std::vector<CobordismEvent> events;
};

struct TraceLevel {
  std::string diagram;  // canonical code after the event (index 0 = start)
  int components = 0;
  std::optional<std::string> polynomial;  // symbolic; absent when incompatible
};

struct TraceReport {
  Rational genus;  // (2 - m - (births + deaths - saddles)) / 2
  int births = 0, deaths = 0, saddles = 0;
  bool concordance_candidate = false;  // genus == 0
  // True when every birth is consumed by a later saddle and every death
  // removes a component produced by an earlier saddle.
  bool pairing_ok = true;
  Diagram end;
  std::vector<TraceLevel> levels;
};

// Replays the trace, validating each event.
// Throws Error("inapplicable_event") naming the failing index.
TraceReport replay_trace(const CobordismTrace& trace);

Rational trace_genus(const CobordismTrace& trace);

}  // namespace vknot
