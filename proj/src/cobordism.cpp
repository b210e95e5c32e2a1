#include "vknot/cobordism.hpp"

#include <algorithm>
#include <numeric>

#include "vknot/errors.hpp"
#include "vknot/invariants.hpp"

namespace vknot {

namespace {

// Passages flattened to global nodes with a successor map; the whole
// smoothing layer is cycle surgery on this map.
struct NodeLayout {
  std::vector<ArcRef> loc;                // node -> (component, position)
  std::vector<std::vector<int>> node_at;  // [component][position] -> node
  std::vector<int> first_node;            // component -> first node index
  std::vector<int> succ;
  std::vector<int> empty_comps;
};

NodeLayout layout(const Diagram& d) {
  NodeLayout nl;
  nl.node_at.resize(d.components.size());
  int next = 0;
  for (int c = 0; c < d.component_count(); ++c) {
    nl.first_node.push_back(next);
    const auto& comp = d.components[c];
    if (comp.empty()) {
      nl.empty_comps.push_back(c);
      continue;
    }
    int first = next;
    for (int p = 0; p < static_cast<int>(comp.size()); ++p) {
      nl.loc.push_back({c, p});
      nl.node_at[c].push_back(next);
      nl.succ.push_back(next + 1);
      ++next;
    }
    nl.succ.back() = first;
  }
  return nl;
}

struct SmoothComp {
  std::vector<int> old_nodes;  // surviving nodes in new cyclic order
  int rep_node = -1;           // node of an all-smoothed cycle (new circle)
  int old_empty = -1;          // pass-through empty component
};

struct SmoothOutcome {
  Diagram diagram;
  std::vector<SmoothComp> comps;
};

// Smooths every listed crossing at once: swap the successors of its two
// passages, then drop both passages. Resulting cycles become the new
// components, ordered by their earliest old node so untouched components
// keep their place.
SmoothOutcome smooth_ids(const Diagram& d, const std::vector<int>& ids) {
  NodeLayout nl = layout(d);
  auto index = crossing_index(d);
  std::vector<char> removed(nl.loc.size(), 0);
  for (int id : ids) {
    auto it = index.find(id);
    if (it == index.end())
      fail("unknown_crossing", "no crossing " + std::to_string(id));
    int p = nl.node_at[it->second.over.component][it->second.over.position];
    int q = nl.node_at[it->second.under.component][it->second.under.position];
    std::swap(nl.succ[p], nl.succ[q]);
    removed[p] = removed[q] = 1;
  }

  struct Keyed {
    long long key;
    int tie;
    SmoothComp comp;
  };
  std::vector<Keyed> pieces;
  std::vector<char> visited(nl.loc.size(), 0);
  for (int start = 0; start < static_cast<int>(nl.loc.size()); ++start) {
    if (visited[start]) continue;
    SmoothComp piece;
    int node = start;
    do {
      visited[node] = 1;
      if (!removed[node]) piece.old_nodes.push_back(node);
      node = nl.succ[node];
    } while (node != start);
    // Order and rotate by the earliest surviving passage so components not
    // touched by the smoothing keep their place and presentation.
    long long anchor;
    if (piece.old_nodes.empty()) {
      piece.rep_node = start;
      anchor = start;
    } else {
      auto min_it =
          std::min_element(piece.old_nodes.begin(), piece.old_nodes.end());
      std::rotate(piece.old_nodes.begin(), min_it, piece.old_nodes.end());
      anchor = piece.old_nodes.front();
    }
    pieces.push_back({2 * anchor + 1, start, std::move(piece)});
  }
  for (int c : nl.empty_comps) {
    SmoothComp piece;
    piece.old_empty = c;
    pieces.push_back({2LL * nl.first_node[c], c, std::move(piece)});
  }
  std::sort(pieces.begin(), pieces.end(), [](const Keyed& a, const Keyed& b) {
    return a.key != b.key ? a.key < b.key : a.tie < b.tie;
  });

  SmoothOutcome out;
  for (auto& piece : pieces) {
    std::vector<Passage> comp;
    comp.reserve(piece.comp.old_nodes.size());
    for (int node : piece.comp.old_nodes) {
      ArcRef at = nl.loc[node];
      comp.push_back(d.components[at.component][at.position]);
    }
    out.diagram.components.push_back(std::move(comp));
    out.comps.push_back(std::move(piece.comp));
  }
  validate(out.diagram);
  return out;
}

}  // namespace

Diagram smooth_crossing(const Diagram& d, int crossing) {
  return smooth_ids(d, {crossing}).diagram;
}

SeifertStats seifert_stats(const Diagram& d) {
  SeifertStats stats;
  stats.n = d.crossing_count();
  std::vector<int> ids;
  for (const auto& [id, site] : crossing_index(d)) ids.push_back(id);
  stats.r = smooth_ids(d, ids).diagram.component_count();
  if (d.is_knot()) {
    int chi = -stats.r + stats.n + 1;
    if (chi % 2 != 0)
      fail("internal_error", "odd Euler count for a knot diagram");
    stats.genus = chi / 2;
  }
  return stats;
}

GenusBounds four_ball_genus_bounds(const Diagram& d) {
  if (!d.is_knot())
    fail("multi_component", "four-ball genus bounds are defined for knots only");
  SeifertStats stats = seifert_stats(d);
  GenusBounds bounds;
  bounds.upper = *stats.genus;
  bounds.lower = affine_index_polynomial(d).is_zero() ? 0 : 1;
  bool all_positive = true, all_negative = true;
  for (const auto& [id, site] : crossing_index(d)) {
    (site.sign > 0 ? all_negative : all_positive) = false;
  }
  if (all_positive || all_negative) {
    bounds.exact = *stats.genus;
    bounds.lower = bounds.upper = *bounds.exact;
  }
  return bounds;
}

ReductionResult null_weight_reduction(const Diagram& d,
                                      const AffineLabeling& labeling) {
  if (labeling.symbolic)
    fail("bad_argument", "null-weight reduction needs a pinned labeling");
  validate_labeling(d, labeling);
  std::vector<int> zero_ids;
  for (const auto& w : crossing_weights(d, labeling))
    if (w.weight == AffineExponent{}) zero_ids.push_back(w.crossing);
  SmoothOutcome outcome = smooth_ids(d, zero_ids);

  ReductionResult result;
  result.diagram = std::move(outcome.diagram);
  result.labeling.symbolic = false;
  for (std::size_t c = 0; c < outcome.comps.size(); ++c) {
    const SmoothComp& piece = outcome.comps[c];
    std::vector<AffineLabel> labels;
    if (piece.old_empty >= 0) {
      labels.push_back(labeling.labels[piece.old_empty][0]);
    } else if (piece.old_nodes.empty()) {
      NodeLayout nl = layout(d);
      labels.push_back(labeling.arc_label(nl.loc[piece.rep_node]));
    } else {
      NodeLayout nl = layout(d);
      labels.reserve(piece.old_nodes.size());
      for (int node : piece.old_nodes)
        labels.push_back(labeling.arc_label(nl.loc[node]));
    }
    result.labeling.labels.push_back(std::move(labels));
  }
  // Smoothing a null-weight crossing fuses equal-label arcs, so the inherited
  // labeling must check out and no null weight can survive.
  validate_labeling(result.diagram, result.labeling);
  for (const auto& w : crossing_weights(result.diagram, result.labeling))
    if (w.weight == AffineExponent{})
      fail("internal_error", "null weight survived reduction");
  return result;
}

Diagram saddle(const Diagram& d, ArcRef a1, ArcRef a2) {
  if (!arc_valid(d, a1) || !arc_valid(d, a2))
    fail("bad_argument", "arc out of range");
  if (a1 == a2) fail("same_arc", "saddle needs two distinct arcs");
  Diagram out = d;
  if (a1.component == a2.component) {
    const auto& comp = d.components[a1.component];
    int k = static_cast<int>(comp.size());
    int x = a1.position, y = a2.position;
    std::vector<Passage> piece1, piece2;
    for (int j = (x + 1) % k; ; j = (j + 1) % k) {
      piece1.push_back(comp[j]);
      if (j == y) break;
    }
    for (int j = (y + 1) % k; ; j = (j + 1) % k) {
      piece2.push_back(comp[j]);
      if (j == x) break;
    }
    out.components[a1.component] = std::move(piece1);
    out.components.push_back(std::move(piece2));
  } else {
    const auto& c1 = d.components[a1.component];
    const auto& c2 = d.components[a2.component];
    std::vector<Passage> merged;
    merged.reserve(c1.size() + c2.size());
    for (int p = 0; p <= a1.position && p < static_cast<int>(c1.size()); ++p)
      merged.push_back(c1[p]);
    if (!c2.empty()) {
      int k = static_cast<int>(c2.size());
      for (int j = 1; j <= k; ++j) merged.push_back(c2[(a2.position + j) % k]);
    }
    for (int p = a1.position + 1; p < static_cast<int>(c1.size()); ++p)
      merged.push_back(c1[p]);
    out.components[a1.component] = std::move(merged);
    out.components.erase(out.components.begin() + a2.component);
  }
  validate(out);
  return out;
}

Diagram birth(const Diagram& d) {
  Diagram out = d;
  out.components.emplace_back();
  return out;
}

Diagram death(const Diagram& d, int component) {
  if (component < 0 || component >= d.component_count())
    fail("bad_argument", "component out of range");
  if (!d.components[component].empty())
    fail("component_not_circle", "component " + std::to_string(component) +
                                     " is not a crossing-free circle");
  Diagram out = d;
  out.components.erase(out.components.begin() + component);
  return out;
}

bool labels_equal_at(const Diagram& d, const AffineLabeling& labeling,
                     ArcRef a1, ArcRef a2) {
  if (labeling.symbolic)
    fail("bad_argument", "label comparison needs a pinned labeling");
  validate_labeling(d, labeling);
  if (!arc_valid(d, a1) || !arc_valid(d, a2))
    fail("bad_argument", "arc out of range");
  return labeling.arc_label(a1) == labeling.arc_label(a2);
}

namespace {

enum class Provenance { Start, Born, SaddleProduct };

std::optional<std::string> try_polynomial(const Diagram& d) {
  try {
    return affine_index_polynomial(d).to_string();
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

TraceReport replay_trace(const CobordismTrace& trace) {
  validate(trace.start);
  TraceReport report;
  Diagram cur = trace.start;
  std::vector<Provenance> prov(cur.components.size(), Provenance::Start);
  int born_open = 0;
  report.levels.push_back(
      {serialize(cur), cur.component_count(), try_polynomial(cur)});
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    try {
      const CobordismEvent& event = trace.events[i];
      if (std::holds_alternative<BirthEvent>(event)) {
        cur = birth(cur);
        prov.push_back(Provenance::Born);
        ++born_open;
        ++report.births;
      } else if (const auto* dth = std::get_if<DeathEvent>(&event)) {
        cur = death(cur, dth->component);
        if (prov[dth->component] != Provenance::SaddleProduct)
          report.pairing_ok = false;
        if (prov[dth->component] == Provenance::Born) --born_open;
        prov.erase(prov.begin() + dth->component);
        ++report.deaths;
      } else if (const auto* sad = std::get_if<SaddleEvent>(&event)) {
        cur = saddle(cur, sad->a1, sad->a2);
        if (sad->a1.component == sad->a2.component) {
          if (prov[sad->a1.component] == Provenance::Born) --born_open;
          prov[sad->a1.component] = Provenance::SaddleProduct;
          prov.push_back(Provenance::SaddleProduct);
        } else {
          for (int c : {sad->a1.component, sad->a2.component})
            if (prov[c] == Provenance::Born) --born_open;
          prov[sad->a1.component] = Provenance::SaddleProduct;
          prov.erase(prov.begin() + sad->a2.component);
        }
        ++report.saddles;
      } else {
        for (const MoveSite& move : std::get<IsotopyEvent>(event).moves)
          cur = apply_site(cur, move);
      }
    } catch (const Error& e) {
      fail("inapplicable_event",
           "event " + std::to_string(i) + ": " + e.what());
    }
    report.levels.push_back(
        {serialize(cur), cur.component_count(), try_polynomial(cur)});
  }
  if (born_open != 0) report.pairing_ok = false;
  int m = trace.start.component_count() + cur.component_count();
  report.genus = Rational(
      2 - m - (report.births + report.deaths - report.saddles), 2);
  report.concordance_candidate = report.genus == Rational(0);
  report.end = std::move(cur);
  return report;
}

Rational trace_genus(const CobordismTrace& trace) {
  return replay_trace(trace).genus;
}

}  // namespace vknot
