#include "vknot/labeling.hpp"

#include "vknot/errors.hpp"

namespace vknot {

AffineExponent label_difference(const AffineLabel& a, const AffineLabel& b) {
  if (a.pinned() != b.pinned())
    fail("bad_argument", "labels from different labeling modes are not comparable");
  AffineExponent e;
  e.constant = a.offset - b.offset;
  if (!a.pinned()) {
    // Component 0 is the gauge and drops out.
    if (*a.base != 0) e.add_var(*a.base, +1);
    if (*b.base != 0) e.add_var(*b.base, -1);
  }
  return e;
}

CompatibilityReport is_compatible(const Diagram& d) {
  CompatibilityReport report;
  report.defects.reserve(d.components.size());
  for (const auto& comp : d.components) {
    long long net = 0;
    for (const auto& p : comp) net += label_delta(p);
    report.defects.push_back(net);
    if (net != 0) report.compatible = false;
  }
  return report;
}

namespace {

AffineLabeling traverse(const Diagram& d, bool symbolic,
                        const std::vector<long long>& bases) {
  AffineLabeling out;
  out.symbolic = symbolic;
  out.labels.resize(d.components.size());
  for (int c = 0; c < d.component_count(); ++c) {
    AffineLabel base;
    if (symbolic)
      base = {c, 0};
    else
      base = {std::nullopt, bases[c]};
    const auto& comp = d.components[c];
    if (comp.empty()) {
      out.labels[c] = {base};
      continue;
    }
    // The arc entering passage 0 carries the base label.
    AffineLabel cur = base;
    out.labels[c].reserve(comp.size());
    for (const auto& p : comp) {
      cur = cur.shifted(label_delta(p));
      out.labels[c].push_back(cur);
    }
    if (cur != base)
      fail("incompatible_link",
           "component " + std::to_string(c) + " fails to close (net delta " +
               std::to_string(cur.offset - base.offset) + ")");
  }
  return out;
}

}  // namespace

AffineLabeling compute_labeling(const Diagram& d) {
  return traverse(d, true, {});
}

AffineLabeling compute_labeling_pinned(const Diagram& d,
                                       const std::vector<long long>& bases) {
  if (bases.size() != d.components.size())
    fail("bad_argument", "expected " + std::to_string(d.components.size()) +
                             " pinned bases, got " + std::to_string(bases.size()));
  return traverse(d, false, bases);
}

void validate_labeling(const Diagram& d, const AffineLabeling& labeling) {
  if (labeling.labels.size() != d.components.size())
    fail("bad_argument", "labeling has wrong component count");
  for (int c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.components[c];
    const auto& labels = labeling.labels[c];
    if (labels.size() != std::max<std::size_t>(comp.size(), 1))
      fail("bad_argument", "labeling has wrong arc count on component " +
                               std::to_string(c));
    for (const auto& label : labels)
      if (label.pinned() == labeling.symbolic)
        fail("bad_argument", "labeling mixes pinned and symbolic labels");
    for (int p = 0; p < static_cast<int>(comp.size()); ++p) {
      AffineLabel expect = labeling.in_label(c, p).shifted(label_delta(comp[p]));
      if (!(expect == labels[p]))
        fail("bad_argument", "labeling violates the crossing rule at component " +
                                 std::to_string(c) + " position " +
                                 std::to_string(p));
    }
  }
}

std::vector<CrossingWeight> crossing_weights(const Diagram& d,
                                             const AffineLabeling& labeling) {
  std::vector<CrossingWeight> out;
  for (const auto& [id, site] : crossing_index(d)) {
    CrossingWeight w;
    w.crossing = id;
    w.sign = site.sign;
    const AffineLabel& over_in = labeling.in_label(site.over.component, site.over.position);
    const AffineLabel& under_in = labeling.in_label(site.under.component, site.under.position);
    w.weight = label_difference(over_in, under_in);
    w.weight.constant -= site.sign;
    if (site.over.component == site.under.component &&
        d.components[site.over.component].size() % 2 == 0)
      w.parity = crossing_parity(d, id);
    out.push_back(std::move(w));
  }
  return out;
}

Parity crossing_parity(const Diagram& d, int crossing) {
  auto index = crossing_index(d);
  auto it = index.find(crossing);
  if (it == index.end())
    fail("unknown_crossing", "no crossing " + std::to_string(crossing));
  const CrossingSite& site = it->second;
  if (site.over.component != site.under.component)
    fail("crossing_spans_components",
         "crossing " + std::to_string(crossing) + " spans two components");
  int k = static_cast<int>(d.components[site.over.component].size());
  int between = (site.under.position - site.over.position - 1 + 2 * k) % k;
  return between % 2 == 1 ? Parity::Odd : Parity::Even;
}

}  // namespace vknot
