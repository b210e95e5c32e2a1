#include "vknot/invariants.hpp"

#include "vknot/errors.hpp"

namespace vknot {

namespace {

IndexPolynomial polynomial_from_weights(const std::vector<CrossingWeight>& weights) {
  IndexPolynomial p;
  for (const auto& w : weights) {
    p.add_term(w.weight, w.sign);
    p.add_term(AffineExponent{}, -w.sign);
  }
  return p;
}

WritheSpectrum spectrum_from_weights(const std::vector<CrossingWeight>& weights) {
  WritheSpectrum s;
  for (const auto& w : weights) {
    if (!w.weight.is_constant())
      fail("bad_argument", "spectrum requires integer weights; pin the labeling");
    if (w.weight.constant == 0) {
      s.wr0 += w.sign;
    } else {
      s.counts[w.weight.constant] += w.sign;
      if (s.counts[w.weight.constant] == 0) s.counts.erase(w.weight.constant);
    }
  }
  return s;
}

}  // namespace

IndexPolynomial affine_index_polynomial(const Diagram& d) {
  return polynomial_from_weights(crossing_weights(d, compute_labeling(d)));
}

IndexPolynomial affine_index_polynomial_pinned(const Diagram& d,
                                               const std::vector<long long>& bases) {
  return polynomial_from_weights(
      crossing_weights(d, compute_labeling_pinned(d, bases)));
}

int writhe(const Diagram& d) {
  int total = 0;
  for (const auto& [id, site] : crossing_index(d)) total += site.sign;
  return total;
}

int odd_writhe(const Diagram& d) {
  if (!d.is_knot())
    fail("multi_component", "odd writhe is defined for knots only");
  int total = 0;
  for (const auto& [id, site] : crossing_index(d))
    if (crossing_parity(d, id) == Parity::Odd) total += site.sign;
  return total;
}

WritheSpectrum wr_spectrum(const Diagram& d) {
  if (!d.is_knot())
    fail("bad_argument", "use wr_spectrum_pinned for multi-component diagrams");
  return spectrum_from_weights(crossing_weights(d, compute_labeling(d)));
}

WritheSpectrum wr_spectrum_pinned(const Diagram& d,
                                  const std::vector<long long>& bases) {
  return spectrum_from_weights(
      crossing_weights(d, compute_labeling_pinned(d, bases)));
}

FlatPolynomial flat_affine_polynomial(const FlatDiagram& f) {
  if (f.components.size() != 1)
    fail("multi_component", "flat polynomial is defined for knots only");
  const auto& comp = f.components[0];
  int k = static_cast<int>(comp.size());
  // Label after each flat passage, starting from 0 on the arc entering
  // passage 0.
  std::vector<long long> labels(k);
  long long cur = 0;
  for (int p = 0; p < k; ++p) {
    cur += comp[p].chirality == Chirality::LeftIncoming ? -1 : +1;
    labels[p] = cur;
  }
  std::map<int, std::pair<int, int>> sides;  // crossing -> (left pos, right pos)
  for (int p = 0; p < k; ++p) {
    auto& entry = sides[comp[p].crossing];
    if (comp[p].chirality == Chirality::LeftIncoming)
      entry.first = p;
    else
      entry.second = p;
  }
  FlatPolynomial out;
  auto in_label = [&](int p) { return labels[(p + k - 1) % k]; };
  for (const auto& [id, lr] : sides) {
    long long w = in_label(lr.first) - in_label(lr.second) - 1;
    out.toggle(w < 0 ? -w : w);
    out.toggle(0);
  }
  return out;
}

namespace {

InvariantReport build_report(const Diagram& d, const AffineLabeling* labeling) {
  InvariantReport r;
  auto compat = is_compatible(d);
  r.compatible = compat.compatible;
  r.defects = std::move(compat.defects);
  r.writhe = writhe(d);
  if (!r.compatible) return r;  // no labeling, no weights
  r.weights = crossing_weights(d, labeling ? *labeling : compute_labeling(d));
  r.polynomial = polynomial_from_weights(r.weights);
  bool integer_weights = true;
  for (const auto& w : r.weights)
    if (!w.weight.is_constant()) integer_weights = false;
  if (integer_weights) r.spectrum = spectrum_from_weights(r.weights);
  if (d.is_knot()) {
    r.odd_writhe = odd_writhe(d);
    r.flat_polynomial = flat_affine_polynomial(flatten(d));
  }
  return r;
}

}  // namespace

InvariantReport compute_invariants(const Diagram& d) {
  return build_report(d, nullptr);
}

InvariantReport compute_invariants_pinned(const Diagram& d,
                                          const std::vector<long long>& bases) {
  auto labeling = compute_labeling_pinned(d, bases);
  return build_report(d, &labeling);
}

}  // namespace vknot
