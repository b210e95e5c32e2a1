#pragma once

#include <map>
#include <optional>
#include <vector>

#include "vknot/diagram.hpp"
#include "vknot/labeling.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

// P(d) = sum over crossings of sgn(c) * (t^W(c) - 1), computed from the
// symbolic labeling. Throws Error("incompatible_link") on unlabelable links.
IndexPolynomial affine_index_polynomial(const Diagram& d);

// Same with an explicit pinned labeling (one integer base per component).
IndexPolynomial affine_index_polynomial_pinned(const Diagram& d,
                                               const std::vector<long long>& bases);

// Sum of crossing signs.
int writhe(const Diagram& d);

// Sum of signs over odd-parity crossings; knots only.
int odd_writhe(const Diagram& d);

struct WritheSpectrum {
  std::map<long long, long long> counts;  // n != 0 -> signed crossing count
  long long wr0 = 0;                      // weight-0 signed count; not an invariant
};

// Signed crossing counts by integer weight. Defined for knots (symbolic
// weights are integers) and for links with a pinned labeling.
WritheSpectrum wr_spectrum(const Diagram& d);
WritheSpectrum wr_spectrum_pinned(const Diagram& d,
                                  const std::vector<long long>& bases);

// GF(2) sum of t^|W(c)| + 1 over the flat crossings; single component only.
FlatPolynomial flat_affine_polynomial(const FlatDiagram& f);

// Everything the CLI reports for one diagram. Spectrum and the knot-only
// fields are absent when undefined.
struct InvariantReport {
  bool compatible = true;
  std::vector<long long> defects;
  int writhe = 0;
  IndexPolynomial polynomial;
  std::vector<CrossingWeight> weights;
  std::optional<int> odd_writhe;
  std::optional<WritheSpectrum> spectrum;
  std::optional<FlatPolynomial> flat_polynomial;
};

InvariantReport compute_invariants(const Diagram& d);
InvariantReport compute_invariants_pinned(const Diagram& d,
                                          const std::vector<long long>& bases);

}  // namespace vknot
