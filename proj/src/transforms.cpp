#include "vknot/transforms.hpp"

#include <algorithm>

#include "vknot/errors.hpp"

namespace vknot {

Diagram reverse(const Diagram& d) {
  Diagram out = d;
  for (auto& comp : out.components) std::reverse(comp.begin(), comp.end());
  return out;
}

namespace {

Passage switched(Passage p) {
  p.role = p.role == Role::Over ? Role::Under : Role::Over;
  p.sign = -p.sign;
  return p;
}

}  // namespace

Diagram switch_all(const Diagram& d) {
  Diagram out = d;
  for (auto& comp : out.components)
    for (auto& p : comp) p = switched(p);
  return out;
}

Diagram switch_crossing(const Diagram& d, int crossing) {
  Diagram out = d;
  int hits = 0;
  for (auto& comp : out.components)
    for (auto& p : comp)
      if (p.crossing == crossing) {
        p = switched(p);
        ++hits;
      }
  if (hits != 2)
    fail("unknown_crossing", "no crossing " + std::to_string(crossing));
  return out;
}

Diagram vertical_mirror(const Diagram& d) {
  Diagram out = reverse(d);
  for (auto& comp : out.components)
    for (auto& p : comp) p.sign = -p.sign;
  return out;
}

Diagram connected_sum(const Diagram& k1, ArcRef a1, const Diagram& k2, ArcRef a2) {
  if (!k1.is_knot() || !k2.is_knot())
    fail("multi_component", "connected sum takes two single-component knots");
  if (!arc_valid(k1, a1) || !arc_valid(k2, a2))
    fail("bad_argument", "arc out of range");
  const auto& c1 = k1.components[0];
  const auto& c2 = k2.components[0];
  int offset = k1.max_crossing_id();
  std::vector<Passage> merged;
  merged.reserve(c1.size() + c2.size());
  auto push2 = [&](const Passage& p) {
    merged.push_back({p.crossing + offset, p.role, p.sign});
  };
  if (c1.empty()) {
    for (const auto& p : c2) push2(p);
  } else {
    for (int p = 0; p <= a1.position; ++p) merged.push_back(c1[p]);
    if (!c2.empty()) {
      int k = static_cast<int>(c2.size());
      for (int j = 1; j <= k; ++j) push2(c2[(a2.position + j) % k]);
    }
    for (int p = a1.position + 1; p < static_cast<int>(c1.size()); ++p)
      merged.push_back(c1[p]);
  }
  Diagram out;
  out.components.push_back(std::move(merged));
  validate(out);
  return out;
}

}  // namespace vknot
