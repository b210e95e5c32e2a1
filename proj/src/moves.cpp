#include "vknot/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "vknot/errors.hpp"

namespace vknot {

namespace {

void check_arc(const Diagram& d, ArcRef a) {
  if (!arc_valid(d, a))
    fail("bad_argument", "arc (" + std::to_string(a.component) + "," +
                             std::to_string(a.position) + ") out of range");
}

void insert_after(std::vector<Passage>& comp, int position,
                  const std::vector<Passage>& seq) {
  if (comp.empty()) {
    comp = seq;
    return;
  }
  comp.insert(comp.begin() + position + 1, seq.begin(), seq.end());
}

void erase_positions(Diagram& d, std::vector<ArcRef> positions) {
  std::sort(positions.begin(), positions.end());
  for (auto it = positions.rbegin(); it != positions.rend(); ++it)
    d.components[it->component].erase(d.components[it->component].begin() +
                                      it->position);
}

// Cyclically adjacent passage pair (pos_b follows pos_a) whose passages
// belong to two distinct crossings: the local signature of one strand
// segment through a two-crossing gadget.
struct Window {
  int component = 0;
  int pos_a = 0, pos_b = 0;
  Passage a, b;

  bool overlaps(const Window& o) const {
    if (component != o.component) return false;
    return pos_a == o.pos_a || pos_a == o.pos_b || pos_b == o.pos_a ||
           pos_b == o.pos_b;
  }
  bool has_crossings(int x, int y) const {
    return (a.crossing == x && b.crossing == y) ||
           (a.crossing == y && b.crossing == x);
  }
};

std::vector<Window> adjacent_windows(const Diagram& d) {
  std::vector<Window> out;
  for (int c = 0; c < d.component_count(); ++c) {
    const auto& comp = d.components[c];
    int k = static_cast<int>(comp.size());
    if (k < 2) continue;
    for (int p = 0; p < k; ++p) {
      int q = (p + 1) % k;
      if (comp[p].crossing == comp[q].crossing) continue;
      out.push_back({c, p, q, comp[p], comp[q]});
    }
  }
  return out;
}

}  // namespace

Diagram r1_add(const Diagram& d, ArcRef arc, int sign, R1Order order) {
  check_arc(d, arc);
  if (sign != 1 && sign != -1) fail("bad_argument", "sign must be +1 or -1");
  int id = d.max_crossing_id() + 1;
  std::vector<Passage> seq;
  if (order == R1Order::OverFirst)
    seq = {{id, Role::Over, sign}, {id, Role::Under, sign}};
  else
    seq = {{id, Role::Under, sign}, {id, Role::Over, sign}};
  Diagram out = d;
  insert_after(out.components[arc.component], arc.position, seq);
  validate(out);
  return out;
}

Diagram r1_remove(const Diagram& d, int crossing) {
  auto index = crossing_index(d);
  auto it = index.find(crossing);
  if (it == index.end())
    fail("unknown_crossing", "no crossing " + std::to_string(crossing));
  const CrossingSite& site = it->second;
  if (site.over.component != site.under.component)
    fail("not_a_kink", "crossing " + std::to_string(crossing) +
                           " spans two components");
  int k = static_cast<int>(d.components[site.over.component].size());
  int i = site.over.position, j = site.under.position;
  if ((i + 1) % k != j && (j + 1) % k != i)
    fail("not_a_kink", "crossing " + std::to_string(crossing) +
                           " passages are not adjacent");
  Diagram out = d;
  erase_positions(out, {site.over, site.under});
  validate(out);
  return out;
}

Diagram r2_add(const Diagram& d, ArcRef arc1, ArcRef arc2, R2Variant variant) {
  check_arc(d, arc1);
  check_arc(d, arc2);
  if (arc1 == arc2) fail("same_arc", "the two arcs must be distinct");
  int x = d.max_crossing_id() + 1;
  int y = x + 1;
  // Patterns read off a planar second move with arc1's strand passing over:
  // the pair carries opposite signs, and an antiparallel partner strand meets
  // the crossings in reversed order.
  std::vector<Passage> seq1, seq2;
  if (variant == R2Variant::Parallel) {
    seq1 = {{x, Role::Over, +1}, {y, Role::Over, -1}};
    seq2 = {{x, Role::Under, +1}, {y, Role::Under, -1}};
  } else {
    seq1 = {{x, Role::Over, -1}, {y, Role::Over, +1}};
    seq2 = {{y, Role::Under, +1}, {x, Role::Under, -1}};
  }
  Diagram out = d;
  if (arc1.component == arc2.component) {
    if (arc1.position > arc2.position) {
      insert_after(out.components[arc1.component], arc1.position, seq1);
      insert_after(out.components[arc2.component], arc2.position, seq2);
    } else {
      insert_after(out.components[arc2.component], arc2.position, seq2);
      insert_after(out.components[arc1.component], arc1.position, seq1);
    }
  } else {
    insert_after(out.components[arc1.component], arc1.position, seq1);
    insert_after(out.components[arc2.component], arc2.position, seq2);
  }
  validate(out);
  return out;
}

namespace {

std::optional<std::pair<Window, Window>> find_r2_pattern(
    const std::vector<Window>& windows,
    const std::map<int, CrossingSite>& index, int c1, int c2) {
  auto i1 = index.find(c1), i2 = index.find(c2);
  if (i1 == index.end() || i2 == index.end()) return std::nullopt;
  if (c1 == c2 || i1->second.sign != -i2->second.sign) return std::nullopt;
  std::vector<Window> candidates;
  for (const auto& w : windows)
    if (w.has_crossings(c1, c2) && w.a.role == w.b.role) candidates.push_back(w);
  for (const auto& wo : candidates) {
    if (wo.a.role != Role::Over) continue;
    for (const auto& wu : candidates) {
      if (wu.a.role != Role::Under || wo.overlaps(wu)) continue;
      return std::make_pair(wo, wu);
    }
  }
  return std::nullopt;
}

}  // namespace

Diagram r2_remove(const Diagram& d, int c1, int c2) {
  auto pattern = find_r2_pattern(adjacent_windows(d), crossing_index(d), c1, c2);
  if (!pattern)
    fail("not_an_r2_pair", "crossings " + std::to_string(c1) + " and " +
                               std::to_string(c2) +
                               " do not form a removable pair");
  const auto& [wo, wu] = *pattern;
  Diagram out = d;
  erase_positions(out, {{wo.component, wo.pos_a},
                        {wo.component, wo.pos_b},
                        {wu.component, wu.pos_a},
                        {wu.component, wu.pos_b}});
  validate(out);
  return out;
}

namespace {

struct R3Match {
  Window top, middle, bottom;  // top all-Over, bottom all-Under
  int c_tm = 0, c_tb = 0, c_mb = 0;
};

int shared_crossing(const Window& u, const Window& v) {
  if (u.a.crossing == v.a.crossing || u.a.crossing == v.b.crossing)
    return u.a.crossing;
  return u.b.crossing;
}

// A triple of pairwise-adjacent strand segments is a third-move site when one
// segment is over at both its crossings, one under at both, and the passage
// orders and crossing signs match a planar triangle. Writing b, m, t for the
// order bits (1 when the window lists the later crossing first) and s for the
// sign-positive bits, a triangle with the sliding strand under both others
// satisfies either
//   m^b == s_mb, t^b == s_tb, t^m == s_tm     (crossing layout A)
// or the negation of all three                 (crossing layout B).
bool r3_parities_ok(const R3Match& m, int sign_mb, int sign_tb, int sign_tm) {
  int bit_b = m.bottom.a.crossing == m.c_mb ? 0 : 1;
  int bit_m = m.middle.a.crossing == m.c_mb ? 0 : 1;
  int bit_t = m.top.a.crossing == m.c_tb ? 0 : 1;
  int s1 = sign_mb > 0 ? 1 : 0;
  int s2 = sign_tb > 0 ? 1 : 0;
  int s3 = sign_tm > 0 ? 1 : 0;
  bool layout_a = ((bit_m ^ bit_b) == s1) && ((bit_t ^ bit_b) == s2) &&
                  ((bit_t ^ bit_m) == s3);
  bool layout_b = ((bit_m ^ bit_b) == (1 - s1)) && ((bit_t ^ bit_b) == (1 - s2)) &&
                  ((bit_t ^ bit_m) == (1 - s3));
  return layout_a || layout_b;
}

std::optional<R3Match> match_r3_triple(const std::vector<Window>& all_windows,
                                       std::map<int, CrossingSite>& index,
                                       int c1, int c2, int c3) {
  if (c1 == c2 || c1 == c3 || c2 == c3) return std::nullopt;
  if (!index.count(c1) || !index.count(c2) || !index.count(c3))
    return std::nullopt;
  std::array<std::pair<int, int>, 3> pairs = {
      std::pair{c1, c2}, std::pair{c1, c3}, std::pair{c2, c3}};
  std::array<std::vector<Window>, 3> windows;
  for (const auto& w : all_windows)
    for (int i = 0; i < 3; ++i)
      if (w.has_crossings(pairs[i].first, pairs[i].second))
        windows[i].push_back(w);
  for (const auto& w12 : windows[0]) {
    for (const auto& w13 : windows[1]) {
      if (w12.overlaps(w13)) continue;
      for (const auto& w23 : windows[2]) {
        if (w12.overlaps(w23) || w13.overlaps(w23)) continue;
        int overs12 = (w12.a.role == Role::Over) + (w12.b.role == Role::Over);
        int overs13 = (w13.a.role == Role::Over) + (w13.b.role == Role::Over);
        int overs23 = (w23.a.role == Role::Over) + (w23.b.role == Role::Over);
        R3Match m;
        if (overs12 == 2)
          m.top = w12;
        else if (overs13 == 2)
          m.top = w13;
        else if (overs23 == 2)
          m.top = w23;
        else
          continue;
        if (overs12 == 0)
          m.bottom = w12;
        else if (overs13 == 0)
          m.bottom = w13;
        else if (overs23 == 0)
          m.bottom = w23;
        else
          continue;
        if (overs12 == 1)
          m.middle = w12;
        else if (overs13 == 1)
          m.middle = w13;
        else
          m.middle = w23;
        m.c_tm = shared_crossing(m.top, m.middle);
        m.c_tb = shared_crossing(m.top, m.bottom);
        m.c_mb = shared_crossing(m.middle, m.bottom);
        if (m.c_tm == m.c_tb || m.c_tm == m.c_mb || m.c_tb == m.c_mb) continue;
        if (r3_parities_ok(m, index[m.c_mb].sign, index[m.c_tb].sign,
                           index[m.c_tm].sign))
          return m;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Diagram r3_apply(const Diagram& d, int c1, int c2, int c3) {
  auto index = crossing_index(d);
  auto match = match_r3_triple(adjacent_windows(d), index, c1, c2, c3);
  if (!match)
    fail("not_an_r3_triangle",
         "crossings " + std::to_string(c1) + ", " + std::to_string(c2) +
             ", " + std::to_string(c3) + " do not form a slide triangle");
  Diagram out = d;
  for (const Window* w : {&match->top, &match->middle, &match->bottom})
    std::swap(out.components[w->component][w->pos_a],
              out.components[w->component][w->pos_b]);
  validate(out);
  return out;
}

namespace {

std::vector<int> kink_sites(const Diagram& d) {
  std::set<int> ids;
  for (const auto& comp : d.components) {
    int k = static_cast<int>(comp.size());
    if (k < 2) continue;
    for (int p = 0; p < k; ++p)
      if (comp[p].crossing == comp[(p + 1) % k].crossing)
        ids.insert(comp[p].crossing);
  }
  return {ids.begin(), ids.end()};
}

std::vector<std::pair<int, int>> r2_removal_sites(
    const std::vector<Window>& windows,
    const std::map<int, CrossingSite>& index) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& w : windows) {
    if (w.a.role != w.b.role) continue;
    int c1 = std::min(w.a.crossing, w.b.crossing);
    int c2 = std::max(w.a.crossing, w.b.crossing);
    if (pairs.count({c1, c2})) continue;
    if (find_r2_pattern(windows, index, c1, c2)) pairs.insert({c1, c2});
  }
  return {pairs.begin(), pairs.end()};
}

std::vector<std::array<int, 3>> r3_sites(const std::vector<Window>& windows,
                                         std::map<int, CrossingSite>& index) {
  std::map<int, std::set<int>> partners;
  for (const auto& w : windows) {
    partners[w.a.crossing].insert(w.b.crossing);
    partners[w.b.crossing].insert(w.a.crossing);
  }
  std::vector<std::array<int, 3>> out;
  for (const auto& [a, pa] : partners) {
    for (int b : pa) {
      if (b <= a) continue;
      for (int c : pa) {
        if (c <= b || !partners[b].count(c)) continue;
        if (match_r3_triple(windows, index, a, b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

MoveSite r1_add_site(const std::vector<ArcRef>& arcs_list, std::uint64_t idx) {
  MoveSite s;
  s.kind = MoveKind::R1Add;
  s.arc1 = arcs_list[idx / 4];
  std::uint64_t v = idx % 4;
  s.sign = v < 2 ? +1 : -1;
  s.order = v % 2 == 0 ? R1Order::OverFirst : R1Order::UnderFirst;
  return s;
}

MoveSite r2_add_site(const std::vector<ArcRef>& arcs_list, std::uint64_t idx) {
  std::uint64_t n = arcs_list.size();
  MoveSite s;
  s.kind = MoveKind::R2Add;
  s.variant = idx % 2 == 0 ? R2Variant::Parallel : R2Variant::Antiparallel;
  std::uint64_t pair = idx / 2;
  std::uint64_t i = pair / (n - 1);
  std::uint64_t j = pair % (n - 1);
  if (j >= i) ++j;
  s.arc1 = arcs_list[i];
  s.arc2 = arcs_list[j];
  return s;
}

}  // namespace

std::vector<MoveSite> enumerate_sites(const Diagram& d) {
  std::vector<MoveSite> out;
  auto windows = adjacent_windows(d);
  auto index = crossing_index(d);
  for (int id : kink_sites(d)) {
    MoveSite s;
    s.kind = MoveKind::R1Remove;
    s.c1 = id;
    out.push_back(s);
  }
  for (auto [c1, c2] : r2_removal_sites(windows, index)) {
    MoveSite s;
    s.kind = MoveKind::R2Remove;
    s.c1 = c1;
    s.c2 = c2;
    out.push_back(s);
  }
  for (auto [a, b, c] : r3_sites(windows, index)) {
    MoveSite s;
    s.kind = MoveKind::R3;
    s.c1 = a;
    s.c2 = b;
    s.c3 = c;
    out.push_back(s);
  }
  auto arcs_list = arcs(d);
  std::uint64_t n = arcs_list.size();
  for (std::uint64_t i = 0; i < n * 4; ++i) out.push_back(r1_add_site(arcs_list, i));
  for (std::uint64_t i = 0; i < n * (n - 1) * 2; ++i)
    out.push_back(r2_add_site(arcs_list, i));
  return out;
}

Diagram apply_site(const Diagram& d, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::R1Add:
      return r1_add(d, site.arc1, site.sign, site.order);
    case MoveKind::R1Remove:
      return r1_remove(d, site.c1);
    case MoveKind::R2Add:
      return r2_add(d, site.arc1, site.arc2, site.variant);
    case MoveKind::R2Remove:
      return r2_remove(d, site.c1, site.c2);
    case MoveKind::R3:
      return r3_apply(d, site.c1, site.c2, site.c3);
  }
  fail("bad_argument", "unknown move kind");
}

ScrambleResult scramble(const Diagram& d, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ScrambleResult result{d, {}};
  result.trace.reserve(n);
  for (int step = 0; step < n; ++step) {
    auto windows = adjacent_windows(result.diagram);
    auto index = crossing_index(result.diagram);
    auto kinks = kink_sites(result.diagram);
    auto pairs = r2_removal_sites(windows, index);
    auto triples = r3_sites(windows, index);
    auto arcs_list = arcs(result.diagram);
    std::uint64_t a = arcs_list.size();
    std::uint64_t counts[5] = {kinks.size(), pairs.size(), triples.size(),
                               a * 4, a * (a - 1) * 2};
    std::uint64_t total = counts[0] + counts[1] + counts[2] + counts[3] + counts[4];
    if (total == 0) fail("bad_argument", "no applicable moves");
    std::uint64_t u = rng() % total;
    MoveSite site;
    if (u < counts[0]) {
      site.kind = MoveKind::R1Remove;
      site.c1 = kinks[u];
    } else if ((u -= counts[0]) < counts[1]) {
      site.kind = MoveKind::R2Remove;
      site.c1 = pairs[u].first;
      site.c2 = pairs[u].second;
    } else if ((u -= counts[1]) < counts[2]) {
      site.kind = MoveKind::R3;
      site.c1 = triples[u][0];
      site.c2 = triples[u][1];
      site.c3 = triples[u][2];
    } else if ((u -= counts[2]) < counts[3]) {
      site = r1_add_site(arcs_list, u);
    } else {
      site = r2_add_site(arcs_list, u - counts[3]);
    }
    result.diagram = apply_site(result.diagram, site);
    result.trace.push_back(site);
  }
  return result;
}

}  // namespace vknot
