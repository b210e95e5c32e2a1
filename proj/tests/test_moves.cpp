#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "vknot/errors.hpp"
#include "vknot/moves.hpp"

using namespace vktest;

namespace {

// Everything a move must leave alone, bundled for before/after comparison.
struct Snapshot {
  bool compatible;
  std::vector<long long> defects;
  IndexPolynomial p;
  std::optional<int> j;
  std::optional<std::map<long long, long long>> spectrum;
};

Snapshot snapshot(const Diagram& d) {
  Snapshot s;
  auto compat = is_compatible(d);
  s.compatible = compat.compatible;
  s.defects = compat.defects;
  if (s.compatible) s.p = P(d);
  if (d.is_knot()) {
    s.j = odd_writhe(d);
    s.spectrum = wr_spectrum(d).counts;
  }
  return s;
}

void check_preserved(const Snapshot& before, const Diagram& after) {
  Snapshot now = snapshot(after);
  CHECK(now.compatible == before.compatible);
  CHECK(now.defects == before.defects);
  if (before.compatible) CHECK(now.p == before.p);
  if (before.j) CHECK(now.j == before.j);
  if (before.spectrum) CHECK(now.spectrum == before.spectrum);
}

std::multiset<AffineExponent> weight_multiset(const Diagram& d) {
  std::multiset<AffineExponent> out;
  for (const auto& w : crossing_weights(d, compute_labeling(d)))
    out.insert(w.weight);
  return out;
}

}  // namespace

TEST_CASE("r1_add on the unknot gives a kink with zero polynomial") {
  Diagram kink = r1_add(parse(""), {0, 0}, +1, R1Order::OverFirst);
  CHECK(serialize(kink) == "O1+U1+");
  CHECK(P(kink).is_zero());
  CHECK(serialize(r1_remove(kink, 1)).empty());
}

TEST_CASE("all four r1 variants insert a weight-zero crossing") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 40; ++i) {
    Diagram d = random_compatible(rng, 8, 2);
    for (ArcRef arc : arcs(d)) {
      for (int sign : {+1, -1}) {
        for (R1Order order : {R1Order::OverFirst, R1Order::UnderFirst}) {
          Snapshot before = snapshot(d);
          Diagram after = r1_add(d, arc, sign, order);
          int id = after.max_crossing_id();
          for (const auto& w : crossing_weights(after, compute_labeling(after)))
            if (w.crossing == id) CHECK(w.weight == AffineExponent{});
          check_preserved(before, after);
          CHECK(writhe(after) == writhe(d) + sign);
          CHECK(r1_remove(after, id) == d);
        }
      }
    }
  }
}

TEST_CASE("r1_remove rejects non-kinks") {
  CHECK_THROWS_AS(r1_remove(dg(kVT), 1), Error);
  CHECK_THROWS_AS(r1_remove(dg(kHopf), 1), Error);
  CHECK_THROWS_AS(r1_remove(dg(kVT), 7), Error);
}

TEST_CASE("r2_add between two circles: compatible two-crossing link, P = 0") {
  Diagram circles = parse("|");
  Diagram link = r2_add(circles, {0, 0}, {1, 0}, R2Variant::Antiparallel);
  CHECK(link.crossing_count() == 2);
  CHECK(is_compatible(link).compatible);
  CHECK(P(link).is_zero());
  CHECK(r2_remove(link, 1, 2) == circles);
}

TEST_CASE("r2_add then r2_remove is the identity") {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 80; ++i) {
    Diagram d = random_compatible(rng, 8, 3);
    auto all = arcs(d);
    ArcRef a1 = all[rand_below(rng, all.size())];
    ArcRef a2 = all[rand_below(rng, all.size())];
    if (a1 == a2) continue;
    auto variant = rng() & 1 ? R2Variant::Parallel : R2Variant::Antiparallel;
    Snapshot before = snapshot(d);
    Diagram after = r2_add(d, a1, a2, variant);
    check_preserved(before, after);
    CHECK(writhe(after) == writhe(d));
    int y = after.max_crossing_id();
    CHECK(r2_remove(after, y - 1, y) == d);
  }
}

TEST_CASE("r2_add rejects the same arc twice") {
  CHECK_THROWS_AS(r2_add(dg(kVT), {0, 1}, {0, 1}, R2Variant::Parallel), Error);
}

TEST_CASE("r2_remove rejects same-sign pairs such as the virtual trefoil") {
  CHECK_THROWS_AS(r2_remove(dg(kVT), 1, 2), Error);
}

TEST_CASE("r3 on a hand-built triangle: invariant, involutive, permutes weights") {
  // one strand over both others, one under both, all crossings negative
  Diagram d = parse("U1-U2-O1-U3-O2-O3-");
  Snapshot before = snapshot(d);
  auto weights_before = weight_multiset(d);
  Diagram after = r3_apply(d, 1, 2, 3);
  CHECK(after != d);
  check_preserved(before, after);
  CHECK(weight_multiset(after) == weights_before);
  CHECK(r3_apply(after, 1, 2, 3) == d);
}

TEST_CASE("r3 rejects triples without the slide pattern") {
  CHECK_THROWS_AS(r3_apply(dg(kCT), 1, 2, 3), Error);
  CHECK_THROWS_AS(r3_apply(dg(kVT), 1, 2, 2), Error);
}

TEST_CASE("enumerate_sites lists the kink removal") {
  Diagram kink = parse("O1+U1+");
  bool found = false;
  for (const auto& site : enumerate_sites(kink))
    if (site.kind == MoveKind::R1Remove && site.c1 == 1) found = true;
  CHECK(found);
}

TEST_CASE("an r2 insertion on the trefoil opens an r3 site") {
  Diagram ct = dg(kCT);
  bool applied = false;
  for (ArcRef a1 : arcs(ct)) {
    for (ArcRef a2 : arcs(ct)) {
      if (a1 == a2) continue;
      for (auto variant : {R2Variant::Parallel, R2Variant::Antiparallel}) {
        Diagram d = r2_add(ct, a1, a2, variant);
        for (const auto& site : enumerate_sites(d)) {
          if (site.kind != MoveKind::R3) continue;
          Snapshot before = snapshot(d);
          auto weights_before = weight_multiset(d);
          Diagram after = r3_apply(d, site.c1, site.c2, site.c3);
          check_preserved(before, after);
          CHECK(weight_multiset(after) == weights_before);
          CHECK(P(after).is_zero());  // still the trefoil
          applied = true;
        }
      }
    }
  }
  CHECK(applied);
}

TEST_CASE("scramble: deterministic, zero moves is the identity") {
  Diagram vt = dg(kVT);
  CHECK(scramble(vt, 0, 99).diagram == vt);
  auto a = scramble(vt, 25, 7);
  auto b = scramble(vt, 25, 7);
  CHECK(a.diagram == b.diagram);
  CHECK(a.trace == b.trace);
  CHECK(a.trace.size() == 25);
  auto c = scramble(vt, 25, 8);
  // a different seed almost surely takes a different path
  CHECK(a.diagram != c.diagram);
}

TEST_CASE("scramble(VT, 50, seed) preserves P, J and the spectrum") {
  Diagram vt = dg(kVT);
  Snapshot before = snapshot(vt);
  for (std::uint64_t seed : {7ULL, 11ULL, 404ULL}) {
    auto result = scramble(vt, 50, seed);
    check_preserved(before, result.diagram);
  }
}

TEST_CASE("moves soundness battery with per-move recheck") {
  std::mt19937_64 rng(63);
  int applied = 0;
  for (int i = 0; i < 40; ++i) {
    Diagram d = random_diagram(rng, 10, 3);
    for (int step = 0; step < 12; ++step) {
      Snapshot before = snapshot(d);
      int before_writhe = writhe(d);
      auto result = scramble(d, 1, rng());
      REQUIRE(result.trace.size() == 1);
      check_preserved(before, result.diagram);
      int delta = writhe(result.diagram) - before_writhe;
      switch (result.trace[0].kind) {
        case MoveKind::R1Add:
        case MoveKind::R1Remove:
          CHECK((delta == 1 || delta == -1));
          break;
        default:
          CHECK(delta == 0);
      }
      d = result.diagram;
      ++applied;
    }
  }
  CHECK(applied == 480);
}
