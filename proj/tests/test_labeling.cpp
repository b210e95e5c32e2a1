#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "vknot/errors.hpp"

using namespace vktest;

namespace {

long long pinned_value(const AffineLabel& l) {
  REQUIRE(l.pinned());
  return l.offset;
}

std::vector<long long> arc_values(const Diagram& d, int component,
                                  const std::vector<long long>& bases) {
  auto labeling = compute_labeling_pinned(d, bases);
  std::vector<long long> out;
  for (const auto& l : labeling.labels[component]) out.push_back(pinned_value(l));
  return out;
}

}  // namespace

TEST_CASE("virtual trefoil labels, starting from 0") {
  CHECK(arc_values(dg(kVT), 0, {0}) == std::vector<long long>{-1, -2, -1, 0});
}

TEST_CASE("classical trefoil labels") {
  CHECK(arc_values(dg(kCT), 0, {0}) ==
        std::vector<long long>{-1, 0, -1, 0, -1, 0});
}

TEST_CASE("one-crossing virtual Hopf link cannot be labeled") {
  Diagram d = parse("O1+|U1+");
  try {
    compute_labeling(d);
    FAIL("expected incompatible link");
  } catch (const Error& e) {
    CHECK(e.code() == "incompatible_link");
    CHECK(std::string(e.what()).find("component") != std::string::npos);
  }
}

TEST_CASE("compatibility: knots always, Hopf yes, one-crossing no") {
  CHECK(is_compatible(dg(kVT)).compatible);
  CHECK(is_compatible(dg(kHopf)).compatible);
  auto report = is_compatible(parse("O1+|U1+"));
  CHECK_FALSE(report.compatible);
  CHECK(report.defects == std::vector<long long>{-1, 1});
}

TEST_CASE("virtual trefoil weights are {+1, -1}") {
  Diagram d = dg(kVT);
  auto weights = crossing_weights(d, compute_labeling(d));
  REQUIRE(weights.size() == 2);
  CHECK(weights[0].crossing == 1);
  CHECK(weights[0].weight == exponent(1));
  CHECK(weights[0].sign == 1);
  CHECK(weights[1].weight == exponent(-1));
}

TEST_CASE("classical trefoil weights vanish") {
  Diagram d = dg(kCT);
  for (const auto& w : crossing_weights(d, compute_labeling(d)))
    CHECK(w.weight == AffineExponent{});
}

TEST_CASE("Hopf link symbolic weights are N-1 and 1-N") {
  Diagram d = dg(kHopf);
  auto weights = crossing_weights(d, compute_labeling(d));
  AffineExponent nm1;  // N - 1 with N = x_0 - x_1
  nm1.constant = -1;
  nm1.add_var(1, -1);
  CHECK(weights[0].weight == nm1);
  CHECK(weights[1].weight == nm1.negated());
}

TEST_CASE("parity: virtual trefoil odd, classical trefoil even, Hopf spans") {
  CHECK(crossing_parity(dg(kVT), 1) == Parity::Odd);
  CHECK(crossing_parity(dg(kVT), 2) == Parity::Odd);
  CHECK(crossing_parity(dg(kCT), 1) == Parity::Even);
  try {
    crossing_parity(dg(kHopf), 1);
    FAIL("expected crossing_spans_components");
  } catch (const Error& e) {
    CHECK(e.code() == "crossing_spans_components");
  }
}

TEST_CASE("closure holds on random compatible diagrams") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    Diagram d = random_compatible(rng, 10, 3);
    auto labeling = compute_labeling(d);
    validate_labeling(d, labeling);
    std::vector<long long> bases;
    for (int c = 0; c < d.component_count(); ++c)
      bases.push_back(static_cast<long long>(rng() % 11) - 5);
    validate_labeling(d, compute_labeling_pinned(d, bases));
  }
}

TEST_CASE("shift invariance: self weights fixed, cross weights shift by the base") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 60; ++i) {
    Diagram d = random_compatible(rng, 10, 2);
    if (d.component_count() < 2) continue;
    std::vector<long long> bases(d.components.size(), 0);
    auto w0 = crossing_weights(d, compute_labeling_pinned(d, bases));
    long long shift = 1 + static_cast<long long>(rng() % 5);
    bases[1] += shift;
    auto w1 = crossing_weights(d, compute_labeling_pinned(d, bases));
    auto index = crossing_index(d);
    for (std::size_t j = 0; j < w0.size(); ++j) {
      const auto& site = index[w0[j].crossing];
      if (site.over.component == site.under.component) {
        CHECK(w0[j].weight == w1[j].weight);
      } else {
        long long delta = w1[j].weight.constant - w0[j].weight.constant;
        // shifting component 1 moves the weight by -+shift depending on side
        long long expected =
            (site.over.component == 1 ? shift : 0) -
            (site.under.component == 1 ? shift : 0);
        CHECK(delta == expected);
      }
    }
  }
}

TEST_CASE("self-crossing passages contribute canceling deltas") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 60; ++i) {
    Diagram d = random_diagram(rng, 10, 3);
    auto index = crossing_index(d);
    for (const auto& [id, site] : index) {
      if (site.over.component != site.under.component) continue;
      const auto& comp = d.components[site.over.component];
      CHECK(label_delta(comp[site.over.position]) +
                label_delta(comp[site.under.position]) ==
            0);
    }
  }
}

TEST_CASE("on knots: parity odd iff weight odd, and W- = -W+ via the flat route") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 120; ++i) {
    Diagram d = random_knot(rng, 10);
    auto labeling = compute_labeling(d);
    auto weights = crossing_weights(d, labeling);
    FlatDiagram f = flatten(d);
    // flat labels with the chirality deltas
    const auto& comp = f.components[0];
    int k = static_cast<int>(comp.size());
    std::vector<long long> after(k);
    long long cur = 0;
    for (int p = 0; p < k; ++p) {
      cur += comp[p].chirality == Chirality::LeftIncoming ? -1 : +1;
      after[p] = cur;
    }
    auto in = [&](int p) { return after[(p + k - 1) % k]; };
    std::map<int, std::pair<int, int>> sides;
    for (int p = 0; p < k; ++p) {
      if (comp[p].chirality == Chirality::LeftIncoming)
        sides[comp[p].crossing].first = p;
      else
        sides[comp[p].crossing].second = p;
    }
    for (const auto& w : weights) {
      REQUIRE(w.weight.is_constant());
      bool weight_odd = ((w.weight.constant % 2) + 2) % 2 == 1;
      CHECK((crossing_parity(d, w.crossing) == Parity::Odd) == weight_odd);
      // Def-style dual route: W+ = a - (b+1), W- = b - (a-1) from the flat
      // labels; the stored weight is W_sign.
      long long a = in(sides[w.crossing].first);
      long long b = in(sides[w.crossing].second);
      long long w_plus = a - (b + 1);
      long long w_minus = b - (a - 1);
      CHECK(w_minus == -w_plus);
      CHECK(w.weight.constant == (w.sign > 0 ? w_plus : w_minus));
    }
  }
}

TEST_CASE("pinned base count must match") {
  CHECK_THROWS_AS(compute_labeling_pinned(dg(kHopf), {0}), Error);
}

TEST_CASE("weight exponents are base differences with component 0 gauged away") {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 80; ++i) {
    Diagram d = random_compatible(rng, 10, 3);
    auto index = crossing_index(d);
    for (const auto& w : crossing_weights(d, compute_labeling(d))) {
      const auto& site = index[w.crossing];
      if (site.over.component == site.under.component) {
        CHECK(w.weight.is_constant());
        continue;
      }
      std::map<int, long long> expect;
      if (site.over.component != 0) expect[site.over.component] = +1;
      if (site.under.component != 0) expect[site.under.component] = -1;
      CHECK(w.weight.vars == expect);
    }
  }
}
