#include <doctest.h>

#include <random>

#include "testutil.hpp"
#include "vknot/errors.hpp"
#include "vknot/polynomial.hpp"

using namespace vktest;

namespace {

IndexPolynomial make(std::initializer_list<std::pair<long long, long long>> terms) {
  IndexPolynomial p;
  for (auto [e, c] : terms) p.add_term(exponent(e), c);
  return p;
}

IndexPolynomial random_poly(std::mt19937_64& rng) {
  IndexPolynomial p;
  int terms = static_cast<int>(rng() % 6);
  for (int i = 0; i < terms; ++i) {
    AffineExponent e;
    e.constant = static_cast<long long>(rng() % 9) - 4;
    if (rng() % 3 == 0) e.add_var(1 + static_cast<int>(rng() % 2), rng() % 2 ? 1 : -1);
    p.add_term(e, static_cast<long long>(rng() % 7) - 3);
  }
  return p;
}

}  // namespace

TEST_CASE("poly_add: inverse, identity, doubling") {
  IndexPolynomial vt = make({{1, 1}, {-1, 1}, {0, -2}});
  CHECK(poly_add(vt, poly_negate(vt)).is_zero());
  CHECK(poly_add(vt, IndexPolynomial{}) == vt);
  IndexPolynomial tm1 = make({{1, 1}, {0, -1}});
  CHECK(poly_add(tm1, tm1) == make({{1, 2}, {0, -2}}));
}

TEST_CASE("poly_invert_t negates exponents") {
  CHECK(poly_invert_t(make({{2, 1}, {0, -1}})) == make({{-2, 1}, {0, -1}}));
  IndexPolynomial vt = make({{1, 1}, {-1, 1}, {0, -2}});
  CHECK(poly_invert_t(vt) == vt);
  IndexPolynomial hopf_term;
  AffineExponent nm1;  // N - 1, i.e. -x_1 - 1
  nm1.constant = -1;
  nm1.add_var(1, -1);
  hopf_term.add_term(nm1, 1);
  IndexPolynomial inv = poly_invert_t(hopf_term);
  AffineExponent onemn;  // 1 - N
  onemn.constant = 1;
  onemn.add_var(1, 1);
  CHECK(inv.terms.count(onemn) == 1);
}

TEST_CASE("poly_eval collapses symbolic exponents") {
  IndexPolynomial p;
  AffineExponent nm1;
  nm1.constant = -1;
  nm1.add_var(1, -1);
  AffineExponent onemn;
  onemn.constant = 1;
  onemn.add_var(1, 1);
  p.add_term(nm1, 1);
  p.add_term(onemn, 1);
  p.add_term(AffineExponent{}, -2);
  // N = -x_1 = 0
  CHECK(poly_eval(p, {{1, 0}}) == make({{-1, 1}, {1, 1}, {0, -2}}));
  CHECK_THROWS_AS(poly_eval(p, {}), Error);
  CHECK(poly_eval(IndexPolynomial{}, {{1, 5}}).is_zero());
}

TEST_CASE("every t^W - 1 style polynomial vanishes at t = 1") {
  IndexPolynomial vt = make({{1, 1}, {-1, 1}, {0, -2}});
  CHECK(poly_eval_at(vt, {}, Rational(1)) == Rational(0));
  CHECK(poly_eval_at(vt, {}, Rational(2)) == Rational(1, 2));  // 2 + 1/2 - 2
}

TEST_CASE("to_string formats") {
  CHECK(make({{1, 1}, {-1, 1}, {0, -2}}).to_string() == "t^-1 + t - 2");
  CHECK(IndexPolynomial{}.to_string() == "0");
  IndexPolynomial p;
  AffineExponent nm1;
  nm1.constant = -1;
  nm1.add_var(1, -1);
  p.add_term(nm1, 1);
  CHECK(p.to_string() == "t^(N1-1)");
  FlatPolynomial f;
  CHECK(f.to_string() == "0");
  f.toggle(2);
  f.toggle(0);
  CHECK(f.to_string() == "t^2 + 1");
}

TEST_CASE("GF(2): (t+1)+(t+1) = 0") {
  FlatPolynomial t1;
  t1.toggle(1);
  t1.toggle(0);
  CHECK(flat_add(t1, t1).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    IndexPolynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(poly_add(a, b) == poly_add(b, a));
    CHECK(poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c)));
    CHECK(poly_add(a, poly_negate(a)).is_zero());
    CHECK(poly_invert_t(poly_invert_t(a)) == a);
    // evaluation commutes with addition and with t -> 1/t
    std::map<int, long long> assign{{1, 2}, {2, -1}};
    CHECK(poly_eval(poly_add(a, b), assign) ==
          poly_add(poly_eval(a, assign), poly_eval(b, assign)));
    Rational t(3, 2);
    Rational lhs = poly_eval_at(poly_invert_t(a), assign, t);
    Rational rhs = poly_eval_at(a, assign, Rational(2, 3));
    CHECK(lhs == rhs);
  }
}
