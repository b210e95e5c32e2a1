#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>

namespace vknot {

// Exponent of t: an integer constant plus an integer combination of component
// base variables. Component 0 is gauged to zero and never appears in `vars`.
// Rendered through the per-component variables N_i := x_0 - x_i.
struct AffineExponent {
  long long constant = 0;
  std::map<int, long long> vars;  // component index -> coefficient, no zeros

  bool is_constant() const { return vars.empty(); }
  AffineExponent negated() const;
  void add_var(int component, long long coeff);
  std::string to_string() const;

  friend bool operator==(const AffineExponent&, const AffineExponent&) = default;
  // Orders by constant first, then the variable part; used for term ordering.
  friend auto operator<=>(const AffineExponent&, const AffineExponent&) = default;
};

AffineExponent exponent(long long constant);

// Exact rational, normalized with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1);

  bool is_integer() const { return den == 1; }
  std::string to_string() const;

  friend Rational operator+(const Rational&, const Rational&);
  friend Rational operator*(const Rational&, const Rational&);
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational rational_pow(const Rational& base, long long e);

// Finitely supported integer combination of powers t^e with affine exponents.
// Canonical: zero coefficients are never stored.
struct IndexPolynomial {
  std::map<AffineExponent, long long> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(const AffineExponent& e, long long coeff);
  std::string to_string() const;

  friend bool operator==(const IndexPolynomial&, const IndexPolynomial&) = default;
};

IndexPolynomial poly_add(const IndexPolynomial& p, const IndexPolynomial& q);
IndexPolynomial poly_negate(const IndexPolynomial& p);

// t -> t^(-1): negates every exponent.
IndexPolynomial poly_invert_t(const IndexPolynomial& p);

// Substitutes integer values for base variables, collapsing exponents.
// Throws Error("missing_assignment") when a variable has no value.
IndexPolynomial poly_eval(const IndexPolynomial& p,
                          const std::map<int, long long>& assignment);

// Full numeric evaluation at a rational t (t must be nonzero when negative
// exponents occur).
Rational poly_eval_at(const IndexPolynomial& p,
                      const std::map<int, long long>& assignment,
                      const Rational& t);

// GF(2) polynomial with non-negative integer exponents; stores the exponents
// whose coefficient is 1.
struct FlatPolynomial {
  std::set<long long> terms;

  bool is_zero() const { return terms.empty(); }
  void toggle(long long e);
  std::string to_string() const;

  friend bool operator==(const FlatPolynomial&, const FlatPolynomial&) = default;
};

FlatPolynomial flat_add(const FlatPolynomial& p, const FlatPolynomial& q);

}  // namespace vknot
