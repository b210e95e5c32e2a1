#include "vknot/polynomial.hpp"

#include <cstdlib>
#include <numeric>

#include "vknot/errors.hpp"

namespace vknot {

AffineExponent AffineExponent::negated() const {
  AffineExponent out;
  out.constant = -constant;
  for (const auto& [v, c] : vars) out.vars.emplace(v, -c);
  return out;
}

void AffineExponent::add_var(int component, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = vars.try_emplace(component, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) vars.erase(it);
  }
}

namespace {

// Appends one signed term to a textual sum: "N1", "-2N3", "+ 4", ...
void append_signed(std::string& out, long long coeff, const std::string& atom,
                   bool spaced) {
  if (coeff == 0) return;
  if (out.empty()) {
    if (coeff < 0) out += '-';
  } else {
    out += spaced ? (coeff < 0 ? " - " : " + ") : (coeff < 0 ? "-" : "+");
  }
  long long mag = coeff < 0 ? -coeff : coeff;
  if (mag != 1 || atom.empty()) out += std::to_string(mag);
  out += atom;
}

}  // namespace

std::string AffineExponent::to_string() const {
  if (is_constant()) return std::to_string(constant);
  // x_i appears as N_i := x_0 - x_i, so coefficients flip sign.
  std::string out;
  for (const auto& [v, c] : vars)
    append_signed(out, -c, "N" + std::to_string(v), false);
  append_signed(out, constant, "", false);
  return out;
}

AffineExponent exponent(long long constant) {
  AffineExponent e;
  e.constant = constant;
  return e;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) fail("bad_argument", "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num * b.num, a.den * b.den);
}

Rational rational_pow(const Rational& base, long long e) {
  if (e < 0) {
    if (base.num == 0) fail("bad_argument", "negative power of zero");
    return rational_pow(Rational(base.den, base.num), -e);
  }
  Rational out(1);
  for (long long i = 0; i < e; ++i) out = out * base;
  return out;
}

void IndexPolynomial::add_term(const AffineExponent& e, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

std::string IndexPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  // Non-constant terms in exponent order, the constant term last.
  long long constant_coeff = 0;
  for (const auto& [e, coeff] : terms) {
    if (e == AffineExponent{}) {
      constant_coeff = coeff;
      continue;
    }
    std::string atom = "t";
    if (e.is_constant()) {
      if (e.constant != 1) atom += "^" + std::to_string(e.constant);
    } else {
      atom += "^(" + e.to_string() + ")";
    }
    append_signed(out, coeff, atom, true);
  }
  append_signed(out, constant_coeff, "", true);
  return out;
}

IndexPolynomial poly_add(const IndexPolynomial& p, const IndexPolynomial& q) {
  IndexPolynomial out = p;
  for (const auto& [e, c] : q.terms) out.add_term(e, c);
  return out;
}

IndexPolynomial poly_negate(const IndexPolynomial& p) {
  IndexPolynomial out;
  for (const auto& [e, c] : p.terms) out.terms.emplace(e, -c);
  return out;
}

IndexPolynomial poly_invert_t(const IndexPolynomial& p) {
  IndexPolynomial out;
  for (const auto& [e, c] : p.terms) out.add_term(e.negated(), c);
  return out;
}

namespace {

long long eval_exponent(const AffineExponent& e,
                        const std::map<int, long long>& assignment) {
  long long value = e.constant;
  for (const auto& [v, c] : e.vars) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      fail("missing_assignment",
           "no value for component base " + std::to_string(v));
    value += c * it->second;
  }
  return value;
}

}  // namespace

IndexPolynomial poly_eval(const IndexPolynomial& p,
                          const std::map<int, long long>& assignment) {
  IndexPolynomial out;
  for (const auto& [e, c] : p.terms)
    out.add_term(exponent(eval_exponent(e, assignment)), c);
  return out;
}

Rational poly_eval_at(const IndexPolynomial& p,
                      const std::map<int, long long>& assignment,
                      const Rational& t) {
  Rational total(0);
  for (const auto& [e, c] : p.terms)
    total = total + Rational(c) * rational_pow(t, eval_exponent(e, assignment));
  return total;
}

void FlatPolynomial::toggle(long long e) {
  auto [it, inserted] = terms.insert(e);
  if (!inserted) terms.erase(it);
}

std::string FlatPolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (*it == 0)
      out += "1";
    else if (*it == 1)
      out += "t";
    else
      out += "t^" + std::to_string(*it);
  }
  return out;
}

FlatPolynomial flat_add(const FlatPolynomial& p, const FlatPolynomial& q) {
  FlatPolynomial out = p;
  for (long long e : q.terms) out.toggle(e);
  return out;
}

}  // namespace vknot
