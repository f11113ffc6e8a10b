#include "mutflow/semifield.hpp"

#include <algorithm>

namespace mutflow {

SemifieldElement::SemifieldElement(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (num_.n_vars() != den_.n_vars()) throw DimensionMismatch("fraction variable count");
  if (num_.is_zero() || den_.is_zero())
    throw InvalidArgument("semifield element requires nonzero numerator and denominator");
  if (!num_.all_positive() || !den_.all_positive())
    throw InvariantViolation("semifield element with nonpositive coefficient");

  // (i) common monomial factor
  Exponents mn = num_.min_exponents();
  Exponents md = den_.min_exponents();
  Exponents m(num_.n_vars());
  bool any = false;
  for (int i = 0; i < num_.n_vars(); ++i) {
    m[i] = std::min(mn[i], md[i]);
    any = any || m[i] != 0;
  }
  if (any) {
    num_ = num_.shift_down(m);
    den_ = den_.shift_down(m);
  }
  // (ii) integer content
  Integer g = gcd(num_.content(), den_.content());
  if (g > 1) {
    num_.divide_content(g);
    den_.divide_content(g);
  }
  // (iii) polynomial cancellation. A stripped monomial on either side cannot
  // share a factor with a multi-term partner after steps (i) and (ii), so
  // those cases are settled already. Mutation formulas pile up common
  // factors fast, so a gcd attempt (exact-division verified) comes first and
  // the plain num/den divisions mop up.
  if (!den_.is_one() && !num_.is_monomial() && !den_.is_monomial()) {
    if (auto g = gcd_heuristic(num_, den_); g && !g->is_monomial()) {
      auto qn = divide_exact(num_, *g);
      auto qd = divide_exact(den_, *g);
      if (qn && qd && qn->all_positive() && qd->all_positive()) {
        num_ = std::move(*qn);
        den_ = std::move(*qd);
      }
    }
    if (auto q = divide_exact(num_, den_); q && q->all_positive()) {
      num_ = std::move(*q);
      den_ = Polynomial::constant(num_.n_vars(), 1);
    } else if (auto r = divide_exact(den_, num_); r && r->all_positive()) {
      den_ = std::move(*r);
      num_ = Polynomial::constant(den_.n_vars(), 1);
    }
  }
}

SemifieldElement SemifieldElement::one(int n_vars) {
  return {Polynomial::constant(n_vars, 1), Polynomial::constant(n_vars, 1)};
}

SemifieldElement SemifieldElement::constant(int n_vars, Integer c) {
  return {Polynomial::constant(n_vars, std::move(c)), Polynomial::constant(n_vars, 1)};
}

SemifieldElement SemifieldElement::generator(int n_vars, int i) {
  return {Polynomial::variable(n_vars, i), Polynomial::constant(n_vars, 1)};
}

SemifieldElement sf_add(const SemifieldElement& a, const SemifieldElement& b) {
  if (a.n_vars() != b.n_vars()) throw DimensionMismatch("semifield add variable count");
  if (a.den() == b.den()) return {a.num() + b.num(), a.den()};
  return {a.num() * b.den() + b.num() * a.den(), a.den() * b.den()};
}

SemifieldElement sf_mul(const SemifieldElement& a, const SemifieldElement& b) {
  if (a.n_vars() != b.n_vars()) throw DimensionMismatch("semifield mul variable count");
  return {a.num() * b.num(), a.den() * b.den()};
}

SemifieldElement sf_inv(const SemifieldElement& a) { return {a.den(), a.num()}; }

SemifieldElement sf_div(const SemifieldElement& a, const SemifieldElement& b) {
  return sf_mul(a, sf_inv(b));
}

SemifieldElement sf_pow(const SemifieldElement& a, std::int64_t e) {
  if (e == 0) return SemifieldElement::one(a.n_vars());
  if (e < 0) return sf_pow(sf_inv(a), -e);
  // power the parts as plain polynomials; one canonicalization at the end
  return {poly_pow(a.num(), e), poly_pow(a.den(), e)};
}

bool sf_eq(const SemifieldElement& a, const SemifieldElement& b) {
  if (a.n_vars() != b.n_vars()) return false;
  return a.num() * b.den() == b.num() * a.den();
}

SemifieldElement sf_embed(const SemifieldElement& a, int new_n_vars, int offset) {
  return {a.num().embed(new_n_vars, offset), a.den().embed(new_n_vars, offset)};
}

double evaluate(const SemifieldElement& a, std::span<const double> point) {
  for (double v : point)
    if (!(v > 0.0)) throw DomainError("evaluation point must be strictly positive");
  return a.num().evaluate(point) / a.den().evaluate(point);
}

std::string to_string(const SemifieldElement& a, std::span<const std::string> names) {
  std::string n = a.num().to_string(names);
  if (a.den().is_one()) return n;
  std::string d = a.den().to_string(names);
  return "(" + n + ")/(" + d + ")";
}

std::string to_string(const SemifieldElement& a) {
  std::vector<std::string> names(a.n_vars());
  for (int i = 0; i < a.n_vars(); ++i) names[i] = "y" + std::to_string(i + 1);
  return to_string(a, names);
}

TropicalMonomial trop_one(int n) { return {std::vector<Integer>(n, Integer(0))}; }

TropicalMonomial trop_generator(int n, int i) {
  TropicalMonomial m = trop_one(n);
  m.exponents[i] = 1;
  return m;
}

TropicalMonomial trop_mul(const TropicalMonomial& a, const TropicalMonomial& b) {
  if (a.exponents.size() != b.exponents.size())
    throw DimensionMismatch("tropical monomial length");
  TropicalMonomial r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
  return r;
}

TropicalMonomial trop_add(const TropicalMonomial& a, const TropicalMonomial& b) {
  if (a.exponents.size() != b.exponents.size())
    throw DimensionMismatch("tropical monomial length");
  TropicalMonomial r = a;
  for (std::size_t i = 0; i < r.exponents.size(); ++i)
    r.exponents[i] = std::min(r.exponents[i], b.exponents[i]);
  return r;
}

TropicalMonomial trop_inv(const TropicalMonomial& a) {
  TropicalMonomial r = a;
  for (auto& e : r.exponents) e = -e;
  return r;
}

TropicalMonomial trop_pow(const TropicalMonomial& a, const Integer& e) {
  TropicalMonomial r = a;
  for (auto& v : r.exponents) v *= e;
  return r;
}

TropicalMonomial tropicalize(const SemifieldElement& a) {
  Exponents mn = a.num().min_exponents();
  Exponents md = a.den().min_exponents();
  TropicalMonomial r = trop_one(a.n_vars());
  for (int i = 0; i < a.n_vars(); ++i) r.exponents[i] = Integer(mn[i]) - Integer(md[i]);
  return r;
}

}  // namespace mutflow
