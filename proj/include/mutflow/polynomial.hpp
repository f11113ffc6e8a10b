#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mutflow/bigint.hpp"
#include "mutflow/errors.hpp"

namespace mutflow {

// Exponent vector of a monomial; dense, one entry per variable, entries >= 0
// inside a Polynomial.
using Exponents = std::vector<std::int32_t>;

// Graded lexicographic order: total degree first, then lex.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Process-wide cap on the number of stored monomials per polynomial.
// Mutation sequences can blow up coefficient data exponentially; we fail
// loudly (ResourceLimitError) instead of grinding on. Intended to be set
// once at startup.
std::size_t polynomial_term_limit();
void set_polynomial_term_limit(std::size_t limit);

// Sparse multivariate polynomial with big-integer coefficients.
// Terms are kept in graded-lex order, no zero coefficients are stored, and
// the zero polynomial has an empty term map. Coefficients may be negative
// in intermediate computations (exact division); elements of the universal
// semifield only ever hold all-positive polynomials.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Integer, GrlexLess>;

  explicit Polynomial(int n_vars);
  static Polynomial constant(int n_vars, Integer c);
  static Polynomial variable(int n_vars, int index);
  static Polynomial monomial(Exponents e, Integer c);

  int n_vars() const { return n_vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool all_positive() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const Exponents& e, const Integer& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const { return n_vars_ == o.n_vars_ && terms_ == o.terms_; }

  // Componentwise minimum of all exponent vectors; undefined on zero.
  Exponents min_exponents() const;
  // Componentwise maximum degree per variable; zero vector on zero.
  Exponents max_exponents() const;
  // gcd of |coefficients|; zero for the zero polynomial.
  Integer content() const;
  void divide_content(const Integer& g);
  // Divides every term by the monomial with exponents m (all terms must cover m).
  Polynomial shift_down(const Exponents& m) const;
  // Reinterprets in a ring with new_n_vars variables, variable i -> i + offset.
  Polynomial embed(int new_n_vars, int offset) const;

  double evaluate(std::span<const double> point) const;

  // Reduced deterministic rendering, graded-lex descending, e.g. "2*y1^2*y2 + 1".
  std::string to_string(std::span<const std::string> names) const;

 private:
  int n_vars_;
  TermMap terms_;
  void check_limit() const;
};

// p^e by repeated squaring; e >= 0.
Polynomial poly_pow(const Polynomial& p, std::int64_t e);

// Exact division num / den over the integers; nullopt when not divisible.
std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den);

// Heuristic gcd (integer evaluation and xi-adic lifting), verified by exact
// division before returning: any result is a genuine common divisor, though
// rarely it may miss and return nullopt. Both inputs must be nonzero.
std::optional<Polynomial> gcd_heuristic(const Polynomial& a, const Polynomial& b);

}  // namespace mutflow
