#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mutflow/polynomial.hpp"

namespace mutflow {

enum class SemifieldKind { Universal, Tropical, PositiveReal, Trivial };

// Identifies which semifield a value belongs to; operations never mix tags.
struct SemifieldTag {
  SemifieldKind kind = SemifieldKind::Trivial;
  int n_vars = 0;  // meaningful for Universal and Tropical only

  static SemifieldTag universal(int n) { return {SemifieldKind::Universal, n}; }
  static SemifieldTag tropical(int n) { return {SemifieldKind::Tropical, n}; }
  static SemifieldTag positive_real() { return {SemifieldKind::PositiveReal, 0}; }
  static SemifieldTag trivial() { return {SemifieldKind::Trivial, 0}; }
  bool operator==(const SemifieldTag&) const = default;
};

// Element of the universal semifield: a fraction p(y)/q(y) of nonzero
// polynomials with nonnegative integer coefficients. Addition is the
// ordinary one, so the arithmetic is subtraction-free and closed.
//
// Canonical form: common monomial factor removed, integer contents made
// coprime, and exact polynomial division num/den (or den/num) applied when
// it succeeds. Equality never relies on canonical form; sf_eq cross-multiplies.
class SemifieldElement {
 public:
  SemifieldElement(Polynomial num, Polynomial den);

  static SemifieldElement one(int n_vars);
  static SemifieldElement constant(int n_vars, Integer c);
  static SemifieldElement generator(int n_vars, int i);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  int n_vars() const { return num_.n_vars(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

 private:
  Polynomial num_, den_;
};

SemifieldElement sf_add(const SemifieldElement& a, const SemifieldElement& b);
SemifieldElement sf_mul(const SemifieldElement& a, const SemifieldElement& b);
SemifieldElement sf_inv(const SemifieldElement& a);
SemifieldElement sf_div(const SemifieldElement& a, const SemifieldElement& b);
SemifieldElement sf_pow(const SemifieldElement& a, std::int64_t e);
// a/b == c/d iff a*d == c*b as polynomials.
bool sf_eq(const SemifieldElement& a, const SemifieldElement& b);
// Variable i -> variable i + offset in a ring with new_n_vars variables.
SemifieldElement sf_embed(const SemifieldElement& a, int new_n_vars, int offset);
// Semifield homomorphism to R_+; all coordinates must be > 0.
double evaluate(const SemifieldElement& a, std::span<const double> point);
std::string to_string(const SemifieldElement& a, std::span<const std::string> names);
// Default variable names y1..yn.
std::string to_string(const SemifieldElement& a);

// Element of the tropical semifield Trop(y): a Laurent monomial
// prod y_i^{a_i}. Multiplication adds exponents; tropical addition takes
// the componentwise minimum. Exponent vectors produced by tropicalized
// mutation are exactly c-vectors, and those grow without bound along long
// sequences, hence big-integer exponents.
struct TropicalMonomial {
  std::vector<Integer> exponents;
  bool operator==(const TropicalMonomial&) const = default;
};

TropicalMonomial trop_one(int n);
TropicalMonomial trop_generator(int n, int i);
TropicalMonomial trop_mul(const TropicalMonomial& a, const TropicalMonomial& b);
TropicalMonomial trop_add(const TropicalMonomial& a, const TropicalMonomial& b);
TropicalMonomial trop_inv(const TropicalMonomial& a);
TropicalMonomial trop_pow(const TropicalMonomial& a, const Integer& e);

// The tropicalization map Q_+(y) -> Trop(y): componentwise min over the
// numerator's exponent vectors minus the same for the denominator.
TropicalMonomial tropicalize(const SemifieldElement& a);

}  // namespace mutflow
