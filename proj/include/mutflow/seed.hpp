#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mutflow/intmatrix.hpp"
#include "mutflow/semifield.hpp"

namespace mutflow {

enum class Sign : int { plus = 1, minus = -1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }
inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

// Minimal positive integer diagonal D with D*B skew-symmetric; entries
// coprime per connected component of the nonzero pattern. Throws
// NotSkewSymmetrizable when no such D exists.
std::vector<Integer> skew_symmetrizer(const IntMatrix& b);
bool is_valid_symmetrizer(const IntMatrix& b, std::span<const Integer> d);

// Skew-symmetrizable integer matrix; validity is checked at construction
// and the minimal symmetrizer is cached.
class ExchangeMatrix {
 public:
  explicit ExchangeMatrix(IntMatrix b) : b_(std::move(b)), d_(skew_symmetrizer(b_)) {}

  int size() const { return b_.size(); }
  const Integer& at(int i, int j) const { return b_.at(i, j); }
  const IntMatrix& matrix() const { return b_; }
  const std::vector<Integer>& symmetrizer() const { return d_; }
  bool operator==(const ExchangeMatrix& o) const { return b_ == o.b_; }

 private:
  IntMatrix b_;
  std::vector<Integer> d_;
};

// Matrix mutation at direction k. The result does not depend on eps; this is
// asserted by computing both signs.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k, Sign eps = Sign::plus);

// Seed (B, x, y) over a coefficient semifield.
//
// Representation: with universal coefficients the x-variables live in the
// fraction semifield of 2n variables (x1..xn, y1..yn) and the y-variables in
// the one of n variables (y1..yn); the coefficient addition of Q_+(y) is the
// ordinary one, so both stay subtraction-free. With trivial coefficients the
// x-variables live in n variables (x1..xn) and y is empty.
struct Seed {
  ExchangeMatrix b;
  std::vector<SemifieldElement> x;
  std::vector<SemifieldElement> y;
  SemifieldTag tag;

  static Seed initial(ExchangeMatrix b, SemifieldKind coefficients);
  int rank() const { return b.size(); }
};

// yhat_i = y_i * prod_j x_j^{b_ji}; with trivial coefficients the y factor
// drops out. Elements live in the x-variable ring.
std::vector<SemifieldElement> yhat(const Seed& seed);

// Full seed mutation at k (0-based). Independent of eps.
Seed mutate_seed(const Seed& seed, int k, Sign eps = Sign::plus);
// y-mutation alone over Q_+(y); the y-variables do not depend on x.
std::vector<SemifieldElement> mutate_y_symbolic(const ExchangeMatrix& b,
                                                const std::vector<SemifieldElement>& y, int k,
                                                Sign eps = Sign::plus);
// Nontropical part: the B-matrix is left unchanged.
Seed rho(const Seed& seed, int k, Sign eps);
// Tropical (monomial) part; mutates the B-matrix.
Seed tau_seed(const Seed& seed, int k, Sign eps);

// Componentwise sf_eq plus exact B equality.
bool seeds_equal(const Seed& a, const Seed& b);

// Variable names for rendering seed entries: x1..xn[,y1..yn].
std::vector<std::string> seed_x_names(const Seed& seed);
std::vector<std::string> seed_y_names(const Seed& seed);

}  // namespace mutflow
