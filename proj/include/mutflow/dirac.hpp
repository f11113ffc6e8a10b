#pragma once

#include <span>
#include <vector>

#include "mutflow/bigint.hpp"
#include "mutflow/intmatrix.hpp"

namespace mutflow {

// Dense square matrix over exact rationals; floats never enter this module.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Rational(0)) {
    if (n <= 0) throw InvalidArgument("matrix size must be positive");
  }
  static RatMatrix identity(int n);
  static RatMatrix from_int(const IntMatrix& m);

  int size() const { return n_; }
  Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  bool operator==(const RatMatrix& o) const = default;
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  bool is_skew_symmetric() const;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

Rational rational_determinant(const IntMatrix& m);

// Omega = B^{-1} as an exact rational matrix; SingularMatrix when det B = 0.
RatMatrix omega(const IntMatrix& b);

// True iff D * B^{-1} is skew-symmetric (exact); B must be invertible.
bool check_inverse_symmetrizer(const IntMatrix& b, std::span<const Integer> d);

// Dirac-bracket structure constants c in {z_i, z_j}_D = c z_i z_j:
//   xx = -2 diag(d) Omega,  yy = 2 diag(d) B,  yx = 2 diag(d).
struct BracketExponents {
  RatMatrix xx, yy, yx;
};
BracketExponents bracket_exponents(const IntMatrix& b, std::span<const Integer> d);

// Commutation exponents of the quantized variables: Y_i Y_j = q^{c} Y_j Y_i
// with c = 2 d_j b_ji (defined for any B), and X_i X_j = q^{c} X_j X_i with
// c = 2 d_i omega_ij (needs invertible B).
IntMatrix quantum_y_exponents(const IntMatrix& b, std::span<const Integer> d);
RatMatrix quantum_x_exponents(const IntMatrix& b, std::span<const Integer> d);

}  // namespace mutflow
