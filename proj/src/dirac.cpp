#include "mutflow/dirac.hpp"

namespace mutflow {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& src) {
  RatMatrix m(src.size());
  for (int i = 0; i < src.size(); ++i)
    for (int j = 0; j < src.size(); ++j) m.at(i, j) = src.at(i, j);
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch("matrix product size mismatch");
  RatMatrix r(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int k = 0; k < a.size(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < a.size(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

bool RatMatrix::is_skew_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  return true;
}

Rational rational_determinant(const IntMatrix& m) {
  const int n = m.size();
  RatMatrix a = RatMatrix::from_int(m);
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (a.at(r, col) == 0) continue;
      const Rational f = a.at(r, col) / a.at(col, col);
      for (int j = col; j < n; ++j) a.at(r, j) -= f * a.at(col, j);
    }
  }
  return det;
}

RatMatrix omega(const IntMatrix& b) {
  const int n = b.size();
  RatMatrix a = RatMatrix::from_int(b);
  RatMatrix inv = RatMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularMatrix("exchange matrix is singular");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const Rational piv = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= piv;
      inv.at(col, j) /= piv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      const Rational f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool check_inverse_symmetrizer(const IntMatrix& b, std::span<const Integer> d) {
  const RatMatrix om = omega(b);
  RatMatrix dom(b.size());
  for (int i = 0; i < b.size(); ++i)
    for (int j = 0; j < b.size(); ++j) dom.at(i, j) = Rational(d[i]) * om.at(i, j);
  return dom.is_skew_symmetric();
}

BracketExponents bracket_exponents(const IntMatrix& b, std::span<const Integer> d) {
  const int n = b.size();
  if (static_cast<int>(d.size()) != n) throw DimensionMismatch("symmetrizer length");
  const RatMatrix om = omega(b);
  BracketExponents out{RatMatrix(n), RatMatrix(n), RatMatrix(n)};
  for (int i = 0; i < n; ++i) {
    out.yx.at(i, i) = Rational(2) * d[i];
    for (int j = 0; j < n; ++j) {
      out.xx.at(i, j) = Rational(-2) * d[i] * om.at(i, j);
      out.yy.at(i, j) = Rational(2) * d[i] * b.at(i, j);
    }
  }
  return out;
}

IntMatrix quantum_y_exponents(const IntMatrix& b, std::span<const Integer> d) {
  const int n = b.size();
  if (static_cast<int>(d.size()) != n) throw DimensionMismatch("symmetrizer length");
  IntMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = 2 * d[j] * b.at(j, i);
  return out;
}

RatMatrix quantum_x_exponents(const IntMatrix& b, std::span<const Integer> d) {
  const int n = b.size();
  if (static_cast<int>(d.size()) != n) throw DimensionMismatch("symmetrizer length");
  const RatMatrix om = omega(b);
  RatMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = Rational(2) * d[i] * om.at(i, j);
  return out;
}

}  // namespace mutflow
