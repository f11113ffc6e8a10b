#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mutflow/bigint.hpp"
#include "mutflow/errors.hpp"

namespace mutflow {

// Narrowing conversion with a loud failure; used where big-integer data
// feeds fixed-width consumers (polynomial exponents, JSON numbers).
inline std::int64_t to_i64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("integer out of int64 range");
  return v.convert_to<std::int64_t>();
}

inline double to_double(const Integer& v) { return v.convert_to<double>(); }

// max(a, 0), written [a]_+ below.
inline Integer pos_part(const Integer& a) { return a > 0 ? a : Integer(0); }

// Dense square integer matrix, row-major. Entries are big integers: matrix
// mutation along adversarial sequences grows entries super-exponentially,
// so fixed-width storage would silently overflow.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Integer(0)) {
    if (n <= 0) throw InvalidArgument("matrix size must be positive");
  }
  IntMatrix(int n, std::vector<std::int64_t> entries) : IntMatrix(n) {
    if (entries.size() != a_.size()) throw InvalidArgument("bad matrix entry count");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] = entries[i];
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int size() const { return n_; }
  Integer& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const Integer& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  std::vector<Integer> column(int j) const {
    std::vector<Integer> c(n_);
    for (int i = 0; i < n_; ++i) c[i] = at(i, j);
    return c;
  }

  IntMatrix transposed() const {
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  bool operator==(const IntMatrix& o) const = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("matrix product size mismatch");
    IntMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const Integer& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < a.n_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }

 private:
  int n_ = 0;
  std::vector<Integer> a_;
};

}  // namespace mutflow
