#include "mutflow/tropical.hpp"

namespace mutflow {

Sign tropical_sign(std::span<const Integer> column) {
  bool pos = false, neg = false, nonzero = false;
  for (const auto& v : column) {
    if (v > 0) pos = true;
    if (v < 0) neg = true;
    nonzero = nonzero || v != 0;
  }
  if (!nonzero) throw SignCoherenceViolation("zero c-vector");
  if (pos && neg) throw SignCoherenceViolation("mixed-sign c-vector");
  return neg ? Sign::minus : Sign::plus;
}

namespace {

// Tropicalized y-mutation of the c-vector columns: the factor (1 (+) y_k^eps)
// becomes the componentwise min(0, eps * c_k).
std::vector<TropicalMonomial> mutate_columns_trop(const std::vector<TropicalMonomial>& c,
                                                  const IntMatrix& b, int k, int eps) {
  const int n = b.size();
  TropicalMonomial one_plus =
      trop_add(trop_one(n), trop_pow(c[k], eps));
  std::vector<TropicalMonomial> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      out.push_back(trop_inv(c[k]));
    } else {
      TropicalMonomial v = trop_mul(c[i], trop_pow(c[k], pos_part(eps * b.at(k, i))));
      out.push_back(trop_mul(v, trop_pow(one_plus, -b.at(k, i))));
    }
  }
  return out;
}

IntMatrix columns_to_matrix(const std::vector<TropicalMonomial>& cols) {
  const int n = static_cast<int>(cols.size());
  IntMatrix m(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) = cols[j].exponents[i];
  return m;
}

void assert_sign_coherent(const IntMatrix& c) {
  for (int j = 0; j < c.size(); ++j) tropical_sign(c.column(j));
}

}  // namespace

TropicalTrace c_matrix_trace(const ExchangeMatrix& b, const std::vector<int>& seq) {
  const int n = b.size();
  TropicalTrace trace;
  trace.b.push_back(b.matrix());
  trace.c.push_back(IntMatrix::identity(n));

  std::vector<TropicalMonomial> cols;
  for (int i = 0; i < n; ++i) cols.push_back(trop_generator(n, i));

  ExchangeMatrix cur = b;
  for (int k : seq) {
    if (k < 0 || k >= n) throw InvalidArgument("mutation direction out of range");
    trace.signs.push_back(tropical_sign(trace.c.back().column(k)));

    auto next = mutate_columns_trop(cols, cur.matrix(), k, +1);
    if (!(columns_to_matrix(next) == columns_to_matrix(mutate_columns_trop(cols, cur.matrix(), k, -1))))
      throw InvariantViolation("tropical y-mutation depends on sign");
    cols = std::move(next);

    cur = mutate_matrix(cur, k);
    trace.b.push_back(cur.matrix());
    trace.c.push_back(columns_to_matrix(cols));
    assert_sign_coherent(trace.c.back());
  }
  return trace;
}

std::vector<IntMatrix> g_matrix_trace(const ExchangeMatrix& b, const std::vector<int>& seq,
                                      const std::vector<Sign>& signs) {
  if (signs.size() != seq.size()) throw DimensionMismatch("sign sequence length");
  const int n = b.size();
  std::vector<IntMatrix> trace{IntMatrix::identity(n)};
  ExchangeMatrix bm = b;
  for (std::size_t s = 0; s < seq.size(); ++s) {
    const int k = seq[s];
    const int eps = sign_value(signs[s]);
    const IntMatrix& g = trace.back();
    IntMatrix next = g;
    for (int i = 0; i < n; ++i) {
      Integer acc = -g.at(i, k);
      for (int j = 0; j < n; ++j) {
        const Integer w = pos_part(-eps * bm.at(j, k));
        if (w != 0) acc += w * g.at(i, j);
      }
      next.at(i, k) = acc;
    }
    trace.push_back(std::move(next));
    bm = mutate_matrix(bm, k);
  }
  return trace;
}

std::vector<Sign> tropical_sign_sequence(const ExchangeMatrix& b, const std::vector<int>& seq) {
  return c_matrix_trace(b, seq).signs;
}

}  // namespace mutflow
