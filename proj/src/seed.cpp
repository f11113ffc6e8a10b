#include "mutflow/seed.hpp"

#include <limits>
#include <numeric>

#include "mutflow/bigint.hpp"

namespace mutflow {

namespace {

// lcm of denominators, then gcd-normalize, per connected component.
std::vector<Integer> scale_component(const std::vector<int>& comp,
                                     const std::vector<Rational>& r) {
  Integer l = 1;
  for (int v : comp) l = l / gcd(l, denominator(r[v])) * denominator(r[v]);
  Integer g = 0;
  std::vector<Integer> scaled(comp.size());
  for (std::size_t i = 0; i < comp.size(); ++i) {
    scaled[i] = numerator(r[comp[i]]) * (l / denominator(r[comp[i]]));
    g = gcd(g, scaled[i]);
  }
  for (auto& v : scaled) v /= g;
  return scaled;
}

}  // namespace

std::vector<Integer> skew_symmetrizer(const IntMatrix& b) {
  const int n = b.size();
  for (int i = 0; i < n; ++i) {
    if (b.at(i, i) != 0) throw NotSkewSymmetrizable("nonzero diagonal entry");
    for (int j = 0; j < n; ++j) {
      const bool zi = b.at(i, j) == 0, zj = b.at(j, i) == 0;
      if (zi != zj) throw NotSkewSymmetrizable("asymmetric zero pattern");
      if (!zi && i != j && (b.at(i, j) > 0) == (b.at(j, i) > 0))
        throw NotSkewSymmetrizable("sign pattern violation");
    }
  }

  std::vector<Rational> r(n, Rational(0));
  std::vector<Integer> d(n, Integer(0));
  std::vector<int> stack, comp;
  for (int root = 0; root < n; ++root) {
    if (r[root] != 0) continue;
    r[root] = 1;
    comp.assign(1, root);
    stack.assign(1, root);
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (b.at(i, j) == 0) continue;
        // d_i b_ij = -d_j b_ji  =>  d_j = d_i |b_ij| / |b_ji|
        Rational rj = r[i] * Rational(abs(b.at(i, j)), abs(b.at(j, i)));
        if (r[j] == 0) {
          r[j] = rj;
          comp.push_back(j);
          stack.push_back(j);
        } else if (r[j] != rj) {
          throw NotSkewSymmetrizable("inconsistent ratio cycle");
        }
      }
    }
    auto scaled = scale_component(comp, r);
    for (std::size_t i = 0; i < comp.size(); ++i) d[comp[i]] = scaled[i];
  }

  if (!is_valid_symmetrizer(b, d)) throw NotSkewSymmetrizable("verification failed");
  return d;
}

bool is_valid_symmetrizer(const IntMatrix& b, std::span<const Integer> d) {
  const int n = b.size();
  if (static_cast<int>(d.size()) != n) return false;
  for (const auto& v : d)
    if (v <= 0) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] * b.at(i, j) != -(d[j] * b.at(j, i))) return false;
  return true;
}

namespace {

IntMatrix mutate_matrix_raw(const IntMatrix& b, int k, int eps) {
  const int n = b.size();
  IntMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        r.at(i, j) = -b.at(i, j);
      } else {
        r.at(i, j) = b.at(i, j) + pos_part(-eps * b.at(i, k)) * b.at(k, j) +
                     b.at(i, k) * pos_part(eps * b.at(k, j));
      }
    }
  return r;
}

}  // namespace

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k, Sign eps) {
  if (k < 0 || k >= b.size()) throw InvalidArgument("mutation direction out of range");
  IntMatrix r = mutate_matrix_raw(b.matrix(), k, sign_value(eps));
  if (r != mutate_matrix_raw(b.matrix(), k, -sign_value(eps)))
    throw InvariantViolation("matrix mutation depends on sign");
  return ExchangeMatrix(std::move(r));
}

Seed Seed::initial(ExchangeMatrix b, SemifieldKind coefficients) {
  const int n = b.size();
  Seed s{std::move(b), {}, {}, SemifieldTag::trivial()};
  if (coefficients == SemifieldKind::Universal) {
    s.tag = SemifieldTag::universal(n);
    for (int i = 0; i < n; ++i) s.x.push_back(SemifieldElement::generator(2 * n, i));
    for (int i = 0; i < n; ++i) s.y.push_back(SemifieldElement::generator(n, i));
  } else if (coefficients == SemifieldKind::Trivial) {
    for (int i = 0; i < n; ++i) s.x.push_back(SemifieldElement::generator(n, i));
  } else {
    throw InvalidArgument("seed coefficients must be universal or trivial");
  }
  return s;
}

std::vector<SemifieldElement> yhat(const Seed& seed) {
  const int n = seed.rank();
  std::vector<SemifieldElement> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    SemifieldElement h = seed.tag.kind == SemifieldKind::Universal
                             ? sf_embed(seed.y[i], 2 * n, n)
                             : SemifieldElement::one(n);
    for (int j = 0; j < n; ++j) {
      if (seed.b.at(j, i) == 0) continue;
      h = sf_mul(h, sf_pow(seed.x[j], to_i64(seed.b.at(j, i))));
    }
    out.push_back(std::move(h));
  }
  return out;
}

namespace {

// 1 (+) y_k^eps in the coefficient semifield; for Q_+(y) the addition is the
// ordinary one, for the trivial semifield the result is 1.
SemifieldElement coeff_one_plus(const Seed& seed, int k, Sign eps) {
  const int n = seed.rank();
  if (seed.tag.kind != SemifieldKind::Universal) return SemifieldElement::one(n);
  return sf_add(SemifieldElement::one(n), sf_pow(seed.y[k], sign_value(eps)));
}

// the monomial prod_j x_j^{[-eps b_jk]_+}
SemifieldElement x_monomial_factor(const Seed& seed, int k, Sign eps) {
  SemifieldElement m = SemifieldElement::one(seed.x[0].n_vars());
  for (int j = 0; j < seed.rank(); ++j) {
    const Integer p = pos_part(-sign_value(eps) * seed.b.at(j, k));
    if (p != 0) m = sf_mul(m, sf_pow(seed.x[j], to_i64(p)));
  }
  return m;
}

// Product of polynomial factors with signed exponents. The x-mutation
// multiplies and divides the same canonical fractions, so keeping the
// pieces unexpanded and cancelling equal polynomials reproduces the
// theoretical reduction exactly; only what survives gets expanded.
class FactorProduct {
 public:
  explicit FactorProduct(int n_vars) : n_vars_(n_vars) {}

  void mul(const Polynomial& p, std::int64_t e) {
    if (e == 0 || p.is_one()) return;
    for (auto& [q, d] : f_)
      if (q == p) {
        d += e;
        return;
      }
    f_.emplace_back(p, e);
  }
  void mul_elem(const SemifieldElement& x, std::int64_t e) {
    mul(x.num(), e);
    mul(x.den(), -e);
  }
  const std::vector<std::pair<Polynomial, std::int64_t>>& factors() const { return f_; }

  Polynomial expand_part(bool positive) const {
    Polynomial out = Polynomial::constant(n_vars_, 1);
    for (const auto& [q, d] : f_)
      if ((d > 0) == positive && d != 0) out = out * poly_pow(q, d > 0 ? d : -d);
    return out;
  }
  SemifieldElement to_element() const { return {expand_part(true), expand_part(false)}; }

 private:
  int n_vars_;
  std::vector<std::pair<Polynomial, std::int64_t>> f_;
};

// yhat_k^eps as a factor list (no expansion).
FactorProduct yhat_k_factors(const Seed& seed, int k, Sign eps) {
  const int n = seed.rank();
  FactorProduct hk(seed.x[0].n_vars());
  const int e = sign_value(eps);
  if (seed.tag.kind == SemifieldKind::Universal)
    hk.mul_elem(sf_embed(seed.y[k], 2 * n, n), e);
  for (int j = 0; j < n; ++j) hk.mul_elem(seed.x[j], e * to_i64(seed.b.at(j, k)));
  return hk;
}

// New x_k of the full mutation:
//   x_k^{-1} (prod_j x_j^{[-eps b_jk]_+}) (1 + yhat_k^eps) / (1 (+) y_k^eps).
SemifieldElement mutated_xk(const Seed& seed, int k, Sign eps) {
  const int n = seed.rank();
  const int e = sign_value(eps);
  FactorProduct fp(seed.x[0].n_vars());
  fp.mul_elem(seed.x[k], -1);
  for (int j = 0; j < n; ++j)
    fp.mul_elem(seed.x[j], to_i64(pos_part(-e * seed.b.at(j, k))));

  // 1 + yhat_k^eps = (P + Q)/Q with yhat_k^eps = P/Q kept factored
  const FactorProduct hk = yhat_k_factors(seed, k, eps);
  fp.mul(hk.expand_part(true) + hk.expand_part(false), 1);
  for (const auto& [q, d] : hk.factors())
    if (d < 0) fp.mul(q, d);

  if (seed.tag.kind == SemifieldKind::Universal) {
    const SemifieldElement c = sf_embed(coeff_one_plus(seed, k, eps), 2 * n, n);
    fp.mul(c.num(), -1);
    fp.mul(c.den(), 1);
  }
  return fp.to_element();
}

// New x_k of the nontropical part: x_k (1 (+) y_k^eps) / (1 + yhat_k^eps).
SemifieldElement rho_xk(const Seed& seed, int k, Sign eps) {
  const int n = seed.rank();
  FactorProduct fp(seed.x[0].n_vars());
  fp.mul_elem(seed.x[k], 1);

  const FactorProduct hk = yhat_k_factors(seed, k, eps);
  fp.mul(hk.expand_part(true) + hk.expand_part(false), -1);
  for (const auto& [q, d] : hk.factors())
    if (d < 0) fp.mul(q, -d);

  if (seed.tag.kind == SemifieldKind::Universal) {
    const SemifieldElement c = sf_embed(coeff_one_plus(seed, k, eps), 2 * n, n);
    fp.mul(c.num(), 1);
    fp.mul(c.den(), -1);
  }
  return fp.to_element();
}

}  // namespace

std::vector<SemifieldElement> mutate_y_symbolic(const ExchangeMatrix& b,
                                                const std::vector<SemifieldElement>& y, int k,
                                                Sign eps) {
  const int n = b.size();
  if (static_cast<int>(y.size()) != n) throw DimensionMismatch("y length");
  if (k < 0 || k >= n) throw InvalidArgument("mutation direction out of range");
  const int e = sign_value(eps);
  const int vars = y[k].n_vars();
  SemifieldElement one_plus = sf_add(SemifieldElement::one(vars), sf_pow(y[k], e));
  std::vector<SemifieldElement> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    if (i == k) {
      out.push_back(sf_inv(y[k]));
    } else {
      SemifieldElement v = sf_mul(y[i], sf_pow(y[k], to_i64(pos_part(e * b.at(k, i)))));
      out.push_back(sf_mul(v, sf_pow(one_plus, -to_i64(b.at(k, i)))));
    }
  }
  return out;
}

Seed mutate_seed(const Seed& seed, int k, Sign eps) {
  if (k < 0 || k >= seed.rank()) throw InvalidArgument("mutation direction out of range");
  Seed out = seed;
  out.b = mutate_matrix(seed.b, k, eps);
  if (seed.tag.kind == SemifieldKind::Universal)
    out.y = mutate_y_symbolic(seed.b, seed.y, k, eps);
  out.x[k] = mutated_xk(seed, k, eps);
  return out;
}

Seed rho(const Seed& seed, int k, Sign eps) {
  if (k < 0 || k >= seed.rank()) throw InvalidArgument("mutation direction out of range");
  Seed out = seed;
  out.x[k] = rho_xk(seed, k, eps);
  if (seed.tag.kind == SemifieldKind::Universal) {
    SemifieldElement one_plus = coeff_one_plus(seed, k, eps);
    for (int i = 0; i < seed.rank(); ++i)
      out.y[i] = sf_mul(seed.y[i], sf_pow(one_plus, -to_i64(seed.b.at(k, i))));
  }
  return out;
}

Seed tau_seed(const Seed& seed, int k, Sign eps) {
  if (k < 0 || k >= seed.rank()) throw InvalidArgument("mutation direction out of range");
  const int e = sign_value(eps);
  Seed out = seed;
  out.b = mutate_matrix(seed.b, k, eps);
  out.x[k] = sf_mul(sf_inv(seed.x[k]), x_monomial_factor(seed, k, eps));
  if (seed.tag.kind == SemifieldKind::Universal) {
    for (int i = 0; i < seed.rank(); ++i) {
      out.y[i] = i == k ? sf_inv(seed.y[k])
                        : sf_mul(seed.y[i],
                                 sf_pow(seed.y[k], to_i64(pos_part(e * seed.b.at(k, i)))));
    }
  }
  return out;
}

bool seeds_equal(const Seed& a, const Seed& b) {
  if (a.tag != b.tag || !(a.b == b.b)) return false;
  for (std::size_t i = 0; i < a.x.size(); ++i)
    if (!sf_eq(a.x[i], b.x[i])) return false;
  for (std::size_t i = 0; i < a.y.size(); ++i)
    if (!sf_eq(a.y[i], b.y[i])) return false;
  return true;
}

std::vector<std::string> seed_x_names(const Seed& seed) {
  const int n = seed.rank();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  if (seed.tag.kind == SemifieldKind::Universal)
    for (int i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
  return names;
}

std::vector<std::string> seed_y_names(const Seed& seed) {
  const int n = seed.rank();
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
  return names;
}

}  // namespace mutflow
