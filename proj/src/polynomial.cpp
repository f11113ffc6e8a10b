#include "mutflow/polynomial.hpp"

#include <atomic>
#include <sstream>

namespace mutflow {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  long da = 0, db = 0;
  for (auto v : a) da += v;
  for (auto v : b) db += v;
  if (da != db) return da < db;
  return a < b;
}

namespace {
std::atomic<std::size_t> g_term_limit{1000000};
}

std::size_t polynomial_term_limit() { return g_term_limit.load(std::memory_order_relaxed); }
void set_polynomial_term_limit(std::size_t limit) {
  g_term_limit.store(limit, std::memory_order_relaxed);
}

Polynomial::Polynomial(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 0) throw InvalidArgument("negative variable count");
}

Polynomial Polynomial::constant(int n_vars, Integer c) {
  Polynomial p(n_vars);
  if (c != 0) p.terms_.emplace(Exponents(n_vars, 0), std::move(c));
  return p;
}

Polynomial Polynomial::variable(int n_vars, int index) {
  if (index < 0 || index >= n_vars) throw InvalidArgument("variable index out of range");
  Exponents e(n_vars, 0);
  e[index] = 1;
  Polynomial p(n_vars);
  p.terms_.emplace(std::move(e), Integer(1));
  return p;
}

Polynomial Polynomial::monomial(Exponents e, Integer c) {
  Polynomial p(static_cast<int>(e.size()));
  for (auto v : e)
    if (v < 0) throw InvalidArgument("negative exponent in polynomial monomial");
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

bool Polynomial::is_one() const {
  if (terms_.size() != 1) return false;
  const auto& [e, c] = *terms_.begin();
  if (c != 1) return false;
  for (auto v : e)
    if (v != 0) return false;
  return true;
}

bool Polynomial::all_positive() const {
  for (const auto& [e, c] : terms_)
    if (c <= 0) return false;
  return true;
}

void Polynomial::add_term(const Exponents& e, const Integer& c) {
  if (static_cast<int>(e.size()) != n_vars_) throw DimensionMismatch("exponent vector length");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    check_limit();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (n_vars_ != o.n_vars_) throw DimensionMismatch("polynomial variable count");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (n_vars_ != o.n_vars_) throw DimensionMismatch("polynomial variable count");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_vars_ != b.n_vars_) throw DimensionMismatch("polynomial variable count");
  Polynomial r(a.n_vars_);
  Exponents e(a.n_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.n_vars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

void Polynomial::check_limit() const {
  if (terms_.size() > polynomial_term_limit())
    throw ResourceLimitError("polynomial term count exceeds configured limit");
}

Exponents Polynomial::min_exponents() const {
  if (is_zero()) throw InvalidArgument("min_exponents of zero polynomial");
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < n_vars_; ++i)
      if (e[i] < m[i]) m[i] = e[i];
  return m;
}

Exponents Polynomial::max_exponents() const {
  Exponents m(n_vars_, 0);
  for (const auto& [e, c] : terms_)
    for (int i = 0; i < n_vars_; ++i)
      if (e[i] > m[i]) m[i] = e[i];
  return m;
}

Integer Polynomial::content() const {
  Integer g = 0;
  for (const auto& [e, c] : terms_) {
    g = gcd(g, abs(c));
    if (g == 1) break;
  }
  return g;
}

void Polynomial::divide_content(const Integer& g) {
  if (g <= 0) throw InvalidArgument("content divisor must be positive");
  if (g == 1) return;
  for (auto& [e, c] : terms_) c /= g;
}

Polynomial Polynomial::shift_down(const Exponents& m) const {
  Polynomial r(n_vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f(n_vars_);
    for (int i = 0; i < n_vars_; ++i) {
      f[i] = e[i] - m[i];
      if (f[i] < 0) throw InvalidArgument("monomial does not divide polynomial");
    }
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

Polynomial Polynomial::embed(int new_n_vars, int offset) const {
  if (offset < 0 || offset + n_vars_ > new_n_vars) throw InvalidArgument("bad embed range");
  Polynomial r(new_n_vars);
  for (const auto& [e, c] : terms_) {
    Exponents f(new_n_vars, 0);
    for (int i = 0; i < n_vars_; ++i) f[offset + i] = e[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != n_vars_) throw DimensionMismatch("evaluation point length");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.convert_to<double>();
    for (int i = 0; i < n_vars_; ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (static_cast<int>(names.size()) != n_vars_) throw DimensionMismatch("variable name count");
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Descending graded-lex: leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) out << (c > 0 ? " + " : " - ");
    else if (c < 0) out << "-";
    first = false;
    Integer ac = abs(c);
    bool has_var = false;
    for (auto v : e) has_var = has_var || v != 0;
    if (ac != 1 || !has_var) out << ac.str();
    bool need_star = ac != 1;
    for (int i = 0; i < n_vars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << names[i];
      if (e[i] != 1) out << "^" << e[i];
      need_star = true;
    }
  }
  return out.str();
}

namespace {

// Value at (2,...,2): sum of c * 2^{total degree}. Used as a divisibility
// prefilter: a Z[y] quotient forces den(2,..,2) | num(2,..,2).
Integer eval_at_two(const Polynomial& p) {
  Integer acc = 0;
  for (const auto& [e, c] : p.terms()) {
    long deg = 0;
    for (auto v : e) deg += v;
    acc += c << deg;
  }
  return acc;
}

}  // namespace

Polynomial poly_pow(const Polynomial& p, std::int64_t e) {
  if (e < 0) throw InvalidArgument("negative polynomial power");
  Polynomial acc = Polynomial::constant(p.n_vars(), 1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

namespace {

// substitute variable v := xi, folding its exponent into the coefficients
Polynomial eval_var(const Polynomial& p, int v, const Integer& xi) {
  Polynomial r(p.n_vars());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    const int d = f[v];
    f[v] = 0;
    Integer coeff = c;
    for (int i = 0; i < d; ++i) coeff *= xi;
    r.add_term(f, coeff);
  }
  return r;
}

// balanced residue in [-xi/2, xi/2)
Integer smod(const Integer& a, const Integer& xi) {
  Integer m = a % xi;
  if (m < 0) m += xi;
  if (2 * m >= xi) m -= xi;
  return m;
}

Integer max_abs_coeff(const Polynomial& p) {
  Integer m = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer ac = abs(c);
    if (ac > m) m = std::move(ac);
  }
  return m;
}

// reconstruct the variable v from the xi-adic expansion of g_eval
std::optional<Polynomial> lift_var(const Polynomial& g_eval, int v, const Integer& xi,
                                   int max_deg) {
  Polynomial res(g_eval.n_vars());
  Polynomial cur = g_eval;
  int deg = 0;
  while (!cur.is_zero()) {
    if (deg > max_deg) return std::nullopt;
    Polynomial next(cur.n_vars());
    for (const auto& [e, c] : cur.terms()) {
      const Integer r = smod(c, xi);
      if (r != 0) {
        Exponents f = e;
        f[v] = deg;
        res.add_term(f, r);
      }
      const Integer q = (c - r) / xi;
      if (q != 0) next.add_term(e, q);
    }
    cur = std::move(next);
    ++deg;
  }
  return res;
}

// budget counts evaluation attempts across the whole recursion tree; when
// the true gcd is 1, every level would otherwise burn its full retry loop
// and the tree blows up as tries^depth.
std::optional<Polynomial> gcd_heuristic_impl(const Polynomial& a, const Polynomial& b,
                                             int& budget) {
  const int n = a.n_vars();
  const Integer cg = gcd(a.content(), b.content());
  Polynomial pa = a, pb = b;
  pa.divide_content(a.content());
  pb.divide_content(b.content());

  // pick a variable appearing in both; none left means the gcd is constant
  const Exponents ma = pa.max_exponents(), mb = pb.max_exponents();
  int v = -1, vdeg = 0;
  for (int i = 0; i < n; ++i)
    if (ma[i] > 0 && mb[i] > 0 && (v < 0 || std::min(ma[i], mb[i]) < vdeg)) {
      v = i;
      vdeg = std::min(ma[i], mb[i]);
    }
  if (v < 0) return Polynomial::constant(n, cg);

  Integer xi = 2 * std::min(max_abs_coeff(pa), max_abs_coeff(pb)) + 2;
  for (int tries = 0; tries < 6 && budget > 0; ++tries) {
    --budget;
    // keep the lifted coefficient sizes bounded
    if (msb(xi) * static_cast<std::size_t>(std::max(ma[v], mb[v]) + 1) > 400000)
      return std::nullopt;
    const Polynomial ea = eval_var(pa, v, xi);
    const Polynomial eb = eval_var(pb, v, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      if (auto ge = gcd_heuristic_impl(ea, eb, budget)) {
        if (auto g = lift_var(*ge, v, xi, std::min(ma[v], mb[v]))) {
          if (!g->is_zero()) {
            g->divide_content(g->content());
            if (divide_exact(pa, *g) && divide_exact(pb, *g)) {
              Polynomial out = *g * Polynomial::constant(n, cg);
              return out;
            }
          }
        }
      }
    }
    xi = xi * 73794 / 27011 + 3;  // standard reseed ratio, roughly golden^4
  }
  return std::nullopt;
}

}  // namespace

std::optional<Polynomial> gcd_heuristic(const Polynomial& a, const Polynomial& b) {
  if (a.n_vars() != b.n_vars()) throw DimensionMismatch("polynomial variable count");
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("gcd of zero polynomial");
  int budget = 24;
  auto g = gcd_heuristic_impl(a, b, budget);
  if (g) {
    // normalize the leading (grlex-greatest) coefficient to be positive
    if (g->terms().rbegin()->second < 0) {
      Polynomial neg(g->n_vars());
      neg -= *g;
      g = std::move(neg);
    }
  }
  return g;
}

std::optional<Polynomial> divide_exact(const Polynomial& num, const Polynomial& den) {
  if (num.n_vars() != den.n_vars()) throw DimensionMismatch("polynomial variable count");
  if (den.is_zero()) throw InvalidArgument("division by zero polynomial");
  if (num.is_zero()) return Polynomial(num.n_vars());
  const int n = num.n_vars();

  // Per-variable valuation and degree must not drop; both are additive over
  // products in an integral domain.
  const Exponents num_min = num.min_exponents(), den_min = den.min_exponents();
  const Exponents num_max = num.max_exponents(), den_max = den.max_exponents();
  for (int i = 0; i < n; ++i)
    if (num_min[i] < den_min[i] || num_max[i] < den_max[i]) return std::nullopt;

  const Integer dv = eval_at_two(den);
  if (dv != 0 && eval_at_two(num) % dv != 0) return std::nullopt;

  Polynomial rem = num;
  Polynomial quot(n);
  const auto& dlt = *den.terms().rbegin();  // leading term of divisor
  while (!rem.is_zero()) {
    const auto& rlt = *rem.terms().rbegin();
    Exponents q(n);
    for (int i = 0; i < n; ++i) {
      q[i] = rlt.first[i] - dlt.first[i];
      if (q[i] < 0) return std::nullopt;
    }
    if (rlt.second % dlt.second != 0) return std::nullopt;
    Integer qc = rlt.second / dlt.second;
    quot.add_term(q, qc);
    rem -= Polynomial::monomial(q, qc) * den;
  }
  return quot;
}

}  // namespace mutflow
