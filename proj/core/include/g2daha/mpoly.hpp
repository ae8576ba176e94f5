#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "g2daha/errors.hpp"
#include "g2daha/field.hpp"
#include "g2daha/monomial.hpp"

namespace g2daha {

// Sparse multivariate polynomial over a coefficient field K. Terms are kept
// sorted in descending graded-lex order with no zero coefficients; two equal
// polynomials have identical term vectors.
template <class K>
class MPoly {
 public:
  struct Term {
    Monomial m;
    K c;
  };

  MPoly() = default;

  static MPoly zero() { return MPoly(); }
  static MPoly one() { return constant(K::one()); }
  static MPoly constant(K c) {
    MPoly p;
    if (!c.is_zero()) p.terms_.push_back({Monomial::unit(), std::move(c)});
    return p;
  }
  static MPoly variable(Var v, int32_t k = 1) {
    MPoly p;
    p.terms_.push_back({Monomial::var(v, k), K::one()});
    return p;
  }
  static MPoly monomial(Monomial m, K c) {
    MPoly p;
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }

  // Normalizes an arbitrary term list: sorts, merges duplicates, drops zeros.
  static MPoly from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return Monomial::cmp(a.m, b.m) > 0; });
    MPoly p;
    p.terms_.reserve(ts.size());
    for (auto& t : ts) {
      if (!p.terms_.empty() && p.terms_.back().m == t.m) {
        p.terms_.back().c = p.terms_.back().c + t.c;
        if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
      } else if (!t.c.is_zero()) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_unit());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].m.is_unit() && terms_[0].c.is_one();
  }
  size_t size() const { return terms_.size(); }

  const Term& lead() const { return terms_.front(); }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].m != b.terms_[i].m || !(a.terms_[i].c == b.terms_[i].c))
        return false;
    return true;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  friend MPoly operator+(const MPoly& a, const MPoly& b) { return merge(a, b, false); }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return merge(a, b, true); }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }

  MPoly scaled(const K& c) const {
    if (c.is_zero()) return MPoly();
    MPoly r = *this;
    for (auto& t : r.terms_) t.c = t.c * c;
    return r;
  }

  MPoly mul_monomial(const Monomial& m, const K& c) const {
    if (c.is_zero()) return MPoly();
    MPoly r = *this;
    for (auto& t : r.terms_) {
      t.m = t.m * m;
      t.c = t.c * c;
    }
    return r;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    if (b.terms_.size() == 1) return a.mul_monomial(b.terms_[0].m, b.terms_[0].c);
    if (a.terms_.size() == 1) return b.mul_monomial(a.terms_[0].m, a.terms_[0].c);
    std::unordered_map<Monomial, K, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        Monomial m = ta.m * tb.m;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(m, ta.c * tb.c);
        else
          it->second = it->second + ta.c * tb.c;
      }
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& kv : acc)
      if (!kv.second.is_zero()) ts.push_back({kv.first, std::move(kv.second)});
    std::sort(ts.begin(), ts.end(),
              [](const Term& x, const Term& y) { return Monomial::cmp(x.m, y.m) > 0; });
    MPoly r;
    r.terms_ = std::move(ts);
    return r;
  }

  int32_t degree_in(Var v) const {
    int32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m[v]);
    return d;
  }
  int32_t min_exponent(Var v) const {
    if (terms_.empty()) return 0;
    int32_t d = terms_[0].m[v];
    for (const auto& t : terms_) d = std::min(d, t.m[v]);
    return d;
  }
  bool depends_on(Var v) const { return degree_in(v) > 0; }

  // Componentwise minimum exponent vector (the monomial content).
  Monomial monomial_content() const {
    Monomial m;
    if (terms_.empty()) return m;
    m = terms_[0].m;
    for (const auto& t : terms_)
      for (int i = 0; i < kNumVars; ++i) m.e[i] = std::min(m.e[i], t.m.e[i]);
    return m;
  }

  MPoly div_monomial(const Monomial& m) const {
    MPoly r = *this;
    for (auto& t : r.terms_) t.m = t.m / m;
    return r;
  }

  // Coefficient of v^d, with the v-exponent removed.
  MPoly coeff_of(Var v, int32_t d) const {
    std::vector<Term> ts;
    for (const auto& t : terms_)
      if (t.m[v] == d) {
        Term u = t;
        u.m[v] = 0;
        ts.push_back(std::move(u));
      }
    return from_terms(std::move(ts));
  }

  MPoly monic() const {
    if (terms_.empty()) return *this;
    return scaled(lead().c.inv());
  }

  // Exact multivariate division; nullopt when b does not divide a.
  static std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    MPoly r = a;
    std::vector<Term> q;
    const Term& lb = b.lead();
    while (!r.is_zero()) {
      const Term& lr = r.lead();
      if (!lb.m.divides(lr.m)) return std::nullopt;
      Term t{lr.m / lb.m, lr.c / lb.c};
      r = r - b.mul_monomial(t.m, t.c);
      q.push_back(std::move(t));
    }
    MPoly res;
    res.terms_ = std::move(q);
    return res;
  }

  static MPoly divide_exact(const MPoly& a, const MPoly& b) {
    auto q = try_divide(a, b);
    if (!q) throw DivisionByZero("inexact polynomial division");
    return *std::move(q);
  }

  // Evaluation at a full point; powers are cached per variable.
  K eval(const std::array<K, kNumVars>& pt) const {
    std::array<std::vector<K>, kNumVars> pows;
    for (int i = 0; i < kNumVars; ++i) pows[i].push_back(K::one());
    K acc = K::zero();
    for (const auto& t : terms_) {
      K v = t.c;
      for (int i = 0; i < kNumVars; ++i) {
        int32_t e = t.m.e[i];
        auto& pw = pows[i];
        while (static_cast<int32_t>(pw.size()) <= e) pw.push_back(pw.back() * pt[i]);
        if (e > 0) v = v * pw[e];
      }
      acc = acc + v;
    }
    return acc;
  }

 private:
  static MPoly merge(const MPoly& a, const MPoly& b, bool subtract) {
    MPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int c = Monomial::cmp(a.terms_[i].m, b.terms_[j].m);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        Term t = b.terms_[j++];
        if (subtract) t.c = -t.c;
        r.terms_.push_back(std::move(t));
      } else {
        K c2 = subtract ? a.terms_[i].c - b.terms_[j].c : a.terms_[i].c + b.terms_[j].c;
        if (!c2.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(c2)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      Term t = b.terms_[j];
      if (subtract) t.c = -t.c;
      r.terms_.push_back(std::move(t));
    }
    return r;
  }

  std::vector<Term> terms_;
};

namespace detail {

template <class K>
bool is_univariate_in(const MPoly<K>& p, Var v) {
  for (const auto& t : p.terms())
    for (int i = 0; i < kNumVars; ++i)
      if (i != static_cast<int>(v) && t.m.e[i] != 0) return false;
  return true;
}

// Dense Euclid for the single-variable base case; coefficients live in a
// field so plain monic remainders suffice.
template <class K>
MPoly<K> gcd_univariate(const MPoly<K>& a, const MPoly<K>& b, Var v) {
  auto to_dense = [&](const MPoly<K>& p) {
    std::vector<K> d(p.degree_in(v) + 1, K::zero());
    for (const auto& t : p.terms()) d[t.m[v]] = t.c;
    return d;
  };
  auto deg = [](const std::vector<K>& d) {
    int n = static_cast<int>(d.size()) - 1;
    while (n >= 0 && d[n].is_zero()) --n;
    return n;
  };
  std::vector<K> A = to_dense(a), B = to_dense(b);
  int da = deg(A), db = deg(B);
  while (db >= 0) {
    // A mod B
    K lb = B[db].inv();
    for (int sh = da - db; sh >= 0; --sh) {
      if (A[db + sh].is_zero()) continue;
      K f = A[db + sh] * lb;
      for (int k = 0; k <= db; ++k) A[k + sh] = A[k + sh] - f * B[k];
    }
    std::swap(A, B);
    da = deg(A);
    db = deg(B);
  }
  std::vector<typename MPoly<K>::Term> ts;
  for (int k = 0; k <= da; ++k)
    if (!A[k].is_zero()) ts.push_back({Monomial::var(v, k), A[k]});
  return MPoly<K>::from_terms(std::move(ts)).monic();
}

template <class K>
MPoly<K> gcd_impl(const MPoly<K>& a, const MPoly<K>& b);

// Content of p with respect to v: gcd of the coefficients of the powers of v.
template <class K>
MPoly<K> content_in(const MPoly<K>& p, Var v) {
  MPoly<K> g;
  int32_t d = p.degree_in(v);
  for (int32_t k = d; k >= 0; --k) {
    MPoly<K> c = p.coeff_of(v, k);
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd_impl(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder: lc_v(b)^{deg a - deg b + 1} a mod b. The trailing
// power fix-up keeps the exponent exact when a degree drops by more than
// one, which the subresultant divisions rely on.
template <class K>
MPoly<K> prem(MPoly<K> r, const MPoly<K>& b, Var v) {
  int32_t db = b.degree_in(v);
  MPoly<K> lb = b.coeff_of(v, db);
  int32_t steps_left = r.degree_in(v) - db + 1;
  int32_t dr;
  while (!r.is_zero() && (dr = r.degree_in(v)) >= db) {
    MPoly<K> lr = r.coeff_of(v, dr);
    MPoly<K> shift = lr.mul_monomial(Monomial::var(v, dr - db), K::one());
    r = lb * r - shift * b;
    --steps_left;
  }
  for (; steps_left > 0; --steps_left) r = lb * r;
  return r;
}

// Primitive part of p in v (monomial content and v-content removed).
template <class K>
MPoly<K> primitive_part(const MPoly<K>& p, Var v) {
  MPoly<K> q = p.div_monomial(p.monomial_content());
  MPoly<K> c = content_in(q, v);
  if (!c.is_one()) q = MPoly<K>::divide_exact(q, c);
  return q;
}

// Reduction of coefficients into GF(p^2) for the coprimality certificate;
// nullopt when the coefficient cannot be reduced (denominator hits p).
inline std::optional<ModGauss> probe_cast(const GaussRat& c) {
  auto red = [](const mpq_class& q) -> std::optional<uint64_t> {
    uint64_t d = mpz_fdiv_ui(q.get_den().get_mpz_t(), ModGauss::P);
    if (d == 0) return std::nullopt;
    uint64_t n = mpz_fdiv_ui(q.get_num().get_mpz_t(), ModGauss::P);
    return ModGauss::mulm(n, ModGauss::invm(d));
  };
  auto re = red(c.re), im = red(c.im);
  if (!re || !im) return std::nullopt;
  return ModGauss(*re, *im);
}
inline std::optional<ModGauss> probe_cast(const ModGauss& c) { return c; }

inline int univariate_gcd_degree_mod(std::vector<ModGauss> A, std::vector<ModGauss> B) {
  auto deg = [](const std::vector<ModGauss>& d) {
    int n = static_cast<int>(d.size()) - 1;
    while (n >= 0 && d[n].is_zero()) --n;
    return n;
  };
  int da = deg(A), db = deg(B);
  while (db >= 0) {
    ModGauss lb = B[db].inv();
    for (int sh = da - db; sh >= 0; --sh) {
      if (A[db + sh].is_zero()) continue;
      ModGauss f = A[db + sh] * lb;
      for (int k = 0; k <= db; ++k) A[k + sh] = A[k + sh] - f * B[k];
    }
    std::swap(A, B);
    da = deg(A);
    db = deg(B);
  }
  return da;
}

// Sound coprimality certificate in the variable v. Evaluates both inputs at
// a pseudo-random GF(p^2) point in the other variables. When both leading
// v-coefficients survive the evaluation, the specialized resultant equals
// the image of the exact resultant, so a trivial image gcd proves that the
// exact gcd is free of v. Failure (unlucky point, p in a denominator) just
// declines the shortcut.
template <class K>
bool certified_coprime_in(const MPoly<K>& a, const MPoly<K>& b, Var v) {
  static std::atomic<uint64_t> counter{0x6b77e98d4a2cf135ull};
  for (int attempt = 0; attempt < 2; ++attempt) {
    uint64_t state = counter.fetch_add(0x9e3779b97f4a7c15ull, std::memory_order_relaxed);
    std::array<ModGauss, kNumVars> pt;
    for (int i = 0; i < kNumVars; ++i)
      pt[i] = ModGauss(splitmix64(state) % (ModGauss::P - 1) + 1, splitmix64(state) % ModGauss::P);
    auto eval_uni = [&](const MPoly<K>& p) -> std::optional<std::vector<ModGauss>> {
      std::vector<ModGauss> out(p.degree_in(v) + 1, ModGauss::zero());
      for (const auto& t : p.terms()) {
        auto c = probe_cast(t.c);
        if (!c) return std::nullopt;
        ModGauss val = *c;
        for (int i = 0; i < kNumVars; ++i) {
          if (i == static_cast<int>(v)) continue;
          for (int32_t k = 0; k < t.m.e[i]; ++k) val = val * pt[i];
        }
        out[t.m[v]] = out[t.m[v]] + val;
      }
      return out;
    };
    auto A = eval_uni(a);
    auto B = eval_uni(b);
    if (!A || !B) return false;
    if ((*A)[a.degree_in(v)].is_zero() || (*B)[b.degree_in(v)].is_zero()) continue;
    if (univariate_gcd_degree_mod(std::move(*A), std::move(*B)) == 0) return true;
    return false;  // the image shares a factor; the shortcut cannot help
  }
  return false;
}

template <class K>
MPoly<K> gcd_core(const MPoly<K>& a, const MPoly<K>& b) {
  if (a.is_constant() || b.is_constant()) return MPoly<K>::one();
  // Main variable: common variable with the fewest remainder steps; on the
  // way, peel off any variable in which the inputs are provably coprime.
  int main_var = -1;
  int32_t best = 0;
  for (int i = 0; i < kNumVars; ++i) {
    Var v = static_cast<Var>(i);
    int32_t da = a.degree_in(v), db = b.degree_in(v);
    if (da > 0 && db > 0) {
      if (certified_coprime_in(a, b, v))
        return gcd_impl(content_in(a, v), content_in(b, v));
      int32_t score = std::min(da, db);
      if (main_var < 0 || score < best) {
        main_var = i;
        best = score;
      }
    }
  }
  if (main_var < 0) return MPoly<K>::one();
  Var v = static_cast<Var>(main_var);
  if (is_univariate_in(a, v) && is_univariate_in(b, v)) return gcd_univariate(a, b, v);

  MPoly<K> ca = content_in(a, v);
  MPoly<K> cb = content_in(b, v);
  MPoly<K> ppa = ca.is_one() ? a : MPoly<K>::divide_exact(a, ca);
  MPoly<K> ppb = cb.is_one() ? b : MPoly<K>::divide_exact(b, cb);
  MPoly<K> cg = gcd_impl(ca, cb);

  if (ppa.degree_in(v) < ppb.degree_in(v)) std::swap(ppa, ppb);
  // Subresultant remainder sequence: the known lc^d h^{1-d} divisors keep
  // coefficient growth tame without per-step recursive content gcds.
  MPoly<K> g = MPoly<K>::one();
  MPoly<K> h = MPoly<K>::one();
  MPoly<K> res;
  while (true) {
    if (ppb.degree_in(v) == 0) {
      res = MPoly<K>::one();
      break;
    }
    int32_t delta = ppa.degree_in(v) - ppb.degree_in(v);
    MPoly<K> r = prem(ppa, ppb, v);
    if (r.is_zero()) {
      res = primitive_part(ppb, v);
      break;
    }
    ppa = ppb;
    MPoly<K> divisor = g;  // g * h^delta
    for (int32_t k = 0; k < delta; ++k) divisor = divisor * h;
    ppb = MPoly<K>::divide_exact(r, divisor);
    g = ppa.coeff_of(v, ppa.degree_in(v));
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      MPoly<K> gd = g;
      for (int32_t k = 1; k < delta; ++k) gd = gd * g;
      MPoly<K> hd = h;
      for (int32_t k = 2; k < delta; ++k) hd = hd * h;
      h = MPoly<K>::divide_exact(gd, hd);
    }
  }
  return (cg * res).monic();
}

template <class K>
MPoly<K> gcd_impl(const MPoly<K>& a, const MPoly<K>& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Monomial ma = a.monomial_content();
  Monomial mb = b.monomial_content();
  Monomial mg;
  for (int i = 0; i < kNumVars; ++i) mg.e[i] = std::min(ma.e[i], mb.e[i]);
  MPoly<K> core =
      gcd_core(ma.is_unit() ? a : a.div_monomial(ma), mb.is_unit() ? b : b.div_monomial(mb));
  return core.mul_monomial(mg, K::one()).monic();
}

}  // namespace detail

// Monic gcd in K[u, x, x0, x1, t0..t3]: content extraction plus a
// subresultant remainder sequence, recursing into the coefficient ring,
// with a dense Euclid base case for univariate inputs. Set G2DAHA_GCD_TRACE
// to log calls slower than the given number of milliseconds to stderr.
template <class K>
MPoly<K> poly_gcd(const MPoly<K>& a, const MPoly<K>& b) {
  static const long trace_ms = [] {
    const char* env = std::getenv("G2DAHA_GCD_TRACE");
    return env ? std::atol(env) : -1;
  }();
  if (trace_ms < 0) return detail::gcd_impl(a, b);
  auto t0 = std::chrono::steady_clock::now();
  MPoly<K> g = detail::gcd_impl(a, b);
  auto t1 = std::chrono::steady_clock::now();
  long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  if (ms >= trace_ms) {
    std::fprintf(stderr, "[gcd %ld ms] |a|=%zu |b|=%zu |g|=%zu degs a(", ms, a.size(), b.size(),
                 g.size());
    for (int i = 0; i < kNumVars; ++i)
      std::fprintf(stderr, "%d%s", a.degree_in(static_cast<Var>(i)), i + 1 < kNumVars ? "," : "");
    std::fprintf(stderr, ") b(");
    for (int i = 0; i < kNumVars; ++i)
      std::fprintf(stderr, "%d%s", b.degree_in(static_cast<Var>(i)), i + 1 < kNumVars ? "," : "");
    std::fprintf(stderr, ")\n");
  }
  return g;
}

}  // namespace g2daha
