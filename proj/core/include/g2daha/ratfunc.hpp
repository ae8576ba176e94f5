#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2daha/mpoly.hpp"

namespace g2daha {

// Reduced fraction of sparse polynomials over K. Normal form: den != 0,
// gcd(num, den) = 1, den monic in graded-lex order; equality of normal forms
// is componentwise equality. Values are immutable once built.
//
// Alongside the canonical pair, a value carries a factor list for its
// denominator (product of the monic factors = den). The list is derived
// data: denominators are born as products of small factors in the operator
// formulas, and keeping them split lets reduction run by trial division
// instead of large gcds. Reduction is certified by the modular coprimality
// certificate and falls back to an exact gcd when the certificate declines,
// so the normal-form invariants never rest on the hint.
template <class K>
class RatFunc {
 public:
  using Poly = MPoly<K>;
  using Factors = std::vector<std::pair<Poly, int>>;

  RatFunc() : num_(), den_(Poly::one()) {}

  static RatFunc zero() { return RatFunc(); }
  static RatFunc one() { return of_poly(Poly::one()); }
  static RatFunc of_poly(Poly p) {
    RatFunc f;
    f.num_ = std::move(p);
    return f;
  }
  static RatFunc constant(K c) { return of_poly(Poly::constant(std::move(c))); }
  static RatFunc integer(long n) { return constant(K::from_long(n)); }
  static RatFunc ratio(long p, long q) { return constant(K::from_ratio(p, q)); }
  static RatFunc imag() { return constant(K::imag()); }
  static RatFunc var(Var v) { return of_poly(Poly::variable(v)); }

  // u^k for any integer k; q = u^4, q^{1/2} = u^2, q^{1/4} = u.
  static RatFunc upow(long k) {
    RatFunc f;
    if (k >= 0) {
      f.num_ = Poly::variable(Var::u, static_cast<int32_t>(k));
    } else {
      f.num_ = Poly::one();
      f.den_ = Poly::variable(Var::u, static_cast<int32_t>(-k));
      f.dfac_.push_back({f.den_, 1});
    }
    return f;
  }
  static RatFunc qpow(long k) { return upow(4 * k); }

  static RatFunc make(Poly n, Poly d) {
    if (d.is_zero()) throw DivisionByZero("rational function with zero denominator");
    Factors fs;
    if (!d.is_one()) {
      K lc = d.lead().c;
      if (!lc.is_one()) {
        K inv = lc.inv();
        n = n.scaled(inv);
        d = d.scaled(inv);
      }
      push_factor_split(fs, std::move(d));
    }
    return reduced(std::move(n), std::move(fs));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc operator-() const {
    RatFunc f = *this;
    f.num_ = -f.num_;
    return f;
  }

  RatFunc inverse() const {
    if (num_.is_zero()) throw DivisionByZero("inverse of the zero function");
    RatFunc f;
    K c = num_.lead().c.inv();
    f.num_ = den_.scaled(c);
    f.den_ = num_.scaled(c);
    if (!f.den_.is_one()) push_factor_split(f.dfac_, f.den_);  // opaque factor
    return f;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      Poly t = a.num_ + b.num_;
      if (t.is_zero()) return zero();
      return reduced(std::move(t), a.dfac_);
    }
    // Common denominator by factor multiset: no polynomial gcd involved.
    Factors merged = a.dfac_;
    Poly scale_a = Poly::one();  // lcm/den_a
    Poly scale_b = Poly::one();  // lcm/den_b
    for (const auto& [f, m] : b.dfac_) {
      int have = 0;
      for (auto& [g, n] : merged)
        if (g == f) {
          have = n;
          if (m > n) {
            for (int k = n; k < m; ++k) scale_a = scale_a * f;
            n = m;
          }
          break;
        }
      if (have == 0) {
        merged.push_back({f, m});
        for (int k = 0; k < m; ++k) scale_a = scale_a * f;
      }
    }
    for (const auto& [f, m] : merged) {
      int in_b = 0;
      for (const auto& [g, n] : b.dfac_)
        if (g == f) {
          in_b = n;
          break;
        }
      for (int k = in_b; k < m; ++k) scale_b = scale_b * f;
    }
    Poly t = a.num_ * scale_a + b.num_ * scale_b;
    if (t.is_zero()) return zero();
    return reduced(std::move(t), std::move(merged));
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    // Cross-reduce each numerator against the other factor list, then merge.
    Poly na = a.num_;
    Factors db = b.dfac_;
    strip_divisors(na, db);
    Poly nb = b.num_;
    Factors da = a.dfac_;
    strip_divisors(nb, da);
    for (auto& fm : db) da.push_back(std::move(fm));
    return reduced(na * nb, std::move(da));
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero function");
    return a * b.inverse();
  }

  friend RatFunc operator+(const RatFunc& a, long n) { return a + integer(n); }
  friend RatFunc operator+(long n, const RatFunc& a) { return integer(n) + a; }
  friend RatFunc operator-(const RatFunc& a, long n) { return a - integer(n); }
  friend RatFunc operator-(long n, const RatFunc& a) { return integer(n) - a; }
  friend RatFunc operator*(const RatFunc& a, long n) { return a * integer(n); }
  friend RatFunc operator*(long n, const RatFunc& a) { return integer(n) * a; }
  friend RatFunc operator/(const RatFunc& a, long n) { return a / integer(n); }
  friend RatFunc operator/(long n, const RatFunc& a) { return integer(n) / a; }

  RatFunc pow(long k) const {
    if (k == 0) return one();
    RatFunc base = k < 0 ? inverse() : *this;
    unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    RatFunc acc = one();
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // Coefficient transport for operator composition: the substitution
  //   x -> u^{4e} x^{(-1)^sigma},  x0 -> u^{2e0} x0,  x1 -> u^{2e1} x1.
  // Monomial-to-monomial, so the factor list transports factor by factor.
  RatFunc shift_subst(bool sigma, int e, int e0, int e1) const {
    if (is_zero() || (!sigma && e == 0 && e0 == 0 && e1 == 0)) return *this;
    // Transform numerator and denominator together with one shared Laurent
    // compensation, preserving the value exactly.
    int64_t min_u = 0, min_x = 0;
    std::vector<typename Poly::Term> nts, dts;
    shift_terms(num_, sigma, e, e0, e1, min_u, min_x, nts);
    shift_terms(den_, sigma, e, e0, e1, min_u, min_x, dts);
    if (min_u > 0) min_u = 0;
    if (min_x > 0) min_x = 0;
    for (auto* ts : {&nts, &dts})
      for (auto& t : *ts) {
        t.m[Var::u] = static_cast<int32_t>(t.m[Var::u] - min_u);
        t.m[Var::x] = static_cast<int32_t>(t.m[Var::x] - min_x);
      }
    RatFunc f;
    f.num_ = Poly::from_terms(std::move(nts));
    f.den_ = Poly::from_terms(std::move(dts));
    // Transport the factor list; each factor stays small under the shift.
    for (const auto& [fac, m] : dfac_) {
      Poly g = shift_factor(fac, sigma, e, e0, e1);
      if (!g.is_one()) f.dfac_.push_back({std::move(g), m});
    }
    // The per-factor normalization dropped monomials and constants; the
    // residual den / prod(factors) is a monomial factor (up to the leading
    // constant, which normalize_lead clears).
    Poly rebuilt = Poly::one();
    for (const auto& [fac, m] : f.dfac_)
      for (int k = 0; k < m; ++k) rebuilt = rebuilt * fac;
    Poly ratio = Poly::divide_exact(f.den_, rebuilt);
    K c = ratio.lead().c;
    if (!c.is_one()) {
      K inv = c.inv();
      f.num_ = f.num_.scaled(inv);
      f.den_ = f.den_.scaled(inv);
    }
    if (!ratio.lead().m.is_unit())
      f.dfac_.push_back({Poly::monomial(ratio.lead().m, K::one()), 1});
    f.normalize_monomials();
    f.normalize_lead();
    return f;
  }

  // General composition f(bindings); unbound variables stay themselves.
  RatFunc subst(const std::map<Var, RatFunc>& bindings) const {
    RatFunc n = eval_poly(num_, bindings);
    RatFunc d = eval_poly(den_, bindings);
    if (d.is_zero())
      throw SubstitutionPole("substitution makes a denominator vanish identically");
    return n / d;
  }

  // Point evaluation; nullopt when the denominator vanishes at the point.
  std::optional<K> eval(const std::array<K, kNumVars>& pt) const {
    K d = den_.eval(pt);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(pt) * d.inv();
  }

  // Testing hook: the factor list must multiply out to the denominator.
  bool factors_consistent() const {
    Poly p = Poly::one();
    for (const auto& [f, m] : dfac_)
      for (int k = 0; k < m; ++k) p = p * f;
    return p == den_;
  }

  std::string str() const;

 private:
  // num / prod(factors), fully reduced: trial-divide the numerator by each
  // factor, certify the result coprime, fall back to one exact gcd if the
  // certificate declines.
  static RatFunc reduced(Poly n, Factors fs) {
    if (n.is_zero()) return zero();
    dedup_factors(fs);
    strip_divisors(n, fs);
    RatFunc f;
    f.num_ = std::move(n);
    f.den_ = Poly::one();
    for (const auto& [fac, m] : fs)
      for (int k = 0; k < m; ++k) f.den_ = f.den_ * fac;
    f.dfac_ = std::move(fs);
    f.normalize_monomials();
    f.normalize_lead();
    if (!f.den_.is_one() && !coprime_certified(f.num_, f.den_)) {
      Poly g = poly_gcd(f.num_, f.den_);
      if (!g.is_one()) {
        f.num_ = Poly::divide_exact(f.num_, g);
        f.den_ = Poly::divide_exact(f.den_, g);
        f.normalize_lead();
        f.refactor();
      }
    }
    return f;
  }

  // Merges equal factor entries; the lcm logic in operator+ relies on each
  // factor appearing once.
  static void dedup_factors(Factors& fs) {
    for (size_t i = 0; i < fs.size(); ++i) {
      if (fs[i].second == 0) continue;
      for (size_t j = i + 1; j < fs.size(); ++j)
        if (fs[j].second != 0 && fs[j].first == fs[i].first) {
          fs[i].second += fs[j].second;
          fs[j].second = 0;
        }
    }
    std::erase_if(fs, [](const auto& fm) { return fm.second == 0; });
  }

  // Divides n by every factor that goes in evenly, consuming multiplicity.
  static void strip_divisors(Poly& n, Factors& fs) {
    size_t out = 0;
    for (size_t i = 0; i < fs.size(); ++i) {
      auto& [f, m] = fs[i];
      while (m > 0 && !f.is_one()) {
        auto q = Poly::try_divide(n, f);
        if (!q) break;
        n = *std::move(q);
        --m;
      }
      if (m > 0) {
        if (out != i) fs[out] = std::move(fs[i]);
        ++out;
      }
    }
    fs.resize(out);
  }

  // True when gcd(n, d) = 1 is proven by the per-variable modular
  // certificates (constant gcd needs every shared variable certified).
  static bool coprime_certified(const Poly& n, const Poly& d) {
    // Monomial content is handled by normalize_monomials; a shared variable
    // certificate failing means a likely common factor.
    if (n.is_constant() || d.is_constant()) return true;
    for (int i = 0; i < kNumVars; ++i) {
      Var v = static_cast<Var>(i);
      if (n.depends_on(v) && d.depends_on(v) && !detail::certified_coprime_in(n, d, v))
        return false;
    }
    return true;
  }

  // Splits off monomial content so stored polynomial factors stay
  // content-free (normalize_monomials depends on that).
  static void push_factor_split(Factors& fs, Poly f) {
    Monomial mc = f.monomial_content();
    if (!mc.is_unit()) {
      fs.push_back({Poly::monomial(mc, K::one()), 1});
      f = f.div_monomial(mc);
    }
    if (!f.is_one()) fs.push_back({std::move(f), 1});
  }

  // Rebuilds the factor list after an exact-gcd reduction.
  void refactor() {
    Factors out;
    Poly rest = den_;
    for (auto& [f, m] : dfac_) {
      int keep = 0;
      while (keep < m) {
        auto q = Poly::try_divide(rest, f);
        if (!q) break;
        rest = *std::move(q);
        ++keep;
      }
      if (keep > 0) out.push_back({f, keep});
    }
    if (!rest.is_one()) push_factor_split(out, std::move(rest));
    dfac_ = std::move(out);
  }

  // Cancels monomial content between num and den. The den's monomial
  // content lives entirely in the single-term entries of the factor list
  // (polynomial factors are kept content-free), so those entries are
  // recombined into one residual monomial factor.
  void normalize_monomials() {
    Monomial mn = num_.monomial_content();
    Monomial md = den_.monomial_content();
    Monomial common;
    bool any = false;
    for (int i = 0; i < kNumVars; ++i) {
      common.e[i] = std::min(mn.e[i], md.e[i]);
      any |= common.e[i] != 0;
    }
    if (!any) return;
    num_ = num_.div_monomial(common);
    den_ = den_.div_monomial(common);
    Factors out;
    Monomial mono;  // product of all single-term factors
    for (auto& [f, m] : dfac_) {
      if (f.size() == 1) {
        for (int k = 0; k < m; ++k) mono = mono * f.lead().m;
      } else {
        out.push_back({std::move(f), m});
      }
    }
    mono = mono / common;
    if (!mono.is_unit()) out.push_back({Poly::monomial(mono, K::one()), 1});
    dfac_ = std::move(out);
  }

  void normalize_lead() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    const K& lc = den_.lead().c;
    if (!lc.is_one()) {
      K inv = lc.inv();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  static void shift_terms(const Poly& p, bool sigma, int e, int e0, int e1, int64_t& min_u,
                          int64_t& min_x, std::vector<typename Poly::Term>& out) {
    out.reserve(out.size() + p.size());
    for (const auto& t : p.terms()) {
      typename Poly::Term nt = t;
      int64_t uexp = static_cast<int64_t>(nt.m[Var::u]) + 4ll * e * nt.m[Var::x] +
                     2ll * e0 * nt.m[Var::x0] + 2ll * e1 * nt.m[Var::x1];
      int64_t xexp = sigma ? -static_cast<int64_t>(nt.m[Var::x]) : nt.m[Var::x];
      min_u = std::min(min_u, uexp);
      min_x = std::min(min_x, xexp);
      nt.m[Var::u] = static_cast<int32_t>(uexp);
      nt.m[Var::x] = static_cast<int32_t>(xexp);
      out.push_back(std::move(nt));
    }
  }

  // Shifted factor in storage form: content-free and monic.
  static Poly shift_factor(const Poly& p, bool sigma, int e, int e0, int e1) {
    int64_t min_u = 0, min_x = 0;
    std::vector<typename Poly::Term> ts;
    shift_terms(p, sigma, e, e0, e1, min_u, min_x, ts);
    for (auto& t : ts) {
      t.m[Var::u] = static_cast<int32_t>(t.m[Var::u] - min_u);
      t.m[Var::x] = static_cast<int32_t>(t.m[Var::x] - min_x);
    }
    Poly out = Poly::from_terms(std::move(ts));
    Monomial mc = out.monomial_content();
    if (!mc.is_unit()) out = out.div_monomial(mc);
    if (!out.is_zero() && !out.lead().c.is_one()) out = out.scaled(out.lead().c.inv());
    return out;
  }

  static RatFunc eval_poly(const Poly& p, const std::map<Var, RatFunc>& bindings) {
    std::array<const RatFunc*, kNumVars> bound{};
    for (const auto& [v, f] : bindings) bound[static_cast<int>(v)] = &f;
    std::array<std::vector<RatFunc>, kNumVars> pows;
    RatFunc acc = zero();
    for (const auto& t : p.terms()) {
      RatFunc term = constant(t.c);
      for (int i = 0; i < kNumVars; ++i) {
        int32_t e = t.m.e[i];
        if (e == 0) continue;
        if (!bound[i]) {
          term = term * of_poly(Poly::variable(static_cast<Var>(i), e));
          continue;
        }
        auto& pw = pows[i];
        if (pw.empty()) pw.push_back(one());
        while (static_cast<int32_t>(pw.size()) <= e) pw.push_back(pw.back() * *bound[i]);
        term = term * pw[e];
      }
      acc = acc + term;
    }
    return acc;
  }

  Poly num_;
  Poly den_;
  Factors dfac_;
};

// x + 1/x, for rational-function arguments.
template <class K>
RatFunc<K> ch(const RatFunc<K>& f) {
  return f + f.inverse();
}
// x - 1/x.
template <class K>
RatFunc<K> sh(const RatFunc<K>& f) {
  return f - f.inverse();
}

}  // namespace g2daha
