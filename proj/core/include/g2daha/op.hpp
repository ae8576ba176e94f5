#pragma once

#include <map>
#include <string>

#include "g2daha/ratfunc.hpp"
#include "g2daha/render.hpp"

namespace g2daha {

// One normal-form symbol s^sigma D^e D0^e0 D1^e1, acting on functions as
//   f(x, x0, x1) -> f(u^{4e} x^{(-1)^sigma}, u^{2e0} x0, u^{2e1} x1).
// Keys order lexicographically by (sigma, e, e0, e1); that order is the
// canonical term order for printing.
struct OpKey {
  uint8_t sigma = 0;
  int32_t e = 0;
  int32_t e0 = 0;
  int32_t e1 = 0;

  friend bool operator==(const OpKey& a, const OpKey& b) {
    return a.sigma == b.sigma && a.e == b.e && a.e0 == b.e0 && a.e1 == b.e1;
  }
  friend bool operator<(const OpKey& a, const OpKey& b) {
    if (a.sigma != b.sigma) return a.sigma < b.sigma;
    if (a.e != b.e) return a.e < b.e;
    if (a.e0 != b.e0) return a.e0 < b.e0;
    return a.e1 < b.e1;
  }

  std::string str() const {
    std::string s;
    auto part = [&s](const char* name, int32_t k) {
      if (k == 0) return;
      if (!s.empty()) s += " ";
      s += name;
      if (k != 1) s += "^" + std::to_string(k);
    };
    if (sigma) s += "s";
    part("D", e);
    part("D0", e0);
    part("D1", e1);
    return s;
  }
};

// Finite normal-form sum of coefficient * shift-symbol terms. Coefficients
// stand to the left of the shift symbols; composition commutes the right
// factor's coefficient past the left factor's key via shift_subst. Two
// operators are equal iff their term maps are identical.
template <class K>
class Operator {
 public:
  using RF = RatFunc<K>;

  Operator() = default;

  static Operator zero() { return Operator(); }
  static Operator identity() { return term(OpKey{}, RF::one()); }
  // Multiplication by a function.
  static Operator mult(RF f) { return term(OpKey{}, std::move(f)); }
  // The reflection s : f(x) -> f(x^{-1}).
  static Operator refl() { return term(OpKey{0b1, 0, 0, 0}, RF::one()); }
  // D^e : f(x) -> f(q^e x).
  static Operator shift_x(int32_t e) { return term(OpKey{0, e, 0, 0}, RF::one()); }
  // D0^e : x0 -> q^{e/2} x0 and D1^e : x1 -> q^{e/2} x1.
  static Operator shift_x0(int32_t e) { return term(OpKey{0, 0, e, 0}, RF::one()); }
  static Operator shift_x1(int32_t e) { return term(OpKey{0, 0, 0, e}, RF::one()); }
  static Operator term(OpKey k, RF c) {
    Operator op;
    if (!c.is_zero()) op.terms_.emplace(k, std::move(c));
    return op;
  }

  const std::map<OpKey, RF>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  friend bool operator==(const Operator& a, const Operator& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Operator& a, const Operator& b) { return !(a == b); }

  friend Operator operator+(const Operator& a, const Operator& b) {
    Operator r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, c);
    return r;
  }
  friend Operator operator-(const Operator& a, const Operator& b) {
    Operator r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
    return r;
  }
  Operator operator-() const {
    Operator r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
  }

  // Left multiplication by a function (coefficients sit left of the keys).
  friend Operator operator*(const RF& c, const Operator& a) {
    Operator r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : a.terms_) {
      RF p = c * v;
      if (!p.is_zero()) r.terms_.emplace(k, std::move(p));
    }
    return r;
  }

  // Composition: (a * b) f = a (b f).
  friend Operator operator*(const Operator& a, const Operator& b) {
    Operator r;
    for (const auto& [k1, c1] : a.terms_) {
      for (const auto& [k2, c2] : b.terms_) {
        OpKey k;
        k.sigma = k1.sigma ^ k2.sigma;
        k.e = (k2.sigma ? -k1.e : k1.e) + k2.e;
        k.e0 = k1.e0 + k2.e0;
        k.e1 = k1.e1 + k2.e1;
        RF c = c1 * c2.shift_subst(k1.sigma, k1.e, k1.e0, k1.e1);
        r.add_term(k, c);
      }
    }
    return r;
  }

  Operator pow(unsigned n) const {
    Operator acc = identity();
    Operator base = *this;
    while (n) {
      if (n & 1) acc = acc * base;
      if (n >>= 1) base = base * base;
    }
    return acc;
  }

  // Action on a rational function of (u, x, x0, x1).
  RF apply(const RF& f) const {
    RF acc = RF::zero();
    for (const auto& [k, c] : terms_)
      acc = acc + c * f.shift_subst(k.sigma, k.e, k.e0, k.e1);
    return acc;
  }

  // Substitutes inert parameters (t0..t3) in every coefficient. Bindings
  // touching the shifted variables u, x, x0, x1 are rejected.
  Operator subst_params(const std::map<Var, RF>& bindings) const {
    for (const auto& [v, f] : bindings) {
      (void)f;
      if (v == Var::u || v == Var::x || v == Var::x0 || v == Var::x1)
        throw ShiftedVariableBinding(std::string("cannot bind shifted variable ") +
                                     kVarNames[static_cast<int>(v)]);
    }
    Operator r;
    for (const auto& [k, c] : terms_) {
      RF s = c.subst(bindings);
      if (!s.is_zero()) r.terms_.emplace(k, std::move(s));
    }
    return r;
  }

  // Restriction to the keys with no D-shift (e = 0); sigma, e0, e1 survive.
  Operator dx_constant_part() const {
    Operator r;
    for (const auto& [k, c] : terms_)
      if (k.e == 0) r.terms_.emplace(k, c);
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string cs = c.str();
      if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      std::string ks = k.str();
      s += ks.empty() ? cs : cs + " * " + ks;
    }
    return s;
  }

 private:
  void add_term(const OpKey& k, const RF& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  std::map<OpKey, RF> terms_;
};

}  // namespace g2daha
