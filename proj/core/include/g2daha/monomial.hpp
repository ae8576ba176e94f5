#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace g2daha {

// Fixed variable set of the whole engine. u is the formal fourth root of q
// (q = u^4), x carries the reflection/shift action, x0/x1 the two handle
// parameters shifted by q^{1/2}, t0..t3 the generic Hecke parameters.
enum class Var : uint8_t { u = 0, x, x0, x1, t0, t1, t2, t3 };
inline constexpr int kNumVars = 8;
inline constexpr const char* kVarNames[kNumVars] = {"u", "x", "x0", "x1",
                                                    "t0", "t1", "t2", "t3"};

// Exponent vector. MPoly stores only non-negative exponents; negative values
// appear transiently inside substitution routines before renormalization.
struct Monomial {
  std::array<int32_t, kNumVars> e{};

  static Monomial unit() { return Monomial{}; }
  static Monomial var(Var v, int32_t k = 1) {
    Monomial m;
    m.e[static_cast<int>(v)] = k;
    return m;
  }

  int32_t operator[](Var v) const { return e[static_cast<int>(v)]; }
  int32_t& operator[](Var v) { return e[static_cast<int>(v)]; }

  int64_t degree() const {
    int64_t d = 0;
    for (int32_t k : e) d += k;
    return d;
  }
  bool is_unit() const {
    for (int32_t k : e)
      if (k != 0) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  // Caller guarantees divisibility when used for exact division.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }
  bool divides(const Monomial& other) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  // Graded lexicographic order with u < x < x0 < x1 < t0 < t1 < t2 < t3:
  // total degree first, ties broken on the most significant variable (t3)
  // downwards.
  static int cmp(const Monomial& a, const Monomial& b) {
    int64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = kNumVars - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    return 0;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (int32_t k : e) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(k));
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string str() const;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return static_cast<size_t>(m.hash()); }
};

std::string monomial_str(const Monomial& m);
inline std::string Monomial::str() const { return monomial_str(*this); }

}  // namespace g2daha
