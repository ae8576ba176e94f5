#pragma once

#include <array>
#include <optional>

#include "g2daha/ratfunc.hpp"

namespace g2daha {

// Reduction of an exact Gaussian rational into GF(p^2), p = 2^61 - 1.
inline ModGauss to_mod(const GaussRat& c) {
  auto red = [](const mpq_class& q) -> uint64_t {
    uint64_t n = mpz_fdiv_ui(q.get_num().get_mpz_t(), ModGauss::P);
    uint64_t d = mpz_fdiv_ui(q.get_den().get_mpz_t(), ModGauss::P);
    if (d == 0) throw UnluckyEvaluation("rational denominator divisible by the probe prime");
    return ModGauss::mulm(n, ModGauss::invm(d));
  };
  return ModGauss(red(c.re), red(c.im));
}

namespace detail {

inline std::optional<ModGauss> eval_mod(const MPoly<GaussRat>& p,
                                        const std::array<ModGauss, kNumVars>& pt) {
  std::array<std::vector<ModGauss>, kNumVars> pows;
  ModGauss acc = ModGauss::zero();
  for (const auto& t : p.terms()) {
    ModGauss v = to_mod(t.c);
    for (int i = 0; i < kNumVars; ++i) {
      int32_t e = t.m.e[i];
      if (e == 0) continue;
      auto& pw = pows[i];
      if (pw.empty()) pw.push_back(ModGauss::one());
      while (static_cast<int32_t>(pw.size()) <= e) pw.push_back(pw.back() * pt[i]);
      v = v * pw[e];
    }
    acc = acc + v;
  }
  return acc;
}

}  // namespace detail

// Schwartz–Zippel equality screen: evaluates a - b at seeded pseudo-random
// points of GF(p^2). `false` is definitive; `true` means equal with
// overwhelming probability. Deterministic for a fixed seed.
inline bool rf_probe_eq(const RatFunc<GaussRat>& a, const RatFunc<GaussRat>& b,
                        uint64_t seed, int trials = 4) {
  uint64_t state = seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull;
  int valid = 0;
  for (int t = 0; t < 8 * trials && valid < trials; ++t) {
    std::array<ModGauss, kNumVars> pt;
    for (int i = 0; i < kNumVars; ++i) {
      // Nonzero evaluation points; the variables enter Laurent-style.
      pt[i] = ModGauss(splitmix64(state) % (ModGauss::P - 1) + 1,
                       splitmix64(state) % ModGauss::P);
    }
    ModGauss an = *detail::eval_mod(a.num(), pt);
    ModGauss ad = *detail::eval_mod(a.den(), pt);
    ModGauss bn = *detail::eval_mod(b.num(), pt);
    ModGauss bd = *detail::eval_mod(b.den(), pt);
    if (ad.is_zero() || bd.is_zero()) continue;  // unlucky point
    ++valid;
    if (an * bd != bn * ad) return false;
  }
  if (valid == 0)
    throw UnluckyEvaluation("all probe points hit a denominator zero; retry with a new seed");
  return true;
}

}  // namespace g2daha
