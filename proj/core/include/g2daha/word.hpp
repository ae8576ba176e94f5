#pragma once

#include <initializer_list>
#include <vector>

#include "g2daha/generators.hpp"

namespace g2daha {

// Abstract generator symbols of the algebra at the special parameters. The
// first five are the core generators; the checked ones expand into them.
enum class Sym { T0, T1, X, U0, U1, T0v, T1v, U0v, U1v };
inline constexpr int kNumCoreSyms = 5;
inline constexpr const char* kSymNames[] = {"T0", "T1", "X", "U0", "U1",
                                            "T0v", "T1v", "U0v", "U1v"};

// Scalar prefactor times a product of signed powers of generator symbols.
// Adjacent equal symbols merge and cancel; the scalar is by convention a
// central constant (rational in i and u only), so it commutes with
// everything in the representation.
template <class K>
struct Word {
  using RF = RatFunc<K>;

  RF scalar = RF::one();
  std::vector<std::pair<Sym, int>> factors;

  static Word identity() { return Word{}; }
  static Word gen(Sym s, int exp = 1) {
    Word w;
    if (exp != 0) w.factors.push_back({s, exp});
    return w;
  }
  static Word product(std::initializer_list<std::pair<Sym, int>> fs) {
    Word w;
    for (auto& f : fs) w.factors.push_back(f);
    w.reduce();
    return w;
  }

  bool is_identity() const { return factors.empty() && scalar.is_one(); }

  Word scaled(const RF& c) const {
    Word w = *this;
    w.scalar = w.scalar * c;
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word w;
    w.scalar = a.scalar * b.scalar;
    w.factors = a.factors;
    w.factors.insert(w.factors.end(), b.factors.begin(), b.factors.end());
    w.reduce();
    return w;
  }

  Word inv() const {
    Word w;
    w.scalar = scalar.inverse();
    w.factors.reserve(factors.size());
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
      w.factors.push_back({it->first, -it->second});
    return w;
  }

  Word pow(int k) const {
    if (k < 0) return inv().pow(-k);
    Word w;
    for (int j = 0; j < k; ++j) w = w * *this;
    return w;
  }

  // Free reduction: merge adjacent equal symbols, drop zero exponents,
  // cascade cancellations.
  void reduce() {
    std::vector<std::pair<Sym, int>> out;
    for (const auto& f : factors) {
      if (f.second == 0) continue;
      if (!out.empty() && out.back().first == f.first) {
        out.back().second += f.second;
        if (out.back().second == 0) out.pop_back();
      } else {
        out.push_back(f);
      }
    }
    factors = std::move(out);
  }

  // Rewrites the checked symbols through the core five:
  //   T0v = q^{-1/2} T0^{-1} X,   T1v = X^{-1} T1^{-1},
  //   U0v = q^{-1/2} U0^{-1} X,   U1v = X^{-1} U1^{-1}.
  Word expand_checked() const {
    Word w;
    w.scalar = scalar;
    auto emit = [&w](const RF& c, std::initializer_list<std::pair<Sym, int>> fs) {
      w.scalar = w.scalar * c;
      for (auto& f : fs) w.factors.push_back(f);
    };
    for (const auto& [s, k] : factors) {
      int n = k < 0 ? -k : k;
      for (int j = 0; j < n; ++j) {
        switch (s) {
          case Sym::T0v:
            if (k > 0)
              emit(RF::upow(-2), {{Sym::T0, -1}, {Sym::X, 1}});
            else
              emit(RF::upow(2), {{Sym::X, -1}, {Sym::T0, 1}});
            break;
          case Sym::T1v:
            if (k > 0)
              emit(RF::one(), {{Sym::X, -1}, {Sym::T1, -1}});
            else
              emit(RF::one(), {{Sym::T1, 1}, {Sym::X, 1}});
            break;
          case Sym::U0v:
            if (k > 0)
              emit(RF::upow(-2), {{Sym::U0, -1}, {Sym::X, 1}});
            else
              emit(RF::upow(2), {{Sym::X, -1}, {Sym::U0, 1}});
            break;
          case Sym::U1v:
            if (k > 0)
              emit(RF::one(), {{Sym::X, -1}, {Sym::U1, -1}});
            else
              emit(RF::one(), {{Sym::U1, 1}, {Sym::X, 1}});
            break;
          default:
            w.factors.push_back({s, k > 0 ? 1 : -1});
            break;
        }
      }
    }
    w.reduce();
    return w;
  }

  std::string str() const {
    std::string s = scalar.is_one() ? "" : "(" + scalar.str() + ") ";
    if (factors.empty()) return s.empty() ? "1" : s + "1";
    bool first = true;
    for (const auto& [sym, k] : factors) {
      if (!first) s += " ";
      first = false;
      s += kSymNames[static_cast<int>(sym)];
      if (k != 1) s += "^" + std::to_string(k);
    }
    return s;
  }
};

namespace detail {

template <class K>
const Operator<K>& sym_op(Sym s, bool inverse) {
  static constexpr Gen gen_of[] = {Gen::T0, Gen::T1, Gen::X, Gen::U0, Gen::U1,
                                   Gen::T0v, Gen::T1v, Gen::U0v, Gen::U1v};
  return Generators<K>::build(GenId{gen_of[static_cast<int>(s)], Mode::star, 0, 0, inverse});
}

}  // namespace detail

// The representation of a word: scalar times the composition of the
// catalogued generator operators (closed-form inverses for negative powers).
template <class K>
Operator<K> rho(const Word<K>& w) {
  Operator<K> op = Operator<K>::mult(w.scalar);
  for (const auto& [s, k] : w.factors) {
    const Operator<K>& g = detail::sym_op<K>(s, k < 0);
    int n = k < 0 ? -k : k;
    for (int j = 0; j < n; ++j) op = op * g;
  }
  return op;
}

// ch of a word: rho(w) + rho(w^{-1}).
template <class K>
Operator<K> ch_word(const Word<K>& w) {
  return rho(w) + rho(w.inv());
}

}  // namespace g2daha
