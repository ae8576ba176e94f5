#pragma once

#include <array>
#include <string>

#include "g2daha/word.hpp"

namespace g2daha {

// A mapping-class automorphism given by its action on the five core
// generators, together with the hand-solved inverse action. Scalars of the
// images are central constants, so substitution is exponent-by-exponent.
template <class K>
struct Automorphism {
  using W = Word<K>;
  using RF = RatFunc<K>;

  std::string name;
  std::array<W, kNumCoreSyms> images;
  std::array<W, kNumCoreSyms> inverse_images;

  static Automorphism identity() {
    Automorphism a;
    a.name = "id";
    for (int g = 0; g < kNumCoreSyms; ++g) {
      a.images[g] = W::gen(static_cast<Sym>(g));
      a.inverse_images[g] = W::gen(static_cast<Sym>(g));
    }
    return a;
  }

  W apply(const W& w) const { return substitute(w, images); }
  W apply_inverse(const W& w) const { return substitute(w, inverse_images); }

  Automorphism inverse() const {
    Automorphism a;
    a.name = name + "^-1";
    a.images = inverse_images;
    a.inverse_images = images;
    return a;
  }

  // (a o b)(g) = a(b(g)).
  static Automorphism compose(const Automorphism& a, const Automorphism& b) {
    Automorphism c;
    c.name = a.name + "." + b.name;
    for (int g = 0; g < kNumCoreSyms; ++g) {
      c.images[g] = a.apply(b.images[g]);
      c.inverse_images[g] = b.apply_inverse(a.inverse_images[g]);
    }
    return c;
  }

 private:
  static W substitute(const W& w, const std::array<W, kNumCoreSyms>& table) {
    W in = w.expand_checked();
    W out;
    out.scalar = in.scalar;
    for (const auto& [s, k] : in.factors) out = out * table[static_cast<int>(s)].pow(k);
    return out;
  }
};

// The five twist automorphisms along the standard curves, the twist along
// the separating x-curve, and the two half-twist maps of the sphere algebra
// (the latter act only on T0, T1, X).
template <class K>
class Twists {
 public:
  using A = Automorphism<K>;
  using W = Word<K>;
  using RF = RatFunc<K>;

  static RF iq(int quarters) {  // i q^{quarters/4}
    return RF::imag() * RF::upow(quarters);
  }

  static const A& twist(int i) {
    static const std::array<A, 5> all = {make1(), make2(), make3(), make4(), make5()};
    return all.at(i - 1);
  }

  static const A& twist_x() {
    static const A a = make_x();
    return a;
  }

  static const A& sigma_R() {
    static const A a = make_sigma_R();
    return a;
  }

  static const A& sigma_L() {
    static const A a = make_sigma_L();
    return a;
  }

 private:
  static W g(Sym s, int k = 1) { return W::gen(s, k); }

  static A base() { return A::identity(); }

  static A make1() {
    A a = base();
    a.name = "tw1";
    // U0 -> -i q^{1/4} U0 T0^{-1}
    a.images[3] = (g(Sym::U0) * g(Sym::T0, -1)).scaled(-iq(1));
    a.inverse_images[3] = (g(Sym::U0) * g(Sym::T0)).scaled(iq(-1));
    return a;
  }

  static A make2() {
    A a = base();
    a.name = "tw2";
    // T0 -> i q^{-1/4} U0 T0
    a.images[0] = (g(Sym::U0) * g(Sym::T0)).scaled(iq(-1));
    a.inverse_images[0] = (g(Sym::U0, -1) * g(Sym::T0)).scaled(-iq(1));
    return a;
  }

  static A make3() {
    A a = base();
    a.name = "tw3";
    // X -> (T0 T1)^{-1} X T1 T0, U0 -> q^{-1/4} (T0 T1)^{-1} U0,
    // U1 -> q^{1/4} U1 T0 T1
    W t0t1 = g(Sym::T0) * g(Sym::T1);
    W t1t0 = g(Sym::T1) * g(Sym::T0);
    a.images[2] = t0t1.inv() * g(Sym::X) * t1t0;
    a.images[3] = (t0t1.inv() * g(Sym::U0)).scaled(RF::upow(-1));
    a.images[4] = (g(Sym::U1) * t0t1).scaled(RF::upow(1));
    a.inverse_images[2] = t0t1 * g(Sym::X) * t1t0.inv();
    a.inverse_images[3] = (t0t1 * g(Sym::U0)).scaled(RF::upow(1));
    a.inverse_images[4] = (g(Sym::U1) * t0t1.inv()).scaled(RF::upow(-1));
    return a;
  }

  static A make4() {
    A a = base();
    a.name = "tw4";
    // T1 -> i q^{-1/4} (U1 X)^{-1} T1
    a.images[1] = (g(Sym::X, -1) * g(Sym::U1, -1) * g(Sym::T1)).scaled(iq(-1));
    a.inverse_images[1] = (g(Sym::U1) * g(Sym::X) * g(Sym::T1)).scaled(-iq(1));
    return a;
  }

  static A make5() {
    A a = base();
    a.name = "tw5";
    // U1 -> -i q^{1/4} U1 X T1
    a.images[4] = (g(Sym::U1) * g(Sym::X) * g(Sym::T1)).scaled(-iq(1));
    a.inverse_images[4] = (g(Sym::U1) * g(Sym::T1, -1) * g(Sym::X, -1)).scaled(iq(-1));
    return a;
  }

  static A make_x() {
    A a = base();
    a.name = "twx";
    // conjugation of T0 and U0 by X
    a.images[0] = g(Sym::X) * g(Sym::T0) * g(Sym::X, -1);
    a.images[3] = g(Sym::X) * g(Sym::U0) * g(Sym::X, -1);
    a.inverse_images[0] = g(Sym::X, -1) * g(Sym::T0) * g(Sym::X);
    a.inverse_images[3] = g(Sym::X, -1) * g(Sym::U0) * g(Sym::X);
    return a;
  }

  static A make_sigma_R() {
    A a = base();
    a.name = "sigmaR";
    // T0 -> q^{-1/2} X T0^{-1}
    a.images[0] = (g(Sym::X) * g(Sym::T0, -1)).scaled(RF::upow(-2));
    a.inverse_images[0] = (g(Sym::T0, -1) * g(Sym::X)).scaled(RF::upow(-2));
    return a;
  }

  static A make_sigma_L() {
    A a = base();
    a.name = "sigmaL";
    // X -> q^{1/2} T0 X^{-1} T1^{-1}
    a.images[2] = (g(Sym::T0) * g(Sym::X, -1) * g(Sym::T1, -1)).scaled(RF::upow(2));
    a.inverse_images[2] = (g(Sym::T1, -1) * g(Sym::X, -1) * g(Sym::T0)).scaled(RF::upow(2));
    return a;
  }
};

// rho-images of the five core generators and their inverses; the unit of
// iterated automorphism application at the operator level. Folding an
// automorphism phi onto a table T produces the table of g -> T(phi(g)),
// so folding a product left to right yields rho of the whole composite
// without ever expanding long words.
template <class K>
struct RhoTable {
  std::array<Operator<K>, kNumCoreSyms> fwd;
  std::array<Operator<K>, kNumCoreSyms> inv;

  static RhoTable base() {
    RhoTable t;
    for (int g = 0; g < kNumCoreSyms; ++g) {
      t.fwd[g] = rho(Word<K>::gen(static_cast<Sym>(g)));
      t.inv[g] = rho(Word<K>::gen(static_cast<Sym>(g), -1));
    }
    return t;
  }

  Operator<K> eval(const Word<K>& w) const {
    Word<K> in = w.expand_checked();
    Operator<K> op = Operator<K>::mult(in.scalar);
    for (const auto& [s, k] : in.factors) {
      const Operator<K>& g = k < 0 ? inv[static_cast<int>(s)] : fwd[static_cast<int>(s)];
      int n = k < 0 ? -k : k;
      for (int j = 0; j < n; ++j) op = op * g;
    }
    return op;
  }

  RhoTable fold(const Automorphism<K>& a) const {
    RhoTable t;
    for (int g = 0; g < kNumCoreSyms; ++g) {
      t.fwd[g] = eval(a.images[g]);
      t.inv[g] = eval(a.images[g].inv());
    }
    return t;
  }
};

}  // namespace g2daha
