#include "doctest.h"

#include "g2daha/automorphism.hpp"

using namespace g2daha;

namespace {
using RF = RatFunc<GaussRat>;
using Op = Operator<GaussRat>;
using W = Word<GaussRat>;
using A = Automorphism<GaussRat>;
using Tw = Twists<GaussRat>;
using Gens = Generators<GaussRat>;

Op rho_img(const A& a, Sym s) { return rho(a.apply(W::gen(s))); }
}  // namespace

TEST_CASE("displayed twist images") {
  // tw2: T0 -> i q^{-1/4} U0 T0
  W img = Tw::twist(2).apply(W::gen(Sym::T0));
  CHECK(img.scalar == Gens::i() * Gens::u(-1));
  CHECK(img.factors == std::vector<std::pair<Sym, int>>{{Sym::U0, 1}, {Sym::T0, 1}});
  // tw5: U1 -> -i q^{1/4} U1 X T1
  W img5 = Tw::twist(5).apply(W::gen(Sym::U1));
  CHECK(img5.scalar == -Gens::i() * Gens::u(1));
  CHECK(img5.factors ==
        std::vector<std::pair<Sym, int>>{{Sym::U1, 1}, {Sym::X, 1}, {Sym::T1, 1}});
}

TEST_CASE("round trips through the inverse images") {
  for (int i = 1; i <= 5; ++i) {
    const A& t = Tw::twist(i);
    for (int g = 0; g < kNumCoreSyms; ++g) {
      CAPTURE(i);
      CAPTURE(g);
      Sym s = static_cast<Sym>(g);
      CHECK(rho(t.apply(t.apply_inverse(W::gen(s)))) == rho(W::gen(s)));
      CHECK(rho(t.apply_inverse(t.apply(W::gen(s)))) == rho(W::gen(s)));
    }
  }
}

TEST_CASE("first braid relation at the operator level") {
  A lhs = A::compose(Tw::twist(1), A::compose(Tw::twist(2), Tw::twist(1)));
  A rhs = A::compose(Tw::twist(2), A::compose(Tw::twist(1), Tw::twist(2)));
  for (int g = 0; g < kNumCoreSyms; ++g) {
    CAPTURE(g);
    CHECK(rho_img(lhs, static_cast<Sym>(g)) == rho_img(rhs, static_cast<Sym>(g)));
  }
}

TEST_CASE("a commuting pair") {
  A lhs = A::compose(Tw::twist(1), Tw::twist(3));
  A rhs = A::compose(Tw::twist(3), Tw::twist(1));
  CHECK(rho_img(lhs, Sym::U0) == rho_img(rhs, Sym::U0));
}

TEST_CASE("half twists of the sphere algebra") {
  // sigma_R^2 agrees with the x-twist on T0, T1, X
  A sR2 = A::compose(Tw::sigma_R(), Tw::sigma_R());
  for (Sym s : {Sym::T0, Sym::T1, Sym::X}) {
    CHECK(rho_img(sR2, s) == rho_img(Tw::twist_x(), s));
  }
  // sigma_L^{-2} agrees with the y-twist on T0, T1, X
  A sLi = Tw::sigma_L().inverse();
  A sL2i = A::compose(sLi, sLi);
  for (Sym s : {Sym::T0, Sym::T1, Sym::X}) {
    CHECK(rho_img(sL2i, s) == rho_img(Tw::twist(3), s));
  }
}

TEST_CASE("conjugator scalar on symmetric functions") {
  // rho(T1^{-1} U1 X T1 U1^{-1}) e = -q^{-1} e
  W c = W::product({{Sym::T1, -1}, {Sym::U1, 1}, {Sym::X, 1}, {Sym::T1, 1}, {Sym::U1, -1}});
  const Op& e = Gens::build(Gen::E);
  CHECK(rho(c) * e == Op::mult(-Gens::q().inverse()) * e);
}

TEST_CASE("rho table folding matches word-level application") {
  RhoTable<GaussRat> base = RhoTable<GaussRat>::base();
  RhoTable<GaussRat> t3 = base.fold(Tw::twist(3));
  for (int g = 0; g < kNumCoreSyms; ++g) {
    CAPTURE(g);
    CHECK(t3.fwd[g] == rho(Tw::twist(3).images[g]));
  }
  // fold twice = compose
  RhoTable<GaussRat> t33 = t3.fold(Tw::twist(3));
  A comp = A::compose(Tw::twist(3), Tw::twist(3));
  for (int g = 0; g < kNumCoreSyms; ++g) {
    CAPTURE(g);
    CHECK(t33.fwd[g] == rho(comp.images[g]));
    CHECK(t33.inv[g] == rho(comp.images[g].inv()));
  }
}

TEST_CASE("tangle word anchors against the printed displays") {
  // base ch-argument word of the sixth curve
  W base = W::product({{Sym::U1, 1}, {Sym::U0, 1}});

  // 5/2: twist along y after inverse twist along x
  W gen52 = Tw::twist(3).apply(Tw::twist_x().apply_inverse(base));
  // printed display: U1 T0 T1 (T0v T1 T0)^{-1} T0^{-1} U0 T1 (T0v T1 T0)
  W v = W::product({{Sym::T0v, 1}, {Sym::T1, 1}, {Sym::T0, 1}});
  W printed52 = W::gen(Sym::U1) * W::gen(Sym::T0) * W::gen(Sym::T1) * v.inv() *
                W::gen(Sym::T0, -1) * W::gen(Sym::U0) * W::gen(Sym::T1) * v;
  INFO("generated: ", gen52.str());
  INFO("printed:   ", printed52.expand_checked().str());
  bool words_equal_52 = rho(gen52) == rho(printed52);
  CHECK(ch_word(gen52) == ch_word(printed52));
  MESSAGE("5/2 bare-word rho equality: ", words_equal_52);

  // 7/2: inverse y-twist after two inverse x-twists
  W twx2 = Tw::twist_x().apply_inverse(Tw::twist_x().apply_inverse(base));
  W gen72 = Tw::twist(3).apply_inverse(twx2);
  // printed display: U1 T1^{-1} T0^{-1} V T1 T0 T1v T1 U0 V^{-2},
  // V = T1 T0 T1v T0^{-1}
  W V = W::product({{Sym::T1, 1}, {Sym::T0, 1}, {Sym::T1v, 1}, {Sym::T0, -1}});
  W printed72 = W::gen(Sym::U1) * W::gen(Sym::T1, -1) * W::gen(Sym::T0, -1) * V *
                W::gen(Sym::T1) * W::gen(Sym::T0) * W::gen(Sym::T1v) * W::gen(Sym::T1) *
                W::gen(Sym::U0) * V.pow(-2);
  CHECK(rho(gen72) == rho(printed72));
  CHECK(ch_word(gen72) == ch_word(printed72));
}
