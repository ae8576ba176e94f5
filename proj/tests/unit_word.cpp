#include "doctest.h"

#include "g2daha/word.hpp"

using namespace g2daha;

namespace {
using RF = RatFunc<GaussRat>;
using Op = Operator<GaussRat>;
using W = Word<GaussRat>;
using Gens = Generators<GaussRat>;
}  // namespace

TEST_CASE("word reduction and inverses") {
  W w = W::product({{Sym::T0, 1}, {Sym::X, 1}, {Sym::X, -1}, {Sym::T0, -1}});
  CHECK(w.is_identity());
  W v = W::product({{Sym::U1, 1}, {Sym::T0, 2}, {Sym::X, -1}});
  CHECK((v * v.inv()).is_identity());
  CHECK((v.inv().inv() * v.inv()).is_identity());
  W vi = v.inv().inv();
  CHECK(vi.factors == v.factors);
}

TEST_CASE("rho is multiplicative") {
  W a = W::product({{Sym::T1, 1}, {Sym::T0, 1}});
  W b = W::product({{Sym::U0, 1}, {Sym::X, -1}});
  CHECK(rho(a * b) == rho(a) * rho(b));
  CHECK(rho(W::identity()) == Op::identity());
  // rho(w^{-1}) is the exact operator inverse
  CHECK(rho(a.inv()) * rho(a) == Op::identity());
  CHECK(rho(b.inv()) * rho(b) == Op::identity());
}

TEST_CASE("checked symbols expand to the displayed forms") {
  // T1v maps to x^{-1} T1^{-1}
  W t1v = W::gen(Sym::T1v);
  CHECK(rho(t1v.expand_checked()) == Gens::build(Gen::T1v));
  CHECK(rho(t1v) == Op::mult(Gens::x().inverse()) * Gens::build(Gen::T1, Mode::star, true));
  // same for the dual pair
  CHECK(rho(W::gen(Sym::U0v).expand_checked()) == Gens::build(Gen::U0v));
  CHECK(rho(W::gen(Sym::U0v, -1).expand_checked()) == Gens::build(Gen::U0v, Mode::star, true));
}

TEST_CASE("dual product relation") {
  // U1v U1 U0 U0v = q^{-1/2}
  W w = W::product({{Sym::U1v, 1}, {Sym::U1, 1}, {Sym::U0, 1}, {Sym::U0v, 1}});
  CHECK(rho(w) == Op::mult(Gens::u(-2)));
}

TEST_CASE("ch words of the curve generators") {
  const Op& e = Gens::build(Gen::E);
  // ch(i T0) = multiplication by ch(x0), exactly
  CHECK(ch_word(W::gen(Sym::T0).scaled(Gens::i())) == Op::mult(ch(Gens::xb(0))));
  // ch(T1 T0) e = A(y) e
  W y = W::product({{Sym::T1, 1}, {Sym::T0, 1}});
  CHECK(ch_word(y) * e == Gens::skein_image(3) * e);
  // ch(U1 U0) e = A(ytilde) e
  W yt = W::product({{Sym::U1, 1}, {Sym::U0, 1}});
  CHECK(ch_word(yt) * e == Gens::skein_image(6) * e);
}
