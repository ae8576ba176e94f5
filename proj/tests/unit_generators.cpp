#include "doctest.h"

#include "g2daha/generators.hpp"

using namespace g2daha;

namespace {
using RF = RatFunc<GaussRat>;
using Op = Operator<GaussRat>;
using Gens = Generators<GaussRat>;
}  // namespace

TEST_CASE("X is multiplication by x, both routes") {
  const Op& X = Gens::build(Gen::X);
  CHECK(X == Op::mult(RF::var(Var::x)));
  for (Mode m : {Mode::generic, Mode::star}) {
    // q^{1/2} T0 T0v = X
    Op lhs = Gens::qh() * (Gens::build(Gen::T0, m) * Gens::build(Gen::T0v, m));
    CHECK(lhs == X);
    // (T1v T1)^{-1} = T1^{-1} (T1v)^{-1} = X
    Op rhs = Gens::build(Gen::T1, m, true) * Gens::build(Gen::T1v, m, true);
    CHECK(rhs == X);
  }
}

TEST_CASE("catalogued K operator") {
  const Op& K00 = Gens::K_n(0, 0);
  REQUIRE(K00.size() == 2);
  RF x = RF::var(Var::x), x0 = RF::var(Var::x0), qh = Gens::qh(), q = Gens::q();
  auto up = K00.terms().find(OpKey{0, 0, 1, 0});
  auto dn = K00.terms().find(OpKey{0, 0, -1, 0});
  REQUIRE(up != K00.terms().end());
  REQUIRE(dn != K00.terms().end());
  CHECK(up->second == -(1 / (1 - x0 * x0)));
  CHECK(dn->second == (qh * x + x0 * x0) * (qh * q * x + x0 * x0) / (q * x * (1 - x0 * x0)));
}

TEST_CASE("idempotent") {
  for (Mode m : {Mode::generic, Mode::star}) {
    const Op& e = Gens::build(Gen::E, m);
    CHECK(e * e == e);
    CHECK(Op::refl() * e == e);
  }
  const Op& estar = Gens::build(Gen::E, Mode::star);
  REQUIRE(estar.size() == 2);
  CHECK(estar.terms().count(OpKey{0, 0, 0, 0}) == 1);
  CHECK(estar.terms().count(OpKey{1, 0, 0, 0}) == 1);
}

TEST_CASE("special parameters reproduce the starred operators") {
  auto tstar = Gens::star_bindings();
  for (Gen g : {Gen::T0, Gen::T1, Gen::T0v, Gen::T1v, Gen::E}) {
    CAPTURE(static_cast<int>(g));
    CHECK(Gens::build(g, Mode::generic).subst_params(tstar) == Gens::build(g, Mode::star));
  }
}

TEST_CASE("Hecke relations") {
  // generic: T + t - t^{-1} = T^{-1}
  for (auto [g, j] : {std::pair{Gen::T0, 0}, {Gen::T1, 1}, {Gen::T0v, 2}, {Gen::T1v, 3}}) {
    RF t = Gens::t(j);
    Op lhs = Gens::build(g, Mode::generic) + Op::mult(t - t.inverse());
    CHECK(lhs == Gens::build(g, Mode::generic, true));
  }
  // starred: T0 - T0^{-1} = -i ch(x0), T1 - T1^{-1} = -i ch(q^{-1/2} x1), ...
  auto diff = [](Gen g) { return Gens::build(g) - Gens::build(g, Mode::star, true); };
  CHECK(diff(Gen::T0) == Op::mult(-Gens::i() * ch(Gens::xb(0))));
  CHECK(diff(Gen::T0v) == Op::mult(-Gens::i() * ch(Gens::xb(0))));
  CHECK(diff(Gen::T1) == Op::mult(-Gens::i() * ch(Gens::u(-2) * Gens::xb(1))));
  CHECK(diff(Gen::T1v) == Op::mult(-Gens::i() * ch(Gens::xb(1))));
}

TEST_CASE("product relation T1v T1 T0 T0v = q^{-1/2}") {
  for (Mode m : {Mode::generic, Mode::star}) {
    Op prod = Gens::build(Gen::T1v, m) * Gens::build(Gen::T1, m) * Gens::build(Gen::T0, m) *
              Gens::build(Gen::T0v, m);
    CHECK(prod == Op::mult(Gens::u(-2)));
  }
}

TEST_CASE("all nine catalogued invertibles") {
  for (Gen g : {Gen::T0, Gen::T1, Gen::T0v, Gen::T1v, Gen::X, Gen::U0, Gen::U1, Gen::U0v,
                Gen::U1v}) {
    CAPTURE(static_cast<int>(g));
    const Op& fwd = Gens::build(g, Mode::star);
    const Op& bwd = Gens::build(g, Mode::star, true);
    CHECK(fwd * bwd == Op::identity());
    CHECK(bwd * fwd == Op::identity());
  }
}

TEST_CASE("dual Hecke relations") {
  RF qq = Gens::qq();
  // U0 - U0^{-1} = q^{-1/4} G_0(x0, x), and the same for U0v
  CHECK(Gens::build(Gen::U0) - Gens::build(Gen::U0, Mode::star, true) ==
        qq.inverse() * Gens::G_n(0, 0));
  CHECK(Gens::build(Gen::U0v) - Gens::build(Gen::U0v, Mode::star, true) ==
        qq.inverse() * Gens::G_n(0, 0));
  // with the symmetrizer: (q^{-1/2} U1 - q^{1/2} U1^{-1}) e = q^{-1/4} G_0(x1,x) e
  const Op& e = Gens::build(Gen::E);
  Op lhs = (Gens::u(-2) * Gens::build(Gen::U1) -
            Gens::u(2) * Gens::build(Gen::U1, Mode::star, true)) *
           e;
  CHECK(lhs == qq.inverse() * (Gens::G_n(0, 1) * e));
  Op lhs2 = (Gens::build(Gen::U1v) - Gens::build(Gen::U1v, Mode::star, true)) * e;
  CHECK(lhs2 == qq.inverse() * (Gens::G_n(0, 1) * e));
}

TEST_CASE("G is symmetric in x -> 1/x") {
  for (int n = -2; n <= 2; ++n)
    for (int b : {0, 1}) {
      CAPTURE(n);
      CAPTURE(b);
      CHECK(Gens::G_op(n, b, Gens::x().inverse()) == Gens::G_op(n, b, Gens::x()));
    }
}

TEST_CASE("curve images") {
  // A(k1) = ch(x0) as multiplication; A(k2) = i q^{-1/4} G_0(x0, x)
  CHECK(Gens::skein_image(1) == Op::mult(ch(Gens::xb(0))));
  CHECK(Gens::skein_image(2) == Gens::i() * Gens::u(-1) * Gens::G_n(0, 0));
  CHECK(Gens::curve_k2_power(0) == Gens::skein_image(2));
  CHECK(Gens::curve_k2_power(-1) == Gens::i() * Gens::G_n(-1, 0));
  // constant part of A(ytilde): the -G G summand weighted by w(x)+w(1/x)
  RF wsum = Gens::omega(Gens::x()) + Gens::omega(Gens::x().inverse());
  CHECK(Gens::skein_image(6).dx_constant_part() ==
        wsum * -(Gens::G_n(0, 0) * Gens::G_n(0, 1)));
}

TEST_CASE("skein three-term recursion for twisted curves") {
  // A(k1) A(k2,1^n) = q^{-1/4} A(k2,1^{n-1}) + q^{1/4} A(k2,1^{n+1})
  for (int n = -2; n <= 2; ++n) {
    CAPTURE(n);
    Op lhs = Gens::skein_image(1) * Gens::curve_k2_power(n);
    Op rhs = Gens::u(-1) * Gens::curve_k2_power(n - 1) + Gens::u(1) * Gens::curve_k2_power(n + 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("symmetrizer eigenvalue of T1") {
  const Op& e = Gens::build(Gen::E);
  const Op& T1 = Gens::build(Gen::T1);
  RF lam = -Gens::i() * Gens::u(2) / Gens::xb(1);
  CHECK(T1 * e == Op::mult(lam) * e);
  CHECK(e * T1 == Op::mult(lam) * e);
  RF lam_inv = Gens::i() * Gens::u(-2) * Gens::xb(1);
  CHECK(Gens::build(Gen::T1, Mode::star, true) * e == Op::mult(lam_inv) * e);
  CHECK(e * Gens::build(Gen::T1, Mode::star, true) == Op::mult(lam_inv) * e);
}

TEST_CASE("dual operators require the special parameters") {
  CHECK_THROWS_AS(Gens::build(Gen::U0, Mode::generic), UnknownGenerator);
  CHECK_THROWS_AS(Gens::build(Gen::A_ytilde, Mode::generic), UnknownGenerator);
}
