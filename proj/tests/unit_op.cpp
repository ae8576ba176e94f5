#include "doctest.h"

#include "g2daha/op.hpp"

using namespace g2daha;

namespace {

using RF = RatFunc<GaussRat>;
using Op = Operator<GaussRat>;

RF rx() { return RF::var(Var::x); }

Op random_op(uint64_t& state) {
  Op op;
  int n = 1 + splitmix64(state) % 3;
  for (int i = 0; i < n; ++i) {
    OpKey k;
    k.sigma = splitmix64(state) & 1;
    k.e = static_cast<int32_t>(splitmix64(state) % 5) - 2;
    k.e0 = static_cast<int32_t>(splitmix64(state) % 3) - 1;
    k.e1 = static_cast<int32_t>(splitmix64(state) % 3) - 1;
    long cx = static_cast<long>(splitmix64(state) % 7) - 3;
    if (cx == 0) cx = 2;
    RF c = RF::integer(cx) * rx().pow(splitmix64(state) % 3) +
           RF::var(Var::x0) * RF::integer(static_cast<long>(splitmix64(state) % 3));
    op = op + Op::term(k, c);
  }
  return op;
}

RF random_fn(uint64_t& state) {
  return RF::var(Var::x).pow(static_cast<long>(splitmix64(state) % 4) - 1) +
         RF::var(Var::x0) * RF::var(Var::u).pow(splitmix64(state) % 3) + RF::integer(1);
}

}  // namespace

TEST_CASE("combine and scale") {
  uint64_t st = 1;
  Op a = random_op(st);
  CHECK(a + Op::zero() == a);
  CHECK((a - a).is_zero());
  CHECK(RF::integer(2) * Op::refl() == Op::term(OpKey{1, 0, 0, 0}, RF::integer(2)));
}

TEST_CASE("composition of shift symbols") {
  // s . s = identity
  CHECK(Op::refl() * Op::refl() == Op::identity());
  // D . s = s . D^{-1}
  CHECK(Op::shift_x(1) * Op::refl() == Op::term(OpKey{1, -1, 0, 0}, RF::one()));
  // (x D) . (x D) has key (0,2,0,0) and coefficient u^4 x^2
  Op xd = Op::term(OpKey{0, 1, 0, 0}, rx());
  CHECK(xd * xd == Op::term(OpKey{0, 2, 0, 0}, RF::upow(4) * rx() * rx()));
  // D0 and D1 commute with s and D
  CHECK(Op::shift_x0(1) * Op::refl() == Op::refl() * Op::shift_x0(1));
  CHECK(Op::shift_x1(1) * Op::shift_x(1) == Op::shift_x(1) * Op::shift_x1(1));
  CHECK(Op::shift_x(1) * Op::shift_x(-1) == Op::identity());
}

TEST_CASE("application to functions") {
  CHECK(Op::refl().apply(rx().pow(3)) == rx().pow(-3));
  CHECK(Op::shift_x(1).apply(rx()) == RF::upow(4) * rx());
  CHECK(Op::shift_x0(1).apply(RF::var(Var::x0).pow(2)) == RF::upow(4) * RF::var(Var::x0).pow(2));
}

TEST_CASE("parameter substitution") {
  RF t0 = RF::var(Var::t0);
  Op a = Op::mult(t0 + t0.inverse());
  Op b = a.subst_params({{Var::t0, RF::imag() * RF::var(Var::x0)}});
  // i x0 + (i x0)^{-1} = i x0 - i x0^{-1}
  RF i = RF::imag(), x0 = RF::var(Var::x0);
  CHECK(b == Op::mult(i * x0 - i * x0.inverse()));
  CHECK_THROWS_AS(a.subst_params({{Var::x, RF::one()}}), ShiftedVariableBinding);
}

TEST_CASE("constant part in the D-direction") {
  Op a = Op::term(OpKey{0, 1, 0, 0}, rx()) + Op::term(OpKey{1, 0, 0, 0}, RF::integer(2)) +
         Op::identity();
  Op c = a.dx_constant_part();
  CHECK(c == Op::term(OpKey{1, 0, 0, 0}, RF::integer(2)) + Op::identity());
  CHECK(Op::zero().dx_constant_part().is_zero());
}

TEST_CASE("associativity and the function-space homomorphism") {
  uint64_t st = 42;
  for (int i = 0; i < 6; ++i) {
    Op a = random_op(st), b = random_op(st), c = random_op(st);
    CHECK(a * (b * c) == (a * b) * c);
    RF f = random_fn(st);
    CHECK((a * b).apply(f) == a.apply(b.apply(f)));
  }
}

TEST_CASE("rendering contract") {
  Op a = Op::term(OpKey{1, 2, 0, -1}, RF::integer(1)) + Op::mult(rx());
  CHECK(a.str() == "x + 1 * s D^2 D1^-1");
  CHECK(Op::zero().str() == "0");
}
