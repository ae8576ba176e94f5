#pragma once

#include <map>
#include <mutex>
#include <string>

#include "g2daha/op.hpp"

namespace g2daha {

// Every named operator of the engine, in generic parameters (t0..t3 free)
// and at the special point t* = (i x0, i q^{-1/2} x1, i x0, i x1). The
// U-family and the curve images exist only at t*.
enum class Gen {
  T0,
  T1,
  T0v,
  T1v,
  X,
  Y,
  U0,
  U1,
  U0v,
  U1v,
  E,
  K,      // K_n(x_b, x), carries n and b
  G,      // G_n(x_b, x), carries n and b
  Omega,  // multiplication by w(x)
  W,      // multiplication by W(x; t)
  AWop,   // W(x)(D-1) + W(1/x)(D^{-1}-1) + ch(t0 t1)
  A_x0,
  A_y0,
  A_x1,
  A_y1,
  A_y,
  A_ytilde,
};

enum class Mode { generic, star };

struct GenId {
  Gen g;
  Mode mode = Mode::star;
  int n = 0;       // index for K/G
  int b = 0;       // branch for K/G (0 -> x0/D0, 1 -> x1/D1)
  bool inv = false;

  friend bool operator<(const GenId& a, const GenId& z) {
    auto t = [](const GenId& i) { return std::tuple(i.g, i.mode, i.n, i.b, i.inv); };
    return t(a) < t(z);
  }
};

template <class K>
class Generators {
 public:
  using RF = RatFunc<K>;
  using Op = Operator<K>;

  static RF u(long k) { return RF::upow(k); }
  static RF q() { return RF::upow(4); }
  static RF qh() { return RF::upow(2); }   // q^{1/2}
  static RF qq() { return RF::upow(1); }   // q^{1/4}
  static RF i() { return RF::imag(); }
  static RF x() { return RF::var(Var::x); }
  static RF xb(int b) { return RF::var(b == 0 ? Var::x0 : Var::x1); }
  static RF t(int j) {
    static constexpr Var tv[4] = {Var::t0, Var::t1, Var::t2, Var::t3};
    return RF::var(tv[j]);
  }

  // t* = (i x0, i q^{-1/2} x1, i x0, i x1).
  static std::map<Var, RF> star_bindings() {
    return {{Var::t0, i() * xb(0)},
            {Var::t1, i() * u(-2) * xb(1)},
            {Var::t2, i() * xb(0)},
            {Var::t3, i() * xb(1)}};
  }

  // w(x) = x (1 + q^{1/2} x) / (q^{1/2} (1 - x^2)(1 - q^{1/2} x)), with a
  // general argument.
  static RF omega(const RF& z) {
    return z * (1 + qh() * z) / (qh() * (1 - z * z) * (1 - qh() * z));
  }

  // W(x; t): the weight of the symmetric eigenoperator.
  static RF weight_W(const RF& z) {
    RF t0 = t(0), t1 = t(1), t2 = t(2), t3 = t(3);
    return t0 * t1 * (1 - z / (t1 * t3)) * (1 + t3 / t1 * z) * (1 - qh() / (t0 * t2) * z) *
           (1 + qh() * t2 / t0 * z) / ((1 - z * z) * (1 - q() * z * z));
  }

  // K_n(x_b, z) = -x_b^{-n}/(1-x_b^2) D_b
  //              + x_b^n (q^{1/2} z + x_b^2)(q^{3/2} z + x_b^2)/(q z (1-x_b^2)) D_b^{-1}
  static Op K_op(int n, int b, const RF& z) {
    RF y = xb(b);
    RF up = -y.pow(-n) / (1 - y * y);
    RF dn = y.pow(n) * (qh() * z + y * y) * (u(6) * z + y * y) / (q() * z * (1 - y * y));
    return Op::term(key_b(b, 1), up) + Op::term(key_b(b, -1), dn);
  }

  // G_n(x_b, z): same D_b part, lowered second numerator.
  static Op G_op(int n, int b, const RF& z) {
    RF y = xb(b);
    RF up = -y.pow(-n) / (1 - y * y);
    RF dn = y.pow(n) * (qh() * z + y * y) * (qh() + z * y * y) / (qh() * z * (1 - y * y));
    return Op::term(key_b(b, 1), up) + Op::term(key_b(b, -1), dn);
  }

  static const Op& build(const GenId& id) {
    // make() recurses into build() for sub-generators, hence the recursive
    // lock. The cache is insert-only; node-based map keeps references stable.
    static std::map<GenId, Op> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
    return cache.emplace(id, make(id)).first->second;
  }

  static const Op& build(Gen g, Mode mode = Mode::star, bool inv = false) {
    return build(GenId{g, mode, 0, 0, inv});
  }
  static const Op& K_n(int n, int b) { return build(GenId{Gen::K, Mode::star, n, b}); }
  static const Op& G_n(int n, int b) { return build(GenId{Gen::G, Mode::star, n, b}); }

  // Direct q-difference images of the six curve generators.
  static const Op& skein_image(int curve) {
    switch (curve) {
      case 1: return build(Gen::A_x0);
      case 2: return build(Gen::A_y0);
      case 3: return build(Gen::A_y);
      case 4: return build(Gen::A_y1);
      case 5: return build(Gen::A_x1);
      case 6: return build(Gen::A_ytilde);
      default: throw UnknownGenerator("curve index must be 1..6");
    }
  }

  // Image of the n-fold twisted second curve: i q^{-(n+1)/4} G_n(x0, x).
  static Op curve_k2_power(int n) { return i() * u(-(n + 1)) * G_n(n, 0); }

 private:
  static OpKey key_b(int b, int32_t k) {
    OpKey key;
    if (b == 0)
      key.e0 = k;
    else
      key.e1 = k;
    return key;
  }

  static Op make(const GenId& id) {
    if (id.mode == Mode::generic) {
      switch (id.g) {
        case Gen::U0:
        case Gen::U1:
        case Gen::U0v:
        case Gen::U1v:
          throw UnknownGenerator("the dual operators exist only at the special parameters");
        case Gen::A_x0:
        case Gen::A_y0:
        case Gen::A_x1:
        case Gen::A_y1:
        case Gen::A_y:
        case Gen::A_ytilde:
        case Gen::K:
        case Gen::G:
        case Gen::Omega:
          throw UnknownGenerator("curve images are defined at the special parameters");
        default:
          break;
      }
    }
    if (id.inv) return make_inverse(id);
    switch (id.g) {
      case Gen::T0: return id.mode == Mode::generic ? generic_T0() : star_T0();
      case Gen::T1: return id.mode == Mode::generic ? generic_T1() : star_T1();
      case Gen::T0v: return qh().inverse() * (T_inv(Gen::T0, id.mode) * Op::mult(x()));
      case Gen::T1v: return Op::mult(x().inverse()) * T_inv(Gen::T1, id.mode);
      case Gen::X: return Op::mult(x());
      case Gen::Y: return build(Gen::T1, id.mode) * build(Gen::T0, id.mode);
      case Gen::E: return idempotent(id.mode);
      case Gen::U0: return star_U0();
      case Gen::U1: return star_U1();
      case Gen::U0v:
        return qh().inverse() * (build(Gen::U0, Mode::star, true) * Op::mult(x()));
      case Gen::U1v: return Op::mult(x().inverse()) * build(Gen::U1, Mode::star, true);
      case Gen::K: return K_op(id.n, id.b, x());
      case Gen::G: return G_op(id.n, id.b, x());
      case Gen::Omega: return Op::mult(omega(x()));
      case Gen::W: return weight_as_mult(id.mode);
      case Gen::AWop: return aw_operator(id.mode);
      case Gen::A_x0: return Op::mult(ch(xb(0)));
      case Gen::A_y0: return i() * u(-1) * G_op(0, 0, x());
      case Gen::A_x1: return Op::mult(ch(xb(1)));
      case Gen::A_y1: return i() * u(-1) * G_op(0, 1, x());
      case Gen::A_y: return image_y();
      case Gen::A_ytilde: return image_ytilde();
    }
    throw UnknownGenerator("unhandled generator id");
  }

  static Op make_inverse(const GenId& id) {
    GenId fwd = id;
    fwd.inv = false;
    switch (id.g) {
      // Hecke rearrangements: T - T^{-1} is a known scalar.
      case Gen::T0:
      case Gen::T1:
      case Gen::T0v:
      case Gen::T1v:
        return build(fwd) + Op::mult(hecke_scalar(id.g, id.mode));
      case Gen::X: return Op::mult(x().inverse());
      case Gen::Y:
        return T_inv(Gen::T0, id.mode) * T_inv(Gen::T1, id.mode);
      case Gen::U0: return star_U0_inv();
      case Gen::U1: return star_U1_inv();
      case Gen::U0v:
        // (q^{-1/2} U0^{-1} X)^{-1} = q^{1/2} X^{-1} U0
        return qh() * (Op::mult(x().inverse()) * build(Gen::U0, Mode::star));
      case Gen::U1v:
        // (X^{-1} U1^{-1})^{-1} = U1 X
        return build(Gen::U1, Mode::star) * Op::mult(x());
      default:
        throw UnknownGenerator("no catalogued inverse for this generator");
    }
  }

  static RF hecke_scalar(Gen g, Mode mode) {
    // T^{-1} = T + (this scalar); generically T - T^{-1} = t^{-1} - t, at the
    // special point the four differences collapse onto -i ch(...) values.
    if (mode == Mode::generic) {
      switch (g) {
        case Gen::T0: return t(0) - t(0).inverse();
        case Gen::T1: return t(1) - t(1).inverse();
        case Gen::T0v: return t(2) - t(2).inverse();
        case Gen::T1v: return t(3) - t(3).inverse();
        default: break;
      }
    } else {
      switch (g) {
        case Gen::T0: return i() * ch(xb(0));
        case Gen::T1: return i() * ch(u(-2) * xb(1));
        case Gen::T0v: return i() * ch(xb(0));
        case Gen::T1v: return i() * ch(xb(1));
        default: break;
      }
    }
    throw UnknownGenerator("no Hecke scalar for this generator");
  }

  static const Op& T_inv(Gen g, Mode mode) { return build(GenId{g, mode, 0, 0, true}); }

  static Op generic_T0() {
    // t0^{-1} s D - (q^{-1}(t0^{-1}-t0) x^2 + q^{-1/2}(t2^{-1}-t2) x)/(1-q^{-1}x^2) (1 - s D)
    RF t0 = t(0), t2 = t(2);
    RF w = (q().inverse() * (t0.inverse() - t0) * x() * x() +
            qh().inverse() * (t2.inverse() - t2) * x()) /
           (1 - q().inverse() * x() * x());
    return Op::term(OpKey{1, 1, 0, 0}, t0.inverse() + w) + Op::mult(-w);
  }

  static Op generic_T1() {
    // t1^{-1} s + ((t1^{-1}-t1) + (t3^{-1}-t3) x)/(x^2-1) (s - 1)
    RF t1 = t(1), t3 = t(3);
    RF v = ((t1.inverse() - t1) + (t3.inverse() - t3) * x()) / (x() * x() - 1);
    return Op::term(OpKey{1, 0, 0, 0}, t1.inverse() + v) + Op::mult(-v);
  }

  static Op star_T0() {
    // i x/(q^{1/2}-x) ( -(q^{1/2} + x x0^2)/(x x0) s D + ch(x0) )
    RF x0 = xb(0);
    RF pref = i() * x() / (qh() - x());
    return Op::term(OpKey{1, 1, 0, 0}, pref * (-(qh() + x() * x0 * x0) / (x() * x0))) +
           Op::mult(pref * ch(x0));
  }

  static Op star_T1() {
    // i ( (1+q^{1/2}x)/(q^{1/2}(1-x^2)) (q^{1/2}x + x1^2)/x1 (s - 1) - q^{1/2} x1^{-1} )
    RF x1 = xb(1);
    RF g = (1 + qh() * x()) * (qh() * x() + x1 * x1) / (qh() * (1 - x() * x()) * x1);
    return Op::term(OpKey{1, 0, 0, 0}, i() * g) + Op::mult(-i() * g - i() * qh() / x1);
  }

  static Op idempotent(Mode mode) {
    if (mode == Mode::generic) {
      // (t1 + T1) / (t1 + t1^{-1})
      RF t1 = t(1);
      return (t1 + t1.inverse()).inverse() * (Op::mult(t1) + build(Gen::T1, Mode::generic));
    }
    // (1 + s) (q^{1/2}+x)(q^{1/2}+x x1^2) / ((1-x^2)(q-x1^2))
    RF x1 = xb(1);
    RF c = (qh() + x()) * (qh() + x() * x1 * x1) / ((1 - x() * x()) * (q() - x1 * x1));
    return (Op::identity() + Op::refl()) * Op::mult(c);
  }

  static Op weight_as_mult(Mode mode) {
    Op w = Op::mult(weight_W(x()));
    if (mode == Mode::star) w = w.subst_params(star_bindings());
    return w;
  }

  static Op aw_operator(Mode mode) {
    RF Wx = weight_W(x());
    RF Wxi = weight_W(x().inverse());
    RF t0t1 = t(0) * t(1);
    Op op = Op::term(OpKey{0, 1, 0, 0}, Wx) + Op::term(OpKey{0, -1, 0, 0}, Wxi) +
            Op::mult(ch(t0t1) - Wx - Wxi);
    if (mode == Mode::star) op = op.subst_params(star_bindings());
    return op;
  }

  static Op star_U0() {
    // q^{-1/4} x/(q^{1/2}-x) ( K_0(x0, x^{-1}) s D - G_0(x0, x) )
    RF pref = u(-1) * x() / (qh() - x());
    Op sD = Op::term(OpKey{1, 1, 0, 0}, RF::one());
    return pref * (K_op(0, 0, x().inverse()) * sD) + pref * -G_op(0, 0, x());
  }

  static Op star_U0_inv() {
    RF pref = u(-1) * x() / (qh() - x());
    Op sD = Op::term(OpKey{1, 1, 0, 0}, RF::one());
    return pref * (K_op(0, 0, x().inverse()) * sD) +
           (u(1) / (qh() - x())) * -G_op(0, 0, x());
  }

  static Op star_U1() {
    // -x(1+q^{1/2}x)/(q^{1/4}(1-x^2)) K_0(x1,x)(s-1)
    //   + q^{1/4}/(1-q^{1/2}x) ( G_0(x1,x) - q^{1/2} x K_0(x1,x) )
    RF c1 = -x() * (1 + qh() * x()) / (u(1) * (1 - x() * x()));
    Op s_minus_1 = Op::refl() - Op::identity();
    Op first = c1 * (K_op(0, 1, x()) * s_minus_1);
    RF c2 = u(1) / (1 - qh() * x());
    Op second = c2 * (G_op(0, 1, x()) - qh() * x() * K_op(0, 1, x()));
    return first + second;
  }

  static Op star_U1_inv() {
    // { (s+1) (q^{1/2}+x)/(q^{1/4}(1-x^2)) K_0(x1, x^{-1})
    //   + q^{1/4}/(q^{1/2}-x) ( x G_0(x1, q^{-1}x) - q^{1/2} K_0(x1, x^{-1}) ) }
    //  (1-x1^2)/(q-x1^2)
    RF c1 = (qh() + x()) / (u(1) * (1 - x() * x()));
    Op first = (Op::refl() + Op::identity()) * (c1 * K_op(0, 1, x().inverse()));
    RF c2 = u(1) / (qh() - x());
    Op second = c2 * (x() * G_op(0, 1, q().inverse() * x()) - qh() * K_op(0, 1, x().inverse()));
    RF x1 = xb(1);
    return (first + second) * Op::mult((1 - x1 * x1) / (q() - x1 * x1));
  }

  static Op image_y() {
    // sum_e w(x^e) { -x^{-e} (x0 + q^{1/2}x^e/x0)(x1 + q^{1/2}x^e/x1) D^e }
    //   + (w(x) + w(1/x)) q^{1/2} ch(x0) ch(x1)
    RF x0 = xb(0), x1 = xb(1);
    Op op;
    for (int eps : {+1, -1}) {
      RF xe = x().pow(eps);
      RF c = omega(xe) * -xe.inverse() * (x0 + qh() * xe / x0) * (x1 + qh() * xe / x1);
      op = op + Op::term(OpKey{0, eps, 0, 0}, c);
    }
    RF wsum = omega(x()) + omega(x().inverse());
    return op + Op::mult(wsum * qh() * ch(x0) * ch(x1));
  }

  static Op image_ytilde() {
    // sum_e w(x^e) { K_0(x0,x^e) K_0(x1,x^e) D^e } - (w(x)+w(1/x)) G_0(x0,x) G_0(x1,x)
    Op op;
    for (int eps : {+1, -1}) {
      RF xe = x().pow(eps);
      Op kk = K_op(0, 0, xe) * K_op(0, 1, xe);
      op = op + omega(xe) * (kk * Op::shift_x(eps));
    }
    RF wsum = omega(x()) + omega(x().inverse());
    return op + wsum * -(G_op(0, 0, x()) * G_op(0, 1, x()));
  }
};

}  // namespace g2daha
