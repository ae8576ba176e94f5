#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "g2daha/errors.hpp"

namespace g2daha {

// Gaussian rationals a + b*i with exact arbitrary-precision components.
// Both components are kept reduced with positive denominators (mpq_class
// canonicalizes on every operation).
struct GaussRat {
  mpq_class re;
  mpq_class im;

  GaussRat() : re(0), im(0) {}
  explicit GaussRat(long n) : re(n), im(0) {}
  GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat zero() { return GaussRat(); }
  static GaussRat one() { return GaussRat(1); }
  static GaussRat imag() { return GaussRat(mpq_class(0), mpq_class(1)); }
  static GaussRat from_long(long n) { return GaussRat(n); }
  static GaussRat from_ratio(long p, long q) {
    mpq_class v(p, q);
    v.canonicalize();
    return GaussRat(v, mpq_class(0));
  }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re + b.re, a.im + b.im);
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re - b.re, a.im - b.im);
  }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  GaussRat operator-() const { return GaussRat(-re, -im); }

  GaussRat inv() const {
    mpq_class n = re * re + im * im;
    if (sgn(n) == 0) throw DivisionByZero("inverse of zero Gaussian rational");
    return GaussRat(re / n, -im / n);
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inv(); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  // Used to pick a deterministic sign when ordering renders; true when the
  // leading printed sign would be '-'.
  bool prints_negative() const {
    if (sgn(re) != 0) return sgn(re) < 0;
    return sgn(im) < 0;
  }

  std::string str() const;
};

std::string gauss_rat_str(const GaussRat& v);
inline std::string GaussRat::str() const { return gauss_rat_str(*this); }

// GF(p^2) with p = 2^61 - 1 and i a formal square root of -1 (p ≡ 3 mod 4,
// so x^2 + 1 is irreducible and this really is a field). Backs the fast
// probabilistic verification path: the same symbolic pipeline runs with
// these coefficients instead of exact Gaussian rationals.
struct ModGauss {
  static constexpr uint64_t P = 2305843009213693951ull;  // 2^61 - 1

  uint64_t re = 0;
  uint64_t im = 0;

  ModGauss() = default;
  ModGauss(uint64_t r, uint64_t i) : re(r), im(i) {}

  static uint64_t norm_long(long n) {
    long long m = n % static_cast<long long>(P);
    if (m < 0) m += static_cast<long long>(P);
    return static_cast<uint64_t>(m);
  }
  static ModGauss zero() { return ModGauss(); }
  static ModGauss one() { return ModGauss(1, 0); }
  static ModGauss imag() { return ModGauss(0, 1); }
  static ModGauss from_long(long n) { return ModGauss(norm_long(n), 0); }
  static ModGauss from_ratio(long p, long q) { return from_long(p) / from_long(q); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  static uint64_t addm(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    if (s >= P) s -= P;
    return s;
  }
  static uint64_t subm(uint64_t a, uint64_t b) { return addm(a, P - b); }
  static uint64_t mulm(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % P);
  }
  static uint64_t powm(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulm(r, a);
      a = mulm(a, a);
      e >>= 1;
    }
    return r;
  }
  static uint64_t invm(uint64_t a) {
    if (a == 0) throw DivisionByZero("inverse of zero mod p");
    return powm(a, P - 2);
  }

  friend ModGauss operator+(const ModGauss& a, const ModGauss& b) {
    return ModGauss(addm(a.re, b.re), addm(a.im, b.im));
  }
  friend ModGauss operator-(const ModGauss& a, const ModGauss& b) {
    return ModGauss(subm(a.re, b.re), subm(a.im, b.im));
  }
  friend ModGauss operator*(const ModGauss& a, const ModGauss& b) {
    return ModGauss(subm(mulm(a.re, b.re), mulm(a.im, b.im)),
                    addm(mulm(a.re, b.im), mulm(a.im, b.re)));
  }
  ModGauss operator-() const { return ModGauss(re ? P - re : 0, im ? P - im : 0); }

  ModGauss inv() const {
    // (a+bi)^-1 = (a-bi)/(a^2+b^2); the norm vanishes only at zero.
    uint64_t n = addm(mulm(re, re), mulm(im, im));
    uint64_t ni = invm(n);
    return ModGauss(mulm(re, ni), mulm(im ? P - im : 0, ni));
  }
  friend ModGauss operator/(const ModGauss& a, const ModGauss& b) { return a * b.inv(); }

  friend bool operator==(const ModGauss& a, const ModGauss& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ModGauss& a, const ModGauss& b) { return !(a == b); }

  bool prints_negative() const { return false; }
  std::string str() const {
    return "(" + std::to_string(re) + "," + std::to_string(im) + " mod p)";
  }
};

// splitmix64; drives every seeded pseudo-random choice so results are
// reproducible across platforms.
inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace g2daha
