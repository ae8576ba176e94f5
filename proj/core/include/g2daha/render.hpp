#pragma once

#include <string>

#include "g2daha/ratfunc.hpp"

namespace g2daha {

// Canonical text form. Terms appear in descending graded-lex order; Gaussian
// coefficients print as `a`, `a+b*i`, or `b*i`; a denominator is always
// parenthesized. This rendering is the byte contract for CLI output and the
// golden tests.

namespace detail {

template <class K>
struct CoeffFormat {
  static std::string str(const K& c) { return c.str(); }
  // Whether the coefficient needs parentheses in front of '*'.
  static bool composite(const K&) { return true; }
};

template <>
struct CoeffFormat<GaussRat> {
  static std::string str(const GaussRat& c) { return c.str(); }
  static bool composite(const GaussRat& c) { return sgn(c.re) != 0 && sgn(c.im) != 0; }
};

}  // namespace detail

template <class K>
std::string poly_str(const MPoly<K>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  const bool single = p.size() == 1;
  for (const auto& t : p.terms()) {
    K c = t.c;
    if (first) {
      first = false;
    } else if (detail::CoeffFormat<K>::composite(c)) {
      s += " + ";
    } else if (c.prints_negative()) {
      s += " - ";
      c = -c;
    } else {
      s += " + ";
    }
    if (t.m.is_unit()) {
      if (detail::CoeffFormat<K>::composite(c) && !single)
        s += "(" + detail::CoeffFormat<K>::str(c) + ")";
      else
        s += detail::CoeffFormat<K>::str(c);
    } else if (c.is_one()) {
      s += t.m.str();
    } else if ((-c).is_one()) {
      s += "-" + t.m.str();
    } else if (detail::CoeffFormat<K>::composite(c)) {
      s += "(" + detail::CoeffFormat<K>::str(c) + ")*" + t.m.str();
    } else {
      s += detail::CoeffFormat<K>::str(c) + "*" + t.m.str();
    }
  }
  return s;
}

template <class K>
std::string RatFunc<K>::str() const {
  std::string n = poly_str(num_);
  if (den_.is_one()) return n;
  if (num_.size() > 1 || n.find('*') != std::string::npos) n = "(" + n + ")";
  return n + "/(" + poly_str(den_) + ")";
}

}  // namespace g2daha
