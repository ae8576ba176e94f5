#include <string>

#include "g2daha/field.hpp"
#include "g2daha/monomial.hpp"

namespace g2daha {

std::string gauss_rat_str(const GaussRat& v) {
  const bool has_re = sgn(v.re) != 0;
  const bool has_im = sgn(v.im) != 0;
  if (!has_re && !has_im) return "0";
  auto imag_part = [](const mpq_class& b) -> std::string {
    if (b == 1) return "i";
    if (b == -1) return "-i";
    return b.get_str() + "*i";
  };
  if (!has_im) return v.re.get_str();
  if (!has_re) return imag_part(v.im);
  std::string s = v.re.get_str();
  if (sgn(v.im) > 0) {
    s += "+";
    s += (v.im == 1) ? "i" : v.im.get_str() + "*i";
  } else {
    mpq_class a = -v.im;
    s += "-";
    s += (a == 1) ? "i" : a.get_str() + "*i";
  }
  return s;
}

std::string monomial_str(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (int i = 0; i < kNumVars; ++i) {
    int32_t e = m.e[i];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += kVarNames[i];
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace g2daha
