#include "turaev/jones.hpp"

#include <stdexcept>

namespace turaev {

LaurentPoly1 jones_from_bracket(const LaurentPoly1& bracket, int writhe) {
  if (bracket.denominator() != 1) throw AlgebraError("bracket must be a polynomial in A");
  LaurentPoly1 v(2);
  const int sign = writhe % 2 == 0 ? 1 : -1;
  for (const auto& [e, c] : bracket.terms()) {
    // A^(e - 3w) = t^(-(e - 3w)/4); stored doubled.
    int shifted = e - 3 * writhe;
    if (shifted % 2 != 0) throw AlgebraError("bracket exponent parity is inconsistent with the writhe");
    v.add_term(-shifted / 2, c * sign);
  }
  return v;
}

JonesReport make_jones_report(LaurentPoly1 polynomial) {
  JonesReport r;
  auto st = polynomial.degree_stats();
  r.polynomial = std::move(polynomial);
  r.max_deg = st.max_degree;
  r.min_deg = st.min_degree;
  r.span = st.max_degree - st.min_degree;
  r.a_M = st.leading_coeff;
  r.a_m = st.trailing_coeff;
  return r;
}

JonesReport jones(const Diagram& d, int max_crossings) {
  return make_jones_report(jones_from_bracket(bracket(d, max_crossings), d.writhe()));
}

LaurentPoly1 mirror_t(const LaurentPoly1& v) { return v.scale_exponents(-1); }

ExtremeDegrees extreme_degrees(const FamilyParams& p) {
  if (!p.strict())
    throw std::invalid_argument("closed-form degrees need r = s, u = v and t >= max(r, u) + 2; got " + p.to_string());
  return {Rational(-(4 * p.r - 6 * p.t - 2 * p.u + 2), 4), Rational(-(8 * p.r - 2 * p.t + 2 * p.u + 2), 4)};
}

Rational defect(int c, int g, const Rational& span) { return Rational(c - g) - span; }

}  // namespace turaev
