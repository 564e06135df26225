#pragma once

// Jones polynomial from the bracket: V(t) = (-A)^(-3w) <D> at t^(1/2) = A^-2.
// Polynomials in t are stored with doubled exponents (denominator 2).

#include "turaev/algebra.hpp"
#include "turaev/bracket.hpp"
#include "turaev/params.hpp"

namespace turaev {

struct JonesReport {
  LaurentPoly1 polynomial{2};
  Rational max_deg;
  Rational min_deg;
  Rational span;
  Integer a_M;  // leading coefficient
  Integer a_m;  // trailing coefficient
};

/// Converts a normalized bracket and writhe into the Jones polynomial.
LaurentPoly1 jones_from_bracket(const LaurentPoly1& bracket, int writhe);

JonesReport jones(const Diagram& d, int max_crossings = kDefaultStateBudget);
JonesReport make_jones_report(LaurentPoly1 polynomial);

/// Substitutes t -> t^-1.
LaurentPoly1 mirror_t(const LaurentPoly1& v);

struct ExtremeDegrees {
  Rational max_deg;
  Rational min_deg;
};

/// Closed-form Jones degrees of the pretzel family; requires r = s, u = v and
/// t >= max(r, u) + 2, otherwise throws std::invalid_argument.
ExtremeDegrees extreme_degrees(const FamilyParams& p);

/// c - g - span.
Rational defect(int c, int g, const Rational& span);

}  // namespace turaev
