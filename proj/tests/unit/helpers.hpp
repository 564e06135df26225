#pragma once

#include <initializer_list>
#include <utility>

#include "turaev/algebra.hpp"
#include "turaev/diagram.hpp"

namespace testutil {

// Polynomial from (stored exponent, coefficient) pairs.
inline turaev::LaurentPoly1 poly(std::initializer_list<std::pair<int, int>> terms, int denominator = 1) {
  turaev::LaurentPoly1 p(denominator);
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

inline turaev::LaurentPoly2 poly2(std::initializer_list<std::array<int, 3>> terms) {
  turaev::LaurentPoly2 p;
  for (const auto& t : terms) p.add_term(t[0], t[1], t[2]);
  return p;
}

inline turaev::Diagram trefoil() { return turaev::braid_closure(2, {1, 1, 1}); }
inline turaev::Diagram figure_eight() { return turaev::braid_closure(3, {1, -2, 1, -2}); }
inline turaev::Diagram hopf() { return turaev::braid_closure(2, {1, 1}); }
inline turaev::Diagram kink() { return turaev::braid_closure(2, {1}); }

}  // namespace testutil
