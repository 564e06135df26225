#include "turaev/algebra.hpp"

#include <limits>
#include <sstream>

namespace turaev {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

nlohmann::json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

namespace {

// Appends " + c*mono" / " - c*mono" / leading form. `mono` is empty for constants.
void append_term(std::ostringstream& out, bool first, const Integer& c, const std::string& mono) {
  Integer mag = c < 0 ? Integer(-c) : c;
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (mono.empty()) {
    out << mag;
  } else if (mag == 1) {
    out << mono;
  } else {
    out << mag << "*" << mono;
  }
}

std::string power(std::string_view var, const Rational& e) {
  if (e.numerator() == 0) return {};
  std::string s(var);
  if (e == Rational(1)) return s;
  if (e.denominator() == 1) return s + "^" + std::to_string(e.numerator());
  return s + "^(" + turaev::to_string(e) + ")";
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly1

LaurentPoly1::LaurentPoly1(int denominator) : denominator_(denominator) {
  if (denominator < 1) throw AlgebraError("exponent denominator must be positive");
}

LaurentPoly1 LaurentPoly1::monomial(Integer coeff, int stored_exponent, int denominator) {
  LaurentPoly1 p(denominator);
  p.add_term(stored_exponent, coeff);
  return p;
}

LaurentPoly1 LaurentPoly1::constant(Integer coeff, int denominator) {
  return monomial(std::move(coeff), 0, denominator);
}

Integer LaurentPoly1::coeff(int stored_exponent) const {
  auto it = terms_.find(stored_exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly1::add_term(int stored_exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(stored_exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly1::require_same_unit(const LaurentPoly1& q) const {
  if (denominator_ != q.denominator_)
    throw AlgebraError("exponent unit mismatch: 1/" + std::to_string(denominator_) + " vs 1/" +
                       std::to_string(q.denominator_));
}

LaurentPoly1& LaurentPoly1::operator+=(const LaurentPoly1& q) {
  require_same_unit(q);
  for (const auto& [e, c] : q.terms_) add_term(e, c);
  return *this;
}

LaurentPoly1& LaurentPoly1::operator-=(const LaurentPoly1& q) {
  require_same_unit(q);
  for (const auto& [e, c] : q.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly1 operator*(const LaurentPoly1& p, const LaurentPoly1& q) {
  p.require_same_unit(q);
  LaurentPoly1 r(p.denominator_);
  for (const auto& [e1, c1] : p.terms_)
    for (const auto& [e2, c2] : q.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly1& LaurentPoly1::operator*=(const LaurentPoly1& q) { return *this = *this * q; }

LaurentPoly1& LaurentPoly1::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly1 LaurentPoly1::operator-() const {
  LaurentPoly1 r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly1 LaurentPoly1::scale_exponents(int k) const {
  if (k == 0) throw AlgebraError("exponent scale must be nonzero");
  LaurentPoly1 r(denominator_);
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

LaurentPoly1 LaurentPoly1::shifted(int shift) const {
  LaurentPoly1 r(denominator_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
  return r;
}

LaurentPoly1 LaurentPoly1::with_denominator(int denominator) const {
  LaurentPoly1 r(denominator);
  r.terms_ = terms_;
  return r;
}

LaurentPoly1 LaurentPoly1::pow(unsigned n) const {
  LaurentPoly1 result = constant(1, denominator_);
  LaurentPoly1 base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

DegreeStats LaurentPoly1::degree_stats() const {
  if (terms_.empty()) throw AlgebraError("degree of the zero polynomial is undefined");
  const auto& lo = *terms_.begin();
  const auto& hi = *terms_.rbegin();
  return DegreeStats{Rational(lo.first, denominator_), Rational(hi.first, denominator_), hi.second,
                     lo.second};
}

std::string LaurentPoly1::to_string(std::string_view var) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(out, first, it->second, power(var, Rational(it->first, denominator_)));
    first = false;
  }
  return out.str();
}

nlohmann::json LaurentPoly1::to_json() const {
  auto arr = nlohmann::json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational e(it->first, denominator_);
    arr.push_back({e.numerator(), e.denominator(), integer_to_json(it->second)});
  }
  return arr;
}

// ---------------------------------------------------------------- LaurentPoly2

LaurentPoly2 LaurentPoly2::monomial(Integer coeff, int a_exp, int z_exp) {
  LaurentPoly2 p;
  p.add_term(a_exp, z_exp, coeff);
  return p;
}

Integer LaurentPoly2::coeff(int a_exp, int z_exp) const {
  auto it = terms_.find({a_exp, z_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly2::add_term(int a_exp, int z_exp, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{a_exp, z_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& q) {
  for (const auto& [k, c] : q.terms_) add_term(k.first, k.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& q) {
  for (const auto& [k, c] : q.terms_) add_term(k.first, k.second, -c);
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q) {
  LaurentPoly2 r;
  for (const auto& [k1, c1] : p.terms_)
    for (const auto& [k2, c2] : q.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& q) { return *this = *this * q; }

LaurentPoly2& LaurentPoly2::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
  LaurentPoly2 r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly2 LaurentPoly2::shifted(int da, int dz) const {
  LaurentPoly2 r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + da, k.second + dz}, c);
  return r;
}

LaurentPoly2 LaurentPoly2::pow(unsigned n) const {
  LaurentPoly2 result = constant(1);
  LaurentPoly2 base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly2 LaurentPoly2::invert_a() const {
  LaurentPoly2 r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{-k.first, k.second}, c);
  return r;
}

int LaurentPoly2::z_degree() const {
  if (terms_.empty()) throw AlgebraError("z-degree of the zero polynomial is undefined");
  int best = terms_.begin()->first.second;
  for (const auto& [k, c] : terms_) best = std::max(best, k.second);
  return best;
}

LaurentPoly1 LaurentPoly2::z_coefficient(int z_exp) const {
  LaurentPoly1 r(1);
  for (const auto& [k, c] : terms_)
    if (k.second == z_exp) r.add_term(k.first, c);
  return r;
}

LaurentPoly1 LaurentPoly2::specialize(int a_sign, int a_scale, const LaurentPoly1& z_value) const {
  const int den = z_value.denominator();
  LaurentPoly1 result(den);
  if (terms_.empty()) return result;
  int zmin = terms_.begin()->first.second, zmax = zmin;
  for (const auto& [k, c] : terms_) {
    zmin = std::min(zmin, k.second);
    zmax = std::max(zmax, k.second);
  }
  if (zmin < 0) {
    // Negative z powers need z_value to be a unit (a monomial).
    if (z_value.size() != 1) throw AlgebraError("cannot specialize negative z powers at a non-monomial");
  }
  std::map<int, LaurentPoly1> zpow;
  auto z_power = [&](int s) -> const LaurentPoly1& {
    auto it = zpow.find(s);
    if (it != zpow.end()) return it->second;
    LaurentPoly1 v(den);
    if (s >= 0) {
      v = z_value.pow(static_cast<unsigned>(s));
    } else {
      const auto& [e, c] = *z_value.terms().begin();
      if (c != 1 && c != -1) throw AlgebraError("z value is not a unit");
      Integer sign = (-s) % 2 == 1 ? c : Integer(1);
      v = LaurentPoly1::monomial(sign, e * s, den);
    }
    return zpow.emplace(s, std::move(v)).first->second;
  };
  for (const auto& [k, c] : terms_) {
    Integer coeff = c;
    if (a_sign < 0 && (k.first % 2 != 0)) coeff = -coeff;
    result += z_power(k.second).shifted(a_scale * k.first) * coeff;
  }
  return result;
}

std::string LaurentPoly2::to_string() const {
  if (terms_.empty()) return "0";
  // Descending z, then descending a.
  std::map<Key, Integer, std::greater<>> ordered;
  for (const auto& [k, c] : terms_) ordered.emplace(Key{k.second, k.first}, c);
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : ordered) {
    std::string a = power("a", Rational(k.second));
    std::string z = power("z", Rational(k.first));
    std::string mono = a.empty() ? z : (z.empty() ? a : a + "*" + z);
    append_term(out, first, c, mono);
    first = false;
  }
  return out.str();
}

nlohmann::json LaurentPoly2::to_json() const {
  std::map<Key, Integer, std::greater<>> ordered;
  for (const auto& [k, c] : terms_) ordered.emplace(Key{k.second, k.first}, c);
  auto arr = nlohmann::json::array();
  for (const auto& [k, c] : ordered) arr.push_back({k.second, k.first, integer_to_json(c)});
  return arr;
}

}  // namespace turaev
