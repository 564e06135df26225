#pragma once

// Exact sparse Laurent polynomials over the integers, in one and two variables.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace turaev {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Renders a rational as "p" or "p/q".
std::string to_string(const Rational& r);

/// JSON value for an integer: a number when it fits in 64 bits, a decimal string otherwise.
nlohmann::json integer_to_json(const Integer& v);

/// Extremal exponents of a nonzero polynomial and the coefficients sitting there.
struct DegreeStats {
  Rational min_degree;
  Rational max_degree;
  Integer leading_coeff;   // at max_degree
  Integer trailing_coeff;  // at min_degree
};

/// One-variable Laurent polynomial. Exponents are stored as integers and
/// interpreted in units of 1/denominator; denominator 1 is used for the
/// bracket variable A and 2 for the Jones variable t (stored doubled).
class LaurentPoly1 {
 public:
  using Terms = std::map<int, Integer>;

  explicit LaurentPoly1(int denominator = 1);

  static LaurentPoly1 monomial(Integer coeff, int stored_exponent, int denominator = 1);
  static LaurentPoly1 constant(Integer coeff, int denominator = 1);

  int denominator() const { return denominator_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient at a stored (scaled) exponent; zero when absent.
  Integer coeff(int stored_exponent) const;

  /// Adds c * x^e in place, pruning zeros.
  void add_term(int stored_exponent, const Integer& c);

  LaurentPoly1& operator+=(const LaurentPoly1& q);
  LaurentPoly1& operator-=(const LaurentPoly1& q);
  LaurentPoly1& operator*=(const LaurentPoly1& q);
  LaurentPoly1& operator*=(const Integer& c);

  friend LaurentPoly1 operator+(LaurentPoly1 p, const LaurentPoly1& q) { return p += q; }
  friend LaurentPoly1 operator-(LaurentPoly1 p, const LaurentPoly1& q) { return p -= q; }
  friend LaurentPoly1 operator*(const LaurentPoly1& p, const LaurentPoly1& q);
  friend LaurentPoly1 operator*(LaurentPoly1 p, const Integer& c) { return p *= c; }
  LaurentPoly1 operator-() const;

  bool operator==(const LaurentPoly1& q) const {
    return denominator_ == q.denominator_ && terms_ == q.terms_;
  }
  bool operator!=(const LaurentPoly1& q) const { return !(*this == q); }

  /// Multiplies every stored exponent by k (substitution x -> x^k).
  LaurentPoly1 scale_exponents(int k) const;
  /// Multiplies by x^shift (shift in stored units).
  LaurentPoly1 shifted(int shift) const;
  /// Reinterprets the stored exponents under a new denominator.
  LaurentPoly1 with_denominator(int denominator) const;
  /// p^n for n >= 0.
  LaurentPoly1 pow(unsigned n) const;

  /// Throws AlgebraError on the zero polynomial.
  DegreeStats degree_stats() const;

  /// Canonical text: descending exponents, e.g. "2*t^(11/2) - 4*t^(9/2) + 1".
  std::string to_string(std::string_view var) const;
  /// [[numerator, denominator, coefficient], ...] in descending exponent order.
  nlohmann::json to_json() const;

 private:
  void require_same_unit(const LaurentPoly1& q) const;

  int denominator_;
  Terms terms_;
};

/// Two-variable Laurent polynomial in a and z.
class LaurentPoly2 {
 public:
  using Key = std::pair<int, int>;  // (a exponent, z exponent)
  using Terms = std::map<Key, Integer>;

  LaurentPoly2() = default;
  static LaurentPoly2 monomial(Integer coeff, int a_exp, int z_exp);
  static LaurentPoly2 constant(Integer coeff) { return monomial(std::move(coeff), 0, 0); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coeff(int a_exp, int z_exp) const;
  void add_term(int a_exp, int z_exp, const Integer& c);

  LaurentPoly2& operator+=(const LaurentPoly2& q);
  LaurentPoly2& operator-=(const LaurentPoly2& q);
  LaurentPoly2& operator*=(const LaurentPoly2& q);
  LaurentPoly2& operator*=(const Integer& c);

  friend LaurentPoly2 operator+(LaurentPoly2 p, const LaurentPoly2& q) { return p += q; }
  friend LaurentPoly2 operator-(LaurentPoly2 p, const LaurentPoly2& q) { return p -= q; }
  friend LaurentPoly2 operator*(const LaurentPoly2& p, const LaurentPoly2& q);
  friend LaurentPoly2 operator*(LaurentPoly2 p, const Integer& c) { return p *= c; }
  LaurentPoly2 operator-() const;

  bool operator==(const LaurentPoly2& q) const { return terms_ == q.terms_; }
  bool operator!=(const LaurentPoly2& q) const { return !(*this == q); }

  /// Multiplies by a^da z^dz.
  LaurentPoly2 shifted(int da, int dz) const;
  LaurentPoly2 pow(unsigned n) const;
  /// Substitutes a -> a^-1.
  LaurentPoly2 invert_a() const;

  /// Largest z exponent among nonzero terms; throws on zero.
  int z_degree() const;
  /// Coefficient of z^s as a Laurent polynomial in a.
  LaurentPoly1 z_coefficient(int z_exp) const;

  /// Evaluates at a = sign_a * x^a_scale, z = sum of the given x-monomials,
  /// producing a one-variable polynomial in x. Used for specializations.
  LaurentPoly1 specialize(int a_sign, int a_scale, const LaurentPoly1& z_value) const;

  /// Canonical text, e.g. "a*z^2 + a^-1*z^2 - 2".
  std::string to_string() const;
  /// [[a_exp, z_exp, coefficient], ...] in descending (z, a) order.
  nlohmann::json to_json() const;

 private:
  Terms terms_;
};

}  // namespace turaev
