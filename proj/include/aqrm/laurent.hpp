#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "aqrm/errors.hpp"
#include "aqrm/rational.hpp"

namespace aqrm {

// Exponent pair of one monomial Delta^{delta_pow} g^{g_pow}.
// delta_pow is never negative; g_pow may be (the coefficient recursion
// divides by powers of g).
struct TermKey {
  int delta_pow = 0;
  int g_pow = 0;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

// Canonical term order: higher Delta power first, then higher g power.
struct TermOrder {
  bool operator()(const TermKey& a, const TermKey& b) const {
    if (a.delta_pow != b.delta_pow) return a.delta_pow > b.delta_pow;
    return a.g_pow > b.g_pow;
  }
};

// Exact Laurent polynomial in the two couplings: a finite sum of terms
// q * Delta^{dp} g^{gp} with BigRational q != 0 and dp >= 0.  The zero
// polynomial is the empty term map, so equality is structural.
class LaurentPoly {
 public:
  using TermMap = std::map<TermKey, BigRational, TermOrder>;

  LaurentPoly() = default;

  // q * Delta^{delta_pow} * g^{g_pow}; throws std::invalid_argument if
  // delta_pow < 0.
  static LaurentPoly term(int delta_pow, int g_pow, BigRational coeff);
  static LaurentPoly constant(BigRational q) { return term(0, 0, std::move(q)); }
  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return constant(1); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // Coefficient of Delta^{dp} g^{gp}; zero if the term is absent.
  BigRational coeff(int delta_pow, int g_pow) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }
  LaurentPoly operator*(const BigRational& q) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Exact division by Delta: every term must carry delta_pow >= 1, else
  // NotDivisible is thrown and *this is unchanged.
  LaurentPoly div_exact_by_delta() const;

  // Evaluate at (delta_val, g_val) in double precision, summing terms from
  // smallest magnitude to largest.  Throws DomainError when g_val == 0 and a
  // negative g power is present.
  double eval(double delta_val, double g_val) const;

  // One canonical LaTeX form, terms in map order, "0" for the zero
  // polynomial.  Example: Delta^2/(16 g^2) renders as
  // "\frac{\Delta^{2}}{16g^{2}}".
  std::string latex() const;

  // JSON array of {"dp", "gp", "num", "den"} in canonical term order;
  // num/den are decimal strings so consumers never overflow.
  nlohmann::json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  // Inserts q * Delta^{dp} g^{gp}, erasing the slot if the sum cancels.
  void add_term(const TermKey& key, const BigRational& q);

  TermMap terms_;
};

// Convenience factors used throughout the recursion.
inline LaurentPoly lp_delta(int pow = 1) { return LaurentPoly::term(pow, 0, 1); }
inline LaurentPoly lp_g(int pow = 1) { return LaurentPoly::term(0, pow, 1); }
inline LaurentPoly lp_int(long long n) { return LaurentPoly::constant(BigRational(n)); }

}  // namespace aqrm
