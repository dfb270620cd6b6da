#pragma once

#include <map>

#include "aqrm/laurent.hpp"

namespace aqrm {

// Monomial key (i, j) of a normally ordered word (ad^i)(am^j), where
// ad = a_+^dag = a^dag + g and am = a_- = a - g are the two displaced boson
// operators.  They satisfy [am, ad] = 1, so every operator polynomial has a
// unique normal form with all ad factors to the left.
struct ModeKey {
  int dag_pow = 0;
  int low_pow = 0;
  int level() const { return dag_pow + low_pow; }
  friend bool operator==(const ModeKey&, const ModeKey&) = default;
};

// Canonical monomial order: higher level (i + j) first, then lower ad power.
struct ModeOrder {
  bool operator()(const ModeKey& a, const ModeKey& b) const {
    if (a.level() != b.level()) return a.level() > b.level();
    return a.dag_pow < b.dag_pow;
  }
};

// A polynomial in (ad, am) in normal form: a finite map (i, j) -> LaurentPoly
// with no zero coefficients stored.  Addition is term-wise; multiplication
// re-normal-orders via [am, ad] = 1.
class NormalOp {
 public:
  using TermMap = std::map<ModeKey, LaurentPoly, ModeOrder>;

  NormalOp() = default;

  static NormalOp zero() { return {}; }
  static NormalOp identity() { return monomial(0, 0, LaurentPoly::one()); }
  // coeff * (ad)^i (am)^j
  static NormalOp monomial(int dag_pow, int low_pow, LaurentPoly coeff);
  static NormalOp raising() { return monomial(1, 0, LaurentPoly::one()); }
  static NormalOp lowering() { return monomial(0, 1, LaurentPoly::one()); }

  // The displaced number operators written in the (ad, am) normal form:
  //   n_plus  = ad * (am + 2g) = ad am + 2g ad
  //   n_minus = (ad - 2g) * am = ad am - 2g am
  static NormalOp number_plus();
  static NormalOp number_minus();

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  // Coefficient of (ad)^i (am)^j; zero polynomial if absent.
  LaurentPoly coeff(int dag_pow, int low_pow) const;

  // Highest level i + j present, or -1 for the zero operator.
  int degree() const;

  NormalOp operator-() const;
  NormalOp& operator+=(const NormalOp& rhs);
  NormalOp& operator-=(const NormalOp& rhs);
  friend NormalOp operator+(NormalOp lhs, const NormalOp& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend NormalOp operator-(NormalOp lhs, const NormalOp& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend NormalOp operator*(const NormalOp& lhs, const NormalOp& rhs);

  // Scalar multiple by a coupling polynomial.
  NormalOp scale(const LaurentPoly& c) const;

  friend bool operator==(const NormalOp&, const NormalOp&) = default;

  // Conjugation by the parity phase combined with the adjoint:
  // coefficient-wise (i, j) -> (j, i) with sign (-1)^{i+j}.  An involution
  // that reverses products and swaps n_plus with n_minus.
  NormalOp mirror_conjugate() const;

 private:
  void add_term(const ModeKey& key, const LaurentPoly& c);

  TermMap terms_;
};

// 2x2 matrix over the operator algebra; index order is [row][col].
struct OpMatrix2 {
  NormalOp e[2][2];

  static OpMatrix2 identity();

  friend OpMatrix2 operator*(const OpMatrix2& lhs, const OpMatrix2& rhs);
  friend OpMatrix2 operator-(const OpMatrix2& lhs, const OpMatrix2& rhs);
  friend bool operator==(const OpMatrix2& a, const OpMatrix2& b) {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        if (!(a.e[r][c] == b.e[r][c])) return false;
    return true;
  }

  bool is_zero() const {
    return e[0][0].is_zero() && e[0][1].is_zero() && e[1][0].is_zero() &&
           e[1][1].is_zero();
  }
};

}  // namespace aqrm
