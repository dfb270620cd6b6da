#include "aqrm/normal_op.hpp"

#include <algorithm>

namespace aqrm {

NormalOp NormalOp::monomial(int dag_pow, int low_pow, LaurentPoly coeff) {
  if (dag_pow < 0 || low_pow < 0)
    throw std::invalid_argument("NormalOp: negative operator power");
  NormalOp x;
  if (!coeff.is_zero())
    x.terms_.emplace(ModeKey{dag_pow, low_pow}, std::move(coeff));
  return x;
}

NormalOp NormalOp::number_plus() {
  NormalOp x = monomial(1, 1, LaurentPoly::one());
  x += monomial(1, 0, lp_g() * BigRational(2));
  return x;
}

NormalOp NormalOp::number_minus() {
  NormalOp x = monomial(1, 1, LaurentPoly::one());
  x -= monomial(0, 1, lp_g() * BigRational(2));
  return x;
}

LaurentPoly NormalOp::coeff(int dag_pow, int low_pow) const {
  auto it = terms_.find(ModeKey{dag_pow, low_pow});
  return it == terms_.end() ? LaurentPoly::zero() : it->second;
}

int NormalOp::degree() const {
  // Map order puts the highest level first.
  return terms_.empty() ? -1 : terms_.begin()->first.level();
}

void NormalOp::add_term(const ModeKey& key, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalOp NormalOp::operator-() const {
  NormalOp r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

NormalOp& NormalOp::operator+=(const NormalOp& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

NormalOp& NormalOp::operator-=(const NormalOp& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

NormalOp operator*(const NormalOp& lhs, const NormalOp& rhs) {
  // (ad^p am^q)(ad^r am^s): commute am^q past ad^r with [am, ad] = 1, which
  // gives am^q ad^r = sum_m m! C(q,m) C(r,m) ad^{r-m} am^{q-m}.
  NormalOp out;
  for (const auto& [ka, ca] : lhs.terms()) {
    for (const auto& [kb, cb] : rhs.terms()) {
      const LaurentPoly c = ca * cb;
      const int q = ka.low_pow, r = kb.dag_pow;
      for (int m = 0; m <= std::min(q, r); ++m) {
        const BigRational f(factorial(m) * binomial(q, m) * binomial(r, m));
        out.add_term(ModeKey{ka.dag_pow + r - m, q - m + kb.low_pow}, c * f);
      }
    }
  }
  return out;
}

NormalOp NormalOp::scale(const LaurentPoly& c) const {
  NormalOp r;
  if (c.is_zero()) return r;
  for (const auto& [key, v] : terms_) r.add_term(key, v * c);
  return r;
}

NormalOp NormalOp::mirror_conjugate() const {
  NormalOp r;
  for (const auto& [key, c] : terms_) {
    const ModeKey swapped{key.low_pow, key.dag_pow};
    r.terms_.emplace(swapped, key.level() % 2 ? -c : c);
  }
  return r;
}

OpMatrix2 OpMatrix2::identity() {
  OpMatrix2 m;
  m.e[0][0] = NormalOp::identity();
  m.e[1][1] = NormalOp::identity();
  return m;
}

OpMatrix2 operator*(const OpMatrix2& lhs, const OpMatrix2& rhs) {
  OpMatrix2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.e[r][c] = lhs.e[r][0] * rhs.e[0][c] + lhs.e[r][1] * rhs.e[1][c];
  return out;
}

OpMatrix2 operator-(const OpMatrix2& lhs, const OpMatrix2& rhs) {
  OpMatrix2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.e[r][c] = lhs.e[r][c] - rhs.e[r][c];
  return out;
}

}  // namespace aqrm
