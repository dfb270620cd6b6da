#include "aqrm/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace aqrm {

LaurentPoly LaurentPoly::term(int delta_pow, int g_pow, BigRational coeff) {
  if (delta_pow < 0)
    throw std::invalid_argument("LaurentPoly: negative Delta power");
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(TermKey{delta_pow, g_pow}, std::move(coeff));
  return p;
}

BigRational LaurentPoly::coeff(int delta_pow, int g_pow) const {
  auto it = terms_.find(TermKey{delta_pow, g_pow});
  return it == terms_.end() ? BigRational(0) : it->second;
}

void LaurentPoly::add_term(const TermKey& key, const BigRational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.emplace(key, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [key, q] : r.terms_) q = -q;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [key, q] : rhs.terms_) add_term(key, q);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [key, q] : rhs.terms_) add_term(key, -q);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly r;
  for (const auto& [ka, qa] : lhs.terms_)
    for (const auto& [kb, qb] : rhs.terms_)
      r.add_term(TermKey{ka.delta_pow + kb.delta_pow, ka.g_pow + kb.g_pow},
                 qa * qb);
  return r;
}

LaurentPoly LaurentPoly::operator*(const BigRational& q) const {
  LaurentPoly r;
  if (q == 0) return r;
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, c * q);
  return r;
}

LaurentPoly LaurentPoly::div_exact_by_delta() const {
  for (const auto& [key, q] : terms_)
    if (key.delta_pow < 1)
      throw NotDivisible("div_exact_by_delta: term with Delta power 0");
  LaurentPoly r;
  for (const auto& [key, q] : terms_)
    r.terms_.emplace(TermKey{key.delta_pow - 1, key.g_pow}, q);
  return r;
}

double LaurentPoly::eval(double delta_val, double g_val) const {
  std::vector<double> vals;
  vals.reserve(terms_.size());
  for (const auto& [key, q] : terms_) {
    if (g_val == 0.0 && key.g_pow < 0)
      throw DomainError("LaurentPoly::eval: pole at g = 0");
    double v = to_double(q);
    v *= std::pow(delta_val, key.delta_pow);
    v *= std::pow(g_val, key.g_pow);
    vals.push_back(v);
  }
  std::sort(vals.begin(), vals.end(),
            [](double a, double b) { return std::abs(a) < std::abs(b); });
  double sum = 0.0;
  for (double v : vals) sum += v;
  return sum;
}

namespace {

// Renders |q| * Delta^{dp} g^{gp} (sign handled by the caller).
std::string term_latex(const TermKey& key, const BigRational& q) {
  BigInt num = rat_num(q);
  if (num < 0) num = -num;
  const BigInt den = rat_den(q);

  std::string top;
  if (num != 1 || (key.delta_pow == 0 && key.g_pow <= 0)) top += num.str();
  if (key.delta_pow > 0) {
    top += "\\Delta";
    if (key.delta_pow > 1)
      top += "^{" + std::to_string(key.delta_pow) + "}";
    else if (key.g_pow > 0)
      top += " ";  // keep "\Delta g" from fusing into one control word
  }
  if (key.g_pow > 0) {
    top += "g";
    if (key.g_pow > 1) top += "^{" + std::to_string(key.g_pow) + "}";
  }

  std::string bottom;
  if (den != 1) bottom += den.str();
  if (key.g_pow < 0) {
    bottom += "g";
    if (key.g_pow < -1) bottom += "^{" + std::to_string(-key.g_pow) + "}";
  }

  if (bottom.empty()) return top;
  return "\\frac{" + top + "}{" + bottom + "}";
}

}  // namespace

std::string LaurentPoly::latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, q] : terms_) {
    const bool neg = q < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += term_latex(key, q);
  }
  return out;
}

nlohmann::json LaurentPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, q] : terms_)
    arr.push_back({{"dp", key.delta_pow},
                   {"gp", key.g_pow},
                   {"num", rat_num(q).str()},
                   {"den", rat_den(q).str()}});
  return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("LaurentPoly: expected array");
  LaurentPoly p;
  for (const auto& t : j) {
    const BigInt num(t.at("num").get<std::string>());
    const BigInt den(t.at("den").get<std::string>());
    if (den == 0) throw std::invalid_argument("LaurentPoly: zero denominator");
    p.add_term(TermKey{t.at("dp").get<int>(), t.at("gp").get<int>()},
               BigRational(num, den));
  }
  for (const auto& [key, q] : p.terms_)
    if (key.delta_pow < 0)
      throw std::invalid_argument("LaurentPoly: negative Delta power");
  return p;
}

}  // namespace aqrm
