#include "aqrm/solver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace aqrm {

namespace {

const LaurentPoly kZero;

LaurentPoly two_g() { return lp_g() * BigRational(2); }
LaurentPoly half_delta() { return LaurentPoly::term(1, 0, BigRational(1, 2)); }

// B_{i,j} - (-1)^{i+j} B_{j,i}
LaurentPoly mirror_diff(const CoeffMap& b, int i, int j) {
  const LaurentPoly& bij = coeff_at(b, i, j);
  const LaurentPoly& bji = coeff_at(b, j, i);
  return (i + j) % 2 ? bij + bji : bij - bji;
}

std::string level_tag(int level, int i) {
  std::ostringstream os;
  os << "level " << level << ", instance i = " << i;
  return os.str();
}

}  // namespace

const LaurentPoly& coeff_at(const CoeffMap& m, int i, int j) {
  if (i < 0 || j < 0) return kZero;
  auto it = m.find({i, j});
  return it == m.end() ? kZero : it->second;
}

void set_coeff(CoeffMap& m, int i, int j, LaurentPoly value) {
  if (i < 0 || j < 0)
    throw std::invalid_argument("set_coeff: negative index");
  if (value.is_zero())
    m.erase({i, j});
  else
    m.insert_or_assign({i, j}, std::move(value));
}

NormalOp to_normal_op(const CoeffMap& m) {
  NormalOp x;
  for (const auto& [ij, c] : m) x += NormalOp::monomial(ij.first, ij.second, c);
  return x;
}

OpMatrix2 assemble_q(const CoeffTables& t) {
  OpMatrix2 q;
  q.e[0][0] = to_normal_op(t.a);
  q.e[0][1] = to_normal_op(t.b);
  q.e[1][0] = to_normal_op(t.c);
  q.e[1][1] = to_normal_op(t.d);
  return q;
}

OpMatrix2 hamiltonian_op(int bias) {
  const LaurentPoly shift = LaurentPoly::term(0, 2, -1);  // -g^2
  const LaurentPoly half_bias = LaurentPoly::constant(BigRational(bias, 2));
  const NormalOp off =
      NormalOp::monomial(0, 0, LaurentPoly::term(1, 0, BigRational(-1, 2)));
  OpMatrix2 h;
  h.e[0][0] = NormalOp::number_plus() + NormalOp::monomial(0, 0, shift + half_bias);
  h.e[0][1] = off;
  h.e[1][0] = off;
  h.e[1][1] = NormalOp::number_minus() + NormalOp::monomial(0, 0, shift - half_bias);
  return h;
}

OpMatrix2 hamiltonian_op_swapped(int bias) {
  OpMatrix2 h = hamiltonian_op(bias);
  // Exchange the displaced number operators, keeping the scalar diagonal.
  const LaurentPoly shift = LaurentPoly::term(0, 2, -1);
  const LaurentPoly half_bias = LaurentPoly::constant(BigRational(bias, 2));
  h.e[0][0] = NormalOp::number_minus() + NormalOp::monomial(0, 0, shift + half_bias);
  h.e[1][1] = NormalOp::number_plus() + NormalOp::monomial(0, 0, shift - half_bias);
  return h;
}

void solve_d_level(CoeffTables& t, int level) {
  // Row-lowering instances at i + j = level:
  //   (i - j) D_{i,j} + 2g D_{i-1,j} + 2g D_{i,j-1}
  //     = (Delta/2)(B_{i,j} - (-1)^{i+j} B_{j,i}).
  // Sweeping i = 0..level-1 isolates D_{i, level-1-i} with pivot 2g; the
  // instance i = level has no unknown left and must close exactly.
  const LaurentPoly tg = two_g();
  const LaurentPoly inv_2g = LaurentPoly::term(0, -1, BigRational(1, 2));
  for (int i = 0; i <= level; ++i) {
    const int j = level - i;
    LaurentPoly residue = half_delta() * mirror_diff(t.b, i, j);
    residue -= coeff_at(t.d, i, j) * BigRational(i - j);
    residue -= tg * coeff_at(t.d, i - 1, j);
    if (i < level) {
      set_coeff(t.d, i, j - 1, inv_2g * residue);
    } else if (residue.is_zero()) {
      ++t.surplus_checks;
    } else {
      throw Inconsistent("D recursion failed to close at " + level_tag(level, i),
                         level, i);
    }
  }
}

void solve_b_level(CoeffTables& t, int level) {
  // Second-order instances at i + j = level, with all of B above level - 1
  // and D at levels >= level - 1 already known:
  //   4g^2 (i+2)(i+1) B_{i+2,j} + 4g^2 (i+1)(j+1) B_{i+1,j+1}
  //   + 2g (2j-2i-1-N)(i+1) B_{i+1,j} + 2g (j+1)(j+1-i-N) B_{i,j+1}
  //   + 4g^2 (i+1) B_{i+1,j-1} + [4g^2 i + (j-i)(j-i-N)] B_{i,j}
  //   + 2g (j-i+1-N) B_{i-1,j} + 2g (j-i-1-N) B_{i,j-1}
  //   = Delta [ (i-j) D_{i,j} - g (j+1) D_{i,j+1} - g (i+1) D_{i+1,j} ].
  // Sweeping i = 0..level-1 isolates B_{i, level-1-i}; its pivot
  // 2g (level - 2i - 1 - N) never vanishes for level <= N.  The instance
  // i = level is redundant and must close exactly.
  const int n = t.bias;
  const LaurentPoly tg = two_g();
  const LaurentPoly four_g2 = lp_g(2) * BigRational(4);
  const LaurentPoly delta = lp_delta();
  const LaurentPoly g1 = lp_g();
  for (int i = 0; i <= level; ++i) {
    const int j = level - i;
    LaurentPoly rhs = coeff_at(t.d, i, j) * BigRational(i - j);
    rhs -= g1 * coeff_at(t.d, i, j + 1) * BigRational(j + 1);
    rhs -= g1 * coeff_at(t.d, i + 1, j) * BigRational(i + 1);
    rhs = delta * rhs;

    LaurentPoly known =
        four_g2 * coeff_at(t.b, i + 2, j) * BigRational((i + 2) * (i + 1));
    known += four_g2 * coeff_at(t.b, i + 1, j + 1) * BigRational((i + 1) * (j + 1));
    known += tg * coeff_at(t.b, i + 1, j) * BigRational((2 * j - 2 * i - 1 - n) * (i + 1));
    known += tg * coeff_at(t.b, i, j + 1) * BigRational((j + 1) * (j + 1 - i - n));
    known += four_g2 * coeff_at(t.b, i + 1, j - 1) * BigRational(i + 1);
    known += (lp_g(2) * BigRational(4 * i) + lp_int((j - i) * (j - i - n))) *
             coeff_at(t.b, i, j);
    known += tg * coeff_at(t.b, i - 1, j) * BigRational(j - i + 1 - n);

    const LaurentPoly residue = rhs - known;  // = 2g (j-i-1-N) B_{i,j-1}
    if (i < level) {
      const LaurentPoly inv_pivot =
          LaurentPoly::term(0, -1, BigRational(1) / BigRational(2 * (j - i - 1 - n)));
      set_coeff(t.b, i, j - 1, inv_pivot * residue);
    } else if (residue.is_zero()) {
      ++t.surplus_checks;
    } else {
      throw Inconsistent("B recursion failed to close at " + level_tag(level, i),
                         level, i);
    }
  }
}

void derive_c(CoeffTables& t) {
  t.c.clear();
  for (const auto& [ij, bij] : t.b) {
    const auto [i, j] = ij;
    set_coeff(t.c, j, i, (i + j) % 2 ? -bij : bij);
  }
}

void derive_a(CoeffTables& t) {
  const int n = t.bias;
  const LaurentPoly tg = two_g();
  t.a.clear();
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) {
      LaurentPoly bracket = coeff_at(t.b, i, j) * BigRational(j - i - n);
      bracket += tg * coeff_at(t.b, i + 1, j) * BigRational(i + 1);
      LaurentPoly a = coeff_at(t.d, i, j);
      if (!bracket.is_zero()) {
        try {
          a += (bracket * BigRational(2)).div_exact_by_delta();
        } catch (const NotDivisible&) {
          throw NotDivisible("A derivation not divisible by Delta at " +
                             level_tag(i + j, i));
        }
      }
      set_coeff(t.a, i, j, std::move(a));
    }
  }
  // Independent cross-check: the first-row recursion
  //   (j-i) A_{i,j} + 2g A_{i-1,j} + 2g A_{i,j-1}
  //   + 2g (j+1) A_{i,j+1} + 2g (i+1) A_{i+1,j}
  //     = (Delta/2)(B_{i,j} - (-1)^{i+j} B_{j,i})
  // must hold for every instance once A is filled in.
  for (int i = 0; i <= n + 1; ++i) {
    for (int j = 0; i + j <= n + 1; ++j) {
      LaurentPoly lhs = coeff_at(t.a, i, j) * BigRational(j - i);
      lhs += tg * coeff_at(t.a, i - 1, j);
      lhs += tg * coeff_at(t.a, i, j - 1);
      lhs += tg * coeff_at(t.a, i, j + 1) * BigRational(j + 1);
      lhs += tg * coeff_at(t.a, i + 1, j) * BigRational(i + 1);
      const LaurentPoly rhs = half_delta() * mirror_diff(t.b, i, j);
      if (!(lhs - rhs).is_zero())
        throw Inconsistent("A table failed its recursion cross-check at " +
                               level_tag(i + j, i),
                           i + j, i);
    }
  }
}

CoeffTables build_tables(int bias) {
  if (bias < 0) throw std::invalid_argument("build_tables: bias must be >= 0");
  CoeffTables t;
  t.bias = bias;
  set_coeff(t.b, 0, bias, LaurentPoly::one());
  for (int level = bias; level >= 1; --level) {
    solve_d_level(t, level);
    solve_b_level(t, level);
  }
  derive_c(t);
  derive_a(t);
  return t;
}

bool Report::all_pass() const {
  return std::all_of(items.begin(), items.end(),
                     [](const CheckItem& c) { return c.pass; });
}

namespace {

void push_check(Report& rep, std::string name, bool pass, std::string detail) {
  rep.items.push_back({std::move(name), pass, pass ? "" : std::move(detail)});
}

std::string describe_residue(const NormalOp& x) {
  if (x.is_zero()) return "";
  std::ostringstream os;
  const auto& [key, c] = *x.terms().begin();
  os << x.terms().size() << " nonzero monomial(s), first (ad^" << key.dag_pow
     << " am^" << key.low_pow << ") with coefficient " << c.latex();
  return os.str();
}

// Compares one level of a table against a closed-form entry formula.
void check_level(Report& rep, const CoeffMap& m, int level, std::string name,
                 const std::function<LaurentPoly(int)>& formula) {
  for (int i = 0; i <= level; ++i) {
    const LaurentPoly want = formula(i);
    if (!(coeff_at(m, i, level - i) == want)) {
      std::ostringstream os;
      os << "mismatch at (i,j) = (" << i << "," << level - i << "): stored "
         << coeff_at(m, i, level - i).latex() << ", closed form " << want.latex();
      push_check(rep, std::move(name), false, os.str());
      return;
    }
  }
  push_check(rep, std::move(name), true, "");
}

BigRational sign(int i) { return i % 2 ? BigRational(-1) : BigRational(1); }

}  // namespace

Report verify_defining_equations(const CoeffTables& t) {
  const OpMatrix2 q = assemble_q(t);
  const OpMatrix2 r =
      q * hamiltonian_op(t.bias) - hamiltonian_op_swapped(t.bias) * q;
  static const char* kNames[2][2] = {
      {"intertwine block (0,0)", "intertwine block (0,1)"},
      {"intertwine block (1,0)", "intertwine block (1,1)"}};
  Report rep;
  for (int row = 0; row < 2; ++row)
    for (int col = 0; col < 2; ++col)
      push_check(rep, kNames[row][col], r.e[row][col].is_zero(),
                 describe_residue(r.e[row][col]));
  return rep;
}

Report verify_closed_forms(const CoeffTables& t) {
  const int n = t.bias;
  Report rep;

  check_level(rep, t.b, n, "level N: B is the bare top word", [&](int i) {
    return i == 0 ? LaurentPoly::one() : LaurentPoly::zero();
  });
  check_level(rep, t.a, n, "level N: A vanishes",
              [](int) { return LaurentPoly::zero(); });
  check_level(rep, t.d, n, "level N: D vanishes",
              [](int) { return LaurentPoly::zero(); });

  if (n >= 1) {
    const int lv = n - 1;
    check_level(rep, t.b, lv, "level N-1: B vanishes",
                [](int) { return LaurentPoly::zero(); });
    check_level(rep, t.d, lv, "level N-1: D alternates Delta/4g", [&](int i) {
      return LaurentPoly::term(1, -1, sign(i) / 4);
    });
  }
  if (n >= 2) {
    const int lv = n - 2;
    check_level(rep, t.b, lv, "level N-2: B closed form", [&](int i) {
      return LaurentPoly::term(2, -2, sign(i) * BigRational(n - i - 1) / 16);
    });
    check_level(rep, t.d, lv, "level N-2: D closed form", [&](int i) {
      return LaurentPoly::term(1, -2,
                               sign(i) * BigRational((n - i - 1) * (i + 1)) / 8);
    });
  }
  if (n >= 3) {
    const int lv = n - 3;
    check_level(rep, t.b, lv, "level N-3: B vanishes",
                [](int) { return LaurentPoly::zero(); });
    check_level(rep, t.d, lv, "level N-3: D closed form", [&](int i) {
      const BigRational outer = sign(i) * BigRational((n - i - 2) * (i + 1));
      return LaurentPoly::term(1, -3,
                               outer * BigRational((n - i - 1) * (i + 2)) / 32) +
             LaurentPoly::term(3, -3, outer / 64);
    });
  }
  if (n >= 4) {
    const int lv = n - 4;
    check_level(rep, t.b, lv, "level N-4: B closed form", [&](int i) {
      const BigRational pair = BigRational((n - i - 3) * (n - i - 2) * (i + 1));
      LaurentPoly p = LaurentPoly::term(
          2, -4, pair * BigRational((n - i - 1) * (i + 3)) / 384);
      p += LaurentPoly::term(4, -4, pair / 512);
      p += LaurentPoly::term(2, -2, -pair / 32);
      return p * sign(i);
    });
    check_level(rep, t.d, lv, "level N-4: D closed form", [&](int i) {
      const BigRational outer =
          sign(i) * BigRational((n - i - 3) * (i + 2) * (n - i - 2) * (i + 1));
      return LaurentPoly::term(1, -4,
                               outer * BigRational((n - i - 1) * (i + 3)) / 192) +
             LaurentPoly::term(3, -4, outer / 256);
    });
  }
  return rep;
}

Report check_invariants(const CoeffTables& t) {
  const int n = t.bias;
  Report rep;

  bool in_range = n >= 0;
  std::string range_detail;
  for (const auto* m : {&t.a, &t.b, &t.c, &t.d}) {
    for (const auto& [ij, poly] : *m) {
      const auto [i, j] = ij;
      if (i < 0 || j < 0 || i + j > n || poly.is_zero()) {
        in_range = false;
        range_detail = "offending entry (" + std::to_string(i) + "," +
                       std::to_string(j) + ")";
      }
    }
  }
  push_check(rep, "indices within 0 <= i+j <= N, entries nonzero", in_range,
             range_detail);

  bool top_ok = coeff_at(t.b, 0, n) == LaurentPoly::one();
  for (int i = 1; i <= n; ++i)
    top_ok = top_ok && coeff_at(t.b, i, n - i).is_zero();
  for (int i = 0; i <= n; ++i)
    top_ok = top_ok && coeff_at(t.a, i, n - i).is_zero() &&
             coeff_at(t.d, i, n - i).is_zero();
  push_check(rep, "level N rows: B = top word, A = D = 0", top_ok, "");

  bool c_ok = true;
  for (int i = 0; i <= n && c_ok; ++i)
    for (int j = 0; i + j <= n && c_ok; ++j)
      c_ok = coeff_at(t.c, i, j) ==
             ((i + j) % 2 ? -coeff_at(t.b, j, i) : coeff_at(t.b, j, i));
  push_check(rep, "C_{i,j} = (-1)^{i+j} B_{j,i}", c_ok, "");

  bool mirror_ok = true;
  for (int i = 0; i <= n && mirror_ok; ++i)
    for (int j = 0; i + j <= n && mirror_ok; ++j) {
      const BigRational s = (i + j) % 2 ? BigRational(-1) : BigRational(1);
      mirror_ok = coeff_at(t.a, i, j) == coeff_at(t.a, j, i) * s &&
                  coeff_at(t.d, i, j) == coeff_at(t.d, j, i) * s;
    }
  push_check(rep, "A and D are mirror (anti)symmetric", mirror_ok, "");

  return rep;
}

}  // namespace aqrm
