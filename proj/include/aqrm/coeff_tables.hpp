#pragma once

#include <map>
#include <utility>

#include "aqrm/normal_op.hpp"

namespace aqrm {

// One coefficient table: (i, j) -> coefficient of (ad)^i (am)^j.  Absent
// entries are zero; stored entries are nonzero.
using CoeffMap = std::map<std::pair<int, int>, LaurentPoly>;

// Coefficient of (i, j) in a table, zero if absent.
const LaurentPoly& coeff_at(const CoeffMap& m, int i, int j);

// Stores a value, erasing the slot when it is zero.
void set_coeff(CoeffMap& m, int i, int j, LaurentPoly value);

// The table viewed as a normally ordered operator.
NormalOp to_normal_op(const CoeffMap& m);

// The four block coefficients of the conserved operator at integer bias N.
// Indices satisfy 0 <= i + j <= N.  Invariants established by the builder:
//   - level N of B is the single entry B_{0,N} = 1;
//   - A and D are empty at level N;
//   - C_{i,j} = (-1)^{i+j} B_{j,i};
//   - A_{i,j} = (-1)^{i+j} A_{j,i} and the same for D.
struct CoeffTables {
  int bias = 0;  // N
  CoeffMap a, b, c, d;
  // Number of redundant recursion instances that were checked to close
  // exactly while building (two per level).
  int surplus_checks = 0;
};

// Assembles the 2x2 block operator [[A, B], [C, D]].
OpMatrix2 assemble_q(const CoeffTables& t);

// The conserved-operator data: tables plus their assembled block matrix.
struct SymmetryOperator {
  CoeffTables tables;
  OpMatrix2 q;

  static SymmetryOperator from_tables(CoeffTables t) {
    SymmetryOperator s;
    s.q = assemble_q(t);
    s.tables = std::move(t);
    return s;
  }
};

}  // namespace aqrm
