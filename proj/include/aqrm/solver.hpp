#pragma once

#include <string>
#include <vector>

#include "aqrm/coeff_tables.hpp"

namespace aqrm {

// The rotated-frame Hamiltonian at integer bias N as a 2x2 block operator:
//   [[n_plus - g^2 + N/2, -Delta/2], [-Delta/2, n_minus - g^2 - N/2]].
OpMatrix2 hamiltonian_op(int bias);

// The partner Hamiltonian with the displaced number operators exchanged:
//   [[n_minus - g^2 + N/2, -Delta/2], [-Delta/2, n_plus - g^2 - N/2]].
// The conserved operator's block matrix Q intertwines the two:
// Q H = H~ Q, which is what fixes the tables.
OpMatrix2 hamiltonian_op_swapped(int bias);

// Builds the full coefficient tables for integer bias N >= 0 by descending
// the level recursion from i + j = N to 0.  Throws Inconsistent if a
// redundant instance fails to close exactly, NotDivisible if the A-table
// derivation hits a non-divisible polynomial; neither occurs for any valid N.
CoeffTables build_tables(int bias);

// Single recursion steps, exposed for targeted testing.  Each assumes all
// levels above `level` are already present in `t` and writes level - 1.
// Both verify one redundant instance and throw Inconsistent on failure.
void solve_d_level(CoeffTables& t, int level);
void solve_b_level(CoeffTables& t, int level);

// C_{i,j} = (-1)^{i+j} B_{j,i}.
void derive_c(CoeffTables& t);

// A_{i,j} from D and B via the diagonal difference relation
//   (Delta/2)(A_{i,j} - D_{i,j}) = (j - i - N) B_{i,j} + 2g (i+1) B_{i+1,j},
// then revalidated against the independent first-row recursion.  Throws
// NotDivisible / Inconsistent if either step fails.
void derive_a(CoeffTables& t);

// One named pass/fail check with a short failure detail.
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckItem> items;
  bool all_pass() const;
};

// Forms Q H - H~ Q symbolically and reports whether each of the four block
// entries vanishes identically.  Failures are data, not exceptions.
Report verify_defining_equations(const CoeffTables& t);

// Compares levels N .. N-4 of B and D (and the level-N emptiness of A)
// against their closed forms.
Report verify_closed_forms(const CoeffTables& t);

// Structural invariants of the tables: index ranges, the level-N rows, the
// C/B relation, and the mirror antisymmetry of A and D.
Report check_invariants(const CoeffTables& t);

}  // namespace aqrm
