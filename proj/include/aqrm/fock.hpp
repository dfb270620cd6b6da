#pragma once

#include <Eigen/Dense>
#include <vector>

#include "aqrm/coeff_tables.hpp"
#include "aqrm/errors.hpp"

namespace aqrm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Truncated Fock-space realization parameters.  The two-block matrices below
// are (2 dim) x (2 dim); `margin` rows at the top of each block are treated
// as truncation-contaminated and excluded by the interior projection.
struct TruncParams {
  int bias = 0;      // integer bias N of the tables being realized
  int dim = 120;     // Fock levels per block
  int margin = 8;    // interior projection margin
  double delta_val = 0.0;
  double g_val = 0.0;

  // dim >= 8, bias >= 0, margin >= bias + 2, margin < dim / 2,
  // delta_val > 0 and finite, g_val > 0 and finite (the symbolic
  // coefficients carry poles in g).  Throws std::invalid_argument.
  void validate() const;
};

// Parameters with the conventional margin N + 6.
TruncParams make_params(int bias, int dim, double delta_val, double g_val);

// Truncated lowering operator: L[n-1, n] = sqrt(n).
Matrix lowering_matrix(int dim);

// Realizes a normally ordered operator with ad -> L^T + g, am -> L - g,
// coefficients evaluated at (delta_val, g_val).  No parameter validation:
// physics limits such as g = 0 are legitimate for polynomial operators.
Matrix realize(const NormalOp& op, int dim, double delta_val, double g_val);
Matrix realize(const NormalOp& op, const TruncParams& p);

// Rotated-frame Hamiltonian on the doubled space, with an arbitrary real
// bias eps (half-integer scans need non-integer values):
//   [[n + g(L + L^T) + eps/2, -delta/2], [-delta/2, n - g(L + L^T) - eps/2]].
Matrix build_h_dense(int dim, double delta, double g, double eps);
Matrix build_h(const TruncParams& p);  // validates, eps = bias

// The same physics assembled in the unrotated qubit basis,
//   delta/2 sz + eps/2 sx + n + g (L + L^T) sx,
// with qubit-major (kron) index order.  Shares no code path or basis layout
// with build_h_dense; used as an independent cross-check of spectra.
Matrix build_h_unrotated(int dim, double delta, double g, double eps);

// The conserved operator: parity phase diag((-1)^n) per block times the
// realized block matrix [[A, B], [C, D]].
Matrix build_j(const CoeffTables& t, const TruncParams& p);

// Keeps rows/columns with Fock level < dim - margin in both blocks.
Matrix interior(const Matrix& m, int dim, int margin);
// Same for a single-block dim x dim matrix.
Matrix interior_block(const Matrix& m, int dim, int margin);

// Frobenius data for the interior-projected commutator [J, H].
struct CommutatorCheck {
  double commutator_norm = 0.0;
  double j_norm = 0.0;  // interior-projected operand norms
  double h_norm = 0.0;
  double relative() const {
    const double scale = j_norm * h_norm;
    return scale > 0 ? commutator_norm / scale : commutator_norm;
  }
};
CommutatorCheck interior_commutator(const Matrix& j, const Matrix& h, int dim,
                                    int margin);

// Least-squares fit of J^2 = sum_n x_n H^n on the lowest eigenpairs of H.
struct J2Fit {
  Vector coeffs;           // x_0 .. x_order
  double cond = 0.0;       // condition number of the Vandermonde system
  Vector residuals;        // per-pair fit residuals
  double max_residual = 0.0;
};
// order defaults to the tables' bias N; pairs defaults to 4 (order + 1).
// Throws IllConditioned when the Vandermonde condition number exceeds
// cond_bound (raise dim or spread the sampled spectrum).
J2Fit fit_j_squared_poly(const Matrix& j, const Matrix& h, int order,
                         int pairs = 0, double cond_bound = 1e12);

// Same fit on an eigendecomposition that is already at hand (ascending
// eigenvalues with matching eigenvector columns).
J2Fit fit_j_squared_from_eigen(const Matrix& j, const Vector& evals,
                               const Matrix& evecs, int order, int pairs = 0,
                               double cond_bound = 1e12);

// The exact leading fit coefficients: x_N = 1 and
// x_{N-1} = N (g^2 + 1/2 + Delta^2 / (16 g^2)).
double expected_subleading_coeff(int bias, double delta, double g);

enum class ParityLabel { plus, minus, undefined };
const char* parity_label_text(ParityLabel label);  // "1", "-1", "undefined"

struct ParityOptions {
  double cluster_tol = 1e-7;  // eigenvalue clustering width
  double guard = 1e-8;        // |sum_n x_n E^n| below this -> undefined
  double label_tol = 1e-6;    // allowed deviation of |lambda| / sqrt(s) from 1
};

// Labels each eigenstate by the sign of the conserved operator restricted to
// its (near-)degenerate cluster, normalized by sqrt(sum_n x_n E^n).  States
// whose normalization guard or magnitude check fails come back undefined.
std::vector<ParityLabel> parity_labels_from_eigen(
    const Matrix& j, const Vector& evals, const Matrix& evecs,
    const std::vector<double>& xcoeffs, const ParityOptions& opt = {});

struct ParityResult {
  Vector evals;
  std::vector<ParityLabel> labels;
};
// Diagonalizes H and labels every eigenstate.
ParityResult parity_labels(const Matrix& j, const Matrix& h,
                           const std::vector<double>& xcoeffs,
                           const ParityOptions& opt = {});

}  // namespace aqrm
