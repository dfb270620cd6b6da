#include "aqrm/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aqrm {

void TruncParams::validate() const {
  if (bias < 0) throw std::invalid_argument("TruncParams: bias must be >= 0");
  if (dim < 8) throw std::invalid_argument("TruncParams: dim must be >= 8");
  if (margin < bias + 2)
    throw std::invalid_argument("TruncParams: margin must be >= bias + 2");
  if (margin >= dim / 2)
    throw std::invalid_argument("TruncParams: margin must be < dim / 2");
  if (!(delta_val > 0.0) || !std::isfinite(delta_val))
    throw std::invalid_argument("TruncParams: delta must be positive");
  if (!(g_val > 0.0) || !std::isfinite(g_val))
    throw std::invalid_argument("TruncParams: g must be positive");
}

TruncParams make_params(int bias, int dim, double delta_val, double g_val) {
  TruncParams p;
  p.bias = bias;
  p.dim = dim;
  p.margin = bias + 6;
  p.delta_val = delta_val;
  p.g_val = g_val;
  return p;
}

Matrix lowering_matrix(int dim) {
  Matrix l = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) l(n - 1, n) = std::sqrt(double(n));
  return l;
}

Matrix realize(const NormalOp& op, int dim, double delta_val, double g_val) {
  const Matrix l = lowering_matrix(dim);
  const Matrix ad = l.transpose() + g_val * Matrix::Identity(dim, dim);
  const Matrix am = l - g_val * Matrix::Identity(dim, dim);

  const int deg = std::max(op.degree(), 0);
  std::vector<Matrix> ad_pow(deg + 1), am_pow(deg + 1);
  ad_pow[0] = am_pow[0] = Matrix::Identity(dim, dim);
  for (int k = 1; k <= deg; ++k) {
    ad_pow[k] = ad_pow[k - 1] * ad;
    am_pow[k] = am_pow[k - 1] * am;
  }

  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [key, poly] : op.terms())
    out += poly.eval(delta_val, g_val) * (ad_pow[key.dag_pow] * am_pow[key.low_pow]);
  return out;
}

Matrix realize(const NormalOp& op, const TruncParams& p) {
  p.validate();
  return realize(op, p.dim, p.delta_val, p.g_val);
}

Matrix build_h_dense(int dim, double delta, double g, double eps) {
  const Matrix l = lowering_matrix(dim);
  const Matrix x = g * (l + l.transpose());
  Matrix number = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) number(n, n) = n;
  const Matrix id = Matrix::Identity(dim, dim);

  Matrix h = Matrix::Zero(2 * dim, 2 * dim);
  h.topLeftCorner(dim, dim) = number + x + 0.5 * eps * id;
  h.bottomRightCorner(dim, dim) = number - x - 0.5 * eps * id;
  h.topRightCorner(dim, dim) = -0.5 * delta * id;
  h.bottomLeftCorner(dim, dim) = -0.5 * delta * id;
  return h;
}

Matrix build_h(const TruncParams& p) {
  p.validate();
  return build_h_dense(p.dim, p.delta_val, p.g_val, double(p.bias));
}

Matrix build_h_unrotated(int dim, double delta, double g, double eps) {
  const Matrix l = lowering_matrix(dim);
  const Matrix x = l + l.transpose();
  Matrix number = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) number(n, n) = n;

  // Qubit-major layout: index q * dim + n, sz = diag(1, -1), sx off-diagonal.
  Matrix h = Matrix::Zero(2 * dim, 2 * dim);
  h.topLeftCorner(dim, dim) = number + 0.5 * delta * Matrix::Identity(dim, dim);
  h.bottomRightCorner(dim, dim) =
      number - 0.5 * delta * Matrix::Identity(dim, dim);
  h.topRightCorner(dim, dim) =
      0.5 * eps * Matrix::Identity(dim, dim) + g * x;
  h.bottomLeftCorner(dim, dim) = h.topRightCorner(dim, dim);
  return h;
}

Matrix build_j(const CoeffTables& t, const TruncParams& p) {
  p.validate();
  Matrix parity = Matrix::Zero(p.dim, p.dim);
  for (int n = 0; n < p.dim; ++n) parity(n, n) = n % 2 ? -1.0 : 1.0;

  Matrix j = Matrix::Zero(2 * p.dim, 2 * p.dim);
  j.topLeftCorner(p.dim, p.dim) = parity * realize(to_normal_op(t.a), p);
  j.topRightCorner(p.dim, p.dim) = parity * realize(to_normal_op(t.b), p);
  j.bottomLeftCorner(p.dim, p.dim) = parity * realize(to_normal_op(t.c), p);
  j.bottomRightCorner(p.dim, p.dim) = parity * realize(to_normal_op(t.d), p);
  return j;
}

Matrix interior_block(const Matrix& m, int dim, int margin) {
  const int keep = dim - margin;
  return m.topLeftCorner(keep, keep);
}

Matrix interior(const Matrix& m, int dim, int margin) {
  const int keep = dim - margin;
  Matrix r(2 * keep, 2 * keep);
  r.topLeftCorner(keep, keep) = m.block(0, 0, keep, keep);
  r.topRightCorner(keep, keep) = m.block(0, dim, keep, keep);
  r.bottomLeftCorner(keep, keep) = m.block(dim, 0, keep, keep);
  r.bottomRightCorner(keep, keep) = m.block(dim, dim, keep, keep);
  return r;
}

CommutatorCheck interior_commutator(const Matrix& j, const Matrix& h, int dim,
                                    int margin) {
  CommutatorCheck c;
  c.commutator_norm = interior(j * h - h * j, dim, margin).norm();
  c.j_norm = interior(j, dim, margin).norm();
  c.h_norm = interior(h, dim, margin).norm();
  return c;
}

J2Fit fit_j_squared_poly(const Matrix& j, const Matrix& h, int order,
                         int pairs, double cond_bound) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  return fit_j_squared_from_eigen(j, es.eigenvalues(), es.eigenvectors(),
                                  order, pairs, cond_bound);
}

J2Fit fit_j_squared_from_eigen(const Matrix& j, const Vector& all_evals,
                               const Matrix& all_evecs, int order, int pairs,
                               double cond_bound) {
  if (order < 0) throw std::invalid_argument("fit: order must be >= 0");
  if (pairs <= 0) pairs = 4 * (order + 1);
  if (pairs < order + 1)
    throw std::invalid_argument("fit: need at least order + 1 eigenpairs");
  if (pairs > all_evals.size())
    throw std::invalid_argument("fit: more eigenpairs than matrix dimension");

  const Vector evals = all_evals.head(pairs);
  const Matrix evecs = all_evecs.leftCols(pairs);

  // y_k = <v_k| J^2 |v_k>, matching sum_n x_n E_k^n for converged states.
  const Matrix jv = j * evecs;
  Vector y(pairs);
  for (int k = 0; k < pairs; ++k) y(k) = jv.col(k).squaredNorm();

  Matrix vand(pairs, order + 1);
  for (int k = 0; k < pairs; ++k) {
    double p = 1.0;
    for (int n = 0; n <= order; ++n) {
      vand(k, n) = p;
      p *= evals(k);
    }
  }

  Eigen::BDCSVD<Matrix> svd(vand, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sing = svd.singularValues();
  J2Fit fit;
  fit.cond = sing(sing.size() - 1) > 0
                 ? sing(0) / sing(sing.size() - 1)
                 : std::numeric_limits<double>::infinity();
  if (!(fit.cond < cond_bound))
    throw IllConditioned("fit: Vandermonde condition number " +
                         std::to_string(fit.cond) + " exceeds bound");
  fit.coeffs = svd.solve(y);
  fit.residuals = vand * fit.coeffs - y;
  fit.max_residual = fit.residuals.cwiseAbs().maxCoeff();
  return fit;
}

double expected_subleading_coeff(int bias, double delta, double g) {
  return bias * (g * g + 0.5 + delta * delta / (16.0 * g * g));
}

const char* parity_label_text(ParityLabel label) {
  switch (label) {
    case ParityLabel::plus: return "1";
    case ParityLabel::minus: return "-1";
    default: return "undefined";
  }
}

std::vector<ParityLabel> parity_labels_from_eigen(
    const Matrix& j, const Vector& evals, const Matrix& evecs,
    const std::vector<double>& xcoeffs, const ParityOptions& opt) {
  const int count = int(evals.size());
  std::vector<ParityLabel> labels(count, ParityLabel::undefined);

  auto poly_at = [&](double e) {
    double s = 0.0;
    for (auto it = xcoeffs.rbegin(); it != xcoeffs.rend(); ++it) s = s * e + *it;
    return s;
  };

  int start = 0;
  while (start < count) {
    int stop = start + 1;
    while (stop < count && evals(stop) - evals(stop - 1) < opt.cluster_tol)
      ++stop;
    const int width = stop - start;

    // J restricted to the cluster subspace, symmetrized.
    const Matrix v = evecs.middleCols(start, width);
    Matrix s = v.transpose() * (j * v);
    s = 0.5 * (s + s.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> es(s);
    const Vector lambda = es.eigenvalues();

    for (int m = 0; m < width; ++m) {
      const double norm2 = poly_at(evals(start + m));
      if (std::abs(norm2) < opt.guard || norm2 < 0) continue;
      const double scaled = std::abs(lambda(m)) / std::sqrt(norm2);
      if (std::abs(scaled - 1.0) > opt.label_tol) continue;
      labels[start + m] =
          lambda(m) > 0 ? ParityLabel::plus : ParityLabel::minus;
    }
    start = stop;
  }
  return labels;
}

ParityResult parity_labels(const Matrix& j, const Matrix& h,
                           const std::vector<double>& xcoeffs,
                           const ParityOptions& opt) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  ParityResult r;
  r.evals = es.eigenvalues();
  r.labels =
      parity_labels_from_eigen(j, r.evals, es.eigenvectors(), xcoeffs, opt);
  return r;
}

}  // namespace aqrm
