#include "aqrm/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace aqrm {

const char* scan_param_name(ScanParam p) {
  return p == ScanParam::g ? "g" : "delta";
}

double golden_minimize(const std::function<double(double)>& f, double lo,
                       double hi, double tol) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

namespace {

struct PointContext {
  const std::optional<CoeffTables>& tables;
  const TruncParams& base;
  ScanParam param;
  const ScanConfig& cfg;

  void couplings(double t, double& delta, double& g) const {
    delta = base.delta_val;
    g = base.g_val;
    if (param == ScanParam::g)
      g = t;
    else
      delta = t;
  }

  Matrix hamiltonian(double t) const {
    double delta, g;
    couplings(t, delta, g);
    return build_h_dense(base.dim, delta, g, cfg.bias_value);
  }

  // Gap between levels k and k+1 at parameter value t.
  double gap(int k, double t) const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian(t),
                                             Eigen::EigenvaluesOnly);
    return es.eigenvalues()(k + 1) - es.eigenvalues()(k);
  }

  // Eigenvalues plus parity labels for the lowest `count` states.
  std::pair<Vector, std::vector<ParityLabel>> labeled(double t,
                                                      int count) const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian(t));
    const Vector evals = es.eigenvalues().head(count);
    if (!cfg.with_parity)
      return {evals,
              std::vector<ParityLabel>(count, ParityLabel::undefined)};

    double delta, g;
    couplings(t, delta, g);
    TruncParams p = base;
    p.delta_val = delta;
    p.g_val = g;
    const Matrix j = build_j(*tables, p);
    const J2Fit fit = fit_j_squared_from_eigen(
        j, es.eigenvalues(), es.eigenvectors(), tables->bias);
    std::vector<double> x(fit.coeffs.data(),
                          fit.coeffs.data() + fit.coeffs.size());
    return {evals, parity_labels_from_eigen(j, evals,
                                            es.eigenvectors().leftCols(count),
                                            x, cfg.parity)};
  }
};

void validate_scan(const std::optional<CoeffTables>& tables,
                   const TruncParams& base, const ScanAxis& axis,
                   const ScanConfig& cfg) {
  if (axis.steps < 16)
    throw std::invalid_argument("scan: steps must be >= 16");
  if (!(axis.lo < axis.hi) || !std::isfinite(axis.lo) || !std::isfinite(axis.hi))
    throw std::invalid_argument("scan: need finite lo < hi");
  if (axis.param == ScanParam::g && !(axis.lo > 0))
    throw std::invalid_argument("scan: g range must stay positive");
  if (cfg.levels < 2)
    throw std::invalid_argument("scan: need at least two tracked levels");
  if (base.dim < 8 || base.margin < base.bias + 2 || base.margin >= base.dim / 2)
    throw std::invalid_argument("scan: invalid truncation geometry");
  if (cfg.levels + 2 > 2 * base.dim)
    throw std::invalid_argument("scan: more levels than the space holds");
  const double fixed =
      axis.param == ScanParam::g ? base.delta_val : base.g_val;
  if (!(fixed > 0) || !std::isfinite(fixed))
    throw std::invalid_argument("scan: fixed coupling must be positive");
  if (cfg.with_parity) {
    if (!tables)
      throw std::invalid_argument("scan: parity classification needs tables");
    if (tables->bias != base.bias)
      throw std::invalid_argument("scan: tables bias differs from params");
    if (cfg.bias_value != double(base.bias))
      throw std::invalid_argument(
          "scan: parity classification needs integer bias matching tables");
  }
}

}  // namespace

SpectrumScan scan_crossings(const std::optional<CoeffTables>& tables,
                            const TruncParams& base, const ScanAxis& axis,
                            const ScanConfig& cfg) {
  validate_scan(tables, base, axis, cfg);
  const PointContext ctx{tables, base, axis.param, cfg};

  SpectrumScan out;
  out.param = axis.param;
  out.grid.resize(axis.steps);
  for (int s = 0; s < axis.steps; ++s)
    out.grid[s] = axis.lo + (axis.hi - axis.lo) * s / double(axis.steps - 1);

  // Labeling looks two levels past the tracked window so a cluster at the
  // window edge is still split correctly.
  const int label_count = std::min(cfg.levels + 2, 2 * base.dim);
  out.energies.reserve(axis.steps);
  out.labels.reserve(axis.steps);
  for (double t : out.grid) {
    auto [evals, labels] = ctx.labeled(t, label_count);
    out.energies.emplace_back(evals.data(), evals.data() + cfg.levels);
    labels.resize(cfg.levels);
    out.labels.push_back(std::move(labels));
  }

  for (int k = 0; k + 1 < cfg.levels; ++k) {
    std::vector<double> gaps(axis.steps);
    for (int s = 0; s < axis.steps; ++s)
      gaps[s] = out.energies[s][k + 1] - out.energies[s][k];

    for (int s = 1; s + 1 < axis.steps; ++s) {
      if (!(gaps[s] < gaps[s - 1] && gaps[s] <= gaps[s + 1])) continue;

      const double refined = golden_minimize(
          [&](double t) { return ctx.gap(k, t); }, out.grid[s - 1],
          out.grid[s + 1], cfg.refine_tol);
      CrossingRecord rec;
      rec.param = axis.param;
      rec.value = refined;
      rec.level = k;
      rec.gap = ctx.gap(k, refined);
      if (rec.gap < cfg.gap_tol) {
        if (cfg.with_parity) {
          const auto [evals, labels] = ctx.labeled(refined, label_count);
          rec.label_low = labels[k];
          rec.label_high = labels[k + 1];
          rec.is_true = rec.label_low != ParityLabel::undefined &&
                        rec.label_high != ParityLabel::undefined &&
                        rec.label_low != rec.label_high;
        } else {
          rec.is_true = true;
        }
      }

      // A flat valley can surface twice from neighboring brackets.
      const auto dup =
          std::find_if(out.crossings.begin(), out.crossings.end(),
                       [&](const CrossingRecord& r) {
                         return r.level == rec.level &&
                                std::abs(r.value - rec.value) <
                                    64 * cfg.refine_tol +
                                        1e-9 * std::abs(rec.value);
                       });
      if (dup != out.crossings.end()) {
        if (rec.gap < dup->gap) *dup = rec;
      } else {
        out.crossings.push_back(rec);
      }
    }
  }

  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const CrossingRecord& a, const CrossingRecord& b) {
              if (a.value != b.value) return a.value < b.value;
              return a.level < b.level;
            });
  return out;
}

void write_spectrum_csv(std::ostream& os, const SpectrumScan& s) {
  os << "param,level,energy,parity\n";
  char buf[128];
  for (size_t row = 0; row < s.grid.size(); ++row) {
    for (size_t k = 0; k < s.energies[row].size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g,%zu,%.17g,%s", s.grid[row], k,
                    s.energies[row][k], parity_label_text(s.labels[row][k]));
      os << buf << '\n';
    }
  }
}

nlohmann::json crossings_to_json(const SpectrumScan& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const CrossingRecord& rec : s.crossings)
    arr.push_back({{"parameter", scan_param_name(rec.param)},
                   {"value", rec.value},
                   {"levels", {rec.level, rec.level + 1}},
                   {"gap", rec.gap},
                   {"classification", rec.classification()}});
  return arr;
}

}  // namespace aqrm
