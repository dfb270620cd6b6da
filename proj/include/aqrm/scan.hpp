#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "aqrm/fock.hpp"

namespace aqrm {

enum class ScanParam { g, delta };
const char* scan_param_name(ScanParam p);  // "g" or "delta"

// Uniform parameter grid lo..hi inclusive with `steps` points.
struct ScanAxis {
  ScanParam param = ScanParam::g;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;
};

struct ScanConfig {
  int levels = 12;           // tracked levels, lowest first
  double gap_tol = 1e-8;     // refined gap below this counts as degenerate
  double refine_tol = 1e-12; // parameter resolution of the minimizer
  double bias_value = 0.0;   // real bias eps in the Hamiltonian
  // When true (requires tables), eigenstates are labeled and degeneracies
  // must carry opposite labels to classify as true crossings; when false the
  // classification is by gap alone.
  bool with_parity = true;
  ParityOptions parity;
};

struct CrossingRecord {
  ScanParam param;
  double value = 0.0;   // refined parameter location
  int level = 0;        // lower level of the pair (level, level + 1)
  double gap = 0.0;     // refined minimal gap
  bool is_true = false;
  ParityLabel label_low = ParityLabel::undefined;
  ParityLabel label_high = ParityLabel::undefined;
  const char* classification() const { return is_true ? "true-crossing" : "avoided"; }
};

struct SpectrumScan {
  ScanParam param = ScanParam::g;
  std::vector<double> grid;
  // energies[s][k] and labels[s][k]: level k at grid point s.
  std::vector<std::vector<double>> energies;
  std::vector<std::vector<ParityLabel>> labels;
  std::vector<CrossingRecord> crossings;
};

// Scans the spectrum along the axis, locates every local minimum of each
// adjacent-level gap, refines it to cfg.refine_tol, and classifies it.
// `tables` must be present when cfg.with_parity is set (its bias must match
// base.bias); pass nullopt for gap-only scans at arbitrary real bias.
// Preconditions: steps >= 16, lo < hi, lo > 0 when scanning g,
// cfg.levels >= 2.  Throws std::invalid_argument on violation.
SpectrumScan scan_crossings(const std::optional<CoeffTables>& tables,
                            const TruncParams& base, const ScanAxis& axis,
                            const ScanConfig& cfg);

// Golden-section minimizer on [lo, hi] to absolute x-tolerance tol;
// returns the argmin.
double golden_minimize(const std::function<double(double)>& f, double lo,
                       double hi, double tol);

// CSV "param,level,energy,parity", one row per (grid point, level).
void write_spectrum_csv(std::ostream& os, const SpectrumScan& s);

// JSON array of {"parameter", "value", "levels": [k, k+1], "gap",
// "classification"} entries.
nlohmann::json crossings_to_json(const SpectrumScan& s);

}  // namespace aqrm
