#pragma once

#include <string>
#include <vector>

namespace frameq {

struct Check {
  std::string name;
  double value;
  double threshold;
  /// true: pass when value < threshold; false: pass when value > threshold.
  bool upper_bound = true;

  bool passed() const { return upper_bound ? value < threshold : value > threshold; }
};

struct DimensionReport {
  int dim;
  std::vector<Check> checks;
  std::vector<std::string> skipped;

  bool passed() const;
  const Check* find(const std::string& name) const;
};

/// Runs the full invariant battery for one odd dimension. `tol` replaces the
/// default 1e-10 bound; looser fixed bounds (1e-9 totals, 1e-6 theta form)
/// stay as they are. Random functions are drawn from a generator seeded by d.
DimensionReport verify_dimension(int dim, double tol = 1e-10);

}  // namespace frameq
