#pragma once

#include <optional>

#include "frameq/quantize.hpp"

namespace frameq {

/// Hermitian, unit-trace, positive-semidefinite operator. When built from a
/// phase-space function the generating function is kept as `source()`.
class DensityOperator {
 public:
  /// Validates the density-operator invariants on a raw matrix (no source).
  static DensityOperator from_operator(Operator op, double tol = kDefaultTol);

  const Operator& op() const noexcept { return op_; }
  const HilbertSpace& space() const noexcept { return op_.space; }
  const std::optional<PhaseSpaceFunction>& source() const noexcept { return source_; }
  bool has_source() const noexcept { return source_.has_value(); }
  /// Throws ErrorKind::missing_source when no generating function is attached.
  const PhaseSpaceFunction& require_source(const char* what) const;

  /// Ascending spectrum, with values in (-tol, 0) clamped to 0.
  Eigen::VectorXd spectrum(double tol = kDefaultTol) const;

 private:
  DensityOperator(Operator op, std::optional<PhaseSpaceFunction> source)
      : op_(std::move(op)), source_(std::move(source)) {}

  friend DensityOperator density_from_function(const CoherentFrame&, const PhaseSpaceFunction&, double);

  Operator op_;
  std::optional<PhaseSpaceFunction> source_;
};

/// Checks that f is real with entries in [0, d] and total d. The distinct
/// failure modes map to negative_entry, entry_above_bound, wrong_total and
/// complex_values.
void validate_state_function(const PhaseSpaceFunction& f, double total_tol = 1e-9);

/// rho_f = (1/d) sum f(n,k) |n;k><n;k|.
DensityOperator density_from_function(const CoherentFrame& frame, const PhaseSpaceFunction& f,
                                      double tol = kDefaultTol);

/// tr rho^2.
double purity(const DensityOperator& rho);
/// (1/d^2) sum f(n,k) f(m,l) |<n;k|m;l>|^2, evaluated from the source function.
double purity_from_source(const CoherentFrame& frame, const DensityOperator& rho);

/// (1/d) sum f(n,k) <n;k|A|n;k>.
Complex expectation(const CoherentFrame& frame, const DensityOperator& rho, const Operator& a);
/// tr(A rho), the matrix route.
Complex trace_expectation(const DensityOperator& rho, const Operator& a);

struct CovariantImage {
  DensityOperator state;        ///< rho_g, built from the reindexed function.
  PhaseSpaceFunction function;  ///< g.
  double residual;              ///< || transformed rho_f - rho_g ||_F.
};

/// F rho_f F^dag = rho_g with g(n,k) = f(-k, n).
CovariantImage fourier_transform_density(const CoherentFrame& frame, const DensityOperator& rho,
                                         double tol = kDefaultTol);
/// D(m,l) rho_f D^dag(m,l) = rho_g with g(n,k) = f(n-m, k-l).
CovariantImage displace_density(const CoherentFrame& frame, const DensityOperator& rho, long long m,
                                long long l, double tol = kDefaultTol);
/// rho_f^T = rho_g with g(n,k) = f(n, -k).
CovariantImage transpose_density(const CoherentFrame& frame, const DensityOperator& rho,
                                 double tol = kDefaultTol);
/// Pi rho_f Pi = rho_g with g(n,k) = f(-n, -k).
CovariantImage parity_density(const CoherentFrame& frame, const DensityOperator& rho,
                              double tol = kDefaultTol);

/// rho_h with h = (1-lambda) f + lambda g.
DensityOperator convex_combine(const CoherentFrame& frame, double lambda, const DensityOperator& rho_f,
                               const DensityOperator& rho_g);

struct WignerGrid {
  HilbertSpace space;
  /// Entry (n+s, k+s) holds W(n,k).
  RMatrix values;
  /// Largest |Im| discarded when the grid was made real.
  double max_imag = 0.0;

  double operator()(long long n, long long k) const { return values(space.slot(n), space.slot(k)); }
  double total() const { return values.sum(); }
  /// sum_k W(n,k), indexed by slot of n.
  Eigen::VectorXd position_marginal() const { return values.rowwise().sum(); }
};

/// W(n,k) = (1/d) sum_m e^{-4 pi i k m/d} <n+m|rho|n-m>.
WignerGrid wigner(const Operator& rho);
inline WignerGrid wigner(const DensityOperator& rho) { return wigner(rho.op()); }

/// W(m,l) = C sum f(n,k) sum_{alpha,beta} (-1)^{alpha beta}
///   e^{-2pi/d (m-n + alpha d/2)^2} e^{-2pi/d (l-k + beta d/2)^2},
/// with alpha, beta in [-window, window] and C fixed by sum W = 1.
WignerGrid wigner_theta_form(const DensityOperator& rho, int theta_window = 4);

}  // namespace frameq
