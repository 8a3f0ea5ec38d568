#pragma once

#include <optional>
#include <vector>

#include "frameq/states.hpp"

namespace frameq {

/// H_A (x) H_B with flat index (i + s_A) * d_B + (j + s_B): A is the slow index.
struct BipartiteSpace {
  HilbertSpace a;
  HilbertSpace b;

  int dim() const noexcept { return a.dim() * b.dim(); }
  int flat(long long i, long long j) const noexcept { return a.slot(i) * b.dim() + b.slot(j); }

  friend bool operator==(const BipartiteSpace&, const BipartiteSpace&) = default;
};

/// Real function f(n,m;k,l) with n,k in R_A and m,l in R_B, stored densely.
class BipartitePhaseFunction {
 public:
  BipartitePhaseFunction(BipartiteSpace space, std::vector<double> values);

  static BipartitePhaseFunction constant(const BipartiteSpace& space, double value);
  static BipartitePhaseFunction delta(const BipartiteSpace& space, long long n, long long m, long long k,
                                      long long l, double height);
  /// h(n,m;k,l) = f(n,k) g(m,l).
  static BipartitePhaseFunction product(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g);

  const BipartiteSpace& space() const noexcept { return space_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator()(long long n, long long m, long long k, long long l) const { return values_[offset(n, m, k, l)]; }
  double total() const;

  /// Position of (n,m;k,l) in values(): ((n*d_B + m)*d_A + k)*d_B + l over slots.
  std::size_t offset(long long n, long long m, long long k, long long l) const noexcept;

  /// f_A(n,k) = (1/d_B) sum_{m,l} f(n,m;k,l).
  PhaseSpaceFunction reduce_to_a() const;
  /// f_B(m,l) = (1/d_A) sum_{n,k} f(n,m;k,l).
  PhaseSpaceFunction reduce_to_b() const;
  /// g(n,m;k,l) = f(m,n;l,k). Requires d_A = d_B.
  BipartitePhaseFunction swapped() const;

 private:
  BipartiteSpace space_;
  std::vector<double> values_;
};

/// Entries in [0, d] and total d = d_A d_B.
void validate_state_function(const BipartitePhaseFunction& f, double total_tol = 1e-9);

struct BipartiteState {
  BipartiteSpace space;
  CVector amplitudes;
};

struct BipartiteOperator {
  BipartiteSpace space;
  CMatrix matrix;
};

struct BipartiteDensity {
  BipartiteOperator op;
  std::optional<BipartitePhaseFunction> source;
};

/// |n,m;k,l> = |n;k>_A (x) |m;l>_B.
BipartiteState product_coherent(const CoherentFrame& frame_a, const CoherentFrame& frame_b, long long n,
                                long long m, long long k, long long l);

/// All product frame vectors as columns, column index = offset(n,m,k,l).
CMatrix product_frame_states(const CoherentFrame& frame_a, const CoherentFrame& frame_b);

/// || (1/d) sum |n,m;k,l><n,m;k,l| - I ||_F.
double bipartite_resolution_residual(const CoherentFrame& frame_a, const CoherentFrame& frame_b);

/// rho_f = (1/d) sum f(n,m;k,l) |n,m;k,l><n,m;k,l|.
BipartiteDensity bipartite_density(const CoherentFrame& frame_a, const CoherentFrame& frame_b,
                                   const BipartitePhaseFunction& f, double tol = kDefaultTol);

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Index-contraction partial traces.
Operator partial_trace_a(const BipartiteOperator& rho);
Operator partial_trace_b(const BipartiteOperator& rho);

struct ReducedState {
  DensityOperator state;        ///< rho_{f_B} (or rho_{f_A}).
  PhaseSpaceFunction function;  ///< f_B (or f_A).
  double residual;              ///< || matrix partial trace - rho_{reduced} ||_F.
};

/// tr_A rho_f = rho_{f_B}.
ReducedState partial_trace_a(const CoherentFrame& frame_b, const BipartiteDensity& rho, double tol = kDefaultTol);
/// tr_B rho_f = rho_{f_A}.
ReducedState partial_trace_b(const CoherentFrame& frame_a, const BipartiteDensity& rho, double tol = kDefaultTol);

/// SWAP |phi>_A|psi>_B = |psi>_A|phi>_B. Requires d_A = d_B.
CMatrix swap_operator(const BipartiteSpace& space);

struct SwapImage {
  BipartiteDensity state;
  BipartitePhaseFunction function;
  double residual;
};

/// SWAP rho_f SWAP = rho_g with g(n,m;k,l) = f(m,n;l,k).
SwapImage swap_density(const CoherentFrame& frame_a, const CoherentFrame& frame_b, const BipartiteDensity& rho,
                       double tol = kDefaultTol);

}  // namespace frameq
