#pragma once

#include <functional>
#include <vector>

#include "frameq/coherent.hpp"

namespace frameq {

/// Complex function on the d x d phase-space grid; entry (n,k) in centered
/// indices, stored at (n+s, k+s).
class PhaseSpaceFunction {
 public:
  PhaseSpaceFunction(HilbertSpace space, CMatrix values);

  static PhaseSpaceFunction constant(const HilbertSpace& space, Complex value);
  /// Spike of `height` at (m,l), zero elsewhere.
  static PhaseSpaceFunction delta(const HilbertSpace& space, long long m, long long l, double height);
  static PhaseSpaceFunction from(const HilbertSpace& space, const std::function<Complex(int, int)>& fn);

  const HilbertSpace& space() const noexcept { return space_; }
  const CMatrix& values() const noexcept { return values_; }
  Complex operator()(long long n, long long k) const {
    return values_(space_.slot(n), space_.slot(k));
  }

  bool is_real(double tol = 0.0) const;
  bool is_nonnegative(double tol = 0.0) const;
  Complex total() const { return values_.sum(); }
  std::size_t support_size(double tol = 0.0) const;

  /// g(n,k) = f(remap(n,k)), with the remapped arguments reduced by center_mod.
  PhaseSpaceFunction reindexed(const std::function<std::pair<long long, long long>(int, int)>& remap) const;

  PhaseSpaceFunction operator+(const PhaseSpaceFunction& other) const;
  friend PhaseSpaceFunction operator*(Complex c, const PhaseSpaceFunction& f);

 private:
  HilbertSpace space_;
  CMatrix values_;
};

/// Lambda_f = (1/d) sum f(n,k) |n;k><n;k|, evaluated as V diag(f) V^dag / d.
Operator quantize(const CoherentFrame& frame, const PhaseSpaceFunction& f);

/// (1/d) sum f(n,k), the trace of quantize(frame, f).
Complex quantize_trace(const PhaseSpaceFunction& f);

/// f(n,k) = (n^2 + k^2)/2.
PhaseSpaceFunction harmonic_function(const HilbertSpace& space);
Operator harmonic_operator(const CoherentFrame& frame);

/// Strict sign changes in psi(-s)..psi(s) of the real parts, skipping entries
/// with magnitude below `zero_tol`.
int sign_alternations(const CVector& psi, double zero_tol = 1e-8);

struct OrderedEigenbasis {
  HilbertSpace space;
  std::vector<StateVector> vectors;
  std::vector<double> eigenvalues;
  std::vector<int> alternation_counts;
};

/// Eigenvectors of a real symmetric operator, made real with the first
/// component above 1e-8 positive, sorted by number of sign alternations.
/// Throws ErrorKind::complex_values for a non-real matrix and
/// ErrorKind::ordering_failure when two vectors share an alternation count.
OrderedEigenbasis order_by_sign_alternations(const Operator& op, double tol = kDefaultTol);

/// F^alpha = sum_n e^{-i pi n alpha/2} |psi_n><psi_n|.
Operator frac_fourier(const OrderedEigenbasis& basis, double alpha);

/// Per-level check of F psi_n against the four Fourier eigenvalues.
struct FourierLevelReport {
  int level;
  /// Power p in {0,1,2,3} whose (-i)^p minimizes || F psi_n - (-i)^p psi_n ||.
  int best_power;
  double best_residual;
  /// || F psi_n - (-i)^n psi_n ||; diagnostic only.
  double predicted_residual;
};
std::vector<FourierLevelReport> fourier_eigen_report(const OrderedEigenbasis& basis);

/// Finite-difference oscillator (H psi)(n) = psi(n-1) + psi(n+1) + 2cos(2 pi n/d) psi(n),
/// i.e. 2cos(2 pi q/d) + 2cos(2 pi p/d). No rescaling.
Operator harper_operator(const HilbertSpace& space);

/// Normalized samples of H_n(q sqrt(2 pi/d)) e^{-pi q^2/d} at q = -s..s.
StateVector hermite_gauss_samples(const HilbertSpace& space, int level);

}  // namespace frameq
