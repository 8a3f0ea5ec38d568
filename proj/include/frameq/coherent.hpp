#pragma once

#include <vector>

#include "frameq/hilbert.hpp"

namespace frameq {

/// D(n,k) = e^{-pi i nk/d} e^{2 pi i k q/d} e^{-2 pi i n p/d}, built in the
/// diagonalizing bases of q and p. n and k are reduced to [-s, s] first.
Operator displacement(const HilbertSpace& space, long long n, long long k);

/// Closed form <m|n;k> = |g_1|^{-1} e^{-pi i nk/d} e^{2 pi i km/d} g_1(m-n).
StateVector coherent_state(const HilbertSpace& space, long long n, long long k);

/// D(n,k)|0;0>, the matrix route. Cross-check for coherent_state.
StateVector coherent_state_by_displacement(const HilbertSpace& space, long long n, long long k);

/// All d^2 discrete coherent states |n;k>, cached eagerly. Immutable after
/// construction and safe to share across threads.
class CoherentFrame {
 public:
  explicit CoherentFrame(const HilbertSpace& space);

  const HilbertSpace& space() const noexcept { return space_; }
  int dim() const noexcept { return space_.dim(); }
  /// <g_1, g_1> of the unnormalized vacuum.
  double vacuum_norm() const noexcept { return vacuum_norm_; }

  StateVector state(long long n, long long k) const;
  /// Column (n+s)*d + (k+s) holds |n;k>; shape d x d^2.
  const CMatrix& states() const noexcept { return states_; }
  /// Flat label of (n,k) matching the column layout of states().
  int label(long long n, long long k) const noexcept {
    return space_.slot(n) * space_.dim() + space_.slot(k);
  }

 private:
  HilbertSpace space_;
  double vacuum_norm_;
  CMatrix states_;
};

/// || (1/d) sum |n;k><n;k| - I ||_F.
double resolution_residual(const CoherentFrame& frame);

/// max over (n,k) of || F|n;k> - |k;-n> ||.
double fourier_maps_frame(const CoherentFrame& frame);

/// max over (n,k) of || D(m,l)|n;k><n;k|D^dag(m,l) - |n+m;k+l><n+m;k+l| ||_F.
/// Compared as projectors, so the phase picked up under wraparound drops out.
double displacement_shifts_frame(const CoherentFrame& frame, long long m, long long l);

/// max over (n,k) of || Pi|n;k> - |-n;-k> ||.
double parity_maps_frame(const CoherentFrame& frame);

}  // namespace frameq
