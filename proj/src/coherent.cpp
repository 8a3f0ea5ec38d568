#include "frameq/coherent.hpp"

#include <algorithm>
#include <cmath>

#include "frameq/error.hpp"
#include "frameq/gaussian.hpp"

namespace frameq {

namespace {

// exp(2 pi i a / d) with a reduced mod d first.
Complex root_of_unity(long long a, int d) {
  const long long r = ((a % d) + d) % d;
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / d);
}

CVector diagonal_phases(const HilbertSpace& space, long long multiplier) {
  CVector v(space.dim());
  for (int j : space.indices()) v(space.slot(j)) = root_of_unity(multiplier * j, space.dim());
  return v;
}

}  // namespace

Operator displacement(const HilbertSpace& space, long long n, long long k) {
  const int nc = space.center_mod(n);
  const int kc = space.center_mod(k);
  const int d = space.dim();
  const Operator f = dft(space);
  // e^{2 pi i k q/d} is diagonal; e^{-2 pi i n p/d} = F^dag e^{-2 pi i n q/d} F.
  const CVector q_phase = diagonal_phases(space, kc);
  const CVector p_phase = diagonal_phases(space, -static_cast<long long>(nc));
  // n = 0 is the identity translation; skip the round trip through F.
  const CMatrix translate = nc == 0 ? CMatrix::Identity(d, d).eval()
                                    : (f.matrix.adjoint() * p_phase.asDiagonal() * f.matrix).eval();
  const Complex global = std::polar(1.0, -kPi * nc * kc / d);
  return {space, global * (q_phase.asDiagonal() * translate)};
}

StateVector coherent_state(const HilbertSpace& space, long long n, long long k) {
  const int nc = space.center_mod(n);
  const int kc = space.center_mod(k);
  const int d = space.dim();
  const StateVector g = discrete_gaussian(space, {1.0});
  const double scale = 1.0 / g.amplitudes.norm();
  const Complex global = std::polar(scale, -kPi * nc * kc / d);
  CVector out(d);
  for (int m : space.indices()) {
    out(space.slot(m)) = global * root_of_unity(static_cast<long long>(kc) * m, d) * g(m - nc);
  }
  return {space, std::move(out)};
}

StateVector coherent_state_by_displacement(const HilbertSpace& space, long long n, long long k) {
  return displacement(space, n, k).apply(vacuum_state(space));
}

CoherentFrame::CoherentFrame(const HilbertSpace& space)
    : space_(space), vacuum_norm_(0.0), states_(space.dim(), space.dim() * space.dim()) {
  if (space.dim() < 3) {
    throw FrameError(ErrorKind::invalid_argument, "coherent frames need d >= 3");
  }
  const StateVector g = discrete_gaussian(space, {1.0});
  vacuum_norm_ = g.amplitudes.squaredNorm();
  for (int n : space.indices()) {
    for (int k : space.indices()) {
      states_.col(label(n, k)) = coherent_state(space, n, k).amplitudes;
    }
  }
}

StateVector CoherentFrame::state(long long n, long long k) const {
  return {space_, states_.col(label(n, k))};
}

double resolution_residual(const CoherentFrame& frame) {
  const int d = frame.dim();
  const CMatrix sum = frame.states() * frame.states().adjoint() / static_cast<double>(d);
  return frobenius(sum - CMatrix::Identity(d, d));
}

double fourier_maps_frame(const CoherentFrame& frame) {
  const HilbertSpace& space = frame.space();
  const CMatrix mapped = dft(space).matrix * frame.states();
  double worst = 0.0;
  for (int n : space.indices()) {
    for (int k : space.indices()) {
      const double dev = (mapped.col(frame.label(n, k)) - frame.states().col(frame.label(k, -n))).norm();
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

double displacement_shifts_frame(const CoherentFrame& frame, long long m, long long l) {
  const HilbertSpace& space = frame.space();
  const Operator shift = displacement(space, m, l);
  double worst = 0.0;
  for (int n : space.indices()) {
    for (int k : space.indices()) {
      const CVector moved = shift.matrix * frame.states().col(frame.label(n, k));
      const CVector target = frame.states().col(frame.label(n + m, k + l));
      const double dev = frobenius(moved * moved.adjoint() - target * target.adjoint());
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

double parity_maps_frame(const CoherentFrame& frame) {
  const HilbertSpace& space = frame.space();
  const CMatrix mapped = parity_op(space).matrix * frame.states();
  double worst = 0.0;
  for (int n : space.indices()) {
    for (int k : space.indices()) {
      const double dev = (mapped.col(frame.label(n, k)) - frame.states().col(frame.label(-n, -k))).norm();
      worst = std::max(worst, dev);
    }
  }
  return worst;
}

}  // namespace frameq
