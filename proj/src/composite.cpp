#include "frameq/composite.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace frameq {

namespace {

void require_density(const CMatrix& m, double tol, const char* what) {
  const double herm = frobenius(m - m.adjoint());
  const Complex tr = m.trace();
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  const double lo = solver.eigenvalues()(0);
  if (herm >= tol || std::abs(tr - 1.0) >= tol || lo < -tol) {
    std::ostringstream msg;
    msg << what << ": not a density operator (hermitian defect " << herm << ", trace " << tr
        << ", min eigenvalue " << lo << ")";
    throw FrameError(ErrorKind::invariant_violation, msg.str());
  }
}

void check_residual(double residual, double tol, const char* what) {
  if (residual >= tol) {
    std::ostringstream msg;
    msg << what << ": residual " << residual << " exceeds " << tol;
    throw FrameError(ErrorKind::invariant_violation, msg.str());
  }
}

}  // namespace

BipartitePhaseFunction::BipartitePhaseFunction(BipartiteSpace space, std::vector<double> values)
    : space_(space), values_(std::move(values)) {
  const std::size_t expected = static_cast<std::size_t>(space_.dim()) * static_cast<std::size_t>(space_.dim());
  if (values_.size() != expected) {
    throw FrameError(ErrorKind::dimension_mismatch, "bipartite grid needs d_A^2 d_B^2 = " +
                                                        std::to_string(expected) + " values, got " +
                                                        std::to_string(values_.size()));
  }
}

BipartitePhaseFunction BipartitePhaseFunction::constant(const BipartiteSpace& space, double value) {
  const auto n = static_cast<std::size_t>(space.dim()) * static_cast<std::size_t>(space.dim());
  return {space, std::vector<double>(n, value)};
}

BipartitePhaseFunction BipartitePhaseFunction::delta(const BipartiteSpace& space, long long n, long long m,
                                                     long long k, long long l, double height) {
  BipartitePhaseFunction out = constant(space, 0.0);
  out.values_[out.offset(n, m, k, l)] = height;
  return out;
}

BipartitePhaseFunction BipartitePhaseFunction::product(const PhaseSpaceFunction& f, const PhaseSpaceFunction& g) {
  if (!f.is_real() || !g.is_real()) {
    throw FrameError(ErrorKind::complex_values, "product factors must be real-valued");
  }
  BipartitePhaseFunction out = constant({f.space(), g.space()}, 0.0);
  for (int n : f.space().indices())
    for (int k : f.space().indices())
      for (int m : g.space().indices())
        for (int l : g.space().indices())
          out.values_[out.offset(n, m, k, l)] = f(n, k).real() * g(m, l).real();
  return out;
}

double BipartitePhaseFunction::total() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

std::size_t BipartitePhaseFunction::offset(long long n, long long m, long long k, long long l) const noexcept {
  const std::size_t da = static_cast<std::size_t>(space_.a.dim());
  const std::size_t db = static_cast<std::size_t>(space_.b.dim());
  const std::size_t sn = static_cast<std::size_t>(space_.a.slot(n));
  const std::size_t sm = static_cast<std::size_t>(space_.b.slot(m));
  const std::size_t sk = static_cast<std::size_t>(space_.a.slot(k));
  const std::size_t sl = static_cast<std::size_t>(space_.b.slot(l));
  return ((sn * db + sm) * da + sk) * db + sl;
}

PhaseSpaceFunction BipartitePhaseFunction::reduce_to_a() const {
  const HilbertSpace& a = space_.a;
  const HilbertSpace& b = space_.b;
  return PhaseSpaceFunction::from(a, [&](int n, int k) {
    double sum = 0.0;
    for (int m : b.indices())
      for (int l : b.indices()) sum += (*this)(n, m, k, l);
    return Complex(sum / b.dim(), 0.0);
  });
}

PhaseSpaceFunction BipartitePhaseFunction::reduce_to_b() const {
  const HilbertSpace& a = space_.a;
  const HilbertSpace& b = space_.b;
  return PhaseSpaceFunction::from(b, [&](int m, int l) {
    double sum = 0.0;
    for (int n : a.indices())
      for (int k : a.indices()) sum += (*this)(n, m, k, l);
    return Complex(sum / a.dim(), 0.0);
  });
}

BipartitePhaseFunction BipartitePhaseFunction::swapped() const {
  require_same_space(space_.a, space_.b, "swap");
  BipartitePhaseFunction out = constant(space_, 0.0);
  for (int n : space_.a.indices())
    for (int m : space_.b.indices())
      for (int k : space_.a.indices())
        for (int l : space_.b.indices()) out.values_[out.offset(n, m, k, l)] = (*this)(m, n, l, k);
  return out;
}

void validate_state_function(const BipartitePhaseFunction& f, double total_tol) {
  const double d = f.space().dim();
  for (double x : f.values()) {
    if (!std::isfinite(x)) throw FrameError(ErrorKind::invalid_argument, "bipartite function has a non-finite entry");
    if (x < 0.0) {
      std::ostringstream msg;
      msg << "bipartite state function has negative entry " << x;
      throw FrameError(ErrorKind::negative_entry, msg.str());
    }
    if (x > d) {
      std::ostringstream msg;
      msg << "bipartite state function entry " << x << " exceeds d = " << d;
      throw FrameError(ErrorKind::entry_above_bound, msg.str());
    }
  }
  const double total = f.total();
  if (std::abs(total - d) > total_tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "bipartite state function sums to " << total << ", expected d = " << d;
    throw FrameError(ErrorKind::wrong_total, msg.str());
  }
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

BipartiteState product_coherent(const CoherentFrame& frame_a, const CoherentFrame& frame_b, long long n,
                                long long m, long long k, long long l) {
  const CMatrix va = frame_a.states().col(frame_a.label(n, k));
  const CMatrix vb = frame_b.states().col(frame_b.label(m, l));
  return {{frame_a.space(), frame_b.space()}, kron(va, vb).col(0)};
}

CMatrix product_frame_states(const CoherentFrame& frame_a, const CoherentFrame& frame_b) {
  const BipartiteSpace space{frame_a.space(), frame_b.space()};
  const BipartitePhaseFunction layout = BipartitePhaseFunction::constant(space, 0.0);
  CMatrix out(space.dim(), static_cast<Eigen::Index>(space.dim()) * space.dim());
  for (int n : space.a.indices())
    for (int k : space.a.indices())
      for (int m : space.b.indices())
        for (int l : space.b.indices())
          out.col(static_cast<Eigen::Index>(layout.offset(n, m, k, l))) =
              product_coherent(frame_a, frame_b, n, m, k, l).amplitudes;
  return out;
}

double bipartite_resolution_residual(const CoherentFrame& frame_a, const CoherentFrame& frame_b) {
  const CMatrix v = product_frame_states(frame_a, frame_b);
  const Eigen::Index d = v.rows();
  return frobenius(v * v.adjoint() / static_cast<double>(d) - CMatrix::Identity(d, d));
}

BipartiteDensity bipartite_density(const CoherentFrame& frame_a, const CoherentFrame& frame_b,
                                   const BipartitePhaseFunction& f, double tol) {
  const BipartiteSpace space{frame_a.space(), frame_b.space()};
  if (!(f.space() == space)) {
    throw FrameError(ErrorKind::dimension_mismatch, "bipartite function does not match the frames");
  }
  validate_state_function(f);
  const CMatrix v = product_frame_states(frame_a, frame_b);
  const Eigen::Map<const Eigen::VectorXd> w(f.values().data(), static_cast<Eigen::Index>(f.values().size()));
  CMatrix rho = v * w.cast<Complex>().asDiagonal() * v.adjoint();
  rho /= static_cast<double>(space.dim());
  require_density(rho, tol, "bipartite_density");
  return {{space, std::move(rho)}, f};
}

Operator partial_trace_a(const BipartiteOperator& rho) {
  const int da = rho.space.a.dim();
  const int db = rho.space.b.dim();
  CMatrix out = CMatrix::Zero(db, db);
  for (int a = 0; a < da; ++a) out += rho.matrix.block(a * db, a * db, db, db);
  return {rho.space.b, std::move(out)};
}

Operator partial_trace_b(const BipartiteOperator& rho) {
  const int da = rho.space.a.dim();
  const int db = rho.space.b.dim();
  CMatrix out(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) out(i, j) = rho.matrix.block(i * db, j * db, db, db).trace();
  return {rho.space.a, std::move(out)};
}

ReducedState partial_trace_a(const CoherentFrame& frame_b, const BipartiteDensity& rho, double tol) {
  if (!rho.source) throw FrameError(ErrorKind::missing_source, "partial_trace_a needs a generating function");
  require_same_space(frame_b.space(), rho.op.space.b, "partial_trace_a");
  const Operator traced = partial_trace_a(rho.op);
  PhaseSpaceFunction f_b = rho.source->reduce_to_b();
  DensityOperator reduced = density_from_function(frame_b, f_b, tol);
  const double residual = distance(traced, reduced.op());
  check_residual(residual, tol, "partial_trace_a");
  return {std::move(reduced), std::move(f_b), residual};
}

ReducedState partial_trace_b(const CoherentFrame& frame_a, const BipartiteDensity& rho, double tol) {
  if (!rho.source) throw FrameError(ErrorKind::missing_source, "partial_trace_b needs a generating function");
  require_same_space(frame_a.space(), rho.op.space.a, "partial_trace_b");
  const Operator traced = partial_trace_b(rho.op);
  PhaseSpaceFunction f_a = rho.source->reduce_to_a();
  DensityOperator reduced = density_from_function(frame_a, f_a, tol);
  const double residual = distance(traced, reduced.op());
  check_residual(residual, tol, "partial_trace_b");
  return {std::move(reduced), std::move(f_a), residual};
}

CMatrix swap_operator(const BipartiteSpace& space) {
  require_same_space(space.a, space.b, "swap_operator");
  CMatrix out = CMatrix::Zero(space.dim(), space.dim());
  for (int i : space.a.indices())
    for (int j : space.b.indices()) out(space.flat(j, i), space.flat(i, j)) = 1.0;
  return out;
}

SwapImage swap_density(const CoherentFrame& frame_a, const CoherentFrame& frame_b, const BipartiteDensity& rho,
                       double tol) {
  if (!(rho.op.space.a == rho.op.space.b)) {
    throw FrameError(ErrorKind::dimension_mismatch, "swap_density needs d_A = d_B");
  }
  if (!rho.source) throw FrameError(ErrorKind::missing_source, "swap_density needs a generating function");
  const CMatrix sw = swap_operator(rho.op.space);
  const CMatrix transformed = sw * rho.op.matrix * sw;
  BipartitePhaseFunction g = rho.source->swapped();
  BipartiteDensity rho_g = bipartite_density(frame_a, frame_b, g, tol);
  const double residual = frobenius(transformed - rho_g.op.matrix);
  check_residual(residual, tol, "swap_density");
  return {std::move(rho_g), std::move(g), residual};
}

}  // namespace frameq
