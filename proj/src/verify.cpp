#include "frameq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "frameq/channels.hpp"
#include "frameq/error.hpp"
#include "frameq/gaussian.hpp"
#include "frameq/sampling.hpp"

namespace frameq {

bool DimensionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

const Check* DimensionReport::find(const std::string& name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

constexpr int kMaxCompositeDim = 9;
constexpr int kMaxChannelDim = 5;

}  // namespace

DimensionReport verify_dimension(int dim, double tol) {
  const HilbertSpace space = HilbertSpace::from_dim(dim);
  const CoherentFrame frame(space);
  std::mt19937_64 rng(static_cast<unsigned long long>(dim) * 7919ULL + 17ULL);
  DimensionReport rep{dim, {}, {}};
  auto add = [&rep](std::string name, double value, double threshold, bool upper = true) {
    rep.checks.push_back({std::move(name), value, threshold, upper});
  };

  // Objects are built at the default tolerance so a strict --tol shows up as
  // failed checks rather than as construction errors.
  const double build_tol = std::max(tol, kDefaultTol);
  try {
    add("theorem_1_residual", resolution_residual(frame), tol);

    double gauss = 0.0;
    for (double kappa : {0.25, 0.5, 1.0, 2.0, 4.0}) gauss = std::max(gauss, gaussian_fourier_residual(space, kappa));
    add("gaussian_fourier_residual", gauss, 1e-9);
    add("vacuum_self_dual_residual", gaussian_fourier_residual(space, 1.0), tol);

    add("frame_fourier_residual", fourier_maps_frame(frame), tol);
    add("frame_parity_residual", parity_maps_frame(frame), tol);
    add("frame_displacement_residual", displacement_shifts_frame(frame, 1, -1), tol);

    // Quantization map.
    const Operator id = identity(space);
    add("quantize_identity_residual", distance(quantize(frame, PhaseSpaceFunction::constant(space, 1.0)), id), tol);
    const PhaseSpaceFunction f1 = random_complex_function(space, rng);
    const PhaseSpaceFunction f2 = random_complex_function(space, rng);
    const Complex a(0.3, -1.2), b(-0.7, 0.4);
    const Operator lin_lhs = quantize(frame, a * f1 + b * f2);
    const Operator lin_rhs = a * quantize(frame, f1) + b * quantize(frame, f2);
    add("quantize_linearity_residual", distance(lin_lhs, lin_rhs), 1e-12);
    const PhaseSpaceFunction real_f = PhaseSpaceFunction(space, f1.values().real().cast<Complex>());
    add("quantize_hermitian_defect", quantize(frame, real_f).hermitian_defect(), 1e-12);
    const PhaseSpaceFunction rf = random_state_function(space, rng);
    add("quantize_min_eigenvalue", quantize(frame, rf).min_eigenvalue(), -tol, false);
    add("quantize_trace_residual", std::abs(quantize(frame, f1).trace() - quantize_trace(f1)), tol);

    // Density operators.
    const DensityOperator rho = density_from_function(frame, rf, build_tol);
    add("density_trace_residual", std::abs(rho.op().trace() - 1.0), tol);
    const DensityOperator coherent =
        density_from_function(frame, PhaseSpaceFunction::delta(space, 1, 0, dim), build_tol);
    add("coherent_purity_defect", std::abs(purity(coherent) - 1.0), 1e-8);
    const DensityOperator mixed =
        density_from_function(frame, PhaseSpaceFunction::constant(space, 1.0 / dim), build_tol);
    add("uniform_purity_residual", std::abs(purity(mixed) - 1.0 / dim), tol);
    add("random_purity_gap", 1.0 - purity(rho), 1e-6, false);
    const Operator q2 = position_op(space) * position_op(space);
    add("expectation_residual", std::abs(expectation(frame, rho, q2) - trace_expectation(rho, q2)), tol);

    add("fourier_covariance_residual", fourier_transform_density(frame, rho, 1.0).residual, tol);
    add("displacement_covariance_residual", displace_density(frame, rho, 1, -1, 1.0).residual, tol);
    add("transpose_covariance_residual", transpose_density(frame, rho, 1.0).residual, tol);
    add("parity_covariance_residual", parity_density(frame, rho, 1.0).residual, tol);

    const WignerGrid w = wigner(rho);
    add("wigner_max_imag", w.max_imag, tol);
    add("wigner_total_residual", std::abs(w.total() - 1.0), 1e-9);
    const Eigen::VectorXd diag = rho.op().matrix.diagonal().real();
    add("wigner_marginal_residual", (w.position_marginal() - diag).cwiseAbs().maxCoeff(), tol);
    const WignerGrid theta = wigner_theta_form(rho, 4);
    add("wigner_theta_residual", (theta.values - w.values).cwiseAbs().maxCoeff(), 1e-6);
    add("wigner_theta_window_stability",
        (wigner_theta_form(rho, 8).values - theta.values).cwiseAbs().maxCoeff(), tol);

    // Harmonic oscillator and fractional Fourier transform.
    const Operator harmonic = harmonic_operator(frame);
    const Operator fourier = dft(space);
    add("harmonic_fourier_commutator", distance(fourier * harmonic, harmonic * fourier), tol);
    const OrderedEigenbasis basis = order_by_sign_alternations(harmonic, build_tol);
    double group = 0.0;
    double unitary = 0.0;
    for (double alpha : {0.3, 0.5, 1.0, 1.7}) {
      const Operator fa = frac_fourier(basis, alpha);
      unitary = std::max(unitary, fa.unitary_defect());
      for (double beta : {0.3, 0.5, 1.0, 1.7})
        group = std::max(group, distance(fa * frac_fourier(basis, beta), frac_fourier(basis, alpha + beta)));
    }
    add("frac_fourier_unitary_defect", unitary, tol);
    add("frac_fourier_group_law_residual", group, tol);
    add("frac_fourier_period_residual", distance(frac_fourier(basis, 4.0), id), tol);

    // Bipartite systems, paired with a three-dimensional partner.
    if (dim <= kMaxCompositeDim) {
      const CoherentFrame partner(HilbertSpace::from_dim(3));
      const BipartiteSpace pair{space, partner.space()};
      add("composite_tightness_residual", bipartite_resolution_residual(frame, partner), tol);
      const BipartiteDensity joint = bipartite_density(frame, partner, random_state_function(pair, rng), build_tol);
      add("partial_trace_a_residual", partial_trace_a(partner, joint, 1.0).residual, tol);
      add("partial_trace_b_residual", partial_trace_b(frame, joint, 1.0).residual, tol);
      const PhaseSpaceFunction fb = random_state_function(partner.space(), rng);
      const BipartiteDensity prod =
          bipartite_density(frame, partner, BipartitePhaseFunction::product(rf, fb), build_tol);
      const CMatrix expected = kron(rho.op().matrix, density_from_function(partner, fb, build_tol).op().matrix);
      add("product_factorization_residual", frobenius(prod.op.matrix - expected), tol);
      if (dim <= kMaxChannelDim) {
        const BipartiteSpace square{space, space};
        const BipartiteDensity sq = bipartite_density(frame, frame, random_state_function(square, rng), build_tol);
        add("swap_residual", swap_density(frame, frame, sq, 1.0).residual, tol);

        const KrausChannel ch = kraus_from_function(frame, partner, random_state_function(pair, rng));
        add("channel_choi_residual", choi_reconstruction_residual(frame, partner, ch), tol);
        const KrausChannel tp = kraus_from_function(frame, partner, random_uniform_in_a_function(pair, rng));
        add("channel_completeness_defect", completeness_defect(tp), tol);
        const KrausChannel spike =
            kraus_from_function(frame, partner, BipartitePhaseFunction::delta(pair, 0, 0, 0, 0, pair.dim()));
        add("channel_delta_completeness_defect", completeness_defect(spike), 0.1, false);
      } else {
        rep.skipped.emplace_back("swap_residual");
        rep.skipped.emplace_back("channel checks");
      }
    } else {
      rep.skipped.emplace_back("composite checks");
      rep.skipped.emplace_back("channel checks");
    }
  } catch (const FrameError& e) {
    rep.checks.push_back({std::string("battery_error: ") + e.what(), 1.0, 0.0});
  }
  return rep;
}

}  // namespace frameq
