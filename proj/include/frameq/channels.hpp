#pragma once

#include <array>
#include <vector>

#include "frameq/composite.hpp"

namespace frameq {

/// |Phi> = d_A^{-1/2} sum_i |i>_{A'} (x) |i>_A.
BipartiteState max_entangled(const HilbertSpace& space_a);

/// Overall scale of the Kraus family built from f.
///
/// `literal`: K = sqrt(f/d) <i|n;k>_A <j|m;l>_B. Its Choi state is
/// (1/d_A) rho_f and sum K^dag K = (rho_{f_A})^T, which has trace 1.
///
/// `trace_preserving`: K = sqrt(f/d_B) <i|n;k>_A <j|m;l>_B, i.e. the literal
/// family times sqrt(d_A). Its Choi state is rho_f and sum K^dag K =
/// d_A (rho_{f_A})^T, which equals I_A exactly when rho_{f_A} = I/d_A.
enum class KrausScaling { trace_preserving, literal };

struct KrausTerm {
  /// Frame label (n, m, k, l).
  std::array<int, 4> label;
  double weight;  ///< f(n,m;k,l).
  /// d_B x d_A matrix; rank one.
  CMatrix matrix;
};

class KrausChannel {
 public:
  KrausChannel(BipartiteSpace space, std::vector<KrausTerm> terms, BipartitePhaseFunction source,
               KrausScaling scaling);

  const HilbertSpace& space_a() const noexcept { return space_.a; }
  const HilbertSpace& space_b() const noexcept { return space_.b; }
  const std::vector<KrausTerm>& terms() const noexcept { return terms_; }
  const BipartitePhaseFunction& source() const noexcept { return source_; }
  KrausScaling scaling() const noexcept { return scaling_; }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Number of labels dropped because f was below the cut-off.
  std::size_t dropped() const noexcept;

  /// sum K^dag K, a d_A x d_A matrix.
  CMatrix completeness_sum() const;

 private:
  BipartiteSpace space_;
  std::vector<KrausTerm> terms_;
  BipartitePhaseFunction source_;
  KrausScaling scaling_;
};

/// Labels with f below this are omitted from the family.
inline constexpr double kKrausCutoff = 1e-15;

/// One rank-one Kraus operator per frame label, with the A-side coherent
/// component entering unconjugated.
KrausChannel kraus_from_function(const CoherentFrame& frame_a, const CoherentFrame& frame_b,
                                 const BipartitePhaseFunction& f,
                                 KrausScaling scaling = KrausScaling::trace_preserving);

/// sum K rho K^dag. `rho` may be any d_A x d_A operator.
Operator apply_channel(const KrausChannel& channel, const Operator& rho);

/// (I (x) E)(|Phi><Phi|) on A' (x) B, computed from the Kraus family.
BipartiteOperator choi_state(const KrausChannel& channel);

/// The Choi target: rho_f for trace_preserving, (1/d_A) rho_f for literal.
double choi_scale(const KrausChannel& channel);

/// || choi_state - choi_scale * rho_f ||_F with rho_f from bipartite_density.
double choi_reconstruction_residual(const CoherentFrame& frame_a, const CoherentFrame& frame_b,
                                    const KrausChannel& channel);

/// || sum K^dag K - I_A ||_F.
double completeness_defect(const KrausChannel& channel);

}  // namespace frameq
