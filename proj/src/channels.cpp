#include "frameq/channels.hpp"

#include <cmath>

namespace frameq {

BipartiteState max_entangled(const HilbertSpace& space_a) {
  const BipartiteSpace space{space_a, space_a};
  CVector v = CVector::Zero(space.dim());
  const double amp = 1.0 / std::sqrt(static_cast<double>(space_a.dim()));
  for (int i : space_a.indices()) v(space.flat(i, i)) = amp;
  return {space, std::move(v)};
}

KrausChannel::KrausChannel(BipartiteSpace space, std::vector<KrausTerm> terms, BipartitePhaseFunction source,
                           KrausScaling scaling)
    : space_(space), terms_(std::move(terms)), source_(std::move(source)), scaling_(scaling) {}

std::size_t KrausChannel::dropped() const noexcept {
  return static_cast<std::size_t>(space_.dim()) * static_cast<std::size_t>(space_.dim()) - terms_.size();
}

CMatrix KrausChannel::completeness_sum() const {
  const int da = space_.a.dim();
  CMatrix sum = CMatrix::Zero(da, da);
  for (const KrausTerm& t : terms_) sum += t.matrix.adjoint() * t.matrix;
  return sum;
}

KrausChannel kraus_from_function(const CoherentFrame& frame_a, const CoherentFrame& frame_b,
                                 const BipartitePhaseFunction& f, KrausScaling scaling) {
  const BipartiteSpace space{frame_a.space(), frame_b.space()};
  if (!(f.space() == space)) {
    throw FrameError(ErrorKind::dimension_mismatch, "bipartite function does not match the frames");
  }
  validate_state_function(f);
  const double denom = scaling == KrausScaling::literal ? static_cast<double>(space.dim())
                                                        : static_cast<double>(space.b.dim());
  std::vector<KrausTerm> terms;
  for (int n : space.a.indices())
    for (int m : space.b.indices())
      for (int k : space.a.indices())
        for (int l : space.b.indices()) {
          const double w = f(n, m, k, l);
          if (w < kKrausCutoff) continue;
          const auto va = frame_a.states().col(frame_a.label(n, k));
          const auto vb = frame_b.states().col(frame_b.label(m, l));
          // <j|K|i> = c sqrt(f) <j|m;l>_B <i|n;k>_A: transpose, not adjoint, on the A side.
          CMatrix km = std::sqrt(w / denom) * (vb * va.transpose());
          terms.push_back({{n, m, k, l}, w, std::move(km)});
        }
  return {space, std::move(terms), f, scaling};
}

Operator apply_channel(const KrausChannel& channel, const Operator& rho) {
  require_same_space(channel.space_a(), rho.space, "apply_channel");
  const int db = channel.space_b().dim();
  CMatrix out = CMatrix::Zero(db, db);
  for (const KrausTerm& t : channel.terms()) out += t.matrix * rho.matrix * t.matrix.adjoint();
  return {channel.space_b(), std::move(out)};
}

BipartiteOperator choi_state(const KrausChannel& channel) {
  const HilbertSpace& a = channel.space_a();
  const HilbertSpace& b = channel.space_b();
  const int da = a.dim();
  const int db = b.dim();
  CMatrix out = CMatrix::Zero(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      CMatrix unit = CMatrix::Zero(da, da);
      unit(i, j) = 1.0;
      const Operator image = apply_channel(channel, Operator(a, unit));
      out.block(i * db, j * db, db, db) = image.matrix / static_cast<double>(da);
    }
  }
  return {{a, b}, std::move(out)};
}

double choi_scale(const KrausChannel& channel) {
  return channel.scaling() == KrausScaling::literal ? 1.0 / channel.space_a().dim() : 1.0;
}

double choi_reconstruction_residual(const CoherentFrame& frame_a, const CoherentFrame& frame_b,
                                    const KrausChannel& channel) {
  const BipartiteDensity rho = bipartite_density(frame_a, frame_b, channel.source());
  const BipartiteOperator choi = choi_state(channel);
  return frobenius(choi.matrix - choi_scale(channel) * rho.op.matrix);
}

double completeness_defect(const KrausChannel& channel) {
  const int da = channel.space_a().dim();
  return frobenius(channel.completeness_sum() - CMatrix::Identity(da, da));
}

}  // namespace frameq
