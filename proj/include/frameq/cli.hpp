#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "frameq/channels.hpp"
#include "frameq/verify.hpp"

namespace frameq::cli {

using Json = nlohmann::ordered_json;

/// 0 success, 1 invariant failure, 2 usage or spec error, 3 degenerate spectrum.
enum ExitCode : int {
  kSuccess = 0,
  kInvariantFailure = 1,
  kUsageError = 2,
  kDegenerateSpectrum = 3,
};

/// What a resolved function feeds. A bare `uniform` spec means f = 1/d for
/// states (total d) and f = 1 for observables (quantizes to the identity).
enum class FunctionRole { state, observable };

/// Resolves a FunctionSpec ({"kind": uniform|delta|harmonic|gaussian|grid, ...})
/// on a single space. `"normalize": true` rescales the total to d.
PhaseSpaceFunction resolve_function(const Json& spec, const HilbertSpace& space,
                                    FunctionRole role = FunctionRole::state);

/// Bipartite FunctionSpec: uniform, delta ([n,m,k,l]), grid (flat values in
/// (n,m,k,l) row-major order) or product ({"a": spec, "b": spec}).
BipartitePhaseFunction resolve_bipartite_function(const Json& spec, const BipartiteSpace& space);

/// {"dim": d, "re": [[...]], "im": [[...]]}.
Json operator_to_json(const CMatrix& m);
CMatrix operator_from_json(const Json& j);

/// Header `n,k,value`, rows in lexicographic centered order, %.17g values.
std::string wigner_csv(const WignerGrid& grid);
/// {"dim": d, "values": [row-major]}.
Json wigner_json(const WignerGrid& grid);

Json report_to_json(const DimensionReport& report);

/// Parses odd dimensions from "3,5,7" or "3-11" (odd values in the range).
std::vector<int> parse_dims(const std::string& text);

/// Full command-line entry point; argv[0] excluded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frameq::cli
