#include "frameq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "frameq/gaussian.hpp"

namespace frameq::cli {

namespace {

[[noreturn]] void spec_error(const std::string& what) { throw FrameError(ErrorKind::parse_error, what); }

int require_odd_dim(long long d) {
  if (d % 2 == 0) spec_error("dimension must be odd, got " + std::to_string(d));
  if (d < 3) spec_error("dimension must be at least 3, got " + std::to_string(d));
  if (d > 401) spec_error("dimension " + std::to_string(d) + " is beyond desk scale");
  return static_cast<int>(d);
}

const std::string& kind_of(const Json& spec) {
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string()) {
    spec_error("function spec needs a string field \"kind\"");
  }
  return spec["kind"].get_ref<const std::string&>();
}

template <std::size_t N>
std::array<long long, N> read_position(const Json& spec) {
  if (!spec.contains("position") || !spec["position"].is_array() || spec["position"].size() != N) {
    spec_error("delta spec needs \"position\" with " + std::to_string(N) + " integers");
  }
  std::array<long long, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!spec["position"][i].is_number_integer()) spec_error("delta position entries must be integers");
    out[i] = spec["position"][i].get<long long>();
  }
  return out;
}

double number_or(const Json& spec, const char* key, double fallback) {
  if (!spec.contains(key)) return fallback;
  if (!spec[key].is_number()) spec_error(std::string("field \"") + key + "\" must be a number");
  return spec[key].get<double>();
}

bool wants_normalize(const Json& spec) {
  if (!spec.contains("normalize")) return false;
  if (!spec["normalize"].is_boolean()) spec_error("\"normalize\" must be a boolean");
  return spec["normalize"].get<bool>();
}

RMatrix read_grid(const Json& rows, int d, const char* key) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
    spec_error(std::string("grid \"") + key + "\" must have " + std::to_string(d) + " rows");
  }
  RMatrix out(d, d);
  for (int i = 0; i < d; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != d) {
      spec_error(std::string("grid \"") + key + "\" rows must have " + std::to_string(d) + " entries");
    }
    for (int j = 0; j < d; ++j) {
      if (!rows[i][j].is_number()) spec_error("grid entries must be numbers");
      out(i, j) = rows[i][j].get<double>();
    }
  }
  return out;
}

Json matrix_rows(const RMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) spec_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    spec_error("malformed JSON in " + path + ": " + e.what());
  }
}

struct Options {
  std::string dim_text;
  std::string dims_text;
  std::string spec_path;
  std::string format = "json";
  std::string out_path;
  double tol = kDefaultTol;
  std::string input_path;
  std::optional<double> alpha;
};

class Output {
 public:
  Output(const Options& opts, std::ostream& fallback) : fallback_(fallback) {
    if (!opts.out_path.empty()) {
      file_.open(opts.out_path, std::ios::binary);
      if (!file_) spec_error("cannot write " + opts.out_path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

Json load_spec(const Options& opts, bool required) {
  if (opts.spec_path.empty()) {
    if (required) spec_error("--spec <file.json> is required for this command");
    return Json::object();
  }
  Json spec = load_json_file(opts.spec_path);
  if (!spec.is_object()) spec_error("job spec must be a JSON object");
  return spec;
}

int single_dim(const Options& opts, const Json& spec) {
  if (!opts.dim_text.empty()) {
    try {
      std::size_t used = 0;
      const long long d = std::stoll(opts.dim_text, &used);
      if (used != opts.dim_text.size()) spec_error("invalid --dim " + opts.dim_text);
      return require_odd_dim(d);
    } catch (const std::logic_error&) {
      spec_error("invalid --dim " + opts.dim_text);
    }
  }
  if (spec.contains("dim")) {
    if (!spec["dim"].is_number_integer()) spec_error("\"dim\" must be an integer");
    return require_odd_dim(spec["dim"].get<long long>());
  }
  spec_error("no dimension given (use --dim or \"dim\" in the spec)");
}

BipartiteSpace pair_dims(const Options& opts, const Json& spec) {
  auto read = [&](const char* key) -> int {
    if (spec.contains(key)) {
      if (!spec[key].is_number_integer()) spec_error(std::string("\"") + key + "\" must be an integer");
      return require_odd_dim(spec[key].get<long long>());
    }
    return single_dim(opts, spec);
  };
  return {HilbertSpace::from_dim(read("dim_a")), HilbertSpace::from_dim(read("dim_b"))};
}

const Json& function_spec(const Json& spec) {
  if (!spec.contains("function")) spec_error("job spec needs a \"function\" object");
  return spec["function"];
}

void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

int cmd_verify(const Options& opts, std::ostream& out, std::ostream& err) {
  const std::string text = !opts.dims_text.empty() ? opts.dims_text : opts.dim_text;
  if (text.empty()) spec_error("verify needs --dims (e.g. --dims 3,5,7)");
  const std::vector<int> dims = parse_dims(text);
  Json report = Json::object();
  report["tol"] = opts.tol;
  report["dims"] = Json::array();
  bool all = true;
  for (int d : dims) {
    const DimensionReport rep = verify_dimension(d, opts.tol);
    all = all && rep.passed();
    report["dims"].push_back(report_to_json(rep));
    for (const Check& c : rep.checks)
      if (!c.passed()) err << "d=" << d << ": " << c.name << " = " << c.value << " (bound " << c.threshold << ")\n";
  }
  report["passed"] = all;
  Output sink(opts, out);
  write_json(sink.stream(), report);
  return all ? kSuccess : kInvariantFailure;
}

int cmd_wigner(const Options& opts, std::ostream& out) {
  const Json spec = load_spec(opts, true);
  const HilbertSpace space = HilbertSpace::from_dim(single_dim(opts, spec));
  const CoherentFrame frame(space);
  const PhaseSpaceFunction f = resolve_function(function_spec(spec), space);
  const DensityOperator rho = density_from_function(frame, f, opts.tol);
  const WignerGrid grid = wigner(rho);
  if (grid.max_imag >= opts.tol) {
    throw FrameError(ErrorKind::invariant_violation, "Wigner grid has a non-negligible imaginary part");
  }
  Output sink(opts, out);
  if (opts.format == "csv") {
    sink.stream() << wigner_csv(grid);
  } else {
    write_json(sink.stream(), wigner_json(grid));
  }
  return kSuccess;
}

int cmd_quantize(const Options& opts, std::ostream& out) {
  const Json spec = load_spec(opts, true);
  const HilbertSpace space = HilbertSpace::from_dim(single_dim(opts, spec));
  const CoherentFrame frame(space);
  const Operator op = quantize(frame, resolve_function(function_spec(spec), space, FunctionRole::observable));
  Output sink(opts, out);
  write_json(sink.stream(), operator_to_json(op.matrix));
  return kSuccess;
}

int cmd_eigen(const Options& opts, std::ostream& out) {
  const Json spec = load_spec(opts, false);
  const HilbertSpace space = HilbertSpace::from_dim(single_dim(opts, spec));
  std::string which = "harmonic";
  if (spec.contains("operator")) {
    if (!spec["operator"].is_string()) spec_error("\"operator\" must be a string");
    which = spec["operator"].get<std::string>();
  }
  const CoherentFrame frame(space);
  std::optional<Operator> op;
  if (which == "harmonic") {
    op = harmonic_operator(frame);
  } else if (which == "harper") {
    op = harper_operator(space);
  } else if (which == "identity") {
    op = identity(space);
  } else if (which == "function") {
    op = quantize(frame, resolve_function(function_spec(spec), space, FunctionRole::observable));
  } else {
    spec_error("unknown operator \"" + which + "\" (expected harmonic, harper, identity or function)");
  }
  std::optional<double> alpha = opts.alpha;
  if (!alpha && spec.contains("alpha")) alpha = number_or(spec, "alpha", 0.0);

  const OrderedEigenbasis basis = order_by_sign_alternations(*op, opts.tol);
  Json report = Json::object();
  report["dim"] = space.dim();
  report["operator"] = which;
  report["eigenvalues"] = basis.eigenvalues;
  report["alternation_counts"] = basis.alternation_counts;
  Json levels = Json::array();
  for (const FourierLevelReport& lvl : fourier_eigen_report(basis)) {
    Json j = Json::object();
    j["level"] = lvl.level;
    j["best_power"] = lvl.best_power;
    j["best_residual"] = lvl.best_residual;
    j["predicted_residual"] = lvl.predicted_residual;
    j["hermite_gauss_overlap"] =
        std::abs(inner(basis.vectors[static_cast<std::size_t>(lvl.level)], hermite_gauss_samples(space, lvl.level)));
    levels.push_back(std::move(j));
  }
  report["fourier_levels"] = std::move(levels);
  if (alpha) {
    const Operator fa = frac_fourier(basis, *alpha);
    Json frac = Json::object();
    frac["alpha"] = *alpha;
    frac["unitary_defect"] = fa.unitary_defect();
    frac["matrix"] = operator_to_json(fa.matrix);
    report["frac_fourier"] = std::move(frac);
  }
  Output sink(opts, out);
  write_json(sink.stream(), report);
  return kSuccess;
}

int cmd_channel(const Options& opts, std::ostream& out) {
  const Json spec = load_spec(opts, true);
  const BipartiteSpace space = pair_dims(opts, spec);
  KrausScaling scaling = KrausScaling::trace_preserving;
  if (spec.contains("scaling")) {
    const std::string s = spec["scaling"].is_string() ? spec["scaling"].get<std::string>() : "";
    if (s == "literal") {
      scaling = KrausScaling::literal;
    } else if (s != "trace_preserving") {
      spec_error("\"scaling\" must be \"trace_preserving\" or \"literal\"");
    }
  }
  const CoherentFrame frame_a(space.a);
  const CoherentFrame frame_b(space.b);
  const BipartitePhaseFunction f = resolve_bipartite_function(function_spec(spec), space);
  const KrausChannel ch = kraus_from_function(frame_a, frame_b, f, scaling);
  const double defect = completeness_defect(ch);

  Json report = Json::object();
  report["dim_a"] = space.a.dim();
  report["dim_b"] = space.b.dim();
  report["scaling"] = scaling == KrausScaling::literal ? "literal" : "trace_preserving";
  report["kraus_count"] = ch.size();
  report["dropped"] = ch.dropped();
  report["completeness_defect"] = defect;
  report["trace_preserving"] = defect < opts.tol;
  report["choi_residual"] = choi_reconstruction_residual(frame_a, frame_b, ch);
  if (!opts.input_path.empty()) {
    const CMatrix input = operator_from_json(load_json_file(opts.input_path));
    if (input.rows() != space.a.dim()) spec_error("input state dimension does not match dim_a");
    const Operator output = apply_channel(ch, Operator(space.a, input));
    report["output_state"] = operator_to_json(output.matrix);
    report["output_trace"] = output.trace().real();
  }
  Output sink(opts, out);
  write_json(sink.stream(), report);
  return kSuccess;
}

}  // namespace

PhaseSpaceFunction resolve_function(const Json& spec, const HilbertSpace& space, FunctionRole role) {
  const std::string& kind = kind_of(spec);
  const int d = space.dim();
  std::optional<PhaseSpaceFunction> f;
  if (kind == "uniform") {
    const double fallback = role == FunctionRole::state ? 1.0 / d : 1.0;
    f = PhaseSpaceFunction::constant(space, number_or(spec, "value", fallback));
  } else if (kind == "delta") {
    const auto pos = read_position<2>(spec);
    f = PhaseSpaceFunction::delta(space, pos[0], pos[1], number_or(spec, "height", d));
  } else if (kind == "harmonic") {
    f = harmonic_function(space);
  } else if (kind == "gaussian") {
    const double sigma = number_or(spec, "sigma", 1.0);
    if (!(sigma > 0.0)) spec_error("gaussian \"sigma\" must be positive");
    long long cn = 0;
    long long ck = 0;
    if (spec.contains("center")) {
      const auto c = read_position<2>(Json{{"position", spec["center"]}});
      cn = c[0];
      ck = c[1];
    }
    f = PhaseSpaceFunction::from(space, [&](int n, int k) {
      const double x = space.center_mod(n - cn);
      const double y = space.center_mod(k - ck);
      return Complex(std::exp(-(x * x + y * y) / (2.0 * sigma * sigma)), 0.0);
    });
  } else if (kind == "grid") {
    if (!spec.contains("values")) spec_error("grid spec needs \"values\"");
    CMatrix v = read_grid(spec["values"], d, "values").cast<Complex>();
    if (spec.contains("imag")) v += Complex(0.0, 1.0) * read_grid(spec["imag"], d, "imag").cast<Complex>();
    f = PhaseSpaceFunction(space, std::move(v));
  } else if (kind == "product") {
    spec_error("\"product\" specs describe bipartite functions");
  } else {
    spec_error("unknown function kind \"" + kind + "\"");
  }
  if (wants_normalize(spec)) {
    const Complex total = f->total();
    if (std::abs(total.imag()) > 0.0 || !(total.real() > 0.0)) {
      spec_error("cannot normalize a function whose total is not positive and real");
    }
    f = Complex(d / total.real()) * *f;
  }
  return *f;
}

BipartitePhaseFunction resolve_bipartite_function(const Json& spec, const BipartiteSpace& space) {
  const std::string& kind = kind_of(spec);
  const int d = space.dim();
  std::optional<BipartitePhaseFunction> f;
  if (kind == "uniform") {
    f = BipartitePhaseFunction::constant(space, number_or(spec, "value", 1.0 / d));
  } else if (kind == "delta") {
    const auto p = read_position<4>(spec);
    f = BipartitePhaseFunction::delta(space, p[0], p[1], p[2], p[3], number_or(spec, "height", d));
  } else if (kind == "grid") {
    if (!spec.contains("values") || !spec["values"].is_array()) spec_error("grid spec needs a flat \"values\" array");
    std::vector<double> v;
    for (const Json& x : spec["values"]) {
      if (!x.is_number()) spec_error("grid entries must be numbers");
      v.push_back(x.get<double>());
    }
    const std::size_t expected = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    if (v.size() != expected) spec_error("bipartite grid needs " + std::to_string(expected) + " values");
    f = BipartitePhaseFunction(space, std::move(v));
  } else if (kind == "product") {
    if (!spec.contains("a") || !spec.contains("b")) spec_error("product spec needs \"a\" and \"b\" sub-specs");
    f = BipartitePhaseFunction::product(resolve_function(spec["a"], space.a), resolve_function(spec["b"], space.b));
  } else {
    spec_error("unknown bipartite function kind \"" + kind + "\"");
  }
  if (wants_normalize(spec)) {
    const double total = f->total();
    if (!(total > 0.0)) spec_error("cannot normalize a function whose total is not positive");
    std::vector<double> v = f->values();
    for (double& x : v) x *= d / total;
    f = BipartitePhaseFunction(space, std::move(v));
  }
  return *f;
}

Json operator_to_json(const CMatrix& m) {
  Json j = Json::object();
  j["dim"] = m.rows();
  j["re"] = matrix_rows(m.real());
  j["im"] = matrix_rows(m.imag());
  return j;
}

CMatrix operator_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    spec_error("operator JSON needs an integer \"dim\"");
  }
  const int d = j["dim"].get<int>();
  if (d < 1) spec_error("operator dimension must be positive");
  if (!j.contains("re")) spec_error("operator JSON needs \"re\"");
  CMatrix m = read_grid(j["re"], d, "re").cast<Complex>();
  if (j.contains("im")) m += Complex(0.0, 1.0) * read_grid(j["im"], d, "im").cast<Complex>();
  return m;
}

std::string wigner_csv(const WignerGrid& grid) {
  std::string out = "n,k,value\n";
  char buf[64];
  for (int n : grid.space.indices()) {
    for (int k : grid.space.indices()) {
      std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", n, k, grid(n, k));
      out += buf;
    }
  }
  return out;
}

Json wigner_json(const WignerGrid& grid) {
  Json j = Json::object();
  j["dim"] = grid.space.dim();
  Json values = Json::array();
  for (int n : grid.space.indices())
    for (int k : grid.space.indices()) values.push_back(grid(n, k));
  j["values"] = std::move(values);
  return j;
}

Json report_to_json(const DimensionReport& report) {
  Json j = Json::object();
  j["dim"] = report.dim;
  for (const Check& c : report.checks) j[c.name] = c.value;
  Json checks = Json::array();
  for (const Check& c : report.checks) {
    Json cj = Json::object();
    cj["name"] = c.name;
    cj["value"] = c.value;
    cj["bound"] = c.threshold;
    cj["kind"] = c.upper_bound ? "below" : "above";
    cj["passed"] = c.passed();
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["skipped"] = report.skipped;
  j["passed"] = report.passed();
  return j;
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [](const std::string& s) -> long long {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size()) spec_error("invalid dimension \"" + s + "\"");
      return v;
    } catch (const std::logic_error&) {
      spec_error("invalid dimension \"" + s + "\"");
    }
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) spec_error("empty entry in dimension list");
    const auto dash = item.find('-', 1);
    if (dash != std::string::npos) {
      const long long lo = to_int(item.substr(0, dash));
      const long long hi = to_int(item.substr(dash + 1));
      if (lo > hi) spec_error("empty dimension range \"" + item + "\"");
      for (long long d = lo; d <= hi; ++d)
        if (d % 2 != 0) dims.push_back(require_odd_dim(d));
      if (lo == hi) require_odd_dim(lo);
    } else {
      dims.push_back(require_odd_dim(to_int(item)));
    }
  }
  if (dims.empty()) spec_error("no dimensions given");
  return dims;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite coherent-state frame quantization toolkit", "frameq"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--dim", opts.dim_text, "Odd Hilbert-space dimension");
  app.add_option("--dims", opts.dims_text, "Dimensions for verify, e.g. 3,5,7 or 3-11");
  app.add_option("--spec", opts.spec_path, "Job spec JSON file");
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", opts.out_path, "Output file (default: stdout)");
  app.add_option("--tol", opts.tol, "Invariant tolerance")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the invariant battery; exit 1 on any failure");
  auto* wig = app.add_subcommand("wigner", "Discrete Wigner function of rho_f");
  auto* quant = app.add_subcommand("quantize", "Quantize a phase-space function to an operator");
  auto* eig = app.add_subcommand("eigen", "Sign-alternation eigenbasis and fractional Fourier transform");
  eig->add_option("--alpha", opts.alpha, "Export F^alpha");
  auto* chan = app.add_subcommand("channel", "Kraus channel built from a bipartite function");
  chan->add_option("--input", opts.input_path, "Input state (operator JSON) on A");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (verify->parsed()) return cmd_verify(opts, out, err);
    if (wig->parsed()) {
      if (!app.get_option("--format")->count()) opts.format = "csv";
      return cmd_wigner(opts, out);
    }
    if (quant->parsed()) return cmd_quantize(opts, out);
    if (eig->parsed()) return cmd_eigen(opts, out);
    if (chan->parsed()) return cmd_channel(opts, out);
  } catch (const FrameError& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::ordering_failure: return kDegenerateSpectrum;
      case ErrorKind::invariant_violation: return kInvariantFailure;
      default: return kUsageError;
    }
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace frameq::cli
