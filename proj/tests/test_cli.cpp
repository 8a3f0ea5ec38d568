#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "frameq/cli.hpp"

using namespace frameq;
using frameq::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("frameq_cli_test_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
             std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
  static inline int counter_ = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse_dims") {
  CHECK(cli::parse_dims("3,5,7") == std::vector<int>{3, 5, 7});
  CHECK(cli::parse_dims("3-11") == std::vector<int>{3, 5, 7, 9, 11});
  CHECK(cli::parse_dims("9") == std::vector<int>{9});
  CHECK_THROWS_AS(cli::parse_dims("4"), FrameError);
  CHECK_THROWS_AS(cli::parse_dims("1"), FrameError);
  CHECK_THROWS_AS(cli::parse_dims("3,,5"), FrameError);
  CHECK_THROWS_AS(cli::parse_dims("x"), FrameError);
  CHECK_THROWS_AS(cli::parse_dims("7-3"), FrameError);
}

TEST_CASE("verify") {
  const Result ok = run({"verify", "--dims", "3,5,7"});
  CHECK(ok.code == 0);
  const Json report = Json::parse(ok.out);
  CHECK(report["passed"] == true);
  REQUIRE(report["dims"].size() == 3);
  for (const Json& d : report["dims"]) {
    CHECK(d.contains("theorem_1_residual"));
    CHECK(d["theorem_1_residual"].get<double>() < 1e-10);
    CHECK(d["passed"] == true);
  }
  const Result even = run({"verify", "--dims", "4"});
  CHECK(even.code == 2);
  CHECK(even.err.find("dimension must be odd") != std::string::npos);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"--dims", "3", "verify"}).code == 0);
  // A tolerance nothing can meet turns into an invariant failure.
  const Result strict = run({"verify", "--dims", "3", "--tol", "1e-300"});
  CHECK(strict.code == 1);
  CHECK(Json::parse(strict.out)["passed"] == false);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "--dims", "3", "--format", "xml"}).code == 2);
  CHECK(run({"verify", "--dims", "3", "--tol", "-1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"quantize"}).code == 2);
  CHECK(run({"quantize", "--spec", "/nonexistent/spec.json"}).code == 2);
}

TEST_CASE("wigner") {
  TempDir tmp;
  const std::string uniform = tmp.write("u.json", R"({"dim": 3, "function": {"kind": "uniform"}})");
  const Result csv = run({"wigner", "--spec", uniform});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,k,value");
  int rows = 0;
  std::vector<std::pair<int, int>> order;
  while (std::getline(lines, line)) {
    int n = 0;
    int k = 0;
    double v = 0.0;
    REQUIRE(std::sscanf(line.c_str(), "%d,%d,%lf", &n, &k, &v) == 3);
    CHECK(std::abs(v - 1.0 / 9.0) < 1e-12);
    order.emplace_back(n, k);
    ++rows;
  }
  CHECK(rows == 9);
  CHECK(std::is_sorted(order.begin(), order.end()));
  CHECK(order.front() == std::pair<int, int>{-1, -1});

  const std::string delta = tmp.write("d.json", R"({"dim": 3, "function": {"kind": "delta", "position": [0, 0]}})");
  const Result js = run({"wigner", "--spec", delta, "--format", "json"});
  REQUIRE(js.code == 0);
  const Json grid = Json::parse(js.out);
  CHECK(grid["dim"] == 3);
  REQUIRE(grid["values"].size() == 9);
  double total = 0.0;
  for (const Json& v : grid["values"]) total += v.get<double>();
  CHECK(std::abs(total - 1.0) < 1e-9);

  const Result dim_override = run({"wigner", "--spec", delta, "--dim", "5"});
  CHECK(dim_override.code == 0);
  CHECK(std::count(dim_override.out.begin(), dim_override.out.end(), '\n') == 26);

  const std::string bad = tmp.write("bad.json", R"({"dim": 3, "function": {"kind": "uniform", "value": 1}})");
  CHECK(run({"wigner", "--spec", bad}).code == 2);
  const std::string even = tmp.write("even.json", R"({"dim": 4, "function": {"kind": "uniform"}})");
  CHECK(run({"wigner", "--spec", even}).code == 2);
  const std::string unknown = tmp.write("unk.json", R"({"dim": 3, "function": {"kind": "banana"}})");
  CHECK(run({"wigner", "--spec", unknown}).code == 2);
  const std::string product = tmp.write("p.json", R"({"dim": 3, "function": {"kind": "product"}})");
  CHECK(run({"wigner", "--spec", product}).code == 2);

  const std::string out = tmp.path("grid.csv");
  CHECK(run({"wigner", "--spec", uniform, "--out", out}).code == 0);
  CHECK(slurp(out) == csv.out);
}

TEST_CASE("quantize") {
  TempDir tmp;
  const std::string uniform = tmp.write("u.json", R"({"dim": 5, "function": {"kind": "uniform"}})");
  const Result id = run({"quantize", "--spec", uniform});
  REQUIRE(id.code == 0);
  const CMatrix m = cli::operator_from_json(Json::parse(id.out));
  CHECK(m.rows() == 5);
  CHECK((m - CMatrix::Identity(5, 5)).norm() < 1e-10);

  const std::string harm = tmp.write("h.json", R"({"dim": 3, "function": {"kind": "harmonic"}})");
  const Result h = run({"quantize", "--spec", harm});
  REQUIRE(h.code == 0);
  const CMatrix hm = cli::operator_from_json(Json::parse(h.out));
  CHECK((hm - hm.adjoint()).norm() < 1e-12);
  CHECK(std::abs(hm.trace() - 2.0) < 1e-9);

  // Operator JSON round-trips bit for bit.
  const std::string path = tmp.path("op.json");
  REQUIRE(run({"quantize", "--spec", harm, "--out", path}).code == 0);
  const CMatrix reread = cli::operator_from_json(Json::parse(slurp(path)));
  const Operator direct = quantize(CoherentFrame(HilbertSpace::from_dim(3)), harmonic_function(HilbertSpace::from_dim(3)));
  CHECK(reread == direct.matrix);

  const std::string malformed = tmp.write("m.json", R"({"dim": 3, "function": )");
  const Result bad = run({"quantize", "--spec", malformed});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("parse") != std::string::npos);

  const std::string grid = tmp.write(
      "g.json", R"({"dim": 3, "function": {"kind": "grid", "values": [[1,2,3],[4,5,6],[7,8,9]], "normalize": true}})");
  const Result g = run({"quantize", "--spec", grid});
  REQUIRE(g.code == 0);
  CHECK(std::abs(cli::operator_from_json(Json::parse(g.out)).trace() - 1.0) < 1e-12);
  const std::string short_grid = tmp.write("sg.json", R"({"dim": 3, "function": {"kind": "grid", "values": [[1,2,3]]}})");
  CHECK(run({"quantize", "--spec", short_grid}).code == 2);
}

TEST_CASE("function spec resolution") {
  const HilbertSpace sp = HilbertSpace::from_dim(5);
  const PhaseSpaceFunction u = cli::resolve_function(Json::parse(R"({"kind": "uniform"})"), sp);
  CHECK(std::abs(u.total() - 5.0) < 1e-12);
  const PhaseSpaceFunction one =
      cli::resolve_function(Json::parse(R"({"kind": "uniform"})"), sp, cli::FunctionRole::observable);
  CHECK(one(0, 0) == Complex(1.0));
  const PhaseSpaceFunction spike = cli::resolve_function(Json::parse(R"({"kind": "delta", "position": [1, -2]})"), sp);
  CHECK(spike(1, -2) == Complex(5.0));
  const PhaseSpaceFunction gauss =
      cli::resolve_function(Json::parse(R"({"kind": "gaussian", "sigma": 1.5, "center": [1, 0], "normalize": true})"), sp);
  CHECK(std::abs(gauss.total() - 5.0) < 1e-12);
  CHECK(gauss(1, 0).real() > gauss(0, 0).real());
  const PhaseSpaceFunction cplx = cli::resolve_function(
      Json::parse(R"({"kind": "grid", "values": [[0,0,0,0,0],[0,0,0,0,0],[0,0,1,0,0],[0,0,0,0,0],[0,0,0,0,0]],
                      "imag": [[0,0,0,0,0],[0,0,0,0,0],[0,0,2,0,0],[0,0,0,0,0],[0,0,0,0,0]]})"),
      sp);
  CHECK(cplx(0, 0) == Complex(1.0, 2.0));
  CHECK_THROWS_AS(cli::resolve_function(Json::parse(R"({"kind": "gaussian", "sigma": -1})"), sp), FrameError);
  CHECK_THROWS_AS(cli::resolve_function(Json::parse(R"({"kind": "delta"})"), sp), FrameError);
  CHECK_THROWS_AS(cli::resolve_function(Json::parse(R"({"position": [0, 0]})"), sp), FrameError);

  const BipartiteSpace pair{HilbertSpace::from_dim(3), HilbertSpace::from_dim(3)};
  const BipartitePhaseFunction prod = cli::resolve_bipartite_function(
      Json::parse(R"({"kind": "product", "a": {"kind": "uniform"}, "b": {"kind": "harmonic", "normalize": true}})"), pair);
  CHECK(std::abs(prod.total() - 9.0) < 1e-12);
  const BipartitePhaseFunction bd =
      cli::resolve_bipartite_function(Json::parse(R"({"kind": "delta", "position": [1, 0, -1, 1]})"), pair);
  CHECK(bd(1, 0, -1, 1) == 9.0);
  Json flat = Json::parse(R"({"kind": "grid", "values": []})");
  for (int i = 0; i < 81; ++i) flat["values"].push_back(i == 0 ? 9.0 : 0.0);
  CHECK(cli::resolve_bipartite_function(flat, pair)(-1, -1, -1, -1) == 9.0);
  CHECK_THROWS_AS(cli::resolve_bipartite_function(Json::parse(R"({"kind": "harmonic"})"), pair), FrameError);
}

TEST_CASE("eigen") {
  TempDir tmp;
  const Result r = run({"eigen", "--dim", "7"});
  REQUIRE(r.code == 0);
  const Json rep = Json::parse(r.out);
  CHECK(rep["eigenvalues"].size() == 7);
  for (int n = 0; n < 7; ++n) CHECK(rep["alternation_counts"][n] == n);
  CHECK(rep["fourier_levels"].size() == 7);
  CHECK_FALSE(rep.contains("frac_fourier"));

  const Result a4 = run({"eigen", "--dim", "7", "--alpha", "4"});
  REQUIRE(a4.code == 0);
  const CMatrix f4 = cli::operator_from_json(Json::parse(a4.out)["frac_fourier"]["matrix"]);
  CHECK((f4 - CMatrix::Identity(7, 7)).norm() < 1e-10);

  const std::string with_alpha = tmp.write("a.json", R"({"dim": 5, "alpha": 1})");
  const Result a1 = run({"eigen", "--spec", with_alpha});
  REQUIRE(a1.code == 0);
  const CMatrix f1 = cli::operator_from_json(Json::parse(a1.out)["frac_fourier"]["matrix"]);
  CHECK((f1 - dft(HilbertSpace::from_dim(5)).matrix).norm() < 1e-10);

  const std::string ident = tmp.write("i.json", R"({"dim": 5, "operator": "identity"})");
  const Result degenerate = run({"eigen", "--spec", ident});
  CHECK(degenerate.code == 3);
  CHECK(degenerate.err.find("ordering") != std::string::npos);
  const std::string fn = tmp.write("f.json", R"({"dim": 5, "operator": "function", "function": {"kind": "uniform"}})");
  CHECK(run({"eigen", "--spec", fn}).code == 3);
  const std::string bogus = tmp.write("b.json", R"({"dim": 5, "operator": "laplacian"})");
  CHECK(run({"eigen", "--spec", bogus}).code == 2);
  CHECK(run({"eigen"}).code == 2);
}

TEST_CASE("channel") {
  TempDir tmp;
  const std::string tp = tmp.write(
      "tp.json",
      R"({"dim_a": 3, "dim_b": 3, "function": {"kind": "product", "a": {"kind": "uniform"}, "b": {"kind": "harmonic", "normalize": true}}})");
  const Result r = run({"channel", "--spec", tp});
  REQUIRE(r.code == 0);
  const Json rep = Json::parse(r.out);
  CHECK(rep["completeness_defect"].get<double>() < 1e-10);
  CHECK(rep["trace_preserving"] == true);
  CHECK(rep["choi_residual"].get<double>() < 1e-10);
  CHECK(rep["kraus_count"].get<int>() + rep["dropped"].get<int>() == 81);

  const std::string delta = tmp.write("d.json", R"({"dim_a": 3, "dim_b": 3, "function": {"kind": "delta", "position": [0, 0, 0, 0]}})");
  const Result dr = run({"channel", "--spec", delta});
  CHECK(dr.code == 0);
  const Json drep = Json::parse(dr.out);
  CHECK(drep["completeness_defect"].get<double>() > 0.5);
  CHECK(drep["trace_preserving"] == false);
  CHECK(drep["choi_residual"].get<double>() < 1e-10);

  const std::string literal = tmp.write(
      "l.json", R"({"dim_a": 3, "dim_b": 5, "scaling": "literal", "function": {"kind": "uniform"}})");
  const Result lr = run({"channel", "--spec", literal});
  REQUIRE(lr.code == 0);
  CHECK(Json::parse(lr.out)["scaling"] == "literal");
  CHECK(Json::parse(lr.out)["choi_residual"].get<double>() < 1e-10);

  // Input state: |0><0| on A.
  Json input = cli::operator_to_json(CMatrix::Zero(3, 3));
  input["re"][1][1] = 1.0;
  const std::string in_path = tmp.write("in.json", input.dump());
  const Result with_input = run({"channel", "--spec", tp, "--input", in_path});
  REQUIRE(with_input.code == 0);
  const Json wrep = Json::parse(with_input.out);
  const CMatrix out = cli::operator_from_json(wrep["output_state"]);
  CHECK(std::abs(out.trace() - 1.0) < 1e-10);
  CHECK((out - out.adjoint()).norm() < 1e-12);

  const std::string wrong = tmp.write("w.json", cli::operator_to_json(CMatrix::Identity(5, 5)).dump());
  CHECK(run({"channel", "--spec", tp, "--input", wrong}).code == 2);
  const std::string bad_scaling = tmp.write("s.json", R"({"dim_a": 3, "dim_b": 3, "scaling": "loud", "function": {"kind": "uniform"}})");
  CHECK(run({"channel", "--spec", bad_scaling}).code == 2);
  const std::string invalid = tmp.write("v.json", R"({"dim_a": 3, "dim_b": 3, "function": {"kind": "uniform", "value": 1}})");
  CHECK(run({"channel", "--spec", invalid}).code == 2);
}

TEST_CASE("outputs are deterministic") {
  TempDir tmp;
  const std::string spec = tmp.write("g.json", R"({"dim": 7, "function": {"kind": "gaussian", "sigma": 1.2, "normalize": true}})");
  for (const char* fmt : {"csv", "json"}) {
    const Result a = run({"wigner", "--spec", spec, "--format", fmt});
    const Result b = run({"wigner", "--spec", spec, "--format", fmt});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run({"quantize", "--spec", spec}).out == run({"quantize", "--spec", spec}).out);
  CHECK(run({"verify", "--dims", "3"}).out == run({"verify", "--dims", "3"}).out);
}

TEST_CASE("CSV values use 17 significant digits") {
  const HilbertSpace sp = HilbertSpace::from_dim(3);
  WignerGrid grid{sp, RMatrix::Constant(3, 3, 0.1), 0.0};
  const std::string csv = cli::wigner_csv(grid);
  CHECK(csv.find("-1,-1,0.10000000000000001\n") != std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
}
