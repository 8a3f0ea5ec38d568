#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "frameq/channels.hpp"
#include "frameq/cli.hpp"
#include "frameq/error.hpp"
#include "frameq/gaussian.hpp"
#include "frameq/verify.hpp"

namespace py = pybind11;
using namespace frameq;

namespace {

HilbertSpace space_of(int d) { return HilbertSpace::from_dim(d); }

// Square arrays coming from numpy carry their own dimension.
HilbertSpace space_of(const CMatrix& m) {
  if (m.rows() != m.cols()) throw FrameError(ErrorKind::dimension_mismatch, "expected a square array");
  return HilbertSpace::from_dim(static_cast<int>(m.rows()));
}

BipartiteSpace pair_of(int da, int db) { return {space_of(da), space_of(db)}; }

BipartitePhaseFunction bipartite_from(int da, int db, const std::vector<double>& values) {
  return BipartitePhaseFunction(pair_of(da, db), values);
}

KrausScaling scaling_of(const std::string& name) {
  if (name == "trace_preserving") return KrausScaling::trace_preserving;
  if (name == "literal") return KrausScaling::literal;
  throw FrameError(ErrorKind::invalid_argument, "scaling must be 'trace_preserving' or 'literal'");
}

}  // namespace

PYBIND11_MODULE(_frameq, m) {
  m.doc() = "Coherent-state frame quantization on odd-dimensional Hilbert spaces";

  static py::handle frame_error = py::exception<FrameError>(m, "FrameError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const FrameError& e) {
      py::object err = py::reinterpret_borrow<py::object>(frame_error)(e.what());
      err.attr("kind") = to_string(e.kind());
      PyErr_SetObject(frame_error.ptr(), err.ptr());
    }
  });

  m.def("center_mod", [](long long n, int d) { return space_of(d).center_mod(n); }, py::arg("n"), py::arg("d"));
  m.def("dft", [](int d) { return dft(space_of(d)).matrix; }, py::arg("d"));
  m.def("position_op", [](int d) { return position_op(space_of(d)).matrix; }, py::arg("d"));
  m.def("momentum_op", [](int d) { return momentum_op(space_of(d)).matrix; }, py::arg("d"));
  m.def("parity_op", [](int d) { return parity_op(space_of(d)).matrix; }, py::arg("d"));

  m.def(
      "discrete_gaussian",
      [](int d, double kappa) { return discrete_gaussian(space_of(d), {kappa}).amplitudes; }, py::arg("d"),
      py::arg("kappa") = 1.0);
  m.def(
      "gaussian_fourier_residual", [](int d, double kappa) { return gaussian_fourier_residual(space_of(d), kappa); },
      py::arg("d"), py::arg("kappa"));
  m.def("vacuum_state", [](int d) { return vacuum_state(space_of(d)).amplitudes; }, py::arg("d"));

  m.def(
      "displacement", [](int d, long long n, long long k) { return displacement(space_of(d), n, k).matrix; },
      py::arg("d"), py::arg("n"), py::arg("k"));
  m.def(
      "coherent_state", [](int d, long long n, long long k) { return coherent_state(space_of(d), n, k).amplitudes; },
      py::arg("d"), py::arg("n"), py::arg("k"));
  m.def(
      "frame_states", [](int d) { return CoherentFrame(space_of(d)).states(); }, py::arg("d"),
      "d x d^2 matrix; column (n+s)*d + (k+s) holds |n;k>.");
  m.def("resolution_residual", [](int d) { return resolution_residual(CoherentFrame(space_of(d))); }, py::arg("d"));

  m.def(
      "quantize",
      [](const CMatrix& f) {
        const HilbertSpace sp = space_of(f);
        return quantize(CoherentFrame(sp), PhaseSpaceFunction(sp, f)).matrix;
      },
      py::arg("f"), "Lambda_f for a d x d grid f indexed [n+s, k+s].");
  m.def("harmonic_operator", [](int d) { return harmonic_operator(CoherentFrame(space_of(d))).matrix; }, py::arg("d"));
  m.def("harper_operator", [](int d) { return harper_operator(space_of(d)).matrix; }, py::arg("d"));
  m.def(
      "ordered_eigenbasis",
      [](const CMatrix& op, double tol) {
        const OrderedEigenbasis b = order_by_sign_alternations(Operator(space_of(op), op), tol);
        CMatrix vectors(op.rows(), static_cast<Eigen::Index>(b.vectors.size()));
        for (std::size_t i = 0; i < b.vectors.size(); ++i) vectors.col(static_cast<Eigen::Index>(i)) = b.vectors[i].amplitudes;
        py::dict out;
        out["vectors"] = vectors;
        out["eigenvalues"] = b.eigenvalues;
        out["alternation_counts"] = b.alternation_counts;
        return out;
      },
      py::arg("op"), py::arg("tol") = kDefaultTol, "Columns of 'vectors' are ordered by sign alternations.");
  m.def(
      "frac_fourier",
      [](int d, double alpha) {
        const HilbertSpace sp = space_of(d);
        return frac_fourier(order_by_sign_alternations(harmonic_operator(CoherentFrame(sp))), alpha).matrix;
      },
      py::arg("d"), py::arg("alpha"), "F^alpha on the eigenbasis of the quantized harmonic oscillator.");

  m.def(
      "density_from_function",
      [](const CMatrix& f, double tol) {
        const HilbertSpace sp = space_of(f);
        return density_from_function(CoherentFrame(sp), PhaseSpaceFunction(sp, f), tol).op().matrix;
      },
      py::arg("f"), py::arg("tol") = kDefaultTol);
  m.def(
      "purity",
      [](const CMatrix& rho) { return purity(DensityOperator::from_operator(Operator(space_of(rho), rho))); },
      py::arg("rho"));
  m.def(
      "wigner",
      [](const CMatrix& rho) {
        const WignerGrid w = wigner(Operator(space_of(rho), rho));
        return py::make_tuple(w.values, w.max_imag);
      },
      py::arg("rho"), "Returns (grid indexed [n+s, k+s], largest discarded imaginary part).");
  m.def(
      "wigner_theta_form",
      [](const CMatrix& f, int window) {
        const HilbertSpace sp = space_of(f);
        const DensityOperator rho = density_from_function(CoherentFrame(sp), PhaseSpaceFunction(sp, f));
        return wigner_theta_form(rho, window).values;
      },
      py::arg("f"), py::arg("window") = 4);

  m.def(
      "bipartite_density",
      [](int da, int db, const std::vector<double>& values) {
        const BipartiteSpace sp = pair_of(da, db);
        return bipartite_density(CoherentFrame(sp.a), CoherentFrame(sp.b), bipartite_from(da, db, values)).op.matrix;
      },
      py::arg("da"), py::arg("db"), py::arg("values"),
      "values are flat in ((n*d_B + m)*d_A + k)*d_B + l slot order.");
  m.def(
      "partial_trace_a",
      [](const CMatrix& rho, int da, int db) { return partial_trace_a(BipartiteOperator{pair_of(da, db), rho}).matrix; },
      py::arg("rho"), py::arg("da"), py::arg("db"));
  m.def(
      "partial_trace_b",
      [](const CMatrix& rho, int da, int db) { return partial_trace_b(BipartiteOperator{pair_of(da, db), rho}).matrix; },
      py::arg("rho"), py::arg("da"), py::arg("db"));

  m.def(
      "kraus_channel",
      [](int da, int db, const std::vector<double>& values, const std::string& scaling) {
        const BipartiteSpace sp = pair_of(da, db);
        const CoherentFrame fa(sp.a);
        const CoherentFrame fb(sp.b);
        const KrausChannel ch = kraus_from_function(fa, fb, bipartite_from(da, db, values), scaling_of(scaling));
        std::vector<CMatrix> kraus;
        for (const KrausTerm& t : ch.terms()) kraus.push_back(t.matrix);
        py::dict out;
        out["kraus"] = kraus;
        out["dropped"] = ch.dropped();
        out["completeness_defect"] = completeness_defect(ch);
        out["choi"] = choi_state(ch).matrix;
        out["choi_residual"] = choi_reconstruction_residual(fa, fb, ch);
        return out;
      },
      py::arg("da"), py::arg("db"), py::arg("values"), py::arg("scaling") = "trace_preserving");

  m.def(
      "verify",
      [](int d, double tol) { return cli::report_to_json(verify_dimension(d, tol)).dump(); }, py::arg("d"),
      py::arg("tol") = kDefaultTol, "Invariant battery for one dimension, as a JSON string.");
  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line front end in-process; returns (exit code, stdout, stderr).");
}
