// pybind11 bindings: numpy arrays in, numpy arrays / report objects out.
// Inputs are symmetrized through the same gate as the C++ API, so a matrix
// that is not numerically Hermitian raises instead of being silently fixed.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tracewitness/json_io.hpp"

namespace py = pybind11;
namespace tw = tracewitness;

namespace {

tw::HermitianMatrix as_hermitian(const tw::Matrix& m) { return tw::hermitize(m); }

tw::TraceFunctional as_functional(const tw::Matrix& s) {
  return tw::TraceFunctional(tw::hermitize(s));
}

std::string definiteness_name(tw::Definiteness tag) {
  switch (tag) {
    case tw::Definiteness::PositiveDefinite:
      return "positive-definite";
    case tw::Definiteness::PositiveSemidefinite:
      return "positive-semidefinite";
    case tw::Definiteness::Indefinite:
      return "indefinite";
  }
  return "unknown";
}

}  // namespace

PYBIND11_MODULE(_tracewitness, m) {
  m.doc() =
      "Matrix means on positive definite matrices, quantum fidelity, and "
      "constructive witnesses for trace-characterizing inequalities.";

  static py::exception<tw::Error> exc(m, "TracewitnessError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const tw::Error& e) {
      exc(e.what());
    }
  });

  // ---- linalg -----------------------------------------------------------

  m.def(
      "hermitize", [](const tw::Matrix& x) { return as_hermitian(x).mat(); },
      py::arg("matrix"),
      "Symmetrize (M + M*)/2; raises when the anti-Hermitian part is large.");

  m.def(
      "eig_hermitian",
      [](const tw::Matrix& x) {
        const tw::EigenDecomposition es = tw::eig_hermitian(as_hermitian(x));
        return py::make_tuple(es.eigenvalues, es.eigenvectors);
      },
      py::arg("matrix"),
      "Ascending eigenvalues and orthonormal eigenvector columns.");

  m.def(
      "matrix_sqrt",
      [](const tw::Matrix& x) { return tw::matrix_sqrt(as_hermitian(x)).mat(); },
      py::arg("matrix"));
  m.def(
      "matrix_inv_sqrt",
      [](const tw::Matrix& x) {
        return tw::matrix_inv_sqrt(as_hermitian(x)).mat();
      },
      py::arg("matrix"));
  m.def(
      "matrix_power",
      [](const tw::Matrix& x, double p) {
        return tw::matrix_function(as_hermitian(x), tw::SpectralMap::power(p))
            .mat();
      },
      py::arg("matrix"), py::arg("exponent"));

  m.def(
      "classify_definiteness",
      [](const tw::Matrix& x) {
        const tw::DefinitenessClass c = tw::classify_definiteness(as_hermitian(x));
        return py::make_tuple(definiteness_name(c.tag), c.min_eigenvalue);
      },
      py::arg("matrix"), "Returns (tag, min_eigenvalue).");

  // ---- means ------------------------------------------------------------

  m.def(
      "arithmetic_mean",
      [](const tw::Matrix& a, const tw::Matrix& b) {
        return tw::arithmetic_mean(as_hermitian(a), as_hermitian(b)).mat();
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "metric_geomean",
      [](const tw::Matrix& a, const tw::Matrix& b) {
        return tw::metric_geomean(as_hermitian(a), as_hermitian(b)).mat();
      },
      py::arg("a"), py::arg("b"),
      "Kubo-Ando geometric mean A # B.");
  m.def(
      "spectral_geomean",
      [](const tw::Matrix& a, const tw::Matrix& b) {
        return tw::spectral_geomean(as_hermitian(a), as_hermitian(b)).mat();
      },
      py::arg("a"), py::arg("b"),
      "Fiedler-Ptak spectral geometric mean (A^{-1} # B)^{1/2} A "
      "(A^{-1} # B)^{1/2}.");
  m.def(
      "riccati_solution",
      [](const tw::Matrix& a, const tw::Matrix& b) {
        return tw::riccati_solution(as_hermitian(a), as_hermitian(b)).mat();
      },
      py::arg("a"), py::arg("b"), "The PD solution X of X A X = B.");
  m.def(
      "bures_cross",
      [](const tw::Matrix& a, const tw::Matrix& b) {
        return tw::bures_cross(as_hermitian(a), as_hermitian(b)).mat();
      },
      py::arg("a"), py::arg("b"), "(A^{1/2} B A^{1/2})^{1/2}.");

  m.def(
      "fidelity_amplitude",
      [](const tw::Matrix& rho, const tw::Matrix& sigma) {
        return tw::fidelity_amplitude(tw::DensityMatrix(as_hermitian(rho)),
                                      tw::DensityMatrix(as_hermitian(sigma)));
      },
      py::arg("rho"), py::arg("sigma"));
  m.def(
      "fidelity",
      [](const tw::Matrix& rho, const tw::Matrix& sigma) {
        return tw::fidelity(tw::DensityMatrix(as_hermitian(rho)),
                            tw::DensityMatrix(as_hermitian(sigma)));
      },
      py::arg("rho"), py::arg("sigma"), "Uhlmann fidelity F = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.");

  // ---- functionals --------------------------------------------------------

  m.def(
      "apply_functional",
      [](const tw::Matrix& s, const tw::Matrix& x) {
        return tw::apply(as_functional(s), as_hermitian(x));
      },
      py::arg("s"), py::arg("x"), "phi(X) = Tr(S X) as a real number.");
  m.def(
      "commutator_defect",
      [](const tw::Matrix& s, int sample_count, std::uint64_t seed) {
        return tw::commutator_defect(as_functional(s), sample_count, seed);
      },
      py::arg("s"), py::arg("sample_count") = 100, py::arg("seed") = 0);
  m.def(
      "rank_one_spread",
      [](const tw::Matrix& s, int sample_count, std::uint64_t seed) {
        return tw::rank_one_spread(as_functional(s), sample_count, seed);
      },
      py::arg("s"), py::arg("sample_count") = 100, py::arg("seed") = 0);

  py::class_<tw::TracialityVerdict>(m, "TracialityVerdict")
      .def_readonly("is_scalar", &tw::TracialityVerdict::is_scalar)
      .def_readonly("commutator_defect", &tw::TracialityVerdict::commutator_defect)
      .def_readonly("rank_one_spread", &tw::TracialityVerdict::rank_one_spread)
      .def_readonly("scalar_c", &tw::TracialityVerdict::scalar_c)
      .def("__repr__", [](const tw::TracialityVerdict& v) {
        return "TracialityVerdict(is_scalar=" +
               std::string(v.is_scalar ? "True" : "False") +
               ", scalar_c=" + tw::format_double(v.scalar_c) + ")";
      });

  m.def(
      "classify_traciality",
      [](const tw::Matrix& s, double tol, int sample_count, std::uint64_t seed) {
        return tw::classify_traciality(as_functional(s), tol, sample_count, seed);
      },
      py::arg("s"), py::arg("tol") = 1e-10, py::arg("sample_count") = 100,
      py::arg("seed") = 0);

  // ---- witnesses ----------------------------------------------------------

  py::class_<tw::WitnessReport>(m, "WitnessReport")
      .def_property_readonly(
          "inequality",
          [](const tw::WitnessReport& r) { return tw::inequality_name(r.kind); })
      .def_readonly("violated", &tw::WitnessReport::violated)
      .def_readonly("lhs", &tw::WitnessReport::lhs)
      .def_readonly("rhs", &tw::WitnessReport::rhs)
      .def_readonly("margin", &tw::WitnessReport::margin)
      .def_readonly("extras", &tw::WitnessReport::extras)
      .def_property_readonly(
          "s", [](const tw::WitnessReport& r) { return r.functional.density().mat(); })
      .def_property_readonly("a",
                             [](const tw::WitnessReport& r) { return r.a.mat(); })
      .def_property_readonly("b",
                             [](const tw::WitnessReport& r) { return r.b.mat(); })
      .def_property_readonly("theta",
                             [](const tw::WitnessReport& r) { return r.params.theta; })
      .def_property_readonly("delta",
                             [](const tw::WitnessReport& r) { return r.params.delta; })
      .def_property_readonly(
          "epsilon", [](const tw::WitnessReport& r) { return r.params.epsilon; })
      .def("to_json",
           [](const tw::WitnessReport& r) {
             return tw::witness_report_to_json(r).dump(2);
           })
      .def("__repr__", [](const tw::WitnessReport& r) {
        return "WitnessReport(" + tw::inequality_name(r.kind) +
               ", violated=" + (r.violated ? std::string("True") : "False") +
               ", margin=" + tw::format_double(r.margin) + ")";
      });

  m.def(
      "bures_witness",
      [](const tw::Matrix& s) { return tw::bures_witness(as_functional(s)); },
      py::arg("s"));
  m.def(
      "sgm_cs_witness",
      [](const tw::Matrix& s) { return tw::sgm_cs_witness(as_functional(s)); },
      py::arg("s"));
  m.def(
      "amean_witness",
      [](const tw::Matrix& s) { return tw::amean_witness(as_functional(s)); },
      py::arg("s"));
  m.def(
      "sgm_square_witness",
      [](const tw::Matrix& s) { return tw::sgm_square_witness(as_functional(s)); },
      py::arg("s"));
  m.def(
      "quad_square_witness",
      [](const tw::Matrix& s, const std::string& mode, int sample_count,
         std::uint64_t seed) {
        tw::QuadSquareMode m_ = mode == "trace-n" ? tw::QuadSquareMode::TraceN
                                                  : tw::QuadSquareMode::Density;
        if (mode != "trace-n" && mode != "density") {
          throw tw::InvalidConfig("mode must be 'density' or 'trace-n'");
        }
        return tw::quad_square_witness(as_functional(s), m_, sample_count, seed);
      },
      py::arg("s"), py::arg("mode"), py::arg("sample_count") = 500,
      py::arg("seed") = 0);

  m.def("eval_F",
        [](double theta, double delta, const tw::Matrix& s) {
          return tw::eval_F(theta, delta, as_hermitian(s));
        },
        py::arg("theta"), py::arg("delta"), py::arg("s"));
  m.def("expansion_F", &tw::expansion_F, py::arg("theta"), py::arg("delta"),
        py::arg("s"));
  m.def("sgm_cs_core_margin", &tw::sgm_cs_core_margin, py::arg("theta"),
        py::arg("delta"), py::arg("s"));
  m.def(
      "amean_key_margin",
      [](const tw::CVector& u, const tw::CVector& v, const tw::Matrix& s) {
        return tw::amean_key_margin(u, v, as_hermitian(s));
      },
      py::arg("u"), py::arg("v"), py::arg("s"));

  m.def(
      "sgm_square_family",
      [](double epsilon) {
        const tw::SgmSquareFamily f = tw::sgm_square_family(epsilon);
        py::dict d;
        d["epsilon"] = f.epsilon;
        d["a"] = f.a.mat();
        d["x"] = f.x.mat();
        d["x_sqrt"] = f.x_sqrt.mat();
        d["b"] = f.b.mat();
        d["spectral_mean"] = f.mean.mat();
        d["spectral_mean_squared"] = f.mean_sq.mat();
        return d;
      },
      py::arg("epsilon"),
      "The explicit 2x2 family A, X, X^{1/2}, B = XAX, A natural B and its "
      "square, all from closed forms.");

  m.def(
      "check_inequality",
      [](const std::string& ineq, const tw::Matrix& s, const tw::Matrix& a,
         const tw::Matrix& b) {
        const auto kind = tw::inequality_from_name(ineq);
        if (!kind) throw tw::InvalidConfig("unknown inequality: " + ineq);
        const tw::MarginBreakdown m_ =
            tw::recompute_margin(*kind, as_functional(s), as_hermitian(a),
                                 as_hermitian(b));
        return py::make_tuple(m_.lhs, m_.rhs, m_.margin);
      },
      py::arg("inequality"), py::arg("s"), py::arg("a"), py::arg("b"),
      "Evaluate one inequality on explicit matrices; returns (lhs, rhs, margin).");

  // ---- harness ------------------------------------------------------------

  py::class_<tw::CheckResult>(m, "CheckResult")
      .def_readonly("name", &tw::CheckResult::name)
      .def_readonly("samples", &tw::CheckResult::samples)
      .def_readonly("failures", &tw::CheckResult::failures)
      .def_readonly("worst_margin", &tw::CheckResult::worst_margin)
      .def_readonly("worst_index", &tw::CheckResult::worst_index)
      .def_readonly("seed", &tw::CheckResult::seed)
      .def_property_readonly("passed",
                             [](const tw::CheckResult& c) { return c.passed(); });

  py::class_<tw::SuiteReport>(m, "SuiteReport")
      .def_readonly("checks", &tw::SuiteReport::checks)
      .def_readonly("passed", &tw::SuiteReport::pass)
      .def("to_json",
           [](const tw::SuiteReport& r) {
             return tw::suite_report_to_json(r).dump(2);
           })
      .def("to_csv",
           [](const tw::SuiteReport& r) { return tw::suite_report_to_csv(r); })
      .def("__repr__", [](const tw::SuiteReport& r) {
        return "SuiteReport(passed=" +
               std::string(r.pass ? "True" : "False") + ", checks=" +
               std::to_string(r.checks.size()) + ")";
      });

  m.def(
      "run_suite",
      [](int dim, int count, std::uint64_t seed, double pd_shift,
         double cond_cap) {
        tw::SamplerConfig cfg;
        cfg.dim = dim;
        cfg.count = count;
        cfg.seed = seed;
        cfg.pd_shift = pd_shift;
        cfg.cond_cap = cond_cap;
        return tw::run_suite(cfg);
      },
      py::arg("dim"), py::arg("count"), py::arg("seed"),
      py::arg("pd_shift") = 1e-3, py::arg("cond_cap") = 1e12,
      "Run every module invariant with count samples per check.");

  m.def(
      "random_pd",
      [](int dim, std::uint64_t seed, double pd_shift, double cond_cap) {
        tw::SamplerConfig cfg;
        cfg.dim = dim;
        cfg.seed = seed;
        cfg.pd_shift = pd_shift;
        cfg.cond_cap = cond_cap;
        return tw::random_pd(cfg).mat();
      },
      py::arg("dim"), py::arg("seed"), py::arg("pd_shift") = 1e-3,
      py::arg("cond_cap") = 1e12);
  m.def(
      "random_unitary",
      [](int dim, std::uint64_t seed) {
        tw::SamplerConfig cfg;
        cfg.dim = dim;
        cfg.seed = seed;
        return tw::random_unitary(cfg);
      },
      py::arg("dim"), py::arg("seed"));
  m.def(
      "random_density",
      [](int dim, std::uint64_t seed) {
        tw::SamplerConfig cfg;
        cfg.dim = dim;
        cfg.seed = seed;
        return tw::random_density(cfg).matrix().mat();
      },
      py::arg("dim"), py::arg("seed"));

  m.def(
      "slope_estimate",
      [](const std::vector<double>& grid, const std::vector<double>& values) {
        return tw::slope_estimate(grid, values);
      },
      py::arg("grid"), py::arg("values"),
      "Least-squares slope of values against the grid.");

  m.attr("__version__") = "1.0.0";
}
