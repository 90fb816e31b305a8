// tracewitness CLI: compute matrix means, search for trace-inequality
// witnesses, run the randomized verification suite, emit reports.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tracewitness/json_io.hpp"
#include "tracewitness/log.hpp"

namespace tw = tracewitness;

namespace {

enum ExitCode : int {
  kOk = 0,
  kExpectedViolationMissing = 1,
  kInputError = 2,
  kNumericalError = 3,
};

void print_matrix(std::ostream& os, const tw::Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      os << (j ? ", " : " ") << tw::format_double(m(i, j).real());
      if (m(i, j).imag() != 0.0) {
        os << (m(i, j).imag() < 0 ? " - " : " + ")
           << tw::format_double(std::abs(m(i, j).imag())) << "i";
      }
    }
    os << " ]\n";
  }
}

void write_output(const nlohmann::ordered_json& j, const std::string& out_path) {
  if (out_path.empty()) return;
  std::ofstream out(out_path);
  if (!out) throw tw::ParseError("cannot open output file: " + out_path);
  out << j.dump(2) << "\n";
}

tw::HermitianMatrix load_hermitian(const std::string& path) {
  return tw::hermitize(tw::load_matrix(path));
}

struct MeanArgs {
  std::string kind, a_path, b_path, out;
  bool json = false;
};

struct WitnessArgs {
  std::string ineq, s_path, out, mode = "auto";
  std::optional<std::uint64_t> seed;
  int sample_count = 500;
  bool json = false;
  bool expect_violation = false;
};

struct CheckArgs {
  std::string ineq, a_path, b_path, s_path, out;
  bool json = false;
};

struct SuiteArgs {
  int dim = 2;
  int count = 100;
  std::uint64_t seed = 0;
  std::string out, csv;
  bool json = false;
};

struct FamilyArgs {
  double epsilon = 0.1;
  std::string out;
  bool json = false;
};

struct FidelityArgs {
  std::string rho_path, sigma_path, out;
  bool json = false;
};

int run_mean(const MeanArgs& args) {
  const auto kind = tw::mean_kind_from_name(args.kind);
  if (!kind) {
    std::cerr << "unknown mean kind: " << args.kind
              << " (expected arithmetic|metric|spectral|bures-cross)\n";
    return kInputError;
  }
  const tw::HermitianMatrix a = load_hermitian(args.a_path);
  const tw::HermitianMatrix b = load_hermitian(args.b_path);
  const tw::HermitianMatrix result = tw::compute_mean(*kind, a, b);
  const nlohmann::ordered_json j = tw::matrix_to_json(result.mat());
  write_output(j, args.out);
  if (args.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << args.kind << " mean:\n";
    print_matrix(std::cout, result.mat());
  }
  return kOk;
}

int run_fidelity(const FidelityArgs& args) {
  const tw::DensityMatrix rho(load_hermitian(args.rho_path));
  const tw::DensityMatrix sigma(load_hermitian(args.sigma_path));
  const double amplitude = tw::fidelity_amplitude(rho, sigma);
  const double fid = amplitude * amplitude;
  nlohmann::ordered_json j;
  j["fidelity_amplitude"] = tw::format_double(amplitude);
  j["fidelity"] = tw::format_double(fid);
  write_output(j, args.out);
  if (args.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "fidelity amplitude: " << tw::format_double(amplitude)
              << "\nfidelity:           " << tw::format_double(fid) << "\n";
  }
  return kOk;
}

int run_witness(const WitnessArgs& args) {
  const auto kind = tw::inequality_from_name(args.ineq);
  if (!kind) {
    std::cerr << "unknown inequality: " << args.ineq << "\n";
    return kInputError;
  }
  const tw::TraceFunctional phi(load_hermitian(args.s_path));

  tw::WitnessReport report = [&] {
    switch (*kind) {
      case tw::InequalityKind::BuresAM:
        return tw::bures_witness(phi);
      case tw::InequalityKind::SgmCauchySchwarz:
        return tw::sgm_cs_witness(phi);
      case tw::InequalityKind::SgmSquared:
        return tw::sgm_square_witness(phi);
      case tw::InequalityKind::SgmArithmetic:
        return tw::amean_witness(phi);
      case tw::InequalityKind::QuadSquare: {
        tw::QuadSquareMode mode;
        if (args.mode == "density") {
          mode = tw::QuadSquareMode::Density;
        } else if (args.mode == "trace-n") {
          mode = tw::QuadSquareMode::TraceN;
        } else {
          const double tr = tw::trace(phi.density());
          mode = std::abs(tr - 1.0) <= std::abs(tr - phi.dim())
                     ? tw::QuadSquareMode::Density
                     : tw::QuadSquareMode::TraceN;
        }
        if (!args.seed) {
          throw tw::InvalidConfig(
              "the quad-square witness may run a randomized sweep; "
              "pass an explicit --seed");
        }
        return tw::quad_square_witness(phi, mode, args.sample_count,
                                       *args.seed);
      }
      case tw::InequalityKind::OverlapFidelity:
        throw tw::InvalidConfig(
            "overlap-fidelity has no witness construction: the bound "
            "Tr(rho sigma) <= F(rho, sigma) holds for every pair of states");
    }
    throw tw::InvalidConfig("unknown inequality kind");
  }();

  const nlohmann::ordered_json j = tw::witness_report_to_json(report);
  write_output(j, args.out);
  if (args.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "inequality: " << args.ineq << "\n"
              << "violated:   " << (report.violated ? "true" : "false") << "\n"
              << "lhs:        " << tw::format_double(report.lhs) << "\n"
              << "rhs:        " << tw::format_double(report.rhs) << "\n"
              << "margin:     " << tw::format_double(report.margin) << "\n"
              << "epsilon:    " << tw::format_double(report.params.epsilon)
              << "\n";
  }
  if (args.expect_violation && !report.violated) {
    std::cerr << "expected a violation but the search found none\n";
    return kExpectedViolationMissing;
  }
  return kOk;
}

int run_check(const CheckArgs& args) {
  const auto kind = tw::inequality_from_name(args.ineq);
  if (!kind) {
    std::cerr << "unknown inequality: " << args.ineq << "\n";
    return kInputError;
  }
  const tw::TraceFunctional phi(load_hermitian(args.s_path));
  const tw::HermitianMatrix a = load_hermitian(args.a_path);
  const tw::HermitianMatrix b = load_hermitian(args.b_path);
  const tw::MarginBreakdown m = tw::recompute_margin(*kind, phi, a, b);
  const bool violated = m.margin > tw::violation_tolerance(m.rhs);
  nlohmann::ordered_json j;
  j["inequality"] = args.ineq;
  j["violated"] = violated;
  j["lhs"] = tw::format_double(m.lhs);
  j["rhs"] = tw::format_double(m.rhs);
  j["margin"] = tw::format_double(m.margin);
  write_output(j, args.out);
  if (args.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "inequality: " << args.ineq << "\n"
              << "violated:   " << (violated ? "true" : "false") << "\n"
              << "lhs:        " << tw::format_double(m.lhs) << "\n"
              << "rhs:        " << tw::format_double(m.rhs) << "\n"
              << "margin:     " << tw::format_double(m.margin) << "\n";
  }
  return kOk;
}

int run_suite_cmd(const SuiteArgs& args) {
  tw::SamplerConfig cfg;
  cfg.dim = args.dim;
  cfg.count = args.count;
  cfg.seed = args.seed;
  const tw::SuiteReport report = tw::run_suite(cfg);
  const nlohmann::ordered_json j = tw::suite_report_to_json(report);
  write_output(j, args.out);
  if (!args.csv.empty()) {
    std::ofstream out(args.csv);
    if (!out) throw tw::ParseError("cannot open csv file: " + args.csv);
    out << tw::suite_report_to_csv(report);
  }
  if (args.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%-38s %8s %8s %14s\n", "check", "samples", "failures",
                "worst margin");
    for (const tw::CheckResult& c : report.checks) {
      std::printf("%-38s %8d %8d %14.6e\n", c.name.c_str(), c.samples,
                  c.failures, c.worst_margin);
    }
    std::printf("suite: %s\n", report.pass ? "PASS" : "FAIL");
  }
  return kOk;
}

int run_family(const FamilyArgs& args) {
  const tw::SgmSquareFamily family = tw::sgm_square_family(args.epsilon);
  const nlohmann::ordered_json j = tw::family_to_json(family);
  write_output(j, args.out);
  if (args.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "epsilon = " << tw::format_double(family.epsilon) << "\n";
    std::cout << "A:\n";
    print_matrix(std::cout, family.a.mat());
    std::cout << "X:\n";
    print_matrix(std::cout, family.x.mat());
    std::cout << "X^{1/2}:\n";
    print_matrix(std::cout, family.x_sqrt.mat());
    std::cout << "B = X A X:\n";
    print_matrix(std::cout, family.b.mat());
    std::cout << "A natural B:\n";
    print_matrix(std::cout, family.mean.mat());
    std::cout << "(A natural B)^2:\n";
    print_matrix(std::cout, family.mean_sq.mat());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "matrix means on positive definite matrices and constructive "
      "witnesses for trace-characterizing inequalities"};
  app.require_subcommand(1);

  MeanArgs mean_args;
  CLI::App* mean = app.add_subcommand("mean", "compute a matrix mean");
  mean->add_option("--kind", mean_args.kind,
                   "arithmetic|metric|spectral|bures-cross")
      ->required();
  mean->add_option("--a", mean_args.a_path, "matrix literal file")->required();
  mean->add_option("--b", mean_args.b_path, "matrix literal file")->required();
  mean->add_option("--out", mean_args.out, "write result JSON to file");
  mean->add_flag("--json", mean_args.json, "print JSON instead of a grid");

  WitnessArgs witness_args;
  CLI::App* witness =
      app.add_subcommand("witness", "search for an inequality violation");
  witness->add_option("--ineq", witness_args.ineq,
                      "bures-am|sgm-cauchy-schwarz|sgm-squared|"
                      "sgm-arithmetic|quad-square")
      ->required();
  witness->add_option("--s", witness_args.s_path,
                      "functional density matrix file")
      ->required();
  witness->add_option("--out", witness_args.out,
                      "write the report JSON to file");
  witness->add_option("--mode", witness_args.mode,
                      "quad-square normalization: density|trace-n|auto");
  std::uint64_t seed_value = 0;
  CLI::Option* seed_opt =
      witness->add_option("--seed", seed_value,
                          "stream seed for randomized sweeps (required for "
                          "quad-square)");
  witness->add_option("--sample-count", witness_args.sample_count,
                      "samples for randomized sweeps");
  witness->add_flag("--json", witness_args.json, "print the report JSON");
  witness->add_flag("--expect-violation", witness_args.expect_violation,
                    "exit 1 when no violation is found");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand(
      "check", "evaluate one inequality on explicit matrices A, B, S");
  check->add_option("--ineq", check_args.ineq, "inequality name")->required();
  check->add_option("--a", check_args.a_path, "matrix literal file")->required();
  check->add_option("--b", check_args.b_path, "matrix literal file")->required();
  check->add_option("--s", check_args.s_path, "functional density matrix file")
      ->required();
  check->add_option("--out", check_args.out, "write result JSON to file");
  check->add_flag("--json", check_args.json, "print JSON");

  SuiteArgs suite_args;
  CLI::App* suite =
      app.add_subcommand("suite", "run the randomized verification suite");
  suite->add_option("--dim", suite_args.dim, "matrix dimension")->required();
  suite->add_option("--count", suite_args.count, "samples per check")
      ->required();
  suite->add_option("--seed", suite_args.seed, "master seed")->required();
  suite->add_option("--out", suite_args.out, "write the report JSON to file");
  suite->add_option("--csv", suite_args.csv, "write the flat CSV to file");
  suite->add_flag("--json", suite_args.json, "print the report JSON");

  FamilyArgs family_args;
  CLI::App* family = app.add_subcommand(
      "family", "emit the explicit 2x2 epsilon-family in closed form");
  family->add_option("--epsilon", family_args.epsilon, "family parameter > 0")
      ->required();
  family->add_option("--out", family_args.out, "write the family JSON to file");
  family->add_flag("--json", family_args.json, "print JSON");

  FidelityArgs fidelity_args;
  CLI::App* fidelity =
      app.add_subcommand("fidelity", "fidelity of two density matrices");
  fidelity->add_option("--rho", fidelity_args.rho_path, "density matrix file")
      ->required();
  fidelity->add_option("--sigma", fidelity_args.sigma_path,
                       "density matrix file")
      ->required();
  fidelity->add_option("--out", fidelity_args.out, "write result JSON to file");
  fidelity->add_flag("--json", fidelity_args.json, "print JSON");

  CLI11_PARSE(app, argc, argv);
  if (seed_opt->count() > 0) witness_args.seed = seed_value;

  try {
    if (mean->parsed()) return run_mean(mean_args);
    if (witness->parsed()) return run_witness(witness_args);
    if (check->parsed()) return run_check(check_args);
    if (suite->parsed()) return run_suite_cmd(suite_args);
    if (family->parsed()) return run_family(family_args);
    if (fidelity->parsed()) return run_fidelity(fidelity_args);
  } catch (const tw::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const tw::DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const tw::AsymmetryError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const tw::NotDensityError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const tw::NotPDError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const tw::NotPSDError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const tw::NormalizationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const tw::InvalidFunctional& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const tw::InvalidConfig& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const tw::Error& e) {
    // ConditionError, ConvergenceError, DomainError, SamplerExhausted, ...
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumericalError;
  }
  return kInputError;
}
