#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "tracewitness/json_io.hpp"
#include "tracewitness/witnesses.hpp"

using namespace tracewitness;
using nlohmann::json;

TEST_CASE("matrix literal round-trips exactly") {
  Rng rng(3);
  const Matrix m = gaussian_matrix(rng, 3);
  const Matrix back = matrix_from_json(json::parse(matrix_to_json(m).dump()));
  CHECK((m - back).norm() == 0.0);  // shortest-round-trip doubles
}

TEST_CASE("matrix literal accepts a missing imaginary layer") {
  const Matrix m = matrix_from_json(json::parse(
      R"({"n": 2, "re": [[4, 0], [0, 1]]})"));
  CHECK(m(0, 0) == Complex(4, 0));
  CHECK(m(1, 1) == Complex(1, 0));
  CHECK(m(0, 1) == Complex(0, 0));
}

TEST_CASE("matrix literal rejects malformed input") {
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"re": [[1]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n": 0, "re": []})")),
                  ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(R"({"n": 2, "re": [[1, 2]]})")), ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(R"({"n": 2, "re": [[1, 2], [3]]})")),
      ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(R"({"n": 1, "re": [["x"]]})")), ParseError);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(
          R"({"n": 2, "re": [[1, 0], [0, 1]], "im": [[0]]})")),
      ParseError);
}

TEST_CASE("load_matrix reads a file and reports missing ones") {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/tw_test_matrix.json";
  {
    std::ofstream out(path);
    out << R"({"n": 2, "re": [[2, 1], [1, 3]], "im": [[0, 1], [-1, 0]]})";
  }
  const Matrix m = load_matrix(path);
  CHECK(m(0, 1) == Complex(1, 1));
  CHECK(m(1, 0) == Complex(1, -1));
  CHECK_THROWS_AS(load_matrix("/nonexistent/matrix.json"), ParseError);
}

TEST_CASE("witness report serialization carries full-precision strings") {
  const TraceFunctional phi(HermitianMatrix::diagonal2(2, 1));
  const WitnessReport report = bures_witness(phi);
  const json j = json::parse(witness_report_to_json(report).dump());
  CHECK(j["inequality"] == "bures-am");
  CHECK(j["violated"] == true);
  // decimal strings with >= 15 significant digits replay exactly
  const double lhs = std::strtod(j["lhs"].get<std::string>().c_str(), nullptr);
  const double rhs = std::strtod(j["rhs"].get<std::string>().c_str(), nullptr);
  const double margin =
      std::strtod(j["margin"].get<std::string>().c_str(), nullptr);
  CHECK(lhs == report.lhs);
  CHECK(rhs == report.rhs);
  CHECK(margin == report.margin);
  // stored matrices replay the margin independently
  const Matrix a = matrix_from_json(j["A"]);
  const Matrix b = matrix_from_json(j["B"]);
  const Matrix s = matrix_from_json(j["S"]);
  const MarginBreakdown replay = recompute_margin(
      InequalityKind::BuresAM, TraceFunctional(hermitize(s)), hermitize(a),
      hermitize(b));
  CHECK(replay.margin == doctest::Approx(report.margin).epsilon(1e-14));
}

TEST_CASE("inequality and mean names round-trip") {
  for (InequalityKind kind :
       {InequalityKind::BuresAM, InequalityKind::SgmCauchySchwarz,
        InequalityKind::SgmSquared, InequalityKind::SgmArithmetic,
        InequalityKind::QuadSquare, InequalityKind::OverlapFidelity}) {
    const auto parsed = inequality_from_name(inequality_name(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  CHECK_FALSE(inequality_from_name("nonsense").has_value());
  for (MeanKind kind : {MeanKind::Arithmetic, MeanKind::MetricGeometric,
                        MeanKind::SpectralGeometric, MeanKind::BuresCross}) {
    const auto parsed = mean_kind_from_name(mean_kind_name(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
}

TEST_CASE("family serialization exposes all six closed forms") {
  const json j = json::parse(family_to_json(sgm_square_family(0.1)).dump());
  for (const char* key :
       {"a", "x", "x_sqrt", "b", "spectral_mean", "spectral_mean_squared"}) {
    CHECK(j.contains(key));
    CHECK(matrix_from_json(j[key]).rows() == 2);
  }
  CHECK(j["epsilon"] == doctest::Approx(0.1));
}

TEST_CASE("suite report JSON and CSV carry one row per check") {
  SamplerConfig cfg;
  cfg.dim = 2;
  cfg.count = 10;
  cfg.seed = 3;
  const SuiteReport report = run_suite(cfg);
  const json j = json::parse(suite_report_to_json(report).dump());
  CHECK(j["pass"] == report.pass);
  CHECK(j["checks"].size() == report.checks.size());
  const std::string csv = suite_report_to_csv(report);
  const std::size_t rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == report.checks.size() + 1);  // header + one per check
}
