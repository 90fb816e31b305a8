// json_io.hpp - the shared matrix literal format and report serialization.
//
// Matrix literal: {"n": int, "re": [[...]], "im": [[...]]} with "im"
// optional (defaults to zero). Witness reports carry lhs/rhs/margin as
// decimal strings with 17 significant digits so that serialized reports
// replay exactly.
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tracewitness/harness.hpp"
#include "tracewitness/witnesses.hpp"

namespace tracewitness {

nlohmann::ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);  // throws ParseError

/// Reads a matrix literal from a file on disk.
Matrix load_matrix(const std::string& path);

/// Shortest-but-exact decimal form (17 significant digits).
std::string format_double(double value);

std::string inequality_name(InequalityKind kind);
std::optional<InequalityKind> inequality_from_name(const std::string& name);

std::string mean_kind_name(MeanKind kind);
std::optional<MeanKind> mean_kind_from_name(const std::string& name);

nlohmann::ordered_json witness_report_to_json(const WitnessReport& report);
nlohmann::ordered_json suite_report_to_json(const SuiteReport& report);
std::string suite_report_to_csv(const SuiteReport& report);
nlohmann::ordered_json family_to_json(const SgmSquareFamily& family);

}  // namespace tracewitness
