#include "tracewitness/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tracewitness {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json j;
  j["n"] = m.rows();
  ordered_json re = ordered_json::array();
  ordered_json im = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json re_row = ordered_json::array();
    ordered_json im_row = ordered_json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      re_row.push_back(m(i, k).real());
      im_row.push_back(m(i, k).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

namespace {

void parse_layer(const json& rows, Eigen::Index n, bool imag, Matrix& out,
                 const char* key) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n) {
    throw ParseError(std::string("matrix literal: \"") + key + "\" must be an " +
                     "array of n rows");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError(std::string("matrix literal: row ") +
                       std::to_string(i) + " of \"" + key +
                       "\" must have n entries");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!row[k].is_number()) {
        throw ParseError("matrix literal: entries must be numbers");
      }
      const double value = row[k].get<double>();
      out(i, k) += imag ? Complex(0.0, value) : Complex(value, 0.0);
    }
  }
}

}  // namespace

Matrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("re")) {
    throw ParseError("matrix literal: expected {\"n\": ..., \"re\": [[...]]}");
  }
  if (!j["n"].is_number_integer() || j["n"].get<int>() < 1) {
    throw ParseError("matrix literal: \"n\" must be a positive integer");
  }
  const Eigen::Index n = j["n"].get<Eigen::Index>();
  Matrix m = Matrix::Zero(n, n);
  parse_layer(j["re"], n, false, m, "re");
  if (j.contains("im")) parse_layer(j["im"], n, true, m, "im");
  return m;
}

Matrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return matrix_from_json(j);
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string inequality_name(InequalityKind kind) {
  switch (kind) {
    case InequalityKind::BuresAM:
      return "bures-am";
    case InequalityKind::SgmCauchySchwarz:
      return "sgm-cauchy-schwarz";
    case InequalityKind::SgmSquared:
      return "sgm-squared";
    case InequalityKind::SgmArithmetic:
      return "sgm-arithmetic";
    case InequalityKind::QuadSquare:
      return "quad-square";
    case InequalityKind::OverlapFidelity:
      return "overlap-fidelity";
  }
  return "unknown";
}

std::optional<InequalityKind> inequality_from_name(const std::string& name) {
  if (name == "bures-am") return InequalityKind::BuresAM;
  if (name == "sgm-cauchy-schwarz") return InequalityKind::SgmCauchySchwarz;
  if (name == "sgm-squared") return InequalityKind::SgmSquared;
  if (name == "sgm-arithmetic") return InequalityKind::SgmArithmetic;
  if (name == "quad-square") return InequalityKind::QuadSquare;
  if (name == "overlap-fidelity") return InequalityKind::OverlapFidelity;
  return std::nullopt;
}

std::string mean_kind_name(MeanKind kind) {
  switch (kind) {
    case MeanKind::Arithmetic:
      return "arithmetic";
    case MeanKind::MetricGeometric:
      return "metric";
    case MeanKind::SpectralGeometric:
      return "spectral";
    case MeanKind::BuresCross:
      return "bures-cross";
  }
  return "unknown";
}

std::optional<MeanKind> mean_kind_from_name(const std::string& name) {
  if (name == "arithmetic") return MeanKind::Arithmetic;
  if (name == "metric") return MeanKind::MetricGeometric;
  if (name == "spectral") return MeanKind::SpectralGeometric;
  if (name == "bures-cross") return MeanKind::BuresCross;
  return std::nullopt;
}

ordered_json witness_report_to_json(const WitnessReport& report) {
  ordered_json j;
  j["inequality"] = inequality_name(report.kind);
  j["violated"] = report.violated;
  j["lhs"] = format_double(report.lhs);
  j["rhs"] = format_double(report.rhs);
  j["margin"] = format_double(report.margin);
  j["violation_tolerance"] = format_double(violation_tolerance(report.rhs));
  ordered_json params;
  params["theta"] = report.params.theta;
  params["delta"] = report.params.delta;
  params["phi_angle"] = report.params.phi_angle;
  params["lambda"] = report.params.lambda;
  params["mu"] = report.params.mu;
  params["epsilon"] = report.params.epsilon;
  j["params"] = std::move(params);
  if (!report.extras.empty()) {
    ordered_json extras;
    for (const auto& [key, value] : report.extras) extras[key] = value;
    j["extras"] = std::move(extras);
  }
  j["S"] = matrix_to_json(report.functional.density().mat());
  j["A"] = matrix_to_json(report.a.mat());
  j["B"] = matrix_to_json(report.b.mat());
  return j;
}

ordered_json suite_report_to_json(const SuiteReport& report) {
  ordered_json j;
  ordered_json cfg;
  cfg["dim"] = report.config.dim;
  cfg["seed"] = report.config.seed;
  cfg["count"] = report.config.count;
  cfg["pd_shift"] = report.config.pd_shift;
  cfg["cond_cap"] = report.config.cond_cap;
  j["config"] = std::move(cfg);
  j["pass"] = report.pass;
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : report.checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["samples"] = c.samples;
    entry["failures"] = c.failures;
    entry["worst_margin"] = format_double(c.worst_margin);
    entry["worst_index"] = c.worst_index;
    entry["seed"] = c.seed;
    entry["pass"] = c.passed();
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string suite_report_to_csv(const SuiteReport& report) {
  std::ostringstream os;
  os << "check,samples,failures,worst_margin\n";
  for (const CheckResult& c : report.checks) {
    os << c.name << "," << c.samples << "," << c.failures << ","
       << format_double(c.worst_margin) << "\n";
  }
  return os.str();
}

ordered_json family_to_json(const SgmSquareFamily& family) {
  ordered_json j;
  j["epsilon"] = family.epsilon;
  j["a"] = matrix_to_json(family.a.mat());
  j["x"] = matrix_to_json(family.x.mat());
  j["x_sqrt"] = matrix_to_json(family.x_sqrt.mat());
  j["b"] = matrix_to_json(family.b.mat());
  j["spectral_mean"] = matrix_to_json(family.mean.mat());
  j["spectral_mean_squared"] = matrix_to_json(family.mean_sq.mat());
  return j;
}

}  // namespace tracewitness
