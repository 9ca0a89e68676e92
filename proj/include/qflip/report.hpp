#ifndef QFLIP_REPORT_HPP
#define QFLIP_REPORT_HPP

// Flat records for every experiment, serialized as JSON objects or as CSV
// rows with a fixed column order.

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qflip/experiments.hpp"
#include "qflip/majorization.hpp"

namespace qflip {

enum class Format { Json, Csv };

struct ReportRecord {
  std::string experiment;
  std::vector<std::pair<std::string, double>> parameters;
  SchmidtVector lambda_initial;
  SchmidtVector lambda_final;
  std::optional<CubicCoefficients> coefficients;
  std::string ordering;  // chain label; empty when not classified
  Verdict verdict = Verdict::Incomparable;
  double max_analytic_numeric_error = 0.0;
  bool degeneracy_flag = false;

  std::optional<double> parameter(std::string_view name) const {
    for (const auto& [k, v] : parameters) {
      if (k == name) return v;
    }
    return std::nullopt;
  }

  /// Re-derives the verdict from the embedded Schmidt vectors.
  bool self_consistent(double eps = kTieEps) const {
    return verdict == qflip::verdict(lambda_initial, lambda_final, eps);
  }
};

inline ReportRecord to_record(const FlipExperiment& e) {
  return {"general",
          {{"a", e.params.a()}, {"c", e.params.c()}, {"theta", e.params.theta()}},
          e.lambda_initial(),
          e.lambda_final(),
          e.coefficients,
          e.ordering ? e.ordering->label() : std::string{},
          e.verdict,
          e.max_analytic_numeric_error,
          e.degenerate};
}

inline ReportRecord to_record(const AxesExperiment& e) {
  const FlipParams p = axes_params();
  return {"axes",
          {{"a", p.a()}, {"c", p.c()}, {"theta", p.theta()}, {"chi", e.chi}, {"eta", e.eta}},
          e.lambda_initial,
          e.lambda_final,
          e.coefficients,
          e.ordering.label(),
          e.verdict,
          std::max(e.initial_error, e.final_error),
          false};
}

inline ReportRecord to_record(const FlipperExperiment& e) {
  return {"flipper",
          {{"seed", static_cast<double>(e.seed)},
           {"n_x", e.n_psi.x},
           {"n_y", e.n_psi.y},
           {"n_z", e.n_psi.z},
           {"bob_initial_x", e.bob_initial.x},
           {"bob_initial_y", e.bob_initial.y},
           {"bob_initial_z", e.bob_initial.z},
           {"bob_final_x", e.bob_final.x},
           {"bob_final_y", e.bob_final.y},
           {"bob_final_z", e.bob_final.z}},
          e.lambda_initial,
          e.lambda_final,
          std::nullopt,
          {},
          e.verdict,
          std::max(e.initial_error, e.final_error),
          false};
}

inline nlohmann::ordered_json to_json(const ReportRecord& r) {
  nlohmann::ordered_json j;
  j["experiment"] = r.experiment;
  auto& params = j["parameters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["lambda_initial"] = std::vector<double>(r.lambda_initial.probs().begin(),
                                            r.lambda_initial.probs().end());
  j["lambda_final"] = std::vector<double>(r.lambda_final.probs().begin(),
                                          r.lambda_final.probs().end());
  if (r.coefficients) {
    j["coefficients"] = {{"A", r.coefficients->A},
                         {"B", r.coefficients->B},
                         {"Bprime", r.coefficients->Bprime}};
  } else {
    j["coefficients"] = nullptr;
  }
  j["ordering"] = r.ordering;
  j["verdict"] = std::string(to_string(r.verdict));
  j["maxAnalyticNumericError"] = r.max_analytic_numeric_error;
  j["degeneracyFlag"] = r.degeneracy_flag;
  return j;
}

inline Verdict verdict_from_string(std::string_view s) {
  for (Verdict v : {Verdict::ForwardCertain, Verdict::BackwardCertain,
                    Verdict::Interconvertible, Verdict::Incomparable}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

inline ReportRecord record_from_json(const nlohmann::json& j) {
  ReportRecord r{j.at("experiment").get<std::string>(),
                 {},
                 SchmidtVector(j.at("lambda_initial").get<std::vector<double>>()),
                 SchmidtVector(j.at("lambda_final").get<std::vector<double>>()),
                 std::nullopt,
                 {}};
  for (const auto& [k, v] : j.at("parameters").items()) {
    r.parameters.emplace_back(k, v.get<double>());
  }
  if (const auto& c = j.at("coefficients"); !c.is_null()) {
    r.coefficients = CubicCoefficients{c.at("A").get<double>(), c.at("B").get<double>(),
                                       c.at("Bprime").get<double>()};
  }
  r.ordering = j.at("ordering").get<std::string>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.max_analytic_numeric_error = j.at("maxAnalyticNumericError").get<double>();
  r.degeneracy_flag = j.at("degeneracyFlag").get<bool>();
  return r;
}

inline constexpr std::string_view kCsvHeader =
    "a,c,theta,A,B,Bprime,alpha1,alpha2,alpha3,beta1,beta2,beta3,ordering,verdict,"
    "max_err,degenerate";

/// %.17g, enough digits to round-trip any double.
inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string csv_row(const ReportRecord& r) {
  std::string row;
  bool first = true;
  const auto field = [&row, &first](const std::string& s) {
    if (!first) row += ',';
    first = false;
    row += s;
  };
  const auto opt = [](std::optional<double> v) { return v ? format_number(*v) : std::string{}; };
  field(opt(r.parameter("a")));
  field(opt(r.parameter("c")));
  field(opt(r.parameter("theta")));
  field(r.coefficients ? format_number(r.coefficients->A) : "");
  field(r.coefficients ? format_number(r.coefficients->B) : "");
  field(r.coefficients ? format_number(r.coefficients->Bprime) : "");
  for (std::size_t i = 0; i < 3; ++i) field(format_number(r.lambda_initial[i]));
  for (std::size_t i = 0; i < 3; ++i) field(format_number(r.lambda_final[i]));
  field(r.ordering);
  field(std::string(to_string(r.verdict)));
  field(format_number(r.max_analytic_numeric_error));
  field(r.degeneracy_flag ? "true" : "false");
  return row;
}

/// One record as a JSON object line or as a CSV header plus row.
inline void write_record(std::ostream& os, const ReportRecord& r, Format f) {
  if (f == Format::Json) {
    os << to_json(r).dump() << '\n';
  } else {
    os << kCsvHeader << '\n' << csv_row(r) << '\n';
  }
}

}  // namespace qflip

#endif  // QFLIP_REPORT_HPP
