// qflip: command-line front end for the flip / incomparability experiments.
//
// Exit codes: 0 success, 1 a checked claim failed, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qflip/qflip.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

constexpr double kLambdaTol = 1e-12;
constexpr double kBlochTol = 1e-12;

struct OutputOptions {
  std::string format = "json";
  std::string out;

  qflip::Format fmt() const {
    return format == "csv" ? qflip::Format::Csv : qflip::Format::Json;
  }
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "output file (default: stdout)");
}

/// Runs `body` against the requested output stream.
template <typename Fn>
int with_output(const OutputOptions& o, Fn&& body) {
  if (o.out.empty()) return body(std::cout);
  std::ofstream file(o.out);
  if (!file) {
    std::cerr << "error: cannot open " << o.out << " for writing\n";
    return kExitUsage;
  }
  const int rc = body(file);
  file.flush();
  if (!file) {
    std::cerr << "error: failed writing " << o.out << '\n';
    return kExitAssertion;
  }
  return rc;
}

int report_failures(const std::vector<std::string>& failures) {
  for (const auto& f : failures) std::cerr << "assertion failed: " << f << '\n';
  return failures.empty() ? kExitOk : kExitAssertion;
}

int run_axes(double chi, double eta, const OutputOptions& o) {
  const auto e = qflip::axes_experiment(chi, eta);
  std::vector<std::string> failures;
  if (e.initial_error > kLambdaTol) failures.push_back("initial Schmidt vector is not (2/3,1/6,1/6)");
  if (e.final_error > kLambdaTol) failures.push_back("flipped Schmidt vector differs from expected");
  if (e.verdict != qflip::Verdict::Incomparable) {
    failures.push_back("verdict is " + std::string(qflip::to_string(e.verdict)));
  }
  return with_output(o, [&](std::ostream& os) {
    qflip::write_record(os, qflip::to_record(e), o.fmt());
    return report_failures(failures);
  });
}

int run_flipper(std::uint64_t seed, const OutputOptions& o) {
  const auto e = qflip::flipper_experiment(seed);
  std::vector<std::string> failures;
  if (e.initial_error > kBlochTol) failures.push_back("Bob's qubit is not +0.02 n_psi");
  if (e.final_error > kBlochTol) failures.push_back("Bob's qubit is not -0.02 n_psi after conversion");
  if (e.verdict != qflip::Verdict::Incomparable) {
    failures.push_back("verdict is " + std::string(qflip::to_string(e.verdict)));
  }
  return with_output(o, [&](std::ostream& os) {
    qflip::write_record(os, qflip::to_record(e), o.fmt());
    return report_failures(failures);
  });
}

int run_general(double a, double c, double theta, double margin, const OutputOptions& o) {
  const qflip::FlipParams p(a, c, theta, qflip::ParamMode::Degenerate);
  const auto e = qflip::general_flip_experiment(p, margin);
  std::vector<std::string> failures;
  if (e.max_analytic_numeric_error > qflip::kSpectrumAgreementTol) {
    failures.push_back("closed-form roots disagree with eigenvalues by " +
                       qflip::format_number(e.max_analytic_numeric_error));
  }
  if (!e.degenerate) {
    if (e.verdict != qflip::Verdict::Incomparable) {
      failures.push_back("verdict is " + std::string(qflip::to_string(e.verdict)));
    }
    if (!e.ordering) failures.push_back("root ordering not classified: " + e.ordering_error);
  }
  return with_output(o, [&](std::ostream& os) {
    qflip::write_record(os, qflip::to_record(e), o.fmt());
    return report_failures(failures);
  });
}

int run_sweep(const qflip::SweepConfig& cfg, const OutputOptions& o) {
  const auto result = qflip::run_sweep(cfg);
  return with_output(o, [&](std::ostream& os) {
    qflip::write_sweep(os, result, cfg.format);
    const auto& s = result.summary;
    std::cerr << "swept " << s.grid_points << " points, " << s.evaluated
              << " non-degenerate, " << s.violations() << " violations\n";
    return s.violations() == 0 ? kExitOk : kExitAssertion;
  });
}

int run_check_pair(const std::vector<double>& lhs, const std::vector<double>& rhs) {
  const qflip::SchmidtVector l(lhs), r(rhs);
  nlohmann::ordered_json j;
  j["lhs"] = std::vector<double>(l.probs().begin(), l.probs().end());
  j["rhs"] = std::vector<double>(r.probs().begin(), r.probs().end());
  j["lhs_majorized_by_rhs"] = qflip::majorizes(l, r);
  j["rhs_majorized_by_lhs"] = qflip::majorizes(r, l);
  j["verdict"] = std::string(qflip::to_string(qflip::verdict(l, r)));
  j["entropy_lhs"] = qflip::entanglement_entropy(l);
  j["entropy_rhs"] = qflip::entanglement_entropy(r);
  try {
    const auto c = qflip::incomparability_conditions_3dim(l, r);
    j["three_dim"] = {{"crossing", c.crossing}, {"chain", c.chain},
                      {"incomparable", c.incomparable()}};
  } catch (const qflip::TieDegenerateError&) {
    j["three_dim"] = nullptr;
  }
  std::cout << j.dump() << '\n';
  return kExitOk;
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("QFLIP_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid QFLIP_JOBS='" << env << "'\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flip / LOCC-incomparability verification harness"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a single experiment");
  verify->require_subcommand(1);

  OutputOptions axes_out, flipper_out, general_out, sweep_out;

  double chi = 0.0, eta = 0.0;
  auto* axes = verify->add_subcommand("axes", "x/y/z axis states before and after a flip");
  axes->add_option("--chi", chi, "free phase on the |1>_A branch");
  axes->add_option("--eta", eta, "free phase on the |2>_A branch");
  add_output_options(axes, axes_out);

  std::uint64_t seed = qflip::kDefaultFlipperSeed;
  auto* flipper = verify->add_subcommand("flipper", "incomparable pair acting as a spin flipper");
  flipper->add_option("--seed", seed, "seed for the random qubit")->capture_default_str();
  add_output_options(flipper, flipper_out);

  double a = 0.0, c = 0.0, theta = 0.0, general_margin = qflip::kDefaultMargin;
  auto* general = verify->add_subcommand("general", "three states |0>, |psi>, |phi>");
  general->add_option("--a", a, "psi = a|0> + b|1>")->required()->check(CLI::Range(0.0, 1.0));
  general->add_option("--c", c, "phi = c|0> + d e^{i theta}|1>")->required()->check(CLI::Range(0.0, 1.0));
  general->add_option("--theta", theta, "relative phase in [0, pi]")->required();
  general->add_option("--margin", general_margin, "degeneracy cutoff on |abcd sin theta|")
      ->capture_default_str();
  add_output_options(general, general_out);

  qflip::SweepConfig cfg;
  cfg.jobs = default_jobs();
  auto* sweep = app.add_subcommand("sweep", "grid sweep over (a, c, theta)");
  sweep->add_option("--grid", cfg.grid_n, "points per axis")->required();
  sweep->add_option("--margin", cfg.margin, "degeneracy cutoff on |abcd sin theta|")
      ->capture_default_str();
  sweep->add_option("--eps-tie", cfg.eps_tie, "tolerance for partial-sum comparisons")
      ->capture_default_str();
  sweep->add_option("--eps-spec", cfg.eps_spec, "allowed closed-form vs eigensolver gap")
      ->capture_default_str();
  sweep->add_option("--jobs", cfg.jobs, "worker threads (default: $QFLIP_JOBS or 1)");
  add_output_options(sweep, sweep_out);

  std::vector<double> lhs, rhs;
  auto* check = app.add_subcommand("check-pair", "majorization verdict for two Schmidt vectors");
  check->add_option("--lhs", lhs, "comma-separated probabilities")->required()->delimiter(',');
  check->add_option("--rhs", rhs, "comma-separated probabilities")->required()->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (axes->parsed()) return run_axes(chi, eta, axes_out);
    if (flipper->parsed()) return run_flipper(seed, flipper_out);
    if (general->parsed()) return run_general(a, c, theta, general_margin, general_out);
    if (sweep->parsed()) {
      cfg.format = sweep_out.fmt();
      cfg.validate();
      return run_sweep(cfg, sweep_out);
    }
    if (check->parsed()) return run_check_pair(lhs, rhs);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAssertion;
  }
  return kExitUsage;
}
