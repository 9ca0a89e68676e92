#ifndef QFLIP_SWEEP_HPP
#define QFLIP_SWEEP_HPP

// Grid sweep of the flip family over (a, c, theta). Points are evaluated by
// a worker pool and stored by grid index, so the output does not depend on
// scheduling.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "qflip/cubic.hpp"
#include "qflip/experiments.hpp"
#include "qflip/report.hpp"

namespace qflip {

struct SweepConfig {
  std::size_t grid_n = 10;
  double margin = kDefaultMargin;
  double eps_tie = kTieEps;
  double eps_spec = kSpectrumAgreementTol;
  std::size_t jobs = 1;
  Format format = Format::Json;

  void validate() const {
    if (grid_n < 2) throw std::invalid_argument("grid size must be at least 2");
    if (!(margin > 0.0 && margin < 1.0)) {
      throw std::invalid_argument("margin must lie in (0, 1)");
    }
    if (!(eps_tie > 0.0) || !(eps_spec > 0.0)) {
      throw std::invalid_argument("tolerances must be positive");
    }
    if (jobs == 0) throw std::invalid_argument("jobs must be positive");
  }
};

/// Interior sample k/(n+1), k = 1..n, scaled to `span`.
inline double grid_point(std::size_t k, std::size_t n, double span = 1.0) {
  return span * static_cast<double>(k + 1) / static_cast<double>(n + 1);
}

inline FlipParams grid_params(std::size_t ia, std::size_t ic, std::size_t it,
                              std::size_t n) {
  return {grid_point(ia, n), grid_point(ic, n), grid_point(it, n, std::numbers::pi)};
}

struct SweepPoint {
  std::size_t ia = 0, ic = 0, it = 0;
  FlipExperiment experiment;
  // Documented case hit by each (initial, final) branch combination, in the
  // order PP, PR, RP, RR. Empty when that combination failed to classify.
  std::array<std::optional<std::size_t>, 4> branch_cases;
  bool eq2_holds = false;  // sorted analytic triples satisfy the 3-component criterion
};

struct SweepSummary {
  std::size_t grid_points = 0;
  std::size_t evaluated = 0;  // non-degenerate
  std::size_t degenerate_skipped = 0;
  std::map<std::string, std::size_t> ordering_counts;  // principal-branch labels
  std::array<std::size_t, kDocumentedOrderings.size()> case_witnesses{};
  std::size_t non_incomparable = 0;
  std::size_t unknown_orderings = 0;
  std::size_t eq2_failures = 0;
  std::size_t spectrum_mismatches = 0;  // max error above eps_spec
  double max_analytic_numeric_error = 0.0;

  std::size_t violations() const {
    return non_incomparable + unknown_orderings + eq2_failures + spectrum_mismatches;
  }
  bool all_cases_witnessed() const {
    return std::ranges::all_of(case_witnesses, [](std::size_t n) { return n > 0; });
  }
};

struct SweepResult {
  std::vector<SweepPoint> points;  // non-degenerate only, in grid order
  SweepSummary summary;
};

inline SweepPoint evaluate_point(std::size_t ia, std::size_t ic, std::size_t it,
                                 const SweepConfig& cfg) {
  SweepPoint pt{ia, ic, it,
                general_flip_experiment(grid_params(ia, ic, it, cfg.grid_n), cfg.margin,
                                        cfg.eps_tie),
                {}};
  const FlipExperiment& e = pt.experiment;
  if (e.degenerate) return pt;
  std::size_t slot = 0;
  for (Branch bi : {Branch::Principal, Branch::Reflected}) {
    for (Branch bf : {Branch::Principal, Branch::Reflected}) {
      try {
        pt.branch_cases[slot] =
            classify_ordering(e.analytic_initial.with_branch(bi),
                              e.analytic_final.with_branch(bf))
                .case_index;
      } catch (const std::exception&) {
      }
      ++slot;
    }
  }
  try {
    pt.eq2_holds = incomparable_3dim(to_schmidt(e.analytic_initial.sorted()),
                                     to_schmidt(e.analytic_final.sorted()), cfg.eps_tie);
  } catch (const TieDegenerateError&) {
    pt.eq2_holds = e.verdict == Verdict::Incomparable;
  }
  return pt;
}

inline SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::size_t n = cfg.grid_n;
  const std::size_t total = n * n * n;
  std::vector<std::optional<SweepPoint>> slots(total);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t idx = next++; idx < total; idx = next++) {
      slots[idx] = evaluate_point(idx / (n * n), (idx / n) % n, idx % n, cfg);
    }
  };
  {
    std::vector<std::jthread> pool;
    const std::size_t workers = std::min(cfg.jobs, total);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }

  SweepResult result;
  SweepSummary& s = result.summary;
  s.grid_points = total;
  for (auto& slot : slots) {
    SweepPoint& pt = *slot;
    const FlipExperiment& e = pt.experiment;
    if (e.degenerate) {
      ++s.degenerate_skipped;
      continue;
    }
    ++s.evaluated;
    s.max_analytic_numeric_error =
        std::max(s.max_analytic_numeric_error, e.max_analytic_numeric_error);
    if (e.max_analytic_numeric_error > cfg.eps_spec) ++s.spectrum_mismatches;
    if (e.verdict != Verdict::Incomparable) ++s.non_incomparable;
    if (e.ordering) {
      ++s.ordering_counts[e.ordering->label()];
    } else {
      ++s.unknown_orderings;
    }
    for (const auto& c : pt.branch_cases) {
      if (c) {
        ++s.case_witnesses[*c];
      } else {
        ++s.unknown_orderings;
      }
    }
    if (!pt.eq2_holds) ++s.eq2_failures;
    result.points.push_back(std::move(pt));
  }
  return result;
}

inline nlohmann::ordered_json summary_json(const SweepSummary& s) {
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < kDocumentedOrderings.size(); ++i) {
    const auto& d = kDocumentedOrderings[i];
    cases.push_back({{"initial_region", std::string(to_string(d.initial))},
                     {"final_region", std::string(to_string(d.final))},
                     {"ordering", chain_label(d.chain)},
                     {"witnesses", s.case_witnesses[i]}});
  }
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [label, count] : s.ordering_counts) counts[label] = count;
  return {{"summary",
           {{"grid_points", s.grid_points},
            {"evaluated", s.evaluated},
            {"degenerate_skipped", s.degenerate_skipped},
            {"ordering_counts", counts},
            {"documented_cases", cases},
            {"maxAnalyticNumericError", s.max_analytic_numeric_error},
            {"non_incomparable", s.non_incomparable},
            {"unknown_orderings", s.unknown_orderings},
            {"eq2_failures", s.eq2_failures},
            {"spectrum_mismatches", s.spectrum_mismatches},
            {"violations", s.violations()}}}};
}

/// Records in grid order followed by one summary line. In CSV mode the
/// summary line is the JSON summary prefixed with '#'.
inline void write_sweep(std::ostream& os, const SweepResult& r, Format f) {
  if (f == Format::Csv) os << kCsvHeader << '\n';
  for (const auto& pt : r.points) {
    const ReportRecord rec = to_record(pt.experiment);
    if (f == Format::Json) {
      os << to_json(rec).dump() << '\n';
    } else {
      os << csv_row(rec) << '\n';
    }
  }
  if (f == Format::Csv) os << '#';
  os << summary_json(r.summary).dump() << '\n';
}

}  // namespace qflip

#endif  // QFLIP_SWEEP_HPP
