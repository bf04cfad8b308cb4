#ifndef OPFC_HARNESS_INTERNAL_HPP
#define OPFC_HARNESS_INTERNAL_HPP

#include "opfc/harness.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace opfc::detail {

// One trial: (dim, scale, indices, substream seed) -> result. DomainError /
// NumericError escapes are converted into skipped trials by the runner.
using TrialFn = std::function<TrialResult(int dim, double scale, int scale_idx,
                                          int trial, std::uint64_t sub)>;

std::vector<TrialResult> run_trials(const ExperimentConfig& cfg, const TrialFn& fn);

struct ReportSpec {
    std::string slope_series;  // "lhs" | "ratio" | "sweep_lhs" | "" (none)
    double slope_expected = 0.0;
    bool growth_check = true;
    bool per_rank_growth = false;
    // sweep_lhs only: points (sweep value, max lhs)
    std::vector<std::pair<double, double>> sweep_series;
};

ExperimentReport finalize_report(const ExperimentConfig& cfg,
                                 const std::string& function_name,
                                 const SeminormChoice& sem,
                                 std::vector<TrialResult> trials,
                                 const ReportSpec& rspec,
                                 std::map<std::string, double> witness_values,
                                 std::map<std::string, bool> extra_verdicts,
                                 std::vector<std::string> notes);

int resolve_rank(const std::string& token, int dim);

double default_slope_tol(const std::string& experiment_id);

} // namespace opfc::detail

#endif
