#ifndef OPFC_HARNESS_HPP
#define OPFC_HARNESS_HPP

#include "opfc/function_space.hpp"
#include "opfc/linalg.hpp"
#include "opfc/operator_calculus.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace opfc {

struct Tolerances {
    double slope_tol = 0.0; // 0 = per-experiment default (0.05 or 0.1)
    double growth_tol = 1.25;
    double max_skip_fraction = 0.05;
};

// Declarative description of one theorem-verification run.
struct ExperimentConfig {
    std::string experiment_id;
    std::vector<int> dims = {8, 16, 32};
    int trials_per_dim = 50;
    std::uint64_t seed = 1;
    int jobs = 1;

    std::string function_id; // empty = experiment default
    double alpha = 0.0;      // 0 = function default
    int order_n = 0;         // 0 = function default
    int lacunary_terms = 0;  // 0 = function default
    std::vector<double> sweep;         // bernstein: sigma (line) / degree (circle)
    std::vector<double> coefficients;  // trig_poly analytic coefficients, k = 0..

    double schatten_p = 1.0;
    std::vector<std::string> ranks = {"1", "half", "full"};

    int truncation_degree = 128;
    ContractionMode mode = ContractionMode::interpolating;

    std::string omega_id = "power"; // power | capped_linear
    double omega_alpha = 0.5;

    std::vector<double> scales; // strictly decreasing, dyadic by default

    int adversarial_steps = 0;
    Tolerances tol;

    double interval_lo = -1.0; // farforovskaya [a, b]
    double interval_hi = 1.0;

    void validate() const; // throws ParameterError with key context
};

// Fills experiment-specific defaults (function, scales, tolerances) for any
// field still at its sentinel value; idempotent.
void apply_experiment_defaults(ExperimentConfig& cfg);

std::vector<std::string> experiment_ids();

struct TrialResult {
    int dim = 0;
    double scale = 0.0;
    int trial_index = 0;
    double ratio = 0.0;
    double lhs_norm = 0.0;
    double rhs_value = 0.0;
    std::uint64_t witness_seed = 0;
    bool skipped = false;
    int rank = 0;       // Schatten experiments: prescribed perturbation rank
    int rank_class = -1; // index into config.ranks, -1 when not applicable
    double aux = std::numeric_limits<double>::quiet_NaN(); // experiment-specific
};

// Empirically observed supremum of a normalized ratio.
struct ConstantEstimate {
    double value = 0.0;
    std::string witness;
    std::vector<std::pair<int, double>> search_trace; // (step, best so far)
};

struct CellStats {
    int dim = 0;
    double scale = 0.0;
    int trials = 0;
    int skips = 0;
    double max_ratio = 0.0;
    double mean_ratio = 0.0;
    double q95_ratio = 0.0;
    double lhs_max = 0.0;
};

struct SlopeFit {
    bool applicable = false;
    std::string series;   // what was regressed: "lhs" | "ratio" | "sweep_lhs"
    double value = 0.0;
    double stderr_ = 0.0;
    double expected = 0.0;
    double tol = 0.0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::string function_name;
    double seminorm = 0.0;
    std::string seminorm_source; // "declared" | "estimated" | "unused"
    std::vector<TrialResult> trials;
    std::vector<CellStats> cells; // one per (dim, scale), sorted
    SlopeFit slope;
    ConstantEstimate constant;
    std::map<std::string, double> witness_values; // named deterministic checks
    std::map<std::string, bool> verdicts;
    bool passed = false;
    int total_trials = 0;
    int total_skips = 0;
    double skip_fraction = 0.0;
    std::vector<std::string> notes;
};

// Least-squares slope of log(value) against log(scale) with its standard
// error; needs >= 3 points, all positive.
struct RegressionResult {
    double slope = 0.0;
    double stderr_ = 0.0;
};
RegressionResult exponent_regression(const std::vector<std::pair<double, double>>& points);

// --- shared trial samplers (also used by the scalar oracle tests) ---

// A = (1 - margin_steps*scale) * H/||H||op with Hermitian H, K with
// operator norm exactly `scale`.
struct SelfAdjointSample {
    Matrix A;
    Matrix K;
};
SelfAdjointSample sample_selfadjoint(int dim, double scale, int margin_steps,
                                     std::uint64_t sub);

// Haar U; Hermitian H with operator norm `scale`; V = exp(iH) U.
struct UnitarySample {
    Matrix U;
    Matrix H;
    Matrix V;
};
UnitarySample sample_unitary(int dim, double scale, std::uint64_t sub);

// ||T|| = 1 - scale, R = T + scale * E with ||E|| = 1; both contractions.
struct ContractionSample {
    Matrix T;
    Matrix R;
};
ContractionSample sample_contraction(int dim, double scale, std::uint64_t sub);

// Hermitian K with prescribed Schatten-p norm `scale` and prescribed rank.
Matrix sample_schatten_perturbation(int dim, double scale, double p, int rank,
                                    std::uint64_t sub);

// Substream seed of one trial; shared by experiments and oracle tests.
std::uint64_t trial_substream(std::uint64_t seed, int dim, int scale_index,
                              int trial_index);

// Seminorm normalization: declared_seminorm when present, else the grid
// estimate at step 1e-4 (cached per function identity).
struct SeminormChoice {
    double value = 0.0;
    std::string source;
};
SeminormChoice resolve_seminorm(const FunctionSpec& f);
double resolve_omega_seminorm(const FunctionSpec& f, const Modulus& omega);

// Builds the configured function (id + parameters) from the catalog.
FunctionSpec make_function(const ExperimentConfig& cfg);
Modulus make_modulus(const ExperimentConfig& cfg);

// True when the function's n-th differences decay strictly faster than
// t^alpha over the configured scales, i.e. it is too smooth to witness
// the class it claims.
bool degenerate_witness(const FunctionSpec& f, const std::vector<double>& scales);

// --- experiments ---

ExperimentReport run_experiment(const ExperimentConfig& cfg);

ExperimentReport experiment_selfadjoint_holder(const ExperimentConfig&);
ExperimentReport experiment_zygmund(const ExperimentConfig&);
ExperimentReport experiment_bernstein(const ExperimentConfig&);
ExperimentReport experiment_unitary_holder(const ExperimentConfig&);
ExperimentReport experiment_unitary_lipschitz_log(const ExperimentConfig&);
ExperimentReport experiment_unitary_higher(const ExperimentConfig&);
ExperimentReport experiment_omega(const ExperimentConfig&);
ExperimentReport experiment_contraction(const ExperimentConfig&);
ExperimentReport experiment_selfadjoint_higher(const ExperimentConfig&);
ExperimentReport experiment_schatten(const ExperimentConfig&);
ExperimentReport experiment_schatten_higher(const ExperimentConfig&);
ExperimentReport experiment_farforovskaya_compare(const ExperimentConfig&);

// --- adversarial constant search ---

// A parameterized witness family: the search climbs `ratio` over params.
struct WitnessFamily {
    int param_count = 0;
    std::function<double(const Eigen::VectorXd&)> ratio;
    std::function<std::string(const Eigen::VectorXd&)> describe;
    Eigen::VectorXd initial;
};

WitnessFamily make_witness_family(const ExperimentConfig& cfg, int dim, double scale,
                                  std::uint64_t seed);

// Coordinate-wise hill climbing: 20 coordinate visits per sweep, step
// halves after a sweep with no improvement; improvements only.
ConstantEstimate hill_climb(const WitnessFamily& family, int sweeps,
                            double initial_step = 0.5);

ConstantEstimate adversarial_search(const ExperimentConfig& cfg, int steps);

} // namespace opfc

#endif
