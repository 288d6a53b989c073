#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "localdeg/analysis.hpp"
#include "localdeg/config.hpp"
#include "localdeg/estimator.hpp"
#include "localdeg/mccv.hpp"
#include "localdeg/model.hpp"

namespace localdeg {

/// RCM model: features ~ dist, Bernoulli edges through cf, probe origin.
struct RcmModelSpec {
    FeatureDistribution dist;
    ConnectionFunction cf;
    std::vector<double> origin;
    Metric metric{};
};

/// The scaled SBM family: at size n the communities are
/// (round(frac1 n), round(frac2 n), rest), intra probabilities
/// min(1, np_factors log n / n), inter probability q_factor / n.
struct SbmGrowingSpec {
    double frac1 = 0.2;
    double frac2 = 0.5;
    std::vector<double> np_factors{15.0, 10.0, 20.0};
    double q_factor = 1.0;
    int origin_community = 1;

    SbmSpec at(int n) const;
};

using ModelSpec = std::variant<SbmSpec, SbmGrowingSpec, RcmModelSpec>;

struct ExperimentConfig {
    ModelSpec model;
    std::vector<WeightScheme> schemes;
    std::vector<int> n_grid;        ///< sizes; a fixed SbmSpec pins its own n
    long replicates = 100;
    SplitPlan plan;                 ///< MCCV-based studies; plan.seed is ignored
                                    ///< (per-cell substreams are derived)
    std::uint64_t master_seed = 1;
    int m_record_cap = -1;          ///< cap per-m records; -1 = full reach
};

/// Long-form record, one row per measured statistic.
struct Record {
    int n = 0;
    long replicate = 0;
    std::string scheme;
    int m = -1;
    std::string statistic;
    double value = 0.0;
    std::string flags;
};

struct AggregateRow {
    int n = 0;
    std::string scheme;
    int m = -1;
    std::string statistic;
    long count = 0;
    double mean = 0.0;
    double sd = 0.0;
    double mean_sq = 0.0;
    double q25 = 0.0;
    double median = 0.0;
    double q75 = 0.0;
};

struct StudyOutput {
    std::string study;
    std::vector<Record> records;
    std::vector<AggregateRow> aggregates;  ///< recomputable from the records
    std::vector<std::pair<std::string, std::string>> manifest_extra;
};

/// Aggregates (count/mean/sd/mean-square/quartiles) over non-censored
/// records, grouped by (n, scheme, m, statistic) in first-seen order.
std::vector<AggregateRow> aggregate_records(const std::vector<Record>& records);

/// Squared residuals of the trace against the model truth for every
/// scheme, plus the per-replicate oracle m* and its error.
/// Statistics: error (per m), oracle_m, oracle_error.
StudyOutput run_mse_study(const ExperimentConfig& cfg);

/// MCCV-selected m per replicate. Statistics: m_hat, estimate, error,
/// empirical_error, log_error_ratio (flag "censored" when the empirical
/// estimator is exact).
StudyOutput run_mccv_study(const ExperimentConfig& cfg);

/// Criterion stabilisation on one graph: risk curves for each M in the
/// grid, larger runs reusing the smaller runs' splits as a prefix.
/// Statistics: risk (replicate column = M), m_hat per M.
StudyOutput run_mccv_stability(const Graph& g, const WeightScheme& scheme,
                               const std::vector<int>& m_grid, double fraction,
                               std::uint64_t master_seed);

/// Wireless sizing: MCCV estimate -> minimal vertex count for the
/// connectivity target, verified by the binomial shortcut at the mean
/// selected size. Statistics: p_estimate, n_bar, connect_fraction.
StudyOutput run_wireless_study(const ExperimentConfig& cfg, double target_q,
                               long verify_replicates);

/// One cell of the design benchmark grid.
struct DesignCell {
    std::string dist_tag;
    std::string origin_tag;
    FeatureDistribution dist;
    ConnectionFunction cf;
    int n = 0;
    std::vector<double> origin;
};

/// The benchmark grid: Beta(2,5) with threshold 0.01, the two-component
/// Gaussian mixture with thresholds 0.6/0.5/0.4 at n = 50/75/100, and
/// Uniform[0,1]^3 with threshold 0.2, each at three origins.
std::vector<DesignCell> design_benchmark_cells();

StudyOutput run_design_benchmark(const std::vector<DesignCell>& cells,
                                 const std::vector<WeightScheme>& schemes,
                                 long replicates, const SplitPlan& plan,
                                 std::uint64_t master_seed);

/// Writes <study>_records.csv, <study>_aggregates.csv and
/// <study>_manifest.cfg (the configuration, seed and per-run values
/// needed to reproduce the outputs byte for byte).
void write_study_output(const StudyOutput& out, const std::filesystem::path& dir,
                        const Config* base_config, std::uint64_t master_seed);

const char* toolkit_version();

} // namespace localdeg
