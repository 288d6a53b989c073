#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "localdeg/estimator.hpp"
#include "localdeg/graph.hpp"

namespace localdeg {

/// Monte Carlo cross-validation plan: M independent uniform splits of
/// the non-origin vertices, each of size floor(f * n_other).
struct SplitPlan {
    int replications = 100;     ///< M >= 1
    double fraction = 0.5;      ///< f in (0,1)
    std::uint64_t seed = 0;

    void validate(int n_other) const;
    int split_size(int n_other) const;
};

struct RiskCurve {
    std::vector<double> risk;        ///< R(m), m = 0..m_cap
    std::vector<int> reach_counts;   ///< replicates whose trace actually reaches m
    std::string scheme_tag;
    int replications = 0;
    double fraction = 0.5;
    std::uint64_t seed = 0;

    int m_cap() const { return static_cast<int>(risk.size()) - 1; }
};

/// The MCCV risk estimate: for each split, the full trace on the kept
/// subgraph against the empirical estimator on the held-out complement
/// (both share only the origin). Traces shorter than m are extended as
/// constant at their last value.
RiskCurve mccv_risk(const Graph& g, const WeightScheme& scheme, const SplitPlan& plan);

/// Smallest index attaining the minimum of R.
int select_m(const RiskCurve& rc);

struct MccvEstimate {
    int m_hat = 0;
    double estimate = 0.0;
};

/// mccv_risk + select_m, then the full-graph trace evaluated at m_hat
/// (clamped to the full graph's reach).
MccvEstimate estimate_with_mccv(const Graph& g, const WeightScheme& scheme,
                                const SplitPlan& plan);

/// Risk curves for a grid of replication counts where each larger run
/// reuses the smaller run's splits as a prefix (common random numbers).
std::vector<RiskCurve> mccv_risk_prefixes(const Graph& g, const WeightScheme& scheme,
                                          SplitPlan plan, const std::vector<int>& m_grid);

/// Columns: m, risk, scheme, M, seed.
void write_risk_csv(const RiskCurve& rc, const std::filesystem::path& path);

} // namespace localdeg
