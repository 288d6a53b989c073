#include "localdeg/mccv.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "localdeg/csv.hpp"

namespace localdeg {

void SplitPlan::validate(int n_other) const {
    if (replications < 1) throw std::invalid_argument("SplitPlan: M must be >= 1");
    if (!(fraction > 0.0 && fraction < 1.0))
        throw std::invalid_argument("SplitPlan: split fraction must lie in (0,1)");
    const int keep = split_size(n_other);
    if (keep < 1 || n_other - keep < 1)
        throw std::invalid_argument("SplitPlan: both sides of the split must be non-empty");
}

int SplitPlan::split_size(int n_other) const {
    return static_cast<int>(std::floor(fraction * static_cast<double>(n_other)));
}

namespace {

// substream tag separating split draws from other consumers of a seed
constexpr std::uint64_t kSplitStreamTag = 0x6d63637673706c69ULL;

// V_i: uniform subset of {1..n_other} of the planned size, then its
// complement; both returned with the origin prepended.
struct Split {
    std::vector<int> keep;
    std::vector<int> hold;
};

Split draw_split(int n_other, int keep_size, RngStream& rng) {
    std::vector<int> pool(static_cast<std::size_t>(n_other));
    std::iota(pool.begin(), pool.end(), 1);
    for (int i = 0; i < keep_size; ++i) {
        const int j = i + static_cast<int>(rng.uniform_below(
                              static_cast<std::uint64_t>(n_other - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    Split s;
    s.keep.assign(pool.begin(), pool.begin() + keep_size);
    s.keep.push_back(0);
    s.hold.assign(pool.begin() + keep_size, pool.end());
    s.hold.push_back(0);
    return s;
}

struct SplitOutcome {
    EstimateTrace trace;   ///< on the kept side
    double holdout_p0;     ///< empirical estimator on the complement
};

SplitOutcome eval_split(const Graph& g, const WeightScheme& scheme, int n_other,
                        int keep_size, RngStream& rng) {
    const Split s = draw_split(n_other, keep_size, rng);
    auto [kept_graph, kept_map] = induced_subgraph(g, s.keep);
    auto [hold_graph, hold_map] = induced_subgraph(g, s.hold);
    SplitOutcome out;
    out.trace = estimate_trace(kept_graph, scheme);
    out.holdout_p0 = static_cast<double>(hold_graph.out_degree(0)) /
                     static_cast<double>(hold_graph.degree_norm());
    return out;
}

RiskCurve curve_from_outcomes(const std::vector<SplitOutcome>& outcomes,
                              const WeightScheme& scheme, const SplitPlan& plan, int M) {
    int m_cap = 0;
    for (int i = 0; i < M; ++i) m_cap = std::max(m_cap, outcomes[static_cast<std::size_t>(i)].trace.m_max());

    RiskCurve rc;
    rc.risk.assign(static_cast<std::size_t>(m_cap) + 1, 0.0);
    rc.reach_counts.assign(static_cast<std::size_t>(m_cap) + 1, 0);
    rc.scheme_tag = scheme.tag();
    rc.replications = M;
    rc.fraction = plan.fraction;
    rc.seed = plan.seed;

    for (int i = 0; i < M; ++i) {
        const auto& o = outcomes[static_cast<std::size_t>(i)];
        for (int m = 0; m <= m_cap; ++m) {
            const double diff = o.trace.at_clamped(m) - o.holdout_p0;
            rc.risk[static_cast<std::size_t>(m)] += diff * diff;
            if (m <= o.trace.m_max()) ++rc.reach_counts[static_cast<std::size_t>(m)];
        }
    }
    for (double& r : rc.risk) r /= static_cast<double>(M);
    return rc;
}

} // namespace

RiskCurve mccv_risk(const Graph& g, const WeightScheme& scheme, const SplitPlan& plan) {
    const int n_other = g.n_other();
    if (n_other < 2) throw std::invalid_argument("mccv_risk: need at least 2 non-origin vertices");
    plan.validate(n_other);
    const int keep_size = plan.split_size(n_other);

    std::vector<SplitOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(plan.replications));
    for (int i = 0; i < plan.replications; ++i) {
        RngStream rng = RngStream::keyed(plan.seed, kSplitStreamTag, static_cast<std::uint64_t>(i));
        outcomes.push_back(eval_split(g, scheme, n_other, keep_size, rng));
    }
    return curve_from_outcomes(outcomes, scheme, plan, plan.replications);
}

int select_m(const RiskCurve& rc) {
    if (rc.risk.empty()) throw std::invalid_argument("select_m: empty risk curve");
    return static_cast<int>(std::min_element(rc.risk.begin(), rc.risk.end()) - rc.risk.begin());
}

MccvEstimate estimate_with_mccv(const Graph& g, const WeightScheme& scheme,
                                const SplitPlan& plan) {
    const RiskCurve rc = mccv_risk(g, scheme, plan);
    MccvEstimate out;
    out.m_hat = select_m(rc);
    out.estimate = estimate_trace(g, scheme).at_clamped(out.m_hat);
    return out;
}

std::vector<RiskCurve> mccv_risk_prefixes(const Graph& g, const WeightScheme& scheme,
                                          SplitPlan plan, const std::vector<int>& m_grid) {
    if (m_grid.empty()) return {};
    const int m_max = *std::max_element(m_grid.begin(), m_grid.end());
    plan.replications = m_max;
    const int n_other = g.n_other();
    if (n_other < 2) throw std::invalid_argument("mccv_risk_prefixes: need at least 2 non-origin vertices");
    plan.validate(n_other);
    const int keep_size = plan.split_size(n_other);

    std::vector<SplitOutcome> outcomes;
    outcomes.reserve(static_cast<std::size_t>(m_max));
    for (int i = 0; i < m_max; ++i) {
        RngStream rng = RngStream::keyed(plan.seed, kSplitStreamTag, static_cast<std::uint64_t>(i));
        outcomes.push_back(eval_split(g, scheme, n_other, keep_size, rng));
    }

    std::vector<RiskCurve> curves;
    curves.reserve(m_grid.size());
    for (int M : m_grid) {
        if (M < 1 || M > m_max) throw std::invalid_argument("mccv_risk_prefixes: bad M grid");
        curves.push_back(curve_from_outcomes(outcomes, scheme, plan, M));
        curves.back().replications = M;
    }
    return curves;
}

void write_risk_csv(const RiskCurve& rc, const std::filesystem::path& path) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(rc.risk.size());
    for (std::size_t m = 0; m < rc.risk.size(); ++m)
        rows.push_back({std::to_string(m), format_double(rc.risk[m]), rc.scheme_tag,
                        std::to_string(rc.replications), std::to_string(rc.seed)});
    write_csv(path, {"m", "risk", "scheme", "M", "seed"}, rows);
}

} // namespace localdeg
