#include "localdeg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "localdeg/estimator.hpp"

namespace localdeg {

void OracleBoundInputs::validate() const {
    if (k0 < 0 || k < k0) throw std::invalid_argument("oracle bound: need 0 <= k0 <= k");
    if (n < 1) throw std::invalid_argument("oracle bound: n must be >= 1");
    if (static_cast<int>(gamma.size()) != k - k0 + 1)
        throw std::invalid_argument("oracle bound: gamma must hold k - k0 + 1 entries");
    if (!(sigma2 >= 0.0 && sigma2 <= 0.25))
        throw std::invalid_argument("oracle bound: sigma2 must lie in [0, 1/4]");
    if (!(initial_error_sq >= 0.0) || !(approx_term >= 0.0))
        throw std::invalid_argument("oracle bound: expectation terms must be >= 0");
}

double oracle_bound_rhs(const OracleBoundInputs& in) {
    in.validate();
    double sum = 0.0, sum_sq = 0.0;
    for (double gi : in.gamma) {
        sum += gi;
        sum_sq += gi * gi;
    }
    const double nd = static_cast<double>(in.n);
    const double middle = (3.0 + 4.0 * in.sigma2 * std::log(nd)) / nd;
    return in.initial_error_sq * std::exp(-2.0 * sum) + sum_sq +
           sum * sum * (middle + in.approx_term);
}

MonteCarloEstimate estimate_sigma2(const FeatureDistribution& dist,
                                   const ConnectionFunction& cf, long samples,
                                   RngStream& rng, const Metric& metric) {
    if (samples < 2) throw std::invalid_argument("estimate_sigma2: need >= 2 samples");
    std::vector<double> x(static_cast<std::size_t>(dist.dim()));
    std::vector<double> y(static_cast<std::size_t>(dist.dim()));
    double sum = 0.0, sumsq = 0.0, sum4 = 0.0;
    for (long i = 0; i < samples; ++i) {
        dist.sample_one(rng, x.data());
        dist.sample_one(rng, y.data());
        const double v = cf(metric(x, y));
        sum += v;
        sumsq += v * v;
        sum4 += v * v * v * v;
    }
    const double nd = static_cast<double>(samples);
    const double mean = sum / nd;
    const double m2 = sumsq / nd;
    // population variance: stays within [0, 1/4] for a [0,1]-valued P
    const double var = std::max(0.0, m2 - mean * mean);
    const double m4 = sum4 / nd;
    const double var_of_var = std::max(0.0, m4 - m2 * m2);
    MonteCarloEstimate out;
    out.value = var;
    out.std_error = std::sqrt(var_of_var / nd);
    out.samples = samples;
    return out;
}

namespace {

TruthValue vertex_truth(const FeatureDistribution& dist, const ConnectionFunction& cf,
                        std::span<const double> xi, TruthMethod method, long truth_samples,
                        RngStream& rng, const Metric& metric) {
    switch (method) {
    case TruthMethod::numeric_integration:
    case TruthMethod::empirical_exact:
        return true_connection_probability(dist, cf, xi, method, 0, nullptr, metric);
    case TruthMethod::monte_carlo:
        return true_connection_probability(dist, cf, xi, TruthMethod::monte_carlo,
                                           truth_samples, &rng, metric);
    }
    throw std::logic_error("unreachable");
}

} // namespace

MonteCarloEstimate estimate_approx_term(const FeatureDistribution& dist,
                                        const ConnectionFunction& cf,
                                        std::span<const double> x, int n, int k,
                                        int replicates, RngStream& rng, TruthMethod truth,
                                        long truth_samples) {
    if (replicates < 1) throw std::invalid_argument("estimate_approx_term: replicates >= 1");
    const double px = vertex_truth(dist, cf, x, truth, truth_samples * 10, rng, {}).value;

    double sum = 0.0, sumsq = 0.0;
    for (int r = 0; r < replicates; ++r) {
        const FeatureSet fs = dist.sample(n, rng);
        const Graph g = sample_rcm_graph(fs, x, cf, EdgeMode::undirected, rng);
        const Annuli ann = bfs_annuli(g);
        const int upto = std::min(k + 1, ann.eccentricity());
        double worst = 0.0;
        for (int l = 0; l <= upto; ++l) {
            for (int v : ann.layers[static_cast<std::size_t>(l)]) {
                if (v == 0) continue;
                const double pv =
                    vertex_truth(dist, cf, g.features()->point(v), truth, truth_samples,
                                 rng, {})
                        .value;
                const double d = pv - px;
                worst = std::max(worst, d * d);
            }
        }
        sum += worst;
        sumsq += worst * worst;
    }
    const double nd = static_cast<double>(replicates);
    MonteCarloEstimate out;
    out.value = sum / nd;
    out.samples = replicates;
    if (replicates > 1) {
        const double var = std::max(0.0, (sumsq - nd * out.value * out.value) / (nd - 1.0));
        out.std_error = std::sqrt(var / nd);
    }
    return out;
}

MonteCarloEstimate estimate_approx_term_sbm(const SbmSpec& spec, int k, int replicates,
                                            RngStream& rng) {
    if (replicates < 1) throw std::invalid_argument("estimate_approx_term_sbm: replicates >= 1");
    spec.validate();
    const double px = sbm_truth(spec).value;
    std::vector<double> per_community(spec.community_sizes.size());
    for (std::size_t j = 0; j < per_community.size(); ++j) {
        const double d = sbm_truth_for_community(spec, static_cast<int>(j) + 1).value - px;
        per_community[j] = d * d;
    }

    double sum = 0.0, sumsq = 0.0;
    for (int r = 0; r < replicates; ++r) {
        const Graph g = sample_sbm_graph(spec, rng);
        const Annuli ann = bfs_annuli(g);
        const auto& comm = *g.communities();
        const int upto = std::min(k + 1, ann.eccentricity());
        double worst = 0.0;
        for (int l = 0; l <= upto; ++l)
            for (int v : ann.layers[static_cast<std::size_t>(l)])
                worst = std::max(worst,
                                 per_community[static_cast<std::size_t>(
                                     comm[static_cast<std::size_t>(v)] - 1)]);
        sum += worst;
        sumsq += worst * worst;
    }
    const double nd = static_cast<double>(replicates);
    MonteCarloEstimate out;
    out.value = sum / nd;
    out.samples = replicates;
    if (replicates > 1) {
        const double var = std::max(0.0, (sumsq - nd * out.value * out.value) / (nd - 1.0));
        out.std_error = std::sqrt(var / nd);
    }
    return out;
}

MomentConditionCheck check_moment_condition(const FeatureDistribution& dist,
                                            const ConnectionFunction& cf, long n,
                                            long samples, RngStream& rng,
                                            long truth_samples) {
    if (samples < 1) throw std::invalid_argument("check_moment_condition: samples >= 1");
    TruthMethod method = TruthMethod::monte_carlo;
    if (dist.as_beta() && cf.kind() == ConnectionFunction::Kind::hard_threshold)
        method = TruthMethod::numeric_integration;
    else if (dist.as_empirical())
        method = TruthMethod::empirical_exact;

    std::vector<double> x(static_cast<std::size_t>(dist.dim()));
    std::vector<double> y(static_cast<std::size_t>(dist.dim()));
    double sum2 = 0.0, sum3 = 0.0;
    for (long i = 0; i < samples; ++i) {
        dist.sample_one(rng, x.data());
        dist.sample_one(rng, y.data());
        const double rho = cf(Metric{}(x, y));
        const double px = vertex_truth(dist, cf, x, method, truth_samples, rng, {}).value;
        const double d = rho - px;
        sum2 += d * d;
        sum3 += d * d * d;
    }
    const double nd = static_cast<double>(samples);
    const double m2 = sum2 / nd, m3 = sum3 / nd;
    MomentConditionCheck out;
    out.lhs = m3 * m3;
    out.rhs = static_cast<double>(n) * m2 * m2 * m2;
    out.ratio = out.rhs == 0.0 ? 0.0 : out.lhs / out.rhs;
    return out;
}

double ks_to_standard_normal(std::vector<double> z) {
    if (z.empty()) throw std::invalid_argument("ks_to_standard_normal: empty sample");
    std::sort(z.begin(), z.end());
    const double n = static_cast<double>(z.size());
    double d = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const double phi = 0.5 * std::erfc(-z[i] / std::sqrt(2.0));
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        d = std::max({d, std::abs(phi - lo), std::abs(phi - hi)});
    }
    return d;
}

namespace {

CltCheck clt_from_degrees(const std::vector<long>& b0, long n, double p) {
    CltCheck out;
    out.z.reserve(b0.size());
    const double scale = std::sqrt(static_cast<double>(n) * p / (1.0 - p));
    for (long b : b0) {
        const double p_hat = static_cast<double>(b) / static_cast<double>(n);
        out.z.push_back(scale * (p_hat / p - 1.0));
    }
    out.ks_distance = ks_to_standard_normal(out.z);
    return out;
}

} // namespace

CltCheck clt_check_binomial(long n, double p, long replicates, RngStream& rng) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("clt_check: p must lie strictly in (0,1)");
    if (replicates < 1) throw std::invalid_argument("clt_check: replicates >= 1");
    std::vector<long> b0(static_cast<std::size_t>(replicates));
    for (auto& b : b0) b = rng.binomial(n, p);
    return clt_from_degrees(b0, n, p);
}

CltCheck clt_check_graph(const FeatureDistribution& dist, const ConnectionFunction& cf,
                         std::span<const double> x, long n, long replicates, RngStream& rng,
                         const Metric& metric) {
    const TruthValue t = true_connection_probability(dist, cf, x, TruthMethod::monte_carlo,
                                                     std::max(200000L, 100 * n), &rng, metric);
    if (!(t.value > 0.0 && t.value < 1.0))
        throw std::invalid_argument("clt_check: estimated p(x) is degenerate");
    std::vector<double> xi(static_cast<std::size_t>(dist.dim()));
    std::vector<long> b0(static_cast<std::size_t>(replicates), 0);
    for (auto& b : b0) {
        long deg = 0;
        for (long j = 0; j < n; ++j) {
            dist.sample_one(rng, xi.data());
            if (cf(metric(xi, x)) > rng.uniform01()) ++deg;
        }
        b = deg;
    }
    return clt_from_degrees(b0, n, t.value);
}

long wireless_min_n(double p_hat, double q) {
    if (!(p_hat > 0.0 && p_hat < 1.0))
        throw std::invalid_argument("wireless_min_n: p must lie strictly in (0,1)");
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("wireless_min_n: q must lie strictly in (0,1)");
    const double ratio = std::log1p(-q) / std::log1p(-p_hat);
    long n = static_cast<long>(std::ceil(ratio));
    if (n < 1) n = 1;
    // enforce (1-p)^n <= 1-q < (1-p)^(n-1) exactly in floating point
    const double fail = 1.0 - q;
    while (std::pow(1.0 - p_hat, static_cast<double>(n)) > fail) ++n;
    while (n > 1 && std::pow(1.0 - p_hat, static_cast<double>(n - 1)) <= fail) --n;
    return n;
}

namespace {

MonteCarloEstimate fraction_estimate(long hits, long replicates) {
    MonteCarloEstimate out;
    const double nd = static_cast<double>(replicates);
    out.value = static_cast<double>(hits) / nd;
    out.std_error = std::sqrt(std::max(0.0, out.value * (1.0 - out.value) / nd));
    out.samples = replicates;
    return out;
}

} // namespace

MonteCarloEstimate verify_connectivity_binomial(double p, long n, long replicates,
                                                RngStream& rng) {
    if (replicates < 1) throw std::invalid_argument("verify_connectivity: replicates >= 1");
    long hits = 0;
    for (long r = 0; r < replicates; ++r)
        if (rng.binomial(n, p) > 0) ++hits;
    return fraction_estimate(hits, replicates);
}

MonteCarloEstimate verify_connectivity_graph(const FeatureDistribution& dist,
                                             const ConnectionFunction& cf,
                                             std::span<const double> x, long n,
                                             long replicates, RngStream& rng,
                                             const Metric& metric) {
    if (replicates < 1) throw std::invalid_argument("verify_connectivity: replicates >= 1");
    std::vector<double> xi(static_cast<std::size_t>(dist.dim()));
    long hits = 0;
    for (long r = 0; r < replicates; ++r) {
        bool connected = false;
        for (long j = 0; j < n; ++j) {
            dist.sample_one(rng, xi.data());
            if (cf(metric(xi, x)) > rng.uniform01()) {
                connected = true;
                break;
            }
        }
        if (connected) ++hits;
    }
    return fraction_estimate(hits, replicates);
}

} // namespace localdeg
