#include "localdeg/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace localdeg {

int SbmSpec::n_total() const {
    return std::accumulate(community_sizes.begin(), community_sizes.end(), 0);
}

void SbmSpec::validate() const {
    if (community_sizes.empty())
        throw std::invalid_argument("SbmSpec: no communities");
    if (intra.size() != community_sizes.size())
        throw std::invalid_argument("SbmSpec: one intra probability per community required");
    for (int c : community_sizes)
        if (c <= 0) throw std::invalid_argument("SbmSpec: community sizes must be positive");
    for (double p : intra)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("SbmSpec: intra probabilities must lie in [0,1]");
    if (!(inter >= 0.0 && inter <= 1.0))
        throw std::invalid_argument("SbmSpec: inter probability must lie in [0,1]");
    if (origin_community < 1 || origin_community > static_cast<int>(community_sizes.size()))
        throw std::invalid_argument("SbmSpec: origin community out of range");
}

FeatureSet sample_features(const FeatureDistribution& dist, int n, RngStream& rng) {
    return dist.sample(n, rng);
}

Graph sample_rcm_graph(const FeatureSet& features, std::span<const double> origin_x,
                       const ConnectionFunction& cf, EdgeMode mode, RngStream& rng,
                       const Metric& metric) {
    if (static_cast<int>(origin_x.size()) != features.dim && features.size() > 0)
        throw std::invalid_argument("sample_rcm_graph: origin dimension mismatch");
    const int n = features.size();

    FeatureSet all(static_cast<int>(origin_x.size()), n + 1);
    std::copy(origin_x.begin(), origin_x.end(), all.point(0).begin());
    for (int i = 0; i < n; ++i) {
        const auto p = features.point(i);
        std::copy(p.begin(), p.end(), all.point(i + 1).begin());
    }

    Graph g(n, mode);
    if (mode == EdgeMode::undirected) {
        for (int i = 0; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const double pij = cf(metric(all.point(i), all.point(j)));
                if (pij > rng.uniform01()) g.add_edge(i, j);
            }
        }
    } else {
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) {
                if (i == j) continue;
                const double pij = cf(metric(all.point(i), all.point(j)));
                if (pij > rng.uniform01()) g.add_edge(i, j);
            }
        }
    }
    g.finish();
    g.set_degree_norm(n);
    g.attach_features(std::move(all));
    return g;
}

Graph sample_sbm_graph(const SbmSpec& spec, RngStream& rng) {
    spec.validate();
    const int n = spec.n_total();
    const int j0 = spec.origin_community;

    // origin takes one of community j0's slots; remaining labels are
    // shuffled over indices 1..n-1
    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(n));
    labels.push_back(j0);
    for (std::size_t j = 0; j < spec.community_sizes.size(); ++j) {
        int count = spec.community_sizes[j];
        if (static_cast<int>(j) + 1 == j0) --count;
        for (int k = 0; k < count; ++k) labels.push_back(static_cast<int>(j) + 1);
    }
    for (int i = n - 1; i > 1; --i) {
        const int j = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i)));
        std::swap(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
    }

    Graph g(n - 1, EdgeMode::undirected);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double pij = labels[static_cast<std::size_t>(i)] ==
                                       labels[static_cast<std::size_t>(j)]
                                   ? spec.intra[static_cast<std::size_t>(
                                         labels[static_cast<std::size_t>(i)] - 1)]
                                   : spec.inter;
            if (pij > rng.uniform01()) g.add_edge(i, j);
        }
    }
    g.finish();
    g.set_degree_norm(n);
    g.attach_communities(std::move(labels));
    return g;
}

TruthValue sbm_truth(const SbmSpec& spec) {
    return sbm_truth_for_community(spec, spec.origin_community);
}

TruthValue sbm_truth_for_community(const SbmSpec& spec, int community) {
    spec.validate();
    if (community < 1 || community > static_cast<int>(spec.community_sizes.size()))
        throw std::invalid_argument("sbm_truth: community out of range");
    const long double n = spec.n_total();
    const long double cj = spec.community_sizes[static_cast<std::size_t>(community - 1)];
    const long double pj = spec.intra[static_cast<std::size_t>(community - 1)];
    TruthValue t;
    // evaluated in extended precision so the result is rounded once
    t.value = static_cast<double>(((cj - 1.0L) * pj + (n - cj) * spec.inter) / n);
    t.method = TruthValue::Method::closed_form;
    return t;
}

namespace {

// 64-point Gauss-Legendre nodes/weights on [-1,1] would be overkill to
// tabulate by hand; a 20-point rule iterated over subintervals reaches
// full double precision for these smooth integrands.
struct GaussLegendre20 {
    static constexpr int n = 10; // symmetric half
    // abscissae/weights for 20-point rule (positive half)
    static constexpr double x[10] = {
        0.0765265211334973, 0.2277858511416451, 0.3737060887154195,
        0.5108670019508271, 0.6360536807265150, 0.7463319064601508,
        0.8391169718222188, 0.9122344282513259, 0.9639719272779138,
        0.9931285991850949};
    static constexpr double w[10] = {
        0.1527533871307258, 0.1491729864726037, 0.1420961093183820,
        0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
        0.0832767415767048, 0.0626720483341091, 0.0406014298003869,
        0.0176140071391521};
};

template <typename F>
double integrate(F f, double a, double b, int panels = 8) {
    if (!(b > a)) return 0.0;
    const double h = (b - a) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        const double half = 0.5 * h;
        double s = 0.0;
        for (int i = 0; i < GaussLegendre20::n; ++i) {
            s += GaussLegendre20::w[i] * (f(mid + half * GaussLegendre20::x[i]) +
                                          f(mid - half * GaussLegendre20::x[i]));
        }
        total += s * half;
    }
    return total;
}

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

} // namespace

TruthValue true_connection_probability(const FeatureDistribution& dist,
                                       const ConnectionFunction& cf,
                                       std::span<const double> x, TruthMethod method,
                                       long samples, RngStream* rng, const Metric& metric) {
    if (static_cast<int>(x.size()) != dist.dim())
        throw std::invalid_argument("true_connection_probability: x dimension mismatch");

    TruthValue t;
    switch (method) {
    case TruthMethod::empirical_exact: {
        const auto view = dist.as_empirical();
        if (!view)
            throw std::invalid_argument("empirical_exact truth needs an Empirical distribution");
        const FeatureSet& pts = *view->points;
        double sum = 0.0;
        for (int i = 0; i < pts.size(); ++i) sum += cf(metric(pts.point(i), x));
        t.value = sum / pts.size();
        t.method = TruthValue::Method::empirical_exact;
        t.samples = pts.size();
        return t;
    }
    case TruthMethod::numeric_integration: {
        const auto* beta = dist.as_beta();
        if (!beta || cf.kind() != ConnectionFunction::Kind::hard_threshold)
            throw std::invalid_argument(
                "numeric_integration truth supports BetaScalar with HardThreshold only");
        const double alpha = cf.parameter();
        const double lo = std::max(0.0, x[0] - alpha);
        const double hi = std::min(1.0, x[0] + alpha);
        const double lb = log_beta(beta->a, beta->b);
        const double a = beta->a, b = beta->b;
        t.value = integrate(
            [&](double u) {
                if (u <= 0.0 || u >= 1.0) return 0.0;
                return std::exp((a - 1.0) * std::log(u) + (b - 1.0) * std::log1p(-u) - lb);
            },
            lo, hi);
        t.method = TruthValue::Method::numeric_integration;
        return t;
    }
    case TruthMethod::monte_carlo: {
        if (!rng) throw std::invalid_argument("monte_carlo truth needs an rng stream");
        if (samples < 2) throw std::invalid_argument("monte_carlo truth needs >= 2 samples");
        std::vector<double> point(static_cast<std::size_t>(dist.dim()));
        double sum = 0.0, sumsq = 0.0;
        for (long i = 0; i < samples; ++i) {
            dist.sample_one(*rng, point.data());
            const double v = cf(metric(point, x));
            sum += v;
            sumsq += v * v;
        }
        const double mean = sum / static_cast<double>(samples);
        const double var =
            std::max(0.0, (sumsq - static_cast<double>(samples) * mean * mean) /
                              static_cast<double>(samples - 1));
        t.value = mean;
        t.method = TruthValue::Method::monte_carlo;
        t.std_error = std::sqrt(var / static_cast<double>(samples));
        t.samples = samples;
        return t;
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace localdeg
