#include "localdeg/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "localdeg/csv.hpp"

namespace localdeg {

WeightScheme WeightScheme::geometric(double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0))
        throw std::invalid_argument("geometric weights: gamma must lie in (0,1)");
    return {Kind::geometric, gamma, {}};
}

WeightScheme WeightScheme::custom(std::vector<double> tail) {
    for (double w : tail)
        if (!(w >= 0.0)) throw std::invalid_argument("custom weights must be >= 0");
    return {Kind::custom, 0.0, std::move(tail)};
}

std::string WeightScheme::tag() const {
    switch (kind) {
    case Kind::annulus_size: return "annulus_size";
    case Kind::constant_one: return "constant_one";
    case Kind::geometric: return "geometric";
    case Kind::custom: return "custom";
    }
    return "?";
}

WeightScheme WeightScheme::from_tag(const std::string& tag, double gamma) {
    if (tag == "annulus_size" || tag == "w1") return annulus_size();
    if (tag == "constant_one" || tag == "w2") return constant_one();
    if (tag == "geometric" || tag == "w3") return geometric(gamma);
    throw std::invalid_argument("unknown weight scheme '" + tag + "'");
}

std::vector<double> weights_for(const WeightScheme& scheme, const Annuli& annuli) {
    const int ecc = annuli.eccentricity();
    std::vector<double> w(static_cast<std::size_t>(ecc) + 1);
    w[0] = 1.0;
    switch (scheme.kind) {
    case WeightScheme::Kind::annulus_size:
        for (int l = 1; l <= ecc; ++l)
            w[static_cast<std::size_t>(l)] =
                static_cast<double>(annuli.layers[static_cast<std::size_t>(l)].size());
        break;
    case WeightScheme::Kind::constant_one:
        for (int l = 1; l <= ecc; ++l) w[static_cast<std::size_t>(l)] = 1.0;
        break;
    case WeightScheme::Kind::geometric: {
        if (!(scheme.gamma > 0.0 && scheme.gamma < 1.0))
            throw std::invalid_argument("geometric weights: gamma must lie in (0,1)");
        const double r = 1.0 / (1.0 - scheme.gamma);
        double f = 1.0;
        for (int l = 1; l <= ecc; ++l) {
            f *= r;
            w[static_cast<std::size_t>(l)] = scheme.gamma * f;
        }
        break;
    }
    case WeightScheme::Kind::custom:
        if (static_cast<int>(scheme.custom_tail.size()) < ecc)
            throw std::invalid_argument("custom weights: list shorter than the eccentricity");
        for (int l = 1; l <= ecc; ++l)
            w[static_cast<std::size_t>(l)] = scheme.custom_tail[static_cast<std::size_t>(l - 1)];
        break;
    }
    return w;
}

namespace {

// Per-annulus sums S_l = sum over the annulus (in inclusion order) of
// B_i / degree_norm. Both the trace and the direct estimator are built
// from these sums with identical floating-point operation order, which
// is what makes the boundary-value identity exact.
std::vector<double> annulus_value_sums(const Graph& g,
                                       const std::vector<std::vector<int>>& order) {
    const double denom = static_cast<double>(g.degree_norm());
    std::vector<double> sums(order.size(), 0.0);
    for (std::size_t l = 0; l < order.size(); ++l) {
        double s = 0.0;
        for (int v : order[l]) s += static_cast<double>(g.out_degree(v)) / denom;
        sums[l] = s;
    }
    return sums;
}

} // namespace

EstimateTrace estimate_trace(const Graph& g, const WeightScheme& scheme, RngStream* shuffle) {
    const Annuli ann = bfs_annuli(g);
    std::vector<std::vector<int>> order = ann.layers;
    if (shuffle) {
        for (auto& layer : order) {
            for (int i = static_cast<int>(layer.size()) - 1; i > 0; --i) {
                const int j = static_cast<int>(shuffle->uniform_below(
                    static_cast<std::uint64_t>(i) + 1));
                std::swap(layer[static_cast<std::size_t>(i)],
                          layer[static_cast<std::size_t>(j)]);
            }
        }
        order[0] = {0};
    }

    const std::vector<double> w = weights_for(scheme, ann);
    const double denom = static_cast<double>(g.degree_norm());

    EstimateTrace trace;
    trace.values.reserve(static_cast<std::size_t>(ann.reachable_count()));
    trace.inclusion_order.reserve(trace.values.capacity());
    trace.annulus_boundaries.reserve(ann.layers.size());

    double num_complete = 0.0;
    double den_complete = 0.0;
    for (std::size_t l = 0; l < order.size(); ++l) {
        const double a_l = static_cast<double>(order[l].size());
        const double per_vertex = w[l] / a_l;
        double s = 0.0;
        int count = 0;
        for (int v : order[l]) {
            s += static_cast<double>(g.out_degree(v)) / denom;
            ++count;
            const double num = num_complete + per_vertex * s;
            const double den = count == static_cast<int>(order[l].size())
                                   ? den_complete + w[l]
                                   : den_complete + static_cast<double>(count) * per_vertex;
            trace.values.push_back(num / den);
            trace.inclusion_order.push_back(v);
        }
        num_complete += per_vertex * s;
        den_complete += w[l];
        trace.annulus_boundaries.push_back(static_cast<int>(trace.values.size()) - 1);
    }
    return trace;
}

double estimate_pk(const Graph& g, const WeightScheme& scheme, int k) {
    if (k < 0) throw std::invalid_argument("estimate_pk: k must be >= 0");
    const Annuli ann = bfs_annuli(g);
    const std::vector<double> w = weights_for(scheme, ann);
    const std::vector<double> sums = annulus_value_sums(g, ann.layers);
    const int kk = std::min(k, ann.eccentricity());

    double num = 0.0, den = 0.0;
    for (int l = 0; l <= kk; ++l) {
        const double a_l = static_cast<double>(ann.layers[static_cast<std::size_t>(l)].size());
        num += (w[static_cast<std::size_t>(l)] / a_l) * sums[static_cast<std::size_t>(l)];
        den += w[static_cast<std::size_t>(l)];
    }
    return num / den;
}

double estimate_pk_recursive(const Graph& g, const WeightScheme& scheme, int k) {
    if (k < 0) throw std::invalid_argument("estimate_pk_recursive: k must be >= 0");
    const Annuli ann = bfs_annuli(g);
    const std::vector<double> w = weights_for(scheme, ann);
    const std::vector<double> sums = annulus_value_sums(g, ann.layers);
    const int kk = std::min(k, ann.eccentricity());

    double p = sums[0]; // B_0 / n
    double w_total = w[0];
    for (int step = 0; step < kk; ++step) {
        const std::size_t l = static_cast<std::size_t>(step) + 1;
        const double a = static_cast<double>(ann.layers[l].size());
        w_total += w[l];
        const double gamma_k = w[l] / w_total;
        const double annulus_mean = sums[l] / a;
        p += gamma_k * (annulus_mean - p);
    }
    return p;
}

std::vector<double> gamma_sequence(const WeightScheme& scheme, const Annuli& annuli) {
    const std::vector<double> w = weights_for(scheme, annuli);
    std::vector<double> gamma;
    if (w.size() < 2) return gamma;
    gamma.reserve(w.size() - 1);
    double total = w[0];
    for (std::size_t l = 1; l < w.size(); ++l) {
        total += w[l];
        gamma.push_back(w[l] / total);
    }
    return gamma;
}

void write_trace_csv(const EstimateTrace& trace, const std::filesystem::path& path) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(trace.values.size());
    std::size_t boundary_idx = 0;
    for (std::size_t m = 0; m < trace.values.size(); ++m) {
        while (boundary_idx < trace.annulus_boundaries.size() &&
               static_cast<int>(m) > trace.annulus_boundaries[boundary_idx])
            ++boundary_idx;
        rows.push_back({std::to_string(m), format_double(trace.values[m]),
                        std::to_string(boundary_idx),
                        std::to_string(trace.inclusion_order[m])});
    }
    write_csv(path, {"m", "estimate", "annulus", "vertex_added"}, rows);
}

} // namespace localdeg
