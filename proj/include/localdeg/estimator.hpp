#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "localdeg/graph.hpp"
#include "localdeg/rng.hpp"

namespace localdeg {

/// Per-annulus weight family. w_0 = 1 in every variant; `custom`
/// supplies w_1, w_2, ... explicitly.
///
/// For the geometric family, gamma is the constant step size of the
/// recursion. When p(x) is Hoelder beta-smooth a sensible scale is
/// gamma ~ (log n)^((2 beta - 1)/(2 beta + 1)) * n^(-2 beta / (2 beta + 1)),
/// but beta is unobservable, so no default is applied automatically;
/// callers must choose gamma.
struct WeightScheme {
    enum class Kind { annulus_size, constant_one, geometric, custom };

    Kind kind = Kind::constant_one;
    double gamma = 0.1;               ///< geometric only, in (0,1)
    std::vector<double> custom_tail;  ///< custom only: w_1..; all >= 0

    static WeightScheme annulus_size() { return {Kind::annulus_size, 0.0, {}}; }
    static WeightScheme constant_one() { return {Kind::constant_one, 0.0, {}}; }
    static WeightScheme geometric(double gamma);
    static WeightScheme custom(std::vector<double> tail);

    std::string tag() const;
    static WeightScheme from_tag(const std::string& tag, double gamma = 0.1);
};

/// w_0..w_ecc for the given annuli.
///  annulus_size: w_l = |V_l \ V_{l-1}|
///  constant_one: w_l = 1
///  geometric:    w_l = gamma (1-gamma)^{-l}
std::vector<double> weights_for(const WeightScheme& scheme, const Annuli& annuli);

/// The sequence of estimates indexed by the number of included
/// non-origin vertices m. Vertices enter origin-first, then annulus by
/// annulus (ascending index within an annulus unless a shuffle stream
/// was supplied). Each vertex i carries weight w_l / a_l with a_l the
/// full size of its annulus, so the value at m = |V_k| - 1 reproduces
/// the distance-k estimator exactly.
struct EstimateTrace {
    std::vector<double> values;           ///< values[m], m = 0..m_max
    std::vector<int> annulus_boundaries;  ///< boundaries[k] = |V_k| - 1
    std::vector<int> inclusion_order;     ///< vertex added at step m (order[0] = 0)

    int m_max() const { return static_cast<int>(values.size()) - 1; }

    /// values[min(m, m_max)] — constant extension past the reachable set.
    double at_clamped(int m) const {
        return values[static_cast<std::size_t>(std::min(m, m_max()))];
    }
};

EstimateTrace estimate_trace(const Graph& g, const WeightScheme& scheme,
                             RngStream* shuffle = nullptr);

/// Direct evaluation of the distance-k weighted estimator. k past the
/// eccentricity clamps. Shares its accumulation order with
/// estimate_trace, so trace values at annulus boundaries match this
/// bit for bit.
double estimate_pk(const Graph& g, const WeightScheme& scheme, int k);

/// Stochastic-approximation form: p_{k+1} = p_k + gamma_k G_k starting
/// from p_0 = B_0 / n. Agrees with estimate_pk to ~1e-12.
double estimate_pk_recursive(const Graph& g, const WeightScheme& scheme, int k);

/// gamma_k = w_{k+1} / sum_{l<=k+1} w_l for k = 0..ecc-1, evaluated
/// from the definition (not the per-family shortcuts).
std::vector<double> gamma_sequence(const WeightScheme& scheme, const Annuli& annuli);

/// Columns: m, estimate, annulus, vertex_added.
void write_trace_csv(const EstimateTrace& trace, const std::filesystem::path& path);

} // namespace localdeg
