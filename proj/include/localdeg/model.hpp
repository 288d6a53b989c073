#pragma once

#include <span>
#include <vector>

#include "localdeg/connection.hpp"
#include "localdeg/features.hpp"
#include "localdeg/graph.hpp"
#include "localdeg/rng.hpp"

namespace localdeg {

/// Stochastic block model. `community_sizes` counts every vertex,
/// origin included: the sampled graph has n = sum(c_j) vertices, with
/// the origin holding one of community `origin_community`'s slots.
struct SbmSpec {
    std::vector<int> community_sizes;      ///< c_1..c_J, positive
    std::vector<double> intra;             ///< p_1..p_J in [0,1]
    double inter = 0.0;                    ///< q in [0,1]
    int origin_community = 1;              ///< 1-based j0

    int n_total() const;
    void validate() const;
};

struct TruthValue {
    enum class Method { closed_form, numeric_integration, monte_carlo, empirical_exact };
    double value = 0.0;
    Method method = Method::closed_form;
    double std_error = 0.0;   ///< finite for monte_carlo, 0 otherwise
    long samples = 0;
};

/// n i.i.d. feature draws.
FeatureSet sample_features(const FeatureDistribution& dist, int n, RngStream& rng);

/// Random connection model graph: vertex 0 carries `origin_x`, vertices
/// 1..n the given features. Edge probabilities rho(d(X_i, X_j)) are
/// computed pairwise on the fly, each consumed by a single uniform draw
/// (one per unordered pair when undirected, one per ordered pair when
/// directed); the probability matrix is never materialized.
Graph sample_rcm_graph(const FeatureSet& features, std::span<const double> origin_x,
                       const ConnectionFunction& cf,
                       EdgeMode mode, RngStream& rng,
                       const Metric& metric = {});

/// SBM graph: undirected, origin at vertex 0 in its community, the
/// remaining community labels spread over vertex indices by a seeded
/// uniform permutation so that vertex index carries no community
/// information. degree_norm is set to sum(c_j). Community labels
/// (1-based) are attached to the graph.
Graph sample_sbm_graph(const SbmSpec& spec, RngStream& rng);

/// Closed form ((c_j0 - 1) p_j0 + (n - c_j0) q) / n.
TruthValue sbm_truth(const SbmSpec& spec);

/// Same closed form evaluated for a vertex of an arbitrary community.
TruthValue sbm_truth_for_community(const SbmSpec& spec, int community);

enum class TruthMethod { monte_carlo, numeric_integration, empirical_exact };

/// Local connection probability p(x) = E rho(d(X, x)).
///  - monte_carlo: sample mean over `samples` draws, with standard error;
///  - numeric_integration: BetaScalar + HardThreshold only (1-D
///    Gauss-Legendre over [x-alpha, x+alpha] intersect [0,1]);
///  - empirical_exact: unweighted average of rho over all stored points.
TruthValue true_connection_probability(const FeatureDistribution& dist,
                                       const ConnectionFunction& cf,
                                       std::span<const double> x,
                                       TruthMethod method,
                                       long samples = 1000000,
                                       RngStream* rng = nullptr,
                                       const Metric& metric = {});

} // namespace localdeg
