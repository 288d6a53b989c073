#pragma once

#include <vector>

#include "localdeg/connection.hpp"
#include "localdeg/features.hpp"
#include "localdeg/model.hpp"
#include "localdeg/rng.hpp"

namespace localdeg {

struct MonteCarloEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long samples = 0;
};

/// Inputs of the oracle error bound for the recursion run from k0 to k.
/// `gamma` holds gamma_{k0}..gamma_k. The universal multiplicative
/// constant of the bound is taken as 1, so the output is a diagnostic
/// "up to constant", not a certified majorant.
struct OracleBoundInputs {
    int k0 = 0;
    int k = 0;
    std::vector<double> gamma;
    long n = 0;
    double sigma2 = 0.0;          ///< Var P_ij, in [0, 1/4]
    double initial_error_sq = 0.0;///< E |delta_{k0}|^2
    double approx_term = 0.0;     ///< E max_{i in V_{k+1}} |p(X_i) - p(x)|^2

    void validate() const;
};

/// E|delta_{k0}|^2 exp(-2 sum gamma) + sum gamma^2
///   + (sum gamma)^2 [ (3 + 4 sigma^2 log n)/n + approx ].
double oracle_bound_rhs(const OracleBoundInputs& in);

/// Sample variance of rho(d(X, Y)) over i.i.d. pairs X, Y ~ F.
MonteCarloEstimate estimate_sigma2(const FeatureDistribution& dist,
                                   const ConnectionFunction& cf, long samples,
                                   RngStream& rng, const Metric& metric = {});

/// E max_{i in V_{k+1}} (p(X_i) - p(x))^2, by simulating RCM graphs and
/// evaluating p at each reached feature. `truth` picks the per-vertex
/// p() evaluation; monte_carlo uses `truth_samples` draws per vertex.
MonteCarloEstimate estimate_approx_term(const FeatureDistribution& dist,
                                        const ConnectionFunction& cf,
                                        std::span<const double> x, int n, int k,
                                        int replicates, RngStream& rng,
                                        TruthMethod truth = TruthMethod::monte_carlo,
                                        long truth_samples = 20000);

/// SBM version; p() per community is closed form.
MonteCarloEstimate estimate_approx_term_sbm(const SbmSpec& spec, int k, int replicates,
                                            RngStream& rng);

struct MomentConditionCheck {
    double lhs = 0.0;   ///< [E{rho(d(X,Y)) - p(X)}^3]^2
    double rhs = 0.0;   ///< n [E{rho(d(X,Y)) - p(X)}^2]^3
    double ratio = 0.0; ///< lhs / rhs (0 when both vanish)
};

/// Monte Carlo diagnostic for the moment condition; p(X) is evaluated
/// by quadrature or the empirical-exact rule when available, otherwise
/// by a nested Monte Carlo with `truth_samples` draws.
MomentConditionCheck check_moment_condition(const FeatureDistribution& dist,
                                            const ConnectionFunction& cf, long n,
                                            long samples, RngStream& rng,
                                            long truth_samples = 20000);

struct CltCheck {
    std::vector<double> z;      ///< standardized samples
    double ks_distance = 0.0;   ///< sup |F_hat - Phi|
};

/// Kolmogorov-Smirnov distance of sorted samples to the standard normal.
double ks_to_standard_normal(std::vector<double> z);

/// Z = sqrt(n p / (1-p)) (p_hat0 / p - 1) with B_0 ~ Bin(n, p) drawn
/// directly (the out-degree law of the origin).
CltCheck clt_check_binomial(long n, double p, long replicates, RngStream& rng);

/// Same check with B_0 read off sampled origin edges of the RCM.
CltCheck clt_check_graph(const FeatureDistribution& dist, const ConnectionFunction& cf,
                         std::span<const double> x, long n, long replicates,
                         RngStream& rng, const Metric& metric = {});

/// Smallest nbar with (1 - p_hat)^nbar <= 1 - q, i.e.
/// ceil(log(1-q) / log(1-p_hat)), bracket-corrected in floating point.
long wireless_min_n(double p_hat, double q = 0.9);

/// Fraction of replicates with B_0 > 0, B_0 ~ Bin(n, p).
MonteCarloEstimate verify_connectivity_binomial(double p, long n, long replicates,
                                                RngStream& rng);

/// Same fraction with the origin's edges sampled from the model.
MonteCarloEstimate verify_connectivity_graph(const FeatureDistribution& dist,
                                             const ConnectionFunction& cf,
                                             std::span<const double> x, long n,
                                             long replicates, RngStream& rng,
                                             const Metric& metric = {});

} // namespace localdeg
