// Acceptance suite: one check per numbered criterion, each printing a
// PASS/FAIL line with the measured quantities next to their gates.
// Run everything, or a single criterion with --criterion <k>.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "localdeg/analysis.hpp"
#include "localdeg/cities.hpp"
#include "localdeg/csv.hpp"
#include "localdeg/estimator.hpp"
#include "localdeg/experiments.hpp"
#include "localdeg/mccv.hpp"
#include "localdeg/model.hpp"
#include "localdeg/parallel.hpp"

using namespace localdeg;

namespace {

int checks_failed = 0;

void clause(bool pass, const std::string& text) {
    std::cout << "    [" << (pass ? "ok" : "FAIL") << "] " << text << "\n";
    if (!pass) ++checks_failed;
}

std::string num(double v) { return format_double(v); }

const SbmSpec& section3_sbm() {
    static const SbmSpec spec{{10, 25, 15}, {0.3, 0.5, 0.3}, 0.01, 1};
    return spec;
}

FeatureDistribution wireless_mixture() {
    std::vector<GaussianComponent> comps(3);
    comps[0] = {0.4, {9.0, 9.0}, {4.0, 1.2, 1.2, 4.0}};
    comps[1] = {0.3, {8.0, 3.0}, {4.0, 0.0, 0.0, 4.0}};
    comps[2] = {0.3, {3.0, 9.0}, {4.0, 2.0, 2.0, 4.0}};
    return FeatureDistribution::gaussian_mixture(
        std::move(comps), {{std::vector<double>{0.0, 0.0}, std::vector<double>{10.0, 10.0}}});
}

Graph random_graph(int n_other, double p, RngStream& rng) {
    Graph g(n_other, EdgeMode::undirected);
    for (int i = 0; i <= n_other; ++i)
        for (int j = i + 1; j <= n_other; ++j)
            if (rng.uniform01() < p) g.add_edge(i, j);
    g.finish();
    return g;
}

WeightScheme mixed_scheme(std::uint64_t pick, RngStream& rng) {
    switch (pick % 4) {
    case 0: return WeightScheme::annulus_size();
    case 1: return WeightScheme::constant_one();
    case 2: return WeightScheme::geometric(0.05 + 0.9 * rng.uniform01());
    default: {
        std::vector<double> tail;
        for (int i = 0; i < 128; ++i) tail.push_back(0.05 + 3.0 * rng.uniform01());
        return WeightScheme::custom(std::move(tail));
    }
    }
}

// ---------------------------------------------------------------- 1
void criterion_1() {
    const double t = sbm_truth(section3_sbm()).value;
    clause(std::abs(t - 0.062) < 1e-12,
           "sbm_truth(c=(10,25,15), p=(.3,.5,.3), q=.01, j0=1) = " + num(t) +
               " (expected exactly 0.062)");
}

// ---------------------------------------------------------------- 2
void criterion_2() {
    RngStream rng = RngStream::keyed(20240801, 2, 0);
    const TruthValue t =
        true_connection_probability(wireless_mixture(), ConnectionFunction::hard_threshold(2.0),
                                    {{3.0, 3.0}}, TruthMethod::monte_carlo, 1000000, &rng);
    clause(std::abs(t.value - 0.021745) <= 0.001,
           "Monte Carlo truth at x=(3,3): " + num(t.value) + " +- " + num(t.std_error) +
               " vs printed 0.021745 +- 0.001 (derived quadrature reference: 0.019215)");

    const long n_bar = wireless_min_n(0.021745, 0.9);
    clause(n_bar == 105, "wireless_min_n(0.021745, 0.9) = " + std::to_string(n_bar) +
                             " (expected exactly 105)");

    RngStream vrng = RngStream::keyed(20240801, 2, 1);
    const MonteCarloEstimate frac = verify_connectivity_binomial(0.021745, 105, 100000, vrng);
    clause(std::abs(frac.value - 0.9047) <= 0.01,
           "verify_connectivity (binomial shortcut, p=0.021745, n=105, 1e5 reps): " +
               num(frac.value) + " vs 0.9047 +- 0.01");
}

// ---------------------------------------------------------------- 3
void criterion_3() {
    RngStream meta(3);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 3 + static_cast<int>(meta.uniform_below(98));
        const double p = 0.02 + 0.45 * meta.uniform01();
        RngStream rng = RngStream::keyed(333, static_cast<std::uint64_t>(trial));
        const Graph g = random_graph(n, p, rng);
        const WeightScheme s = mixed_scheme(static_cast<std::uint64_t>(trial), meta);
        const Annuli ann = bfs_annuli(g);
        for (int k = 0; k <= ann.eccentricity(); ++k)
            worst = std::max(worst,
                             std::abs(estimate_pk_recursive(g, s, k) - estimate_pk(g, s, k)));
    }
    clause(worst <= 1e-12, "max |recursive - direct| over 1000 graphs, all k: " + num(worst) +
                               " (gate 1e-12)");
}

// ---------------------------------------------------------------- 4
void criterion_4() {
    RngStream meta(4);
    double geo_dev = 0.0, const_dev = 0.0;
    bool annulus_exact = true;
    for (int trial = 0; trial < 300; ++trial) {
        RngStream rng = RngStream::keyed(444, static_cast<std::uint64_t>(trial));
        const Graph g = random_graph(10 + static_cast<int>(meta.uniform_below(80)),
                                     0.03 + 0.3 * meta.uniform01(), rng);
        const Annuli ann = bfs_annuli(g);
        if (ann.eccentricity() < 1) continue;
        const auto cum = ann.cumulative_sizes();

        const double gamma = 0.05 + 0.9 * meta.uniform01();
        for (double gi : gamma_sequence(WeightScheme::geometric(gamma), ann))
            geo_dev = std::max(geo_dev, std::abs(gi - gamma));

        const auto g2 = gamma_sequence(WeightScheme::constant_one(), ann);
        for (std::size_t i = 0; i < g2.size(); ++i)
            const_dev = std::max(const_dev,
                                 std::abs(g2[i] - 1.0 / (static_cast<double>(i) + 2.0)));

        const auto g1 = gamma_sequence(WeightScheme::annulus_size(), ann);
        for (std::size_t i = 0; i < g1.size(); ++i) {
            const double expected = static_cast<double>(ann.layers[i + 1].size()) /
                                    static_cast<double>(cum[i + 1]);
            if (g1[i] != expected) annulus_exact = false;
        }
    }
    clause(geo_dev <= 1e-12,
           "geometric gamma sequence constant, max deviation " + num(geo_dev) + " (gate 1e-12)");
    clause(annulus_exact, "annulus-size gamma_i = |V_{i+1}\\V_i| / |V_{i+1}| exactly");
    clause(const_dev <= 1e-12,
           "constant-one gamma_i = 1/(i+2) from the definition, max deviation " +
               num(const_dev));
}

// ---------------------------------------------------------------- 5
void criterion_5() {
    RngStream meta(5);
    bool all_exact = true;
    for (int trial = 0; trial < 1000; ++trial) {
        RngStream rng = RngStream::keyed(555, static_cast<std::uint64_t>(trial));
        const Graph g = random_graph(3 + static_cast<int>(meta.uniform_below(98)),
                                     0.02 + 0.4 * meta.uniform01(), rng);
        const WeightScheme s = mixed_scheme(static_cast<std::uint64_t>(trial), meta);
        const EstimateTrace t = estimate_trace(g, s);
        const Annuli ann = bfs_annuli(g);
        for (int k = 0; k <= ann.eccentricity(); ++k) {
            const int b = t.annulus_boundaries[static_cast<std::size_t>(k)];
            if (t.values[static_cast<std::size_t>(b)] != estimate_pk(g, s, k))
                all_exact = false;
        }
    }
    clause(all_exact,
           "trace value at m = |V_k|-1 equals estimate_pk bit-for-bit on 1000 graphs");
}

// ---------------------------------------------------------------- 6
void criterion_6() {
    const long reps = 100000;
    std::vector<double> p0(static_cast<std::size_t>(reps));
    parallel_for(reps, [&](long r) {
        RngStream rng = RngStream::keyed(666, static_cast<std::uint64_t>(r));
        const Graph g = sample_sbm_graph(section3_sbm(), rng);
        p0[static_cast<std::size_t>(r)] =
            static_cast<double>(g.out_degree(0)) / static_cast<double>(g.degree_norm());
    });
    double sum = 0.0, sumsq = 0.0;
    for (double v : p0) {
        sum += v;
        sumsq += v * v;
    }
    const double nd = static_cast<double>(reps);
    const double mean = sum / nd;
    const double var = (sumsq - nd * mean * mean) / (nd - 1.0);
    const double se_mean = std::sqrt(var / nd);
    clause(std::abs(mean - 0.062) <= 3.0 * se_mean,
           "mean(p_check_0) = " + num(mean) + " vs 0.062, |diff| = " +
               num(std::abs(mean - 0.062)) + " <= 3 se = " + num(3.0 * se_mean));

    // standard error of the sample variance via the fourth central moment
    double m4 = 0.0;
    for (double v : p0) m4 += std::pow(v - mean, 4.0);
    m4 /= nd;
    const double se_var = std::sqrt(std::max(0.0, m4 - var * var) / nd);
    const double target = 0.062 * 0.938 / 50.0;
    clause(std::abs(var - target) <= 3.0 * se_var,
           "Var(p_check_0) = " + num(var) + " vs binomial target " + num(target) +
               ", |diff| = " + num(std::abs(var - target)) + " vs 3 se = " + num(3.0 * se_var) +
               " (fixed-size block model predicts " + num((9 * 0.21 + 40 * 0.0099) / 2500.0) +
               ")");
}

// ---------------------------------------------------------------- 7
void criterion_7() {
    const long reps = 10000;
    const int m_hi = 49;
    const double truth = sbm_truth(section3_sbm()).value;
    const std::vector<WeightScheme> schemes{WeightScheme::annulus_size(),
                                            WeightScheme::constant_one(),
                                            WeightScheme::geometric(0.1)};
    std::vector<std::vector<double>> sums(schemes.size(),
                                          std::vector<double>(m_hi + 1, 0.0));
    std::vector<std::vector<std::vector<double>>> slots(
        static_cast<std::size_t>(reps),
        std::vector<std::vector<double>>(schemes.size(), std::vector<double>(m_hi + 1)));
    parallel_for(reps, [&](long r) {
        RngStream rng = RngStream::keyed(777, static_cast<std::uint64_t>(r));
        const Graph g = sample_sbm_graph(section3_sbm(), rng);
        for (std::size_t si = 0; si < schemes.size(); ++si) {
            const EstimateTrace t = estimate_trace(g, schemes[si]);
            for (int m = 0; m <= m_hi; ++m) {
                const double err = t.at_clamped(m) - truth;
                slots[static_cast<std::size_t>(r)][si][static_cast<std::size_t>(m)] =
                    err * err;
            }
        }
    });
    for (const auto& rep : slots)
        for (std::size_t si = 0; si < schemes.size(); ++si)
            for (int m = 0; m <= m_hi; ++m)
                sums[si][static_cast<std::size_t>(m)] += rep[si][static_cast<std::size_t>(m)];

    std::vector<double> mins(schemes.size());
    std::vector<int> argmins(schemes.size());
    for (std::size_t si = 0; si < schemes.size(); ++si) {
        double best = sums[si][0];
        int arg = 0;
        for (int m = 1; m <= m_hi; ++m)
            if (sums[si][static_cast<std::size_t>(m)] < best) {
                best = sums[si][static_cast<std::size_t>(m)];
                arg = m;
            }
        mins[si] = best / static_cast<double>(reps);
        argmins[si] = arg;
        const double mse0 = sums[si][0] / static_cast<double>(reps);
        clause(mins[si] < mse0, schemes[si].tag() + ": min MSE = " + num(mins[si]) + " at m=" +
                                    std::to_string(arg) + " vs MSE(0) = " + num(mse0));
    }
    const double best23 = std::min(mins[1], mins[2]);
    clause(best23 <= mins[0], "min over schemes 2-3 (" + num(best23) +
                                  ") <= scheme-1 minimum (" + num(mins[0]) + ")");
}

// ---------------------------------------------------------------- 8
void criterion_8() {
    const long reps = 2000;
    const int keep = 25;           // floor(0.52 * 49) = 25 non-origin vertices
    const int m_hi = keep;
    const double truth = sbm_truth(section3_sbm()).value;
    const WeightScheme scheme = WeightScheme::constant_one();

    std::vector<std::vector<double>> tau(static_cast<std::size_t>(reps),
                                         std::vector<double>(m_hi + 1));
    parallel_for(reps, [&](long r) {
        RngStream rng = RngStream::keyed(888, static_cast<std::uint64_t>(r), 0);
        const Graph g = sample_sbm_graph(section3_sbm(), rng);
        SplitPlan plan{50, 0.52, RngStream::keyed(888, static_cast<std::uint64_t>(r), 1).next_u64()};
        const RiskCurve rc = mccv_risk(g, scheme, plan);

        RngStream rng2 = RngStream::keyed(888, static_cast<std::uint64_t>(r), 2);
        const Graph h_full = sample_sbm_graph(section3_sbm(), rng2);
        std::vector<int> pool(49);
        for (int i = 0; i < 49; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
        for (int i = 0; i < keep; ++i) {
            const int j = i + static_cast<int>(rng2.uniform_below(static_cast<std::uint64_t>(49 - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        }
        std::vector<int> subset(pool.begin(), pool.begin() + keep);
        subset.push_back(0);
        auto [half, map] = induced_subgraph(h_full, subset);
        const EstimateTrace ht = estimate_trace(half, scheme);

        for (int m = 0; m <= m_hi; ++m) {
            const double rm =
                rc.risk[std::min<std::size_t>(static_cast<std::size_t>(m), rc.risk.size() - 1)];
            const double err = ht.at_clamped(m) - truth;
            tau[static_cast<std::size_t>(r)][static_cast<std::size_t>(m)] = rm - err * err;
        }
    });

    // deviation of the profile from its own grid mean, replicate-paired
    std::vector<double> dev_mean(m_hi + 1, 0.0), dev_sq(m_hi + 1, 0.0);
    for (long r = 0; r < reps; ++r) {
        const auto& row = tau[static_cast<std::size_t>(r)];
        double row_mean = 0.0;
        for (double v : row) row_mean += v;
        row_mean /= static_cast<double>(row.size());
        for (int m = 0; m <= m_hi; ++m) {
            const double d = row[static_cast<std::size_t>(m)] - row_mean;
            dev_mean[static_cast<std::size_t>(m)] += d;
            dev_sq[static_cast<std::size_t>(m)] += d * d;
        }
    }
    double worst_z = 0.0;
    int worst_m = 0;
    for (int m = 0; m <= m_hi; ++m) {
        const double mean = dev_mean[static_cast<std::size_t>(m)] / static_cast<double>(reps);
        const double var =
            dev_sq[static_cast<std::size_t>(m)] / static_cast<double>(reps) - mean * mean;
        const double se = std::sqrt(std::max(var, 1e-20) / static_cast<double>(reps));
        const double z = std::abs(mean) / se;
        if (z > worst_z) {
            worst_z = z;
            worst_m = m;
        }
    }
    clause(worst_z <= 3.0, "profile E[R(m)] - MSE_half(m) constant in m: max |z| = " +
                               num(worst_z) + " at m=" + std::to_string(worst_m) +
                               " over m=0.." + std::to_string(m_hi) + " (gate 3)");
}

// ---------------------------------------------------------------- 9
void criterion_9() {
    const long reps = 1000;
    const SbmGrowingSpec family;
    const SbmSpec spec = family.at(801);
    const double truth = sbm_truth(spec).value;
    const WeightScheme scheme = WeightScheme::geometric(0.1);

    std::vector<double> ratios(static_cast<std::size_t>(reps));
    std::vector<char> defined(static_cast<std::size_t>(reps), 0);
    parallel_for(reps, [&](long r) {
        RngStream rng = RngStream::keyed(999, static_cast<std::uint64_t>(r), 0);
        const Graph g = sample_sbm_graph(spec, rng);
        SplitPlan plan{100, 0.5,
                       RngStream::keyed(999, static_cast<std::uint64_t>(r), 1).next_u64()};
        const MccvEstimate est = estimate_with_mccv(g, scheme, plan);
        const double p0 = static_cast<double>(g.out_degree(0)) /
                          static_cast<double>(g.degree_norm());
        const double den = std::abs(p0 - truth);
        const double nm = std::abs(est.estimate - truth);
        if (den > 0.0 && nm > 0.0) {
            ratios[static_cast<std::size_t>(r)] = std::log(nm / den);
            defined[static_cast<std::size_t>(r)] = 1;
        } else if (den > 0.0) {
            ratios[static_cast<std::size_t>(r)] = -50.0; // exact estimate
            defined[static_cast<std::size_t>(r)] = 1;
        }
    });
    std::vector<double> vals;
    for (long r = 0; r < reps; ++r)
        if (defined[static_cast<std::size_t>(r)]) vals.push_back(ratios[static_cast<std::size_t>(r)]);
    std::sort(vals.begin(), vals.end());
    const double median = vals[vals.size() / 2];
    double frac_neg = 0.0;
    for (double v : vals) frac_neg += v < 0.0 ? 1.0 : 0.0;
    frac_neg /= static_cast<double>(vals.size());
    clause(median < 0.0, "median log error ratio (growing family, n=801, scheme 3, M=100): " +
                             num(median) + " (fraction improving: " + num(frac_neg) + ")");
}

// ---------------------------------------------------------------- 10
void criterion_10() {
    RngStream rng = RngStream::keyed(1010, 0);
    const CltCheck res = clt_check_binomial(10000, 0.01, 10000, rng);
    clause(res.ks_distance <= 0.05, "KS distance at n=1e4, p=0.01, 1e4 replicates: " +
                                        num(res.ks_distance) + " (gate 0.05)");
}

// ---------------------------------------------------------------- 11
void criterion_11() {
    const auto base = std::filesystem::temp_directory_path() / "localdeg_acceptance_det";
    std::filesystem::remove_all(base);

    const auto run_all = [&](const std::string& tag) {
        const auto dir = base / tag;
        ExperimentConfig mse_cfg;
        mse_cfg.model = section3_sbm();
        mse_cfg.schemes = {WeightScheme::annulus_size(), WeightScheme::geometric(0.1)};
        mse_cfg.replicates = 200;
        mse_cfg.master_seed = 11;
        mse_cfg.m_record_cap = 15;
        write_study_output(run_mse_study(mse_cfg), dir, nullptr, 11);

        ExperimentConfig mccv_cfg = mse_cfg;
        mccv_cfg.replicates = 60;
        mccv_cfg.plan.replications = 10;
        write_study_output(run_mccv_study(mccv_cfg), dir, nullptr, 11);

        RngStream rng = RngStream::keyed(11, 3);
        const Graph g = sample_sbm_graph(section3_sbm(), rng);
        write_study_output(run_mccv_stability(g, WeightScheme::constant_one(),
                                              {10, 20, 40}, 0.5, 11),
                           dir, nullptr, 11);
        return dir;
    };

    std::vector<std::filesystem::path> dirs;
    for (const char* threads : {"1", "2", "4"}) {
        setenv("LOCALDEG_THREADS", threads, 1);
        dirs.push_back(run_all(std::string("threads_") + threads));
    }
    unsetenv("LOCALDEG_THREADS");

    const auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    bool identical = true;
    for (const char* file : {"mse_records.csv", "mse_aggregates.csv", "mccv_records.csv",
                             "mccv_aggregates.csv", "stability_records.csv"}) {
        const std::string ref = slurp(dirs[0] / file);
        if (ref.empty()) identical = false;
        for (std::size_t d = 1; d < dirs.size(); ++d)
            if (slurp(dirs[d] / file) != ref) identical = false;
    }
    clause(identical,
           "mse/mccv/stability study CSVs byte-identical for LOCALDEG_THREADS in {1,2,4}");
    std::filesystem::remove_all(base);
}

// ---------------------------------------------------------------- 12
void criterion_12() {
    // Substitute check 1: empirical-exact truth equals an independent
    // brute-force loop, bit for bit, on a synthetic city table of the
    // real dataset's size (the original is proprietary).
    std::ostringstream csv;
    csv << "name,country,population,latitude,longitude\n";
    RngStream gen(12);
    const int rows = 15549;
    for (int i = 0; i < rows; ++i)
        csv << "city" << i << ",cc," << 1 + gen.uniform_below(5000000) << ","
            << format_double(35.0 + 25.0 * gen.uniform01()) << ","
            << format_double(-10.0 + 40.0 * gen.uniform01()) << "\n";
    const auto file = std::filesystem::temp_directory_path() / "localdeg_acceptance_cities.csv";
    {
        std::ofstream out(file, std::ios::binary);
        out << csv.str();
    }
    RngStream rng(13);
    const CityFeatures cf = load_city_features(file, 250, rng);
    const auto probe = find_city(cf.records, "city4242");
    const auto rho = ConnectionFunction::exponential_decay(2.0 / 3.0);
    const TruthValue t =
        true_connection_probability(cf.distribution, rho, *probe, TruthMethod::empirical_exact);
    double sum = 0.0;
    for (const auto& rec : cf.records) {
        const double dlat = rec.latitude - (*probe)[0];
        const double dlon = rec.longitude - (*probe)[1];
        sum += std::exp(-(2.0 / 3.0) * std::sqrt(dlat * dlat + dlon * dlon));
    }
    clause(t.value == sum / rows,
           "empirical-exact truth == brute-force recomputation bit-for-bit over " +
               std::to_string(rows) + " synthetic cities (value " + num(t.value) + ")");
    std::filesystem::remove(file);

    // Substitute check 2: the derived oracle truths for the design
    // benchmark, with the printed table values logged for comparison.
    const auto cells = design_benchmark_cells();
    const StudyOutput dry =
        run_design_benchmark(cells, {WeightScheme::constant_one()}, 0, SplitPlan{5, 0.5, 0}, 12);
    std::cout << "    derived design-benchmark truths at n=50 (printed table in "
                 "parentheses):\n";
    const std::vector<std::pair<std::string, double>> printed{
        {"beta_x0.5_n50", 2.83e-7},          {"beta_x0.1_n50", 2.51e-2},
        {"beta_x2_7_n50", 5.93e-2},          {"gaussian_mixture_x1_1_n50", 3.15e-2},
        {"gaussian_mixture_x0_0_n50", 4.45e-2}, {"gaussian_mixture_x1.75_n50", 5.50e-2},
        {"uniform_cube_face_n50", 6.13e-3},  {"uniform_cube_edge_n50", 1.20e-2},
        {"uniform_cube_center_n50", 2.35e-2}};
    for (const auto& [key, table_value] : printed) {
        for (const auto& [k, v] : dry.manifest_extra)
            if (k == "truth_" + key)
                std::cout << "      " << key << ": " << v << "  (" << num(table_value)
                          << ")\n";
    }

    // the oracle itself is validated against closed forms
    const auto beta = FeatureDistribution::beta_scalar(2.0, 5.0);
    const double q_oracle =
        true_connection_probability(beta, ConnectionFunction::hard_threshold(0.01), {{0.5}},
                                    TruthMethod::numeric_integration)
            .value;
    const auto cdf = [](double x) { return 1.0 - std::pow(1.0 - x, 5.0) * (1.0 + 5.0 * x); };
    const double q_closed = cdf(0.51) - cdf(0.49);
    clause(std::abs(q_oracle - q_closed) < 1e-10,
           "beta quadrature oracle matches the closed-form cdf: " + num(q_oracle) + " vs " +
               num(q_closed));

    double cube_truth = 0.0;
    for (const auto& [k, v] : dry.manifest_extra)
        if (k == "truth_uniform_cube_center_n50") cube_truth = std::stod(v);
    const double ball = 4.0 / 3.0 * 3.14159265358979323846 * 0.008;
    clause(std::abs(cube_truth - ball) < 6e-4,
           "uniform-cube centre truth " + num(cube_truth) +
               " matches the ball volume " + num(ball) + " (Monte Carlo tolerance)");
}

struct Entry {
    int id;
    void (*fn)();
    const char* title;
};

const Entry kCriteria[] = {
    {1, criterion_1, "block-model truth"},
    {2, criterion_2, "wireless numbers"},
    {3, criterion_3, "recursion equivalence"},
    {4, criterion_4, "gamma identities"},
    {5, criterion_5, "subsequence consistency"},
    {6, criterion_6, "empirical-estimator law"},
    {7, criterion_7, "oracle improvement"},
    {8, criterion_8, "cross-validation bias constancy"},
    {9, criterion_9, "cross-validation improvement"},
    {10, criterion_10, "CLT diagnostic"},
    {11, criterion_11, "determinism across thread counts"},
    {12, criterion_12, "excluded-data substitutes"},
};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[i + 1]);
            ++i;
        } else {
            std::cerr << "usage: acceptance [--criterion <1..12>]\n";
            return 1;
        }
    }

    int failed_criteria = 0;
    for (const Entry& e : kCriteria) {
        if (only != 0 && e.id != only) continue;
        const int before = checks_failed;
        std::cout << "criterion " << e.id << " (" << e.title << "):\n";
        e.fn();
        const bool pass = checks_failed == before;
        std::cout << "criterion " << e.id << ": " << (pass ? "PASS" : "FAIL") << "\n";
        if (!pass) ++failed_criteria;
    }
    if (failed_criteria > 0) {
        std::cout << failed_criteria << " criterion/criteria FAILED\n";
        return 1;
    }
    std::cout << "all selected criteria passed\n";
    return 0;
}
