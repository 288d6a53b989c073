#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "localdeg/model.hpp"

using namespace localdeg;

namespace {

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

// regularized incomplete beta for Beta(2,5): I_x = 1 - (1-x)^5 (1+5x)
double beta25_cdf(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return 1.0 - std::pow(1.0 - x, 5.0) * (1.0 + 5.0 * x);
}

} // namespace

TEST_CASE("sample_features edge cases") {
    RngStream rng(1);
    const auto cube = FeatureDistribution::uniform_cube(3);
    CHECK(cube.sample(0, rng).size() == 0);

    const auto single = FeatureDistribution::empirical(2, {1.0, 1.0}, {1.0});
    const FeatureSet fs = single.sample(5, rng);
    REQUIRE(fs.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(fs.point(i)[0] == 1.0);
        CHECK(fs.point(i)[1] == 1.0);
    }
}

TEST_CASE("beta feature mean matches the analytic value") {
    RngStream rng(2);
    const auto beta = FeatureDistribution::beta_scalar(2.0, 5.0);
    const int n = 1000000;
    const FeatureSet fs = beta.sample(n, rng);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += fs.point(i)[0];
    const double var = 10.0 / (49.0 * 8.0);
    CHECK(std::abs(sum / n - 2.0 / 7.0) < 3.0 * std::sqrt(var / n));
}

TEST_CASE("distribution invariants are enforced at construction") {
    CHECK_THROWS_AS(FeatureDistribution::beta_scalar(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(FeatureDistribution::uniform_cube(0), std::invalid_argument);
    CHECK_THROWS_AS(FeatureDistribution::empirical(2, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(FeatureDistribution::empirical(2, {1.0, 2.0}, {-1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(FeatureDistribution::empirical(2, {1.0, 2.0}, {0.0}),
                    std::invalid_argument);

    std::vector<GaussianComponent> bad(1);
    bad[0] = {1.0, {0.0, 0.0}, {1.0, 2.0, 2.0, 1.0}}; // not positive definite
    CHECK_THROWS_AS(FeatureDistribution::gaussian_mixture(bad), std::invalid_argument);

    std::vector<GaussianComponent> asym(1);
    asym[0] = {1.0, {0.0, 0.0}, {1.0, 0.5, 0.2, 1.0}};
    CHECK_THROWS_AS(FeatureDistribution::gaussian_mixture(asym), std::invalid_argument);
}

TEST_CASE("empirical sampling without replacement exhausts the support") {
    RngStream rng(3);
    const auto d = FeatureDistribution::empirical(1, {1.0, 2.0, 3.0}, {1.0, 1.0, 1.0}, false);
    const FeatureSet fs = d.sample(3, rng);
    std::set<double> seen;
    for (int i = 0; i < 3; ++i) seen.insert(fs.point(i)[0]);
    CHECK(seen == std::set<double>{1.0, 2.0, 3.0});
    RngStream rng2(4);
    CHECK_THROWS_AS(d.sample(4, rng2), std::invalid_argument);
}

TEST_CASE("truncated mixture sampling stays inside the box") {
    RngStream rng(5);
    const auto dist = wireless_mixture();
    const FeatureSet fs = dist.sample(20000, rng);
    for (int i = 0; i < fs.size(); ++i) {
        CHECK(fs.point(i)[0] >= 0.0);
        CHECK(fs.point(i)[0] <= 10.0);
        CHECK(fs.point(i)[1] >= 0.0);
        CHECK(fs.point(i)[1] <= 10.0);
    }
}

TEST_CASE("rcm sampler degenerate connection functions") {
    RngStream rng(6);
    const auto cube = FeatureDistribution::uniform_cube(2);
    const FeatureSet fs = cube.sample(10, rng);
    const std::vector<double> origin{0.5, 0.5};

    const Graph empty = sample_rcm_graph(fs, origin, ConnectionFunction::hard_threshold(0.0),
                                         EdgeMode::undirected, rng);
    for (int v = 0; v < empty.n_vertices(); ++v) CHECK(empty.out_degree(v) == 0);

    const Graph full = sample_rcm_graph(fs, origin, ConnectionFunction::hard_threshold(10.0),
                                        EdgeMode::undirected, rng);
    for (int v = 0; v < full.n_vertices(); ++v) CHECK(full.out_degree(v) == full.n_other());
    CHECK(full.degree_norm() == 10);
}

TEST_CASE("rcm sampler on collinear scalar features") {
    // vertices at 0 (origin), 0.5, 1.0 with threshold 0.6: edges 0-1 and 1-2 only
    RngStream rng(7);
    FeatureSet fs(1, 2);
    fs.point(0)[0] = 0.5;
    fs.point(1)[0] = 1.0;
    const std::vector<double> origin{0.0};
    const Graph g = sample_rcm_graph(fs, origin, ConnectionFunction::hard_threshold(0.6),
                                     EdgeMode::undirected, rng);
    CHECK(g.out_degree(0) == 1);
    CHECK(g.out_degree(1) == 2);
    CHECK(g.out_degree(2) == 1);
    CHECK(g.out_neighbors(0)[0] == 1);
    CHECK(g.out_neighbors(2)[0] == 1);
}

TEST_CASE("rcm dimension mismatch is rejected") {
    RngStream rng(8);
    const auto cube = FeatureDistribution::uniform_cube(2);
    const FeatureSet fs = cube.sample(4, rng);
    const std::vector<double> origin{0.5, 0.5, 0.5};
    CHECK_THROWS_AS(sample_rcm_graph(fs, origin, ConnectionFunction::hard_threshold(1.0),
                                     EdgeMode::undirected, rng),
                    std::invalid_argument);
}

TEST_CASE("conditional edge frequency matches rho at fixed features") {
    RngStream feature_rng(9);
    const auto cube = FeatureDistribution::uniform_cube(2);
    const FeatureSet fs = cube.sample(5, feature_rng);
    const std::vector<double> origin{0.2, 0.8};
    const auto cf = ConnectionFunction::exponential_decay(1.3);

    // rho for the pair (0, 3): distance between origin and feature #2
    const Metric metric;
    const double rho = cf(metric(origin, fs.point(2)));

    const int reps = 10000;
    int hits = 0;
    for (int r = 0; r < reps; ++r) {
        RngStream rng = RngStream::keyed(123, 77, static_cast<std::uint64_t>(r));
        const Graph g = sample_rcm_graph(fs, origin, cf, EdgeMode::undirected, rng);
        const auto nb = g.out_neighbors(0);
        hits += std::binary_search(nb.begin(), nb.end(), 3) ? 1 : 0;
    }
    const double se = std::sqrt(rho * (1.0 - rho) / reps);
    CHECK(std::abs(static_cast<double>(hits) / reps - rho) < 3.0 * se);
}

TEST_CASE("directed rcm draws each ordered pair independently") {
    RngStream feature_rng(10);
    const auto cube = FeatureDistribution::uniform_cube(2);
    const FeatureSet fs = cube.sample(30, feature_rng);
    const std::vector<double> origin{0.5, 0.5};
    RngStream rng(11);
    const Graph g = sample_rcm_graph(fs, origin, ConnectionFunction::exponential_decay(0.7),
                                     EdgeMode::directed, rng);
    CHECK(g.edge_mode() == EdgeMode::directed);
    // asymmetry should appear with overwhelming probability
    bool asym = false;
    for (int v = 0; v < g.n_vertices() && !asym; ++v)
        for (int u : g.out_neighbors(v)) {
            const auto back = g.out_neighbors(u);
            if (!std::binary_search(back.begin(), back.end(), v)) {
                asym = true;
                break;
            }
        }
    CHECK(asym);
}

TEST_CASE("sbm sampler degenerate probabilities") {
    RngStream rng(12);
    const SbmSpec complete{{4, 3}, {1.0, 1.0}, 1.0, 1};
    const Graph g1 = sample_sbm_graph(complete, rng);
    for (int v = 0; v < g1.n_vertices(); ++v) CHECK(g1.out_degree(v) == g1.n_other());

    const SbmSpec empty{{4, 3}, {0.0, 0.0}, 0.0, 1};
    const Graph g2 = sample_sbm_graph(empty, rng);
    for (int v = 0; v < g2.n_vertices(); ++v) CHECK(g2.out_degree(v) == 0);
}

TEST_CASE("sbm graph structure: labels, norm, origin community") {
    RngStream rng(13);
    const Graph g = sample_sbm_graph(section3_sbm(), rng);
    CHECK(g.n_vertices() == 50);
    CHECK(g.n_other() == 49);
    CHECK(g.degree_norm() == 50);
    REQUIRE(g.communities() != nullptr);
    const auto& comm = *g.communities();
    CHECK(comm[0] == 1);
    int c1 = 0, c2 = 0, c3 = 0;
    for (int c : comm) (c == 1 ? c1 : c == 2 ? c2 : c3) += 1;
    CHECK(c1 == 10);
    CHECK(c2 == 25);
    CHECK(c3 == 15);
}

TEST_CASE("sbm mean of B0/n matches the closed-form truth") {
    const int reps = 20000;
    double sum = 0.0;
    for (int r = 0; r < reps; ++r) {
        RngStream rng = RngStream::keyed(99, 1, static_cast<std::uint64_t>(r));
        const Graph g = sample_sbm_graph(section3_sbm(), rng);
        sum += static_cast<double>(g.out_degree(0)) / 50.0;
    }
    // sd of B0/50 is sqrt(9*0.21 + 40*0.0099)/50
    const double sd = std::sqrt(9.0 * 0.21 + 40.0 * 0.0099) / 50.0;
    CHECK(std::abs(sum / reps - 0.062) < 3.0 * sd / std::sqrt(static_cast<double>(reps)));
}

TEST_CASE("sbm_truth closed form") {
    const TruthValue t = sbm_truth(section3_sbm());
    CHECK(t.value == doctest::Approx(0.062).epsilon(1e-12));
    CHECK(t.method == TruthValue::Method::closed_form);

    const SbmSpec zero{{5, 5}, {0.0, 0.4}, 0.0, 1};
    CHECK(sbm_truth(zero).value == 0.0);

    const SbmSpec pair{{2}, {0.7}, 0.0, 1};
    CHECK(sbm_truth(pair).value == doctest::Approx(0.35).epsilon(1e-12));

    CHECK(sbm_truth_for_community(section3_sbm(), 2).value ==
          doctest::Approx((24.0 * 0.5 + 25.0 * 0.01) / 50.0).epsilon(1e-12));
}

TEST_CASE("truth by quadrature agrees with the closed-form beta cdf") {
    const auto beta = FeatureDistribution::beta_scalar(2.0, 5.0);
    for (double alpha : {0.01, 0.1, 0.3}) {
        const auto cf = ConnectionFunction::hard_threshold(alpha);
        for (double x : {0.05, 0.1, 0.2857142857142857, 0.5, 0.95}) {
            const std::vector<double> origin{x};
            const TruthValue t = true_connection_probability(beta, cf, origin,
                                                             TruthMethod::numeric_integration);
            const double expected =
                beta25_cdf(std::min(1.0, x + alpha)) - beta25_cdf(std::max(0.0, x - alpha));
            CHECK(t.value == doctest::Approx(expected).epsilon(1e-10));
        }
    }
}

TEST_CASE("monte carlo truth: degenerate and two-point cases") {
    RngStream rng(14);
    const auto cube = FeatureDistribution::uniform_cube(2);
    const std::vector<double> x{0.5, 0.5};
    const TruthValue zero = true_connection_probability(
        cube, ConnectionFunction::hard_threshold(0.0), x, TruthMethod::monte_carlo, 10000,
        &rng);
    CHECK(zero.value == 0.0);

    const auto two = FeatureDistribution::empirical(2, {0.0, 0.0, 3.0, 4.0}, {1.0, 1.0});
    const auto cf = ConnectionFunction::exponential_decay(1.0);
    const std::vector<double> probe{0.0, 0.0};
    const TruthValue t =
        true_connection_probability(two, cf, probe, TruthMethod::empirical_exact);
    CHECK(t.value == doctest::Approx(0.5 * (1.0 + std::exp(-5.0))).epsilon(1e-15));
}

TEST_CASE("empirical-exact truth equals an independent brute-force loop bitwise") {
    RngStream rng(15);
    const auto cube = FeatureDistribution::uniform_cube(3);
    const FeatureSet pts = cube.sample(500, rng);
    std::vector<double> w(500, 1.0);
    const auto emp = FeatureDistribution::empirical(3, pts.data, w);
    const auto cf = ConnectionFunction::exponential_decay(2.0 / 3.0);
    const std::vector<double> x{0.25, 0.5, 0.75};

    const TruthValue t = true_connection_probability(emp, cf, x, TruthMethod::empirical_exact);

    double sum = 0.0;
    for (int i = 0; i < 500; ++i) {
        double d2 = 0.0;
        for (int c = 0; c < 3; ++c) {
            const double diff = pts.point(i)[c] - x[static_cast<std::size_t>(c)];
            d2 += diff * diff;
        }
        sum += std::exp(-(2.0 / 3.0) * std::sqrt(d2));
    }
    CHECK(t.value == sum / 500.0); // bit-for-bit
}

TEST_CASE("wireless-model truth matches the quadrature reference") {
    // independent 2-D quadrature of the truncated mixture gives 0.0192150
    RngStream rng(16);
    const TruthValue t = true_connection_probability(
        wireless_mixture(), ConnectionFunction::hard_threshold(2.0), {{3.0, 3.0}},
        TruthMethod::monte_carlo, 200000, &rng);
    CHECK(std::abs(t.value - 0.0192150) < 3.0 * t.std_error + 1e-5);
}

TEST_CASE("truth method mismatches are rejected") {
    RngStream rng(17);
    const auto cube = FeatureDistribution::uniform_cube(2);
    const std::vector<double> x{0.5, 0.5};
    CHECK_THROWS_AS(true_connection_probability(cube, ConnectionFunction::hard_threshold(0.1),
                                                x, TruthMethod::empirical_exact),
                    std::invalid_argument);
    CHECK_THROWS_AS(true_connection_probability(cube, ConnectionFunction::hard_threshold(0.1),
                                                x, TruthMethod::numeric_integration),
                    std::invalid_argument);
    CHECK_THROWS_AS(true_connection_probability(cube, ConnectionFunction::hard_threshold(0.1),
                                                x, TruthMethod::monte_carlo, 100, nullptr),
                    std::invalid_argument);
}

TEST_CASE("rho is non-increasing on sampled abscissae") {
    RngStream rng(18);
    for (const auto cf : {ConnectionFunction::hard_threshold(1.7),
                          ConnectionFunction::exponential_decay(0.4)}) {
        for (int i = 0; i < 2000; ++i) {
            const double s = 10.0 * rng.uniform01();
            const double t = s + 10.0 * rng.uniform01();
            CHECK(cf(s) >= cf(t));
            CHECK(cf(s) >= 0.0);
            CHECK(cf(s) <= 1.0);
        }
    }
}

TEST_CASE("identical seed reproduces the identical graph") {
    const auto cube = FeatureDistribution::uniform_cube(2);
    const std::vector<double> origin{0.5, 0.5};
    const auto cf = ConnectionFunction::exponential_decay(1.0);
    const auto build = [&] {
        RngStream rng(2024);
        const FeatureSet fs = cube.sample(40, rng);
        return sample_rcm_graph(fs, origin, cf, EdgeMode::undirected, rng);
    };
    const Graph a = build();
    const Graph b = build();
    REQUIRE(a.n_vertices() == b.n_vertices());
    for (int v = 0; v < a.n_vertices(); ++v) {
        const auto na = a.out_neighbors(v);
        const auto nb = b.out_neighbors(v);
        REQUIRE(na.size() == nb.size());
        for (std::size_t i = 0; i < na.size(); ++i) CHECK(na[i] == nb[i]);
    }
}

TEST_CASE("haversine metric gives great-circle kilometres") {
    const Metric h{Metric::Kind::haversine_km};
    const std::vector<double> a{0.0, 0.0};
    const std::vector<double> b{0.0, 1.0};
    CHECK(h(a, b) == doctest::Approx(111.19).epsilon(0.01));
    const std::vector<double> c{90.0, 0.0};
    const std::vector<double> d{-90.0, 0.0};
    CHECK(h(c, d) == doctest::Approx(2.0 * 3.14159265358979 / 2.0 * 6371.0).epsilon(0.01));
}
