// Command-line front end for the local connection probability toolkit.
//
// Subcommands: sample, estimate, mccv, truth, study <kind>, clt,
// wireless-size, bound, chart. All randomness flows from --seed; no
// wall-clock or OS entropy is used anywhere.
//
// Exit codes: 0 success, 1 configuration/usage error, 2 runtime error.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "localdeg/analysis.hpp"
#include "localdeg/cities.hpp"
#include "localdeg/config.hpp"
#include "localdeg/csv.hpp"
#include "localdeg/estimator.hpp"
#include "localdeg/experiments.hpp"
#include "localdeg/graph.hpp"
#include "localdeg/mccv.hpp"
#include "localdeg/model.hpp"
#include "localdeg/parallel.hpp"
#include "localdeg/svg.hpp"

namespace ld = localdeg;

namespace {

// ---------------------------------------------------------------------
// config schema
// ---------------------------------------------------------------------

const std::map<std::string, std::set<std::string>>& config_schema() {
    static const std::map<std::string, std::set<std::string>> schema{
        {"model",
         {"type", "communities", "intra", "inter", "origin_community", "fractions",
          "np_factors", "q_factor", "distribution", "beta_a", "beta_b", "dim", "components",
          "weights", "mean_1", "mean_2", "mean_3", "mean_4", "cov_1", "cov_2", "cov_3",
          "cov_4", "box_lo", "box_hi", "points_file", "cities_file", "with_replacement",
          "n", "edge_mode"}},
        {"connection", {"type", "alpha", "rate"}},
        {"origin", {"coords", "from_data"}},
        {"distance", {"metric"}},
        {"schemes", {"list", "gamma", "custom"}},
        {"mccv", {"replications", "fraction"}},
        {"study",
         {"replicates", "n_grid", "m_record_cap", "target_q", "verify_replicates",
          "m_grid"}},
        {"truth", {"method", "samples"}},
        {"clt", {"n", "p", "replicates", "mode"}},
        {"bound", {"k0", "k", "gamma", "n", "sigma2", "initial_error_sq", "approx_term"}},
        {"output", {"dir", "graph_file", "trace_file", "risk_file"}},
        {"run", {"study", "seed", "toolkit_version"}},
        {"run_values", {}},
    };
    return schema;
}

// command-line overrides applied on top of the config file
struct CliOverrides {
    std::string origin_from_data;
    std::string origin_coords;
};
CliOverrides g_overrides;

ld::Config load_config(const std::string& path) {
    ld::Config cfg = ld::Config::parse_file(path);
    if (!g_overrides.origin_from_data.empty()) {
        cfg.remove("origin", "coords");
        cfg.set("origin", "from_data", g_overrides.origin_from_data);
    } else if (!g_overrides.origin_coords.empty()) {
        cfg.remove("origin", "from_data");
        cfg.set("origin", "coords", g_overrides.origin_coords);
    }
    // run/run_values are manifest sections written by the toolkit; allow
    // re-reading manifests as configs
    auto schema = config_schema();
    for (const auto& sec : cfg.section_names())
        if (sec == "run_values") schema["run_values"] = [&] {
            std::set<std::string> keys;
            for (const auto& k : cfg.keys(sec)) keys.insert(k);
            return keys;
        }();
    cfg.enforce_schema(schema);
    return cfg;
}

// ---------------------------------------------------------------------
// builders from config sections
// ---------------------------------------------------------------------

ld::ConnectionFunction parse_connection(const ld::Config& cfg) {
    const std::string type = cfg.get("connection", "type");
    if (type == "hard_threshold")
        return ld::ConnectionFunction::hard_threshold(cfg.get_double("connection", "alpha"));
    if (type == "exponential_decay")
        return ld::ConnectionFunction::exponential_decay(cfg.get_double("connection", "rate"));
    throw ld::ConfigError("unknown connection type '" + type + "'");
}

ld::Metric parse_metric(const ld::Config& cfg) {
    ld::Metric m;
    const std::string kind = cfg.get_or("distance", "metric", "euclidean");
    if (kind == "euclidean") return m;
    if (kind == "haversine_km") {
        m.kind = ld::Metric::Kind::haversine_km;
        return m;
    }
    throw ld::ConfigError("unknown distance metric '" + kind + "'");
}

struct ParsedModel {
    ld::ModelSpec model;
    int n = 0;   ///< feature count for RCM commands ([model] n)
};

ld::FeatureDistribution parse_distribution(const ld::Config& cfg, ld::RngStream& rng,
                                           std::vector<ld::CityRecord>* city_records) {
    const std::string dist = cfg.get("model", "distribution");
    if (dist == "beta")
        return ld::FeatureDistribution::beta_scalar(cfg.get_double("model", "beta_a"),
                                                    cfg.get_double("model", "beta_b"));
    if (dist == "uniform_cube")
        return ld::FeatureDistribution::uniform_cube(
            static_cast<int>(cfg.get_long("model", "dim")));
    if (dist == "gaussian_mixture") {
        const int k = static_cast<int>(cfg.get_long("model", "components"));
        const auto weights = cfg.get_doubles("model", "weights");
        if (static_cast<int>(weights.size()) != k)
            throw ld::ConfigError("gaussian_mixture: weights list must match components");
        std::vector<ld::GaussianComponent> comps;
        for (int i = 1; i <= k; ++i) {
            ld::GaussianComponent c;
            c.weight = weights[static_cast<std::size_t>(i - 1)];
            c.mean = cfg.get_doubles("model", "mean_" + std::to_string(i));
            c.covariance = cfg.get_doubles("model", "cov_" + std::to_string(i));
            comps.push_back(std::move(c));
        }
        std::optional<std::pair<std::vector<double>, std::vector<double>>> box;
        if (cfg.has("model", "box_lo") || cfg.has("model", "box_hi"))
            box = {cfg.get_doubles("model", "box_lo"), cfg.get_doubles("model", "box_hi")};
        return ld::FeatureDistribution::gaussian_mixture(std::move(comps), std::move(box));
    }
    if (dist == "empirical") {
        const auto rows = ld::read_csv(cfg.get("model", "points_file"));
        if (rows.size() < 2) throw ld::ConfigError("empirical points file has no data rows");
        const int dim = static_cast<int>(rows[0].size()) - 1; // last column = weight
        if (dim < 1) throw ld::ConfigError("empirical points file needs coords + weight columns");
        std::vector<double> pts;
        std::vector<double> w;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            for (int c = 0; c < dim; ++c) pts.push_back(std::stod(rows[i][static_cast<std::size_t>(c)]));
            w.push_back(std::stod(rows[i].back()));
        }
        return ld::FeatureDistribution::empirical(
            dim, std::move(pts), std::move(w),
            cfg.get_bool_or("model", "with_replacement", true));
    }
    if (dist == "cities") {
        auto features = ld::load_city_features(cfg.get("model", "cities_file"),
                                               0, rng);
        if (city_records) *city_records = std::move(features.records);
        return std::move(features.distribution);
    }
    throw ld::ConfigError("unknown distribution '" + dist + "'");
}

std::vector<double> parse_origin(const ld::Config& cfg,
                                 const std::vector<ld::CityRecord>& records) {
    if (cfg.has("origin", "from_data")) {
        const std::string name = cfg.get("origin", "from_data");
        const auto found = ld::find_city(records, name);
        if (!found) throw ld::ConfigError("origin city '" + name + "' not found in data");
        return *found;
    }
    return cfg.get_doubles("origin", "coords");
}

ParsedModel parse_model(const ld::Config& cfg, std::uint64_t seed) {
    const std::string type = cfg.get("model", "type");
    ParsedModel out;
    if (type == "sbm") {
        ld::SbmSpec spec;
        spec.community_sizes = cfg.get_ints("model", "communities");
        spec.intra = cfg.get_doubles("model", "intra");
        spec.inter = cfg.get_double("model", "inter");
        spec.origin_community =
            static_cast<int>(cfg.get_long_or("model", "origin_community", 1));
        spec.validate();
        out.n = spec.n_total();
        out.model = std::move(spec);
        return out;
    }
    if (type == "sbm_growing") {
        ld::SbmGrowingSpec fam;
        if (cfg.has("model", "fractions")) {
            const auto f = cfg.get_doubles("model", "fractions");
            if (f.size() != 2) throw ld::ConfigError("sbm_growing: fractions must hold 2 values");
            fam.frac1 = f[0];
            fam.frac2 = f[1];
        }
        if (cfg.has("model", "np_factors")) fam.np_factors = cfg.get_doubles("model", "np_factors");
        fam.q_factor = cfg.get_double_or("model", "q_factor", 1.0);
        fam.origin_community = static_cast<int>(cfg.get_long_or("model", "origin_community", 1));
        out.model = fam;
        return out;
    }
    if (type == "rcm") {
        ld::RngStream rng = ld::RngStream::keyed(seed, 0x6369747973616d70ULL);
        std::vector<ld::CityRecord> records;
        ld::RcmModelSpec rcm{parse_distribution(cfg, rng, &records), parse_connection(cfg),
                             {}, parse_metric(cfg)};
        rcm.origin = parse_origin(cfg, records);
        if (static_cast<int>(rcm.origin.size()) != rcm.dist.dim())
            throw ld::ConfigError("origin dimension does not match the feature distribution");
        out.n = static_cast<int>(cfg.get_long_or("model", "n", 0));
        out.model = std::move(rcm);
        return out;
    }
    throw ld::ConfigError("unknown model type '" + type + "'");
}

std::vector<ld::WeightScheme> parse_schemes(const ld::Config& cfg) {
    std::vector<ld::WeightScheme> out;
    std::string list = cfg.get_or("schemes", "list", "annulus_size,constant_one");
    std::istringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        const std::string tag = item.substr(b, e - b + 1);
        if (tag == "custom") {
            out.push_back(ld::WeightScheme::custom(cfg.get_doubles("schemes", "custom")));
        } else if (tag == "geometric" || tag == "w3") {
            // no silent default: the step size shapes the estimator
            if (!cfg.has("schemes", "gamma"))
                throw ld::ConfigError(
                    "the geometric scheme needs an explicit [schemes] gamma");
            out.push_back(ld::WeightScheme::geometric(cfg.get_double("schemes", "gamma")));
        } else {
            out.push_back(ld::WeightScheme::from_tag(tag));
        }
    }
    if (out.empty()) throw ld::ConfigError("schemes list is empty");
    return out;
}

ld::SplitPlan parse_plan(const ld::Config& cfg, std::uint64_t seed) {
    ld::SplitPlan plan;
    plan.replications = static_cast<int>(cfg.get_long_or("mccv", "replications", 100));
    plan.fraction = cfg.get_double_or("mccv", "fraction", 0.5);
    plan.seed = seed;
    return plan;
}

ld::Graph build_graph(const ld::Config& cfg, std::uint64_t seed) {
    const ParsedModel pm = parse_model(cfg, seed);
    ld::RngStream rng = ld::RngStream::keyed(seed, 0x6772617068ULL);
    if (const auto* sbm = std::get_if<ld::SbmSpec>(&pm.model)) return ld::sample_sbm_graph(*sbm, rng);
    if (std::holds_alternative<ld::SbmGrowingSpec>(pm.model))
        throw ld::ConfigError("sampling one graph from sbm_growing needs [model] n via type=sbm");
    const auto& rcm = std::get<ld::RcmModelSpec>(pm.model);
    if (pm.n < 1) throw ld::ConfigError("[model] n (feature count) must be >= 1");
    const std::string mode_key = cfg.get_or("model", "edge_mode", "undirected");
    ld::EdgeMode mode;
    if (mode_key == "undirected") mode = ld::EdgeMode::undirected;
    else if (mode_key == "directed") mode = ld::EdgeMode::directed;
    else throw ld::ConfigError("unknown edge_mode '" + mode_key + "'");
    const ld::FeatureSet fs = rcm.dist.sample(pm.n, rng);
    return ld::sample_rcm_graph(fs, rcm.origin, rcm.cf, mode, rng, rcm.metric);
}

// ---------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------

int cmd_sample(const std::string& config_path, std::uint64_t seed, std::string out_path) {
    const ld::Config cfg = load_config(config_path);
    const ld::Graph g = build_graph(cfg, seed);
    if (out_path.empty()) out_path = cfg.get_or("output", "graph_file", "graph.csv");
    ld::write_edge_csv(g, out_path);
    std::cout << "graph: " << g.n_vertices() << " vertices, origin degree "
              << g.out_degree(0) << ", written to " << out_path << "\n";
    return 0;
}

int cmd_estimate(const std::string& config_path, std::uint64_t seed,
                 const std::string& graph_path, std::string out_path) {
    const ld::Config cfg = load_config(config_path);
    const auto schemes = parse_schemes(cfg);
    const ld::Graph g = graph_path.empty()
                            ? build_graph(cfg, seed)
                            : ld::read_edge_csv(graph_path);
    if (out_path.empty()) out_path = cfg.get_or("output", "trace_file", "trace.csv");
    const ld::EstimateTrace trace = ld::estimate_trace(g, schemes.front());
    ld::write_trace_csv(trace, out_path);
    std::cout << "p_hat(m=0) = " << ld::format_double(trace.values.front())
              << ", trace of " << trace.values.size() << " values written to " << out_path
              << "\n";
    return 0;
}

int cmd_mccv(const std::string& config_path, std::uint64_t seed,
             const std::string& graph_path, std::string out_path, bool select_scheme) {
    const ld::Config cfg = load_config(config_path);
    const auto schemes = parse_schemes(cfg);
    const ld::SplitPlan plan = parse_plan(cfg, seed);
    const ld::Graph g = graph_path.empty() ? build_graph(cfg, seed)
                                           : ld::read_edge_csv(graph_path);
    if (out_path.empty()) out_path = cfg.get_or("output", "risk_file", "risk.csv");

    // selection per scheme; --select-scheme additionally minimizes over
    // the scheme family by the attained risk
    double best_risk = 0.0;
    std::string best_scheme;
    int best_m = 0;
    double best_estimate = 0.0;
    bool first = true;
    for (const auto& scheme : schemes) {
        const ld::RiskCurve rc = ld::mccv_risk(g, scheme, plan);
        const int m_hat = ld::select_m(rc);
        const double estimate = ld::estimate_trace(g, scheme).at_clamped(m_hat);
        const double risk = rc.risk[static_cast<std::size_t>(m_hat)];
        std::cout << scheme.tag() << ": m_hat = " << m_hat
                  << ", estimate = " << ld::format_double(estimate)
                  << ", risk = " << ld::format_double(risk) << "\n";
        if (first || risk < best_risk) {
            best_risk = risk;
            best_scheme = scheme.tag();
            best_m = m_hat;
            best_estimate = estimate;
            first = false;
        }
        if (&scheme == &schemes.front()) ld::write_risk_csv(rc, out_path);
    }
    if (select_scheme)
        std::cout << "selected: " << best_scheme << " (m = " << best_m
                  << ", estimate = " << ld::format_double(best_estimate) << ")\n";
    return 0;
}

int cmd_truth(const std::string& config_path, std::uint64_t seed) {
    const ld::Config cfg = load_config(config_path);
    const ParsedModel pm = parse_model(cfg, seed);
    if (const auto* sbm = std::get_if<ld::SbmSpec>(&pm.model)) {
        std::cout << ld::format_double(ld::sbm_truth(*sbm).value) << "\n";
        return 0;
    }
    if (std::holds_alternative<ld::SbmGrowingSpec>(pm.model))
        throw ld::ConfigError("truth for sbm_growing: instantiate a size with type=sbm");
    const auto& rcm = std::get<ld::RcmModelSpec>(pm.model);
    const std::string method = cfg.get_or("truth", "method", "monte_carlo");
    ld::TruthValue t;
    if (method == "monte_carlo") {
        ld::RngStream rng = ld::RngStream::keyed(seed, 0x747275746843ULL);
        t = ld::true_connection_probability(rcm.dist, rcm.cf, rcm.origin,
                                            ld::TruthMethod::monte_carlo,
                                            cfg.get_long_or("truth", "samples", 1000000),
                                            &rng, rcm.metric);
        std::cout << ld::format_double(t.value) << " (std error "
                  << ld::format_double(t.std_error) << ")\n";
        return 0;
    }
    if (method == "numeric_integration")
        t = ld::true_connection_probability(rcm.dist, rcm.cf, rcm.origin,
                                            ld::TruthMethod::numeric_integration);
    else if (method == "empirical_exact")
        t = ld::true_connection_probability(rcm.dist, rcm.cf, rcm.origin,
                                            ld::TruthMethod::empirical_exact, 0, nullptr,
                                            rcm.metric);
    else
        throw ld::ConfigError("unknown truth method '" + method + "'");
    std::cout << ld::format_double(t.value) << "\n";
    return 0;
}

int cmd_study(const std::string& kind, const std::string& config_path, std::uint64_t seed,
              std::string out_dir) {
    const ld::Config cfg = load_config(config_path);
    if (out_dir.empty()) out_dir = cfg.get_or("output", "dir", "out");

    ld::ExperimentConfig ec{parse_model(cfg, seed).model,
                            parse_schemes(cfg),
                            {},
                            cfg.get_long_or("study", "replicates", 100),
                            parse_plan(cfg, 0),
                            seed,
                            static_cast<int>(cfg.get_long_or("study", "m_record_cap", -1))};
    if (cfg.has("study", "n_grid")) ec.n_grid = cfg.get_ints("study", "n_grid");

    ld::StudyOutput out;
    if (kind == "mse") {
        out = ld::run_mse_study(ec);
    } else if (kind == "mccv") {
        out = ld::run_mccv_study(ec);
    } else if (kind == "stability") {
        std::vector<int> m_grid{10, 20, 40, 80, 160, 320, 640, 1280};
        if (cfg.has("study", "m_grid")) m_grid = cfg.get_ints("study", "m_grid");
        const ld::Graph g = build_graph(cfg, seed);
        out = ld::run_mccv_stability(g, ec.schemes.front(), m_grid, ec.plan.fraction, seed);
    } else if (kind == "wireless") {
        out = ld::run_wireless_study(ec, cfg.get_double_or("study", "target_q", 0.9),
                                     cfg.get_long_or("study", "verify_replicates", 100000));
    } else if (kind == "design") {
        out = ld::run_design_benchmark(ld::design_benchmark_cells(), ec.schemes,
                                       ec.replicates, ec.plan, seed);
    } else {
        throw ld::ConfigError("unknown study '" + kind +
                              "' (expected mse|mccv|stability|wireless|design)");
    }
    ld::write_study_output(out, out_dir, &cfg, seed);
    std::cout << out.study << " study: " << out.records.size() << " records written to "
              << out_dir << "\n";
    return 0;
}

int cmd_clt(const std::string& config_path, std::uint64_t seed, long n_flag, double p_flag,
            long reps_flag, const std::string& out_path) {
    long n = n_flag;
    double p = p_flag;
    long reps = reps_flag;
    std::string mode = "binomial";
    std::optional<ld::Config> cfg;
    if (!config_path.empty()) {
        cfg = load_config(config_path);
        n = cfg->get_long_or("clt", "n", n);
        p = cfg->get_double_or("clt", "p", p);
        reps = cfg->get_long_or("clt", "replicates", reps);
        mode = cfg->get_or("clt", "mode", mode);
    }
    ld::RngStream rng = ld::RngStream::keyed(seed, 0x636c74ULL);
    ld::CltCheck res;
    if (mode == "binomial") {
        res = ld::clt_check_binomial(n, p, reps, rng);
    } else if (mode == "graph") {
        if (!cfg) throw ld::ConfigError("clt graph mode needs --config with an rcm model");
        const ParsedModel pm = parse_model(*cfg, seed);
        const auto& rcm = std::get<ld::RcmModelSpec>(pm.model);
        res = ld::clt_check_graph(rcm.dist, rcm.cf, rcm.origin, n, reps, rng, rcm.metric);
    } else {
        throw ld::ConfigError("unknown clt mode '" + mode + "'");
    }
    std::cout << "KS distance to N(0,1): " << ld::format_double(res.ks_distance) << "  (n="
              << n << ", p=" << ld::format_double(p) << ", replicates=" << reps << ")\n";
    if (!out_path.empty()) {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(res.z.size());
        for (std::size_t i = 0; i < res.z.size(); ++i)
            rows.push_back({std::to_string(i), ld::format_double(res.z[i])});
        ld::write_csv(out_path, {"replicate", "z"}, rows);
        std::cout << "standardized samples written to " << out_path << "\n";
    }
    return 0;
}

int cmd_wireless_size(double p, double q) {
    std::cout << ld::wireless_min_n(p, q) << "\n";
    return 0;
}

int cmd_bound(const std::string& config_path) {
    const ld::Config cfg = load_config(config_path);
    ld::OracleBoundInputs in;
    in.k0 = static_cast<int>(cfg.get_long("bound", "k0"));
    in.k = static_cast<int>(cfg.get_long("bound", "k"));
    in.gamma = cfg.get_doubles("bound", "gamma");
    in.n = cfg.get_long("bound", "n");
    in.sigma2 = cfg.get_double("bound", "sigma2");
    in.initial_error_sq = cfg.get_double("bound", "initial_error_sq");
    in.approx_term = cfg.get_double("bound", "approx_term");
    std::cout << "oracle bound (up to constant): " << ld::format_double(ld::oracle_bound_rhs(in))
              << "\n";
    return 0;
}

int cmd_chart(const std::string& csv_path, const std::string& kind, int x_col, int y_col,
              int series_col, bool log_y, const std::string& filter,
              const std::string& out_path) {
    ld::ChartSpec spec;
    if (kind == "line") spec.kind = ld::ChartSpec::Kind::line;
    else if (kind == "box") spec.kind = ld::ChartSpec::Kind::box;
    else if (kind == "bar") spec.kind = ld::ChartSpec::Kind::bar;
    else throw ld::ConfigError("unknown chart kind '" + kind + "'");
    spec.x_column = x_col;
    spec.y_column = y_col;
    spec.series_column = series_col;
    spec.log_y = log_y;

    auto rows = ld::read_csv(csv_path);
    if (!filter.empty()) {
        const auto colon = filter.find(':');
        if (colon == std::string::npos)
            throw ld::ConfigError("--filter expects <column>:<value>");
        const int col = std::stoi(filter.substr(0, colon));
        const std::string value = filter.substr(colon + 1);
        std::vector<std::vector<std::string>> kept;
        kept.push_back(rows.front());
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (col < static_cast<int>(rows[i].size()) &&
                rows[i][static_cast<std::size_t>(col)] == value)
                kept.push_back(rows[i]);
        rows = std::move(kept);
    }
    ld::render_svg(rows, spec, out_path);
    std::cout << "chart written to " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"local connection probability estimation toolkit"};
    app.require_subcommand(1);
    app.fallthrough(true); // --seed may follow the subcommand name

    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "master seed (all randomness derives from it)");
    app.add_option("--origin-from-data", g_overrides.origin_from_data,
                   "place the origin at a named row of the city data");
    app.add_option("--origin-coords", g_overrides.origin_coords,
                   "place the origin at explicit coordinates, e.g. 3,3");

    std::string config_path, graph_path, out_path, out_dir, study_kind;
    bool select_scheme = false;

    auto* sample = app.add_subcommand("sample", "sample a graph, write an edge-list CSV");
    sample->add_option("--config", config_path)->required();
    sample->add_option("--out", out_path);

    auto* estimate = app.add_subcommand("estimate", "estimate trace for a graph + scheme");
    estimate->add_option("--config", config_path)->required();
    estimate->add_option("--graph", graph_path);
    estimate->add_option("--out", out_path);

    auto* mccv = app.add_subcommand("mccv", "risk curve and selected m");
    mccv->add_option("--config", config_path)->required();
    mccv->add_option("--graph", graph_path);
    mccv->add_option("--out", out_path);
    mccv->add_flag("--select-scheme", select_scheme,
                   "also pick the scheme attaining the lowest risk");

    auto* truth = app.add_subcommand("truth", "local connection probability of the model");
    truth->add_option("--config", config_path)->required();

    auto* study = app.add_subcommand("study", "run an experiment study");
    study->add_option("kind", study_kind, "mse|mccv|stability|wireless|design")->required();
    study->add_option("--config", config_path)->required();
    study->add_option("--out-dir", out_dir);

    long clt_n = 10000, clt_reps = 10000;
    double clt_p = 0.01;
    std::string clt_out;
    auto* clt = app.add_subcommand("clt", "empirical-estimator CLT diagnostic");
    clt->add_option("--config", config_path);
    clt->add_option("--n", clt_n);
    clt->add_option("--p", clt_p);
    clt->add_option("--replicates", clt_reps);
    clt->add_option("--out", clt_out, "write the standardized samples as CSV");

    double ws_p = 0.0, ws_q = 0.9;
    auto* wsize = app.add_subcommand("wireless-size", "minimal n for a connectivity target");
    wsize->add_option("--p", ws_p, "estimated connection probability")->required();
    wsize->add_option("--q", ws_q, "target connectivity probability");

    auto* bound = app.add_subcommand("bound", "oracle bound diagnostic");
    bound->add_option("--config", config_path)->required();

    std::string chart_csv, chart_kind = "line", chart_out = "chart.svg", chart_filter;
    int chart_x = 0, chart_y = 1, chart_series = -1;
    bool chart_logy = false;
    auto* chart = app.add_subcommand("chart", "render a result CSV to SVG");
    chart->add_option("--csv", chart_csv)->required();
    chart->add_option("--kind", chart_kind);
    chart->add_option("--x-col", chart_x);
    chart->add_option("--y-col", chart_y);
    chart->add_option("--series-col", chart_series);
    chart->add_flag("--log-y", chart_logy);
    chart->add_option("--filter", chart_filter, "keep rows with <column>:<value>");
    chart->add_option("--out", chart_out);

    if (argc <= 1) {
        std::cerr << app.help();
        return 1;
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (sample->parsed()) return cmd_sample(config_path, seed, out_path);
        if (estimate->parsed()) return cmd_estimate(config_path, seed, graph_path, out_path);
        if (mccv->parsed())
            return cmd_mccv(config_path, seed, graph_path, out_path, select_scheme);
        if (truth->parsed()) return cmd_truth(config_path, seed);
        if (study->parsed()) return cmd_study(study_kind, config_path, seed, out_dir);
        if (clt->parsed()) return cmd_clt(config_path, seed, clt_n, clt_p, clt_reps, clt_out);
        if (wsize->parsed()) return cmd_wireless_size(ws_p, ws_q);
        if (bound->parsed()) return cmd_bound(config_path);
        if (chart->parsed())
            return cmd_chart(chart_csv, chart_kind, chart_x, chart_y, chart_series,
                             chart_logy, chart_filter, chart_out);
        std::cerr << app.help();
        return 1;
    } catch (const ld::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
