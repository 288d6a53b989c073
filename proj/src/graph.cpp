#include "localdeg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>

#include "localdeg/csv.hpp"

namespace localdeg {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_vertices())
        throw std::out_of_range("Graph: vertex index " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    if (mode_ == EdgeMode::undirected)
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
}

void Graph::finish() {
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::vector<int> Annuli::cumulative_sizes() const {
    std::vector<int> out(layers.size());
    int cum = 0;
    for (std::size_t l = 0; l < layers.size(); ++l) {
        cum += static_cast<int>(layers[l].size());
        out[l] = cum;
    }
    return out;
}

int Annuli::reachable_count() const {
    int cum = 0;
    for (const auto& layer : layers) cum += static_cast<int>(layer.size());
    return cum;
}

Annuli bfs_annuli(const Graph& g, GeodesicMode mode) {
    const int n = g.n_vertices();

    // symmetrized view of a directed graph needs the in-edges as well
    std::vector<std::vector<int>> extra;
    if (g.edge_mode() == EdgeMode::directed && mode == GeodesicMode::symmetrized) {
        extra.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            for (int u : g.out_neighbors(v)) extra[static_cast<std::size_t>(u)].push_back(v);
    }

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[0] = 1;
    Annuli ann;
    ann.layers.push_back({0});
    std::vector<int> frontier{0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier) {
            for (int u : g.out_neighbors(v)) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    next.push_back(u);
                }
            }
            if (!extra.empty()) {
                for (int u : extra[static_cast<std::size_t>(v)]) {
                    if (!seen[static_cast<std::size_t>(u)]) {
                        seen[static_cast<std::size_t>(u)] = 1;
                        next.push_back(u);
                    }
                }
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        frontier = next;
        ann.layers.push_back(std::move(next));
    }
    return ann;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& keep) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty() || sorted.front() != 0)
        throw std::invalid_argument("induced_subgraph: keep set must contain the origin");
    if (sorted.back() >= g.n_vertices())
        throw std::out_of_range("induced_subgraph: keep set references missing vertex");

    std::vector<int> old_to_new(static_cast<std::size_t>(g.n_vertices()), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        old_to_new[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);

    Graph sub(static_cast<int>(sorted.size()) - 1, g.edge_mode());
    for (int old_v : sorted) {
        const int new_v = old_to_new[static_cast<std::size_t>(old_v)];
        for (int old_u : g.out_neighbors(old_v)) {
            const int new_u = old_to_new[static_cast<std::size_t>(old_u)];
            if (new_u < 0) continue;
            if (g.edge_mode() == EdgeMode::undirected) {
                if (old_v < old_u) sub.add_edge(new_v, new_u);
            } else {
                sub.add_edge(new_v, new_u);
            }
        }
    }
    sub.finish();

    if (const FeatureSet* fs = g.features()) {
        FeatureSet kept(fs->dim, static_cast<int>(sorted.size()));
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const auto p = fs->point(sorted[i]);
            std::copy(p.begin(), p.end(), kept.point(static_cast<int>(i)).begin());
        }
        sub.attach_features(std::move(kept));
    }
    if (const std::vector<int>* cs = g.communities()) {
        std::vector<int> kept(sorted.size());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            kept[i] = (*cs)[static_cast<std::size_t>(sorted[i])];
        sub.attach_communities(std::move(kept));
    }
    return {std::move(sub), std::move(sorted)};
}

void write_edge_csv(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "src,dst\n";
    for (int v = 0; v < g.n_vertices(); ++v)
        for (int u : g.out_neighbors(v)) {
            if (g.edge_mode() == EdgeMode::undirected && u < v) continue;
            out << v << ',' << u << '\n';
        }
}

Graph read_edge_csv(const std::filesystem::path& path, int n_other, EdgeMode mode) {
    const auto rows = read_csv(path);
    if (rows.empty() || rows.front().size() != 2 || rows.front()[0] != "src" ||
        rows.front()[1] != "dst")
        throw std::runtime_error("edge CSV must start with header src,dst");

    std::vector<std::pair<int, int>> edges;
    int max_v = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != 2)
            throw std::runtime_error("edge CSV row " + std::to_string(i + 1) + ": expected 2 fields");
        const int a = std::stoi(rows[i][0]);
        const int b = std::stoi(rows[i][1]);
        if (a < 0 || b < 0)
            throw std::runtime_error("edge CSV row " + std::to_string(i + 1) + ": negative vertex");
        edges.emplace_back(a, b);
        max_v = std::max({max_v, a, b});
    }
    if (n_other < 0) n_other = max_v;
    Graph g(n_other, mode);
    for (auto [a, b] : edges) g.add_edge(a, b);
    g.finish();
    return g;
}

} // namespace localdeg
