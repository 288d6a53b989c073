#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "localdeg/features.hpp"

namespace localdeg {

enum class EdgeMode { undirected, directed };

/// How geodesic distance treats directed graphs: symmetrized adjacency
/// (default; an edge in either direction connects) or out-edges only.
enum class GeodesicMode { symmetrized, out_edges };

/// Graph with a distinguished origin at vertex 0. Adjacency is stored
/// as sorted out-neighbour lists; no self-loops, no parallel edges.
///
/// `degree_norm` is the count dividing out-degrees wherever an estimate
/// B_i / n is formed. Samplers set it to the model's n (for the RCM the
/// number of non-origin vertices; for the SBM the total Sum c_j, whose
/// closed-form truth divides by that n). Induced subgraphs use their
/// own non-origin count.
class Graph {
public:
    Graph(int n_other, EdgeMode mode)
        : adjacency_(static_cast<std::size_t>(n_other) + 1),
          mode_(mode),
          degree_norm_(n_other) {}

    int n_other() const { return static_cast<int>(adjacency_.size()) - 1; }
    int n_vertices() const { return static_cast<int>(adjacency_.size()); }
    EdgeMode edge_mode() const { return mode_; }

    int degree_norm() const { return degree_norm_; }
    void set_degree_norm(int n) { degree_norm_ = n; }

    /// Undirected mode stores the edge in both lists.
    void add_edge(int u, int v);

    /// Sort neighbour lists; builders call this once after insertion.
    void finish();

    std::span<const int> out_neighbors(int v) const {
        check_vertex(v);
        return adjacency_[static_cast<std::size_t>(v)];
    }

    /// B_i, the out-degree.
    int out_degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
    }

    void attach_features(FeatureSet fs) { features_ = std::move(fs); }
    const FeatureSet* features() const { return features_ ? &*features_ : nullptr; }

    void attach_communities(std::vector<int> c) { communities_ = std::move(c); }
    const std::vector<int>* communities() const {
        return communities_ ? &*communities_ : nullptr;
    }

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adjacency_;
    EdgeMode mode_;
    int degree_norm_;
    std::optional<FeatureSet> features_;
    std::optional<std::vector<int>> communities_;
};

/// Breadth-first layers around the origin. layers[l] holds the vertices
/// at geodesic distance exactly l (layers[0] = {0}), each sorted by
/// ascending index. Unreachable vertices appear in no layer.
struct Annuli {
    std::vector<std::vector<int>> layers;

    int eccentricity() const { return static_cast<int>(layers.size()) - 1; }

    /// |V_l| for l = 0..eccentricity.
    std::vector<int> cumulative_sizes() const;

    /// Number of vertices reachable from the origin (origin included).
    int reachable_count() const;
};

Annuli bfs_annuli(const Graph& g, GeodesicMode mode = GeodesicMode::symmetrized);

/// Induced subgraph on `keep` (which must contain vertex 0). Vertices
/// are relabelled contiguously, origin first, then ascending original
/// index. Returns the subgraph and the new->old index map. Feature and
/// community payloads are carried over; degree_norm is the subgraph's
/// own non-origin count.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                    const std::vector<int>& keep);

/// Edge-list CSV (header `src,dst`, origin always vertex 0). Undirected
/// graphs emit each edge once with src < dst.
void write_edge_csv(const Graph& g, const std::filesystem::path& path);

/// Reads an edge-list CSV. `n_other` fixes the vertex count (isolated
/// tail vertices are not recoverable from the edge list alone); pass -1
/// to infer it from the largest index seen.
Graph read_edge_csv(const std::filesystem::path& path, int n_other = -1,
                    EdgeMode mode = EdgeMode::undirected);

} // namespace localdeg
