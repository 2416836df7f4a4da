#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcr/error.hpp"

namespace gcr {

/// Finite simple undirected connected graph with 1-indexed vertices.
///
/// Validation (simplicity, range, connectivity) happens at construction;
/// afterwards the object is immutable and safe for concurrent reads.
/// All-pairs BFS distances are precomputed, so distance queries are O(1).
class Graph {
public:
    /// Builds a graph from an explicit edge list. Throws Error on self-loops,
    /// duplicate edges, out-of-range endpoints or a disconnected result.
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    /// Parses the edge-list document format: optional '#' comment lines,
    /// first data line is the vertex count, every following data line "u v".
    static Graph parse(std::string_view text);

    static Graph path(int n);
    static Graph cycle(int n);
    /// Star K_{1,leaves}: center is vertex 1, leaves are 2..leaves+1.
    static Graph star(int leaves);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool valid_vertex(int v) const { return v >= 1 && v <= n_; }
    void check_vertex(int v) const;

    bool has_edge(int u, int v) const;

    /// Open neighborhood N(v), ascending.
    const std::vector<int>& neighbors(int v) const;

    /// Closed neighborhood N[v] = N(v) ∪ {v}, ascending.
    std::vector<int> closed_neighborhood(int v) const;

    /// Shortest-path length; 0 iff u == v.
    int distance(int u, int v) const;

    bool is_tree() const;
    /// Tree with maximum degree <= 2.
    bool is_path() const;

    /// The unique vertex lying on all three pairwise shortest paths.
    /// Requires a tree; equals one of x,y,z when their path union is a path.
    int median(int x, int y, int z) const;

    /// First step from `from` along a shortest path to `to` (lowest-numbered
    /// neighbor among ties); `from` itself when from == to.
    int step_toward(int from, int to) const;

    /// Neighbor strictly increasing the distance to `avoid` (lowest-numbered
    /// among the maximizers); `from` itself when no neighbor does.
    int step_away(int from, int avoid) const;

    std::string to_dot() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;  // adj_[v], v in 1..n
    std::vector<std::vector<int>> dist_; // dist_[u][v]

    void build_adjacency();
    void compute_distances();
};

} // namespace gcr
