#include "gcr/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace gcr {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) : n_(vertex_count) {
    if (n_ < 1)
        fail(ErrorCode::parse, "vertex count must be positive, got " + std::to_string(n_));
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            fail(ErrorCode::parse, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                       "} has a vertex outside 1.." + std::to_string(n_));
        if (u == v)
            fail(ErrorCode::parse, "self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            fail(ErrorCode::parse,
                 "duplicate edge {" + std::to_string(key.first) + "," + std::to_string(key.second) + "}");
        edges_.emplace_back(key.first, key.second);
    }
    std::sort(edges_.begin(), edges_.end());
    build_adjacency();
    compute_distances();
    for (int v = 2; v <= n_; ++v)
        if (dist_[1][v] < 0)
            fail(ErrorCode::parse, "graph is disconnected: no path from vertex 1 to " + std::to_string(v));
}

Graph Graph::parse(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int vertex_count = -1;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (vertex_count < 0) {
            long long n;
            if (!(fields >> n)) continue; // blank/comment line before the header
            std::string rest;
            if (fields >> rest)
                fail(ErrorCode::parse, "line " + std::to_string(line_no) +
                                           ": expected a single vertex count, got trailing '" + rest + "'");
            if (n < 1 || n > 1000000)
                fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": bad vertex count " + std::to_string(n));
            vertex_count = static_cast<int>(n);
            continue;
        }
        long long u, v;
        if (!(fields >> u)) continue;
        std::string rest;
        if (!(fields >> v) || (fields >> rest))
            fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": malformed edge line '" + line + "'");
        if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
            fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": vertex index out of range in '" + line + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (vertex_count < 0) fail(ErrorCode::parse, "empty document: no vertex count line");
    return Graph(vertex_count, edges);
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph Graph::cycle(int n) {
    if (n < 3) fail(ErrorCode::invalid_argument, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
    return Graph(n, edges);
}

Graph Graph::star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < leaves; ++i) edges.emplace_back(1, i + 2);
    return Graph(leaves + 1, edges);
}

void Graph::check_vertex(int v) const {
    if (!valid_vertex(v))
        fail(ErrorCode::invalid_argument,
             "invalid vertex " + std::to_string(v) + " (graph has 1.." + std::to_string(n_) + ")");
}

void Graph::build_adjacency() {
    adj_.assign(n_ + 1, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

void Graph::compute_distances() {
    dist_.assign(n_ + 1, std::vector<int>(n_ + 1, -1));
    for (int s = 1; s <= n_; ++s) {
        auto& d = dist_[s];
        d[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj_[u])
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    queue.push_back(w);
                }
        }
    }
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<int> Graph::closed_neighborhood(int v) const {
    check_vertex(v);
    std::vector<int> out = adj_[v];
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

int Graph::distance(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return dist_[u][v];
}

bool Graph::is_tree() const { return edge_count() == n_ - 1; }

bool Graph::is_path() const {
    if (!is_tree()) return false;
    for (int v = 1; v <= n_; ++v)
        if (adj_[v].size() > 2) return false;
    return true;
}

int Graph::median(int x, int y, int z) const {
    check_vertex(x);
    check_vertex(y);
    check_vertex(z);
    if (!is_tree()) fail(ErrorCode::precondition, "median requires a tree");
    // The median is the unique vertex m with d(a,m)+d(m,b) = d(a,b) for every
    // pair from {x,y,z}; on a tree this is the intersection of the three paths.
    for (int m = 1; m <= n_; ++m) {
        if (dist_[x][m] + dist_[m][y] == dist_[x][y] && dist_[y][m] + dist_[m][z] == dist_[y][z] &&
            dist_[x][m] + dist_[m][z] == dist_[x][z])
            return m;
    }
    fail(ErrorCode::internal, "tree has no median vertex"); // unreachable on trees
}

int Graph::step_toward(int from, int to) const {
    check_vertex(from);
    check_vertex(to);
    if (from == to) return from;
    for (int w : adj_[from])
        if (dist_[w][to] == dist_[from][to] - 1) return w;
    fail(ErrorCode::internal, "no step toward target");
}

int Graph::step_away(int from, int avoid) const {
    check_vertex(from);
    check_vertex(avoid);
    int best = from;
    int best_d = dist_[from][avoid];
    for (int w : adj_[from])
        if (dist_[w][avoid] > best_d) {
            best = w;
            best_d = dist_[w][avoid];
        }
    return best;
}

std::string Graph::to_dot() const {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 1; v <= n_; ++v) out << "  " << v << ";\n";
    for (auto [u, v] : edges_) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace gcr
