#include "alliance/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "alliance/errors.hpp"

namespace alliance {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges, std::string name) {
    if (n < 0) throw ParseError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint outside 0.." + std::to_string(n - 1) + ": (" +
                             std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw ParseError("duplicate edge (" + std::to_string(key.first) + "," +
                             std::to_string(key.second) + ")");
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    g.m_ = static_cast<int>(seen.size());
    if (n <= VertexSet::max_universe) {
        g.masks_.assign(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v)
            for (int u : g.adj_[static_cast<std::size_t>(v)])
                g.masks_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    g.name_ = std::move(name);
    return g;
}

bool Graph::adjacent(int u, int v) const {
    if (!masks_.empty()) return (masks_[static_cast<std::size_t>(u)] >> v & 1u) != 0;
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

DegreeProfile degree_profile(const Graph& g) {
    DegreeProfile p;
    if (g.order() == 0) {
        p.regular = true;
        p.common_degree = 0;
        return p;
    }
    p.min_degree = g.degree(0);
    p.max_degree = g.degree(0);
    for (int v = 1; v < g.order(); ++v) {
        p.min_degree = std::min(p.min_degree, g.degree(v));
        p.max_degree = std::max(p.max_degree, g.degree(v));
    }
    p.regular = p.min_degree == p.max_degree;
    if (p.regular) p.common_degree = p.min_degree;
    return p;
}

bool is_regular_of_degree(const Graph& g, int k) {
    auto p = degree_profile(g);
    return p.regular && p.common_degree == k;
}

bool is_cubic(const Graph& g) { return g.order() > 0 && is_regular_of_degree(g, 3); }

bool is_connected(const Graph& g) {
    int n = g.order();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                q.push(u);
            }
        }
    }
    return reached == n;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int root = 0; root < n; ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(u)] == -1) {
                    color[static_cast<std::size_t>(u)] = 1 - color[static_cast<std::size_t>(v)];
                    q.push(u);
                } else if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b{VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v)
        (color[static_cast<std::size_t>(v)] == 0 ? b.left : b.right).add(v);
    return b;
}

namespace {

// A block with c vertices and c edges that is 2-connected is a single cycle;
// c*(c-1)/2 edges make it a clique.
void classify_block(Block& b) {
    int c = b.vertices.count();
    bool odd = c % 2 == 1;
    b.odd_cycle = odd && c >= 3 && b.edge_count == c;
    b.odd_clique = odd && b.edge_count == c * (c - 1) / 2 && c >= 3;
}

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError("block decomposition requires a connected graph");
    int n = g.order();
    BlockDecomposition out;
    out.cut_vertices = VertexSet(n);
    if (n == 0) return out;

    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
        int children = 0;
        for (int u : g.neighbors(v)) {
            if (u == parent) continue;
            if (disc[static_cast<std::size_t>(u)] == -1) {
                ++children;
                edge_stack.emplace_back(v, u);
                dfs(u, v);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(u)]);
                if (low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(v)]) {
                    if (parent != -1 || children > 1) out.cut_vertices.add(v);
                    Block b;
                    b.vertices = VertexSet(n);
                    while (true) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        b.vertices.add(e.first);
                        b.vertices.add(e.second);
                        ++b.edge_count;
                        if (e == std::pair<int, int>(v, u)) break;
                    }
                    classify_block(b);
                    out.blocks.push_back(std::move(b));
                }
            } else if (disc[static_cast<std::size_t>(u)] < disc[static_cast<std::size_t>(v)]) {
                edge_stack.emplace_back(v, u);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(u)]);
            }
        }
    };
    dfs(0, -1);

    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const Block& a, const Block& b) { return a.vertices.bits() < b.vertices.bits(); });
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> index_of(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        index_of[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int v : members)
        for (int u : g.neighbors(v))
            if (u > v && s.contains(u))
                edges.emplace_back(index_of[static_cast<std::size_t>(v)],
                                   index_of[static_cast<std::size_t>(u)]);
    return Graph::from_edges(static_cast<int>(members.size()), edges);
}

bool induced_is_one_factor(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (!ok) return;
        int inside = 0;
        for (int u : g.neighbors(v))
            if (s.contains(u)) ++inside;
        if (inside != 1) ok = false;
    });
    return ok;
}

LineGraphResult line_graph(const Graph& g) {
    auto edges = g.edge_list();
    if (edges.empty()) throw std::domain_error("line graph of an edgeless graph is undefined");
    // edge_list is already lexicographic in (u, v)
    std::vector<std::pair<int, int>> line_edges;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                line_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    LineGraphResult out;
    out.graph = Graph::from_edges(static_cast<int>(edges.size()), line_edges,
                                  g.name().empty() ? "" : "L(" + g.name() + ")");
    out.edge_of_vertex = std::move(edges);
    return out;
}

}  // namespace alliance
