#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alliance/vertex_set.hpp"

namespace alliance {

// Immutable simple undirected graph. Vertices are dense indices 0..n-1,
// neighbor lists are kept sorted, and a per-vertex neighbor bitmask is cached
// when the order fits in 64 bits (it does for everything solver-facing).
class Graph {
public:
    Graph() = default;

    // Validates simplicity: throws ParseError on self-loops, duplicate edges
    // or endpoints outside 0..n-1.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string name = "");

    int order() const { return n_; }
    int size() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    // Valid only when order() <= 64; callers that enumerate subsets are
    // already bound by much smaller caps.
    std::uint64_t neighbor_bits(int v) const { return masks_[static_cast<std::size_t>(v)]; }
    bool has_masks() const { return !masks_.empty() || n_ == 0; }

    bool adjacent(int u, int v) const;

    std::vector<std::pair<int, int>> edge_list() const;

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    // Structural equality; the label is ignored.
    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> masks_;
    std::string name_;
};

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    bool regular = false;
    std::optional<int> common_degree;  // set when regular
};

DegreeProfile degree_profile(const Graph& g);
bool is_regular_of_degree(const Graph& g, int k);
bool is_cubic(const Graph& g);

bool is_connected(const Graph& g);

struct Bipartition {
    VertexSet left;
    VertexSet right;
};

// Two-coloring via BFS; the component root (lowest unvisited index) always
// lands on the left side, so the result is deterministic.
std::optional<Bipartition> is_bipartite(const Graph& g);

struct Block {
    VertexSet vertices;
    int edge_count = 0;
    bool odd_cycle = false;   // the block is a cycle of odd length
    bool odd_clique = false;  // the block is a complete graph of odd order
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    VertexSet cut_vertices;
};

// Lowpoint block/cut-vertex decomposition. Requires a connected graph.
BlockDecomposition blocks(const Graph& g);

Graph induced_subgraph(const Graph& g, const VertexSet& s);

// True iff every vertex of s has exactly one neighbor inside s.
bool induced_is_one_factor(const Graph& g, const VertexSet& s);

struct LineGraphResult {
    Graph graph;
    // L-vertex index -> the base edge (u, v) with u < v it came from.
    std::vector<std::pair<int, int>> edge_of_vertex;
};

// One vertex per edge of g, adjacent iff the edges share an endpoint.
// Requires at least one edge.
LineGraphResult line_graph(const Graph& g);

}  // namespace alliance
