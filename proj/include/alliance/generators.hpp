#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "alliance/graph.hpp"

namespace alliance {

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle(int r);

// Cartesian product C_r x K_2: two r-cycles joined by a perfect matching.
Graph prism(int r);

Graph petersen();

struct RandomCubicOptions {
    int max_retries = 10000;
};

// Pairing model: 3 stubs per vertex, uniform matching, full rejection of
// pairings with loops or multi-edges and of disconnected results. Pure
// function of (n, seed).
Graph random_cubic(int n, std::uint64_t seed, const RandomCubicOptions& opts = {});

// Every labeled connected 3-regular graph on n vertices, by backtracking
// over vertex pairs with degree feasibility pruning. Intended for n in
// {4, 6, 8}; n = 10 only with allow_large (millions of graphs).
void for_each_labeled_cubic(int n, const std::function<void(const Graph&)>& fn,
                            bool allow_large = false);
std::vector<Graph> all_labeled_cubic(int n, bool allow_large = false);

}  // namespace alliance
