#pragma once

#include <string>

#include "alliance/graph.hpp"

namespace alliance {

// graph6 short form (n <= 62): header byte n+63, then the upper-triangle
// adjacency bits in column-major order, packed big-endian six per byte and
// padded with zeros, each data byte offset by 63.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Lines "u v" of 0-based endpoints, optionally preceded by a header line
// "n <count>". Without the header the order is max endpoint + 1.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

}  // namespace alliance
