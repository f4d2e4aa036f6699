#pragma once

#include <optional>

#include "alliance/graph.hpp"

namespace alliance {

// Outcome of an alliance predicate. When it fails, the first violating
// vertex in index order is reported with its split neighbor counts.
struct PredicateReport {
    bool holds = true;
    std::optional<int> violating_vertex;
    int in_count = 0;   // |N_S(v)| at the violator
    int out_count = 0;  // |N_{V\S}(v)| at the violator

    explicit operator bool() const { return holds; }
};

// Vertices outside s with at least one neighbor in s.
VertexSet boundary(const Graph& g, const VertexSet& s);

// For every v in the boundary: 2|N_S(v)| >= deg(v)+1 (offensive) or
// deg(v)+2 (strong). Vacuously true when the boundary is empty (s = V).
// Empty s is a domain error.
PredicateReport is_offensive_alliance(const Graph& g, const VertexSet& s);
PredicateReport is_strong_offensive_alliance(const Graph& g, const VertexSet& s);

// Same thresholds quantified over all of V\S, not just the boundary.
PredicateReport is_global_offensive(const Graph& g, const VertexSet& s);
PredicateReport is_global_strong_offensive(const Graph& g, const VertexSet& s);

// Every vertex outside s has at least k neighbors in s.
bool is_k_dominating(const Graph& g, const VertexSet& s, int k);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_dominating(const Graph& g, const VertexSet& s);

// Defensive condition over the members: for every v in s, 2|N_S(v)| >= deg(v).
// Empty s is a domain error.
bool is_strong_defensive_alliance(const Graph& g, const VertexSet& s);

// Simultaneously deletes every member v with 2|N_x(v)| < deg(v) until a
// fixpoint. The residue is nonempty iff x contains a strong defensive
// alliance.
VertexSet sda_residue(const Graph& g, VertexSet x);
bool is_sda_free(const Graph& g, const VertexSet& x);

}  // namespace alliance
