#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alliance/graph.hpp"

namespace alliance {

// Search ceilings; solvers throw CapExceeded beyond them. Subset searches are
// exponential, so the defaults keep runs at desk scale.
struct SolverCaps {
    int alliance = 16;  // minimum-alliance subset searches
    int alpha = 32;     // branch-and-bound independence number
    int phi = 16;       // maximum SDA-free set search
};

enum class PredicateId {
    offensive,
    strong_offensive,
    global_offensive,
    global_strong_offensive,
    dominating,
    k_dominating,
};

struct MinSearchOptions {
    bool require_independent = false;
    int k = 1;  // used by k_dominating
};

struct SearchResult {
    int size = 0;
    VertexSet witness;
};

// Enumerates subsets in ascending cardinality, lexicographic within each
// cardinality, and returns the first satisfying set (= the minimum, with the
// lexicographically smallest witness of that size). Monotone predicates prune
// partial subsets whose full completion already fails.
std::optional<SearchResult> min_satisfying(const Graph& g, PredicateId pred,
                                           const MinSearchOptions& opts = {},
                                           const SolverCaps& caps = {});

// Exact maximum independent set: branch on the highest-degree candidate,
// bound by |current| + |candidates|.
SearchResult independence_number(const Graph& g, const SolverCaps& caps = {});

SearchResult gamma(const Graph& g, const SolverCaps& caps = {});             // domination
SearchResult independent_domination(const Graph& g, const SolverCaps& caps = {});
SearchResult gamma_k(const Graph& g, int k, const SolverCaps& caps = {});
SearchResult gamma_o(const Graph& g, const SolverCaps& caps = {});
SearchResult gamma_so(const Graph& g, const SolverCaps& caps = {});
std::optional<SearchResult> gamma_i(const Graph& g, const SolverCaps& caps = {});
SearchResult a_o(const Graph& g, const SolverCaps& caps = {});
std::optional<SearchResult> a_so(const Graph& g, const SolverCaps& caps = {});
std::optional<SearchResult> a_i(const Graph& g, const SolverCaps& caps = {});

// Algebraic fast path for connected cubic graphs: gamma_so = n - alpha with
// the complement of a maximum independent set as witness.
SearchResult gamma_so_cubic_fast(const Graph& g, const SolverCaps& caps = {});

// Largest SDA-free set (descending-cardinality search) and its complementary
// cover, zeta0 = n - phi0.
SearchResult phi0(const Graph& g, const SolverCaps& caps = {});
SearchResult zeta0(const Graph& g, const SolverCaps& caps = {});

enum class Method { search, cubic_fast_path, complement_identity };

struct InvariantResult {
    std::optional<int> value;
    std::optional<VertexSet> witness;
    Method method = Method::search;
    bool cross_checked = false;  // cubic gamma_so verified against the fast path
};

// One graph's computed invariants, keyed by invariant id ("gamma", "i_gamma",
// "alpha", "gamma_<k>", "gamma_o", "gamma_so", "gamma_i", "a_o", "a_so",
// "a_i", "phi0", "zeta0").
struct AllianceAnalysis {
    std::map<std::string, InvariantResult> invariants;

    // Re-verifies witnesses and the ordering chains between the computed
    // values; throws std::logic_error on any inconsistency.
    void validate(const Graph& g) const;
};

const std::vector<std::string>& default_invariants();
std::string method_name(Method m);

// Computes the requested invariant ids (see AllianceAnalysis). Requires a
// connected graph. For cubic graphs gamma_so is cross-checked against the
// fast path when the search cap allows; a mismatch is a hard failure.
AllianceAnalysis analyze(const Graph& g, const std::vector<std::string>& which,
                         const SolverCaps& caps = {});

}  // namespace alliance
