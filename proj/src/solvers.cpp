#include "alliance/solvers.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "alliance/errors.hpp"
#include "alliance/kernel.hpp"

namespace alliance {

namespace {

bool eval_predicate(const Graph& g, PredicateId pred, const VertexSet& s, int k) {
    switch (pred) {
        case PredicateId::offensive: return is_offensive_alliance(g, s).holds;
        case PredicateId::strong_offensive: return is_strong_offensive_alliance(g, s).holds;
        case PredicateId::global_offensive: return is_global_offensive(g, s).holds;
        case PredicateId::global_strong_offensive: return is_global_strong_offensive(g, s).holds;
        case PredicateId::dominating: return is_dominating(g, s);
        case PredicateId::k_dominating: return is_k_dominating(g, s, k);
    }
    return false;
}

// Supersets of a satisfying set still satisfy these (not true of the
// boundary-quantified predicates, whose boundary moves with s).
bool is_monotone(PredicateId pred) {
    switch (pred) {
        case PredicateId::global_offensive:
        case PredicateId::global_strong_offensive:
        case PredicateId::dominating:
        case PredicateId::k_dominating: return true;
        default: return false;
    }
}

void require_connected(const Graph& g, const char* who) {
    if (g.order() == 0) throw std::domain_error(std::string(who) + ": empty graph");
    if (!is_connected(g)) throw DisconnectedError(std::string(who) + ": graph is not connected");
}

struct MinSearch {
    const Graph& g;
    PredicateId pred;
    MinSearchOptions opts;
    int n;
    std::vector<std::uint64_t> tail;  // tail[i] = bits for {i, ..., n-1}
    std::uint64_t cur = 0;
    bool monotone;

    MinSearch(const Graph& g, PredicateId pred, const MinSearchOptions& opts)
        : g(g), pred(pred), opts(opts), n(g.order()),
          monotone(is_monotone(pred) && !opts.require_independent) {
        tail.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int i = n - 1; i >= 0; --i)
            tail[static_cast<std::size_t>(i)] =
                tail[static_cast<std::size_t>(i) + 1] | (std::uint64_t{1} << i);
    }

    bool test(std::uint64_t bits) {
        return eval_predicate(g, pred, VertexSet::from_bits(n, bits), opts.k);
    }

    // Lexicographic k-combinations over {first, ..., n-1}.
    bool extend(int first, int remaining) {
        if (remaining == 0) return test(cur);
        if (n - first < remaining) return false;
        if (monotone && !test(cur | tail[static_cast<std::size_t>(first)])) return false;
        for (int v = first; v <= n - remaining; ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if (opts.require_independent && (g.neighbor_bits(v) & cur) != 0) continue;
            cur |= bit;
            if (extend(v + 1, remaining - 1)) return true;
            cur &= ~bit;
        }
        return false;
    }
};

}  // namespace

std::optional<SearchResult> min_satisfying(const Graph& g, PredicateId pred,
                                           const MinSearchOptions& opts, const SolverCaps& caps) {
    require_connected(g, "min_satisfying");
    if (g.order() > caps.alliance)
        throw CapExceeded("min_satisfying: n = " + std::to_string(g.order()) +
                          " exceeds the alliance search cap " + std::to_string(caps.alliance));
    MinSearch search(g, pred, opts);
    for (int k = 1; k <= g.order(); ++k) {
        search.cur = 0;
        if (search.extend(0, k))
            return SearchResult{k, VertexSet::from_bits(g.order(), search.cur)};
    }
    return std::nullopt;
}

namespace {

struct AlphaSearch {
    const Graph& g;
    int n;
    std::uint64_t best = 0;
    int best_size = -1;

    void run(std::uint64_t current, int current_size, std::uint64_t candidates) {
        if (current_size + std::popcount(candidates) <= best_size) return;
        if (candidates == 0) {
            if (current_size > best_size) {
                best_size = current_size;
                best = current;
            }
            return;
        }
        // branch vertex: highest degree within the candidate subgraph, lowest
        // index on ties
        int pick = -1, pick_deg = -1;
        std::uint64_t rest = candidates;
        while (rest != 0) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = std::popcount(g.neighbor_bits(v) & candidates);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        std::uint64_t bit = std::uint64_t{1} << pick;
        run(current | bit, current_size + 1, candidates & ~bit & ~g.neighbor_bits(pick));
        run(current, current_size, candidates & ~bit);
    }
};

}  // namespace

SearchResult independence_number(const Graph& g, const SolverCaps& caps) {
    if (g.order() > caps.alpha)
        throw CapExceeded("independence_number: n = " + std::to_string(g.order()) +
                          " exceeds the cap " + std::to_string(caps.alpha));
    if (g.order() == 0) return {0, VertexSet(0)};
    AlphaSearch search{g, g.order()};
    search.run(0, 0, VertexSet::full_mask(g.order()));
    return {search.best_size, VertexSet::from_bits(g.order(), search.best)};
}

SearchResult gamma(const Graph& g, const SolverCaps& caps) {
    return *min_satisfying(g, PredicateId::dominating, {}, caps);
}

SearchResult independent_domination(const Graph& g, const SolverCaps& caps) {
    // a maximal independent set dominates, so this always exists
    return *min_satisfying(g, PredicateId::dominating, {.require_independent = true}, caps);
}

SearchResult gamma_k(const Graph& g, int k, const SolverCaps& caps) {
    if (k < 1) throw std::domain_error("gamma_k requires k >= 1");
    return *min_satisfying(g, PredicateId::k_dominating, {.k = k}, caps);
}

SearchResult gamma_o(const Graph& g, const SolverCaps& caps) {
    return *min_satisfying(g, PredicateId::global_offensive, {}, caps);
}

SearchResult gamma_so(const Graph& g, const SolverCaps& caps) {
    return *min_satisfying(g, PredicateId::global_strong_offensive, {}, caps);
}

std::optional<SearchResult> gamma_i(const Graph& g, const SolverCaps& caps) {
    return min_satisfying(g, PredicateId::global_offensive, {.require_independent = true}, caps);
}

SearchResult a_o(const Graph& g, const SolverCaps& caps) {
    return *min_satisfying(g, PredicateId::offensive, {}, caps);
}

std::optional<SearchResult> a_so(const Graph& g, const SolverCaps& caps) {
    return min_satisfying(g, PredicateId::strong_offensive, {}, caps);
}

std::optional<SearchResult> a_i(const Graph& g, const SolverCaps& caps) {
    return min_satisfying(g, PredicateId::offensive, {.require_independent = true}, caps);
}

SearchResult gamma_so_cubic_fast(const Graph& g, const SolverCaps& caps) {
    require_connected(g, "gamma_so_cubic_fast");
    if (!is_cubic(g)) throw std::domain_error("gamma_so_cubic_fast requires a 3-regular graph");
    SearchResult alpha = independence_number(g, caps);
    return {g.order() - alpha.size, alpha.witness.complement()};
}

SearchResult phi0(const Graph& g, const SolverCaps& caps) {
    require_connected(g, "phi0");
    int n = g.order();
    if (n > caps.phi)
        throw CapExceeded("phi0: n = " + std::to_string(n) + " exceeds the cap " +
                          std::to_string(caps.phi));

    // SDA-free sets are closed downward, so search cardinalities from the top;
    // a partial subset already containing an SDA cannot be extended to a free
    // set.
    struct Search {
        const Graph& g;
        int n;
        std::uint64_t cur = 0;
        bool extend(int first, int remaining) {
            if (remaining == 0) return is_sda_free(g, VertexSet::from_bits(n, cur));
            if (n - first < remaining) return false;
            for (int v = first; v <= n - remaining; ++v) {
                std::uint64_t bit = std::uint64_t{1} << v;
                cur |= bit;
                if (is_sda_free(g, VertexSet::from_bits(n, cur)) && extend(v + 1, remaining - 1))
                    return true;
                cur &= ~bit;
            }
            return false;
        }
    } search{g, n};

    for (int k = n; k >= 1; --k) {
        search.cur = 0;
        if (search.extend(0, k)) return {k, VertexSet::from_bits(n, search.cur)};
    }
    return {0, VertexSet(n)};
}

SearchResult zeta0(const Graph& g, const SolverCaps& caps) {
    SearchResult free_set = phi0(g, caps);
    return {g.order() - free_set.size, free_set.witness.complement()};
}

namespace {

InvariantResult make_result(const SearchResult& r, Method m = Method::search) {
    return {r.size, r.witness, m, false};
}

InvariantResult make_optional_result(const std::optional<SearchResult>& r) {
    if (!r) return {std::nullopt, std::nullopt, Method::search, false};
    return make_result(*r);
}

}  // namespace

const std::vector<std::string>& default_invariants() {
    static const std::vector<std::string> ids = {"gamma", "i_gamma", "alpha",  "gamma_o",
                                                 "gamma_so", "gamma_i", "a_o", "a_so",
                                                 "a_i",   "phi0",    "zeta0"};
    return ids;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::search: return "search";
        case Method::cubic_fast_path: return "cubic_fast_path";
        case Method::complement_identity: return "complement_identity";
    }
    return "?";
}

AllianceAnalysis analyze(const Graph& g, const std::vector<std::string>& which,
                         const SolverCaps& caps) {
    require_connected(g, "analyze");
    AllianceAnalysis out;
    for (const auto& id : which) {
        if (out.invariants.count(id)) continue;
        if (id == "alpha") {
            out.invariants[id] = make_result(independence_number(g, caps));
        } else if (id == "gamma") {
            out.invariants[id] = make_result(gamma(g, caps));
        } else if (id == "i_gamma") {
            out.invariants[id] = make_result(independent_domination(g, caps));
        } else if (id == "gamma_o") {
            out.invariants[id] = make_result(gamma_o(g, caps));
        } else if (id == "gamma_so") {
            bool cubic = is_cubic(g);
            if (cubic && g.order() <= caps.alliance) {
                InvariantResult r = make_result(gamma_so(g, caps));
                SearchResult fast = gamma_so_cubic_fast(g, caps);
                if (fast.size != *r.value)
                    throw std::logic_error("gamma_so mismatch between search (" +
                                           std::to_string(*r.value) + ") and cubic fast path (" +
                                           std::to_string(fast.size) + ")");
                r.cross_checked = true;
                out.invariants[id] = r;
            } else if (cubic && g.order() <= caps.alpha) {
                out.invariants[id] = make_result(gamma_so_cubic_fast(g, caps),
                                                 Method::cubic_fast_path);
            } else {
                out.invariants[id] = make_result(gamma_so(g, caps));
            }
        } else if (id == "gamma_i") {
            out.invariants[id] = make_optional_result(gamma_i(g, caps));
        } else if (id == "a_o") {
            out.invariants[id] = make_result(a_o(g, caps));
        } else if (id == "a_so") {
            out.invariants[id] = make_optional_result(a_so(g, caps));
        } else if (id == "a_i") {
            out.invariants[id] = make_optional_result(a_i(g, caps));
        } else if (id == "phi0") {
            out.invariants[id] = make_result(phi0(g, caps));
        } else if (id == "zeta0") {
            out.invariants[id] = make_result(zeta0(g, caps), Method::complement_identity);
        } else if (id.rfind("gamma_", 0) == 0 && id.size() > 6 &&
                   id.find_first_not_of("0123456789", 6) == std::string::npos) {
            out.invariants[id] = make_result(gamma_k(g, std::stoi(id.substr(6)), caps));
        } else {
            throw std::invalid_argument("unknown invariant id: " + id);
        }
    }
    out.validate(g);
    return out;
}

namespace {

bool witness_satisfies(const Graph& g, const std::string& id, const VertexSet& w) {
    if (id == "alpha") return is_independent(g, w);
    if (id == "gamma") return is_dominating(g, w);
    if (id == "i_gamma") return is_dominating(g, w) && is_independent(g, w);
    if (id == "gamma_o") return is_global_offensive(g, w).holds;
    if (id == "gamma_so") return is_global_strong_offensive(g, w).holds;
    if (id == "gamma_i") return is_global_offensive(g, w).holds && is_independent(g, w);
    if (id == "a_o") return is_offensive_alliance(g, w).holds;
    if (id == "a_so") return is_strong_offensive_alliance(g, w).holds;
    if (id == "a_i") return is_offensive_alliance(g, w).holds && is_independent(g, w);
    if (id == "phi0") return is_sda_free(g, w);
    if (id == "zeta0") return is_sda_free(g, w.complement());
    if (id.rfind("gamma_", 0) == 0) return is_k_dominating(g, w, std::stoi(id.substr(6)));
    return false;
}

}  // namespace

void AllianceAnalysis::validate(const Graph& g) const {
    for (const auto& [id, r] : invariants) {
        if (r.value.has_value() != r.witness.has_value())
            throw std::logic_error("invariant " + id + ": value/witness presence mismatch");
        if (!r.value) continue;
        if (r.witness->count() != *r.value)
            throw std::logic_error("invariant " + id + ": witness cardinality mismatch");
        if (*r.value > 0 && !witness_satisfies(g, id, *r.witness))
            throw std::logic_error("invariant " + id + ": witness fails its predicate");
    }
    auto value_of = [&](const std::string& id) -> std::optional<int> {
        auto it = invariants.find(id);
        if (it == invariants.end()) return std::nullopt;
        return it->second.value;
    };
    auto check_le = [&](const std::string& a, const std::string& b) {
        auto va = value_of(a), vb = value_of(b);
        if (va && vb && *va > *vb)
            throw std::logic_error("invariant chain violated: " + a + " > " + b);
    };
    check_le("gamma", "gamma_o");
    check_le("gamma_o", "gamma_i");
    check_le("gamma_i", "alpha");
    check_le("a_i", "gamma_i");
    check_le("i_gamma", "gamma_i");
    check_le("gamma_o", "gamma_so");
}

}  // namespace alliance
