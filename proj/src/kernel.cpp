#include "alliance/kernel.hpp"

#include <bit>
#include <stdexcept>

namespace alliance {

namespace {

void require_nonempty(const VertexSet& s, const char* who) {
    if (s.empty()) throw std::domain_error(std::string(who) + " requires a non-empty vertex set");
}

int in_count(const Graph& g, const VertexSet& s, int v) {
    return std::popcount(g.neighbor_bits(v) & s.bits());
}

// Shared scan: check `2*in >= deg + threshold` for every vertex of `domain`.
PredicateReport check_attack(const Graph& g, const VertexSet& s, const VertexSet& domain,
                             int threshold) {
    PredicateReport r;
    domain.for_each([&](int v) {
        if (!r.holds) return;
        int in = in_count(g, s, v);
        if (2 * in < g.degree(v) + threshold) {
            r.holds = false;
            r.violating_vertex = v;
            r.in_count = in;
            r.out_count = g.degree(v) - in;
        }
    });
    return r;
}

}  // namespace

VertexSet boundary(const Graph& g, const VertexSet& s) {
    std::uint64_t out = 0;
    s.for_each([&](int v) { out |= g.neighbor_bits(v); });
    out &= ~s.bits();
    return VertexSet::from_bits(s.universe(), out);
}

PredicateReport is_offensive_alliance(const Graph& g, const VertexSet& s) {
    require_nonempty(s, "is_offensive_alliance");
    return check_attack(g, s, boundary(g, s), 1);
}

PredicateReport is_strong_offensive_alliance(const Graph& g, const VertexSet& s) {
    require_nonempty(s, "is_strong_offensive_alliance");
    return check_attack(g, s, boundary(g, s), 2);
}

PredicateReport is_global_offensive(const Graph& g, const VertexSet& s) {
    require_nonempty(s, "is_global_offensive");
    return check_attack(g, s, s.complement(), 1);
}

PredicateReport is_global_strong_offensive(const Graph& g, const VertexSet& s) {
    require_nonempty(s, "is_global_strong_offensive");
    return check_attack(g, s, s.complement(), 2);
}

bool is_k_dominating(const Graph& g, const VertexSet& s, int k) {
    bool ok = true;
    s.complement().for_each([&](int v) {
        if (ok && in_count(g, s, v) < k) ok = false;
    });
    return ok;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && (g.neighbor_bits(v) & s.bits()) != 0) ok = false;
    });
    return ok;
}

bool is_dominating(const Graph& g, const VertexSet& s) { return is_k_dominating(g, s, 1); }

bool is_strong_defensive_alliance(const Graph& g, const VertexSet& s) {
    require_nonempty(s, "is_strong_defensive_alliance");
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && 2 * in_count(g, s, v) < g.degree(v)) ok = false;
    });
    return ok;
}

VertexSet sda_residue(const Graph& g, VertexSet x) {
    for (;;) {
        std::uint64_t drop = 0;
        x.for_each([&](int v) {
            if (2 * in_count(g, x, v) < g.degree(v)) drop |= std::uint64_t{1} << v;
        });
        if (drop == 0) return x;
        x = VertexSet::from_bits(x.universe(), x.bits() & ~drop);
    }
}

bool is_sda_free(const Graph& g, const VertexSet& x) { return sda_residue(g, x).empty(); }

}  // namespace alliance
