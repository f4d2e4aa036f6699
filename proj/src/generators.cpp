#include "alliance/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "alliance/errors.hpp"

namespace alliance {

Graph complete(int n) {
    if (n < 1) throw std::domain_error("complete(n) requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges, "K" + std::to_string(n));
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::domain_error("complete_bipartite requires both sides >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edges(a + b, edges, "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph cycle(int r) {
    if (r < 3) throw std::domain_error("cycle(r) requires r >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < r; ++v) edges.emplace_back(v, (v + 1) % r);
    return Graph::from_edges(r, edges, "C" + std::to_string(r));
}

Graph prism(int r) {
    if (r < 3) throw std::domain_error("prism(r) requires r >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < r; ++v) {
        edges.emplace_back(v, (v + 1) % r);          // outer cycle
        edges.emplace_back(r + v, r + (v + 1) % r);  // inner cycle
        edges.emplace_back(v, r + v);                // matching
    }
    return Graph::from_edges(2 * r, edges, "prism(" + std::to_string(r) + ")");
}

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);          // outer 5-cycle
        edges.emplace_back(v, 5 + v);                // spokes
        edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    }
    return Graph::from_edges(10, edges, "petersen");
}

namespace {

// Unbiased integer in [0, bound) from the engine, by rejection.
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

}  // namespace

Graph random_cubic(int n, std::uint64_t seed, const RandomCubicOptions& opts) {
    if (n < 4 || n % 2 != 0)
        throw std::domain_error("random_cubic requires even n >= 4, got " + std::to_string(n));
    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(3 * n));
    for (int i = 0; i < 3 * n; ++i) stubs[static_cast<std::size_t>(i)] = i / 3;

    for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
        // Fisher-Yates with the engine so the result is a pure function of the seed
        for (std::size_t i = stubs.size() - 1; i > 0; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(rng, i + 1));
            std::swap(stubs[i], stubs[j]);
        }
        std::vector<std::pair<int, int>> edges;
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || !seen.insert(std::minmax(u, v)).second) {
                ok = false;
                break;
            }
            edges.emplace_back(u, v);
        }
        if (!ok) continue;
        Graph g = Graph::from_edges(n, edges,
                                    "random_cubic(n=" + std::to_string(n) +
                                        ",seed=" + std::to_string(seed) + ")");
        if (is_connected(g)) return g;
    }
    throw NumericError("random_cubic: no simple connected pairing after " +
                       std::to_string(opts.max_retries) + " attempts");
}

namespace {

struct CubicEnumerator {
    int n;
    const std::function<void(const Graph&)>& fn;
    std::vector<std::pair<int, int>> slots;  // all vertex pairs, lexicographic
    std::vector<int> degree;
    std::vector<int> remaining;  // undecided slots touching each vertex
    std::vector<std::pair<int, int>> chosen;

    CubicEnumerator(int n, const std::function<void(const Graph&)>& fn) : n(n), fn(fn) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        degree.assign(static_cast<std::size_t>(n), 0);
        remaining.assign(static_cast<std::size_t>(n), n - 1);
    }

    bool feasible() const {
        for (int v = 0; v < n; ++v)
            if (3 - degree[static_cast<std::size_t>(v)] > remaining[static_cast<std::size_t>(v)])
                return false;
        return true;
    }

    void run(std::size_t idx) {
        if (idx == slots.size()) {
            for (int v = 0; v < n; ++v)
                if (degree[static_cast<std::size_t>(v)] != 3) return;
            Graph g = Graph::from_edges(n, chosen);
            if (is_connected(g)) fn(g);
            return;
        }
        auto [u, v] = slots[idx];
        --remaining[static_cast<std::size_t>(u)];
        --remaining[static_cast<std::size_t>(v)];

        if (degree[static_cast<std::size_t>(u)] < 3 && degree[static_cast<std::size_t>(v)] < 3) {
            ++degree[static_cast<std::size_t>(u)];
            ++degree[static_cast<std::size_t>(v)];
            chosen.emplace_back(u, v);
            if (feasible()) run(idx + 1);
            chosen.pop_back();
            --degree[static_cast<std::size_t>(u)];
            --degree[static_cast<std::size_t>(v)];
        }
        if (feasible()) run(idx + 1);

        ++remaining[static_cast<std::size_t>(u)];
        ++remaining[static_cast<std::size_t>(v)];
    }
};

}  // namespace

void for_each_labeled_cubic(int n, const std::function<void(const Graph&)>& fn, bool allow_large) {
    if (n < 4 || n % 2 != 0)
        throw std::domain_error("labeled cubic enumeration requires even n >= 4");
    if (n > 8 && !allow_large)
        throw std::domain_error("labeled cubic enumeration beyond n = 8 needs the explicit "
                                "allow_large override");
    if (n > 10) throw std::domain_error("labeled cubic enumeration supports n <= 10");
    CubicEnumerator e(n, fn);
    e.run(0);
}

std::vector<Graph> all_labeled_cubic(int n, bool allow_large) {
    std::vector<Graph> out;
    for_each_labeled_cubic(n, [&](const Graph& g) { out.push_back(g); }, allow_large);
    return out;
}

}  // namespace alliance
