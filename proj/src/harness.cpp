#include "alliance/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "alliance/errors.hpp"
#include "alliance/generators.hpp"
#include "alliance/io.hpp"
#include "alliance/kernel.hpp"

namespace alliance::harness {

// ---------------------------------------------------------------- fixtures

Graph cactus(int a, int b) {
    if (a < 3 || b < 3) throw std::domain_error("cactus requires cycle lengths >= 3");
    // first cycle on 0..a-1, second on {0, a, ..., a+b-2}
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < a; ++v) edges.emplace_back(v, (v + 1) % a);
    edges.emplace_back(0, a);
    for (int v = 0; v < b - 2; ++v) edges.emplace_back(a + v, a + v + 1);
    edges.emplace_back(a + b - 2, 0);
    return Graph::from_edges(a + b - 1, edges,
                             "cactus(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

Graph line_of_subdivided_k4() {
    // subdivide every edge of K4 once, then take the line graph
    Graph k4 = complete(4);
    auto base_edges = k4.edge_list();
    std::vector<std::pair<int, int>> edges;
    int next = 4;
    for (auto [u, v] : base_edges) {
        edges.emplace_back(u, next);
        edges.emplace_back(next, v);
        ++next;
    }
    Graph subdivided = Graph::from_edges(next, edges);
    Graph out = line_graph(subdivided).graph;
    out.set_name("line_subdiv_k4");
    return out;
}

namespace {

std::vector<int> parse_int_args(const std::string& spec, std::size_t open) {
    if (spec.back() != ')') throw std::invalid_argument("bad family spec: " + spec);
    std::string args = spec.substr(open + 1, spec.size() - open - 2);
    std::vector<int> out;
    std::istringstream in(args);
    std::string piece;
    while (std::getline(in, piece, ',')) out.push_back(std::stoi(piece));
    return out;
}

}  // namespace

Graph make_family(const std::string& spec) {
    std::size_t open = spec.find('(');
    std::string head = spec.substr(0, open);
    std::vector<int> args;
    if (open != std::string::npos) args = parse_int_args(spec, open);

    auto want = [&](std::size_t k) {
        if (args.size() != k)
            throw std::invalid_argument("family " + head + " takes " + std::to_string(k) +
                                        " argument(s)");
    };
    if (head == "complete") {
        want(1);
        return complete(args[0]);
    }
    if (head == "complete_bipartite") {
        want(2);
        return complete_bipartite(args[0], args[1]);
    }
    if (head == "cycle") {
        want(1);
        return cycle(args[0]);
    }
    if (head == "prism") {
        want(1);
        return prism(args[0]);
    }
    if (head == "petersen") {
        want(0);
        return petersen();
    }
    if (head == "cactus") {
        want(2);
        return cactus(args[0], args[1]);
    }
    if (head == "line_subdiv_k4") {
        want(0);
        return line_of_subdivided_k4();
    }
    throw std::invalid_argument("unknown graph family: " + head);
}

std::vector<std::string> expand_family_specs(const std::vector<std::string>& specs) {
    std::vector<std::string> out;
    for (const auto& spec : specs) {
        std::size_t dots = spec.find("..");
        if (dots == std::string::npos) {
            out.push_back(spec);
            continue;
        }
        // single-argument ranges like prism(3..6)
        std::size_t open = spec.find('(');
        if (open == std::string::npos || spec.back() != ')' || dots < open)
            throw std::invalid_argument("bad family range: " + spec);
        std::string head = spec.substr(0, open);
        int lo = std::stoi(spec.substr(open + 1, dots - open - 1));
        int hi = std::stoi(spec.substr(dots + 2, spec.size() - dots - 3));
        if (hi < lo) throw std::invalid_argument("empty family range: " + spec);
        for (int v = lo; v <= hi; ++v)
            out.push_back(head + "(" + std::to_string(v) + ")");
    }
    return out;
}

const std::vector<std::string>& default_families() {
    // Odd cycles, odd cliques and cacti keep the SDA-free and cover claims
    // from going vacuous; the rest are the equality and tightness witnesses.
    static const std::vector<std::string> families = {
        "complete(3)",  "complete(4)",  "complete(5)",  "complete(7)",
        "complete_bipartite(3,3)",      "cycle(4)",     "cycle(5)",
        "cycle(6)",     "cycle(7)",     "prism(3)",     "prism(4)",
        "prism(5)",     "prism(6)",     "petersen",     "cactus(3,3)",
        "cactus(3,5)",  "cactus(5,5)",  "line_subdiv_k4",
    };
    return families;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::holds: return "holds";
        case Status::violated: return "violated";
        case Status::vacuous: return "vacuous";
        case Status::skipped: return "skipped";
    }
    return "?";
}

// ---------------------------------------------------------- invariant cache

InvariantCache::InvariantCache(const Graph& g, const SolverCaps& caps,
                               const SpectralOptions& spectral, FaultInjection fault)
    : g_(g), caps_(caps), spectral_(spectral), fault_(fault) {}

const DegreeProfile& InvariantCache::profile() {
    if (!profile_) profile_ = degree_profile(g_);
    return *profile_;
}

bool InvariantCache::cubic() { return profile().regular && profile().common_degree == 3; }

bool InvariantCache::bipartite() {
    if (!bipartition_) bipartition_ = is_bipartite(g_);
    return bipartition_->has_value();
}

int InvariantCache::alpha() {
    if (!alpha_) alpha_ = independence_number(g_, caps_);
    return alpha_->size;
}

const VertexSet& InvariantCache::alpha_witness() {
    alpha();
    return alpha_->witness;
}

int InvariantCache::gamma() {
    if (!gamma_) gamma_ = alliance::gamma(g_, caps_);
    return gamma_->size;
}

int InvariantCache::gamma_k(int k) {
    auto it = gamma_k_.find(k);
    if (it == gamma_k_.end()) it = gamma_k_.emplace(k, alliance::gamma_k(g_, k, caps_)).first;
    return it->second.size;
}

int InvariantCache::gamma_o() {
    if (!gamma_o_) gamma_o_ = alliance::gamma_o(g_, caps_);
    return gamma_o_->size;
}

const VertexSet& InvariantCache::gamma_o_witness() {
    gamma_o();
    return gamma_o_->witness;
}

int InvariantCache::gamma_so() {
    if (!gamma_so_) {
        if (fault_ == FaultInjection::strong_threshold) {
            // flipped predicate: evaluates the plain threshold instead
            gamma_so_ = alliance::gamma_o(g_, caps_);
        } else {
            gamma_so_ = alliance::gamma_so(g_, caps_);
        }
    }
    return gamma_so_->size;
}

const VertexSet& InvariantCache::gamma_so_witness() {
    gamma_so();
    return gamma_so_->witness;
}

std::optional<int> InvariantCache::gamma_i() {
    if (!gamma_i_) gamma_i_ = alliance::gamma_i(g_, caps_);
    if (!*gamma_i_) return std::nullopt;
    return (*gamma_i_)->size;
}

std::optional<int> InvariantCache::a_i() {
    if (!a_i_) a_i_ = alliance::a_i(g_, caps_);
    if (!*a_i_) return std::nullopt;
    return (*a_i_)->size;
}

int InvariantCache::phi0() {
    if (!phi0_) phi0_ = alliance::phi0(g_, caps_);
    return phi0_->size;
}

int InvariantCache::zeta0() { return g_.order() - phi0(); }

double InvariantCache::mu() {
    if (!mu_) mu_ = laplacian_spectral_radius(g_, spectral_);
    return *mu_;
}

bool InvariantCache::has_independent_global_strong() {
    if (!ind_global_strong_) {
        MinSearchOptions opts;
        opts.require_independent = true;
        if (fault_ == FaultInjection::strong_threshold) {
            ind_global_strong_ =
                min_satisfying(g_, PredicateId::global_offensive, opts, caps_).has_value();
        } else {
            ind_global_strong_ =
                min_satisfying(g_, PredicateId::global_strong_offensive, opts, caps_).has_value();
        }
    }
    return *ind_global_strong_;
}

namespace {

bool triangle_partition_rec(const Graph& g, std::uint64_t covered, std::uint64_t all) {
    if (covered == all) return true;
    int v = std::countr_zero(~covered & all);
    std::uint64_t free_nbrs = g.neighbor_bits(v) & ~covered;
    std::vector<int> nbrs;
    VertexSet::from_bits(g.order(), free_nbrs).for_each([&](int u) { nbrs.push_back(u); });
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (g.adjacent(nbrs[i], nbrs[j])) {
                std::uint64_t tri = (std::uint64_t{1} << v) | (std::uint64_t{1} << nbrs[i]) |
                                    (std::uint64_t{1} << nbrs[j]);
                if (triangle_partition_rec(g, covered | tri, all)) return true;
            }
    return false;
}

}  // namespace

bool InvariantCache::has_triangle_partition() {
    if (!triangle_partition_) {
        triangle_partition_ =
            g_.order() % 3 == 0 && g_.order() > 0 &&
            triangle_partition_rec(g_, 0, VertexSet::full_mask(g_.order()));
    }
    return *triangle_partition_;
}

namespace {

// enumerate independent k-subsets; true once any complement induces a
// 1-regular subgraph
bool one_factor_rec(const Graph& g, std::uint64_t cur, int first, int remaining) {
    int n = g.order();
    if (remaining == 0)
        return induced_is_one_factor(
            g, VertexSet::from_bits(n, ~cur & VertexSet::full_mask(n)));
    for (int v = first; v <= n - remaining; ++v) {
        if ((g.neighbor_bits(v) & cur) != 0) continue;
        if (one_factor_rec(g, cur | (std::uint64_t{1} << v), v + 1, remaining - 1)) return true;
    }
    return false;
}

}  // namespace

bool InvariantCache::has_one_factor_complement() {
    if (!one_factor_complement_) {
        int n = g_.order();
        one_factor_complement_ = n % 10 == 0 && n > 0 && one_factor_rec(g_, 0, 0, 2 * n / 5);
    }
    return *one_factor_complement_;
}

const BlockDecomposition& InvariantCache::block_decomposition() {
    if (!blocks_) blocks_ = alliance::blocks(g_);
    return *blocks_;
}

bool InvariantCache::blocks_all_odd_cycles() {
    const auto& d = block_decomposition();
    return std::all_of(d.blocks.begin(), d.blocks.end(),
                       [](const Block& b) { return b.odd_cycle; });
}

bool InvariantCache::blocks_all_odd_cycles_or_cliques() {
    const auto& d = block_decomposition();
    return std::all_of(d.blocks.begin(), d.blocks.end(),
                       [](const Block& b) { return b.odd_cycle || b.odd_clique; });
}

InvariantCache& InvariantCache::line() {
    if (!line_cache_) {
        line_graph_ = std::make_unique<LineGraphResult>(line_graph(g_));
        line_cache_ =
            std::make_unique<InvariantCache>(line_graph_->graph, caps_, spectral_, fault_);
    }
    return *line_cache_;
}

// ----------------------------------------------------------------- claims

namespace {

void attach_set(TheoremVerdict& v, const std::string& label, const VertexSet& s) {
    v.sets.emplace_back(label, s.to_vector());
}

void violate(TheoremVerdict& v, std::string note) {
    v.status = Status::violated;
    v.notes = std::move(note);
}

void vacuous(TheoremVerdict& v, std::string note) {
    v.status = Status::vacuous;
    v.notes = std::move(note);
}

std::string show(std::optional<int> v) { return v ? std::to_string(*v) : "absent"; }

bool is_complete_graph(const Graph& g) {
    return static_cast<long>(g.size()) * 2 == static_cast<long>(g.order()) * (g.order() - 1);
}

// iff claims: both directions on every graph
void check_iff(TheoremVerdict& v, bool lhs, bool rhs, const std::string& lhs_text,
               const std::string& rhs_text) {
    if (lhs == rhs) return;
    violate(v, lhs ? lhs_text + " but not " + rhs_text : rhs_text + " but not " + lhs_text);
}

void from_bounds_report(const BoundsReport& b, TheoremVerdict& v) {
    if (!b.applicable) {
        vacuous(v, b.reason);
        return;
    }
    if (b.spectral && b.band_flip) {
        violate(v, "verdict flips inside the spectral tolerance band");
        return;
    }
    if (!b.lower_ok || !b.upper_ok) {
        std::ostringstream note;
        note << "exact " << show(b.exact) << " outside [" << b.lower << ", " << b.upper << "]";
        violate(v, note.str());
    }
}

Claim make(std::string id, std::string direction, std::string summary, std::string hyp_text,
           std::function<bool(const Graph&)> hyp,
           std::function<void(InvariantCache&, TheoremVerdict&, std::optional<Discrepancy>&)> fn) {
    Claim c;
    c.id = std::move(id);
    c.direction = std::move(direction);
    c.summary = std::move(summary);
    c.hypothesis_text = std::move(hyp_text);
    c.hypothesis = std::move(hyp);
    c.check = std::move(fn);
    return c;
}

bool hyp_cubic(const Graph& g) { return is_cubic(g); }
bool hyp_regular(const Graph& g) { return g.order() > 0 && degree_profile(g).regular; }
bool hyp_any(const Graph& g) { return g.order() > 0; }

std::vector<Claim> build_registry() {
    std::vector<Claim> r;

    r.push_back(make(
        "T1.1", "bound", "cubic: n/2 <= gamma_so <= 3n/4", "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            int n = c.graph().order(), gso = c.gamma_so();
            if (2 * gso < n || 4 * gso > 3 * n) {
                violate(v, "gamma_so = " + std::to_string(gso) + " outside [n/2, 3n/4], n = " +
                               std::to_string(n));
                attach_set(v, "gamma_so_witness", c.gamma_so_witness());
            }
        }));

    r.push_back(make(
        "T1.2", "iff", "cubic: gamma_so = n/2 iff bipartite", "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            int n = c.graph().order();
            check_iff(v, 2 * c.gamma_so() == n, c.bipartite(), "gamma_so = n/2", "bipartite");
            if (v.status == Status::violated)
                attach_set(v, "gamma_so_witness", c.gamma_so_witness());
        }));

    r.push_back(make(
        "T1.3", "iff", "cubic: gamma_so = 3n/4 iff the graph is K4", "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            int n = c.graph().order();
            bool is_k4 = n == 4 && is_complete_graph(c.graph());
            check_iff(v, 4 * c.gamma_so() == 3 * n, is_k4, "gamma_so = 3n/4", "graph is K4");
            if (v.status == Status::violated)
                attach_set(v, "gamma_so_witness", c.gamma_so_witness());
        }));

    r.push_back(make(
        "EQ1", "equality", "delta-regular: gamma_delta + alpha = n", "regular", hyp_regular,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            int n = c.graph().order();
            int delta = *c.profile().common_degree;
            if (delta < 1) {
                vacuous(v, "degree-0 graph");
                return;
            }
            int gd = c.gamma_k(delta), al = c.alpha();
            if (gd + al != n) {
                violate(v, "gamma_" + std::to_string(delta) + " + alpha = " +
                               std::to_string(gd + al) + " != n = " + std::to_string(n));
                attach_set(v, "alpha_witness", c.alpha_witness());
            }
        }));

    r.push_back(make(
        "EQ2", "equality", "cubic: gamma_3 = gamma_so = n - alpha", "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            int n = c.graph().order();
            int g3 = c.gamma_k(3), gso = c.gamma_so(), al = c.alpha();
            if (g3 != gso || gso != n - al) {
                violate(v, "gamma_3 = " + std::to_string(g3) + ", gamma_so = " +
                               std::to_string(gso) + ", n - alpha = " + std::to_string(n - al));
                attach_set(v, "gamma_so_witness", c.gamma_so_witness());
                attach_set(v, "alpha_witness", c.alpha_witness());
            }
        }));

    r.push_back(make(
        "TRIANGLE-CLASS", "implication",
        "cubic, n >= 6, partitioned into n/3 disjoint triangles: gamma_so = 2n/3",
        "cubic and n >= 6", [](const Graph& g) { return is_cubic(g) && g.order() >= 6; },
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            if (!c.has_triangle_partition()) {
                vacuous(v, "no partition into disjoint triangles");
                return;
            }
            int n = c.graph().order(), gso = c.gamma_so();
            if (3 * gso != 2 * n) {
                violate(v, "gamma_so = " + std::to_string(gso) + " != 2n/3");
                attach_set(v, "gamma_so_witness", c.gamma_so_witness());
            }
        }));

    r.push_back(make(
        "T3", "bound", "spectral: (n/mu)ceil((delta+1)/2) <= gamma_o <= n(2mu-delta)/(2mu)",
        "connected, at least one edge", [](const Graph& g) { return g.size() >= 1; },
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            auto b = bounds_thof(c.graph(), c.gamma_o());
            from_bounds_report(b, v);
            if (v.status == Status::violated)
                attach_set(v, "gamma_o_witness", c.gamma_o_witness());
        }));

    r.push_back(make(
        "C1", "bound", "delta-regular: n*delta/4 <= gamma_o(L) <= n(delta+1)/4", "regular",
        hyp_regular,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            auto b = bounds_coro(c.graph(), c.line().gamma_o());
            from_bounds_report(b, v);
            if (v.status == Status::violated)
                attach_set(v, "line_gamma_o_witness", c.line().gamma_o_witness());
        }));

    r.push_back(make(
        "EIGEN", "equality", "regular: mu(L) = 2*delta",
        "regular, <= 20 edges, delta >= 3 or an even cycle",
        [](const Graph& g) {
            auto p = degree_profile(g);
            if (!p.regular || g.order() == 0 || g.size() > 20) return false;
            // at delta = 2 the line graph of a cycle is the cycle itself and
            // only even cycles reach mu = 4
            return *p.common_degree >= 3 ||
                   (*p.common_degree == 2 && is_bipartite(g).has_value());
        },
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            double expected = line_graph_spectral_radius_regular(*c.profile().common_degree);
            double got = c.line().mu();
            if (std::abs(got - expected) > 1e-6)
                violate(v, "mu(L) = " + std::to_string(got) + " != " + std::to_string(expected));
        }));

    r.push_back(make(
        "EQ5", "equality", "cubic: gamma_so(L) = gamma_o(L) and 3n/4 <= gamma_o(L) <= n (base n)",
        "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            int n = c.graph().order();
            int go = c.line().gamma_o(), gso = c.line().gamma_so();
            if (go != gso) {
                violate(v, "gamma_o(L) = " + std::to_string(go) + " != gamma_so(L) = " +
                               std::to_string(gso));
                attach_set(v, "line_gamma_o_witness", c.line().gamma_o_witness());
                attach_set(v, "line_gamma_so_witness", c.line().gamma_so_witness());
                return;
            }
            if (4 * go < 3 * n || go > n) {
                violate(v, "gamma_o(L) = " + std::to_string(go) + " outside [3n/4, n]");
                attach_set(v, "line_gamma_o_witness", c.line().gamma_o_witness());
            }
        }));

    r.push_back(make(
        "T4", "bound", "degree bounds: parity lower bound <= gamma_o <= 2n/3",
        "connected, n >= 2", [](const Graph& g) { return g.order() >= 2; },
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            from_bounds_report(bounds_cotainf(c.graph(), c.gamma_o()), v);
            if (v.status == Status::violated)
                attach_set(v, "gamma_o_witness", c.gamma_o_witness());
        }));

    r.push_back(make(
        "T5", "bound", "regular odd degree: n(delta+1)/(3delta+1) <= gamma_o <= n/2",
        "regular of odd degree",
        [](const Graph& g) {
            auto p = degree_profile(g);
            return g.order() > 0 && p.regular && *p.common_degree % 2 == 1;
        },
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            from_bounds_report(bounds_cotasup(c.graph(), c.gamma_o()), v);
            if (v.status == Status::violated)
                attach_set(v, "gamma_o_witness", c.gamma_o_witness());
        }));

    r.push_back(make(
        "EQ6", "bound", "cubic: 2n/5 <= gamma_o <= n/2", "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            from_bounds_report(bounds_eq6(c.graph(), c.gamma_o()), v);
            if (v.status == Status::violated)
                attach_set(v, "gamma_o_witness", c.gamma_o_witness());
        }));

    r.push_back(make(
        "PROP-2N5", "implication",
        "cubic: every global offensive alliance of size 2n/5 is independent", "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            const Graph& g = c.graph();
            int n = g.order();
            if (n % 5 != 0) {
                vacuous(v, "2n/5 is not an integer");
                return;
            }
            int k = 2 * n / 5;
            long found = 0;
            std::optional<VertexSet> offender;
            std::function<bool(std::uint64_t, int, int)> rec = [&](std::uint64_t cur, int first,
                                                                   int remaining) {
                if (remaining == 0) {
                    VertexSet s = VertexSet::from_bits(n, cur);
                    if (is_global_offensive(g, s).holds) {
                        ++found;
                        if (!is_independent(g, s)) {
                            offender = s;
                            return true;
                        }
                    }
                    return false;
                }
                for (int x = first; x <= n - remaining; ++x)
                    if (rec(cur | (std::uint64_t{1} << x), x + 1, remaining - 1)) return true;
                return false;
            };
            rec(0, 0, k);
            if (offender) {
                violate(v, "global offensive alliance of size 2n/5 is not independent");
                attach_set(v, "alliance", *offender);
            } else if (found == 0) {
                vacuous(v, "no global offensive alliance of size 2n/5");
            } else {
                v.notes = std::to_string(found) + " alliance(s) of size 2n/5 checked";
            }
        }));

    r.push_back(make(
        "LEM1", "implication",
        "complement of every global offensive alliance is SDA-free", "connected", hyp_any,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            const Graph& g = c.graph();
            int n = g.order();
            if (n > c.caps().alliance)
                throw CapExceeded("LEM1 enumerates all subsets; n exceeds the alliance cap");
            std::uint64_t all = VertexSet::full_mask(n);
            for (std::uint64_t bits = 1; bits <= all; ++bits) {
                VertexSet x = VertexSet::from_bits(n, bits);
                if (!is_global_offensive(g, x).holds) continue;
                VertexSet rest = x.complement();
                if (!is_sda_free(g, rest)) {
                    violate(v, "complement of a global offensive alliance contains an SDA");
                    attach_set(v, "alliance", x);
                    attach_set(v, "sda_residue", sda_residue(g, rest));
                    return;
                }
            }
        }));

    r.push_back(make(
        "LEM2", "implication",
        "blocks all odd cliques or odd cycles: phi0 <= zeta0", "connected", hyp_any,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            if (!c.blocks_all_odd_cycles_or_cliques()) {
                vacuous(v, "some block is neither an odd clique nor an odd cycle");
                return;
            }
            if (c.phi0() > c.zeta0())
                violate(v, "phi0 = " + std::to_string(c.phi0()) + " > zeta0 = " +
                               std::to_string(c.zeta0()));
        }));

    r.push_back(make(
        "T6", "implication", "cubic with all blocks odd cycles: gamma_o = n/2", "cubic",
        hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            // no cubic graph qualifies: a graph whose blocks are all cycles
            // has every vertex of even degree
            if (!c.blocks_all_odd_cycles()) {
                vacuous(v, "some block is not an odd cycle");
                return;
            }
            if (2 * c.gamma_o() != c.graph().order())
                violate(v, "gamma_o = " + std::to_string(c.gamma_o()) + " != n/2");
        }));

    r.push_back(make(
        "COR-BIP", "iff",
        "cubic: a global strong independent offensive alliance exists iff bipartite", "cubic",
        hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            check_iff(v, c.has_independent_global_strong(), c.bipartite(),
                      "independent global strong offensive alliance exists", "bipartite");
        }));

    r.push_back(make(
        "T7.1", "bound", "cubic with gamma_i: 2n/5 <= gamma_i <= n/2", "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            auto gi = c.gamma_i();
            if (!gi) {
                vacuous(v, "no independent global offensive alliance");
                return;
            }
            int n = c.graph().order();
            if (5 * *gi < 2 * n || 2 * *gi > n)
                violate(v, "gamma_i = " + std::to_string(*gi) + " outside [2n/5, n/2]");
        }));

    r.push_back(make(
        "T7.2", "iff", "cubic with gamma_i: gamma_i = n/2 iff bipartite", "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            auto gi = c.gamma_i();
            if (!gi) {
                if (c.bipartite())
                    violate(v, "bipartite cubic graph without independent global offensive "
                               "alliance");
                else
                    vacuous(v, "no independent global offensive alliance");
                return;
            }
            check_iff(v, 2 * *gi == c.graph().order(), c.bipartite(), "gamma_i = n/2",
                      "bipartite");
        }));

    r.push_back(make(
        "T7.3", "iff",
        "cubic with gamma_i: gamma_i = 2n/5 iff some independent set leaves a 1-factor of size "
        "3n/10",
        "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            auto gi = c.gamma_i();
            if (!gi) {
                vacuous(v, "no independent global offensive alliance");
                return;
            }
            check_iff(v, 5 * *gi == 2 * c.graph().order(), c.has_one_factor_complement(),
                      "gamma_i = 2n/5", "an independent set leaves a 1-factor");
        }));

    r.push_back(make(
        "COR-ALPHA", "implication",
        "cubic: alpha < 2n/5 forbids independent global offensive alliances", "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            if (5 * c.alpha() >= 2 * c.graph().order()) {
                vacuous(v, "alpha >= 2n/5");
                return;
            }
            if (c.gamma_i()) {
                violate(v, "gamma_i exists although alpha < 2n/5");
                attach_set(v, "alpha_witness", c.alpha_witness());
            }
        }));

    r.push_back(make(
        "T8", "bound", "cubic with a_i < gamma_i: (n+2)/4 <= a_i <= (n-2)/2", "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>&) {
            auto b = bounds_otfen22(c.graph(), c.a_i(), c.gamma_i());
            from_bounds_report(b, v);
        }));

    r.push_back(make(
        "CHAIN-BIP", "equality",
        "bipartite cubic: gamma_i = gamma_o = gamma_so = alpha = n/2 (domination term flagged "
        "separately)",
        "cubic", hyp_cubic,
        [](InvariantCache& c, TheoremVerdict& v, std::optional<Discrepancy>& disc) {
            if (!c.bipartite()) {
                vacuous(v, "not bipartite");
                return;
            }
            int n = c.graph().order();
            auto gi = c.gamma_i();
            bool ok = gi && 2 * *gi == n && 2 * c.gamma_o() == n && 2 * c.gamma_so() == n &&
                      2 * c.alpha() == n;
            if (!ok)
                violate(v, "chain broken: gamma_i = " + show(gi) + ", gamma_o = " +
                               std::to_string(c.gamma_o()) + ", gamma_so = " +
                               std::to_string(c.gamma_so()) + ", alpha = " +
                               std::to_string(c.alpha()) + ", n = " + std::to_string(n));
            // the chain as published also asserts gamma = n/2, which fails
            // (gamma(K_{3,3}) = 2); report it as a discrepancy, never silently
            if (2 * c.gamma() != n) {
                Discrepancy d;
                d.note = "domination term of the bipartite chain fails: gamma = " +
                         std::to_string(c.gamma()) + " != n/2 = " + std::to_string(n) + "/2";
                disc = d;
            }
        }));

    return r;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> registry = build_registry();
    return registry;
}

const std::vector<std::string>& out_of_scope_notes() {
    static const std::vector<std::string> notes = {
        "NP-completeness of the minimum global strong offensive alliance problem: complexity "
        "statements are not machine-checkable here; the solvers use exact exponential search "
        "instead."};
    return notes;
}

// ------------------------------------------------------------- corpus runs

CorpusSpec default_corpus() {
    CorpusSpec spec;
    spec.families = default_families();
    spec.exhaustive_orders = {4, 6, 8};
    spec.random = RandomBlock{{10, 12, 14}, 50, 42};
    return spec;
}

namespace {

std::string pad(int value, int width) {
    std::string s = std::to_string(value);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

struct CorpusGraph {
    std::string ref;
    Graph graph;
};

std::vector<CorpusGraph> assemble(const CorpusSpec& spec) {
    std::vector<CorpusGraph> out;
    for (const auto& fam : expand_family_specs(spec.families))
        out.push_back({"fam:" + fam, make_family(fam)});
    for (int n : spec.exhaustive_orders) {
        int idx = 0;
        for_each_labeled_cubic(
            n,
            [&](const Graph& g) {
                out.push_back({"exh:n=" + pad(n, 2) + ":i=" + pad(idx, 6), g});
                ++idx;
            },
            spec.allow_large_exhaustive);
    }
    if (spec.random) {
        for (int n : spec.random->orders) {
            // the i-th replicate at each order uses seed + i
            for (int i = 0; i < spec.random->count; ++i)
                out.push_back({"rand:n=" + pad(n, 2) + ":i=" + pad(i, 3),
                               random_cubic(n, spec.random->seed + static_cast<std::uint64_t>(i))});
        }
    }
    return out;
}

std::vector<const Claim*> select_claims(const CorpusSpec& spec) {
    std::vector<const Claim*> selected;
    for (const auto& claim : claim_registry()) {
        if (spec.claim_filter.empty()) {
            selected.push_back(&claim);
            continue;
        }
        for (const auto& wanted : spec.claim_filter) {
            std::string upper = wanted;
            std::transform(upper.begin(), upper.end(), upper.begin(),
                           [](unsigned char ch) { return std::toupper(ch); });
            if (upper == claim.id) {
                selected.push_back(&claim);
                break;
            }
        }
    }
    return selected;
}

}  // namespace

HarnessReport run_corpus(const CorpusSpec& spec, int threads) {
    HarnessReport report;
    report.spec = spec;
    report.out_of_scope = out_of_scope_notes();

    std::vector<CorpusGraph> corpus = assemble(spec);
    std::vector<const Claim*> claims = select_claims(spec);
    if (claims.empty()) throw std::invalid_argument("claim filter matched no registry entry");
    report.graphs_total = static_cast<long>(corpus.size());

    std::vector<std::vector<TheoremVerdict>> verdicts(corpus.size());
    std::vector<std::vector<Discrepancy>> discrepancies(corpus.size());

    auto evaluate = [&](std::size_t gi) {
        const auto& [ref, graph] = corpus[gi];
        InvariantCache cache(graph, spec.caps, spec.spectral, spec.fault);
        for (const Claim* claim : claims) {
            TheoremVerdict v;
            v.claim_id = claim->id;
            v.graph_ref = ref;
            std::optional<Discrepancy> disc;
            if (!claim->hypothesis(graph)) {
                v.status = Status::skipped;
                v.notes = "hypothesis not satisfied: " + claim->hypothesis_text;
            } else {
                try {
                    claim->check(cache, v, disc);
                } catch (const CapExceeded& e) {
                    v.status = Status::skipped;
                    v.notes = e.what();
                } catch (const NumericError& e) {
                    v.status = Status::skipped;
                    v.notes = e.what();
                }
            }
            if (v.status == Status::violated) v.graph6 = to_graph6(graph);
            if (disc) {
                disc->claim_id = claim->id;
                disc->graph_ref = ref;
                disc->graph6 = to_graph6(graph);
                discrepancies[gi].push_back(*disc);
            }
            verdicts[gi].push_back(std::move(v));
        }
    };

    if (threads <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i) evaluate(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        int count = std::min<int>(threads, static_cast<int>(corpus.size()));
        pool.reserve(static_cast<std::size_t>(count));
        for (int t = 0; t < count; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= corpus.size()) return;
                    evaluate(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    for (auto& per_graph : verdicts)
        for (auto& v : per_graph) report.verdicts.push_back(std::move(v));
    for (auto& per_graph : discrepancies)
        for (auto& d : per_graph) report.discrepancies.push_back(std::move(d));

    std::sort(report.verdicts.begin(), report.verdicts.end(),
              [](const TheoremVerdict& a, const TheoremVerdict& b) {
                  return std::tie(a.claim_id, a.graph_ref) < std::tie(b.claim_id, b.graph_ref);
              });
    std::sort(report.discrepancies.begin(), report.discrepancies.end(),
              [](const Discrepancy& a, const Discrepancy& b) {
                  return std::tie(a.claim_id, a.graph_ref) < std::tie(b.claim_id, b.graph_ref);
              });

    for (const Claim* claim : claims) {
        ClaimAggregate agg;
        agg.claim_id = claim->id;
        for (const auto& v : report.verdicts) {
            if (v.claim_id != claim->id) continue;
            switch (v.status) {
                case Status::holds:
                    ++agg.holds;
                    ++agg.graphs_checked;
                    break;
                case Status::violated:
                    ++agg.violated;
                    ++agg.graphs_checked;
                    break;
                case Status::vacuous: ++agg.vacuous; break;
                case Status::skipped: ++agg.skipped; break;
            }
        }
        report.violations += agg.violated;
        report.aggregates.push_back(agg);
    }
    return report;
}

// ------------------------------------------------------------ serialization

nlohmann::json corpus_to_json(const CorpusSpec& spec) {
    nlohmann::json j;
    j["families"] = spec.families;
    j["exhaustive_orders"] = spec.exhaustive_orders;
    if (spec.random) {
        j["random"] = {{"orders", spec.random->orders},
                       {"count", spec.random->count},
                       {"seed", spec.random->seed}};
    } else {
        j["random"] = nullptr;
    }
    j["claim_filter"] = spec.claim_filter;
    j["caps"] = {{"alliance", spec.caps.alliance},
                 {"alpha", spec.caps.alpha},
                 {"phi", spec.caps.phi}};
    j["spectral_tol"] = spec.spectral.tol;
    j["fault"] = spec.fault == FaultInjection::none ? "none" : "strong-threshold";
    return j;
}

nlohmann::json report_to_json(const HarnessReport& report) {
    nlohmann::json j;
    j["corpus"] = corpus_to_json(report.spec);
    j["graphs_total"] = report.graphs_total;
    j["violations"] = report.violations;
    j["out_of_scope"] = report.out_of_scope;

    auto aggregates = nlohmann::json::array();
    for (const auto& a : report.aggregates)
        aggregates.push_back({{"claim", a.claim_id},
                              {"checked", a.graphs_checked},
                              {"holds", a.holds},
                              {"violated", a.violated},
                              {"vacuous", a.vacuous},
                              {"skipped", a.skipped}});
    j["claims"] = aggregates;

    auto verdicts = nlohmann::json::array();
    for (const auto& v : report.verdicts) {
        nlohmann::json one = {
            {"claim", v.claim_id}, {"graph", v.graph_ref}, {"status", status_name(v.status)}};
        if (!v.notes.empty()) one["notes"] = v.notes;
        if (!v.graph6.empty()) one["graph6"] = v.graph6;
        if (!v.sets.empty()) {
            nlohmann::json sets;
            for (const auto& [label, members] : v.sets) sets[label] = members;
            one["sets"] = sets;
        }
        verdicts.push_back(std::move(one));
    }
    j["verdicts"] = verdicts;

    auto discrepancies = nlohmann::json::array();
    for (const auto& d : report.discrepancies)
        discrepancies.push_back({{"claim", d.claim_id},
                                 {"graph", d.graph_ref},
                                 {"graph6", d.graph6},
                                 {"note", d.note}});
    j["discrepancies"] = discrepancies;
    return j;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string report_to_csv(const HarnessReport& report) {
    std::ostringstream out;
    out << "claim,graph,status,notes,graph6,sets\n";
    for (const auto& v : report.verdicts) {
        std::ostringstream sets;
        for (const auto& [label, members] : v.sets) {
            sets << label << "={";
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (i) sets << " ";
                sets << members[i];
            }
            sets << "} ";
        }
        out << v.claim_id << "," << v.graph_ref << "," << status_name(v.status) << ","
            << csv_escape(v.notes) << "," << v.graph6 << "," << csv_escape(sets.str()) << "\n";
    }
    return out.str();
}

}  // namespace alliance::harness
