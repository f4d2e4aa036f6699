#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "alliance/graph.hpp"
#include "alliance/solvers.hpp"
#include "alliance/spectral.hpp"

#include <json.hpp>

namespace alliance::harness {

// ---- fixture graphs ----

// Two cycles of lengths a and b sharing exactly one vertex (both blocks are
// cycles; with odd a, b this exercises the SDA-free/cover claims).
Graph cactus(int a, int b);

// Cubic graph on 12 vertices made of 4 vertex-disjoint triangles: the line
// graph of the graph obtained from K4 by subdividing every edge once.
Graph line_of_subdivided_k4();

// "complete(4)", "complete_bipartite(3,3)", "cycle(5)", "prism(4)",
// "petersen", "cactus(3,5)", "line_subdiv_k4".
Graph make_family(const std::string& spec);

// Expands range arguments, e.g. "prism(3..6)" -> prism(3), ..., prism(6).
std::vector<std::string> expand_family_specs(const std::vector<std::string>& specs);

const std::vector<std::string>& default_families();

// ---- verdicts ----

enum class Status { holds, violated, vacuous, skipped };
std::string status_name(Status s);

struct TheoremVerdict {
    std::string claim_id;
    std::string graph_ref;
    Status status = Status::holds;
    std::string notes;
    std::string graph6;  // filled for violations so they re-verify standalone
    std::vector<std::pair<std::string, std::vector<int>>> sets;
};

// A flagged inconsistency that is reported without failing the run (used for
// the domination term of the bipartite-cubic equality chain, which is false:
// gamma(K_{3,3}) = 2 != n/2).
struct Discrepancy {
    std::string claim_id;
    std::string graph_ref;
    std::string graph6;
    std::string note;
};

// Test-only: evaluate the strong alliance predicates with the plain (+1)
// threshold, so violations with counterexamples must surface.
enum class FaultInjection { none, strong_threshold };

// ---- per-graph lazy invariant store ----

class InvariantCache {
public:
    InvariantCache(const Graph& g, const SolverCaps& caps, const SpectralOptions& spectral,
                   FaultInjection fault);

    const Graph& graph() const { return g_; }
    const SolverCaps& caps() const { return caps_; }

    const DegreeProfile& profile();
    bool cubic();
    bool bipartite();

    int alpha();
    const VertexSet& alpha_witness();
    int gamma();
    int gamma_k(int k);
    int gamma_o();
    const VertexSet& gamma_o_witness();
    int gamma_so();
    const VertexSet& gamma_so_witness();
    std::optional<int> gamma_i();
    std::optional<int> a_i();
    int phi0();
    int zeta0();
    double mu();

    bool has_independent_global_strong();
    bool has_triangle_partition();
    // Independent X whose removal leaves a 1-regular induced subgraph
    // (|X| = 2n/5 forced); false when 10 does not divide n.
    bool has_one_factor_complement();

    const BlockDecomposition& block_decomposition();
    bool blocks_all_odd_cycles();
    bool blocks_all_odd_cycles_or_cliques();

    InvariantCache& line();  // invariants of the line graph

private:
    const Graph& g_;
    SolverCaps caps_;
    SpectralOptions spectral_;
    FaultInjection fault_;

    std::optional<DegreeProfile> profile_;
    std::optional<std::optional<Bipartition>> bipartition_;
    std::optional<SearchResult> alpha_;
    std::optional<SearchResult> gamma_;
    std::map<int, SearchResult> gamma_k_;
    std::optional<SearchResult> gamma_o_;
    std::optional<SearchResult> gamma_so_;
    std::optional<std::optional<SearchResult>> gamma_i_;
    std::optional<std::optional<SearchResult>> a_i_;
    std::optional<SearchResult> phi0_;
    std::optional<double> mu_;
    std::optional<bool> ind_global_strong_;
    std::optional<bool> triangle_partition_;
    std::optional<bool> one_factor_complement_;
    std::optional<BlockDecomposition> blocks_;
    std::unique_ptr<LineGraphResult> line_graph_;
    std::unique_ptr<InvariantCache> line_cache_;
};

// ---- claim registry ----

struct Claim {
    std::string id;
    std::string direction;  // bound | equality | iff | implication
    std::string summary;
    std::string hypothesis_text;
    std::function<bool(const Graph&)> hypothesis;
    // Fills status/notes/sets; runs only when the hypothesis holds.
    std::function<void(InvariantCache&, TheoremVerdict&, std::optional<Discrepancy>&)> check;
};

const std::vector<Claim>& claim_registry();
const std::vector<std::string>& out_of_scope_notes();

// ---- corpus runs ----

struct RandomBlock {
    std::vector<int> orders;
    int count = 0;
    std::uint64_t seed = 0;
};

struct CorpusSpec {
    std::vector<std::string> families;
    std::vector<int> exhaustive_orders;
    std::optional<RandomBlock> random;
    std::vector<std::string> claim_filter;  // empty = every claim
    SolverCaps caps;
    SpectralOptions spectral;
    FaultInjection fault = FaultInjection::none;
    bool allow_large_exhaustive = false;
};

// Exhaustive labeled cubic n in {4,6,8}, 50 random cubic per n in
// {10,12,14} at seed 42, plus the named fixture families.
CorpusSpec default_corpus();

struct ClaimAggregate {
    std::string claim_id;
    long graphs_checked = 0;  // hypothesis satisfied, produced holds/violated
    long holds = 0;
    long violated = 0;
    long vacuous = 0;
    long skipped = 0;
};

struct HarnessReport {
    CorpusSpec spec;
    long graphs_total = 0;
    std::vector<ClaimAggregate> aggregates;  // registry order
    std::vector<TheoremVerdict> verdicts;    // sorted by (claim, graph_ref)
    std::vector<Discrepancy> discrepancies;  // sorted by (claim, graph_ref)
    std::vector<std::string> out_of_scope;
    long violations = 0;
};

// Deterministic for a fixed spec: the report does not depend on the thread
// count.
HarnessReport run_corpus(const CorpusSpec& spec, int threads = 1);

nlohmann::json corpus_to_json(const CorpusSpec& spec);
nlohmann::json report_to_json(const HarnessReport& report);
std::string report_to_csv(const HarnessReport& report);

}  // namespace alliance::harness
