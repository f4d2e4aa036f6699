#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alliance/errors.hpp"
#include "alliance/generators.hpp"
#include "alliance/graph.hpp"
#include "alliance/harness.hpp"
#include "alliance/io.hpp"
#include "alliance/solvers.hpp"
#include "alliance/spectral.hpp"
#include "alliance/version.hpp"

using nlohmann::json;
using namespace alliance;

namespace {

// ---- envelope ----

struct Envelope {
    std::string command;
    std::vector<std::string> arguments;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    json close(json payload) const {
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                              started)
                        .count();
        return json{{"tool", tool_name},     {"version", tool_version},
                    {"command", command},    {"arguments", arguments},
                    {"timing_ms", ms},       {"payload", std::move(payload)}};
    }
};

// ---- input handling ----

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string trimmed = line;
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
            trimmed.pop_back();
        if (!trimmed.empty()) lines.push_back(trimmed);
    }
    return lines;
}

// commas split family lists only outside parentheses:
// "complete_bipartite(3,3),prism(3..6)" -> two entries
std::vector<std::string> split_family_list(const std::vector<std::string>& raw) {
    std::vector<std::string> out;
    for (const auto& blob : raw) {
        std::string cur;
        int depth = 0;
        for (char c : blob) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) out.push_back(cur);
    }
    return out;
}

std::string strip_g6_header(const std::string& line) {
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) return line.substr(header.size());
    return line;
}

std::string detect_format(const std::string& text) {
    for (const auto& line : nonempty_lines(text)) {
        if (line.find(' ') != std::string::npos || line.rfind("n ", 0) == 0) return "edgelist";
        return "graph6";
    }
    throw ParseError("empty input");
}

Graph parse_single_graph(const std::string& text, std::string format) {
    if (format == "auto") format = detect_format(text);
    if (format == "edgelist") return parse_edge_list(text);
    if (format != "graph6") throw ParseError("unknown input format: " + format);
    auto lines = nonempty_lines(text);
    if (lines.empty()) throw ParseError("empty graph6 input");
    if (lines.size() > 1)
        throw ParseError("input holds " + std::to_string(lines.size()) +
                         " graphs; this command expects exactly one");
    return parse_graph6(strip_g6_header(lines[0]));
}

json graph_info(const Graph& g) {
    json j{{"n", g.order()}, {"m", g.size()}};
    if (g.order() <= 62) j["graph6"] = to_graph6(g);
    if (!g.name().empty()) j["name"] = g.name();
    return j;
}

std::string set_text(const std::vector<int>& members) {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) out << " ";
        out << members[i];
    }
    out << "}";
    return out.str();
}

// ---- shared flags ----

struct CapFlags {
    SolverCaps caps;
    void attach(CLI::App* cmd) {
        cmd->add_option("--alliance-cap", caps.alliance,
                        "max order for alliance subset searches (default 16)");
        cmd->add_option("--alpha-cap", caps.alpha,
                        "max order for the independence-number search (default 32)");
        cmd->add_option("--phi-cap", caps.phi, "max order for the phi0 search (default 16)");
    }
};

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const CapExceeded*>(&e)) return 3;
    if (dynamic_cast<const DisconnectedError*>(&e)) return 4;
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UnsupportedSize*>(&e) ||
        dynamic_cast<const std::invalid_argument*>(&e) ||
        dynamic_cast<const std::domain_error*>(&e))
        return 2;
    return 1;
}

// ---- analyze ----

struct AnalyzeArgs {
    std::string input = "-";
    std::string format = "auto";
    bool all = false;
    bool want_gamma = false, want_i_gamma = false, want_alpha = false;
    bool want_gamma_o = false, want_gamma_so = false, want_gamma_i = false;
    bool want_a_o = false, want_a_so = false, want_a_i = false;
    bool want_phi0 = false, want_zeta0 = false;
    std::vector<int> gamma_k;
    CapFlags caps;
};

std::vector<std::string> requested_invariants(const AnalyzeArgs& a) {
    std::vector<std::string> ids;
    if (a.all) ids = default_invariants();
    auto add = [&](bool flag, const char* id) {
        if (flag && std::find(ids.begin(), ids.end(), id) == ids.end()) ids.emplace_back(id);
    };
    add(a.want_gamma, "gamma");
    add(a.want_i_gamma, "i_gamma");
    add(a.want_alpha, "alpha");
    add(a.want_gamma_o, "gamma_o");
    add(a.want_gamma_so, "gamma_so");
    add(a.want_gamma_i, "gamma_i");
    add(a.want_a_o, "a_o");
    add(a.want_a_so, "a_so");
    add(a.want_a_i, "a_i");
    add(a.want_phi0, "phi0");
    add(a.want_zeta0, "zeta0");
    for (int k : a.gamma_k) {
        std::string id = "gamma_" + std::to_string(k);
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    if (ids.empty()) ids = default_invariants();
    return ids;
}

int run_analyze(const AnalyzeArgs& args, const Envelope& env, bool as_json) {
    Graph g = parse_single_graph(read_all(args.input), args.format);
    auto analysis = analyze(g, requested_invariants(args), args.caps.caps);

    json invariants = json::object();
    for (const auto& [id, r] : analysis.invariants) {
        json one{{"present", r.value.has_value()}};
        if (r.value) {
            one["value"] = *r.value;
            one["witness"] = r.witness->to_vector();
            one["method"] = method_name(r.method);
            one["cross_checked"] = r.cross_checked;
        }
        invariants[id] = std::move(one);
    }
    json payload{{"graph", graph_info(g)}, {"invariants", std::move(invariants)}};

    if (as_json) {
        std::cout << env.close(std::move(payload)).dump(2) << "\n";
        return 0;
    }
    std::cout << "graph: " << (g.name().empty() ? "(unnamed)" : g.name()) << "  n=" << g.order()
              << " m=" << g.size() << "\n";
    std::cout << std::left << std::setw(10) << "invariant" << std::setw(8) << "value"
              << std::setw(24) << "method" << "witness\n";
    for (const auto& [id, r] : analysis.invariants) {
        std::cout << std::left << std::setw(10) << id;
        if (r.value) {
            std::cout << std::setw(8) << *r.value << std::setw(24)
                      << (method_name(r.method) + (r.cross_checked ? " (cross-checked)" : ""))
                      << set_text(r.witness->to_vector()) << "\n";
        } else {
            std::cout << "absent\n";
        }
    }
    return 0;
}

// ---- bounds ----

struct BoundsArgs {
    std::string input = "-";
    std::string format = "auto";
    std::vector<std::string> claims;
    double tol = 1e-9;
    CapFlags caps;
};

int run_bounds(const BoundsArgs& args, const Envelope& env, bool as_json) {
    Graph g = parse_single_graph(read_all(args.input), args.format);
    if (!is_connected(g)) throw DisconnectedError("bounds requires a connected graph");
    SpectralOptions sopt;
    sopt.tol = args.tol;
    harness::InvariantCache cache(g, args.caps.caps, sopt, harness::FaultInjection::none);

    std::vector<std::string> wanted = args.claims;
    if (wanted.empty())
        wanted = {"th1", "thof", "coro", "cotainf", "cotasup", "eq5", "eq6", "otfen22"};

    auto exact_or_absent = [&](auto&& fn) -> std::optional<int> {
        try {
            return fn();
        } catch (const CapExceeded&) {
            return std::nullopt;
        }
    };

    std::vector<BoundsReport> reports;
    for (const auto& name : wanted) {
        try {
            if (name == "th1") {
                reports.push_back(
                    bounds_th1(g, exact_or_absent([&] { return cache.gamma_so(); })));
            } else if (name == "thof") {
                reports.push_back(bounds_thof(
                    g, exact_or_absent([&] { return cache.gamma_o(); }), sopt));
            } else if (name == "coro") {
                reports.push_back(bounds_coro(
                    g, exact_or_absent([&] { return cache.line().gamma_o(); })));
            } else if (name == "cotainf") {
                reports.push_back(
                    bounds_cotainf(g, exact_or_absent([&] { return cache.gamma_o(); })));
            } else if (name == "cotasup") {
                reports.push_back(
                    bounds_cotasup(g, exact_or_absent([&] { return cache.gamma_o(); })));
            } else if (name == "eq5") {
                reports.push_back(bounds_eq5(
                    g, exact_or_absent([&] { return cache.line().gamma_o(); })));
            } else if (name == "eq6") {
                reports.push_back(
                    bounds_eq6(g, exact_or_absent([&] { return cache.gamma_o(); })));
            } else if (name == "otfen22") {
                auto ai = exact_or_absent([&] { return cache.a_i(); });
                auto gi = exact_or_absent([&] { return cache.gamma_i(); });
                reports.push_back(bounds_otfen22(g, ai ? *ai : std::optional<int>{},
                                                 gi ? *gi : std::optional<int>{}));
            } else {
                throw std::invalid_argument("unknown bounds claim: " + name);
            }
        } catch (const std::domain_error& e) {
            BoundsReport r;
            r.claim = name;
            r.applicable = false;
            r.reason = e.what();
            reports.push_back(std::move(r));
        }
    }

    json list = json::array();
    for (const auto& r : reports) {
        json one{{"claim", r.claim}, {"applicable", r.applicable}};
        if (!r.applicable) {
            one["reason"] = r.reason;
        } else {
            one["lower"] = r.lower;
            one["upper"] = r.upper;
            if (r.lower_exact) one["lower_rational"] = to_string(*r.lower_exact);
            if (r.upper_exact) one["upper_rational"] = to_string(*r.upper_exact);
            one["exact"] = r.exact ? json(*r.exact) : json(nullptr);
            one["lower_ok"] = r.lower_ok;
            one["upper_ok"] = r.upper_ok;
            one["spectral"] = r.spectral;
            if (r.spectral) {
                one["lower_safe"] = r.lower_safe;
                one["upper_safe"] = r.upper_safe;
                one["band_flip"] = r.band_flip;
            }
            one["parameters"] = r.parameters;
        }
        list.push_back(std::move(one));
    }
    json payload{{"graph", graph_info(g)}, {"reports", std::move(list)}};

    if (as_json) {
        std::cout << env.close(std::move(payload)).dump(2) << "\n";
        return 0;
    }
    std::cout << "graph: " << (g.name().empty() ? "(unnamed)" : g.name()) << "  n=" << g.order()
              << " m=" << g.size() << "\n";
    std::cout << std::left << std::setw(9) << "claim" << std::setw(12) << "lower" << std::setw(12)
              << "upper" << std::setw(8) << "exact" << "verdict\n";
    for (const auto& r : reports) {
        std::cout << std::left << std::setw(9) << r.claim;
        if (!r.applicable) {
            std::cout << "skipped: " << r.reason << "\n";
            continue;
        }
        auto fmt = [](double v, const std::optional<Rational>& rat) {
            if (rat) return to_string(*rat);
            std::ostringstream s;
            s << std::setprecision(8) << v;
            return s.str();
        };
        std::cout << std::setw(12) << fmt(r.lower, r.lower_exact) << std::setw(12)
                  << fmt(r.upper, r.upper_exact) << std::setw(8)
                  << (r.exact ? std::to_string(*r.exact) : "-")
                  << (r.lower_ok && r.upper_ok ? "ok" : "VIOLATED")
                  << (r.band_flip ? " (band flip!)" : "") << "\n";
    }
    return 0;
}

// ---- verify ----

struct VerifyArgs {
    std::vector<int> exhaustive;
    std::string random_spec;
    std::vector<std::string> families;
    std::vector<std::string> claims;
    int threads = 0;
    std::string csv_path;
    std::string inject_fault;
    bool allow_large = false;
    double tol = 1e-9;
    CapFlags caps;
    bool corpus_flag_seen = false;
};

harness::RandomBlock parse_random_spec(const std::string& spec) {
    // "n=10..14,count=50,seed=42" or "n=10,12,count=50,seed=42"
    harness::RandomBlock block;
    block.count = 50;
    block.seed = 42;
    std::istringstream in(spec);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        if (piece.rfind("n=", 0) == 0) {
            std::string range = piece.substr(2);
            std::size_t dots = range.find("..");
            if (dots != std::string::npos) {
                int lo = std::stoi(range.substr(0, dots));
                int hi = std::stoi(range.substr(dots + 2));
                for (int n = lo; n <= hi; ++n)
                    if (n % 2 == 0) block.orders.push_back(n);
            } else {
                block.orders.push_back(std::stoi(range));
            }
        } else if (piece.rfind("count=", 0) == 0) {
            block.count = std::stoi(piece.substr(6));
        } else if (piece.rfind("seed=", 0) == 0) {
            block.seed = std::stoull(piece.substr(5));
        } else if (!piece.empty() && piece.find_first_not_of("0123456789") == std::string::npos) {
            block.orders.push_back(std::stoi(piece));  // bare order after n=a..b
        } else {
            throw std::invalid_argument("bad --random spec piece: " + piece);
        }
    }
    if (block.orders.empty()) throw std::invalid_argument("--random needs at least one order");
    return block;
}

int run_verify(const VerifyArgs& args, const Envelope& env, bool as_json) {
    harness::CorpusSpec spec;
    if (args.corpus_flag_seen) {
        spec.families = split_family_list(args.families);
        spec.exhaustive_orders = args.exhaustive;
        if (!args.random_spec.empty()) spec.random = parse_random_spec(args.random_spec);
    } else {
        spec = harness::default_corpus();
    }
    spec.claim_filter = args.claims;
    spec.caps = args.caps.caps;
    spec.spectral.tol = args.tol;
    spec.allow_large_exhaustive = args.allow_large;
    if (!args.inject_fault.empty()) {
        if (args.inject_fault != "strong-threshold")
            throw std::invalid_argument("unknown fault: " + args.inject_fault);
        spec.fault = harness::FaultInjection::strong_threshold;
    }

    int threads = args.threads > 0 ? args.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    auto report = harness::run_corpus(spec, threads);

    if (!args.csv_path.empty()) {
        std::ofstream out(args.csv_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write CSV to " + args.csv_path);
        out << harness::report_to_csv(report);
    }

    if (as_json) {
        std::cout << env.close(harness::report_to_json(report)).dump(2) << "\n";
    } else {
        std::cout << "corpus: " << report.graphs_total << " graph(s)\n";
        std::cout << std::left << std::setw(16) << "claim" << std::right << std::setw(9)
                  << "checked" << std::setw(9) << "holds" << std::setw(10) << "violated"
                  << std::setw(9) << "vacuous" << std::setw(9) << "skipped" << "\n";
        for (const auto& a : report.aggregates)
            std::cout << std::left << std::setw(16) << a.claim_id << std::right << std::setw(9)
                      << a.graphs_checked << std::setw(9) << a.holds << std::setw(10)
                      << a.violated << std::setw(9) << a.vacuous << std::setw(9) << a.skipped
                      << "\n";
        for (const auto& v : report.verdicts) {
            if (v.status != harness::Status::violated) continue;
            std::cout << "VIOLATION " << v.claim_id << " on " << v.graph_ref << " (graph6 "
                      << v.graph6 << "): " << v.notes << "\n";
            for (const auto& [label, members] : v.sets)
                std::cout << "  " << label << " = " << set_text(members) << "\n";
        }
        for (const auto& d : report.discrepancies)
            std::cout << "FLAGGED " << d.claim_id << " on " << d.graph_ref << ": " << d.note
                      << "\n";
        for (const auto& note : report.out_of_scope) std::cout << "out of scope: " << note << "\n";
        std::cout << (report.violations == 0 ? "OK" : "FAILED") << ": " << report.violations
                  << " violation(s)\n";
    }
    return report.violations == 0 ? 0 : 5;
}

// ---- gen ----

struct GenArgs {
    std::string family;
    std::vector<int> params;
    std::uint64_t seed = 1;
    int count = 1;
    bool allow_large = false;
};

int run_gen(const GenArgs& args, const Envelope& env, bool as_json) {
    std::vector<Graph> graphs;
    const auto& p = args.params;
    auto want = [&](std::size_t k) {
        if (p.size() != k)
            throw std::invalid_argument("family " + args.family + " takes " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (args.family == "complete") {
        want(1);
        graphs.push_back(complete(p[0]));
    } else if (args.family == "complete-bipartite") {
        want(2);
        graphs.push_back(complete_bipartite(p[0], p[1]));
    } else if (args.family == "cycle") {
        want(1);
        graphs.push_back(cycle(p[0]));
    } else if (args.family == "prism") {
        want(1);
        graphs.push_back(prism(p[0]));
    } else if (args.family == "petersen") {
        want(0);
        graphs.push_back(petersen());
    } else if (args.family == "random-cubic") {
        want(1);
        for (int i = 0; i < args.count; ++i)
            graphs.push_back(random_cubic(p[0], args.seed + static_cast<std::uint64_t>(i)));
    } else if (args.family == "labeled-cubic") {
        want(1);
        graphs = all_labeled_cubic(p[0], args.allow_large);
    } else {
        throw std::invalid_argument("unknown family: " + args.family);
    }

    std::vector<std::string> lines;
    lines.reserve(graphs.size());
    for (const auto& g : graphs) lines.push_back(to_graph6(g));

    if (as_json) {
        std::cout << env.close(json{{"family", args.family}, {"graphs", lines}}).dump(2) << "\n";
    } else {
        for (const auto& line : lines) std::cout << line << "\n";
    }
    return 0;
}

// ---- convert ----

struct ConvertArgs {
    std::string input = "-";
    std::string from = "auto";
    std::string to = "graph6";
};

int run_convert(const ConvertArgs& args, const Envelope& env, bool as_json) {
    Graph g = parse_single_graph(read_all(args.input), args.from);
    std::string out;
    if (args.to == "graph6")
        out = to_graph6(g) + "\n";
    else if (args.to == "edgelist")
        out = to_edge_list(g);
    else
        throw std::invalid_argument("unknown output format: " + args.to);

    if (as_json) {
        std::cout << env.close(json{{"output", out}}).dump(2) << "\n";
    } else {
        std::cout << out;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact offensive-alliance invariants, bounds and claim verification for small "
                 "graphs"};
    app.set_version_flag("--version", std::string(tool_version));
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a JSON envelope instead of tables");
    app.require_subcommand(1);

    Envelope env;
    for (int i = 1; i < argc; ++i) env.arguments.emplace_back(argv[i]);

    AnalyzeArgs analyze_args;
    auto* analyze_cmd =
        app.add_subcommand("analyze", "compute alliance invariants of one graph");
    analyze_cmd->add_option("input", analyze_args.input, "path or - for stdin");
    analyze_cmd->add_option("--format", analyze_args.format, "graph6|edgelist|auto");
    analyze_cmd->add_flag("--all", analyze_args.all, "every invariant (default)");
    analyze_cmd->add_flag("--gamma", analyze_args.want_gamma, "domination number");
    analyze_cmd->add_flag("--i-gamma", analyze_args.want_i_gamma, "independent domination");
    analyze_cmd->add_flag("--alpha", analyze_args.want_alpha, "independence number");
    analyze_cmd->add_flag("--gamma-o", analyze_args.want_gamma_o, "global offensive");
    analyze_cmd->add_flag("--gamma-so", analyze_args.want_gamma_so, "global strong offensive");
    analyze_cmd->add_flag("--gamma-i", analyze_args.want_gamma_i,
                          "independent global offensive");
    analyze_cmd->add_flag("--a-o", analyze_args.want_a_o, "offensive alliance number");
    analyze_cmd->add_flag("--a-so", analyze_args.want_a_so, "strong offensive alliance number");
    analyze_cmd->add_flag("--a-i", analyze_args.want_a_i, "independent offensive alliance");
    analyze_cmd->add_flag("--phi0", analyze_args.want_phi0, "max SDA-free set");
    analyze_cmd->add_flag("--zeta0", analyze_args.want_zeta0, "min SDA cover");
    analyze_cmd->add_option("--gamma-k", analyze_args.gamma_k, "k-domination number(s)");
    analyze_args.caps.attach(analyze_cmd);

    BoundsArgs bounds_args;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate closed-form bounds on one graph");
    bounds_cmd->add_option("input", bounds_args.input, "path or - for stdin");
    bounds_cmd->add_option("--format", bounds_args.format, "graph6|edgelist|auto");
    bounds_cmd->add_option("--claim", bounds_args.claims,
                           "th1|thof|coro|cotainf|cotasup|eq5|eq6|otfen22 (default: all)");
    bounds_cmd->add_option("--tol", bounds_args.tol, "spectral tolerance (default 1e-9)");
    bounds_args.caps.attach(bounds_cmd);

    VerifyArgs verify_args;
    auto* verify_cmd =
        app.add_subcommand("verify", "run the claim registry over a graph corpus");
    auto* exh_opt = verify_cmd->add_option("--exhaustive", verify_args.exhaustive,
                                           "orders for exhaustive labeled cubic enumeration");
    auto* rand_opt = verify_cmd->add_option("--random", verify_args.random_spec,
                                            "random cubic block, e.g. n=10..14,count=50,seed=42");
    auto* fam_opt = verify_cmd->add_option("--families", verify_args.families,
                                           "named families, e.g. prism(3..6),petersen");
    verify_cmd->add_option("--claim", verify_args.claims, "restrict to these claim ids");
    verify_cmd->add_option("--threads", verify_args.threads,
                           "worker threads (default: hardware)");
    verify_cmd->add_option("--csv", verify_args.csv_path, "also write the verdicts as CSV");
    verify_cmd->add_option("--inject-fault", verify_args.inject_fault,
                           "test-only: evaluate strong predicates with the plain threshold")
        ->group("");  // hidden
    verify_cmd->add_flag("--allow-large", verify_args.allow_large,
                         "permit exhaustive enumeration at n = 10");
    verify_cmd->add_option("--tol", verify_args.tol, "spectral tolerance (default 1e-9)");
    verify_args.caps.attach(verify_cmd);

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "emit generated graphs as graph6 lines");
    gen_cmd->add_option("family", gen_args.family,
                        "complete|complete-bipartite|cycle|prism|petersen|random-cubic|"
                        "labeled-cubic")
        ->required();
    gen_cmd->add_option("params", gen_args.params, "family parameters");
    gen_cmd->add_option("--seed", gen_args.seed, "seed for random-cubic");
    gen_cmd->add_option("--count", gen_args.count,
                        "number of graphs for random-cubic (seed, seed+1, ...)");
    gen_cmd->add_flag("--allow-large", gen_args.allow_large,
                      "permit labeled-cubic at n = 10");

    ConvertArgs convert_args;
    auto* convert_cmd = app.add_subcommand("convert", "convert between graph formats");
    convert_cmd->add_option("input", convert_args.input, "path or - for stdin");
    convert_cmd->add_option("--from", convert_args.from, "graph6|edgelist|auto");
    convert_cmd->add_option("--to", convert_args.to, "graph6|edgelist");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze_cmd)) {
            env.command = "analyze";
            return run_analyze(analyze_args, env, as_json);
        }
        if (app.got_subcommand(bounds_cmd)) {
            env.command = "bounds";
            return run_bounds(bounds_args, env, as_json);
        }
        if (app.got_subcommand(verify_cmd)) {
            env.command = "verify";
            verify_args.corpus_flag_seen =
                exh_opt->count() > 0 || rand_opt->count() > 0 || fam_opt->count() > 0;
            return run_verify(verify_args, env, as_json);
        }
        if (app.got_subcommand(gen_cmd)) {
            env.command = "gen";
            return run_gen(gen_args, env, as_json);
        }
        if (app.got_subcommand(convert_cmd)) {
            env.command = "convert";
            return run_convert(convert_args, env, as_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 2;
}
