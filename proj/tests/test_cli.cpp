#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "alliance/generators.hpp"
#include "alliance/io.hpp"
#include "support/schema_check.hpp"
#include "support/subprocess.hpp"

using nlohmann::json;
using testsupport::run;
using testsupport::write_temp;

namespace {

const std::string bin = ALLIANCEKIT_BIN;

json schema() {
    static json loaded = [] {
        std::ifstream in(ALLIANCEKIT_SCHEMA);
        REQUIRE(in.good());
        json j;
        in >> j;
        return j;
    }();
    return loaded;
}

// validates the envelope against the schema file, then the payload against
// the per-command definition
json check_envelope(const std::string& output, const std::string& command) {
    json envelope = json::parse(output);
    std::string error;
    bool ok = testsupport::validate_schema(schema(), schema(), envelope, error);
    INFO(error);
    CHECK(ok);
    CHECK(envelope["command"] == command);
    std::string def = command + "_payload";
    ok = testsupport::validate_schema(schema(), schema()["definitions"][def],
                                      envelope["payload"], error);
    INFO(error);
    CHECK(ok);
    return envelope;
}

std::string strip_timing(const std::string& output) {
    json envelope = json::parse(output);
    envelope.erase("timing_ms");
    return envelope.dump();
}

}  // namespace

TEST_CASE("gen emits graph6 lines") {
    auto r = run(bin + " gen prism 5");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(alliance::parse_graph6(line) == alliance::prism(5));
    CHECK(alliance::parse_graph6(line).order() == 10);
    CHECK(!std::getline(lines, line));  // exactly one graph

    auto twice_a = run(bin + " gen random-cubic 12 --seed 7");
    auto twice_b = run(bin + " gen random-cubic 12 --seed 7");
    CHECK(twice_a.exit_code == 0);
    CHECK(twice_a.output == twice_b.output);

    auto labeled = run(bin + " gen labeled-cubic 6");
    CHECK(labeled.exit_code == 0);
    CHECK(std::count(labeled.output.begin(), labeled.output.end(), '\n') == 70);

    auto multi = run(bin + " gen random-cubic 10 --seed 3 --count 4");
    CHECK(std::count(multi.output.begin(), multi.output.end(), '\n') == 4);

    CHECK(run(bin + " gen mystery 4").exit_code == 2);
    CHECK(run(bin + " gen prism 2").exit_code == 2);
    CHECK(run(bin + " gen labeled-cubic 10").exit_code == 2);  // needs --allow-large

    auto g = check_envelope(run(bin + " --json gen petersen").output, "gen");
    CHECK(g["payload"]["graphs"].size() == 1);
}

TEST_CASE("convert matches the documented encodings") {
    std::string tri = write_temp("triangle.txt", "n 3\n0 1\n1 2\n2 0\n");
    auto r = run(bin + " convert --from edgelist --to graph6 " + tri);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "Bw\n");

    auto back = run("echo 'Bw' | " + bin + " convert --from graph6 --to edgelist -");
    CHECK(back.exit_code == 0);
    CHECK(back.output == "n 3\n0 1\n0 2\n1 2\n");

    CHECK(run("echo 'not a graph' | " + bin + " convert --from graph6 --to graph6 -").exit_code ==
          2);
    check_envelope(run(bin + " --json convert --from edgelist --to graph6 " + tri).output,
                   "convert");
}

TEST_CASE("analyze reports the documented K_{3,3} values") {
    auto r = run(bin + " --json analyze --all - <<< 'EFz_'");
    // <<< is a bashism; use a temp file instead for portability
    std::string path = write_temp("k33.g6", alliance::to_graph6(alliance::complete_bipartite(3, 3)) + "\n");
    r = run(bin + " --json analyze --all " + path);
    REQUIRE(r.exit_code == 0);
    auto envelope = check_envelope(r.output, "analyze");
    const auto& inv = envelope["payload"]["invariants"];
    CHECK(inv["gamma_o"]["value"] == 3);
    CHECK(inv["gamma_so"]["value"] == 3);
    CHECK(inv["gamma_i"]["value"] == 3);
    CHECK(inv["alpha"]["value"] == 3);
    CHECK(inv["a_i"]["value"] == 2);
    CHECK(inv["gamma_so"]["cross_checked"] == true);
    CHECK(envelope["payload"]["graph"]["n"] == 6);
}

TEST_CASE("analyze selects single invariants") {
    std::string path = write_temp("prism4.g6", alliance::to_graph6(alliance::prism(4)) + "\n");
    auto r = run(bin + " --json analyze --gamma-o " + path);
    REQUIRE(r.exit_code == 0);
    auto envelope = json::parse(r.output);
    CHECK(envelope["payload"]["invariants"]["gamma_o"]["value"] == 4);
    CHECK(envelope["payload"]["invariants"].size() == 1);
}

TEST_CASE("analyze exit codes") {
    std::string disconnected = write_temp("disc.txt", "n 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n");
    CHECK(run(bin + " analyze " + disconnected).exit_code == 4);

    std::string garbage = write_temp("garbage.g6", "C\n");
    CHECK(run(bin + " analyze " + garbage).exit_code == 2);

    std::string big = write_temp("c18.g6", alliance::to_graph6(alliance::cycle(18)) + "\n");
    CHECK(run(bin + " analyze --gamma-o " + big).exit_code == 3);
    // raising the cap makes it feasible
    CHECK(run(bin + " analyze --gamma-o --alliance-cap 18 " + big).exit_code == 0);

    std::string multi = write_temp("multi.g6", "C~\nC~\n");
    CHECK(run(bin + " analyze " + multi).exit_code == 2);
}

TEST_CASE("bounds claims and skips") {
    std::string k33 = write_temp("k33b.g6", alliance::to_graph6(alliance::complete_bipartite(3, 3)) + "\n");
    auto r = run(bin + " --json bounds --claim eq5 " + k33);
    REQUIRE(r.exit_code == 0);
    auto envelope = check_envelope(r.output, "bounds");
    const auto& report = envelope["payload"]["reports"][0];
    CHECK(report["claim"] == "eq5");
    CHECK(report["lower"] == 4.5);
    CHECK(report["upper"] == 6.0);
    CHECK(report["exact"] == 5);
    CHECK(report["lower_ok"] == true);
    CHECK(report["upper_ok"] == true);
    CHECK(report["lower_rational"] == "9/2");

    std::string k4 = write_temp("k4b.g6", "C~\n");
    auto th1 = json::parse(run(bin + " --json bounds --claim th1 " + k4).output);
    const auto& t = th1["payload"]["reports"][0];
    CHECK(t["lower"] == 2.0);
    CHECK(t["upper"] == 3.0);
    CHECK(t["exact"] == 3);

    std::string c6 = write_temp("c6b.g6", alliance::to_graph6(alliance::cycle(6)) + "\n");
    auto skip = json::parse(run(bin + " --json bounds --claim cotasup " + c6).output);
    CHECK(skip["payload"]["reports"][0]["applicable"] == false);

    auto all = json::parse(run(bin + " --json bounds " + k33).output);
    CHECK(all["payload"]["reports"].size() == 8);

    CHECK(run(bin + " bounds --claim nonsense " + k33).exit_code == 2);
    std::string disc = write_temp("discb.txt", "n 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n");
    CHECK(run(bin + " bounds " + disc).exit_code == 4);
}

TEST_CASE("verify: clean corpora exit 0, documented example claims hold") {
    auto r = run(bin + " --json verify --exhaustive 4 --families petersen --claim prop-2n5");
    REQUIRE(r.exit_code == 0);
    auto envelope = check_envelope(r.output, "verify");
    const auto& payload = envelope["payload"];
    CHECK(payload["violations"] == 0);
    CHECK(payload["claims"].size() == 1);
    CHECK(payload["claims"][0]["claim"] == "PROP-2N5");
    CHECK(payload["claims"][0]["holds"] == 1);  // petersen
}

TEST_CASE("verify is deterministic across thread counts") {
    std::string flags = " --json verify --exhaustive 4 6 --families "
                        "\"petersen,prism(3..4),cycle(5),cactus(3,5)\" "
                        "--random n=10,count=5,seed=42";
    auto one = run(bin + flags + " --threads 1");
    auto four = run(bin + flags + " --threads 4");
    REQUIRE(one.exit_code == 0);
    REQUIRE(four.exit_code == 0);
    CHECK(strip_timing(one.output) == strip_timing(four.output));
    CHECK(json::parse(one.output)["payload"] == json::parse(four.output)["payload"]);
}

TEST_CASE("verify writes CSV when asked") {
    std::string csv_path = "/tmp/alliancekit_test_report.csv";
    auto r = run(bin + " verify --families petersen --csv " + csv_path);
    CHECK(r.exit_code == 0);
    std::ifstream in(csv_path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "claim,graph,status,notes,graph6,sets");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 24);  // one claim registry pass over one graph
}

TEST_CASE("verify surfaces injected faults with exit 5 and a counterexample") {
    auto r = run(bin + " --json verify --exhaustive 4 --families \"prism(3),petersen\" "
                       "--inject-fault strong-threshold");
    CHECK(r.exit_code == 5);
    auto payload = json::parse(r.output)["payload"];
    CHECK(payload["violations"].get<long>() > 0);
    bool counterexample = false;
    for (const auto& v : payload["verdicts"])
        if (v["status"] == "violated" && v.contains("graph6")) counterexample = true;
    CHECK(counterexample);
    CHECK(payload["corpus"]["fault"] == "strong-threshold");
}

TEST_CASE("verify reports the genuine n=12 falsifications with exit 5") {
    auto r = run(bin + " --json verify --random n=12,count=50,seed=42 --claim t7.2");
    CHECK(r.exit_code == 5);
    auto payload = json::parse(r.output)["payload"];
    CHECK(payload["violations"] == 1);
    for (const auto& v : payload["verdicts"])
        if (v["status"] == "violated") CHECK(v["graph6"] == "K?Uiaa@g@C?F");
}

TEST_CASE("verify flags the domination discrepancy of the bipartite chain") {
    auto r = run(bin + " --json verify --families \"complete_bipartite(3,3)\" --claim chain-bip");
    REQUIRE(r.exit_code == 0);
    auto payload = json::parse(r.output)["payload"];
    REQUIRE(payload["discrepancies"].size() == 1);
    CHECK(payload["discrepancies"][0]["claim"] == "CHAIN-BIP");
    std::string note = payload["discrepancies"][0]["note"];
    CHECK(note.find("gamma = 2") != std::string::npos);
}

TEST_CASE("top-level flags") {
    auto version = run(bin + " --version");
    CHECK(version.exit_code == 0);
    CHECK(version.output.find("0.1.0") != std::string::npos);
    CHECK(run(bin).exit_code == 2);           // a subcommand is required
    CHECK(run(bin + " frobnicate").exit_code == 2);
}
