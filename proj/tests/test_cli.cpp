#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "locdense/cli.hpp"

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult result;
    result.code = locdense::cli::run(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

// Writes a graph edge list to a temp file and returns its path.
class TempFile {
public:
    explicit TempFile(const std::string& content) {
        static int counter = 0;
        path_ = "cli_test_tmp_" + std::to_string(counter++) + ".txt";
        std::ofstream f(path_, std::ios::binary);
        f << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

const char kTwoTrianglesList[] = "6 6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n";
const char kK8List[] = "8 28\n0 1\n0 2\n0 3\n0 4\n0 5\n0 6\n0 7\n1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n"
                       "2 3\n2 4\n2 5\n2 6\n2 7\n3 4\n3 5\n3 6\n3 7\n4 5\n4 6\n4 7\n5 6\n5 7\n"
                       "6 7\n";

} // namespace

TEST_CASE("cli generates graphs and counts their closed walks") {
    const CliResult gen = run_cli({"gen", "--family", "clique-union", "--k", "2", "--s", "3"});
    CHECK(gen.code == 0);
    CHECK(gen.out == kTwoTrianglesList);

    TempFile graph(gen.out);
    const CliResult count = run_cli({"count", "--graph", graph.path(), "--r", "3"});
    CHECK(count.code == 0);
    CHECK(count.out == "12\n");

    const CliResult paths = run_cli({"count-paths", "--graph", graph.path(), "--k-path", "2"});
    CHECK(paths.code == 0);
    CHECK(paths.out == "24\n"); // 6 vertices, each with 2*2 ordered 2-walks

    const CliResult json = run_cli({"count", "--graph", graph.path(), "--r", "3", "--format",
                                    "json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"count\": \"12\"") != std::string::npos);
}

TEST_CASE("cli generation is reproducible and validates its arguments") {
    const std::vector<std::string> args = {"gen",  "--family", "random", "--n", "14",
                                           "--p",  "1/3",      "--seed", "9"};
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    CHECK(run_cli({"gen", "--family", "moebius", "--n", "4"}).code == 2);
    CHECK(run_cli({"gen"}).code == 2);                          // missing required flag
    CHECK(run_cli({"nonsense"}).code == 2);                     // unknown subcommand
    CHECK(run_cli({"count", "--graph", "no_such_file", "--r", "3"}).code == 2);
}

TEST_CASE("cli rejects decimal rationals everywhere") {
    TempFile graph(kK8List);
    const CliResult r = run_cli({"check-density", "--graph", graph.path(), "--eps", "0.5",
                                 "--d", "1/2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("0.5") != std::string::npos);
}

TEST_CASE("cli density check reports certificates and refutations") {
    TempFile k8(kK8List);
    const CliResult ok = run_cli({"check-density", "--graph", k8.path(), "--eps", "1/2", "--d",
                                  "1/2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("status: certified-exhaustive\n") != std::string::npos);

    TempFile split(kTwoTrianglesList);
    const CliResult bad = run_cli({"check-density", "--graph", split.path(), "--eps", "1/2",
                                   "--d", "1/2"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("status: refuted\n") != std::string::npos);
    CHECK(bad.out.find("witness: ") != std::string::npos);

    // d = auto derives the largest certifiable value, so it always certifies.
    const CliResult auto_ok = run_cli({"check-density", "--graph", split.path(), "--eps", "1/2",
                                       "--d", "auto"});
    CHECK(auto_ok.code == 0);
    CHECK(auto_ok.out.find("d: 2/9\n") != std::string::npos);
}

TEST_CASE("cli weighted minimizer prints the exact optimum") {
    TempFile k4("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    const CliResult res = run_cli({"min-weighted", "--graph", k4.path(), "--eps", "5/8", "--d",
                                   "0"});
    CHECK(res.code == 0);
    CHECK(res.out.find("omega: 2\n") != std::string::npos);
    CHECK(res.out.find("ones: 0 1\n") != std::string::npos);
    CHECK(res.out.find("fractional_vertex: 2\n") != std::string::npos);
    CHECK(res.out.find("delta: 1/2\n") != std::string::npos);
    CHECK(res.out.find("f: 1 1 1/2 0\n") != std::string::npos);
}

TEST_CASE("cli weighted spot check runs only on certified graphs") {
    TempFile k8(kK8List);
    const CliResult ok = run_cli({"lemma-f", "--graph", k8.path(), "--eps", "1/2", "--d", "1/2",
                                  "--trials", "20", "--seed", "3"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("violations: 0\n") != std::string::npos);
    CHECK(ok.out.find("omega_ok: true\n") != std::string::npos);

    TempFile split(kTwoTrianglesList);
    const CliResult refused = run_cli({"lemma-f", "--graph", split.path(), "--eps", "1/2",
                                       "--d", "1/2", "--trials", "5", "--seed", "3"});
    CHECK(refused.code == 1);
    CHECK(refused.out.find("density_status: refuted\n") != std::string::npos);
}

TEST_CASE("cli verification and audit agree with the library values") {
    TempFile k8(kK8List);
    const CliResult verify = run_cli({"verify", "--graph", k8.path(), "--eps", "1/2", "--d",
                                      "1/2", "--r", "3"});
    CHECK(verify.code == 0);
    CHECK(verify.out.find("c_r: 336\n") != std::string::npos);
    CHECK(verify.out.find("bound: -192\n") != std::string::npos);
    CHECK(verify.out.find("holds: true\n") != std::string::npos);
    CHECK(verify.out.find("slack: 528\n") != std::string::npos);
    CHECK(verify.out.find("precondition_n_ok: true\n") != std::string::npos);

    const CliResult audit = run_cli({"audit-chain", "--graph", k8.path(), "--eps", "1/2", "--d",
                                     "1/2", "--r", "3"});
    CHECK(audit.code == 0);
    CHECK(audit.out.find("step1_name: heavy-rows-decomposition\n") != std::string::npos);
    CHECK(audit.out.find("step2_condition: density\n") != std::string::npos);
    CHECK(audit.out.find("all_steps_hold: true\n") != std::string::npos);

    // The 5-cycle fails the vertex-count step; the exit code says so.
    TempFile c5("5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    const CliResult broken = run_cli({"audit-chain", "--graph", c5.path(), "--eps", "2/5", "--d",
                                      "2/5", "--r", "3"});
    CHECK(broken.code == 1);
    CHECK(broken.out.find("step3_holds: false\n") != std::string::npos);
    CHECK(broken.out.find("all_steps_hold: false\n") != std::string::npos);
}

TEST_CASE("cli verify falls back to the heuristic status beyond the limit") {
    const CliResult gen = run_cli({"gen", "--family", "random", "--n", "30", "--p", "1/2",
                                   "--seed", "17"});
    REQUIRE(gen.code == 0);
    TempFile big(gen.out);
    const CliResult verify = run_cli({"verify", "--graph", big.path(), "--eps", "1/2", "--d",
                                      "1/10", "--r", "3", "--iters", "200", "--seed", "1"});
    CHECK(verify.code == 0);
    const bool heuristic =
        verify.out.find("density_status: unverified-heuristic\n") != std::string::npos;
    const bool refuted = verify.out.find("density_status: refuted\n") != std::string::npos;
    CHECK((heuristic || refuted));

    // The chain audit refuses outright: it has no heuristic fallback.
    const CliResult audit = run_cli({"audit-chain", "--graph", big.path(), "--eps", "1/2",
                                     "--d", "1/10", "--r", "3"});
    CHECK(audit.code == 3);
    CHECK(audit.err.find("resource limit") != std::string::npos);
}

TEST_CASE("cli scan emits the pinned CSV and respects --out") {
    const std::vector<std::string> args = {"scan", "--family", "complete", "--n", "6", "--r",
                                           "3",    "--eps",    "1/2"};
    const CliResult run1 = run_cli(args);
    const CliResult run2 = run_cli(args);
    CHECK(run1.code == 0);
    CHECK(run1.out == run2.out);
    CHECK(run1.out ==
          "family,params,n,m,eps,d,r,c_r,bound_num,bound_den,holds,slack_num,slack_den,"
          "density_status,precond_ok\n"
          "complete,n=6,6,15,1/2,2/3,3,120,-44,1,true,164,1,certified-exhaustive,false\n");

    const std::string out_path = "cli_test_scan_out.csv";
    std::vector<std::string> with_out = args;
    with_out.push_back("--out");
    with_out.push_back(out_path);
    const CliResult to_file = run_cli(with_out);
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream f(out_path, std::ios::binary);
    std::ostringstream content;
    content << f.rdbuf();
    CHECK(content.str() == run1.out);
    std::remove(out_path.c_str());

    const CliResult text = run_cli({"scan", "--family", "complete", "--n", "6", "--r", "3",
                                    "--eps", "1/2", "--format", "text"});
    CHECK(text.code == 0);
    CHECK(text.out.find("rows: 1\n") != std::string::npos);
    CHECK(text.out.find("holds: 1\n") != std::string::npos);

    // csv is a scan-only format.
    TempFile k8(kK8List);
    const CliResult bad_format = run_cli({"count", "--graph", k8.path(), "--r", "3", "--format",
                                          "csv"});
    CHECK(bad_format.code == 2);
}
