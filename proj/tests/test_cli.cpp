#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

// OROPEAK_BIN is injected by the build: the full path of the CLI binary.

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string base = "/tmp/oropeak_cli_test_" + std::to_string(counter++);
    std::string out_path = base + ".out";
    std::string err_path = base + ".err";
    std::string cmd = std::string(OROPEAK_BIN) + " " + args + " >" + out_path +
                      " 2>" + err_path;
    int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("/tmp/oropeak_cli_" + name) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* kPathEdges = "a b 1\nb c 1\n";
const char* kPathHeights = "a 3\nb 1\nc 5\n";

} // namespace

TEST_CASE("the tree command prints the expected parent edge") {
    TempFile edges("p.edges", kPathEdges);
    TempFile heights("p.heights", kPathHeights);
    CliResult r = run_cli("tree --edges " + edges.path + " --heights " +
                          heights.path + " --out-dot -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"c\" -> \"a\"") != std::string::npos);
    CHECK(r.out.find("digraph lineparents") != std::string::npos);
}

TEST_CASE("the prominence table matches the worked example") {
    TempFile edges("p2.edges", kPathEdges);
    TempFile heights("p2.heights", kPathHeights);
    CliResult r = run_cli("prominence --edges " + edges.path + " --heights " +
                          heights.path);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "# peak\theight\tprominence\tkey_height\tkey_cols\tdominators\n"
                   "a\t3\t2\t1\t1\t1\n"
                   "c\t5\t5\t\t0\t0\n");
}

TEST_CASE("usage errors exit with code 1") {
    CliResult unknown = run_cli("prominence --no-such-flag");
    CHECK(unknown.exit_code == 1);
    CliResult missing = run_cli("prominence --edges /nonexistent.edges "
                                "--heights /nonexistent.heights");
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("error:") != std::string::npos);
    CliResult no_sub = run_cli("");
    CHECK(no_sub.exit_code == 1);
}

TEST_CASE("malformed data exits with code 1 and a line number") {
    TempFile edges("bad.edges", "a b 1\nc c 1\n");
    TempFile heights("bad.heights", "a 1\nb 2\nc 3\n");
    CliResult r = run_cli("prominence --edges " + edges.path + " --heights " +
                          heights.path);
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    CliResult r = run_cli("--help");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("prominence") != std::string::npos);
}

TEST_CASE("the verification suites pass and exit 0") {
    CliResult r = run_cli("verify --random 5 --seed 11");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS rng-connectivity-and-subset") != std::string::npos);
    CHECK(r.out.find("PASS prominence-oracle-equivalence") != std::string::npos);
    CHECK(r.out.find("PASS mountain-graph-guarantees") != std::string::npos);
    CHECK(r.out.find("PASS line-parent-tree-axioms") != std::string::npos);
}

TEST_CASE("disconnected inputs fall back to the largest component") {
    TempFile edges("disc.edges", "a b 1\nc d 1\nd e 1\n");
    TempFile heights("disc.heights", "a 1\nb 2\nc 3\nd 1\ne 5\n");
    CliResult r = run_cli("stats --edges " + edges.path + " --heights " +
                          heights.path);
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("warning") != std::string::npos);
    CHECK(r.out.find("graph,3,") != std::string::npos);

    CliResult all = run_cli("stats --all-components --edges " + edges.path +
                            " --heights " + heights.path);
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("component,") == 0);
    CHECK(all.out.find("\n0,") != std::string::npos);
    CHECK(all.out.find("\n1,") != std::string::npos);
}

TEST_CASE("stats and sweep outputs are identical across thread counts") {
    TempFile edges("t.edges", kPathEdges);
    TempFile heights("t.heights", kPathHeights);
    CliResult s1 = run_cli("stats --edges " + edges.path + " --heights " +
                           heights.path + " --threads 1");
    CliResult s8 = run_cli("stats --edges " + edges.path + " --heights " +
                           heights.path + " --threads 8");
    CHECK(s1.exit_code == 0);
    CHECK(s1.out == s8.out);

    CliResult w1 = run_cli("sweep --m1 20 --m2 60 --densities 0.1,0.3 --reps 3 "
                           "--seed 5 --threads 1");
    CliResult w8 = run_cli("sweep --m1 20 --m2 60 --densities 0.1,0.3 --reps 3 "
                           "--seed 5 --threads 8");
    CHECK(w1.exit_code == 0);
    CHECK(w1.out == w8.out);
    CHECK(w1.out.find("# schema: oropeak.sweep.v1") == 0);
}

TEST_CASE("the pruning report names its schema") {
    TempFile edges("r.edges", "a b 2\na c 1\nb c 1\n");
    CliResult r = run_cli("rng --edges " + edges.path + " --out - --report -");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("a\tc\t1") != std::string::npos);
    CHECK(r.out.find("oropeak.rng.v1") != std::string::npos);
}

TEST_CASE("distance summaries cover both target choices") {
    TempFile edges("m.edges", kPathEdges);
    TempFile heights("m.heights", kPathHeights);
    CliResult peaks = run_cli("mspd --edges " + edges.path + " --heights " +
                              heights.path + " --targets peaks");
    CHECK(peaks.exit_code == 0);
    CHECK(peaks.out.find("targets,count,mean,median,max\npeaks,1,1,1,1\n") !=
          std::string::npos);
    CliResult topn = run_cli("mspd --edges " + edges.path + " --heights " +
                             heights.path + " --targets topn");
    CHECK(topn.exit_code == 0);
    CHECK(topn.out.find("topn,1,") != std::string::npos);
}

TEST_CASE("baselines are reproducible for a fixed seed") {
    TempFile edges("b.edges", "a b 0.5\nb c 0.5\nc d 0.5\na d 0.5\nb d 0.5\n");
    TempFile heights("b.heights", "a 1\nb 2\nc 3\nd 4\n");
    std::string args = "baseline --edges " + edges.path + " --heights " +
                       heights.path + " --method es --reps 3 --seed 17 --out -";
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("oropeak.baseline.v1") != std::string::npos);
    CHECK(a.out.find("mean_nodes") != std::string::npos);

    CliResult rpn = run_cli("baseline --edges " + edges.path + " --heights " +
                            heights.path + " --method rpn --reps 2 --seed 3");
    CHECK(rpn.exit_code == 0);
    CHECK(rpn.out.find("\"pruned-graph\"") != std::string::npos);
}

TEST_CASE("bipartite input drives the full pipeline") {
    TempFile pairs("bip.pairs", "u x\nu y\nv y\nv z\nw z\n");
    CliResult r = run_cli("stats --bipartite " + pairs.path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("graph,3,") != std::string::npos);
    CliResult conflict = run_cli("stats --bipartite " + pairs.path +
                                 " --edges x --heights y");
    CHECK(conflict.exit_code == 1);
}
