// Exercises the installed command line binary end to end: subcommands,
// output contracts and the documented exit codes (0 ok, 1 violation,
// 2 usage/parse, 3 solver limit).

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(SUPERDOM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/superdom_cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve on families") {
    RunResult f4 = run_cli("solve --family friendship:4");
    REQUIRE(f4.status == 0);
    REQUIRE(contains(f4.out, "gamma_sp = 5"));

    RunResult d28 = run_cli("solve --family dutch:2,8");
    REQUIRE(d28.status == 0);
    REQUIRE(contains(d28.out, "gamma_sp = 8"));
    REQUIRE(contains(d28.out, "theorem1 bounds: 8 <= gamma_sp <= 14"));
    REQUIRE(contains(d28.out, "strategy = complement-descent"));
}

TEST_CASE("solve on files") {
    std::string p3 = write_temp("p3.el", "3\n0 1\n1 2\n");
    RunResult r = run_cli("solve " + p3);
    REQUIRE(r.status == 0);
    REQUIRE(contains(r.out, "gamma_sp = 2"));

    std::string dimacs = write_temp("p3.col", "c p3\np edge 3 2\ne 1 2\ne 2 3\n");
    RunResult d = run_cli("solve " + dimacs);
    REQUIRE(d.status == 0);
    REQUIRE(contains(d.out, "gamma_sp = 2"));
}

TEST_CASE("usage and parse failures exit 2") {
    REQUIRE(run_cli("solve /does/not/exist.el").status == 2);
    REQUIRE(run_cli("solve --family cycle:2").status == 2);
    REQUIRE(run_cli("solve --family nonsense:1").status == 2);
    REQUIRE(run_cli("solve").status == 2);  // no input source
    std::string p3 = write_temp("p3b.el", "3\n0 1\n1 2\n");
    REQUIRE(run_cli("solve " + p3 + " --family path:3").status == 2);  // two sources
    REQUIRE(run_cli("").status == 2);  // subcommand required
    std::string bad = write_temp("bad.el", "3\n0 0\n");
    RunResult b = run_cli("solve " + bad);
    REQUIRE(b.status == 2);
    REQUIRE(contains(b.out, "line 2"));
}

TEST_CASE("solver limit exits 3") {
    RunResult r = run_cli("solve --family dutch:5,9");  // order 41, one component
    REQUIRE(r.status == 3);
    REQUIRE(contains(r.out, "limit"));

    RunResult ok = run_cli("solve --family path:29 --limit 29");
    REQUIRE(ok.status == 0);
    REQUIRE(contains(ok.out, "gamma_sp = 15"));
}

TEST_CASE("family evaluation") {
    RunResult f = run_cli("family friendship:4");
    REQUIRE(f.status == 0);
    REQUIRE(contains(f.out, "order = 9, size = 12"));
    REQUIRE(contains(f.out, "closed form gamma_sp = 5 (published formula)"));
    REQUIRE(contains(f.out, "exact gamma_sp = 5"));

    RunResult d = run_cli("family dutch:2,8");
    REQUIRE(d.status == 0);
    REQUIRE(contains(d.out, "closed form gamma_sp = none"));
    REQUIRE(contains(d.out, "dutch upper bound = 9"));
    REQUIRE(contains(d.out, "exact gamma_sp = 8"));

    RunResult s = run_cli("family star:6");
    REQUIRE(s.status == 0);
    REQUIRE(contains(s.out, "closed form gamma_sp = 6 (solver-established extension)"));

    RunResult big = run_cli("family dutch:5,9");
    REQUIRE(big.status == 0);
    REQUIRE(contains(big.out, "skipped"));
}

TEST_CASE("modify checks one operand") {
    RunResult e = run_cli("modify --family cycle:14 --edge 0,1 --format records");
    REQUIRE(e.status == 0);
    REQUIRE(contains(e.out,
                     "theorem_id=edge_removal operand=edge:0-1 lhs=7 middle=7 rhs=9 "
                     "holds=true sharp_low=true sharp_high=false"));

    RunResult c = run_cli("modify --family path:12 --edge 5,6 --format records");
    REQUIRE(c.status == 0);
    REQUIRE(contains(c.out,
                     "theorem_id=edge_contraction operand=edge:5-6 lhs=5 middle=6 rhs=6 "
                     "holds=true sharp_low=false sharp_high=true"));

    RunResult v = run_cli("modify --family kbip:1,6 --vertex 3 --format records");
    REQUIRE(v.status == 0);
    REQUIRE(contains(v.out, "theorem_id=vertex_contraction_pendant operand=vertex:3 "
                            "lhs=5 middle=5 rhs=6 holds=true sharp_low=true sharp_high=false"));
    REQUIRE(contains(v.out, "theorem_id=corollary_beta"));

    REQUIRE(run_cli("modify --family cycle:5 --edge 0,2").status == 2);   // not an edge
    REQUIRE(run_cli("modify --family cycle:5 --vertex 9").status == 2);   // out of range
    REQUIRE(run_cli("modify --family cycle:5").status == 2);              // no operand
    REQUIRE(run_cli("modify --family cycle:5 --edge 0,1 --vertex 1").status == 2);
}

TEST_CASE("sweep") {
    RunResult p8 = run_cli("sweep --family path:8");
    REQUIRE(p8.status == 0);
    REQUIRE(contains(p8.out, "sweep total: 1 graph(s)"));

    RunResult f3 = run_cli("sweep --family friendship:3");
    REQUIRE(f3.status == 0);

    RunResult rnd = run_cli("sweep --random 8,0.5,42,5");
    REQUIRE(rnd.status == 0);
    REQUIRE(contains(rnd.out, "seed=42"));
    REQUIRE(contains(rnd.out, "seed=46"));
    REQUIRE(contains(rnd.out, "sweep total: 5 graph(s)"));

    std::string p4 = write_temp("p4.el", "4\n0 1\n1 2\n2 3\n");
    RunResult file = run_cli("sweep " + p4 + " --format records");
    REQUIRE(file.status == 0);
    REQUIRE(contains(file.out, "theorem_id=theorem1"));

    REQUIRE(run_cli("sweep --random bad").status == 2);
    REQUIRE(run_cli("sweep").status == 2);
}

TEST_CASE("sweep sharpness search") {
    RunResult lo = run_cli("sweep --family cycle:14 --sharp edge_removal");
    REQUIRE(lo.status == 0);
    REQUIRE(contains(lo.out, "theorem_id=edge_removal"));
    REQUIRE(contains(lo.out, "sharp_low=true"));
    REQUIRE_FALSE(contains(lo.out, "theorem_id=edge_contraction"));

    RunResult any = run_cli("sweep --random 8,0.4,3,10 --sharp any");
    REQUIRE(any.status == 0);
    REQUIRE(contains(any.out, "sweep total: 10 graph(s)"));

    REQUIRE(run_cli("sweep --family path:5 --sharp bogus_id").status == 2);
}

TEST_CASE("oracle") {
    RunResult cyc = run_cli("oracle --family cycle:12");
    REQUIRE(cyc.status == 0);
    REQUIRE(contains(cyc.out, "gamma_sp = 6"));

    RunResult rnd = run_cli("oracle --random 7,0.3,7,25");
    REQUIRE(rnd.status == 0);
    REQUIRE(contains(rnd.out, "25 graphs compared, zero mismatches"));

    RunResult ex = run_cli("oracle --exhaustive 5");
    REQUIRE(ex.status == 0);
    REQUIRE(contains(ex.out, "1024 graphs compared, zero mismatches"));

    REQUIRE(run_cli("oracle --random 12,0.3,1,5").status == 2);  // n > 10
    REQUIRE(run_cli("oracle --family path:20").status == 2);     // beyond naive cap
    REQUIRE(run_cli("oracle").status == 2);
}

TEST_CASE("gap") {
    RunResult g1 = run_cli("gap 1");
    REQUIRE(g1.status == 0);
    REQUIRE(contains(g1.out, "gamma_sp before = 4"));
    REQUIRE(contains(g1.out, "gamma_sp after hub contraction = 5"));
    REQUIRE(contains(g1.out, "verified by exact solver"));

    RunResult g2 = run_cli("gap 2");
    REQUIRE(contains(g2.out, "gamma_sp before = 5"));
    REQUIRE(contains(g2.out, "gamma_sp after hub contraction = 7"));

    RunResult g20 = run_cli("gap 20");
    REQUIRE(g20.status == 0);
    REQUIRE(contains(g20.out, "gamma_sp before = 23"));
    REQUIRE(contains(g20.out, "gamma_sp after hub contraction = 43"));
    REQUIRE(contains(g20.out, "construction only"));

    REQUIRE(run_cli("gap 0").status == 2);
}

TEST_CASE("identical invocations emit identical bytes") {
    RunResult a = run_cli("solve --family dutch:2,8");
    RunResult b = run_cli("solve --family dutch:2,8");
    REQUIRE(a.out == b.out);

    RunResult w1 = run_cli("solve --family dutch:2,8 --workers 1");
    RunResult w4 = run_cli("solve --family dutch:2,8 --workers 4");
    REQUIRE(w1.out == w4.out);

    RunResult s1 = run_cli("sweep --random 9,0.5,7,3 --format records");
    RunResult s2 = run_cli("sweep --random 9,0.5,7,3 --format records");
    REQUIRE(s1.out == s2.out);
}
