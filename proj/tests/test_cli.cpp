// end-to-end checks of the installed command line binary. The ctest entry
// supplies GHZDIST_CLI (binary path) and GHZDIST_GOLDEN_DIR (frozen replay
// transcripts).

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string env_or_fail(const char* name) {
    const char* v = std::getenv(name);
    REQUIRE_MESSAGE(v != nullptr, "set " << name << " to run the cli suite");
    return v;
}

struct run_result {
    int exit_code = -1;
    std::string out;
};

run_result run(const std::string& cmd) {
    run_result r;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE_MESSAGE(f.good(), "cannot open " << path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("replay transcripts match the frozen walkthroughs byte for byte") {
    std::string bin = env_or_fail("GHZDIST_CLI");
    std::string golden = env_or_fail("GHZDIST_GOLDEN_DIR");
    for (const char* table : {"table1", "table2"}) {
        auto r = run(bin + " replay " + table);
        CHECK(r.exit_code == 0);
        CHECK(r.out == slurp(golden + "/" + table + ".txt"));
    }
}

TEST_CASE("logical pauli printing is exact") {
    std::string bin = env_or_fail("GHZDIST_CLI");
    auto fq = run(bin + " logical-paulis --code five_qubit");
    CHECK(fq.exit_code == 0);
    CHECK(fq.out == "zbar +ZZZZZ\nxbar -YIZZI\n");
    auto yy = run(bin + " logical-paulis --code yy3");
    CHECK(yy.exit_code == 0);
    CHECK(yy.out == "zbar +ZZZ\nxbar -YII\n");
}

TEST_CASE("distill csv has the pinned schema and a clean zero-noise row") {
    std::string bin = env_or_fail("GHZDIST_CLI");
    auto r = run(bin + " distill --code five_qubit --p 0 --trials 200 --seed 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "protocol,code,placement,topology,p,trials,failures,p_f,stderr,fidelity,seed\n"
          "ghz,five_qubit,none,chain,0,200,0,0,0,1,5\n");
}

TEST_CASE("distill csv is reproducible and thread count independent") {
    std::string bin = env_or_fail("GHZDIST_CLI");
    std::string flags = " distill --code five_qubit --p 0.02,0.05 --trials 400 --seed 11"
                        " --placement bob";
    auto a = run(bin + flags);
    auto b = run(bin + flags);
    auto one = run("GHZDIST_THREADS=1 " + bin + flags);
    auto five = run("GHZDIST_THREADS=5 " + bin + flags);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == one.out);
    CHECK(a.out == five.out);
    CHECK(a.out.find("\nghz,five_qubit,bob,chain,0.02,400,") != std::string::npos);
}

TEST_CASE("log spaced sweeps keep their endpoints") {
    std::string bin = env_or_fail("GHZDIST_CLI");
    auto r = run(bin + " distill --p 0.01:0.05:3 --trials 1 --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(",0.01,1,") != std::string::npos);
    CHECK(r.out.find(",0.05,1,") != std::string::npos);
    CHECK(r.out.find(",0.022360679774997897,1,") != std::string::npos);
}

TEST_CASE("baseline rows carry the baseline protocol column") {
    std::string bin = env_or_fail("GHZDIST_CLI");
    auto r = run(bin + " baseline --code five_qubit --p 0 --trials 100 --seed 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "protocol,code,placement,topology,p,trials,failures,p_f,stderr,fidelity,seed\n"
          "baseline,five_qubit,none,chain,0,100,0,0,0,1,2\n");
}

TEST_CASE("usage problems exit with code 2") {
    std::string bin = env_or_fail("GHZDIST_CLI");
    CHECK(run(bin + " distill --protocol bell --topology split --p 0.01 --trials 1").exit_code == 2);
    CHECK(run(bin + " logical-paulis --code /no/such/file").exit_code == 2);
    CHECK(run(bin + " distill --p 1:2 --trials 1").exit_code == 2);
    CHECK(run(bin + " distill --p 0.1:0.2:0 --trials 1").exit_code == 2);
    CHECK(run(bin + " distill --p 0.01 --no-such-flag").exit_code == 2);
    CHECK(run(bin + " no-such-command").exit_code == 2);
}

TEST_CASE("verify reports every check and exits clean") {
    std::string bin = env_or_fail("GHZDIST_CLI");
    auto r = run(bin + " verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[FAIL]") == std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    int passes = 0;
    for (std::size_t at = r.out.find("[PASS]"); at != std::string::npos;
         at = r.out.find("[PASS]", at + 1))
        ++passes;
    CHECK(passes == 12);
}

TEST_CASE("output file writing matches stdout") {
    std::string bin = env_or_fail("GHZDIST_CLI");
    std::string path = "/tmp/ghzdist_cli_test.csv";
    std::remove(path.c_str());
    auto direct = run(bin + " distill --p 0.03 --trials 50 --seed 9");
    auto filed = run(bin + " distill --p 0.03 --trials 50 --seed 9 --out " + path);
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(path) == direct.out);
    std::remove(path.c_str());
}

}  // TEST_SUITE
