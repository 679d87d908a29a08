// Exercises the installed CLI surface: subcommands, exit codes, file
// formats, and byte-determinism of sweep output. The binary path comes in
// through the NETFORGE_CLI_PATH compile definition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(NETFORGE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("nash-check: complete graph under cheap alphas") {
    auto r = run("nash-check --alphas 0.5,0.5,0.5 --profile complete");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"is_nash\": true") != std::string::npos);
    CHECK(r.stdout_text.find("\"command\": \"nash-check\"") != std::string::npos);
}

TEST_CASE("optimum: alpha=3 on 3 nodes") {
    auto r = run("optimum --alphas 3,3,3");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"optimal_cost\": \"14.000000000\"") != std::string::npos);
    CHECK(r.stdout_text.find("\"minimizer_count\": 3") != std::string::npos);
}

TEST_CASE("cost with inline profile JSON") {
    auto r = run("cost --alphas 0.5,0.5 --profile [[1],[]]");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"social_cost\": \"2.500000000\"") != std::string::npos);
}

TEST_CASE("best-response and dynamics round-trip") {
    auto br = run("best-response --alphas 0.5,1,1 --profile [[],[2],[]] --player 0");
    CHECK(br.exit_code == 0);
    CHECK(br.stdout_text.find("\"cost\": \"3.000000000\"") != std::string::npos);

    auto dyn = run("dynamics --alphas 2,2,2 --profile empty --order round-robin --max-rounds 20");
    CHECK(dyn.exit_code == 0);
    CHECK(dyn.stdout_text.find("\"converged\": true") != std::string::npos);
}

TEST_CASE("exit codes") {
    SUBCASE("invalid input: malformed alphas") {
        CHECK(run("nash-check --alphas 0.5,,1 --profile complete").exit_code == 2);
    }
    SUBCASE("invalid input: negative alpha") {
        CHECK(run("optimum --alphas -1,1").exit_code == 2);
    }
    SUBCASE("invalid input: unsorted alphas for claims") {
        CHECK(run("verify-claims --alphas 2,1").exit_code == 2);
    }
    SUBCASE("capacity exceeded") {
        CHECK(run("enumerate-nash --alphas 1,1,1,1,1,1").exit_code == 3);
    }
    SUBCASE("strict claim failure semantics") {
        // alphas where every applicable claim is a theorem: exit 0 even with --strict
        CHECK(run("verify-claims --alphas 3,3,3 --strict").exit_code == 0);
    }
}

TEST_CASE("verify-claims emits one verdict per claim") {
    auto r = run("verify-claims --alphas 0.5,0.5,3");
    CHECK(r.exit_code == 0);
    for (const char* id : {"NE-C1", "NE-C2", "NE-C3", "OPT-C1", "OPT-C2-BOUND",
                           "OPT-C3-BOUND", "OPT-C4", "OPT-C5"})
        CHECK(r.stdout_text.find(id) != std::string::npos);
}

TEST_CASE("sweep: CSV written to --out is byte-identical across runs") {
    std::string out1 = "/tmp/netforge_cli_sweep1.csv";
    std::string out2 = "/tmp/netforge_cli_sweep2.csv";
    std::string args = "sweep --n 3 --alpha-grid 0.5:3.0:0.5 --check claims --seed 42 --out ";
    CHECK(run(args + out1).exit_code == 0);
    CHECK(run(args + out2).exit_code == 0);
    std::string a = slurp(out1);
    std::string b = slurp(out2);
    CHECK(!a.empty());
    CHECK(a == b);
    CHECK(a.rfind("alpha_0,alpha_1,alpha_2,claim_id", 0) == 0);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("sweep sampling honors the seed") {
    std::string args =
        "sweep --n 2 --alpha-spec '0:2:0.1;0:2:0.1' --samples 5 --check ratios --seed 9 --out ";
    std::string out1 = "/tmp/netforge_cli_sample1.csv";
    std::string out2 = "/tmp/netforge_cli_sample2.csv";
    CHECK(run(args + out1).exit_code == 0);
    CHECK(run(args + out2).exit_code == 0);
    CHECK(slurp(out1) == slurp(out2));
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}
