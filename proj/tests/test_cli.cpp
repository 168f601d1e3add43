#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exitCode = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(STANLEY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exitCode = WEXITSTATUS(status);
    return r;
}

const char* kWorkedTriple = R"({"n":4,"primes":[[1,2],[2,3,4],[1,3]]})";

} // namespace

TEST_CASE("analyze reproduces the worked example") {
    RunResult r = run(std::string("analyze '") + kWorkedTriple + "' --json --oracle --exact");
    CHECK(r.exitCode == 0);
    json report = json::parse(r.out);
    CHECK(report["counts"] == json({{"r", 2},
                                    {"b1", 2},
                                    {"b2", 1},
                                    {"b3", 1},
                                    {"a23", 1},
                                    {"a32", 1},
                                    {"c", 1}}));
    CHECK(report["bounds"]["A"] == 2);
    CHECK(report["bounds"]["B"] == 3);
    CHECK(report["bounds"]["D"] == 4);
    CHECK(!report["bounds"].contains("C"));
    CHECK(report["depth"]["formula"] == 2);
    CHECK(report["depth"]["oracle"] == 2);
    CHECK(report["sdepthBound"] == 2);
    CHECK(report["exactSdepth"] == 3);
    CHECK(report["conjecture"]["pass"] == true);
    CHECK(report["case"] == 2);
    CHECK(report["pivot"] == 1);
}

TEST_CASE("reports are byte-identical across runs") {
    std::string args = std::string("analyze '") + kWorkedTriple + "' --json --exact";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    RunResult t1 = run(std::string("decompose '") + kWorkedTriple + "'");
    RunResult t2 = run(std::string("decompose '") + kWorkedTriple + "'");
    CHECK(t1.out == t2.out);
}

TEST_CASE("decompose emits a verified decomposition") {
    RunResult r = run(std::string("decompose '") + kWorkedTriple + "' --json");
    CHECK(r.exitCode == 0);
    json report = json::parse(r.out);
    CHECK(report["verified"] == true);
    CHECK(report["sdepth"] == 2);
    CHECK(report["sdepthBound"] == 2);
    CHECK(report["spaces"].size() == 4);
}

TEST_CASE("verify accepts a correct decomposition and rejects an overlap") {
    const char* good = R"({"n":2,"ideal":[[1]],"spaces":[{"u":[1,0],"Z":[1,2]}]})";
    RunResult r = run(std::string("verify '") + good + "' --json");
    CHECK(r.exitCode == 0);
    CHECK(json::parse(r.out)["partition"] == true);

    const char* overlap =
        R"({"n":2,"ideal":[[1]],"spaces":[{"u":[1,0],"Z":[1]},{"u":[1,0],"Z":[1,2]}]})";
    r = run(std::string("verify '") + overlap + "' --json");
    CHECK(r.exitCode == 1);
    json report = json::parse(r.out);
    CHECK(report["partition"] == false);
    CHECK(report["witness"] == json::array({1, 0}));
    CHECK(report["witnessCover"] == 2);
}

TEST_CASE("exact solves the strict-inequality case") {
    RunResult r = run(R"(exact '{"n":4,"primes":[[1,2],[3,4]]}' --json)");
    CHECK(r.exitCode == 0);
    json report = json::parse(r.out);
    CHECK(report["sdepth"] == 3);
    CHECK(report["spaces"].size() == 5);
}

TEST_CASE("depth command") {
    RunResult r = run(R"(depth '{"n":3,"ideal":[[1],[2],[3]]}' --json)");
    CHECK(r.exitCode == 0);
    json report = json::parse(r.out);
    CHECK(report["depth"] == 1);
    CHECK(report["depthQuotient"] == 0);
}

TEST_CASE("chain command") {
    RunResult r = run("chain --cutpoints 0,2,4 --exact --oracle --json");
    CHECK(r.exitCode == 0);
    json report = json::parse(r.out);
    CHECK(report["depth"] == 2);
    CHECK(report["depthOracle"] == 2);
    CHECK(report["sdepthBound"] == 2);
    CHECK(report["exactSdepth"] == 3);
    CHECK(report["verified"] == true);
}

TEST_CASE("enumerate sweeps cleanly") {
    RunResult r = run("enumerate --n 3 --exact --oracle --json");
    CHECK(r.exitCode == 0);
    json report = json::parse(r.out);
    CHECK(report["triples"] == 2);
    CHECK(report["failures"].empty());
    CHECK(report["pass"] == true);

    RunResult parallel = run("enumerate --n 4 --exact --oracle --jobs 2 --json");
    CHECK(parallel.exitCode == 0);
    CHECK(json::parse(parallel.out)["triples"] == 64);

    RunResult serial = run("enumerate --n 4 --exact --oracle --jobs 1 --json");
    CHECK(serial.out == parallel.out); // worker count never shows in the report
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run("analyze '{broken'").exitCode == 2);
    CHECK(run(R"(analyze '{"n":4,"primes":[[1,2],[3,4]]}')").exitCode == 2); // only two primes
    CHECK(run(R"(analyze '{"n":4,"primes":[[],[1],[2]]}')").exitCode == 2);  // zero prime
    CHECK(run(R"(analyze '{"n":2,"primes":[[1],[1,3],[2]]}')").exitCode == 2); // index beyond n
    CHECK(run(R"(analyze '{"n":4,"primes":[[1],[1,2],[3]]}')").exitCode == 2); // inclusion
    CHECK(run(R"(exact '{"n":8,"ideal":[[1,8]]}')").exitCode == 2);            // above the cap
    CHECK(run("analyze /no/such/file.json").exitCode == 2);
    CHECK(run("frobnicate").exitCode == 2);       // unknown subcommand
    CHECK(run("chain").exitCode == 2);            // missing required flag
    CHECK(run("--help").exitCode == 0);
}

TEST_CASE("analyze text report is pinned") {
    RunResult r = run(std::string("analyze '") + kWorkedTriple + "'");
    CHECK(r.exitCode == 0);
    CHECK(r.out ==
          "n = 4\n"
          "P1 = {1,2}\n"
          "P2 = {2,3,4}\n"
          "P3 = {1,3}\n"
          "I = (x1x2, x1x3, x1x4, x2x3)\n"
          "case 2, pivot P1, free = {}\n"
          "counts: r=2 b1=2 b2=1 b3=1 a23=1 a32=1 c=1\n"
          "bounds: A=2 B=3 D=4\n"
          "depth(I) = 2\n"
          "sdepth(I) >= 2\n"
          "conjecture: PASS (sdepth >= 2 >= 2 = depth)\n");
}

TEST_CASE("file and stdin inputs") {
    std::string path = std::string(STANLEY_TEST_TMPDIR) + "/triple.json";
    {
        std::ofstream f(path);
        f << kWorkedTriple;
    }
    RunResult fromFile = run("analyze " + path + " --json");
    CHECK(fromFile.exitCode == 0);

    RunResult fromStdin = run(std::string("analyze - --json < ") + path);
    CHECK(fromStdin.exitCode == 0);
    CHECK(fromStdin.out == fromFile.out);
}

TEST_CASE("raising the cap unlocks n=7 and stays exact") {
    RunResult r = run(R"(exact '{"n":7,"ideal":[[1,2,3,4,5,6,7]]}' --cap 7 --json)");
    CHECK(r.exitCode == 0);
    CHECK(json::parse(r.out)["sdepth"] == 7); // principal ideal keeps everything free
}
