// Command-line front end: parse ideals and prime triples from JSON, run the
// analyses, and emit deterministic text or JSON reports.
//
// Exit codes: 0 = all checks passed, 1 = a verification or conjecture check
// failed, 2 = malformed input / unsupported size.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stanley/decomposition.hpp"
#include "stanley/homology.hpp"
#include "stanley/ideal.hpp"
#include "stanley/solver.hpp"
#include "stanley/triple.hpp"

using nlohmann::json;
using namespace stanley;

namespace {

/// A check that computed fine but came out false (conjecture, partition,
/// cross-check). Distinct from input errors, which exit with code 2.
struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string readInput(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    if (!arg.empty() && arg.front() == '{') return arg; // inline JSON
    std::ifstream file(arg);
    if (!file)
        throw std::invalid_argument("cannot open input file: " + arg);
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

json parseJson(const std::string& text) {
    return json::parse(text); // throws with byte position on malformed input
}

int getN(const json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("input needs an integer field \"n\"");
    return j["n"].get<int>();
}

VarSet parseVarList(const json& j, int n, const std::string& what) {
    if (!j.is_array())
        throw std::invalid_argument(what + " must be an array of variable indices");
    VarSet s;
    for (const json& e : j) {
        if (!e.is_number_integer())
            throw std::invalid_argument(what + " must contain integers");
        int i = e.get<int>();
        if (i < 1 || i > n)
            throw std::invalid_argument(what + ": index " + std::to_string(i) +
                                        " outside [1, " + std::to_string(n) + "]");
        s.insert(i);
    }
    return s;
}

std::vector<VarSet> parseVarLists(const json& j, int n, const std::string& what) {
    if (!j.is_array())
        throw std::invalid_argument(what + " must be an array");
    std::vector<VarSet> out;
    for (const json& e : j) out.push_back(parseVarList(e, n, what + " entry"));
    return out;
}

/// {"n":.., "ideal":[[..]..]} or {"n":.., "primes":[[..]..]} (intersected).
std::pair<PolyContext, SqfIdeal> parseIdeal(const json& j) {
    PolyContext ctx(getN(j));
    if (j.contains("ideal"))
        return {ctx, SqfIdeal::fromGenerators(
                         ctx, parseVarLists(j["ideal"], ctx.variableCount(), "ideal"))};
    if (j.contains("primes")) {
        std::vector<VarSet> primes = parseVarLists(j["primes"], ctx.variableCount(), "primes");
        for (const VarSet& p : primes)
            if (p.empty()) throw std::invalid_argument("primes must be nonzero");
        return {ctx, intersectPrimes(ctx, primes)};
    }
    throw std::invalid_argument("input needs \"ideal\" or \"primes\"");
}

struct TripleInput {
    PolyContext ctx;
    std::array<VarSet, 3> primes;
};

TripleInput parseTriple(const json& j) {
    PolyContext ctx(getN(j));
    if (!j.contains("primes"))
        throw std::invalid_argument("input needs \"primes\": three variable lists");
    std::vector<VarSet> primes = parseVarLists(j["primes"], ctx.variableCount(), "primes");
    if (primes.size() != 3)
        throw std::invalid_argument("expected exactly 3 primes, got " +
                                    std::to_string(primes.size()));
    return {ctx, {primes[0], primes[1], primes[2]}};
}

json varSetToJson(VarSet s) { return json(s.members()); }

json spacesToJson(const StanleyDecomposition& d) {
    json out = json::array();
    for (const StanleySpace& s : d.spaces())
        out.push_back({{"u", s.u.exponents()}, {"Z", s.z.members()}});
    return out;
}

std::string spaceToText(const StanleySpace& s) {
    std::string z;
    for (int i : s.z.members()) {
        if (!z.empty()) z += ",";
        z += "x" + std::to_string(i);
    }
    return s.u.toString() + " K[" + z + "]";
}

json boundsToJson(const Bounds& b) {
    json out = json::object();
    if (b.A) out["A"] = *b.A;
    if (b.B) out["B"] = *b.B;
    if (b.C) out["C"] = *b.C;
    if (b.D) out["D"] = *b.D;
    return out;
}

struct GlobalFlags {
    bool useExact = false;
    bool useOracle = false;
    bool jsonOutput = false;
    int cap = SolverOptions{}.cap;
    int jobs = 1;

    AnalysisOptions analysis() const {
        AnalysisOptions o;
        o.solver.cap = cap;
        return o;
    }
};

void emit(const GlobalFlags& flags, const json& report, const std::string& text) {
    if (flags.jsonOutput)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

// ---------------------------------------------------------------- analyze

int runAnalyze(const GlobalFlags& flags, const json& input) {
    TripleInput in = parseTriple(input);
    AnalysisOptions opts = flags.analysis();
    PrimeTriple t = normalizeTriple(in.ctx, in.primes[0], in.primes[1], in.primes[2], opts);

    CountProfile profile = countProfile(t);
    auto [p2, p3] = t.otherPrimes();
    Bounds byCounts = boundsFromCounts(profile, p2.size(), p3.size(), t.caseTwo());
    Bounds byHeights = boundsFromHeights(t);
    if (byCounts.A != byHeights.A || byCounts.B != byHeights.B || byCounts.C != byHeights.C)
        throw CheckFailure("bound cross-check failed: count and height formulas disagree");

    Bounds bounds = sdepthBounds(t, opts);
    int bound = sdepthLowerBound(t, opts);
    int depth = depthFormula(t);

    std::optional<int> oracleDepth;
    if (flags.useOracle) {
        oracleDepth = depthOracle(t.ideal());
        if (*oracleDepth != depth)
            throw CheckFailure("depth cross-check failed: formula " + std::to_string(depth) +
                               " vs oracle " + std::to_string(*oracleDepth));
    }

    ConjectureVerdict verdict = checkConjecture(t, flags.useExact, opts);
    SqfIdeal fullIdeal = t.ideal();

    json report;
    report["input"] = {{"n", in.ctx.variableCount()},
                       {"primes", {varSetToJson(in.primes[0]), varSetToJson(in.primes[1]),
                                   varSetToJson(in.primes[2])}}};
    report["ideal"] = json::array();
    for (const VarSet& g : fullIdeal.generators()) report["ideal"].push_back(varSetToJson(g));
    report["case"] = t.caseTwo() ? 2 : 1;
    report["pivot"] = t.pivot() + 1;
    report["spanned"] = varSetToJson(t.spanned());
    report["free"] = varSetToJson(t.freeVars());
    report["counts"] = {{"r", profile.r},   {"b1", profile.b1},   {"b2", profile.b2},
                        {"b3", profile.b3}, {"a23", profile.a23}, {"a32", profile.a32},
                        {"c", profile.c}};
    report["bounds"] = boundsToJson(bounds);
    report["depth"] = json{{"formula", depth}};
    if (oracleDepth) report["depth"]["oracle"] = *oracleDepth;
    report["sdepthBound"] = bound;
    if (verdict.exactSdepth) report["exactSdepth"] = *verdict.exactSdepth;
    report["conjecture"] = {{"pass", verdict.pass}};

    std::ostringstream text;
    text << "n = " << in.ctx.variableCount() << "\n";
    for (int i = 0; i < 3; ++i)
        text << "P" << (i + 1) << " = " << in.primes[static_cast<std::size_t>(i)].toString()
             << "\n";
    text << "I = " << fullIdeal.toString() << "\n";
    text << "case " << (t.caseTwo() ? 2 : 1) << ", pivot P" << (t.pivot() + 1)
         << ", free = " << t.freeVars().toString() << "\n";
    text << "counts: r=" << profile.r << " b1=" << profile.b1 << " b2=" << profile.b2
         << " b3=" << profile.b3 << " a23=" << profile.a23 << " a32=" << profile.a32
         << " c=" << profile.c << "\n";
    text << "bounds:";
    if (bounds.A) text << " A=" << *bounds.A;
    if (bounds.B) text << " B=" << *bounds.B;
    if (bounds.C) text << " C=" << *bounds.C;
    if (bounds.D) text << " D=" << *bounds.D;
    text << "\n";
    text << "depth(I) = " << depth;
    if (oracleDepth) text << " (oracle agrees)";
    text << "\n";
    text << "sdepth(I) >= " << bound << "\n";
    if (verdict.exactSdepth) text << "sdepth(I) = " << *verdict.exactSdepth << " (exact)\n";
    text << "conjecture: " << (verdict.pass ? "PASS" : "FAIL") << " (sdepth >= " << bound
         << (verdict.pass ? " >= " : " < ") << depth << " = depth)\n";

    emit(flags, report, text.str());
    return verdict.pass ? 0 : 1;
}

// -------------------------------------------------------------- decompose

int runDecompose(const GlobalFlags& flags, const json& input) {
    TripleInput in = parseTriple(input);
    AnalysisOptions opts = flags.analysis();
    PrimeTriple t = normalizeTriple(in.ctx, in.primes[0], in.primes[1], in.primes[2], opts);

    StanleyDecomposition d = decomposeTriple(t, opts);
    VerifyReport check = verifyDecomposition(d);
    int bound = sdepthLowerBound(t, opts);
    int sdepth = sdepthOf(d);
    bool pass = check.partition && sdepth >= bound;

    json report;
    report["input"] = {{"n", in.ctx.variableCount()},
                       {"primes", {varSetToJson(in.primes[0]), varSetToJson(in.primes[1]),
                                   varSetToJson(in.primes[2])}}};
    report["ideal"] = json::array();
    for (const VarSet& g : d.target().generators()) report["ideal"].push_back(varSetToJson(g));
    report["spaces"] = spacesToJson(d);
    report["sdepth"] = sdepth;
    report["sdepthBound"] = bound;
    report["verified"] = check.partition;

    std::ostringstream text;
    text << "I = " << d.target().toString() << "\n";
    text << "decomposition (" << d.spaces().size() << " spaces):\n";
    for (const StanleySpace& s : d.spaces()) text << "  " << spaceToText(s) << "\n";
    text << "sdepth(D) = " << sdepth << ", bound = " << bound << ", verification "
         << (check.partition ? "PASS" : "FAIL") << "\n";

    emit(flags, report, text.str());
    return pass ? 0 : 1;
}

// ----------------------------------------------------------------- verify

int runVerify(const GlobalFlags& flags, const json& input) {
    PolyContext ctx(getN(input));
    if (!input.contains("ideal") || !input.contains("spaces"))
        throw std::invalid_argument("verify input needs \"ideal\" and \"spaces\"");
    SqfIdeal ideal =
        SqfIdeal::fromGenerators(ctx, parseVarLists(input["ideal"], ctx.variableCount(), "ideal"));

    std::vector<StanleySpace> spaces;
    for (const json& js : input["spaces"]) {
        if (!js.contains("u") || !js.contains("Z"))
            throw std::invalid_argument("each space needs \"u\" and \"Z\"");
        std::vector<int> exps = js["u"].get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != ctx.variableCount())
            throw std::invalid_argument("space \"u\" must list n exponents");
        spaces.push_back(
            {Monomial(ctx, exps), parseVarList(js["Z"], ctx.variableCount(), "Z")});
    }
    StanleyDecomposition d(ideal, VarSet::full(ctx.variableCount()), std::move(spaces));
    VerifyReport check = verifyDecomposition(d);

    json report;
    report["partition"] = check.partition;
    std::ostringstream text;
    if (check.partition && d.spaces().empty()) {
        text << "partition: PASS (zero ideal, no spaces)\n";
    } else if (check.partition) {
        text << "partition: PASS (sdepth(D) = " << sdepthOf(d) << ")\n";
        report["sdepth"] = sdepthOf(d);
    } else {
        report["witness"] = check.witness->exponents();
        report["witnessCover"] = check.witnessCover;
        report["witnessInIdeal"] = check.witnessInTarget;
        text << "partition: FAIL at " << check.witness->toString() << " (covered "
             << check.witnessCover << " times, " << (check.witnessInTarget ? "in" : "not in")
             << " the ideal)\n";
    }
    emit(flags, report, text.str());
    return check.partition ? 0 : 1;
}

// ------------------------------------------------------------------ exact

int runExact(const GlobalFlags& flags, const json& input) {
    auto [ctx, ideal] = parseIdeal(input);
    ExactSdepthResult result = exactSdepth(ideal, flags.analysis().solver);

    json report;
    report["ideal"] = json::array();
    for (const VarSet& g : ideal.generators()) report["ideal"].push_back(varSetToJson(g));
    report["n"] = ctx.variableCount();
    report["sdepth"] = result.value;
    report["spaces"] = spacesToJson(result.witness);

    std::ostringstream text;
    text << "I = " << ideal.toString() << "\n";
    text << "sdepth(I) = " << result.value << "\n";
    text << "witness (" << result.witness.spaces().size() << " spaces):\n";
    for (const StanleySpace& s : result.witness.spaces()) text << "  " << spaceToText(s) << "\n";

    emit(flags, report, text.str());
    return 0;
}

// ------------------------------------------------------------------ depth

int runDepth(const GlobalFlags& flags, const json& input) {
    auto [ctx, ideal] = parseIdeal(input);
    int depth = depthOracle(ideal);

    json report;
    report["ideal"] = json::array();
    for (const VarSet& g : ideal.generators()) report["ideal"].push_back(varSetToJson(g));
    report["n"] = ctx.variableCount();
    report["depth"] = depth;
    report["depthQuotient"] = depth - 1;

    std::ostringstream text;
    text << "I = " << ideal.toString() << "\n";
    text << "depth(I) = " << depth << "   depth(S/I) = " << (depth - 1) << "\n";

    emit(flags, report, text.str());
    return 0;
}

// ------------------------------------------------------------------ chain

int runChain(const GlobalFlags& flags, const std::vector<int>& cutpoints) {
    AnalysisOptions opts = flags.analysis();
    ChainReport chain = analyzeChain(cutpoints, opts);
    bool pass = chain.bound >= chain.depth;

    std::optional<int> oracle;
    if (flags.useOracle) {
        oracle = depthOracle(chain.ideal);
        pass = pass && *oracle == chain.depth;
    }
    std::optional<int> exact;
    if (flags.useExact) {
        exact = exactSdepth(chain.ideal, opts.solver).value;
        pass = pass && *exact >= chain.bound;
    }
    VerifyReport check = verifyDecomposition(chain.decomposition);
    pass = pass && check.partition && sdepthOf(chain.decomposition) >= chain.bound;

    json report;
    report["cutpoints"] = cutpoints;
    report["blocks"] = chain.blockCount;
    report["depth"] = chain.depth;
    if (oracle) report["depthOracle"] = *oracle;
    report["sdepthBound"] = chain.bound;
    if (exact) report["exactSdepth"] = *exact;
    report["spaces"] = spacesToJson(chain.decomposition);
    report["verified"] = check.partition;

    std::ostringstream text;
    text << "I = " << chain.ideal.toString() << " (" << chain.blockCount << " blocks)\n";
    text << "depth(I) = " << chain.depth;
    if (oracle) text << " (oracle " << (*oracle == chain.depth ? "agrees" : "DISAGREES") << ")";
    text << "\n";
    text << "sdepth(I) >= " << chain.bound << "\n";
    if (exact) text << "sdepth(I) = " << *exact << " (exact)\n";
    text << "decomposition (" << chain.decomposition.spaces().size() << " spaces):\n";
    for (const StanleySpace& s : chain.decomposition.spaces())
        text << "  " << spaceToText(s) << "\n";
    text << (pass ? "PASS" : "FAIL") << "\n";

    emit(flags, report, text.str());
    return pass ? 0 : 1;
}

// -------------------------------------------------------------- enumerate

struct TripleChecks {
    std::string label;
    std::vector<std::string> failures;
};

TripleChecks checkOneTriple(PolyContext ctx, VarSet a, VarSet b, VarSet c,
                            const GlobalFlags& flags) try {
    AnalysisOptions opts = flags.analysis();
    TripleChecks out;
    out.label = a.toString() + " " + b.toString() + " " + c.toString();
    auto fail = [&out](const std::string& msg) { out.failures.push_back(msg); };

    PrimeTriple t = normalizeTriple(ctx, a, b, c, opts);
    CountProfile p = countProfile(t);
    auto [p2, p3] = t.otherPrimes();

    if (p.b1 != p.b2 + p.a32 || p.b1 != p.b3 + p.a23) fail("count identities");
    if ((p2.size() - p.b2) + (p3.size() - p.b3) - p.c != p.n - p.r) fail("count/height identity");

    Bounds byCounts = boundsFromCounts(p, p2.size(), p3.size(), t.caseTwo());
    Bounds byHeights = boundsFromHeights(t);
    if (byCounts.A != byHeights.A || byCounts.B != byHeights.B || byCounts.C != byHeights.C)
        fail("bounds formulas disagree");

    SqfIdeal spannedIdeal = t.ideal();
    DirectSumReport sum = verifyDirectSum(splitIdeal(t), spannedIdeal, t.spanned());
    if (!sum.ok) fail("direct sum");

    int depth = depthFormula(t);
    int bound = sdepthLowerBound(t, opts);
    if (bound < depth) fail("conjecture bound < depth");

    StanleyDecomposition d = decomposeTriple(t, opts);
    if (!verifyDecomposition(d).partition) fail("decomposition not a partition");
    if (sdepthOf(d) < bound) fail("decomposition below bound");

    if (flags.useOracle && depthOracle(spannedIdeal) != depth) fail("depth oracle mismatch");
    if (flags.useExact) {
        int exact = exactSdepth(spannedIdeal, t.spanned(), opts.solver).value +
                    t.freeVars().size();
        if (exact < bound) fail("exact sdepth below bound");
        if (exact < depth) fail("exact sdepth below depth");
    }
    return out;
} catch (const std::exception& e) {
    TripleChecks out;
    out.label = a.toString() + " " + b.toString() + " " + c.toString();
    out.failures.push_back(std::string("exception: ") + e.what());
    return out;
}

int runEnumerate(const GlobalFlags& flags, int n) {
    PolyContext ctx(n);
    if (n > flags.cap)
        throw std::invalid_argument("enumerate: n exceeds the solver cap; pass --cap (max " +
                                    std::to_string(kSolverCapLimit) + ")");

    std::vector<std::array<VarSet, 3>> triples;
    forEachValidTriple(n, [&triples](VarSet a, VarSet b, VarSet c) {
        triples.push_back({a, b, c});
    });

    std::vector<TripleChecks> results(triples.size());
    const int jobs = std::max(1, flags.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= triples.size()) break;
            results[i] = checkOneTriple(ctx, triples[i][0], triples[i][1], triples[i][2], flags);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    json failures = json::array();
    std::ostringstream text;
    std::size_t failed = 0;
    for (const TripleChecks& r : results)
        if (!r.failures.empty()) {
            ++failed;
            json f{{"triple", r.label}, {"checks", r.failures}};
            failures.push_back(f);
            text << "FAIL " << r.label << ":";
            for (const std::string& m : r.failures) text << " " << m << ";";
            text << "\n";
        }

    json report;
    report["n"] = n;
    report["triples"] = triples.size();
    report["failures"] = failures;
    report["pass"] = failed == 0;

    text << "n=" << n << ": " << triples.size() << " valid triples, " << failed
         << " failures\n";
    emit(flags, report, text.str());
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stanley decompositions of intersections of monomial primes: "
                 "closed-form depth and Stanley depth bounds with exhaustive oracles"};
    app.require_subcommand(1);

    GlobalFlags flags;
    std::string inputArg = "-";
    int enumerateN = 3;
    std::vector<int> cutpoints;

    auto addCommon = [&flags](CLI::App* cmd) {
        cmd->add_flag("--exact", flags.useExact, "also run the exact interval-partition solver");
        cmd->add_flag("--oracle", flags.useOracle, "also run the homological depth oracle");
        cmd->add_flag("--json", flags.jsonOutput, "machine-readable report on stdout");
        cmd->add_flag("--text", [&flags](std::int64_t) { flags.jsonOutput = false; },
                      "human-readable report (default)");
        cmd->add_option("--cap", flags.cap,
                        "solver ambient cap (default 6, hard limit " +
                            std::to_string(kSolverCapLimit) + ")");
    };

    CLI::App* analyze = app.add_subcommand(
        "analyze", "counts, bounds, depth and conjecture verdict for a prime triple");
    analyze->add_option("input", inputArg, "JSON file, inline JSON, or - for stdin");
    addCommon(analyze);

    CLI::App* decompose =
        app.add_subcommand("decompose", "build and verify the triple's Stanley decomposition");
    decompose->add_option("input", inputArg, "JSON file, inline JSON, or - for stdin");
    addCommon(decompose);

    CLI::App* verify =
        app.add_subcommand("verify", "check a user-supplied Stanley decomposition");
    verify->add_option("input", inputArg, "JSON file, inline JSON, or - for stdin");
    addCommon(verify);

    CLI::App* exact = app.add_subcommand("exact", "exact Stanley depth with a witness");
    exact->add_option("input", inputArg, "JSON file, inline JSON, or - for stdin");
    addCommon(exact);

    CLI::App* depth = app.add_subcommand("depth", "depth via the Stanley-Reisner oracle");
    depth->add_option("input", inputArg, "JSON file, inline JSON, or - for stdin");
    addCommon(depth);

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "sweep all valid triples for a given n, cross-checking");
    enumerate->add_option("--n", enumerateN, "number of variables")->required();
    enumerate->add_option("--jobs", flags.jobs, "parallel workers (default 1)");
    addCommon(enumerate);

    CLI::App* chain = app.add_subcommand(
        "chain", "primes on consecutive disjoint blocks given by cutpoints 0,r1,...,n");
    chain->add_option("--cutpoints", cutpoints, "comma-separated cutpoints, e.g. 0,2,4")
        ->required()
        ->delimiter(',');
    addCommon(chain);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // command-line misuse is an input error
    }

    const auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (flags.cap > SolverOptions{}.cap)
            std::cerr << "note: solver cap " << flags.cap
                      << " above the default; dense ideals may take a while\n";
        if (analyze->parsed())
            code = runAnalyze(flags, parseJson(readInput(inputArg)));
        else if (decompose->parsed())
            code = runDecompose(flags, parseJson(readInput(inputArg)));
        else if (verify->parsed())
            code = runVerify(flags, parseJson(readInput(inputArg)));
        else if (exact->parsed())
            code = runExact(flags, parseJson(readInput(inputArg)));
        else if (depth->parsed())
            code = runDepth(flags, parseJson(readInput(inputArg)));
        else if (enumerate->parsed())
            code = runEnumerate(flags, enumerateN);
        else if (chain->parsed())
            code = runChain(flags, cutpoints);
    } catch (const CheckFailure& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        code = 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    return code;
}
