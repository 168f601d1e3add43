// Acceptance suite: every criterion prints one PASS/FAIL line with its
// runtime; the process exits with the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "stanley/decomposition.hpp"
#include "stanley/homology.hpp"
#include "stanley/ideal.hpp"
#include "stanley/solver.hpp"
#include "stanley/triple.hpp"

using namespace stanley;
using namespace stanley::test;

namespace {

struct Criterion {
    int number;
    std::string name;
    double budgetSeconds;
    std::function<bool(std::string&)> check;
};

bool expect(bool cond, const std::string& what, std::string& detail) {
    if (!cond && detail.empty()) detail = what;
    return cond;
}

// 1. The worked four-variable example: counts, bounds, depth, bound, and the
//    assembled decomposition with piece sdepths {4, 3, 2}; all verified.
bool criterion1(std::string& detail) {
    PolyContext ctx(4);
    PrimeTriple t = normalizeTriple(ctx, vs({1, 2}), vs({2, 3, 4}), vs({1, 3}));
    CountProfile p = countProfile(t);
    bool ok = true;
    ok &= expect(p.b2 == 1 && p.b3 == 1 && p.b1 == 2 && p.a23 == 1 && p.a32 == 1 && p.c == 1,
                 "counts", detail);

    auto [p2, p3] = t.otherPrimes();
    Bounds b = boundsFromCounts(p, p2.size(), p3.size(), t.caseTwo());
    ok &= expect(b.A == 2 && b.B == 3, "A/B values", detail);
    ok &= expect(depthFormula(t) == 2, "depth formula", detail);
    ok &= expect(sdepthLowerBound(t) == 2, "sdepth bound", detail);

    // the three nonzero pieces: (x1x2)K[x1..x4], (x2x3)K[x2,x3,x4],
    // and a two-space expansion of (x1x3, x1x4)K[x1,x3,x4]
    StanleyDecomposition d = decomposeTriple(t);
    ok &= expect(d.spaces().size() == 4, "4 spaces", detail);
    auto hasSpace = [&d, &ctx](std::initializer_list<int> u, std::initializer_list<int> z) {
        Monomial mu = Monomial::fromSupport(ctx, VarSet::of(u));
        for (const StanleySpace& s : d.spaces())
            if (s.u == mu && s.z == VarSet::of(z)) return true;
        return false;
    };
    ok &= expect(hasSpace({1, 2}, {1, 2, 3, 4}), "piece (x1x2)K[x1..x4]", detail);
    ok &= expect(hasSpace({2, 3}, {2, 3, 4}), "piece (x2x3)K[x2,x3,x4]", detail);
    ok &= expect(hasSpace({1, 3}, {1, 3, 4}) && hasSpace({1, 4}, {1, 4}),
                 "two-space expansion of (x1x3,x1x4)", detail);

    // per-piece sdepths {4, 3, 2}
    IdealSplit split = splitIdeal(t);
    StanleyDecomposition d1 =
        extendFree(exactSdepth(split.i1->ideal, vs({1, 2})).witness, vs({3, 4}));
    ok &= expect(sdepthOf(d1) == 4, "piece sdepth 4", detail);
    StanleyDecomposition d2 = exactSdepth(split.i2->ideal, split.i2->ambient).witness;
    ok &= expect(sdepthOf(d2) == 3, "piece sdepth 3", detail);
    StanleyDecomposition d3 = exactSdepth(split.i3->ideal, split.i3->ambient).witness;
    ok &= expect(sdepthOf(d3) == 2, "piece sdepth 2", detail);

    ok &= expect(verifyDecomposition(d).partition, "verification", detail);
    return ok;
}

// 2. (x1,x2) ∩ (x3,x4): exact sdepth 3, strictly above the product bound 2.
bool criterion2(std::string& detail) {
    PolyContext ctx(4);
    SqfIdeal I = SqfIdeal::prime(ctx, vs({1, 2})).intersectWith(SqfIdeal::prime(ctx, vs({3, 4})));
    bool ok = expect(exactSdepth(I).value == 3, "exact sdepth 3", detail);

    StanleyDecomposition left = exactSdepth(SqfIdeal::prime(ctx, vs({1, 2})), vs({1, 2})).witness;
    StanleyDecomposition right = exactSdepth(SqfIdeal::prime(ctx, vs({3, 4})), vs({3, 4})).witness;
    ok &= expect(sdepthOf(product(left, right)) == 2, "product bound 2", detail);
    ok &= expect(twoPrimeBound(2, 2, 4) == 2, "closed-form bound 2", detail);
    return ok;
}

// 3. n = 5: every split position gives exact sdepth 3 = ceil((n+1)/2).
bool criterion3(std::string& detail) {
    PolyContext ctx(5);
    bool ok = true;
    for (int r1 = 1; r1 <= 4; ++r1) {
        SqfIdeal I = SqfIdeal::prime(ctx, VarSet::range(1, r1))
                         .intersectWith(SqfIdeal::prime(ctx, VarSet::range(r1 + 1, 5)));
        ok &= expect(exactSdepth(I).value == 3, "split at " + std::to_string(r1), detail);
    }
    return ok;
}

// 4. Count-based and height-based bound formulas agree on every valid
//    triple with n <= 5.
bool criterion4(std::string& detail) {
    bool ok = true;
    for (int n = 3; n <= 5; ++n) {
        PolyContext ctx(n);
        forEachValidTriple(n, [&](VarSet a, VarSet b, VarSet c) {
            PrimeTriple t = normalizeTriple(ctx, a, b, c);
            auto [p2, p3] = t.otherPrimes();
            Bounds fc = boundsFromCounts(countProfile(t), p2.size(), p3.size(), t.caseTwo());
            Bounds fh = boundsFromHeights(t);
            ok &= expect(fc.A == fh.A && fc.B == fh.B && fc.C == fh.C,
                         a.toString() + b.toString() + c.toString(), detail);
        });
    }
    return ok;
}

// 5. The closed-form depth equals the homological oracle on every valid
//    triple with n <= 5.
bool criterion5(std::string& detail) {
    bool ok = true;
    for (int n = 3; n <= 5; ++n) {
        PolyContext ctx(n);
        forEachValidTriple(n, [&](VarSet a, VarSet b, VarSet c) {
            PrimeTriple t = normalizeTriple(ctx, a, b, c);
            ok &= expect(depthFormula(t) == depthOracle(t.ideal()),
                         a.toString() + b.toString() + c.toString(), detail);
        });
    }
    return ok;
}

// 6. exact sdepth >= bound >= depth on every valid triple with n <= 5
//    (n <= 4 required; n = 5 included since it is cheap).
bool criterion6(std::string& detail) {
    bool ok = true;
    for (int n = 3; n <= 5; ++n) {
        PolyContext ctx(n);
        forEachValidTriple(n, [&](VarSet a, VarSet b, VarSet c) {
            PrimeTriple t = normalizeTriple(ctx, a, b, c);
            ConjectureVerdict v = checkConjecture(t, true);
            ok &= expect(v.pass && *v.exactSdepth >= v.bound && v.bound >= v.depth,
                         a.toString() + b.toString() + c.toString(), detail);
        });
    }
    return ok;
}

// 7. Every cutpoint chain with n <= 6: oracle depth = s and
//    exact sdepth >= sum of ceil(block/2) >= s.
bool criterion7(std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
        for (std::uint32_t interior = 0; interior < (std::uint32_t{1} << (n - 1)); ++interior) {
            std::vector<int> cutpoints{0};
            for (int cut = 1; cut < n; ++cut)
                if ((interior >> (cut - 1)) & 1u) cutpoints.push_back(cut);
            cutpoints.push_back(n);

            ChainReport r = analyzeChain(cutpoints);
            std::string label = "chain n=" + std::to_string(n) + " s=" +
                                std::to_string(r.blockCount);
            ok &= expect(depthOracle(r.ideal) == r.blockCount, label + " oracle", detail);
            ok &= expect(r.bound >= r.blockCount, label + " bound >= s", detail);
            ok &= expect(exactSdepth(r.ideal).value >= r.bound, label + " exact >= bound", detail);
        }
    }
    return ok;
}

// 8. Depth additivity across disjoint blocks, exhaustively for block
//    sizes up to 3.
bool criterion8(std::string& detail) {
    bool ok = true;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            PolyContext ctx(a + b);
            VarSet blockA = VarSet::range(1, a);
            VarSet blockB = VarSet::range(a + 1, a + b);
            for (const SqfIdeal& I : allNonzeroIdeals(ctx, blockA))
                for (const SqfIdeal& J : allNonzeroIdeals(ctx, blockB)) {
                    int sum = depthOracle(I, blockA) + depthOracle(J, blockB);
                    ok &= expect(depthOracle(I.intersectWith(J)) == sum,
                                 I.toString() + " + " + J.toString(), detail);
                }
        }
    return ok;
}

// 9. Oracle self-consistency: maximal-ideal sdepths, witnesses verifying,
//    and cap-2 verification verdicts agreeing with the cap-3 recheck.
bool criterion9(std::string& detail) {
    bool ok = true;
    for (int m = 1; m <= 6; ++m) {
        PolyContext ctx(m);
        ExactSdepthResult r = exactSdepth(SqfIdeal::prime(ctx, VarSet::full(m)));
        ok &= expect(r.value == (m + 1) / 2, "maximal ideal m=" + std::to_string(m), detail);
        ok &= expect(verifyDecomposition(r.witness).partition,
                     "witness verification m=" + std::to_string(m), detail);
    }

    // cap-2 verdict vs cap-3 verdict across solver witnesses and tampered
    // variants, for every ideal on 3 variables and a spread of n = 4, 5 ones
    std::vector<StanleyDecomposition> pool;
    PolyContext c3(3);
    for (const SqfIdeal& I : allNonzeroIdeals(c3, VarSet::full(3)))
        pool.push_back(exactSdepth(I).witness);
    PolyContext c5(5);
    for (const SqfIdeal& I : std::vector<SqfIdeal>{
             SqfIdeal::prime(c5, vs({1, 2})).intersectWith(SqfIdeal::prime(c5, vs({3, 4, 5}))),
             SqfIdeal::prime(c5, VarSet::full(5)),
             ideal(c5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}),
         })
        pool.push_back(exactSdepth(I).witness);

    for (const StanleyDecomposition& d : pool) {
        ok &= expect(verifyDecomposition(d, 2).partition == verifyDecomposition(d, 3).partition,
                     "cap agreement", detail);
        ok &= expect(verifyDecomposition(d, 2).partition, "witness verifies", detail);
        std::vector<StanleySpace> broken(d.spaces());
        broken.pop_back();
        StanleyDecomposition bad(d.target(), d.ambient(), std::move(broken));
        ok &= expect(verifyDecomposition(bad, 2).partition ==
                         verifyDecomposition(bad, 3).partition,
                     "cap agreement on tampered decomposition", detail);
    }
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "worked example: counts, bounds, depth, decomposition", 1.0, criterion1},
        {2, "strictness case: exact 3 vs product bound 2", 1.0, criterion2},
        {3, "two-prime splits of n=5 all have exact sdepth 3", 10.0, criterion3},
        {4, "count and height bound formulas agree, n <= 5", 300.0, criterion4},
        {5, "depth formula equals homological oracle, n <= 5", 300.0, criterion5},
        {6, "exact >= bound >= depth on all triples, n <= 5", 300.0, criterion6},
        {7, "cutpoint chains n <= 6: depth s, exact >= bound >= s", 300.0, criterion7},
        {8, "depth additivity across disjoint blocks <= 3", 300.0, criterion8},
        {9, "solver and verifier self-consistency", 300.0, criterion9},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start).count();
        if (seconds > c.budgetSeconds) {
            ok = false;
            if (detail.empty()) detail = "over time budget";
        }
        if (!ok) ++failures;
        std::printf("criterion %d: %s (%.2fs) — %s%s%s\n", c.number, ok ? "PASS" : "FAIL",
                    seconds, c.name.c_str(), detail.empty() ? "" : " — ", detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
