#include "stanley/triple.hpp"

#include <algorithm>
#include <stdexcept>

namespace stanley {

namespace {

/// The sets the split construction works with, all in user coordinates.
struct PivotView {
    VarSet r;      // pivot prime's variables (the "x_1..x_r" block)
    VarSet p2, p3; // non-pivot primes, original index order
    VarSet t;      // spanned \ r (the "x_{r+1}..x_n" block)
    VarSet spanned;
    int n = 0; // spanned count
};

PivotView makeView(const std::array<VarSet, 3>& primes, int pivot, VarSet spanned) {
    PivotView v;
    v.r = primes[static_cast<std::size_t>(pivot)];
    std::vector<VarSet> rest;
    for (int i = 0; i < 3; ++i)
        if (i != pivot) rest.push_back(primes[static_cast<std::size_t>(i)]);
    v.p2 = rest[0];
    v.p3 = rest[1];
    v.spanned = spanned;
    v.t = spanned.minus(v.r);
    v.n = spanned.size();
    return v;
}

PivotView makeView(const PrimeTriple& t) {
    return makeView(t.primes(), t.pivot(), t.spanned());
}

CountProfile profileFromView(const PivotView& v) {
    CountProfile p;
    p.r = v.r.size();
    p.b2 = v.r.intersectWith(v.p2).size();
    p.b3 = v.r.intersectWith(v.p3).size();
    p.b1 = v.r.intersectWith(v.p2.unionWith(v.p3)).size();
    p.a23 = v.r.intersectWith(v.p2.minus(v.p3)).size();
    p.a32 = v.r.intersectWith(v.p3.minus(v.p2)).size();
    p.c = v.p2.intersectWith(v.p3).minus(v.r).size();
    p.n = v.n;
    return p;
}

Bounds boundsForView(const PivotView& v, bool caseTwo) {
    return boundsFromCounts(profileFromView(v), v.p2.size(), v.p3.size(), caseTwo);
}

IdealSplit splitFromView(const PivotView& v, PolyContext ctx, bool caseTwo) {
    SqfIdeal ideal = SqfIdeal::prime(ctx, v.r)
                         .intersectWith(SqfIdeal::prime(ctx, v.p2))
                         .intersectWith(SqfIdeal::prime(ctx, v.p3));
    IdealSplit split;
    split.i1 = SplitPiece{ideal.restrictTo(v.r), v.spanned};

    VarSet s2 = v.r.minus(v.p3); // the "S prime" block
    split.i2 = SplitPiece{SqfIdeal::prime(ctx, v.p2.intersectWith(s2))
                              .intersectWith(SqfIdeal::prime(ctx, v.p3.intersectWith(v.t))),
                          s2.unionWith(v.t)};

    VarSet s3 = v.r.minus(v.p2); // the "S double-prime" block
    split.i3 = SplitPiece{SqfIdeal::prime(ctx, v.p3.intersectWith(s3))
                              .intersectWith(SqfIdeal::prime(ctx, v.p2.intersectWith(v.t))),
                          s3.unionWith(v.t)};

    if (!caseTwo) {
        VarSet tilde = v.r.minus(v.p2.unionWith(v.p3)).unionWith(v.t);
        split.i4 = SplitPiece{ideal.restrictTo(tilde), tilde};
    }
    return split;
}

/// Exact sdepth of a nonzero prime on its own variables, with the
/// remaining ambient variables adjoined free.
StanleyDecomposition primeFactor(PolyContext ctx, VarSet primeVars, VarSet ambient,
                                 const SolverOptions& solver) {
    StanleyDecomposition d =
        exactSdepth(SqfIdeal::prime(ctx, primeVars), primeVars, solver).witness;
    VarSet untouched = ambient.minus(primeVars);
    return untouched.empty() ? d : extendFree(d, untouched);
}

Bounds applicableBoundsForView(const PivotView& v, PolyContext ctx, bool caseTwo,
                               const AnalysisOptions& opts) {
    Bounds bounds = boundsForView(v, caseTwo);
    IdealSplit split = splitFromView(v, ctx, caseTwo);
    Bounds applicable;
    if (!split.i3->ideal.isZero()) applicable.A = bounds.A;
    if (!split.i2->ideal.isZero()) applicable.B = bounds.B;
    if (split.i4 && !split.i4->ideal.isZero()) applicable.C = bounds.C;
    if (!split.i1->ideal.isZero()) {
        int shift = v.n - v.r.size();
        if (opts.useSolver && v.r.size() <= opts.solver.cap)
            applicable.D = exactSdepth(split.i1->ideal, v.r, opts.solver).value + shift;
        else
            applicable.D = 1 + shift; // any nonzero ideal has sdepth >= 1
    }
    return applicable;
}

int sdepthBoundForView(const PivotView& v, PolyContext ctx, bool caseTwo,
                       const AnalysisOptions& opts) {
    std::optional<int> best = applicableBoundsForView(v, ctx, caseTwo, opts).minPresent();
    if (!best)
        throw std::logic_error("sdepthLowerBound: all pieces vanished"); // I is nonzero
    return *best;
}

} // namespace

std::pair<VarSet, VarSet> PrimeTriple::otherPrimes() const {
    PivotView v = makeView(*this);
    return {v.p2, v.p3};
}

SqfIdeal PrimeTriple::ideal() const {
    return intersectPrimes(ctx_, {primes_[0], primes_[1], primes_[2]});
}

PrimeTriple normalizeTriple(PolyContext ctx, VarSet p1, VarSet p2, VarSet p3,
                            const AnalysisOptions& opts) {
    std::array<VarSet, 3> primes{p1, p2, p3};
    VarSet all = VarSet::full(ctx.variableCount());
    for (int i = 0; i < 3; ++i) {
        const VarSet& p = primes[static_cast<std::size_t>(i)];
        if (p.empty())
            throw std::invalid_argument("normalizeTriple: P" + std::to_string(i + 1) +
                                        " is the zero ideal");
        if (!p.subsetOf(all))
            throw std::invalid_argument("normalizeTriple: P" + std::to_string(i + 1) +
                                        " uses variables beyond n");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            if (primes[static_cast<std::size_t>(i)].subsetOf(primes[static_cast<std::size_t>(j)]))
                throw std::invalid_argument("normalizeTriple: P" + std::to_string(i + 1) +
                                            " is included in P" + std::to_string(j + 1));
        }

    VarSet spanned = primes[0].unionWith(primes[1]).unionWith(primes[2]);
    VarSet freeVars = all.minus(spanned);

    std::vector<int> admissible;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        if (primes[static_cast<std::size_t>(i)].subsetOf(
                primes[static_cast<std::size_t>(j)].unionWith(primes[static_cast<std::size_t>(k)])))
            admissible.push_back(i);
    }
    bool caseTwo = !admissible.empty();
    if (!caseTwo) admissible = {0, 1, 2};

    int bestPivot = admissible.front();
    int bestBound = -1;
    for (int p : admissible) {
        int bound = sdepthBoundForView(makeView(primes, p, spanned), ctx, caseTwo, opts);
        if (bound > bestBound) {
            bestBound = bound;
            bestPivot = p;
        }
    }
    return PrimeTriple(ctx, primes, spanned, freeVars, caseTwo, bestPivot);
}

CountProfile countProfile(const PrimeTriple& t) { return profileFromView(makeView(t)); }

std::optional<int> Bounds::minPresent() const {
    std::optional<int> best;
    for (const std::optional<int>& v : {A, B, C, D})
        if (v && (!best || *v < *best)) best = v;
    return best;
}

Bounds boundsFromCounts(const CountProfile& p, int htP2, int htP3, bool caseTwo) {
    Bounds out;
    out.A = ceilHalf(p.a32) + ceilHalf(htP2 - p.b2) + p.n - p.a32 - htP2;
    out.B = ceilHalf(p.a23) + ceilHalf(htP3 - p.b3) + p.n - p.a23 - htP3;
    if (!caseTwo)
        out.C = ceilHalf(p.r - p.b1) + ceilHalf(htP2 - p.b2 - p.c) + ceilHalf(htP3 - p.b3 - p.c);
    return out;
}

Bounds boundsFromHeights(const PrimeTriple& t) {
    PivotView v = makeView(t);
    const int n = v.n;
    const int h1 = v.r.size(), h2 = v.p2.size(), h3 = v.p3.size();
    const int h12 = heightSum(v.r, v.p2);
    const int h13 = heightSum(v.r, v.p3);
    const int h23 = heightSum(v.p2, v.p3);
    Bounds out;
    out.A = ceilHalf(3 * n - h12 - h23 - h2) + ceilHalf(h12 - h1);
    out.B = ceilHalf(3 * n - h13 - h23 - h3) + ceilHalf(h13 - h1);
    if (!t.caseTwo())
        out.C = ceilHalf(n - h23) + ceilHalf(n - h13) + ceilHalf(n - h12);
    return out;
}

int depthFormula(const PrimeTriple& t) {
    int shift = t.freeVars().size();
    if (!t.caseTwo()) return 3 + shift;
    PivotView v = makeView(t);
    return v.n + 2 - std::max(heightSum(v.r, v.p2), heightSum(v.r, v.p3)) + shift;
}

IdealSplit splitIdeal(const PrimeTriple& t) {
    return splitFromView(makeView(t), t.context(), t.caseTwo());
}

DirectSumReport verifyDirectSum(const IdealSplit& split, const SqfIdeal& ideal, VarSet spanned) {
    std::vector<const SplitPiece*> pieces;
    for (const std::optional<SplitPiece>* p : {&split.i1, &split.i2, &split.i3, &split.i4})
        if (p->has_value()) pieces.push_back(&**p);

    const std::vector<int> vars = spanned.members();
    const std::uint32_t count = std::uint32_t{1} << vars.size();
    for (std::uint32_t m = 0; m < count; ++m) {
        VarSet s;
        for (std::size_t j = 0; j < vars.size(); ++j)
            if ((m >> j) & 1u) s.insert(vars[j]);
        int cover = 0;
        for (const SplitPiece* piece : pieces)
            if (s.subsetOf(piece->ambient) && piece->ideal.containsSupport(s)) ++cover;
        bool inIdeal = ideal.containsSupport(s);
        if ((inIdeal && cover != 1) || (!inIdeal && cover != 0)) {
            DirectSumReport r;
            r.ok = false;
            r.witness = s;
            r.witnessCover = cover;
            r.witnessInIdeal = inIdeal;
            return r;
        }
    }
    DirectSumReport r;
    r.ok = true;
    return r;
}

StanleyDecomposition decomposeTriple(const PrimeTriple& t, const AnalysisOptions& opts) {
    const PolyContext ctx = t.context();
    const PivotView v = makeView(t);
    const IdealSplit split = splitIdeal(t);

    std::vector<StanleySpace> spaces;
    auto append = [&spaces](const StanleyDecomposition& d) {
        spaces.insert(spaces.end(), d.spaces().begin(), d.spaces().end());
    };

    if (!split.i1->ideal.isZero()) {
        StanleyDecomposition d = exactSdepth(split.i1->ideal, v.r, opts.solver).witness;
        append(v.t.empty() ? d : extendFree(d, v.t));
    }
    if (!split.i2->ideal.isZero()) {
        append(product(primeFactor(ctx, v.p2.intersectWith(v.r.minus(v.p3)), v.r.minus(v.p3),
                                   opts.solver),
                       primeFactor(ctx, v.p3.intersectWith(v.t), v.t, opts.solver)));
    }
    if (!split.i3->ideal.isZero()) {
        append(product(primeFactor(ctx, v.p3.intersectWith(v.r.minus(v.p2)), v.r.minus(v.p2),
                                   opts.solver),
                       primeFactor(ctx, v.p2.intersectWith(v.t), v.t, opts.solver)));
    }
    if (split.i4 && !split.i4->ideal.isZero()) {
        VarSet lone = v.r.minus(v.p2.unionWith(v.p3));
        SqfIdeal tailIdeal =
            SqfIdeal::prime(ctx, v.p2.intersectWith(v.t))
                .intersectWith(SqfIdeal::prime(ctx, v.p3.intersectWith(v.t)));
        StanleyDecomposition tail = exactSdepth(tailIdeal, v.t, opts.solver).witness;
        append(product(primeFactor(ctx, lone, lone, opts.solver), tail));
    }

    SqfIdeal spannedIdeal = intersectPrimes(ctx, {v.r, v.p2, v.p3});
    StanleyDecomposition combined(spannedIdeal, v.spanned, std::move(spaces));
    return t.freeVars().empty() ? combined : extendFree(combined, t.freeVars());
}

Bounds sdepthBounds(const PrimeTriple& t, const AnalysisOptions& opts) {
    return applicableBoundsForView(makeView(t), t.context(), t.caseTwo(), opts);
}

int sdepthLowerBound(const PrimeTriple& t, const AnalysisOptions& opts) {
    std::optional<int> best = sdepthBounds(t, opts).minPresent();
    if (!best) throw std::logic_error("sdepthLowerBound: all pieces vanished");
    return *best + t.freeVars().size();
}

ConjectureVerdict checkConjecture(const PrimeTriple& t, bool withExact,
                                  const AnalysisOptions& opts) {
    ConjectureVerdict v;
    v.depth = depthFormula(t);
    v.bound = sdepthLowerBound(t, opts);
    v.pass = v.bound >= v.depth;
    if (withExact) {
        SqfIdeal spannedIdeal = intersectPrimes(
            t.context(), {t.primes()[0], t.primes()[1], t.primes()[2]});
        int exact =
            exactSdepth(spannedIdeal, t.spanned(), opts.solver).value + t.freeVars().size();
        v.exactSdepth = exact;
        v.pass = v.pass && exact >= v.bound && exact >= v.depth;
    }
    return v;
}

ChainReport analyzeChain(const std::vector<int>& cutpoints, const AnalysisOptions& opts) {
    if (cutpoints.size() < 2)
        throw std::invalid_argument("analyzeChain: need cutpoints 0 = r0 < r1 < ... < rs = n");
    if (cutpoints.front() != 0)
        throw std::invalid_argument("analyzeChain: first cutpoint must be 0");
    for (std::size_t i = 1; i < cutpoints.size(); ++i)
        if (cutpoints[i] <= cutpoints[i - 1])
            throw std::invalid_argument("analyzeChain: cutpoints must strictly increase");

    const int n = cutpoints.back();
    PolyContext ctx(n);
    const int blocks = static_cast<int>(cutpoints.size()) - 1;

    int bound = 0;
    std::optional<StanleyDecomposition> combined;
    for (int i = 0; i < blocks; ++i) {
        VarSet block = VarSet::range(cutpoints[static_cast<std::size_t>(i)] + 1,
                                     cutpoints[static_cast<std::size_t>(i) + 1]);
        bound += ceilHalf(block.size());
        StanleyDecomposition factor =
            exactSdepth(SqfIdeal::prime(ctx, block), block, opts.solver).witness;
        combined = combined ? product(*combined, factor) : factor;
    }

    ChainReport report{blocks, blocks, bound, combined->target(), *combined};
    return report;
}

int twoPrimeBound(int r, int t, int n) {
    if (!(1 <= r && r <= t && t < n))
        throw std::invalid_argument("twoPrimeBound: need 1 <= r <= t < n");
    return ceilHalf(r) + ceilHalf(n - t);
}

void forEachValidTriple(int n, const std::function<void(VarSet, VarSet, VarSet)>& fn) {
    std::vector<VarSet> subsets;
    for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m)
        subsets.push_back(VarSet::fromMask(m));
    std::sort(subsets.begin(), subsets.end(), canonicalLess);

    const std::size_t count = subsets.size();
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) {
            if (subsets[i].subsetOf(subsets[j]) || subsets[j].subsetOf(subsets[i])) continue;
            for (std::size_t k = j + 1; k < count; ++k) {
                if (subsets[i].subsetOf(subsets[k]) || subsets[k].subsetOf(subsets[i])) continue;
                if (subsets[j].subsetOf(subsets[k]) || subsets[k].subsetOf(subsets[j])) continue;
                fn(subsets[i], subsets[j], subsets[k]);
            }
        }
}

} // namespace stanley
