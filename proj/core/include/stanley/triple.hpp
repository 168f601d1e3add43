#ifndef STANLEY_TRIPLE_HPP
#define STANLEY_TRIPLE_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stanley/decomposition.hpp"
#include "stanley/homology.hpp"
#include "stanley/ideal.hpp"
#include "stanley/solver.hpp"
#include "stanley/varset.hpp"

namespace stanley {

inline int ceilHalf(int x) { return (x + 1) / 2; } // ceil(x/2) for x >= 0

struct AnalysisOptions {
    bool useSolver = true; // exact D and exact piece decompositions
    SolverOptions solver{};
};

/// Three monomial primes, none contained in another, analyzed as an
/// intersection I = P1 ∩ P2 ∩ P3. Variables outside the union are free
/// and only shift depth and sdepth (they never enter the combinatorics),
/// so the analysis runs on the spanned variables with user-facing indices
/// kept intact. Case 2 holds when some prime lies inside the sum of the
/// other two; the pivot is the prime playing the distinguished role
/// (case 2 pivots must satisfy the inclusion).
class PrimeTriple {
public:
    PolyContext context() const { return ctx_; }
    const std::array<VarSet, 3>& primes() const { return primes_; }
    VarSet spanned() const { return spanned_; }
    VarSet freeVars() const { return freeVars_; }
    int spannedCount() const { return spanned_.size(); }
    bool caseTwo() const { return caseTwo_; }
    int pivot() const { return pivot_; } // 0-based index into primes()

    VarSet pivotPrime() const { return primes_[static_cast<std::size_t>(pivot_)]; }
    /// The two non-pivot primes in original index order (the "P2", "P3" roles).
    std::pair<VarSet, VarSet> otherPrimes() const;

    /// I = P1 ∩ P2 ∩ P3 in the full ring.
    SqfIdeal ideal() const;

private:
    PrimeTriple(PolyContext ctx, std::array<VarSet, 3> primes, VarSet spanned, VarSet freeVars,
                bool caseTwo, int pivot)
        : ctx_(ctx), primes_(primes), spanned_(spanned), freeVars_(freeVars),
          caseTwo_(caseTwo), pivot_(pivot) {}

    friend PrimeTriple normalizeTriple(PolyContext, VarSet, VarSet, VarSet,
                                       const AnalysisOptions&);

    PolyContext ctx_;
    std::array<VarSet, 3> primes_;
    VarSet spanned_;
    VarSet freeVars_;
    bool caseTwo_;
    int pivot_;
};

/// Validates the primes (nonzero, pairwise non-included), detects the case,
/// and picks the pivot: among the admissible pivots (all three in case 1,
/// the inclusion witnesses in case 2) the one whose sdepth lower bound is
/// largest, ties broken toward the lowest index. Any admissible pivot gives
/// a valid bound, so taking the best is still a bound.
PrimeTriple normalizeTriple(PolyContext ctx, VarSet p1, VarSet p2, VarSet p3,
                            const AnalysisOptions& opts = {});

/// The seven counts attached to a pivot choice, all within the spanned
/// variables: r = ht(pivot); b2, b3, b1 count pivot variables lying in P2,
/// P3, P2 ∪ P3; a23, a32 count pivot variables in P2 \ P3 and P3 \ P2;
/// c counts non-pivot variables in P2 ∩ P3.
struct CountProfile {
    int r = 0, b1 = 0, b2 = 0, b3 = 0, a23 = 0, a32 = 0, c = 0;
    int n = 0; // spanned variable count, the "n" in the bound formulas
};

CountProfile countProfile(const PrimeTriple& t);

/// The per-piece sdepth bounds. Absent entries mean the corresponding
/// piece vanishes or is out of case (C in case 2, D when I1 = 0).
struct Bounds {
    std::optional<int> A, B, C, D;

    std::optional<int> minPresent() const;
};

/// A, B (and C in case 1) from the count profile.
Bounds boundsFromCounts(const CountProfile& p, int htP2, int htP3, bool caseTwo);

/// The same numbers from heights only; must agree with boundsFromCounts.
Bounds boundsFromHeights(const PrimeTriple& t);

/// Closed-form depth(I): 3 in case 1, n+2 - max(ht(pivot+Pj), ht(pivot+Pk))
/// in case 2 (n = spanned count), plus one per free variable.
int depthFormula(const PrimeTriple& t);

/// One direct summand of I: an ideal of the subring on `ambient`.
struct SplitPiece {
    SqfIdeal ideal;
    VarSet ambient;
};

/// I = I1 ⊕ I2 ⊕ I3 ⊕ I4 over the spanned variables, with
///   I1 = (I ∩ K[pivot vars]) extended to the spanned ring,
///   I2 = (P2 restricted to pivot-vars-minus-P3) ∩ (P3 restricted to the rest),
///   I3 = the mirror image of I2,
///   I4 = I restricted to the variables in no inclusion constraint
/// (absent in case 2, where that subring misses the pivot entirely).
/// Any present piece may still be the zero ideal.
struct IdealSplit {
    std::optional<SplitPiece> i1, i2, i3, i4;
};

IdealSplit splitIdeal(const PrimeTriple& t);

struct DirectSumReport {
    bool ok = false;
    std::optional<VarSet> witness; // first support violating the direct sum
    int witnessCover = 0;
    bool witnessInIdeal = false;
};

/// Exhaustive check over every support inside the spanned variables:
/// the support lies in `ideal` iff exactly one piece contains it.
DirectSumReport verifyDirectSum(const IdealSplit& split, const SqfIdeal& ideal, VarSet spanned);

/// The Stanley decomposition of I assembled from the split: the exact
/// solver decomposes I1's restriction (then free-extends it), the other
/// pieces are products of solver decompositions of their prime factors.
/// The result always verifies and its sdepth is >= sdepthLowerBound.
StanleyDecomposition decomposeTriple(const PrimeTriple& t, const AnalysisOptions& opts = {});

/// The bounds that actually apply: letters for vanished pieces are dropped,
/// and D (the exact sdepth of the I1 piece) is added when I1 is nonzero.
/// When the solver is off or the pivot block exceeds its cap, D falls back
/// to the always-valid 1 + (n - r).
Bounds sdepthBounds(const PrimeTriple& t, const AnalysisOptions& opts = {});

/// min of the applicable bounds, plus one per free variable.
int sdepthLowerBound(const PrimeTriple& t, const AnalysisOptions& opts = {});

struct ConjectureVerdict {
    int depth = 0;
    int bound = 0;
    std::optional<int> exactSdepth;
    bool pass = false;
};

/// pass = bound >= depth; with the solver also exact >= bound and exact >= depth.
ConjectureVerdict checkConjecture(const PrimeTriple& t, bool withExact = false,
                                  const AnalysisOptions& opts = {});

/// Intersections of primes on consecutive disjoint blocks given by
/// cutpoints 0 = r0 < r1 < ... < rs = n: depth is the block count s and
/// the iterated product of per-block decompositions realizes the bound
/// sum(ceil(block/2)) >= s.
struct ChainReport {
    int blockCount = 0;
    int depth = 0;
    int bound = 0;
    SqfIdeal ideal;
    StanleyDecomposition decomposition;
};

ChainReport analyzeChain(const std::vector<int>& cutpoints, const AnalysisOptions& opts = {});

/// sdepth bound for an intersection of two primes (x_1..x_r) ∩ (x_{r+1}..x_n)
/// where the first prime sits inside (x_1..x_t): ceil(r/2) + ceil((n-t)/2).
int twoPrimeBound(int r, int t, int n);

/// Calls fn for every unordered triple of distinct nonempty subsets of
/// {1..n} with no pairwise inclusion, in canonical order.
void forEachValidTriple(int n, const std::function<void(VarSet, VarSet, VarSet)>& fn);

} // namespace stanley

#endif
