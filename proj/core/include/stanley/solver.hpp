#ifndef STANLEY_SOLVER_HPP
#define STANLEY_SOLVER_HPP

#include <optional>
#include <vector>

#include "stanley/decomposition.hpp"
#include "stanley/ideal.hpp"
#include "stanley/varset.hpp"

namespace stanley {

/// Largest ambient size the search accepts. 2^7 supports is the most the
/// exhaustive interval search is meant to handle; see SolverOptions::cap.
inline constexpr int kSolverCapLimit = 7;

struct SolverOptions {
    /// Reject ideals whose ambient has more variables than this. The
    /// default keeps runs instant; 7 works but can take noticeably longer
    /// on dense ideals (the CLI warns when it is raised).
    int cap = 6;
};

/// The supports of the squarefree monomials of I inside the subring on
/// `ambient`, i.e. the upward-closed family the interval search partitions.
struct SupportPoset {
    PolyContext ctx;
    VarSet ambient;
    std::vector<VarSet> elements; // canonically sorted (cardinality, then lex)
};

struct Interval {
    VarSet bottom;
    VarSet top; // bottom is a subset of top
};

/// A partition of a support poset into inclusion intervals [bottom, top].
struct IntervalPartition {
    std::vector<Interval> intervals;
};

SupportPoset buildPoset(const SqfIdeal& ideal, VarSet ambient, const SolverOptions& opts = {});
SupportPoset buildPoset(const SqfIdeal& ideal, const SolverOptions& opts = {});

/// Searches for an interval partition with every |top| >= k. Exact-cover
/// backtracking: the canonically minimal uncovered support becomes the
/// bottom of the next interval; candidate tops are tried largest-first.
/// Tops of every admissible size are branched on — restricting tops to one
/// size is a known speedup whose completeness is not assumed here.
/// Returns the partition found, or nullopt when none exists.
std::optional<IntervalPartition> decideAtLeast(const SupportPoset& poset, int k);

struct ExactSdepthResult {
    int value;
    StanleyDecomposition witness;
};

/// Exact Stanley depth of a nonzero ideal on `ambient`, with a witness
/// decomposition realizing it. decideAtLeast is monotone in k, so the
/// value is the last k in an ascending scan that still succeeds.
ExactSdepthResult exactSdepth(const SqfIdeal& ideal, VarSet ambient, const SolverOptions& opts = {});
ExactSdepthResult exactSdepth(const SqfIdeal& ideal, const SolverOptions& opts = {});

/// The witness decomposition induced by an interval partition:
/// [s, t] becomes x^s K[{x_j : j in t}].
StanleyDecomposition partitionToDecomposition(const SqfIdeal& ideal, VarSet ambient,
                                              const IntervalPartition& partition);

} // namespace stanley

#endif
