#ifndef STANLEY_HOMOLOGY_HPP
#define STANLEY_HOMOLOGY_HPP

#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/varset.hpp"

namespace stanley {

/// A finite simplicial complex given by its maximal faces. The empty
/// complex {∅} is facets = {∅}; faces are all subsets of facets.
struct SimplicialComplex {
    PolyContext ctx;
    VarSet vertexSet;            // ambient vertices (not all need be faces)
    std::vector<VarSet> facets;  // antichain, canonically sorted

    /// dim = max facet size - 1; the {∅} complex has dimension -1.
    int dimension() const;
    bool isFace(VarSet s) const;
    std::vector<VarSet> allFaces() const; // canonically sorted, includes ∅
};

/// The Stanley-Reisner complex of a nonzero ideal on `ambient`: faces are
/// exactly the supports NOT in the ideal.
SimplicialComplex stanleyReisner(const SqfIdeal& ideal, VarSet ambient);
SimplicialComplex stanleyReisner(const SqfIdeal& ideal);

/// Ranks of reduced rational homology in dimensions -1 .. dim, computed
/// from boundary-matrix ranks in exact integer arithmetic.
/// Index i of the result holds the rank in dimension i-1.
std::vector<int> reducedHomologyRanks(const SimplicialComplex& complex);

/// The link of a face: all faces disjoint from f whose union with f is a face.
SimplicialComplex link(const SimplicialComplex& complex, VarSet f);

/// Faces of dimension <= i; skeleton(-1) is {∅}.
SimplicialComplex skeleton(const SimplicialComplex& complex, int i);

/// Reisner's criterion over the rationals: every face's link has vanishing
/// reduced homology below its dimension.
bool isCohenMacaulay(const SimplicialComplex& complex);

/// depth(I) for a nonzero ideal, via depth(S/I) = 1 + max{i : skeleton(i) is
/// Cohen-Macaulay} (0 for the {∅} complex) and depth(I) = depth(S/I) + 1.
int depthOracle(const SqfIdeal& ideal, VarSet ambient);
int depthOracle(const SqfIdeal& ideal);

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
/// Exact; throws std::overflow_error if intermediates leave 64-bit range.
int integerMatrixRank(std::vector<std::vector<long long>> m);

} // namespace stanley

#endif
