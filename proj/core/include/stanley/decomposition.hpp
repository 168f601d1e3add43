#ifndef STANLEY_DECOMPOSITION_HPP
#define STANLEY_DECOMPOSITION_HPP

#include <optional>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/monomial.hpp"
#include "stanley/varset.hpp"

namespace stanley {

/// One Stanley space u*K[Z]: all monomials u*f with f supported in Z.
/// Here u is always squarefree, so freeness over K[Z] is automatic.
struct StanleySpace {
    Monomial u;
    VarSet z;

    /// Membership depends only on comparing each exponent of m against u.
    bool contains(const Monomial& m) const;
};

/// A finite list of Stanley spaces together with the ideal it claims to
/// decompose. `ambient` is the variable set of the (sub)ring the
/// decomposition lives in: every generator of `target`, every u and
/// every Z lie inside it. For an ideal of the full ring, ambient = {1..n}.
class StanleyDecomposition {
public:
    StanleyDecomposition(SqfIdeal target, VarSet ambient, std::vector<StanleySpace> spaces);

    const SqfIdeal& target() const { return target_; }
    VarSet ambient() const { return ambient_; }
    const std::vector<StanleySpace>& spaces() const { return spaces_; }
    PolyContext context() const { return target_.context(); }

private:
    SqfIdeal target_;
    VarSet ambient_;
    std::vector<StanleySpace> spaces_; // canonically sorted (by u, then Z)
};

/// min |Z_i| over the spaces. Rejects the empty list: decompositions of
/// zero ideals are represented with no spaces and must be skipped by callers.
int sdepthOf(const StanleyDecomposition& d);

struct VerifyReport {
    bool partition = false;
    std::optional<Monomial> witness; // first monomial violating the partition
    int witnessCover = 0;            // how many spaces contain the witness
    bool witnessInTarget = false;
};

/// Exhaustive partition check. Membership of m in u*K[Z] with u squarefree
/// depends only on whether each exponent of m is 0, 1 or >=2, so scanning
/// every exponent vector with entries in {0..cap}, cap >= 2, over the ambient
/// variables is a complete check. cap = 2 is the canonical verifier; larger
/// caps exist for cross-checking.
VerifyReport verifyDecomposition(const StanleyDecomposition& d, int exponentCap = 2);

/// Pairwise product of spaces for decompositions over disjoint variable
/// sets; decomposes the intersection of the extended ideals, and its
/// sdepth is the sum of the factors' sdepths.
StanleyDecomposition product(const StanleyDecomposition& a, const StanleyDecomposition& b);

/// Adjoin variables (disjoint from the ambient) as free variables of every
/// space; the target becomes the extended ideal and sdepth grows by |extra|.
StanleyDecomposition extendFree(const StanleyDecomposition& d, VarSet extra);

} // namespace stanley

#endif
