#ifndef STANLEY_IDEAL_HPP
#define STANLEY_IDEAL_HPP

#include <vector>

#include "stanley/context.hpp"
#include "stanley/monomial.hpp"
#include "stanley/varset.hpp"

namespace stanley {

/// A squarefree monomial ideal, stored as the antichain of its minimal
/// generator supports. The zero ideal is the empty generator list; the
/// unit ideal is unrepresentable (an empty support is rejected as a
/// generator). Generators are kept minimalized and canonically sorted,
/// so operator== is structural equality of ideals.
class SqfIdeal {
public:
    static SqfIdeal zero(PolyContext ctx) { return SqfIdeal(ctx); }

    /// Ideal generated by the given supports; minimalizes and sorts.
    static SqfIdeal fromGenerators(PolyContext ctx, std::vector<VarSet> gens);

    /// The monomial prime ideal (x_i : i in vars). Zero ideal when vars is empty.
    static SqfIdeal prime(PolyContext ctx, VarSet vars);

    PolyContext context() const { return ctx_; }
    const std::vector<VarSet>& generators() const { return gens_; }
    bool isZero() const { return gens_.empty(); }

    /// True iff x^s lies in the ideal, i.e. some generator divides x^s.
    bool containsSupport(VarSet s) const;

    /// Membership test for an arbitrary monomial (depends only on its support).
    bool contains(const Monomial& m) const;

    /// The intersection; generators are the pairwise unions, minimalized.
    SqfIdeal intersectWith(const SqfIdeal& other) const;

    /// The ideal of the subring K[x_i : i in vars]: generators lying inside vars.
    SqfIdeal restrictTo(VarSet vars) const;

    /// Union of all generator supports.
    VarSet supportUnion() const;

    /// Same generators reinterpreted in a wider ring (n may only grow).
    SqfIdeal withContext(PolyContext ctx) const;

    friend bool operator==(const SqfIdeal& a, const SqfIdeal& b) {
        return a.ctx_ == b.ctx_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const SqfIdeal& a, const SqfIdeal& b) { return !(a == b); }

    std::string toString() const;

private:
    explicit SqfIdeal(PolyContext ctx) : ctx_(ctx) {}

    PolyContext ctx_;
    std::vector<VarSet> gens_;
};

/// Intersection of a family of primes, e.g. the chain ideals.
SqfIdeal intersectPrimes(PolyContext ctx, const std::vector<VarSet>& primes);

} // namespace stanley

#endif
