#include "stanley/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace stanley {

namespace {

/// Keep only the inclusion-minimal sets, canonically sorted.
std::vector<VarSet> minimalize(std::vector<VarSet> sets) {
    std::sort(sets.begin(), sets.end(), canonicalLess);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VarSet> out;
    for (const VarSet& s : sets) {
        bool dominated = false;
        for (const VarSet& kept : out) {
            if (kept.subsetOf(s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(s);
    }
    return out;
}

} // namespace

SqfIdeal SqfIdeal::fromGenerators(PolyContext ctx, std::vector<VarSet> gens) {
    SqfIdeal ideal(ctx);
    for (const VarSet& g : gens) {
        if (g.empty())
            throw std::invalid_argument("SqfIdeal: empty generator (the unit ideal is not representable)");
        if (!g.subsetOf(VarSet::full(ctx.variableCount())))
            throw std::invalid_argument("SqfIdeal: generator " + g.toString() +
                                        " uses variables beyond n=" + std::to_string(ctx.variableCount()));
    }
    ideal.gens_ = minimalize(std::move(gens));
    return ideal;
}

SqfIdeal SqfIdeal::prime(PolyContext ctx, VarSet vars) {
    std::vector<VarSet> gens;
    for (int i : vars.members()) gens.push_back(VarSet::of({i}));
    return fromGenerators(ctx, std::move(gens));
}

bool SqfIdeal::containsSupport(VarSet s) const {
    for (const VarSet& g : gens_)
        if (g.subsetOf(s)) return true;
    return false;
}

bool SqfIdeal::contains(const Monomial& m) const {
    if (m.context() != ctx_)
        throw std::invalid_argument("SqfIdeal: monomial context mismatch");
    return containsSupport(m.support());
}

SqfIdeal SqfIdeal::intersectWith(const SqfIdeal& other) const {
    if (ctx_ != other.ctx_)
        throw std::invalid_argument("SqfIdeal: context mismatch in intersection");
    std::vector<VarSet> gens;
    gens.reserve(gens_.size() * other.gens_.size());
    for (const VarSet& g : gens_)
        for (const VarSet& h : other.gens_)
            gens.push_back(g.unionWith(h));
    SqfIdeal ideal(ctx_);
    ideal.gens_ = minimalize(std::move(gens));
    return ideal;
}

SqfIdeal SqfIdeal::restrictTo(VarSet vars) const {
    SqfIdeal ideal(ctx_);
    for (const VarSet& g : gens_)
        if (g.subsetOf(vars)) ideal.gens_.push_back(g);
    // subfamily of an antichain is an antichain and stays sorted
    return ideal;
}

VarSet SqfIdeal::supportUnion() const {
    VarSet u;
    for (const VarSet& g : gens_) u = u.unionWith(g);
    return u;
}

SqfIdeal SqfIdeal::withContext(PolyContext ctx) const {
    if (ctx.variableCount() < ctx_.variableCount())
        throw std::invalid_argument("SqfIdeal: cannot shrink the ambient ring");
    SqfIdeal ideal(ctx);
    ideal.gens_ = gens_;
    return ideal;
}

std::string SqfIdeal::toString() const {
    if (gens_.empty()) return "(0)";
    std::string out = "(";
    bool first = true;
    for (const VarSet& g : gens_) {
        if (!first) out += ", ";
        out += Monomial::fromSupport(ctx_, g).toString();
        first = false;
    }
    return out + ")";
}

SqfIdeal intersectPrimes(PolyContext ctx, const std::vector<VarSet>& primes) {
    if (primes.empty())
        throw std::invalid_argument("intersectPrimes: need at least one prime");
    SqfIdeal result = SqfIdeal::prime(ctx, primes.front());
    for (std::size_t i = 1; i < primes.size(); ++i)
        result = result.intersectWith(SqfIdeal::prime(ctx, primes[i]));
    return result;
}

} // namespace stanley
