#include "stanley/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace stanley {

bool StanleySpace::contains(const Monomial& m) const {
    if (m.context() != u.context())
        throw std::invalid_argument("StanleySpace: monomial context mismatch");
    for (int i = 1; i <= m.context().variableCount(); ++i) {
        int eu = u.exponent(i);
        int em = m.exponent(i);
        if (em < eu) return false;
        if (em > eu && !z.contains(i)) return false;
    }
    return true;
}

StanleyDecomposition::StanleyDecomposition(SqfIdeal target, VarSet ambient,
                                           std::vector<StanleySpace> spaces)
    : target_(std::move(target)), ambient_(ambient), spaces_(std::move(spaces)) {
    VarSet all = VarSet::full(target_.context().variableCount());
    if (!ambient_.subsetOf(all))
        throw std::invalid_argument("StanleyDecomposition: ambient exceeds the ring");
    for (const VarSet& g : target_.generators())
        if (!g.subsetOf(ambient_))
            throw std::invalid_argument("StanleyDecomposition: target generator outside ambient");
    for (const StanleySpace& s : spaces_) {
        if (s.u.context() != target_.context())
            throw std::invalid_argument("StanleyDecomposition: space context mismatch");
        if (!s.u.support().subsetOf(ambient_) || !s.z.subsetOf(ambient_))
            throw std::invalid_argument("StanleyDecomposition: space outside ambient");
    }
    std::sort(spaces_.begin(), spaces_.end(), [](const StanleySpace& a, const StanleySpace& b) {
        if (a.u != b.u) return lexLess(a.u, b.u);
        return canonicalLess(a.z, b.z);
    });
}

int sdepthOf(const StanleyDecomposition& d) {
    if (d.spaces().empty())
        throw std::invalid_argument("sdepthOf: decomposition has no spaces");
    int best = kMaxVariables + 1;
    for (const StanleySpace& s : d.spaces()) best = std::min(best, s.z.size());
    return best;
}

VerifyReport verifyDecomposition(const StanleyDecomposition& d, int exponentCap) {
    if (exponentCap < 2)
        throw std::invalid_argument("verifyDecomposition: exponent cap must be >= 2");
    for (const StanleySpace& s : d.spaces())
        if (!s.u.isSquarefree())
            throw std::invalid_argument("verifyDecomposition: non-squarefree space generator");

    const PolyContext ctx = d.context();
    const std::vector<int> vars = d.ambient().members();
    std::vector<int> exps(static_cast<std::size_t>(ctx.variableCount()), 0);

    // odometer over exponent vectors supported in the ambient variables
    for (;;) {
        Monomial m(ctx, exps);
        int cover = 0;
        for (const StanleySpace& s : d.spaces())
            if (s.contains(m)) ++cover;
        bool inTarget = d.target().contains(m);
        if ((inTarget && cover != 1) || (!inTarget && cover != 0)) {
            VerifyReport r;
            r.partition = false;
            r.witness = m;
            r.witnessCover = cover;
            r.witnessInTarget = inTarget;
            return r;
        }
        std::size_t pos = 0;
        while (pos < vars.size()) {
            std::size_t idx = static_cast<std::size_t>(vars[pos] - 1);
            if (exps[idx] < exponentCap) {
                ++exps[idx];
                break;
            }
            exps[idx] = 0;
            ++pos;
        }
        if (pos == vars.size()) break;
    }
    VerifyReport r;
    r.partition = true;
    return r;
}

StanleyDecomposition product(const StanleyDecomposition& a, const StanleyDecomposition& b) {
    if (a.context() != b.context())
        throw std::invalid_argument("product: context mismatch");
    if (!a.ambient().intersectWith(b.ambient()).empty())
        throw std::invalid_argument("product: ambient variable sets overlap");
    std::vector<StanleySpace> spaces;
    spaces.reserve(a.spaces().size() * b.spaces().size());
    for (const StanleySpace& s : a.spaces())
        for (const StanleySpace& t : b.spaces())
            spaces.push_back({s.u.times(t.u), s.z.unionWith(t.z)});
    return StanleyDecomposition(a.target().intersectWith(b.target()),
                                a.ambient().unionWith(b.ambient()), std::move(spaces));
}

StanleyDecomposition extendFree(const StanleyDecomposition& d, VarSet extra) {
    if (!extra.intersectWith(d.ambient()).empty())
        throw std::invalid_argument("extendFree: extra variables overlap the ambient set");
    std::vector<StanleySpace> spaces;
    spaces.reserve(d.spaces().size());
    for (const StanleySpace& s : d.spaces())
        spaces.push_back({s.u, s.z.unionWith(extra)});
    return StanleyDecomposition(d.target(), d.ambient().unionWith(extra), std::move(spaces));
}

} // namespace stanley
