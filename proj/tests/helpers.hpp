#ifndef STANLEY_TEST_HELPERS_HPP
#define STANLEY_TEST_HELPERS_HPP

#include <cstdint>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/monomial.hpp"
#include "stanley/varset.hpp"

namespace stanley::test {

inline VarSet vs(std::initializer_list<int> indices) { return VarSet::of(indices); }

inline SqfIdeal ideal(PolyContext ctx, std::vector<std::vector<int>> gens) {
    std::vector<VarSet> sets;
    for (const auto& g : gens) sets.push_back(VarSet::fromIndices(g));
    return SqfIdeal::fromGenerators(ctx, std::move(sets));
}

inline Monomial mono(PolyContext ctx, std::vector<int> exps) {
    return Monomial(ctx, std::move(exps));
}

/// Every nonzero squarefree ideal whose generators use only `vars`:
/// upward-closed support families, identified by their minimal elements.
inline std::vector<SqfIdeal> allNonzeroIdeals(PolyContext ctx, VarSet vars) {
    const std::vector<int> members = vars.members();
    const int m = static_cast<int>(members.size());
    std::vector<VarSet> supports;
    for (std::uint32_t s = 1; s < (std::uint32_t{1} << m); ++s) {
        VarSet sup;
        for (int j = 0; j < m; ++j)
            if ((s >> j) & 1u) sup.insert(members[static_cast<std::size_t>(j)]);
        supports.push_back(sup);
    }

    std::vector<SqfIdeal> out;
    const std::uint32_t familyCount = std::uint32_t{1} << supports.size();
    for (std::uint32_t fam = 1; fam < familyCount; ++fam) {
        bool upwardClosed = true;
        for (std::size_t i = 0; i < supports.size() && upwardClosed; ++i) {
            if (!((fam >> i) & 1u)) continue;
            for (std::size_t j = 0; j < supports.size(); ++j)
                if (supports[i].subsetOf(supports[j]) && !((fam >> j) & 1u)) {
                    upwardClosed = false;
                    break;
                }
        }
        if (!upwardClosed) continue;
        std::vector<VarSet> gens;
        for (std::size_t i = 0; i < supports.size(); ++i)
            if ((fam >> i) & 1u) gens.push_back(supports[i]);
        out.push_back(SqfIdeal::fromGenerators(ctx, std::move(gens)));
    }
    return out;
}

} // namespace stanley::test

#endif
