#include "stanley/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace stanley {

namespace {

std::vector<VarSet> maximalSets(std::vector<VarSet> sets) {
    std::sort(sets.begin(), sets.end(), canonicalLess);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VarSet> out;
    for (auto it = sets.rbegin(); it != sets.rend(); ++it) { // big first
        bool dominated = false;
        for (const VarSet& kept : out)
            if (it->subsetOf(kept)) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(*it);
    }
    std::sort(out.begin(), out.end(), canonicalLess);
    return out;
}

} // namespace

int SimplicialComplex::dimension() const {
    int best = -1;
    for (const VarSet& f : facets) best = std::max(best, f.size() - 1);
    return best;
}

bool SimplicialComplex::isFace(VarSet s) const {
    for (const VarSet& f : facets)
        if (s.subsetOf(f)) return true;
    return false;
}

std::vector<VarSet> SimplicialComplex::allFaces() const {
    VarSet support;
    for (const VarSet& f : facets) support = support.unionWith(f);
    std::vector<int> vars = support.members();
    std::vector<VarSet> faces;
    const std::uint32_t count = std::uint32_t{1} << vars.size();
    for (std::uint32_t m = 0; m < count; ++m) {
        VarSet s;
        for (std::size_t j = 0; j < vars.size(); ++j)
            if ((m >> j) & 1u) s.insert(vars[j]);
        if (isFace(s)) faces.push_back(s);
    }
    std::sort(faces.begin(), faces.end(), canonicalLess);
    return faces;
}

SimplicialComplex stanleyReisner(const SqfIdeal& ideal, VarSet ambient) {
    if (ideal.isZero())
        throw std::invalid_argument("stanleyReisner: zero ideal (complex would be the full simplex)");
    for (const VarSet& g : ideal.generators())
        if (!g.subsetOf(ambient))
            throw std::invalid_argument("stanleyReisner: generator outside the ambient variables");

    std::vector<int> vars = ambient.members();
    std::vector<VarSet> faces;
    const std::uint32_t count = std::uint32_t{1} << vars.size();
    for (std::uint32_t m = 0; m < count; ++m) {
        VarSet s;
        for (std::size_t j = 0; j < vars.size(); ++j)
            if ((m >> j) & 1u) s.insert(vars[j]);
        if (!ideal.containsSupport(s)) faces.push_back(s);
    }
    return SimplicialComplex{ideal.context(), ambient, maximalSets(std::move(faces))};
}

SimplicialComplex stanleyReisner(const SqfIdeal& ideal) {
    return stanleyReisner(ideal, VarSet::full(ideal.context().variableCount()));
}

int integerMatrixRank(std::vector<std::vector<long long>> m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m.front().size());

    int rank = 0;
    long long prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                __int128 num = static_cast<__int128>(m[rank][col]) * m[i][j] -
                               static_cast<__int128>(m[i][col]) * m[rank][j];
                __int128 val = num / prev; // Bareiss one-step: division is exact
                if (val > std::numeric_limits<long long>::max() ||
                    val < std::numeric_limits<long long>::min())
                    throw std::overflow_error("integerMatrixRank: entry outside 64-bit range");
                m[i][j] = static_cast<long long>(val);
            }
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<int> reducedHomologyRanks(const SimplicialComplex& complex) {
    if (complex.facets.empty())
        throw std::invalid_argument("reducedHomologyRanks: complex has no faces");

    const int dim = complex.dimension();
    std::vector<std::vector<VarSet>> bySize(static_cast<std::size_t>(dim) + 2);
    for (const VarSet& f : complex.allFaces())
        bySize[static_cast<std::size_t>(f.size())].push_back(f); // already sorted

    // boundaryRank[d] = rank of the boundary map from d-chains to (d-1)-chains
    std::vector<int> boundaryRank(static_cast<std::size_t>(dim) + 2, 0);
    if (dim >= 0 && !bySize[1].empty()) boundaryRank[1] = 1; // augmentation onto {∅}
    for (int d = 1; d <= dim; ++d) {
        const std::vector<VarSet>& rows = bySize[static_cast<std::size_t>(d)];
        const std::vector<VarSet>& colsFaces = bySize[static_cast<std::size_t>(d) + 1];
        if (rows.empty() || colsFaces.empty()) continue;
        std::map<std::uint32_t, int> rowIndex;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i)
            rowIndex[rows[static_cast<std::size_t>(i)].mask()] = i;
        std::vector<std::vector<long long>> matrix(
            rows.size(), std::vector<long long>(colsFaces.size(), 0));
        for (int j = 0; j < static_cast<int>(colsFaces.size()); ++j) {
            std::vector<int> vs = colsFaces[static_cast<std::size_t>(j)].members();
            long long sign = 1;
            for (std::size_t pos = 0; pos < vs.size(); ++pos) {
                VarSet sub = colsFaces[static_cast<std::size_t>(j)].minus(VarSet::of({vs[pos]}));
                matrix[static_cast<std::size_t>(rowIndex.at(sub.mask()))]
                      [static_cast<std::size_t>(j)] = sign;
                sign = -sign;
            }
        }
        boundaryRank[static_cast<std::size_t>(d) + 1] = integerMatrixRank(std::move(matrix));
    }

    // rank H~_{d} = f_d - rank ∂_d - rank ∂_{d+1}, with f stored at d+1
    std::vector<int> ranks(static_cast<std::size_t>(dim) + 2, 0);
    for (int d = -1; d <= dim; ++d) {
        int fd = static_cast<int>(bySize[static_cast<std::size_t>(d) + 1].size());
        int below = boundaryRank[static_cast<std::size_t>(d) + 1];
        int above = (d + 2 < static_cast<int>(boundaryRank.size()))
                        ? boundaryRank[static_cast<std::size_t>(d) + 2]
                        : 0;
        ranks[static_cast<std::size_t>(d) + 1] = fd - below - above;
    }
    return ranks;
}

SimplicialComplex link(const SimplicialComplex& complex, VarSet f) {
    if (!complex.isFace(f))
        throw std::invalid_argument("link: not a face of the complex");
    std::vector<VarSet> facets;
    for (const VarSet& h : complex.facets)
        if (f.subsetOf(h)) facets.push_back(h.minus(f));
    // distinct facets of the complex stay incomparable after removing f
    std::sort(facets.begin(), facets.end(), canonicalLess);
    return SimplicialComplex{complex.ctx, complex.vertexSet.minus(f), std::move(facets)};
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int i) {
    if (i < -1)
        throw std::invalid_argument("skeleton: dimension below -1");
    std::vector<VarSet> facets;
    if (i == -1) {
        facets.push_back(VarSet{});
        return SimplicialComplex{complex.ctx, complex.vertexSet, std::move(facets)};
    }
    for (const VarSet& f : complex.allFaces())
        if (f.size() == i + 1) facets.push_back(f);
    for (const VarSet& h : complex.facets)
        if (h.size() <= i) facets.push_back(h);
    return SimplicialComplex{complex.ctx, complex.vertexSet, maximalSets(std::move(facets))};
}

bool isCohenMacaulay(const SimplicialComplex& complex) {
    for (const VarSet& f : complex.allFaces()) {
        SimplicialComplex lk = link(complex, f);
        int lkDim = lk.dimension();
        if (lkDim <= 0) {
            // dimension -1 has nothing below it; dimension 0 needs H~_{-1}=0,
            // which holds exactly when the link has a vertex (it does)
            continue;
        }
        std::vector<int> ranks = reducedHomologyRanks(lk);
        for (int d = -1; d < lkDim; ++d)
            if (ranks[static_cast<std::size_t>(d) + 1] != 0) return false;
    }
    return true;
}

int depthOracle(const SqfIdeal& ideal, VarSet ambient) {
    if (ideal.isZero())
        throw std::invalid_argument("depthOracle: zero ideal");
    SimplicialComplex complex = stanleyReisner(ideal, ambient);
    int depthQuotient = 0; // the {∅} complex
    for (int i = complex.dimension(); i >= 0; --i) {
        if (isCohenMacaulay(skeleton(complex, i))) {
            depthQuotient = i + 1;
            break;
        }
    }
    return depthQuotient + 1;
}

int depthOracle(const SqfIdeal& ideal) {
    return depthOracle(ideal, VarSet::full(ideal.context().variableCount()));
}

} // namespace stanley
