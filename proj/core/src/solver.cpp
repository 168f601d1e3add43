#include "stanley/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace stanley {

namespace {

/// Cover mask over up to 2^7 poset elements.
struct Mask128 {
    std::uint64_t lo = 0, hi = 0;

    bool none() const { return lo == 0 && hi == 0; }
    bool test(int i) const {
        return i < 64 ? (lo >> i) & 1u : (hi >> (i - 64)) & 1u;
    }
    void set(int i) {
        if (i < 64) lo |= (std::uint64_t{1} << i);
        else hi |= (std::uint64_t{1} << (i - 64));
    }
    int firstSet() const {
        if (lo) return std::countr_zero(lo);
        return 64 + std::countr_zero(hi);
    }
    bool containsAll(Mask128 m) const { return (m.lo & ~lo) == 0 && (m.hi & ~hi) == 0; }
    Mask128 minus(Mask128 m) const { return {lo & ~m.lo, hi & ~m.hi}; }

    friend bool operator==(Mask128 a, Mask128 b) { return a.lo == b.lo && a.hi == b.hi; }
};

struct Mask128Hash {
    std::size_t operator()(Mask128 m) const {
        std::uint64_t x = m.lo * 0x9e3779b97f4a7c15ull;
        x ^= (m.hi + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2));
        return static_cast<std::size_t>(x);
    }
};

// Inserting failed states is optional; dropping inserts past this limit
// keeps memory bounded without changing any result.
constexpr std::size_t kMemoLimit = std::size_t{1} << 21;

/// The whole search runs on compacted masks: bit j stands for the j-th
/// smallest ambient variable. Compaction preserves the canonical order.
class IntervalSearch {
public:
    IntervalSearch(const SupportPoset& poset, int k)
        : k_(k), vars_(poset.ambient.members()) {
        const int m = static_cast<int>(vars_.size());
        elementOf_.assign(std::size_t{1} << m, -1);
        for (const VarSet& e : poset.elements) {
            elements_.push_back(compact(e));
            sizes_.push_back(e.size());
        }
        for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
            elementOf_[elements_[i]] = i;
    }

    std::optional<IntervalPartition> run() {
        Mask128 uncovered;
        for (int i = 0; i < static_cast<int>(elements_.size()); ++i) uncovered.set(i);
        if (!search(uncovered)) return std::nullopt;
        IntervalPartition p;
        for (const auto& [b, t] : chosen_) p.intervals.push_back({expand(b), expand(t)});
        return p;
    }

private:
    std::uint32_t compact(VarSet s) const {
        std::uint32_t out = 0;
        for (std::size_t j = 0; j < vars_.size(); ++j)
            if (s.contains(vars_[j])) out |= (1u << j);
        return out;
    }

    VarSet expand(std::uint32_t mask) const {
        VarSet s;
        for (std::size_t j = 0; j < vars_.size(); ++j)
            if ((mask >> j) & 1u) s.insert(vars_[j]);
        return s;
    }

    /// All elements of [bottom, top] as a cover mask.
    Mask128 intervalMask(std::uint32_t bottom, std::uint32_t top) const {
        Mask128 m;
        std::uint32_t extra = top & ~bottom;
        for (std::uint32_t s = extra;; s = (s - 1) & extra) {
            m.set(elementOf_[bottom | s]);
            if (s == 0) break;
        }
        return m;
    }

    bool admissibleTop(int tIdx, int bIdx, Mask128 uncovered) const {
        if (sizes_[tIdx] < std::max(k_, sizes_[bIdx])) return false;
        std::uint32_t b = elements_[bIdx], t = elements_[tIdx];
        if ((b & ~t) != 0) return false;
        return uncovered.containsAll(intervalMask(b, t));
    }

    bool hasAdmissibleTop(int bIdx, Mask128 uncovered) const {
        for (int t = static_cast<int>(elements_.size()) - 1; t >= bIdx; --t)
            if (admissibleTop(t, bIdx, uncovered)) return true;
        return false;
    }

    bool search(Mask128 uncovered) {
        if (uncovered.none()) return true;
        if (failed_.contains(uncovered)) return false;

        // every uncovered element of minimal cardinality has to bottom its
        // own interval, so each must still admit a top
        const int first = uncovered.firstSet();
        const int minCard = sizes_[first];
        for (int i = first; i < static_cast<int>(elements_.size()) && sizes_[i] == minCard; ++i) {
            if (!uncovered.test(i)) continue;
            if (!hasAdmissibleTop(i, uncovered)) {
                memoFail(uncovered);
                return false;
            }
        }

        for (int t = static_cast<int>(elements_.size()) - 1; t >= first; --t) {
            if (!admissibleTop(t, first, uncovered)) continue;
            Mask128 cover = intervalMask(elements_[first], elements_[t]);
            chosen_.emplace_back(elements_[first], elements_[t]);
            if (search(uncovered.minus(cover))) return true;
            chosen_.pop_back();
        }
        memoFail(uncovered);
        return false;
    }

    void memoFail(Mask128 uncovered) {
        if (failed_.size() < kMemoLimit) failed_.insert(uncovered);
    }

    int k_;
    std::vector<int> vars_;
    std::vector<std::uint32_t> elements_; // compact masks, canonical order
    std::vector<int> sizes_;
    std::vector<int> elementOf_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> chosen_;
    std::unordered_set<Mask128, Mask128Hash> failed_;
};

} // namespace

SupportPoset buildPoset(const SqfIdeal& ideal, VarSet ambient, const SolverOptions& opts) {
    if (opts.cap < 1 || opts.cap > kSolverCapLimit)
        throw std::invalid_argument("solver: cap must be in [1, " +
                                    std::to_string(kSolverCapLimit) + "]");
    if (ambient.size() > opts.cap)
        throw std::invalid_argument(
            "solver: ambient has " + std::to_string(ambient.size()) +
            " variables, above the cap of " + std::to_string(opts.cap) +
            "; raise the cap (at most " + std::to_string(kSolverCapLimit) +
            ") or shrink the ideal");
    if (!ambient.subsetOf(VarSet::full(ideal.context().variableCount())))
        throw std::invalid_argument("solver: ambient exceeds the ring");
    for (const VarSet& g : ideal.generators())
        if (!g.subsetOf(ambient))
            throw std::invalid_argument("solver: generator outside the ambient variables");

    SupportPoset poset{ideal.context(), ambient, {}};
    const std::vector<int> vars = ambient.members();
    const std::uint32_t count = std::uint32_t{1} << vars.size();
    for (std::uint32_t m = 1; m < count; ++m) {
        VarSet s;
        for (std::size_t j = 0; j < vars.size(); ++j)
            if ((m >> j) & 1u) s.insert(vars[j]);
        if (ideal.containsSupport(s)) poset.elements.push_back(s);
    }
    std::sort(poset.elements.begin(), poset.elements.end(), canonicalLess);
    return poset;
}

SupportPoset buildPoset(const SqfIdeal& ideal, const SolverOptions& opts) {
    return buildPoset(ideal, VarSet::full(ideal.context().variableCount()), opts);
}

std::optional<IntervalPartition> decideAtLeast(const SupportPoset& poset, int k) {
    if (k < 1 || k > poset.ambient.size())
        throw std::invalid_argument("decideAtLeast: k must be in [1, |ambient|]");
    return IntervalSearch(poset, k).run();
}

StanleyDecomposition partitionToDecomposition(const SqfIdeal& ideal, VarSet ambient,
                                              const IntervalPartition& partition) {
    std::vector<StanleySpace> spaces;
    spaces.reserve(partition.intervals.size());
    for (const Interval& iv : partition.intervals)
        spaces.push_back({Monomial::fromSupport(ideal.context(), iv.bottom), iv.top});
    return StanleyDecomposition(ideal, ambient, std::move(spaces));
}

ExactSdepthResult exactSdepth(const SqfIdeal& ideal, VarSet ambient, const SolverOptions& opts) {
    if (ideal.isZero())
        throw std::invalid_argument("exactSdepth: the zero ideal has no Stanley decomposition");
    SupportPoset poset = buildPoset(ideal, ambient, opts);

    std::optional<IntervalPartition> best = decideAtLeast(poset, 1);
    int value = 1; // a nonzero ideal always admits the all-singletons partition
    for (int k = 2; k <= ambient.size(); ++k) {
        std::optional<IntervalPartition> next = decideAtLeast(poset, k);
        if (!next) break;
        best = std::move(next);
        value = k;
    }
    return {value, partitionToDecomposition(ideal, ambient, *best)};
}

ExactSdepthResult exactSdepth(const SqfIdeal& ideal, const SolverOptions& opts) {
    return exactSdepth(ideal, VarSet::full(ideal.context().variableCount()), opts);
}

} // namespace stanley
