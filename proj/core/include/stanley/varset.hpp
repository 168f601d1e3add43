#ifndef STANLEY_VARSET_HPP
#define STANLEY_VARSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "stanley/context.hpp"

namespace stanley {

/// A subset of the variable indices {1..n}, stored as a bitmask.
/// Doubles as a monomial prime ideal (the ideal generated by its
/// variables), a squarefree support, and a set Z of free variables.
/// Indices are 1-based everywhere in the public interface.
class VarSet {
public:
    VarSet() = default;

    static VarSet of(std::initializer_list<int> indices) {
        VarSet s;
        for (int i : indices) s.insert(i);
        return s;
    }

    static VarSet fromIndices(const std::vector<int>& indices) {
        VarSet s;
        for (int i : indices) s.insert(i);
        return s;
    }

    /// {lo, lo+1, ..., hi}; empty when lo > hi.
    static VarSet range(int lo, int hi) {
        VarSet s;
        for (int i = lo; i <= hi; ++i) s.insert(i);
        return s;
    }

    static VarSet full(int n) { return range(1, n); }

    static VarSet fromMask(std::uint32_t mask) {
        VarSet s;
        s.mask_ = mask;
        return s;
    }

    void insert(int i) {
        if (i < 1 || i > kMaxVariables)
            throw std::invalid_argument("VarSet: variable index " + std::to_string(i) +
                                        " out of range [1, " + std::to_string(kMaxVariables) + "]");
        mask_ |= (1u << (i - 1));
    }

    bool contains(int i) const {
        return i >= 1 && i <= kMaxVariables && (mask_ & (1u << (i - 1))) != 0;
    }

    int size() const { return std::popcount(mask_); }
    bool empty() const { return mask_ == 0; }
    std::uint32_t mask() const { return mask_; }

    bool subsetOf(VarSet other) const { return (mask_ & ~other.mask_) == 0; }

    VarSet unionWith(VarSet other) const { return fromMask(mask_ | other.mask_); }
    VarSet intersectWith(VarSet other) const { return fromMask(mask_ & other.mask_); }
    VarSet minus(VarSet other) const { return fromMask(mask_ & ~other.mask_); }

    /// Ascending list of member indices.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint32_t m = mask_; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    /// Smallest member, or 0 when empty.
    int least() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

    friend bool operator==(VarSet a, VarSet b) { return a.mask_ == b.mask_; }
    friend bool operator!=(VarSet a, VarSet b) { return a.mask_ != b.mask_; }

    std::string toString() const {
        std::string out = "{";
        bool first = true;
        for (int i : members()) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
        return out + "}";
    }

private:
    std::uint32_t mask_ = 0;
};

/// Canonical order: cardinality first, then lexicographic on the sorted
/// index lists ({1,3} precedes {2,3}). Used whenever generator sets,
/// poset elements or report entries need a reproducible order.
inline bool canonicalLess(VarSet a, VarSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint32_t diff = a.mask() ^ b.mask();
    if (diff == 0) return false;
    std::uint32_t low = diff & (~diff + 1);
    return (a.mask() & low) != 0;
}

/// ht(P + Q) for monomial primes: the number of variables in the union.
inline int heightSum(VarSet p, VarSet q) { return p.unionWith(q).size(); }

} // namespace stanley

#endif
