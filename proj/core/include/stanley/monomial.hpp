#ifndef STANLEY_MONOMIAL_HPP
#define STANLEY_MONOMIAL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "stanley/context.hpp"
#include "stanley/varset.hpp"

namespace stanley {

/// A monomial in K[x_1..x_n], stored as its exponent vector.
class Monomial {
public:
    Monomial(PolyContext ctx, std::vector<int> exponents)
        : ctx_(ctx), exps_(std::move(exponents)) {
        if (static_cast<int>(exps_.size()) != ctx_.variableCount())
            throw std::invalid_argument("Monomial: exponent vector length must equal n");
        for (int e : exps_)
            if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    /// The squarefree monomial x^s.
    static Monomial fromSupport(PolyContext ctx, VarSet s) {
        std::vector<int> exps(static_cast<std::size_t>(ctx.variableCount()), 0);
        for (int i : s.members()) {
            if (i > ctx.variableCount())
                throw std::invalid_argument("Monomial: support index exceeds n");
            exps[static_cast<std::size_t>(i - 1)] = 1;
        }
        return Monomial(ctx, std::move(exps));
    }

    static Monomial one(PolyContext ctx) {
        return Monomial(ctx, std::vector<int>(static_cast<std::size_t>(ctx.variableCount()), 0));
    }

    PolyContext context() const { return ctx_; }
    const std::vector<int>& exponents() const { return exps_; }
    int exponent(int i) const { return exps_[static_cast<std::size_t>(i - 1)]; }

    VarSet support() const {
        VarSet s;
        for (int i = 1; i <= ctx_.variableCount(); ++i)
            if (exponent(i) > 0) s.insert(i);
        return s;
    }

    bool isSquarefree() const {
        for (int e : exps_)
            if (e > 1) return false;
        return true;
    }

    bool isOne() const { return support().empty(); }

    Monomial times(const Monomial& other) const {
        if (ctx_ != other.ctx_)
            throw std::invalid_argument("Monomial: context mismatch in product");
        std::vector<int> exps(exps_);
        for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += other.exps_[i];
        return Monomial(ctx_, std::move(exps));
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.ctx_ == b.ctx_ && a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    /// "x1x3^2", "1" for the unit.
    std::string toString() const {
        std::string out;
        for (int i = 1; i <= ctx_.variableCount(); ++i) {
            int e = exponent(i);
            if (e == 0) continue;
            out += "x" + std::to_string(i);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out.empty() ? "1" : out;
    }

private:
    PolyContext ctx_;
    std::vector<int> exps_;
};

/// Exponent-vector lexicographic order; ties broken nowhere (total on fixed n).
inline bool lexLess(const Monomial& a, const Monomial& b) {
    return a.exponents() < b.exponents();
}

} // namespace stanley

#endif
