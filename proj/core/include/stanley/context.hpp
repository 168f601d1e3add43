#ifndef STANLEY_CONTEXT_HPP
#define STANLEY_CONTEXT_HPP

#include <stdexcept>
#include <string>

namespace stanley {

/// Hard cap on the number of ambient variables. Keeps every support
/// enumerable as a 16-bit mask; the exhaustive verifiers and oracles are
/// only meant for desk-scale inputs anyway.
inline constexpr int kMaxVariables = 16;

/// The ambient polynomial ring K[x_1..x_n], reduced to the one datum the
/// combinatorics needs: the number of variables.
class PolyContext {
public:
    explicit PolyContext(int n) : n_(n) {
        if (n < 1 || n > kMaxVariables)
            throw std::invalid_argument("PolyContext: n must be in [1, " +
                                        std::to_string(kMaxVariables) +
                                        "], got " + std::to_string(n));
    }

    int variableCount() const { return n_; }

    friend bool operator==(PolyContext a, PolyContext b) { return a.n_ == b.n_; }
    friend bool operator!=(PolyContext a, PolyContext b) { return a.n_ != b.n_; }

private:
    int n_;
};

} // namespace stanley

#endif
