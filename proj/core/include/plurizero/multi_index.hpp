#ifndef PLURIZERO_MULTI_INDEX_HPP
#define PLURIZERO_MULTI_INDEX_HPP

#include <cstdint>
#include <vector>

namespace plurizero {

/// Exponent vector of a monomial in m complex variables.
struct MultiIndex {
    std::vector<int> exponents;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : exponents(std::move(e)) {}

    int num_vars() const { return static_cast<int>(exponents.size()); }
    int total_degree() const;

    bool operator==(const MultiIndex& other) const { return exponents == other.exponents; }
};

/// Graded lexicographic order: total degree first, then lex on exponents.
/// Total and stable, so basis enumeration is deterministic across runs.
bool grlex_less(const MultiIndex& a, const MultiIndex& b);

struct GrlexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return grlex_less(a, b); }
};

/// All multi-indices in m variables of total degree <= n, in grlex order.
std::vector<MultiIndex> enumerate_multi_indices(int num_vars, int max_degree);

/// dim P_n = C(m+n, n). Throws std::overflow_error instead of wrapping.
std::uint64_t space_dimension(int num_vars, int degree);

}  // namespace plurizero

#endif
