#include "plurizero/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace plurizero {

int MultiIndex::total_degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool grlex_less(const MultiIndex& a, const MultiIndex& b) {
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(a.exponents.begin(), a.exponents.end(),
                                        b.exponents.begin(), b.exponents.end());
}

namespace {

void enumerate_degree(int num_vars, int degree, std::vector<int>& current, int pos,
                      int remaining, std::vector<MultiIndex>& out) {
    if (pos == num_vars - 1) {
        current[pos] = remaining;
        out.emplace_back(current);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        current[pos] = e;
        enumerate_degree(num_vars, degree, current, pos + 1, remaining - e, out);
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_multi_indices(int num_vars, int max_degree) {
    if (num_vars < 1) throw std::invalid_argument("enumerate_multi_indices: num_vars must be >= 1");
    if (max_degree < 0) throw std::invalid_argument("enumerate_multi_indices: max_degree must be >= 0");
    std::vector<MultiIndex> out;
    out.reserve(space_dimension(num_vars, max_degree));
    std::vector<int> current(num_vars, 0);
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<MultiIndex> level;
        enumerate_degree(num_vars, d, current, 0, d, level);
        std::sort(level.begin(), level.end(), GrlexLess{});
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::uint64_t space_dimension(int num_vars, int degree) {
    if (num_vars < 1) throw std::invalid_argument("space_dimension: num_vars must be >= 1");
    if (degree < 0) throw std::invalid_argument("space_dimension: degree must be >= 0");
    // C(m+n, n) by the multiplicative formula, overflow-checked at each step.
    const std::uint64_t m = static_cast<std::uint64_t>(num_vars);
    const std::uint64_t n = static_cast<std::uint64_t>(degree);
    const std::uint64_t k = std::min(m, n);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t factor = m + n - k + i;
        std::uint64_t prod;
        if (__builtin_mul_overflow(result, factor, &prod)) {
            throw std::overflow_error("space_dimension overflow: C(" + std::to_string(m + n) +
                                      ", " + std::to_string(n) + ") exceeds 64 bits");
        }
        result = prod / i;  // divides exactly: prod is i consecutive binomial steps
    }
    return result;
}

}  // namespace plurizero
