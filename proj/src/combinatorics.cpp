#include "combinatorics.hpp"

#include <stdexcept>

#include "rational.hpp"

namespace pda {

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i; // exact at every step: r is C(n-k+i, i)
        if (r > INT64_MAX)
            throw std::overflow_error("binomial: value exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(r);
}

std::int64_t ipow(std::int64_t base, int exp) {
    if (exp < 0)
        throw std::invalid_argument("ipow: negative exponent");
    __int128 r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > INT64_MAX || r < INT64_MIN)
            throw std::overflow_error("ipow: value exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(r);
}

std::int64_t colex_rank(std::span<const int> subset) {
    __int128 rank = 1;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 1 || (i > 0 && subset[i] <= subset[i - 1]))
            throw std::invalid_argument("colex_rank: subset must be strictly increasing and positive");
        rank += binomial(subset[i] - 1, static_cast<int>(i) + 1);
        if (rank > INT64_MAX)
            throw std::overflow_error("colex_rank: rank exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(rank);
}

void for_each_subset(int n, int k, const std::function<void(std::span<const int>)>& fn) {
    if (k < 0 || k > n)
        return;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i + 1;
    while (true) {
        fn(std::span<const int>(cur));
        // advance to the next combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i))
            --i;
        if (i < 0)
            return;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
}

} // namespace pda
