#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace pda {

/// C(n, k) with overflow checking; 0 when k < 0 or k > n.
std::int64_t binomial(int n, int k);

/// base^exp with overflow checking; exp >= 0.
std::int64_t ipow(std::int64_t base, int exp);

/// Colexicographic rank (1-based) of a k-subset of positive integers.
/// `subset` must be strictly increasing. The rank only depends on the
/// elements, not on a ground-set size: rank = 1 + sum_i C(x_i - 1, i).
std::int64_t colex_rank(std::span<const int> subset);

/// Visits every k-subset of {1..n} exactly once, in lexicographic order
/// of the increasing element lists. k = 0 visits the empty subset once.
void for_each_subset(int n, int k, const std::function<void(std::span<const int>)>& fn);

} // namespace pda
