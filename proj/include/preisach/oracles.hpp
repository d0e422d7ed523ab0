#ifndef PREISACH_ORACLES_HPP
#define PREISACH_ORACLES_HPP

// Reference computations on permutations alone, with no knowledge of the
// graph. Used to check the graph-side results.

#include <cstddef>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "preisach/bijection.hpp"

namespace preisach {

using BigCount = boost::multiprecision::cpp_int;

using SubsequenceSet = std::set<IncreasingSubsequence>;

inline constexpr std::size_t kDefaultEnumerationBudget = std::size_t{1} << 20;

/// Every increasing subsequence of rho, including the empty one, by
/// positional backtracking. Throws BudgetExceeded past `budget` items.
SubsequenceSet enumerate_increasing(const Permutation& rho, std::size_t budget = kDefaultEnumerationBudget);

/// Number of increasing subsequences (including the empty one):
/// 1 + sum_i f(i), f(i) = 1 + sum_{j<i, rho_j<rho_i} f(j).
BigCount count_increasing(const Permutation& rho);

/// Longest increasing subsequence length by patience sorting.
std::size_t lis_patience(const Permutation& rho);

inline constexpr std::size_t kBruteforceLimit = 12;

/// Longest increasing subsequence length over all 2^N subsets; N <= 12.
std::size_t lis_bruteforce(const Permutation& rho);

}  // namespace preisach

#endif  // PREISACH_ORACLES_HPP
