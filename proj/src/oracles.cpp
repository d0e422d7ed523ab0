#include "preisach/oracles.hpp"

#include <algorithm>
#include <vector>

namespace preisach {

namespace {

void extend(const Permutation& rho, std::vector<std::size_t>& current, std::size_t next_pos, std::size_t budget,
            SubsequenceSet& out) {
    for (std::size_t pos = next_pos; pos <= rho.size(); ++pos) {
        const std::size_t v = rho.at(pos);
        if (!current.empty() && v <= current.back()) continue;
        current.push_back(v);
        out.emplace(rho, current);
        if (out.size() > budget) throw BudgetExceeded("enumeration budget exceeded");
        extend(rho, current, pos + 1, budget, out);
        current.pop_back();
    }
}

}  // namespace

SubsequenceSet enumerate_increasing(const Permutation& rho, std::size_t budget) {
    SubsequenceSet out{IncreasingSubsequence{}};
    std::vector<std::size_t> current;
    extend(rho, current, 1, budget, out);
    return out;
}

BigCount count_increasing(const Permutation& rho) {
    const auto values = rho.values();
    std::vector<BigCount> ending_at(values.size());
    BigCount total = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
        ending_at[i] = 1;
        for (std::size_t j = 0; j < i; ++j) {
            if (values[j] < values[i]) ending_at[i] += ending_at[j];
        }
        total += ending_at[i];
    }
    return total;
}

std::size_t lis_patience(const Permutation& rho) {
    std::vector<std::size_t> tops;
    for (std::size_t v : rho.values()) {
        auto it = std::lower_bound(tops.begin(), tops.end(), v);
        if (it == tops.end()) {
            tops.push_back(v);
        } else {
            *it = v;
        }
    }
    return tops.size();
}

std::size_t lis_bruteforce(const Permutation& rho) {
    const std::size_t n = rho.size();
    if (n > kBruteforceLimit) throw Error("size limit exceeded: brute force LIS needs N <= 12");
    const auto values = rho.values();
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::size_t last = 0;
        std::size_t len = 0;
        bool increasing = true;
        for (std::size_t i = 0; i < n && increasing; ++i) {
            if (!(mask >> i & 1u)) continue;
            increasing = values[i] > last;
            last = values[i];
            ++len;
        }
        if (increasing) best = std::max(best, len);
    }
    return best;
}

}  // namespace preisach
