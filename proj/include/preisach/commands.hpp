#ifndef PREISACH_COMMANDS_HPP
#define PREISACH_COMMANDS_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "preisach/oracles.hpp"

namespace preisach {

/// Outcome of checking every structural result on one permutation.
struct VerifyReport {
    Permutation perm;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    bool builders_agree = false;
    bool cardinality_ok = false;       // |V| = number of increasing subsequences
    bool bijection_ok = false;         // phi bijective onto them, both inverses agree
    bool nesting_ok = false;           // l(phi) = N(sigma) = oracle, N(G) = LIS
    bool lrpm_ok = false;              // (alpha, omega) has lRPM and its loop is V
    bool merge_identities_ok = false;  // D^{k-1}U^{N-1}alpha = D^k omega and mirror
    std::size_t nesting_of_graph = 0;
    std::size_t lis = 0;
    bool budget_exceeded = false;
    std::string error{};  // first failure detail, empty on success
    std::chrono::duration<double> elapsed{};

    bool passed() const noexcept {
        return !budget_exceeded && builders_agree && cardinality_ok && bijection_ok && nesting_ok && lrpm_ok &&
               merge_identities_ok;
    }
};

VerifyReport cmd_verify(const Permutation& rho, std::size_t max_vertices = kDefaultMaxVertices);

struct VerifyAllSummary {
    std::size_t n = 0;
    std::size_t permutations = 0;
    std::size_t total_vertices = 0;
    std::vector<std::string> failures{};  // sorted one-line permutations
};

inline constexpr std::size_t kVerifyAllLimit = 8;

/// cmd_verify over all of S_n, n in 1..8.
VerifyAllSummary cmd_verify_all(std::size_t n, unsigned threads = 1);

/// Uniform permutation of {1..n} from a Fisher-Yates shuffle driven by a
/// 64-bit Mersenne Twister keyed on (seed, index). Platform independent.
Permutation random_permutation(std::size_t n, std::uint64_t seed, std::uint64_t index);

struct StatsReport {
    std::size_t n = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double lis_mean = 0.0;
    double lis_stddev = 0.0;
    std::size_t nesting_checked = 0;  // graph built and N(G) = LIS confirmed
    std::size_t nesting_skipped = 0;  // graph over the vertex budget
    std::size_t nesting_failed = 0;
};

StatsReport cmd_stats(std::size_t n, std::size_t samples, std::uint64_t seed,
                      std::size_t max_vertices = kDefaultMaxVertices, unsigned threads = 1);

std::string to_json(const VerifyReport& r);
std::string to_json(const VerifyAllSummary& s);
std::string to_json(const StatsReport& r);

}  // namespace preisach

#endif  // PREISACH_COMMANDS_HPP
