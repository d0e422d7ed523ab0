#include "preisach/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include <json.hpp>

#include "preisach/graph.hpp"

namespace preisach {

namespace {

// Runs fn(i) for i in [0, count) on up to `threads` workers. Callers write
// results into per-index slots, so the outcome does not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    workers.clear();
    if (failure) std::rethrow_exception(failure);
}

SpinConfig iterate(const Permutation& rho, SpinConfig s, EdgeKind kind, std::size_t times) {
    for (std::size_t i = 0; i < times; ++i) s = kind == EdgeKind::U ? apply_U(s, rho) : apply_D(s, rho);
    return s;
}

bool merge_identities_hold(const Permutation& rho) {
    const std::size_t n = rho.size();
    const auto alpha = SpinConfig::alpha(n);
    const auto omega = SpinConfig::omega(n);
    const std::size_t k = rho.position_of(n);
    const std::size_t q = rho.at(n);
    using enum EdgeKind;
    // D^{k-1} U^{N-1} alpha = D^k U^N alpha = D^k omega
    const auto a1 = iterate(rho, iterate(rho, alpha, U, n - 1), D, k - 1);
    const auto a2 = iterate(rho, iterate(rho, alpha, U, n), D, k);
    const auto a3 = iterate(rho, omega, D, k);
    // U^{q-1} D^{N-1} omega = U^q D^N omega = U^q alpha
    const auto b1 = iterate(rho, iterate(rho, omega, D, n - 1), U, q - 1);
    const auto b2 = iterate(rho, iterate(rho, omega, D, n), U, q);
    const auto b3 = iterate(rho, alpha, U, q);
    return a1 == a2 && a2 == a3 && b1 == b2 && b2 == b3;
}

void note(VerifyReport& r, bool ok, const std::string& what) {
    if (!ok && r.error.empty()) r.error = what;
}

}  // namespace

VerifyReport cmd_verify(const Permutation& rho, std::size_t max_vertices) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport r{.perm = rho};
    r.lis = lis_patience(rho);
    try {
        const auto g = build_bfs(rho, max_vertices);
        r.vertex_count = g.vertex_count();
        r.edge_count = g.edge_count();

        r.builders_agree = build_forward(rho, max_vertices) == g && r.edge_count == 2 * r.vertex_count - 2;
        note(r, r.builders_agree, "builders disagree");

        const BigCount count = count_increasing(rho);
        r.cardinality_ok = count == r.vertex_count;
        note(r, r.cardinality_ok, "|V| != number of increasing subsequences");

        const Bijection phi(g);
        r.bijection_ok = phi.injective();
        if (r.bijection_ok && count <= kDefaultEnumerationBudget) {
            const auto expected = enumerate_increasing(rho);
            SubsequenceSet image;
            for (const auto& v : g.vertices()) image.insert(phi.phi(v));
            r.bijection_ok = image == expected;
        }
        const auto oracle = nesting_degrees_oracle(rho, max_vertices);
        r.nesting_ok = oracle.size() == g.vertex_count();
        for (const auto& v : g.vertices()) {
            const auto& s = phi.phi(v);
            if (phi.inverse(s) != v || phi_inverse_constructive(rho, s) != v) r.bijection_ok = false;
            const auto it = oracle.find(v);
            const std::size_t degree = phi.nesting_degree(v);
            if (s.length() != degree || it == oracle.end() || it->second != degree) r.nesting_ok = false;
        }
        note(r, r.bijection_ok, "phi is not a bijection onto the increasing subsequences");
        r.nesting_of_graph = phi.max_nesting_degree();
        r.nesting_ok = r.nesting_ok && r.nesting_of_graph == r.lis;
        note(r, r.nesting_ok, "nesting degrees disagree");

        const auto whole = cycle_of(rho, g.alpha(), g.omega());
        const auto loop = loop_vertices(rho, whole);
        r.lrpm_ok = check_lrpm(rho, whole) &&
                    std::equal(loop.begin(), loop.end(), g.vertices().begin(), g.vertices().end());
        note(r, r.lrpm_ok, "(alpha, omega) lacks lRPM or its loop is not V");

        r.merge_identities_ok = merge_identities_hold(rho);
        note(r, r.merge_identities_ok, "merge identities fail");
    } catch (const BudgetExceeded& e) {
        r.budget_exceeded = true;
        r.error = e.what();
    } catch (const Error& e) {
        // invariant violations surface here; the failed flags stay false
        r.error = e.what();
    }
    r.elapsed = std::chrono::steady_clock::now() - start;
    return r;
}

VerifyAllSummary cmd_verify_all(std::size_t n, unsigned threads) {
    if (n < 1) throw Error("n must be positive");
    if (n > kVerifyAllLimit) throw Error("n too large (max " + std::to_string(kVerifyAllLimit) + ")");
    std::vector<Permutation> perms;
    std::vector<std::size_t> values(n);
    std::iota(values.begin(), values.end(), std::size_t{1});
    do {
        perms.emplace_back(values);
    } while (std::next_permutation(values.begin(), values.end()));

    std::vector<VerifyReport> reports(perms.size(), VerifyReport{.perm = perms.front()});
    parallel_for(perms.size(), threads, [&](std::size_t i) { reports[i] = cmd_verify(perms[i]); });

    VerifyAllSummary s{.n = n, .permutations = perms.size()};
    for (const auto& r : reports) {
        s.total_vertices += r.vertex_count;
        if (!r.passed()) s.failures.push_back(r.perm.to_string());
    }
    return s;
}

Permutation random_permutation(std::size_t n, std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 gen(seq);
    // unbiased draw from [0, range): reject the low 2^64 mod range outcomes
    auto below = [&gen](std::uint64_t range) {
        const std::uint64_t threshold = (0 - range) % range;
        while (true) {
            const std::uint64_t r = gen();
            if (r >= threshold) return r % range;
        }
    };
    std::vector<std::size_t> values(n);
    std::iota(values.begin(), values.end(), std::size_t{1});
    for (std::size_t i = n; i > 1; --i) std::swap(values[i - 1], values[below(i)]);
    return Permutation(std::move(values));
}

StatsReport cmd_stats(std::size_t n, std::size_t samples, std::uint64_t seed, std::size_t max_vertices,
                      unsigned threads) {
    if (samples < 1) throw Error("samples must be at least 1");
    enum class Nesting : std::uint8_t { Checked, Skipped, Failed };
    std::vector<std::size_t> lis(samples);
    std::vector<Nesting> nesting(samples);
    parallel_for(samples, threads, [&](std::size_t i) {
        const auto rho = random_permutation(n, seed, i);
        lis[i] = lis_patience(rho);
        if (count_increasing(rho) > max_vertices) {
            nesting[i] = Nesting::Skipped;
            return;
        }
        nesting[i] = nesting_of_graph(build_bfs(rho, max_vertices)) == lis[i] ? Nesting::Checked : Nesting::Failed;
    });

    StatsReport r{.n = n, .samples = samples, .seed = seed};
    double sum = 0.0;
    for (auto v : lis) sum += static_cast<double>(v);
    r.lis_mean = sum / static_cast<double>(samples);
    double squares = 0.0;
    for (auto v : lis) squares += (static_cast<double>(v) - r.lis_mean) * (static_cast<double>(v) - r.lis_mean);
    r.lis_stddev = samples > 1 ? std::sqrt(squares / static_cast<double>(samples - 1)) : 0.0;
    for (auto s : nesting) {
        if (s == Nesting::Checked) ++r.nesting_checked;
        if (s == Nesting::Skipped) ++r.nesting_skipped;
        if (s == Nesting::Failed) ++r.nesting_failed;
    }
    return r;
}

std::string to_json(const VerifyReport& r) {
    nlohmann::ordered_json doc;
    doc["perm"] = std::vector<std::size_t>(r.perm.values().begin(), r.perm.values().end());
    doc["vertex_count"] = r.vertex_count;
    doc["edge_count"] = r.edge_count;
    doc["builders_agree"] = r.builders_agree;
    doc["cardinality_ok"] = r.cardinality_ok;
    doc["bijection_ok"] = r.bijection_ok;
    doc["nesting_ok"] = r.nesting_ok;
    doc["lrpm_ok"] = r.lrpm_ok;
    doc["merge_identities_ok"] = r.merge_identities_ok;
    doc["nesting_of_graph"] = r.nesting_of_graph;
    doc["lis"] = r.lis;
    doc["budget_exceeded"] = r.budget_exceeded;
    if (!r.error.empty()) doc["error"] = r.error;
    doc["elapsed_ms"] = std::round(r.elapsed.count() * 1e6) / 1e3;
    doc["passed"] = r.passed();
    return doc.dump(2);
}

std::string to_json(const VerifyAllSummary& s) {
    nlohmann::ordered_json doc;
    doc["n"] = s.n;
    doc["permutations"] = s.permutations;
    doc["total_vertices"] = s.total_vertices;
    doc["failures"] = s.failures;
    return doc.dump(2);
}

std::string to_json(const StatsReport& r) {
    nlohmann::ordered_json doc;
    doc["n"] = r.n;
    doc["samples"] = r.samples;
    doc["seed"] = r.seed;
    doc["lis_mean"] = r.lis_mean;
    doc["lis_stddev"] = r.lis_stddev;
    doc["nesting_checked"] = r.nesting_checked;
    doc["nesting_skipped"] = r.nesting_skipped;
    doc["nesting_failed"] = r.nesting_failed;
    return doc.dump(2);
}

}  // namespace preisach
