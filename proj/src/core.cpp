#include "preisach/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace preisach {

Permutation::Permutation(std::vector<std::size_t> values) : values_(std::move(values)) {
    const std::size_t n = values_.size();
    if (n == 0) throw Error("empty permutation");
    positions_.assign(n, 0);
    for (std::size_t pos = 1; pos <= n; ++pos) {
        const std::size_t v = values_[pos - 1];
        if (v < 1 || v > n) {
            throw Error("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        }
        if (positions_[v - 1] != 0) throw Error("duplicate value " + std::to_string(v));
        positions_[v - 1] = pos;
    }
    // n values, none out of range, none duplicated: nothing can be missing.
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{1});
    return Permutation(std::move(v));
}

Permutation Permutation::reversal(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.rbegin(), v.rend(), std::size_t{1});
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
    os << ')';
    return os.str();
}

Permutation make_permutation(std::span<const std::size_t> values) {
    return Permutation(std::vector<std::size_t>(values.begin(), values.end()));
}

Permutation invert(const Permutation& rho) {
    std::vector<std::size_t> inv(rho.size());
    for (std::size_t v = 1; v <= rho.size(); ++v) inv[v - 1] = rho.position_of(v);
    return Permutation(std::move(inv));
}

Permutation restrict_to_values(const Permutation& rho, std::size_t n) {
    if (n < 1 || n > rho.size()) throw Error("restriction size out of range");
    std::vector<std::size_t> out;
    out.reserve(n);
    for (std::size_t v : rho.values()) {
        if (v <= n) out.push_back(v);
    }
    return Permutation(std::move(out));
}

Permutation remove_largest(const Permutation& rho) {
    if (rho.size() < 2) throw Error("cannot remove the only entry");
    return restrict_to_values(rho, rho.size() - 1);
}

Permutation prefix_pattern(const Permutation& rho, std::size_t k) {
    if (k < 1 || k > rho.size()) throw Error("prefix length out of range");
    std::vector<std::size_t> head(rho.values().begin(), rho.values().begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<std::size_t> sorted = head;
    std::sort(sorted.begin(), sorted.end());
    for (auto& v : head) {
        v = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
    }
    return Permutation(std::move(head));
}

SpinConfig::SpinConfig(std::vector<std::int8_t> spins) : spins_(std::move(spins)) {
    for (auto s : spins_) {
        if (s != -1 && s != 1) throw Error("spin value must be -1 or +1");
    }
}

std::size_t SpinConfig::up_count() const noexcept {
    return static_cast<std::size_t>(std::count(spins_.begin(), spins_.end(), std::int8_t{1}));
}

bool SpinConfig::is_alpha() const noexcept {
    return std::all_of(spins_.begin(), spins_.end(), [](auto s) { return s < 0; });
}

bool SpinConfig::is_omega() const noexcept {
    return std::all_of(spins_.begin(), spins_.end(), [](auto s) { return s > 0; });
}

SpinConfig SpinConfig::flipped(SpinIndex i) const {
    SpinConfig out = *this;
    auto& s = out.spins_.at(i - 1);
    s = static_cast<std::int8_t>(-s);
    return out;
}

SpinConfig SpinConfig::with_spin(SpinIndex i, int value) const {
    if (value != -1 && value != 1) throw Error("spin value must be -1 or +1");
    SpinConfig out = *this;
    out.spins_.at(i - 1) = static_cast<std::int8_t>(value);
    return out;
}

SpinConfig SpinConfig::extended(int value) const {
    if (value != -1 && value != 1) throw Error("spin value must be -1 or +1");
    SpinConfig out = *this;
    out.spins_.push_back(static_cast<std::int8_t>(value));
    return out;
}

SpinConfig SpinConfig::truncated() const {
    if (spins_.empty()) throw Error("cannot truncate an empty configuration");
    SpinConfig out = *this;
    out.spins_.pop_back();
    return out;
}

std::string SpinConfig::to_string() const {
    std::string out;
    out.reserve(spins_.size());
    for (auto s : spins_) out.push_back(s > 0 ? '+' : '-');
    return out;
}

bool canonical_less(const SpinConfig& a, const SpinConfig& b) {
    const auto ua = a.up_count();
    const auto ub = b.up_count();
    if (ua != ub) return ua < ub;
    return a < b;
}

std::size_t SpinConfigHash::operator()(const SpinConfig& s) const noexcept {
    // FNV-1a over the spin bytes
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : s.spins()) {
        h ^= static_cast<std::uint8_t>(v);
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ s.size());
}

namespace {

void require_same_size(const SpinConfig& sigma, const Permutation& rho) {
    if (sigma.size() != rho.size()) {
        throw Error("dimension mismatch: configuration has " + std::to_string(sigma.size()) +
                    " spins, permutation has " + std::to_string(rho.size()));
    }
}

}  // namespace

std::optional<SpinIndex> i_plus(const SpinConfig& sigma) {
    const auto spins = sigma.spins();
    for (std::size_t i = 0; i < spins.size(); ++i) {
        if (spins[i] < 0) return i + 1;
    }
    return std::nullopt;
}

std::optional<SpinIndex> i_minus(const SpinConfig& sigma, const Permutation& rho) {
    require_same_size(sigma, rho);
    for (std::size_t v : rho.values()) {
        if (sigma.is_up(v)) return v;
    }
    return std::nullopt;
}

SpinConfig apply_U(const SpinConfig& sigma, const Permutation& rho) {
    require_same_size(sigma, rho);
    const auto i = i_plus(sigma);
    return i ? sigma.flipped(*i) : sigma;
}

SpinConfig apply_D(const SpinConfig& sigma, const Permutation& rho) {
    const auto i = i_minus(sigma, rho);
    return i ? sigma.flipped(*i) : sigma;
}

}  // namespace preisach
