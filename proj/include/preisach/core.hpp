#ifndef PREISACH_CORE_HPP
#define PREISACH_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace preisach {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A build or enumeration would exceed its configured size budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An internal invariant that the theory guarantees was found broken.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// 1-based spin index (also used as edge label and permutation value).
using SpinIndex = std::size_t;

/// A permutation of {1,...,n} stored in one-line notation.
class Permutation {
public:
    /// Validates that `values` is a bijection of {1,...,n}; throws Error naming
    /// the first offending value otherwise.
    explicit Permutation(std::vector<std::size_t> values);

    static Permutation identity(std::size_t n);
    static Permutation reversal(std::size_t n);

    std::size_t size() const noexcept { return values_.size(); }

    /// rho_pos for 1-based `pos`.
    std::size_t at(std::size_t pos) const { return values_.at(pos - 1); }

    /// 1-based position of `value`.
    std::size_t position_of(std::size_t value) const { return positions_.at(value - 1); }

    std::span<const std::size_t> values() const noexcept { return values_; }

    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> values_;
    std::vector<std::size_t> positions_;
};

Permutation make_permutation(std::span<const std::size_t> values);

/// rho^{-1}, so that invert(rho).at(rho.at(i)) == i.
Permutation invert(const Permutation& rho);

/// The entries of rho that are <= n, kept in their relative order.
Permutation restrict_to_values(const Permutation& rho, std::size_t n);

/// rho with its largest entry removed.
Permutation remove_largest(const Permutation& rho);

/// The first k entries of rho, relabeled to {1,...,k} by rank.
Permutation prefix_pattern(const Permutation& rho, std::size_t k);

/// A configuration of n Ising spins, each -1 or +1.
///
/// Ordering compares spins left to right with -1 < +1.
class SpinConfig {
public:
    SpinConfig() = default;

    /// Throws Error if a spin is not in {-1,+1}.
    explicit SpinConfig(std::vector<std::int8_t> spins);

    static SpinConfig alpha(std::size_t n) { return SpinConfig(n, -1); }
    static SpinConfig omega(std::size_t n) { return SpinConfig(n, +1); }

    std::size_t size() const noexcept { return spins_.size(); }

    /// Spin at 1-based index i.
    int spin(SpinIndex i) const { return spins_.at(i - 1); }

    bool is_up(SpinIndex i) const { return spin(i) > 0; }

    std::size_t up_count() const noexcept;

    bool is_alpha() const noexcept;
    bool is_omega() const noexcept;

    /// Copy with spin i flipped.
    SpinConfig flipped(SpinIndex i) const;

    /// Copy with spin i set to `value`.
    SpinConfig with_spin(SpinIndex i, int value) const;

    /// Copy extended by one trailing spin.
    SpinConfig extended(int value) const;

    /// Copy with the last spin dropped.
    SpinConfig truncated() const;

    /// Sign string, e.g. "+-+".
    std::string to_string() const;

    std::span<const std::int8_t> spins() const noexcept { return spins_; }

    friend bool operator==(const SpinConfig&, const SpinConfig&) = default;
    friend auto operator<=>(const SpinConfig& a, const SpinConfig& b) { return a.spins_ <=> b.spins_; }

private:
    SpinConfig(std::size_t n, std::int8_t value) : spins_(n, value) {}

    std::vector<std::int8_t> spins_;
};

/// Canonical vertex order: number of +1 spins first, then spin sequence.
bool canonical_less(const SpinConfig& a, const SpinConfig& b);

struct SpinConfigHash {
    std::size_t operator()(const SpinConfig& s) const noexcept;
};

/// Smallest index with spin -1, or nullopt for omega.
std::optional<SpinIndex> i_plus(const SpinConfig& sigma);

/// rho_r for the first position r (in rho's order) whose spin is +1, or
/// nullopt for alpha.
std::optional<SpinIndex> i_minus(const SpinConfig& sigma, const Permutation& rho);

/// U map; omega is a fixed point.
SpinConfig apply_U(const SpinConfig& sigma, const Permutation& rho);

/// D map; alpha is a fixed point.
SpinConfig apply_D(const SpinConfig& sigma, const Permutation& rho);

}  // namespace preisach

template <>
struct std::hash<preisach::SpinConfig> : preisach::SpinConfigHash {};

#endif  // PREISACH_CORE_HPP
