#ifndef PREISACH_GRAPH_HPP
#define PREISACH_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "preisach/core.hpp"

namespace preisach {

inline constexpr std::size_t kDefaultMaxVertices = std::size_t{1} << 20;

enum class EdgeKind { U, D };

constexpr EdgeKind other(EdgeKind k) noexcept { return k == EdgeKind::U ? EdgeKind::D : EdgeKind::U; }
constexpr char to_char(EdgeKind k) noexcept { return k == EdgeKind::U ? 'U' : 'D'; }

/// A single U or D transition; `label` is the index of the flipped spin.
struct LabeledEdge {
    SpinConfig from;
    SpinConfig to;
    EdgeKind kind = EdgeKind::U;
    SpinIndex label = 0;

    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// Immutable Preisach graph of a permutation.
///
/// Vertices are kept in canonical order (see canonical_less). Every vertex but
/// omega has one outgoing U-edge, every vertex but alpha one outgoing D-edge;
/// the fixed-point transitions are not stored. The constructor validates all
/// structural invariants and throws Error on violation, so any graph that
/// exists is well formed (though not necessarily equal to G(rho)).
class PreisachGraph {
public:
    PreisachGraph(Permutation perm, std::vector<SpinConfig> vertices, std::vector<LabeledEdge> edges);

    const Permutation& perm() const noexcept { return perm_; }
    std::size_t spin_count() const noexcept { return perm_.size(); }

    std::span<const SpinConfig> vertices() const noexcept { return vertices_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const SpinConfig& alpha() const noexcept { return vertices_.front(); }
    const SpinConfig& omega() const noexcept { return vertices_.back(); }

    bool contains(const SpinConfig& s) const { return index_.contains(s); }
    std::optional<std::size_t> index_of(const SpinConfig& s) const;

    /// Outgoing U-edge of s, or nullptr (s == omega or s not a vertex).
    const LabeledEdge* u_edge(const SpinConfig& s) const;
    /// Outgoing D-edge of s, or nullptr (s == alpha or s not a vertex).
    const LabeledEdge* d_edge(const SpinConfig& s) const;
    const LabeledEdge* edge(const SpinConfig& s, EdgeKind kind) const {
        return kind == EdgeKind::U ? u_edge(s) : d_edge(s);
    }

    /// All edges: by source vertex in canonical order, U before D.
    std::vector<LabeledEdge> edges() const;

    friend bool operator==(const PreisachGraph& a, const PreisachGraph& b);

private:
    Permutation perm_;
    std::vector<SpinConfig> vertices_;
    std::unordered_map<SpinConfig, std::size_t> index_;
    std::vector<std::optional<LabeledEdge>> up_;
    std::vector<std::optional<LabeledEdge>> down_;
    std::size_t edge_count_ = 0;
};

/// Closure of {alpha} under U and D (breadth first, U before D).
PreisachGraph build_bfs(const Permutation& rho, std::size_t max_vertices = kDefaultMaxVertices);

/// Iterative loop-copying construction over the sub-permutations rho^(n).
/// Does not evaluate U or D; every edge comes from copying or joining.
PreisachGraph build_forward(const Permutation& rho, std::size_t max_vertices = kDefaultMaxVertices);

/// sigma, U sigma, U^2 sigma, ... ending at omega.
std::vector<SpinConfig> u_orbit(const Permutation& rho, const SpinConfig& sigma);
/// sigma, D sigma, D^2 sigma, ... ending at alpha.
std::vector<SpinConfig> d_orbit(const Permutation& rho, const SpinConfig& sigma);

/// A UD-cycle (mu, nu). Boundaries include both endpoints, so a degenerate
/// cycle (mu, mu) has single-state boundaries of length zero.
struct Cycle {
    SpinConfig mu;
    SpinConfig nu;
    std::vector<SpinConfig> u_boundary;  // mu ... nu along U
    std::vector<SpinConfig> d_boundary;  // nu ... mu along D

    std::size_t u_length() const noexcept { return u_boundary.size() - 1; }
    std::size_t d_length() const noexcept { return d_boundary.size() - 1; }
};

/// Throws Error("not a cycle") unless nu is on the U-orbit of mu and mu on
/// the D-orbit of nu.
Cycle cycle_of(const Permutation& rho, const SpinConfig& mu, const SpinConfig& nu);

/// True iff (mu,nu) is a cycle, without building it.
bool is_cycle(const Permutation& rho, const SpinConfig& mu, const SpinConfig& nu);

bool check_absorption(const Permutation& rho, const Cycle& c);

/// Loop return-point memory: absorption holds for c and, recursively, for
/// every proper major sub-cycle. Verified sub-cycles are memoized.
bool check_lrpm(const Permutation& rho, const Cycle& c);

/// Vertices of the loop (mu,nu), canonical order. Throws Error("not
/// absorbing") if c or one of its iterated sub-cycles is not absorbing.
std::vector<SpinConfig> loop_vertices(const Permutation& rho, const Cycle& c);

struct LoopDecomposition {
    std::vector<SpinConfig> lower_loop;  // spin N is -1
    std::vector<SpinConfig> upper_loop;  // spin N is +1
    LabeledEdge join_up;                 // U^{N-1} alpha -> omega
    LabeledEdge join_down;               // D^{k-1} omega -> D^k omega
};

/// Splits G into the loops (alpha, U^{N-1} alpha) and (D^{k-1} omega, omega),
/// where rho_k = N, plus the two edges labeled N joining them.
LoopDecomposition decompose(const PreisachGraph& g);

}  // namespace preisach

#endif  // PREISACH_GRAPH_HPP
