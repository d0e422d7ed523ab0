#ifndef PREISACH_BIJECTION_HPP
#define PREISACH_BIJECTION_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "preisach/graph.hpp"

namespace preisach {

/// A walk from alpha along graph edges.
struct Path {
    SpinConfig start;
    std::vector<LabeledEdge> edges;

    const SpinConfig& end() const { return edges.empty() ? start : edges.back().to; }
    std::size_t length() const noexcept { return edges.size(); }
};

struct Block {
    EdgeKind kind;
    std::size_t length;

    friend bool operator==(const Block&, const Block&) = default;
};

/// Maximal runs of equal-kind edges on a path from alpha.
struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<SpinConfig> switchbacks;  // state ending each block
    std::vector<SpinIndex> labels;        // label of the edge entering each switch-back

    std::size_t size() const noexcept { return blocks.size(); }
};

/// Values of rho taken at increasing positions and increasing in value.
/// The empty subsequence is allowed.
class IncreasingSubsequence {
public:
    IncreasingSubsequence() = default;

    /// Throws Error("not an increasing subsequence of rho ...") unless the
    /// values and their positions in rho are both strictly increasing.
    IncreasingSubsequence(const Permutation& rho, std::vector<std::size_t> values);

    std::size_t length() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    const std::vector<std::size_t>& values() const noexcept { return values_; }

    /// "(2,4,5)", or "()" for the empty subsequence.
    std::string to_string() const;

    friend bool operator==(const IncreasingSubsequence&, const IncreasingSubsequence&) = default;
    friend auto operator<=>(const IncreasingSubsequence& a, const IncreasingSubsequence& b) {
        return a.values_ <=> b.values_;
    }

private:
    std::vector<std::size_t> values_;
};

struct IncreasingSubsequenceHash {
    std::size_t operator()(const IncreasingSubsequence& s) const noexcept;
};

/// Breadth-first shortest-path tree rooted at alpha.
///
/// Construction counts shortest paths per vertex and throws
/// InvariantViolation if any vertex is reached by two of them.
class ShortestPathTree {
public:
    explicit ShortestPathTree(const PreisachGraph& g);

    /// Throws Error("not a vertex") for configurations outside the graph.
    Path path_to(const SpinConfig& sigma) const;

    std::size_t depth(const SpinConfig& sigma) const;

private:
    std::size_t require_index(const SpinConfig& sigma) const;

    const PreisachGraph* graph_;
    std::vector<const LabeledEdge*> parent_;
    std::vector<std::size_t> depth_;
};

Path shortest_path(const PreisachGraph& g, const SpinConfig& sigma);

/// Throws Error("first block not U") if the path leaves alpha by a D-edge.
BlockDecomposition block_decomposition(const Path& p);

/// The vertex <-> increasing subsequence correspondence for one graph,
/// tabulated over all vertices.
class Bijection {
public:
    explicit Bijection(const PreisachGraph& g);

    const PreisachGraph& graph() const noexcept { return *graph_; }

    const IncreasingSubsequence& phi(const SpinConfig& sigma) const;

    /// Number of blocks on the shortest path to sigma.
    std::size_t nesting_degree(const SpinConfig& sigma) const;

    /// Table inversion; throws Error if s is not an increasing subsequence
    /// of rho.
    const SpinConfig& inverse(const IncreasingSubsequence& s) const;

    /// Whether phi was injective over the vertex set.
    bool injective() const noexcept { return injective_; }

    std::size_t max_nesting_degree() const noexcept { return max_degree_; }

private:
    std::size_t require_index(const SpinConfig& sigma) const;

    const PreisachGraph* graph_;
    std::vector<IncreasingSubsequence> images_;
    std::vector<std::size_t> degrees_;
    std::unordered_map<IncreasingSubsequence, std::size_t, IncreasingSubsequenceHash> preimage_;
    bool injective_ = true;
    std::size_t max_degree_ = 0;
};

IncreasingSubsequence phi(const PreisachGraph& g, const SpinConfig& sigma);

/// Table-based inverse of phi.
SpinConfig phi_inverse(const PreisachGraph& g, const IncreasingSubsequence& s);

/// Constructive inverse: from alpha, follow U until spin l_1 flips, then D
/// until spin l_2 flips, and so on, reading s from its largest entry down.
/// Uses only the U/D maps of rho.
SpinConfig phi_inverse_constructive(const Permutation& rho, const IncreasingSubsequence& s);

std::size_t nesting_degree(const PreisachGraph& g, const SpinConfig& sigma);

/// Minimal number of alternating U/D blocks reaching sigma from alpha,
/// found by a 0-1 breadth-first search over (state, last kind) using the
/// U/D maps directly. Throws Error("unreachable") if sigma is not reachable.
std::size_t nesting_degree_oracle(const Permutation& rho, const SpinConfig& sigma);

/// The same search run to completion: nesting degree of every reachable
/// configuration.
std::unordered_map<SpinConfig, std::size_t> nesting_degrees_oracle(const Permutation& rho,
                                                                   std::size_t max_states = kDefaultMaxVertices);

/// max over vertices of nesting_degree.
std::size_t nesting_of_graph(const PreisachGraph& g);

}  // namespace preisach

#endif  // PREISACH_BIJECTION_HPP
