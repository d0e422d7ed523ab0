#include "preisach/bijection.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <sstream>

namespace preisach {

IncreasingSubsequence::IncreasingSubsequence(const Permutation& rho, std::vector<std::size_t> values)
    : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const std::size_t v = values_[i];
        if (v < 1 || v > rho.size()) {
            throw Error("not an increasing subsequence of rho: value " + std::to_string(v) + " out of range");
        }
        if (i > 0 && (values_[i - 1] >= v || rho.position_of(values_[i - 1]) >= rho.position_of(v))) {
            throw Error("not an increasing subsequence of rho: " + to_string());
        }
    }
}

std::string IncreasingSubsequence::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values_.size(); ++i) os << (i ? "," : "") << values_[i];
    os << ')';
    return os.str();
}

std::size_t IncreasingSubsequenceHash::operator()(const IncreasingSubsequence& s) const noexcept {
    std::size_t h = s.length();
    for (auto v : s.values()) h = h * 1000003u ^ v;
    return h;
}

ShortestPathTree::ShortestPathTree(const PreisachGraph& g) : graph_(&g) {
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    const std::size_t nv = g.vertex_count();
    parent_.assign(nv, nullptr);
    depth_.assign(nv, unseen);
    std::vector<std::uint8_t> paths(nv, 0);  // shortest-path count, saturating at 2

    const std::size_t root = *g.index_of(g.alpha());
    depth_[root] = 0;
    paths[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (auto kind : {EdgeKind::U, EdgeKind::D}) {
            const LabeledEdge* e = g.edge(g.vertices()[i], kind);
            if (!e) continue;
            const std::size_t j = *g.index_of(e->to);
            if (depth_[j] == unseen) {
                depth_[j] = depth_[i] + 1;
                parent_[j] = e;
                queue.push_back(j);
            }
            if (depth_[j] == depth_[i] + 1) {
                paths[j] = static_cast<std::uint8_t>(std::min(2, paths[j] + paths[i]));
            }
        }
    }
    for (std::size_t i = 0; i < nv; ++i) {
        if (depth_[i] == unseen) {
            throw InvariantViolation("vertex " + g.vertices()[i].to_string() + " unreachable from alpha");
        }
        if (paths[i] != 1) {
            throw InvariantViolation("uniqueness violated: two shortest paths reach " + g.vertices()[i].to_string());
        }
    }
}

std::size_t ShortestPathTree::require_index(const SpinConfig& sigma) const {
    const auto i = graph_->index_of(sigma);
    if (!i) throw Error("not a vertex: " + sigma.to_string());
    return *i;
}

std::size_t ShortestPathTree::depth(const SpinConfig& sigma) const { return depth_[require_index(sigma)]; }

Path ShortestPathTree::path_to(const SpinConfig& sigma) const {
    std::size_t i = require_index(sigma);
    Path p{graph_->alpha(), {}};
    p.edges.reserve(depth_[i]);
    while (const LabeledEdge* e = parent_[i]) {
        p.edges.push_back(*e);
        i = *graph_->index_of(e->from);
    }
    std::reverse(p.edges.begin(), p.edges.end());
    return p;
}

Path shortest_path(const PreisachGraph& g, const SpinConfig& sigma) {
    if (!g.contains(sigma)) throw Error("not a vertex: " + sigma.to_string());
    return ShortestPathTree(g).path_to(sigma);
}

BlockDecomposition block_decomposition(const Path& p) {
    BlockDecomposition out;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const auto& e = p.edges[i];
        if (e.from != (i == 0 ? p.start : p.edges[i - 1].to)) throw Error("path edges do not chain");
        if (out.blocks.empty() || out.blocks.back().kind != e.kind) {
            if (out.blocks.empty() && e.kind != EdgeKind::U) throw Error("first block not U");
            out.blocks.push_back({e.kind, 0});
        }
        ++out.blocks.back().length;
        const bool last_of_block = i + 1 == p.edges.size() || p.edges[i + 1].kind != e.kind;
        if (last_of_block) {
            out.switchbacks.push_back(e.to);
            out.labels.push_back(e.label);
        }
    }
    return out;
}

Bijection::Bijection(const PreisachGraph& g) : graph_(&g) {
    const ShortestPathTree tree(g);
    const auto vertices = g.vertices();
    images_.reserve(vertices.size());
    degrees_.reserve(vertices.size());
    preimage_.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const auto blocks = block_decomposition(tree.path_to(vertices[i]));
        std::vector<std::size_t> values(blocks.labels.rbegin(), blocks.labels.rend());
        try {
            images_.emplace_back(g.perm(), std::move(values));
        } catch (const Error& e) {
            throw InvariantViolation("phi(" + vertices[i].to_string() + ") is " + e.what());
        }
        degrees_.push_back(blocks.size());
        max_degree_ = std::max(max_degree_, blocks.size());
        if (!preimage_.emplace(images_.back(), i).second) injective_ = false;
    }
}

std::size_t Bijection::require_index(const SpinConfig& sigma) const {
    const auto i = graph_->index_of(sigma);
    if (!i) throw Error("not a vertex: " + sigma.to_string());
    return *i;
}

const IncreasingSubsequence& Bijection::phi(const SpinConfig& sigma) const { return images_[require_index(sigma)]; }

std::size_t Bijection::nesting_degree(const SpinConfig& sigma) const { return degrees_[require_index(sigma)]; }

const SpinConfig& Bijection::inverse(const IncreasingSubsequence& s) const {
    // Revalidate: s may have been built against a different permutation.
    const IncreasingSubsequence checked(graph_->perm(), s.values());
    const auto it = preimage_.find(checked);
    if (it == preimage_.end()) throw InvariantViolation("no vertex maps to " + s.to_string());
    return graph_->vertices()[it->second];
}

IncreasingSubsequence phi(const PreisachGraph& g, const SpinConfig& sigma) {
    if (!g.contains(sigma)) throw Error("not a vertex: " + sigma.to_string());
    const auto blocks = block_decomposition(shortest_path(g, sigma));
    return IncreasingSubsequence(g.perm(), std::vector<std::size_t>(blocks.labels.rbegin(), blocks.labels.rend()));
}

SpinConfig phi_inverse(const PreisachGraph& g, const IncreasingSubsequence& s) {
    return Bijection(g).inverse(s);
}

SpinConfig phi_inverse_constructive(const Permutation& rho, const IncreasingSubsequence& s) {
    const IncreasingSubsequence checked(rho, s.values());
    SpinConfig state = SpinConfig::alpha(rho.size());
    EdgeKind kind = EdgeKind::U;
    for (auto it = checked.values().rbegin(); it != checked.values().rend(); ++it) {
        while (true) {
            const auto flip = kind == EdgeKind::U ? i_plus(state) : i_minus(state, rho);
            if (!flip) {
                throw InvariantViolation("orbit ended before spin " + std::to_string(*it) + " flipped");
            }
            state = state.flipped(*flip);
            if (*flip == *it) break;
        }
        kind = other(kind);
    }
    return state;
}

std::size_t nesting_degree(const PreisachGraph& g, const SpinConfig& sigma) {
    return block_decomposition(shortest_path(g, sigma)).size();
}

namespace {

// 0-1 BFS over (state, kind of last transition). Switching kind, or taking
// the first U from alpha, costs one block. Stops early once `target` is
// settled, if given.
std::unordered_map<SpinConfig, std::size_t> alternation_search(const Permutation& rho, const SpinConfig* target,
                                                               std::size_t max_states) {
    constexpr auto inf = std::numeric_limits<std::size_t>::max();
    struct Item {
        SpinConfig state;
        EdgeKind kind;
        std::size_t cost;
    };
    std::unordered_map<SpinConfig, std::array<std::size_t, 2>> dist;
    std::unordered_map<SpinConfig, std::size_t> best;
    std::deque<Item> queue;

    const auto alpha = SpinConfig::alpha(rho.size());
    best[alpha] = 0;
    if (target && *target == alpha) return best;

    auto relax = [&](SpinConfig s, EdgeKind kind, std::size_t cost, bool front) {
        auto [it, fresh] = dist.try_emplace(s, std::array<std::size_t, 2>{inf, inf});
        if (fresh && dist.size() > 2 * max_states) throw BudgetExceeded("search state budget exceeded");
        auto& d = it->second[kind == EdgeKind::U ? 0 : 1];
        if (cost >= d) return;
        d = cost;
        Item item{std::move(s), kind, cost};
        front ? queue.push_front(std::move(item)) : queue.push_back(std::move(item));
    };

    relax(apply_U(alpha, rho), EdgeKind::U, 1, false);
    while (!queue.empty()) {
        Item item = std::move(queue.front());
        queue.pop_front();
        if (item.cost != dist.at(item.state)[item.kind == EdgeKind::U ? 0 : 1]) continue;
        auto [it, fresh] = best.try_emplace(item.state, item.cost);
        if (!fresh) it->second = std::min(it->second, item.cost);
        if (target && item.state == *target) return best;
        for (auto next : {EdgeKind::U, EdgeKind::D}) {
            const bool fixed = next == EdgeKind::U ? item.state.is_omega() : item.state.is_alpha();
            if (fixed) continue;
            SpinConfig s = next == EdgeKind::U ? apply_U(item.state, rho) : apply_D(item.state, rho);
            const bool same = next == item.kind;
            relax(std::move(s), next, item.cost + (same ? 0 : 1), same);
        }
    }
    return best;
}

}  // namespace

std::size_t nesting_degree_oracle(const Permutation& rho, const SpinConfig& sigma) {
    if (sigma.size() != rho.size()) throw Error("dimension mismatch");
    const auto best = alternation_search(rho, &sigma, kDefaultMaxVertices);
    const auto it = best.find(sigma);
    if (it == best.end()) throw Error("unreachable: " + sigma.to_string());
    return it->second;
}

std::unordered_map<SpinConfig, std::size_t> nesting_degrees_oracle(const Permutation& rho, std::size_t max_states) {
    return alternation_search(rho, nullptr, max_states);
}

std::size_t nesting_of_graph(const PreisachGraph& g) { return Bijection(g).max_nesting_degree(); }

}  // namespace preisach
