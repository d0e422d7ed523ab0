#include "preisach/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>

namespace preisach {

namespace {

using StatePair = std::pair<SpinConfig, SpinConfig>;

struct StatePairHash {
    std::size_t operator()(const StatePair& p) const noexcept {
        const std::size_t a = SpinConfigHash{}(p.first);
        const std::size_t b = SpinConfigHash{}(p.second);
        return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    }
};

// Walks `step` from `from` until `to` is reached. Returns the visited states
// (both ends included), or nullopt when the walk hits a fixed point first.
// `step` returns nullopt at a fixed point.
template <class Step>
std::optional<std::vector<SpinConfig>> walk_until(const SpinConfig& from, const SpinConfig& to, Step step) {
    std::vector<SpinConfig> path{from};
    while (path.back() != to) {
        auto next = step(path.back());
        if (!next) return std::nullopt;
        path.push_back(std::move(*next));
    }
    return path;
}

// Boundaries of (mu,nu) and of all major sub-cycles reachable from it,
// computed with abstract U/D step functions so the same traversal serves
// the map-based checks and the graph-based forward builder.
template <class Up, class Down>
class LoopWalker {
public:
    LoopWalker(Up up, Down down) : up_(std::move(up)), down_(std::move(down)) {}

    std::optional<Cycle> cycle(const SpinConfig& mu, const SpinConfig& nu) const {
        auto ub = walk_until(mu, nu, up_);
        if (!ub) return std::nullopt;
        auto db = walk_until(nu, mu, down_);
        if (!db) return std::nullopt;
        return Cycle{mu, nu, std::move(*ub), std::move(*db)};
    }

    bool absorbing(const Cycle& c) const {
        for (const auto& u : c.u_boundary) {
            if (!walk_until(u, c.mu, down_)) return false;
        }
        for (const auto& v : c.d_boundary) {
            if (!walk_until(v, c.nu, up_)) return false;
        }
        return true;
    }

    // Proper major sub-cycles, as endpoint pairs. Only meaningful when c is
    // absorbing.
    static std::vector<StatePair> major_subcycles(const Cycle& c) {
        std::vector<StatePair> out;
        for (const auto& u : c.u_boundary) {
            if (u != c.mu && u != c.nu) out.emplace_back(c.mu, u);
        }
        for (const auto& v : c.d_boundary) {
            if (v != c.nu && v != c.mu) out.emplace_back(v, c.nu);
        }
        return out;
    }

    bool lrpm(const Cycle& c) {
        const StatePair key{c.mu, c.nu};
        if (auto it = lrpm_memo_.find(key); it != lrpm_memo_.end()) return it->second;
        bool ok = absorbing(c);
        if (ok) {
            for (const auto& [mu, nu] : major_subcycles(c)) {
                auto sub = cycle(mu, nu);
                if (!sub || !lrpm(*sub)) {
                    ok = false;
                    break;
                }
            }
        }
        lrpm_memo_.emplace(key, ok);
        return ok;
    }

    // Iterative union of the boundary states of all major sub-cycles.
    std::vector<SpinConfig> loop(const Cycle& root) const {
        std::unordered_set<SpinConfig> states;
        std::unordered_set<StatePair, StatePairHash> seen{{root.mu, root.nu}};
        std::vector<Cycle> work{root};
        while (!work.empty()) {
            Cycle c = std::move(work.back());
            work.pop_back();
            if (!absorbing(c)) throw Error("not absorbing");
            states.insert(c.u_boundary.begin(), c.u_boundary.end());
            states.insert(c.d_boundary.begin(), c.d_boundary.end());
            for (auto& pair : major_subcycles(c)) {
                if (!seen.insert(pair).second) continue;
                auto sub = cycle(pair.first, pair.second);
                if (!sub) throw Error("not absorbing");
                work.push_back(std::move(*sub));
            }
        }
        std::vector<SpinConfig> out(states.begin(), states.end());
        std::sort(out.begin(), out.end(), canonical_less);
        return out;
    }

private:
    Up up_;
    Down down_;
    std::unordered_map<StatePair, bool, StatePairHash> lrpm_memo_;
};

auto map_walker(const Permutation& rho) {
    auto up = [&rho](const SpinConfig& s) -> std::optional<SpinConfig> {
        if (s.is_omega()) return std::nullopt;
        return apply_U(s, rho);
    };
    auto down = [&rho](const SpinConfig& s) -> std::optional<SpinConfig> {
        if (s.is_alpha()) return std::nullopt;
        return apply_D(s, rho);
    };
    return LoopWalker<decltype(up), decltype(down)>(up, down);
}

void require_size(const Permutation& rho, const SpinConfig& s) {
    if (s.size() != rho.size()) throw Error("dimension mismatch");
}

[[noreturn]] void budget_exceeded(std::size_t max_vertices) {
    throw BudgetExceeded("vertex budget exceeded (max " + std::to_string(max_vertices) + ")");
}

}  // namespace

PreisachGraph::PreisachGraph(Permutation perm, std::vector<SpinConfig> vertices, std::vector<LabeledEdge> edges)
    : perm_(std::move(perm)), vertices_(std::move(vertices)) {
    const std::size_t n = perm_.size();
    std::sort(vertices_.begin(), vertices_.end(), canonical_less);
    index_.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].size() != n) throw Error("vertex " + vertices_[i].to_string() + " has wrong length");
        if (!index_.emplace(vertices_[i], i).second) throw Error("duplicate vertex " + vertices_[i].to_string());
    }
    if (!contains(SpinConfig::alpha(n)) || !contains(SpinConfig::omega(n))) {
        throw Error("graph must contain alpha and omega");
    }
    up_.assign(vertices_.size(), std::nullopt);
    down_.assign(vertices_.size(), std::nullopt);
    for (auto& e : edges) {
        const auto from = index_of(e.from);
        if (!from || !contains(e.to)) throw Error("edge endpoint is not a vertex");
        if (e.label < 1 || e.label > n || e.to != e.from.flipped(e.label)) {
            throw Error("edge label does not match the flipped spin");
        }
        const int before = e.from.spin(e.label);
        if ((e.kind == EdgeKind::U) != (before < 0)) throw Error("edge kind does not match flip direction");
        auto& slot = e.kind == EdgeKind::U ? up_[*from] : down_[*from];
        if (slot) throw Error("vertex " + e.from.to_string() + " has two outgoing edges of one kind");
        slot = std::move(e);
        ++edge_count_;
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const bool top = vertices_[i].is_omega();
        const bool bottom = vertices_[i].is_alpha();
        if (top == up_[i].has_value() || bottom == down_[i].has_value()) {
            throw Error("vertex " + vertices_[i].to_string() + " has missing outgoing edges");
        }
    }
}

std::optional<std::size_t> PreisachGraph::index_of(const SpinConfig& s) const {
    if (auto it = index_.find(s); it != index_.end()) return it->second;
    return std::nullopt;
}

const LabeledEdge* PreisachGraph::u_edge(const SpinConfig& s) const {
    const auto i = index_of(s);
    return i && up_[*i] ? &*up_[*i] : nullptr;
}

const LabeledEdge* PreisachGraph::d_edge(const SpinConfig& s) const {
    const auto i = index_of(s);
    return i && down_[*i] ? &*down_[*i] : nullptr;
}

std::vector<LabeledEdge> PreisachGraph::edges() const {
    std::vector<LabeledEdge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (up_[i]) out.push_back(*up_[i]);
        if (down_[i]) out.push_back(*down_[i]);
    }
    return out;
}

bool operator==(const PreisachGraph& a, const PreisachGraph& b) {
    return a.perm_ == b.perm_ && a.vertices_ == b.vertices_ && a.up_ == b.up_ && a.down_ == b.down_;
}

PreisachGraph build_bfs(const Permutation& rho, std::size_t max_vertices) {
    const std::size_t n = rho.size();
    std::unordered_set<SpinConfig> seen;
    std::vector<SpinConfig> order;
    std::vector<LabeledEdge> edges;
    std::deque<SpinConfig> queue;

    auto visit = [&](const SpinConfig& s) {
        if (!seen.insert(s).second) return;
        if (seen.size() > max_vertices) budget_exceeded(max_vertices);
        order.push_back(s);
        queue.push_back(s);
    };

    visit(SpinConfig::alpha(n));
    while (!queue.empty()) {
        const SpinConfig s = std::move(queue.front());
        queue.pop_front();
        if (const auto i = i_plus(s)) {
            edges.push_back({s, s.flipped(*i), EdgeKind::U, *i});
            visit(edges.back().to);
        }
        if (const auto i = i_minus(s, rho)) {
            edges.push_back({s, s.flipped(*i), EdgeKind::D, *i});
            visit(edges.back().to);
        }
    }
    return PreisachGraph(rho, std::move(order), std::move(edges));
}

PreisachGraph build_forward(const Permutation& rho, std::size_t max_vertices) {
    struct Node {
        std::optional<LabeledEdge> up;
        std::optional<LabeledEdge> down;
    };
    using NodeMap = std::unordered_map<SpinConfig, Node>;

    if (max_vertices < 2) budget_exceeded(max_vertices);

    // G(rho^(1)): a single spin, alpha <-> omega.
    NodeMap graph;
    {
        const auto lo = SpinConfig::alpha(1);
        const auto hi = SpinConfig::omega(1);
        graph[lo].up = LabeledEdge{lo, hi, EdgeKind::U, 1};
        graph[hi].down = LabeledEdge{hi, lo, EdgeKind::D, 1};
    }

    for (std::size_t n = 1; n < rho.size(); ++n) {
        const std::size_t k = restrict_to_values(rho, n + 1).position_of(n + 1);

        auto up = [&graph](const SpinConfig& s) -> std::optional<SpinConfig> {
            const auto& e = graph.at(s).up;
            return e ? std::optional(e->to) : std::nullopt;
        };
        auto down = [&graph](const SpinConfig& s) -> std::optional<SpinConfig> {
            const auto& e = graph.at(s).down;
            return e ? std::optional(e->to) : std::nullopt;
        };
        LoopWalker walker(up, down);

        const SpinConfig top = SpinConfig::omega(n);  // U^n alpha
        SpinConfig bottom = top;                      // D^{k-1} U^n alpha
        for (std::size_t j = 1; j < k; ++j) bottom = *down(bottom);

        const auto copied = walker.loop(*walker.cycle(bottom, top));
        if (graph.size() + copied.size() > max_vertices) budget_exceeded(max_vertices);
        const std::unordered_set<SpinConfig> in_loop(copied.begin(), copied.end());

        auto lift = [](const LabeledEdge& e, int spin) {
            return LabeledEdge{e.from.extended(spin), e.to.extended(spin), e.kind, e.label};
        };

        NodeMap next;
        next.reserve(graph.size() + copied.size());
        for (const auto& [s, node] : graph) {
            auto& lower = next[s.extended(-1)];
            if (node.up) lower.up = lift(*node.up, -1);
            if (node.down) lower.down = lift(*node.down, -1);
        }
        for (const auto& s : copied) {
            const auto& node = graph.at(s);
            auto& upper = next[s.extended(+1)];
            if (node.up && in_loop.contains(node.up->to)) upper.up = lift(*node.up, +1);
            if (node.down && in_loop.contains(node.down->to)) upper.down = lift(*node.down, +1);
        }

        const auto top_lo = top.extended(-1);
        const auto top_hi = top.extended(+1);
        next.at(top_lo).up = LabeledEdge{top_lo, top_hi, EdgeKind::U, n + 1};
        const auto bottom_lo = bottom.extended(-1);
        const auto bottom_hi = bottom.extended(+1);
        next.at(bottom_hi).down = LabeledEdge{bottom_hi, bottom_lo, EdgeKind::D, n + 1};

        graph = std::move(next);
    }

    std::vector<SpinConfig> vertices;
    std::vector<LabeledEdge> edges;
    vertices.reserve(graph.size());
    for (auto& [s, node] : graph) {
        vertices.push_back(s);
        if (node.up) edges.push_back(std::move(*node.up));
        if (node.down) edges.push_back(std::move(*node.down));
    }
    return PreisachGraph(rho, std::move(vertices), std::move(edges));
}

std::vector<SpinConfig> u_orbit(const Permutation& rho, const SpinConfig& sigma) {
    require_size(rho, sigma);
    std::vector<SpinConfig> out{sigma};
    while (!out.back().is_omega()) out.push_back(apply_U(out.back(), rho));
    return out;
}

std::vector<SpinConfig> d_orbit(const Permutation& rho, const SpinConfig& sigma) {
    require_size(rho, sigma);
    std::vector<SpinConfig> out{sigma};
    while (!out.back().is_alpha()) out.push_back(apply_D(out.back(), rho));
    return out;
}

Cycle cycle_of(const Permutation& rho, const SpinConfig& mu, const SpinConfig& nu) {
    require_size(rho, mu);
    require_size(rho, nu);
    auto c = map_walker(rho).cycle(mu, nu);
    if (!c) throw Error("not a cycle: (" + mu.to_string() + ", " + nu.to_string() + ")");
    return std::move(*c);
}

bool is_cycle(const Permutation& rho, const SpinConfig& mu, const SpinConfig& nu) {
    require_size(rho, mu);
    require_size(rho, nu);
    return map_walker(rho).cycle(mu, nu).has_value();
}

bool check_absorption(const Permutation& rho, const Cycle& c) {
    return map_walker(rho).absorbing(c);
}

bool check_lrpm(const Permutation& rho, const Cycle& c) {
    return map_walker(rho).lrpm(c);
}

std::vector<SpinConfig> loop_vertices(const Permutation& rho, const Cycle& c) {
    return map_walker(rho).loop(c);
}

LoopDecomposition decompose(const PreisachGraph& g) {
    const Permutation& rho = g.perm();
    const std::size_t n = rho.size();
    const std::size_t k = rho.position_of(n);

    SpinConfig top_lo = g.alpha();  // U^{N-1} alpha
    for (std::size_t j = 1; j < n; ++j) top_lo = g.u_edge(top_lo)->to;
    SpinConfig bottom_hi = g.omega();  // D^{k-1} omega
    for (std::size_t j = 1; j < k; ++j) bottom_hi = g.d_edge(bottom_hi)->to;

    return LoopDecomposition{
        loop_vertices(rho, cycle_of(rho, g.alpha(), top_lo)),
        loop_vertices(rho, cycle_of(rho, bottom_hi, g.omega())),
        *g.u_edge(top_lo),
        *g.d_edge(bottom_hi),
    };
}

}  // namespace preisach
