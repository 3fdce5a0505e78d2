#include "rgenus/fragile.hpp"

#include <algorithm>
#include <unordered_set>

#include "rgenus/embedding.hpp"
#include "rgenus/error.hpp"

namespace rgenus {

namespace {

void check_hypotheses(const Graph& h, std::uint64_t delta) {
    if (delta < 1) throw DomainError("Delta must be at least 1");
    if (h.order() == 0) throw GraphError("H must have at least one vertex");
    if (h.max_degree() > delta)
        throw GraphError("H has a vertex of degree " + std::to_string(h.max_degree()) + " > Delta = " +
                         std::to_string(delta) +
                         "; the bounded-degree hypothesis is essential (a star plus k < n/2 random edges "
                         "stays planar)");
    if (components(h).kappa != 1) throw GraphError("H must be connected");
}

std::vector<std::uint32_t> core_index(const Decomposition& d, std::size_t n) {
    constexpr std::uint32_t none = 0xffffffffu;
    std::vector<std::uint32_t> index(n, none);
    for (std::size_t i = 0; i < d.cores.size(); ++i)
        for (Vertex v : d.cores[i]) {
            if (v >= n) throw GraphError("core vertex out of range");
            index[v] = static_cast<std::uint32_t>(i);
        }
    return index;
}

}  // namespace

Decomposition decompose(const Graph& h, std::uint64_t l, std::uint64_t delta) {
    if (l < 1) throw DomainError("l must be at least 1");
    check_hypotheses(h, delta);
    const std::size_t n = h.order();
    const std::uint64_t piece_min = l * delta;
    if (piece_min > n) throw DomainError("l * Delta exceeds |H|");

    std::vector<Vertex> order;
    std::vector<Vertex> parent(n, kNoVertex);
    std::vector<std::uint8_t> visited(n, 0);
    order.reserve(n);
    order.push_back(0);
    visited[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Vertex x = order[head];
        for (Vertex y : h.neighbors(x))
            if (!visited[y]) {
                visited[y] = 1;
                parent[y] = x;
                order.push_back(y);
            }
    }
    std::vector<std::vector<Vertex>> children(n);
    for (Vertex v : order)
        if (parent[v] != kNoVertex) children[parent[v]].push_back(v);

    Decomposition d;
    d.l = l;
    d.delta = delta;
    std::vector<std::uint64_t> remaining(n, 1);
    std::vector<std::uint8_t> taken(n, 0);
    std::vector<Vertex> stack;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        if (remaining[v] >= piece_min) {
            std::vector<Vertex> piece;
            stack.assign(1, v);
            while (!stack.empty()) {
                const Vertex x = stack.back();
                stack.pop_back();
                taken[x] = 1;
                piece.push_back(x);
                for (Vertex c : children[x])
                    if (!taken[c]) stack.push_back(c);
            }
            d.pieces.push_back(std::move(piece));
            remaining[v] = 0;
        } else if (parent[v] != kNoVertex) {
            remaining[parent[v]] += remaining[v];
        }
    }
    return d;
}

Decomposition select_cores(const Graph& h, Decomposition d) {
    d.cores.clear();
    if (d.pieces.empty()) {
        d.s = 0;
        return d;
    }
    std::size_t s = d.pieces.front().size();
    for (const auto& p : d.pieces) s = std::min(s, p.size());
    d.s = s;
    std::vector<std::uint32_t> piece_of(h.order(), 0);
    std::vector<std::uint8_t> visited(h.order(), 0);
    for (std::size_t i = 0; i < d.pieces.size(); ++i)
        for (Vertex v : d.pieces[i]) piece_of[v] = static_cast<std::uint32_t>(i + 1);
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        std::vector<Vertex> core;
        core.reserve(s);
        const Vertex root = d.pieces[i].front();
        core.push_back(root);
        visited[root] = 1;
        for (std::size_t head = 0; head < core.size() && core.size() < s; ++head)
            for (Vertex y : h.neighbors(core[head])) {
                if (core.size() == s) break;
                if (piece_of[y] == i + 1 && !visited[y]) {
                    visited[y] = 1;
                    core.push_back(y);
                }
            }
        if (core.size() != s) throw GraphError("piece does not induce a connected subgraph");
        d.cores.push_back(std::move(core));
    }
    return d;
}

Graph build_gamma(const Decomposition& d, std::size_t n, const std::vector<Edge>& r) {
    const auto index = core_index(d, n);
    std::vector<Edge> edges;
    for (const Edge& e : r) {
        if (e.u >= n || e.v >= n) throw GraphError("R edge out of range");
        const std::uint32_t a = index[e.u];
        const std::uint32_t b = index[e.v];
        if (a == 0xffffffffu || b == 0xffffffffu || a == b) continue;
        edges.push_back(Edge{a, b}.normalized());
    }
    return Graph::union_of(d.cores.size(), std::move(edges));
}

std::uint64_t good_edge_census(const Decomposition& d, std::size_t n, const std::vector<Edge>& r_order) {
    const auto index = core_index(d, n);
    std::unordered_set<std::uint64_t> hit;
    std::uint64_t good = 0;
    for (const Edge& e : r_order) {
        if (e.u >= n || e.v >= n) throw GraphError("R edge out of range");
        std::uint64_t a = index[e.u];
        std::uint64_t b = index[e.v];
        if (a == 0xffffffffu || b == 0xffffffffu || a == b) continue;
        if (a > b) std::swap(a, b);
        if (hit.insert(a << 32 | b).second) ++good;
    }
    return good;
}

std::uint64_t fragile_l(std::uint64_t n, std::uint64_t delta, std::uint64_t k) {
    if (k == 0) throw DomainError("k must be at least 1");
    return (3 * delta * n + k - 1) / k;
}

std::optional<Decomposition> fragile_decomposition(const Graph& h, std::uint64_t delta, std::uint64_t k) {
    check_hypotheses(h, delta);
    const std::uint64_t n = h.order();
    if (k == 0) throw DomainError("k must be at least 1");
    if (k >= 6 * n) return std::nullopt;
    return select_cores(h, decompose(h, fragile_l(n, delta, k), delta));
}

FragileReport fragile_experiment(const Graph& h, std::uint64_t delta, std::uint64_t k, Seed seed, unsigned ell,
                                 const Decomposition* decomposition) {
    FragileReport r;
    r.n = h.order();
    r.k = k;
    r.delta = delta;
    r.seed = seed;
    std::optional<Decomposition> own;
    if (decomposition == nullptr) {
        own = fragile_decomposition(h, delta, k);
        if (own) decomposition = &*own;
    } else {
        check_hypotheses(h, delta);
        if (k == 0) throw DomainError("k must be at least 1");
    }
    r.upper_bound = perturbation_upper_bound(genus_upper_bound(h), static_cast<std::int64_t>(k));

    const Perturbation p = perturb(h, k, seed);
    if (decomposition == nullptr) {
        r.dense_branch = true;
        const Graph rg = Graph::union_of(r.n, p.random_edges);
        const BestLowerBound best = best_genus_lower_bound(rg, ell);
        r.genus_lower_gamma = best.value;
        r.lower_ell = best.ell;
        return r;
    }
    const Decomposition& d = *decomposition;
    if (d.cores.size() != d.pieces.size()) throw DomainError("decomposition has no cores; run select_cores");
    r.l = d.l;
    r.t = d.t();
    r.s = d.s;
    const double ld = static_cast<double>(d.l * d.delta);
    r.t_min = (static_cast<double>(r.n) - ld) / (ld * static_cast<double>(d.delta));
    r.t_max = static_cast<double>(r.n) / ld;
    r.t_in_range = static_cast<double>(r.t) >= r.t_min && static_cast<double>(r.t) <= r.t_max;

    const Graph gamma = build_gamma(d, r.n, p.random_edges);
    r.gamma_edges = gamma.size();
    r.good_edge_count = good_edge_census(d, r.n, p.random_edges);
    const BestLowerBound best = best_genus_lower_bound(gamma, ell);
    r.genus_lower_gamma = best.value;
    r.lower_ell = best.ell;
    return r;
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
    return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
    edges.push_back({0, static_cast<Vertex>(n - 1)});
    return Graph(n, std::move(edges));
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
    std::vector<Edge> edges;
    auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
        }
    return Graph(rows * cols, std::move(edges));
}

Graph random_tree(std::size_t n, std::uint64_t max_degree, Seed seed) {
    if (max_degree < 2 && n > 2) throw DomainError("random_tree needs max_degree >= 2");
    Rng rng(seed, 5);
    std::vector<Edge> edges;
    std::vector<std::uint64_t> degree(n, 0);
    std::vector<Vertex> open;  // vertices that can still take a child
    if (n > 0) open.push_back(0);
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t pick = rng.below(open.size());
        const Vertex p = open[pick];
        edges.push_back({p, static_cast<Vertex>(i)});
        if (++degree[p] >= max_degree) {
            open[pick] = open.back();
            open.pop_back();
        }
        degree[i] = 1;
        if (degree[i] < max_degree) open.push_back(static_cast<Vertex>(i));
    }
    return Graph(n, std::move(edges));
}

}  // namespace rgenus
