#include "rgenus/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "rgenus/error.hpp"

namespace rgenus {

Graph::Graph(std::size_t n) : n_(n) { build_adjacency(); }

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ >= kNoVertex) throw GraphError("vertex count too large");
    for (auto& e : edges_) {
        if (e.u >= n_ || e.v >= n_)
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") out of range for n=" + std::to_string(n_));
        if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
        e = e.normalized();
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," +
                         std::to_string(dup->v) + ")");
    build_adjacency();
}

Graph Graph::union_of(std::size_t n, std::vector<Edge> edges) {
    for (auto& e : edges) e = e.normalized();
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(n, std::move(edges));
}

void Graph::build_adjacency() {
    offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    adj_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Edges are sorted by (u, v), so each row is filled in increasing order
    // for the "v" side; the "u" side needs a sort afterwards.
    for (const auto& e : edges_) {
        adj_[fill[e.u]++] = e.v;
        adj_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < n_; ++v)
        std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
}

std::size_t Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
    if (u >= n_ || v >= n_) return false;
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

Cycle canonical_cycle(std::vector<Vertex> vertices) {
    if (vertices.empty()) return {};
    auto smallest = std::min_element(vertices.begin(), vertices.end());
    std::rotate(vertices.begin(), smallest, vertices.end());
    if (vertices.size() > 2 && vertices[1] > vertices.back())
        std::reverse(vertices.begin() + 1, vertices.end());
    return Cycle{std::move(vertices)};
}

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) noexcept {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
}

ComponentPartition components(const Graph& g) {
    const std::size_t n = g.order();
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    ComponentPartition out;
    out.component_id.assign(n, unset);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (std::size_t start = 0; start < n; ++start) {
        if (out.component_id[start] != unset) continue;
        const auto id = static_cast<std::uint32_t>(out.kappa++);
        queue.clear();
        queue.push_back(static_cast<Vertex>(start));
        out.component_id[start] = id;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (out.component_id[w] == unset) {
                    out.component_id[w] = id;
                    queue.push_back(w);
                }
            }
        }
        out.sizes.push_back(queue.size());
    }
    return out;
}

namespace {

Subgraph subgraph_from_mask(const Graph& g, const std::vector<char>& keep) {
    Subgraph out;
    out.from_original.assign(g.order(), kNoVertex);
    for (std::size_t v = 0; v < g.order(); ++v) {
        if (keep[v]) {
            out.from_original[v] = static_cast<Vertex>(out.to_original.size());
            out.to_original.push_back(static_cast<Vertex>(v));
        }
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (keep[e.u] && keep[e.v]) edges.push_back({out.from_original[e.u], out.from_original[e.v]});
    out.graph = Graph(out.to_original.size(), std::move(edges));
    return out;
}

}  // namespace

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<char> keep(g.order(), 0);
    for (Vertex v : vertices) {
        if (v >= g.order()) throw GraphError("vertex out of range in induced_subgraph");
        if (keep[v]) throw GraphError("duplicate vertex in induced_subgraph");
        keep[v] = 1;
    }
    return subgraph_from_mask(g, keep);
}

Subgraph two_core(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> deg(n);
    std::vector<char> alive(n, 1);
    std::vector<Vertex> queue;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(static_cast<Vertex>(v));
        if (deg[v] < 2) {
            alive[v] = 0;
            queue.push_back(static_cast<Vertex>(v));
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : g.neighbors(queue[head])) {
            if (alive[w] && --deg[w] < 2) {
                alive[w] = 0;
                queue.push_back(w);
            }
        }
    }
    return subgraph_from_mask(g, alive);
}

Subgraph giant_component(const Graph& g) {
    if (g.order() == 0) return {};
    auto parts = components(g);
    // Component ids are assigned in order of their smallest vertex, so the
    // first maximum is the tie-break winner.
    const auto best = static_cast<std::uint32_t>(
        std::max_element(parts.sizes.begin(), parts.sizes.end()) - parts.sizes.begin());
    std::vector<char> keep(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) keep[v] = parts.component_id[v] == best;
    return subgraph_from_mask(g, keep);
}

void for_each_cycle(const Graph& g, unsigned max_length, std::uint64_t cap,
                    const std::function<void(std::span<const Vertex>)>& visit) {
    if (max_length < 3) return;
    // Every cycle lives in the 2-core; the relabeling is monotone so the
    // canonical form survives the round trip.
    const Subgraph core = two_core(g);
    const Graph& c = core.graph;
    const std::size_t n = c.order();

    std::vector<unsigned> dist(n, 0);
    std::vector<std::size_t> stamp(n, 0);
    std::vector<char> on_path(n, 0);
    std::vector<Vertex> bfs;
    std::vector<Vertex> path;
    std::vector<std::size_t> cursor;
    std::vector<Vertex> mapped;
    std::uint64_t found = 0;

    for (std::size_t s = 0; s < n; ++s) {
        const auto start = static_cast<Vertex>(s);
        // Distances back to s inside the subgraph of labels >= s; used to
        // prune paths that cannot close within max_length.
        const std::size_t tag = s + 1;
        bfs.clear();
        bfs.push_back(start);
        stamp[s] = tag;
        dist[s] = 0;
        for (std::size_t head = 0; head < bfs.size(); ++head) {
            const Vertex v = bfs[head];
            if (dist[v] + 1 >= max_length) continue;
            for (Vertex w : c.neighbors(v)) {
                if (w > start && stamp[w] != tag) {
                    stamp[w] = tag;
                    dist[w] = dist[v] + 1;
                    bfs.push_back(w);
                }
            }
        }

        path.assign(1, start);
        cursor.assign(1, 0);
        on_path[s] = 1;
        while (!path.empty()) {
            const Vertex v = path.back();
            auto row = c.neighbors(v);
            std::size_t& i = cursor.back();
            if (i == row.size()) {
                on_path[v] = 0;
                path.pop_back();
                cursor.pop_back();
                continue;
            }
            const Vertex w = row[i++];
            if (w == start) {
                if (path.size() >= 3 && path[1] < v) {
                    if (++found > cap) throw CycleCapExceeded(cap, max_length);
                    mapped.resize(path.size());
                    for (std::size_t k = 0; k < path.size(); ++k) mapped[k] = core.to_original[path[k]];
                    visit(mapped);
                }
                continue;
            }
            if (w < start || on_path[w] || stamp[w] != tag) continue;
            if (path.size() + dist[w] > max_length) continue;
            on_path[w] = 1;
            path.push_back(w);
            cursor.push_back(0);
        }
    }
}

std::vector<Cycle> cycles_up_to(const Graph& g, unsigned max_length, std::uint64_t cap) {
    std::vector<Cycle> out;
    for_each_cycle(g, max_length, cap, [&](std::span<const Vertex> cyc) {
        out.push_back(Cycle{{cyc.begin(), cyc.end()}});
    });
    return out;
}

std::uint64_t count_cycles_up_to(const Graph& g, unsigned max_length, std::uint64_t cap) {
    std::uint64_t count = 0;
    for_each_cycle(g, max_length, cap, [&](std::span<const Vertex>) { ++count; });
    return count;
}

std::int64_t excess(const Graph& g) noexcept {
    return static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(g.order());
}

Graph contract_sets(const Graph& g, const std::vector<std::vector<Vertex>>& parts) {
    std::vector<Vertex> owner(g.order(), kNoVertex);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (Vertex v : parts[p]) {
            if (v >= g.order()) throw GraphError("part vertex out of range");
            if (owner[v] != kNoVertex)
                throw GraphError("parts overlap at vertex " + std::to_string(v));
            owner[v] = static_cast<Vertex>(p);
        }
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        const Vertex a = owner[e.u];
        const Vertex b = owner[e.v];
        if (a != kNoVertex && b != kNoVertex && a != b) edges.push_back({a, b});
    }
    return Graph::union_of(parts.size(), std::move(edges));
}

Graph read_edge_list(std::istream& in) {
    long long n = -1;
    long long m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw GraphError("edge list: expected header 'n m'");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = -1;
        long long v = -1;
        if (!(in >> u >> v))
            throw GraphError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge list: vertex out of range on edge " + std::to_string(i));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    std::string trailing;
    if (in >> trailing) throw GraphError("edge list: trailing data after " + std::to_string(m) + " edges");
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace rgenus
