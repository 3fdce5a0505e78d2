#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

namespace rgenus {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Unordered vertex pair, stored with u < v once normalized.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge normalized() const noexcept { return u < v ? Edge{u, v} : Edge{v, u}; }
    auto operator<=>(const Edge&) const = default;
};

/// Labeled simple graph on vertices 0..n-1.
///
/// Immutable after construction. The edge list is kept sorted with u < v and
/// the adjacency is a CSR array whose rows are sorted, so neighbor spans can
/// be searched with std::binary_search.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    /// Throws GraphError on self-loops, duplicate pairs, or labels >= n.
    Graph(std::size_t n, std::vector<Edge> edges);

    /// Simple union: pairs already present are absorbed, self-loops rejected.
    static Graph union_of(std::size_t n, std::vector<Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    std::size_t max_degree() const noexcept;
    bool has_edge(Vertex u, Vertex v) const noexcept;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void build_adjacency();

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> adj_;
};

struct ComponentPartition {
    std::vector<std::uint32_t> component_id;  // vertex -> component index
    std::size_t kappa = 0;
    std::vector<std::size_t> sizes;           // per component
};

/// A compact relabeled subgraph together with the label maps back and forth.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_original;    // new label -> old label (increasing)
    std::vector<Vertex> from_original;  // old label -> new label, or kNoVertex
};

/// Cyclically ordered distinct vertices, length >= 3, in canonical form:
/// smallest vertex first, and its smaller cycle-neighbor second.
struct Cycle {
    std::vector<Vertex> vertices;

    std::size_t length() const noexcept { return vertices.size(); }
    auto operator<=>(const Cycle&) const = default;
};

/// Rotate/reflect an arbitrary cyclic vertex sequence into canonical form.
Cycle canonical_cycle(std::vector<Vertex> vertices);

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n);

    std::size_t find(std::size_t x) noexcept;
    /// Returns true when the two elements were in different sets.
    bool unite(std::size_t a, std::size_t b) noexcept;
    std::size_t sets() const noexcept { return sets_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t sets_;
};

inline constexpr std::uint64_t kDefaultCycleCap = 10'000'000;

ComponentPartition components(const Graph& g);

/// Maximal subgraph of minimum degree two, by repeated peeling of vertices of
/// degree at most one. Peeled vertices are removed; the result is relabeled.
Subgraph two_core(const Graph& g);

/// Induced subgraph on a largest component; ties go to the component whose
/// smallest vertex label is smallest.
Subgraph giant_component(const Graph& g);

/// Induced subgraph on the given vertex set (any order, no duplicates).
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Visits every simple cycle of length <= max_length exactly once, in
/// canonical form. Throws CycleCapExceeded when more than `cap` are found.
void for_each_cycle(const Graph& g, unsigned max_length, std::uint64_t cap,
                    const std::function<void(std::span<const Vertex>)>& visit);

std::vector<Cycle> cycles_up_to(const Graph& g, unsigned max_length,
                                std::uint64_t cap = kDefaultCycleCap);

std::uint64_t count_cycles_up_to(const Graph& g, unsigned max_length,
                                 std::uint64_t cap = kDefaultCycleCap);

/// e(G) - |G|.
std::int64_t excess(const Graph& g) noexcept;

/// Contracts each part to a single vertex (part index) and discards
/// everything else. Parts must be pairwise disjoint.
Graph contract_sets(const Graph& g, const std::vector<std::vector<Vertex>>& parts);

/// Edge-list text format: "n m" then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace rgenus
