#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rgenus/graph.hpp"
#include "rgenus/random.hpp"

namespace rgenus {

/// Disjoint connected pieces V_1..V_t of a bounded-degree connected graph,
/// and equal-size connected cores U_i inside them.
struct Decomposition {
    std::uint64_t l = 1;
    std::uint64_t delta = 1;
    std::vector<std::vector<Vertex>> pieces;
    std::vector<std::vector<Vertex>> cores;  // empty until select_cores
    std::uint64_t s = 0;                     // min |V_i| = |U_i|

    std::size_t t() const noexcept { return pieces.size(); }
};

/// Spanning-tree peeling: root a BFS tree at vertex 0 and, in post-order,
/// detach a vertex's remaining subtree as soon as it holds at least l*Delta
/// vertices. Every child remainder is then below l*Delta, so a piece has at
/// most 1 + Delta (l Delta - 1) <= l Delta^2 vertices. The final remainder
/// (fewer than l*Delta vertices) is discarded.
///
/// Throws GraphError if H is disconnected or has a vertex of degree above
/// Delta, and DomainError if l*Delta > |H| or l, Delta < 1.
Decomposition decompose(const Graph& h, std::uint64_t l, std::uint64_t delta);

/// U_i = the first s vertices of a BFS of H[V_i] from the piece root, i.e. a
/// BFS tree pruned leaf by leaf down to s vertices.
Decomposition select_cores(const Graph& h, Decomposition d);

/// Graph on [t]: i ~ j iff some edge of R joins U_i and U_j with i != j.
Graph build_gamma(const Decomposition& d, std::size_t n, const std::vector<Edge>& r);

/// Edges of R, in order, that join two distinct cores not already joined by
/// an earlier edge of R. Equals e(Gamma).
std::uint64_t good_edge_census(const Decomposition& d, std::size_t n, const std::vector<Edge>& r_order);

/// l = ceil(3 Delta n / k).
std::uint64_t fragile_l(std::uint64_t n, std::uint64_t delta, std::uint64_t k);

struct FragileReport {
    std::uint64_t n = 0, k = 0, delta = 0, l = 0, t = 0, s = 0;
    Seed seed;
    bool dense_branch = false;  // k >= 6n: genus bounded from R alone
    double t_min = 0.0;         // (n - l Delta) / (l Delta^2)
    double t_max = 0.0;         // n / (l Delta)
    bool t_in_range = true;
    std::uint64_t gamma_edges = 0;
    std::uint64_t good_edge_count = 0;
    std::int64_t genus_lower_gamma = 0;  // lower bound on g(Gamma), or on g(R) in the dense branch
    unsigned lower_ell = 0;              // 2 when the density bound won
    std::int64_t upper_bound = 0;        // genus_upper_bound(H) + k
};

/// One trial of the perturbation experiment. `decomposition` may carry a
/// precomputed select_cores result for this H, shared across trials.
///
/// Throws GraphError when H violates the degree hypothesis. Without it H can
/// be a star: for k < n/2 the random edges form trees and unicyclic pieces,
/// which stay planar together with the star, so the genus remains 0.
FragileReport fragile_experiment(const Graph& h, std::uint64_t delta, std::uint64_t k, Seed seed, unsigned ell,
                                 const Decomposition* decomposition = nullptr);

/// Validates H for fragile_experiment and builds the shared decomposition.
/// Returns nothing in the dense branch (k >= 6n).
std::optional<Decomposition> fragile_decomposition(const Graph& h, std::uint64_t delta, std::uint64_t k);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph grid_graph(std::size_t rows, std::size_t cols);
/// Random recursive tree: vertex i attaches to a uniform earlier vertex whose
/// degree is still below max_degree (>= 2).
Graph random_tree(std::size_t n, std::uint64_t max_degree, Seed seed);

}  // namespace rgenus
