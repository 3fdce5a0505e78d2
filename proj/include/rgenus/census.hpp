#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rgenus/graph.hpp"
#include "rgenus/random.hpp"

namespace rgenus {

/// A cycle together with its leaf neighbourhood T(C) and its good and bad
/// neighbours.
struct CycleNeighborhood {
    Cycle cycle;
    std::uint64_t leaf_size = 0;  // vertices of T(C)
    std::uint64_t good = 0;       // outside C and T(C), adjacent to exactly one vertex of C
    std::uint64_t bad = 0;        // outside C and T(C), adjacent to two or more
    std::uint64_t neighbors = 0;  // every vertex outside V(C) adjacent to V(C)
};

/// Classifies many cycles of one graph, reusing O(n) scratch arrays. Tree
/// components of G - V(C) are explored only as far as needed: a search stops
/// as soon as it sees a second attaching edge, a cycle, or a vertex already
/// known to lie in a non-leaf component.
class NeighborhoodClassifier {
public:
    explicit NeighborhoodClassifier(const Graph& g);

    /// Throws GraphError if `cycle` is not a cycle of g.
    CycleNeighborhood classify(std::span<const Vertex> cycle);

private:
    const Graph& g_;
    std::vector<std::uint32_t> on_cycle_;   // stamp: vertex lies on the current cycle
    std::vector<std::uint64_t> seen_;       // id of the search that visited it
    std::vector<std::uint8_t> in_leaf_;     // valid where seen_ is current
    std::vector<std::uint32_t> nb_stamp_;   // stamp: vertex is a neighbour of the cycle
    std::vector<std::uint32_t> nb_mult_;    // number of cycle vertices it is adjacent to
    std::vector<Vertex> parent_;
    std::vector<Vertex> nbrs_;
    std::vector<Vertex> queue_;
    std::uint32_t round_ = 0;
    std::uint64_t search_ = 0;  // ids of this round's searches are > round_start_
    std::uint64_t round_start_ = 0;
};

CycleNeighborhood classify_cycle_neighborhood(const Graph& g, const Cycle& c);

struct ZCount {
    std::uint64_t z = 0;
    double x = 0.0;  // 0.05 ln(s^3 / n^2)
};

/// Number of cycles of length <= floor(i n / s) with leaf neighbourhood at
/// most x n^2/s^2 vertices, between 1 and x n/s good neighbours and no bad
/// neighbours. Throws CycleCapExceeded.
ZCount count_Z(const Graph& g, std::uint64_t s, double i, std::uint64_t cap = kDefaultCycleCap);

/// True iff no connected subgraph on fewer than L vertices has more edges
/// than vertices. Searches pairs of cycles of length < L that overlap or are
/// joined by a shortest path.
bool fact8_check(const Graph& g, std::uint64_t L, std::uint64_t cap = kDefaultCycleCap);

/// Cycle-length cutoff for fact8_check: 0.1 (n/s) ln(s^3/n^2), rounded down.
std::uint64_t fact8_length(std::uint64_t n, std::uint64_t s);

/// True iff every cycle of length < a n / s has fewer than a^2 n^2/s^2
/// leaf-neighbourhood vertices and fewer than a^2 n / s neighbours.
bool fact9_check(const Graph& g, double a, std::uint64_t s, std::uint64_t cap = kDefaultCycleCap);

/// Default slowly growing a: (1/2) ln(s^3/n^2).
double default_census_a(std::uint64_t n, std::uint64_t s);

struct SupercriticalOptions {
    unsigned ell = 4;            // short-cycle census length
    double z_i = 1.0;            // Z(n, i) parameter
    bool compute_z = true;
    bool check_facts = false;    // fact8/fact9 on the whole graph (expensive)
    std::optional<double> a;     // fact9 parameter; default_census_a when absent
    unsigned lower_max_ell = 0;  // 0: use ell only; otherwise best bound over 3..lower_max_ell
    std::uint64_t cap = kDefaultCycleCap;
};

struct SupercriticalReport {
    std::uint64_t n = 0, m = 0, s = 0;
    Seed seed;
    std::uint64_t giant_vertices = 0;
    std::uint64_t core_vertices = 0;
    std::uint64_t core_edges = 0;
    std::int64_t core_excess = 0;
    std::uint64_t core_components = 0;
    std::uint64_t short_cycle_count = 0;
    std::optional<std::uint64_t> z_value;
    double x_param = 0.0;
    std::optional<bool> fact8;
    std::optional<bool> fact9;
    std::int64_t genus_lower = 0;
    unsigned genus_lower_ell = 0;
    std::int64_t genus_upper = 0;
    double predicted = 0.0;  // 8 s^3 / (3 n^2)
};

/// Samples G(n, n/2 + s), takes the 2-core of its giant component, and
/// reports its size, excess and genus bounds. s outside (n^{2/3}, n/2) is
/// accepted; see supercritical_in_range.
SupercriticalReport supercritical_report(std::uint64_t n, std::uint64_t s, Seed seed,
                                         const SupercriticalOptions& options = {});

bool supercritical_in_range(std::uint64_t n, std::uint64_t s);

}  // namespace rgenus
