#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgenus/graph.hpp"

namespace rgenus {

class EmbeddingError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// One orientable embedding: for every vertex, the cyclic order of its
/// neighbors (equivalently of its outgoing darts).
struct RotationSystem {
    std::vector<std::vector<Vertex>> order;

    /// Each vertex's neighbors in increasing label order.
    static RotationSystem sorted(const Graph& g);
};

struct EmbeddingReport {
    /// Faces of the whole graph on one surface: the per-component face counts
    /// summed, minus (kappa - 1). Equals face_lengths.size() when connected.
    std::size_t face_count = 0;
    /// Lengths of the faces of each component's cellular embedding (isolated
    /// vertices contribute no darts and so no entry here).
    std::vector<std::size_t> face_lengths;
    std::int64_t genus = 0;
};

/// Face walk: the successor of dart (u,v) is the dart following (v,u) in the
/// rotation at v. Throws EmbeddingError if `rot` is not a rotation of g.
EmbeddingReport trace_faces(const Graph& g, const RotationSystem& rot);

struct ExactGenus {
    std::int64_t genus = 0;
    std::int64_t f_min = 0;      // e - |G| + kappa + 1 - 2 genus
    std::uint64_t visited = 0;   // search nodes (edge insertions) over all blocks
};

inline constexpr std::uint64_t kDefaultGenusBudget = 100'000'000;

/// Minimum genus over all rotation systems. Genus is summed over biconnected
/// blocks (block additivity of the orientable genus is an imported classical
/// fact). Within a block, rotation systems are built by inserting edges into
/// a growing embedding; a genus-g embedding needs exactly g face merges, so
/// targets g = floor, floor + 1, ... are tried with that many merges allowed,
/// starting from the Euler/girth floor. One maximum-degree vertex only takes
/// rotations up to reflection. A greedy embedding gives the starting upper
/// bound. Throws BudgetExceeded once a block spends more than `budget` nodes.
ExactGenus exact_genus(const Graph& g, std::uint64_t budget = kDefaultGenusBudget);

/// floor((e - |G| + kappa) / 2), never below 0: Euler with one face per
/// component.
std::int64_t genus_upper_bound(const Graph& g);

/// Short-cycle face bound. With C cycles of length <= ell, at most 2C faces
/// are that short, so f <= F = (2e + (ell - 2) 2C) / (ell + 1), giving
/// max(0, ceil((e - |G| - F + kappa + 1) / 2)). Requires ell >= 3.
std::int64_t genus_lower_bound_short_cycles(const Graph& g, unsigned ell,
                                            std::uint64_t cap = kDefaultCycleCap);

/// The same bound with no short faces at all (f <= 2e/3), i.e. the density
/// inequality e <= 3|G| - 6 + 6g generalized by kappa.
std::int64_t genus_lower_bound_density(const Graph& g);

/// Best of the density bound and the short-cycle bounds for every length
/// 3..max_ell; every one of them is valid, so the maximum is too.
struct BestLowerBound {
    std::int64_t value = 0;
    unsigned ell = 2;  // 2 means the density bound won
};
BestLowerBound best_genus_lower_bound(const Graph& g, unsigned max_ell,
                                      std::uint64_t cap = kDefaultCycleCap);

/// Adding an edge raises the genus by at most one.
std::int64_t perturbation_upper_bound(std::int64_t genus_h, std::int64_t k);

struct GenusBounds {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    std::string lower_method;
    std::string upper_method;
};

GenusBounds genus_bounds(const Graph& g, unsigned ell, std::uint64_t cap = kDefaultCycleCap);

/// Biconnected blocks as edge lists in original labels. Bridges form
/// single-edge blocks; isolated vertices belong to no block.
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g);

}  // namespace rgenus
