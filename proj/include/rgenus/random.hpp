#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "rgenus/graph.hpp"

namespace rgenus {

/// (master, trial_index) fully determines every generated object.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t trial_index = 0;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Per-trial random stream. `stream` separates independent uses of the same
/// seed (e.g. the base graph and the perturbation of one trial).
class Rng {
public:
    explicit Rng(Seed seed, std::uint64_t stream = 0);

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, bound); bound > 0. Rejection sampling, so the output is
    /// identical on every platform.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform on [0, 1).
    double uniform();

private:
    std::mt19937_64 engine_;
};

/// C(n, 2).
std::uint64_t pair_count(std::uint64_t n) noexcept;

/// Colex bijection between [0, C(n,2)) and pairs u < v: rank = v(v-1)/2 + u.
Edge pair_from_rank(std::uint64_t rank) noexcept;
std::uint64_t rank_of_pair(Edge e) noexcept;

/// Lazily materialized uniform random permutation of [0, total) via partial
/// Fisher-Yates; only displaced positions are stored.
class LazyPermutation {
public:
    LazyPermutation(std::uint64_t total, Rng rng);

    bool done() const noexcept { return drawn_ == total_; }
    std::uint64_t drawn() const noexcept { return drawn_; }
    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t next();

private:
    std::uint64_t at(std::uint64_t i) const;

    std::uint64_t total_;
    std::uint64_t drawn_ = 0;
    Rng rng_;
    std::unordered_map<std::uint64_t, std::uint64_t> displaced_;
};

/// Uniformly random ordering of all C(n,2) vertex pairs, streamed.
class EdgeProcess {
public:
    EdgeProcess(std::size_t n, Seed seed);

    std::size_t order() const noexcept { return n_; }
    std::uint64_t remaining() const noexcept { return order_.total() - order_.drawn(); }
    std::optional<Edge> next();
    /// The next `count` pairs (fewer if the process is exhausted).
    std::vector<Edge> take(std::uint64_t count);

private:
    std::size_t n_;
    LazyPermutation order_;
};

/// Uniform graph on [n] with exactly m edges. Throws DomainError if m > C(n,2).
Graph gnm(std::size_t n, std::uint64_t m, Seed seed);

/// Each pair independently with probability p. Throws DomainError unless
/// 0 <= p <= 1.
Graph gnp(std::size_t n, double p, Seed seed);

EdgeProcess edge_process(std::size_t n, Seed seed);

/// Component count after 0, 1, ..., steps insertions of the edge process
/// (steps defaults to all C(n,2) pairs). Entry 0 is n.
std::vector<std::size_t> kappa_trajectory(std::size_t n, Seed seed,
                                          std::optional<std::uint64_t> steps = std::nullopt);

struct Perturbation {
    Graph graph;                     // H union R
    std::vector<Edge> random_edges;  // R in insertion order
};

/// Adds k distinct uniformly random pairs to H (overlaps with E(H) absorbed).
/// Throws DomainError if k > C(|H|, 2).
Perturbation perturb(const Graph& h, std::uint64_t k, Seed seed);

}  // namespace rgenus
