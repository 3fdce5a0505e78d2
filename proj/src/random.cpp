#include "rgenus/random.hpp"

#include <cmath>
#include <string>

#include "rgenus/error.hpp"

namespace rgenus {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(Seed seed, std::uint64_t stream)
    : engine_(mix64(seed.master ^ mix64(seed.trial_index ^ mix64(stream + 0x5851f42d4c957f2dULL)))) {}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Largest multiple of bound that fits; reject draws above it.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t pair_count(std::uint64_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

Edge pair_from_rank(std::uint64_t rank) noexcept {
    auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(rank))) / 2.0);
    while (v * (v - 1) / 2 > rank) --v;
    while ((v + 1) * v / 2 <= rank) ++v;
    const std::uint64_t u = rank - v * (v - 1) / 2;
    return {static_cast<Vertex>(u), static_cast<Vertex>(v)};
}

std::uint64_t rank_of_pair(Edge e) noexcept {
    e = e.normalized();
    return static_cast<std::uint64_t>(e.v) * (e.v - 1) / 2 + e.u;
}

LazyPermutation::LazyPermutation(std::uint64_t total, Rng rng) : total_(total), rng_(rng) {}

std::uint64_t LazyPermutation::at(std::uint64_t i) const {
    auto it = displaced_.find(i);
    return it == displaced_.end() ? i : it->second;
}

std::uint64_t LazyPermutation::next() {
    const std::uint64_t i = drawn_++;
    const std::uint64_t j = i + rng_.below(total_ - i);
    const std::uint64_t chosen = at(j);
    if (j != i) displaced_[j] = at(i);
    displaced_.erase(i);
    return chosen;
}

EdgeProcess::EdgeProcess(std::size_t n, Seed seed) : n_(n), order_(pair_count(n), Rng(seed, 1)) {}

std::optional<Edge> EdgeProcess::next() {
    if (order_.done()) return std::nullopt;
    return pair_from_rank(order_.next());
}

std::vector<Edge> EdgeProcess::take(std::uint64_t count) {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(std::min(count, remaining())));
    while (out.size() < count) {
        auto e = next();
        if (!e) break;
        out.push_back(*e);
    }
    return out;
}

EdgeProcess edge_process(std::size_t n, Seed seed) { return EdgeProcess(n, seed); }

namespace {

std::vector<Edge> sample_pairs(std::size_t n, std::uint64_t k, Rng rng) {
    LazyPermutation order(pair_count(n), rng);
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(k));
    for (std::uint64_t i = 0; i < k; ++i) out.push_back(pair_from_rank(order.next()));
    return out;
}

}  // namespace

Graph gnm(std::size_t n, std::uint64_t m, Seed seed) {
    const std::uint64_t total = pair_count(n);
    if (m > total)
        throw DomainError("gnm: m=" + std::to_string(m) + " exceeds C(n,2)=" + std::to_string(total));
    return Graph(n, sample_pairs(n, m, Rng(seed, 2)));
}

Graph gnp(std::size_t n, double p, Seed seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("gnp: p must lie in [0, 1]");
    const std::uint64_t total = pair_count(n);
    std::vector<Edge> edges;
    if (p == 0.0) return Graph(n);
    if (p == 1.0) {
        edges.reserve(static_cast<std::size_t>(total));
        for (std::uint64_t r = 0; r < total; ++r) edges.push_back(pair_from_rank(r));
        return Graph(n, std::move(edges));
    }
    // Geometric skipping over the pair ranks.
    Rng rng(seed, 3);
    const double log_q = std::log1p(-p);
    std::uint64_t r = 0;
    while (true) {
        const double skip = std::floor(std::log1p(-rng.uniform()) / log_q);
        if (skip >= static_cast<double>(total - r)) break;
        r += static_cast<std::uint64_t>(skip);
        edges.push_back(pair_from_rank(r));
        if (++r >= total) break;
    }
    return Graph(n, std::move(edges));
}

std::vector<std::size_t> kappa_trajectory(std::size_t n, Seed seed, std::optional<std::uint64_t> steps) {
    if (n == 0) throw DomainError("kappa_trajectory: n must be at least 1");
    const std::uint64_t total = pair_count(n);
    const std::uint64_t count = steps ? std::min(*steps, total) : total;
    EdgeProcess process(n, seed);
    UnionFind uf(n);
    std::vector<std::size_t> out;
    out.reserve(static_cast<std::size_t>(count) + 1);
    out.push_back(n);
    for (std::uint64_t i = 0; i < count; ++i) {
        const Edge e = *process.next();
        uf.unite(e.u, e.v);
        out.push_back(uf.sets());
    }
    return out;
}

Perturbation perturb(const Graph& h, std::uint64_t k, Seed seed) {
    const std::uint64_t total = pair_count(h.order());
    if (k > total)
        throw DomainError("perturb: k=" + std::to_string(k) + " exceeds C(n,2)=" + std::to_string(total));
    Perturbation out;
    out.random_edges = sample_pairs(h.order(), k, Rng(seed, 4));
    std::vector<Edge> all = h.edges();
    all.insert(all.end(), out.random_edges.begin(), out.random_edges.end());
    out.graph = Graph::union_of(h.order(), std::move(all));
    return out;
}

}  // namespace rgenus
