#include <doctest.h>

#include <chrono>

#include "rgenus/embedding.hpp"
#include "rgenus/error.hpp"
#include "rgenus/harness.hpp"
#include "rgenus/random.hpp"
#include "support.hpp"

using namespace rgenus;
using namespace rgenus::test;

namespace {

// Minimum genus by tracing every rotation system, no reductions. Faces are
// walked on (u, v) pairs directly.
std::int64_t brute_genus(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::vector<Vertex>> rot(n);
    for (Vertex v = 0; v < n; ++v) rot[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    auto faces = [&]() {
        std::map<std::pair<Vertex, Vertex>, bool> used;
        std::int64_t f = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v : rot[u]) {
                if (used[{u, v}]) continue;
                ++f;
                Vertex a = u, b = v;
                while (!used[{a, b}]) {
                    used[{a, b}] = true;
                    const auto& r = rot[b];
                    const auto pos = std::find(r.begin(), r.end(), a) - r.begin();
                    const Vertex c = r[(static_cast<std::size_t>(pos) + 1) % r.size()];
                    a = b;
                    b = c;
                }
            }
        return f;
    };
    const auto kappa = static_cast<std::int64_t>(count_components(g));
    std::int64_t isolated = 0;
    for (Vertex v = 0; v < n; ++v) isolated += g.degree(v) == 0;
    std::int64_t best = -1;
    while (true) {
        const std::int64_t f = faces() + isolated - (kappa - 1);
        const std::int64_t twice = static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(n) - f + kappa + 1;
        CHECK(twice % 2 == 0);
        if (best < 0 || twice / 2 < best) best = twice / 2;
        std::size_t k = 0;
        for (; k < n; ++k) {
            auto& r = rot[k];
            if (r.size() < 3) continue;
            if (std::next_permutation(r.begin() + 1, r.end())) break;
        }
        if (k == n) break;
    }
    return best;
}

Graph k_mn(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (Vertex x = 0; x < a; ++x)
        for (Vertex y = 0; y < b; ++y) e.push_back({x, static_cast<Vertex>(a + y)});
    return Graph(a + b, e);
}

Graph disjoint(const Graph& a, const Graph& b, std::size_t glue_offset) {
    auto e = a.edges();
    for (const Edge& x : b.edges()) e.push_back({static_cast<Vertex>(x.u + glue_offset), static_cast<Vertex>(x.v + glue_offset)});
    return Graph::union_of(std::max(a.order(), glue_offset + b.order()), e);
}

// Number of rotation systems.
double search_size(const Graph& g) {
    double total = 1;
    for (Vertex v = 0; v < g.order(); ++v)
        for (std::size_t k = 2; k < g.degree(v); ++k) total *= static_cast<double>(k);
    return total;
}

RotationSystem shuffled(const Graph& g, std::mt19937_64& gen) {
    auto rot = RotationSystem::sorted(g);
    for (auto& r : rot.order) std::shuffle(r.begin(), r.end(), gen);
    return rot;
}

}  // namespace

TEST_CASE("face tracing examples") {
    SUBCASE("square with a pendant inside") {
        const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
        auto rep = trace_faces(g, RotationSystem::sorted(g));
        std::sort(rep.face_lengths.begin(), rep.face_lengths.end());
        CHECK(rep.face_lengths == std::vector<std::size_t>{4, 6});
        CHECK(rep.face_count == 2);
        CHECK(rep.genus == 0);
    }
    SUBCASE("trees have one face") {
        std::mt19937_64 gen(1);
        const Graph t(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}, {5, 6}});
        for (int rep = 0; rep < 20; ++rep) {
            const auto r = trace_faces(t, shuffled(t, gen));
            CHECK(r.face_lengths == std::vector<std::size_t>{12});
            CHECK(r.genus == 0);
        }
    }
    SUBCASE("C5 has two faces of length five") {
        const Graph c = cycle(5);
        auto rot = RotationSystem::sorted(c);
        CHECK(trace_faces(c, rot).face_lengths == std::vector<std::size_t>{5, 5});
        for (auto& r : rot.order) std::reverse(r.begin(), r.end());
        CHECK(trace_faces(c, rot).face_lengths == std::vector<std::size_t>{5, 5});
    }
    SUBCASE("malformed rotations") {
        const Graph c = cycle(4);
        auto rot = RotationSystem::sorted(c);
        rot.order[0] = {1, 2};
        CHECK_THROWS_AS(trace_faces(c, rot), EmbeddingError);
        rot.order.pop_back();
        CHECK_THROWS_AS(trace_faces(c, rot), EmbeddingError);
    }
}

TEST_CASE("every rotation system satisfies the face-length and parity laws") {
    std::mt19937_64 gen(7);
    for (int rep = 0; rep < 400; ++rep) {
        const Graph g = random_graph(4 + rep % 9, 0.15 + 0.001 * rep, gen);
        const auto r = trace_faces(g, shuffled(g, gen));
        std::size_t total = 0;
        for (auto len : r.face_lengths) total += len;
        CHECK(total == 2 * g.size());
        const auto kappa = static_cast<std::int64_t>(count_components(g));
        const std::int64_t twice = static_cast<std::int64_t>(g.size()) - static_cast<std::int64_t>(g.order()) -
                                   static_cast<std::int64_t>(r.face_count) + kappa + 1;
        CHECK(twice >= 0);
        CHECK(twice % 2 == 0);
        CHECK(r.genus == twice / 2);
    }
}

TEST_CASE("exact genus fixtures") {
    auto check = [](const Graph& g, std::int64_t genus, std::int64_t f) {
        const auto r = exact_genus(g);
        CHECK(r.genus == genus);
        CHECK(r.f_min == f);
    };
    check(complete(5), 1, 5);
    check(cycle(5), 0, 2);
    check(with(cycle(5), {0, 2}), 0, 3);
    check(without(complete(5), {0, 1}), 0, 6);
    check(k33(), 1, 3);
    check(cube(), 0, 6);
    check(petersen(), 1, 5);
    const auto start = std::chrono::steady_clock::now();
    check(complete(6), 1, 9);
    CHECK(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() < 60.0);
}

TEST_CASE("complete bipartite genus") {
    // ceil((a-2)(b-2)/4)
    for (auto [a, b] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 5}, {3, 3}, {3, 4}, {3, 5}, {4, 4}}) {
        const auto want = static_cast<std::int64_t>(((a - 2) * (b - 2) + 3) / 4);
        CHECK(exact_genus(k_mn(a, b)).genus == want);
    }
}

TEST_CASE("exact genus agrees with tracing every rotation system") {
    for (std::uint64_t mask = 0; mask < (1U << 10); ++mask) {
        const Graph g = from_mask(5, mask);
        CHECK(exact_genus(g).genus == brute_genus(g));
    }
    std::mt19937_64 gen(13);
    for (int rep = 0; rep < 40; ++rep) {
        const Graph g = random_graph(6 + rep % 2, 0.45, gen);
        if (search_size(g) > 2e4) continue;
        CHECK(exact_genus(g).genus == brute_genus(g));
    }
}

TEST_CASE("disconnected graphs and blocks add") {
    const auto two = exact_genus(disjoint(complete(5), complete(5), 5));
    CHECK(two.genus == 2);
    CHECK(two.f_min == 20 - 10 + 2 + 1 - 4);
    CHECK(exact_genus(disjoint(complete(5), complete(5), 4)).genus == 2);
    CHECK(exact_genus(disjoint(k33(), cycle(4), 6)).genus == 1);
    CHECK(exact_genus(Graph(3)).genus == 0);
    CHECK(exact_genus(Graph(3)).f_min == 1);
    CHECK(biconnected_blocks(disjoint(complete(5), complete(5), 4)).size() == 2);
    CHECK(biconnected_blocks(path(5)).size() == 4);
}

TEST_CASE("budget exhaustion reports a valid upper bound") {
    // K3,3 with every edge subdivided: the Euler floor is 0, so planarity has to be refuted
    std::vector<Edge> e;
    Vertex mid = 6;
    for (Vertex a = 0; a < 3; ++a)
        for (Vertex b = 3; b < 6; ++b, ++mid) e.insert(e.end(), {{a, mid}, {b, mid}});
    const Graph sub(15, e);
    CHECK(exact_genus(sub).genus == 1);
    try {
        (void)exact_genus(sub, 5);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& ex) {
        CHECK(ex.budget() == 5);
        CHECK(ex.best_upper() >= 1);
        CHECK(ex.best_upper() <= genus_upper_bound(sub));
    }
}

TEST_CASE("genus bounds") {
    CHECK(genus_upper_bound(path(9)) == 0);
    CHECK(genus_upper_bound(complete(5)) == 3);
    CHECK(genus_upper_bound(Graph(4)) == 0);
    CHECK(genus_lower_bound_short_cycles(path(9), 4) == 0);
    const auto k5 = genus_lower_bound_short_cycles(complete(5), 3);
    CHECK(k5 >= 0);
    CHECK(k5 <= 1);
    // C = 10 triangles: F = (20 + 20) / 4 = 10 faces, so no information
    CHECK(k5 == 0);
    CHECK(genus_lower_bound_density(complete(5)) == 1);
    CHECK(genus_lower_bound_density(complete(8)) == 2);
    CHECK_THROWS_AS(genus_lower_bound_short_cycles(complete(5), 2), DomainError);
    CHECK(perturbation_upper_bound(0, 5) == 5);
    CHECK(perturbation_upper_bound(3, 0) == 3);
    CHECK_THROWS_AS(perturbation_upper_bound(-1, 0), DomainError);

    const Graph dense = gnm(400, 20000, {3, 0});
    const double ratio = static_cast<double>(genus_upper_bound(dense)) / 20000.0;
    CHECK(ratio >= 0.49);
    CHECK(ratio <= 0.5);
    const auto best = best_genus_lower_bound(dense, 3);
    CHECK(best.value >= genus_lower_bound_density(dense));
    CHECK(best.value <= genus_upper_bound(dense));
    const auto b = genus_bounds(dense, 3);
    CHECK(b.lower <= b.upper);
}

TEST_CASE("corpus invariants") {
    const auto corpus = load_default_corpus();
    REQUIRE(corpus.size() == 143);
    for (const auto& entry : corpus) {
        CAPTURE(entry.name);
        const Graph& g = entry.graph;
        const auto exact = exact_genus(g).genus;
        CHECK(exact == entry.genus);
        CHECK(exact_genus(two_core(g).graph).genus == exact);
        if (g.order() >= 3)
            CHECK(static_cast<std::int64_t>(g.size()) <= 3 * static_cast<std::int64_t>(g.order()) - 6 + 6 * exact);
        CHECK(genus_upper_bound(g) >= exact);
        CHECK(genus_lower_bound_density(g) <= exact);
        for (unsigned ell = 3; ell <= 6; ++ell) CHECK(genus_lower_bound_short_cycles(g, ell) <= exact);
    }
}

TEST_CASE("contracting connected sets never raises the genus") {
    std::mt19937_64 gen(17);
    auto sweep = [&](const Graph& g, int reps) {
        if (g.order() < 2) return;
        const auto base = exact_genus(g).genus;
        for (int rep = 0; rep < reps; ++rep) {
            const std::size_t parts_n = 2 + gen() % (g.order() - 1);
            std::vector<std::vector<Vertex>> raw(parts_n);
            for (Vertex v = 0; v < g.order(); ++v) {
                const auto slot = gen() % (parts_n + 1);
                if (slot < parts_n) raw[slot].push_back(v);
            }
            std::vector<std::vector<Vertex>> parts;
            for (auto& p : raw) {
                if (p.empty()) continue;
                const auto sub = induced_subgraph(g, p);
                if (count_components(sub.graph) == 1) parts.push_back(p);
            }
            if (parts.empty()) continue;
            CHECK(exact_genus(contract_sets(g, parts)).genus <= base);
        }
    };
    for (const auto& entry : load_default_corpus()) sweep(entry.graph, 6);
    for (int rep = 0; rep < 30; ++rep) {
        const Graph g = random_graph(7 + rep % 2, 0.35, gen);
        if (search_size(g) > 2e6) continue;
        sweep(g, 4);
    }
}

TEST_CASE("random edges on a planar graph raise the genus by at most their number") {
    std::uint64_t t = 0;
    auto run = [&](const Graph& h) {
        const std::uint64_t pairs = h.order() * (h.order() - 1) / 2;
        for (std::uint64_t k = 0; k <= 3 && k <= pairs; ++k) {
            const auto p = perturb(h, k, {41, t++});
            if (search_size(p.graph) > 2e6) continue;
            CHECK(exact_genus(p.graph).genus <= static_cast<std::int64_t>(k));
        }
    };
    for (const auto& entry : load_default_corpus())
        if (entry.genus == 0) run(entry.graph);
    run(path(8));
    run(cycle(8));
    run(cube());
}
