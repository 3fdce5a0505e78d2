#include <doctest.h>

#include <set>

#include "rgenus/embedding.hpp"
#include "rgenus/error.hpp"
#include "rgenus/fragile.hpp"
#include "rgenus/random.hpp"
#include "support.hpp"

using namespace rgenus;
using namespace rgenus::test;

namespace {

bool connected_in(const Graph& h, const std::vector<Vertex>& set) {
    return count_components(induced_subgraph(h, set).graph) == 1;
}

void check_invariants(const Graph& h, const Decomposition& d) {
    const std::uint64_t n = h.order(), ld = d.l * d.delta;
    std::set<Vertex> used;
    std::uint64_t covered = 0;
    REQUIRE(d.cores.size() == d.pieces.size());
    for (std::size_t i = 0; i < d.pieces.size(); ++i) {
        const auto& p = d.pieces[i];
        CHECK(p.size() >= ld);
        CHECK(p.size() <= ld * d.delta);
        CHECK(connected_in(h, p));
        for (Vertex v : p) CHECK(used.insert(v).second);
        covered += p.size();
        const auto& c = d.cores[i];
        CHECK(c.size() == d.s);
        CHECK(connected_in(h, c));
        const std::set<Vertex> ps(p.begin(), p.end());
        for (Vertex v : c) CHECK(ps.count(v) == 1);
    }
    CHECK(covered + ld >= n);
    const double t = static_cast<double>(d.t());
    CHECK(t >= (static_cast<double>(n) - static_cast<double>(ld)) / static_cast<double>(ld * d.delta));
    CHECK(t <= static_cast<double>(n) / static_cast<double>(ld));
}

double search_size(const Graph& g) {
    double total = 1;
    for (Vertex v = 0; v < g.order(); ++v)
        for (std::size_t k = 2; k < g.degree(v); ++k) total *= static_cast<double>(k);
    return total;
}

}  // namespace

TEST_CASE("decompose examples") {
    SUBCASE("path of 100") {
        const Graph h = path(100);
        const auto d = select_cores(h, decompose(h, 5, 2));
        CHECK(d.t() >= 1);
        std::size_t covered = 0;
        for (const auto& p : d.pieces) {
            CHECK(p.size() >= 10);
            CHECK(p.size() <= 20);
            covered += p.size();
            auto sorted = p;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted.back() - sorted.front() + 1 == sorted.size());
        }
        CHECK(covered >= 90);
        check_invariants(h, d);
        for (const auto& c : d.cores) {
            auto sorted = c;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted.back() - sorted.front() + 1 == d.s);
        }
    }
    SUBCASE("star with Delta 4") {
        const Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        const auto d = decompose(star, 1, 4);
        REQUIRE(d.t() == 1);
        CHECK(d.pieces[0].size() == 5);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(decompose(path(10), 6, 2), DomainError);
        CHECK_THROWS_AS(decompose(Graph(10, {{0, 1}}), 1, 2), GraphError);
        const Graph star(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
        try {
            (void)decompose(star, 1, 2);
            FAIL("expected GraphError");
        } catch (const GraphError& e) {
            CHECK(std::string(e.what()).find("star") != std::string::npos);
        }
        CHECK_THROWS_AS(decompose(path(10), 0, 2), DomainError);
    }
}

TEST_CASE("select_cores") {
    const Graph h = path(40);
    const auto even = select_cores(h, decompose(h, 5, 2));
    bool all_equal = true;
    for (const auto& p : even.pieces) all_equal = all_equal && p.size() == even.pieces.front().size();
    if (all_equal)
        for (std::size_t i = 0; i < even.t(); ++i)
            CHECK(std::set<Vertex>(even.pieces[i].begin(), even.pieces[i].end()) ==
                  std::set<Vertex>(even.cores[i].begin(), even.cores[i].end()));
    const Graph k2(2, {{0, 1}});
    const auto single = select_cores(k2, decompose(k2, 1, 1));
    CHECK(single.s == 1);
    for (const auto& c : single.cores) CHECK(c.size() == 1);
}

TEST_CASE("decomposition invariants on base graphs") {
    std::vector<std::pair<Graph, std::uint64_t>> bases;
    for (std::size_t n : {50, 333, 1000}) {
        bases.emplace_back(path(n), 2);
        bases.emplace_back(cycle(n), 2);
    }
    bases.emplace_back(grid_graph(10, 30), 4);
    bases.emplace_back(grid_graph(31, 31), 4);
    for (std::uint64_t t = 0; t < 6; ++t) bases.emplace_back(random_tree(500 + 100 * t, 2 + t % 3, {t, 0}), 2 + t % 3);
    for (const auto& [h, delta] : bases) {
        CHECK(h.max_degree() <= delta);
        for (std::uint64_t l : {1, 2, 3, 7, 12}) {
            if (l * delta > h.order()) continue;
            check_invariants(h, select_cores(h, decompose(h, l, delta)));
        }
    }
}

TEST_CASE("build_gamma and the good-edge census") {
    Decomposition d;
    d.l = 1;
    d.delta = 2;
    d.pieces = {{0, 1, 2}, {3, 4, 5}, {6, 7}, {8, 9, 10, 11}};
    d.cores = {{0, 1}, {3, 4}, {6, 7}, {8, 9}};
    d.s = 2;
    const std::vector<Edge> r{{0, 3}, {1, 4}, {4, 8}, {6, 7}, {7, 2}, {5, 11}};
    const Graph gamma = build_gamma(d, 12, r);
    CHECK(gamma.order() == 4);
    CHECK(gamma.edges() == std::vector<Edge>{{0, 1}, {1, 3}});
    CHECK_FALSE(gamma.has_edge(0, 2));
    CHECK(gamma.degree(2) == 0);
    CHECK(good_edge_census(d, 12, r) == 2);
    CHECK(contract_sets(Graph::union_of(12, r), d.cores) == gamma);

    CHECK(build_gamma(d, 12, {}).size() == 0);
    CHECK(build_gamma(d, 12, {{8, 9}}).size() == 0);
    CHECK(good_edge_census(d, 12, {{0, 3}, {1, 4}}) == 1);
    CHECK(good_edge_census(d, 12, {{2, 5}}) == 0);
}

TEST_CASE("fragile experiment") {
    SUBCASE("long path") {
        const Graph h = path(100'000);
        const auto r = fragile_experiment(h, 2, 5000, {1, 0}, 4);
        CHECK(r.l == 120);
        CHECK(r.t >= 207);
        CHECK(r.t <= 417);
        CHECK(r.t_in_range);
        CHECK(r.gamma_edges == r.good_edge_count);
        CHECK(r.good_edge_count <= 5000);
        CHECK(r.genus_lower_gamma >= 0);
        CHECK(r.upper_bound == 5000);
        CHECK_FALSE(r.dense_branch);
    }
    SUBCASE("dense branch") {
        const auto r = fragile_experiment(path(50), 2, 300, {2, 0}, 4);
        CHECK(r.dense_branch);
        CHECK(r.genus_lower_gamma >= 1);
        CHECK(r.upper_bound == 300);
    }
    SUBCASE("planar grid") {
        const Graph h = grid_graph(25, 25);
        const auto r = fragile_experiment(h, 4, 62, {3, 0}, 4);
        CHECK(r.l == 121);
        CHECK(r.upper_bound == genus_upper_bound(h) + 62);
        CHECK(fragile_l(400, 4, 40) == 120);
    }
    SUBCASE("unbounded degree is rejected") {
        const Graph star(30, [] {
            std::vector<Edge> e;
            for (Vertex v = 1; v < 30; ++v) e.push_back({0, v});
            return e;
        }());
        CHECK_THROWS_AS(fragile_experiment(star, 3, 10, {1, 0}, 4), GraphError);
    }
    SUBCASE("shared decomposition gives the same report") {
        const Graph h = cycle(3000);
        const auto d = fragile_decomposition(h, 2, 200);
        REQUIRE(d.has_value());
        const auto a = fragile_experiment(h, 2, 200, {5, 1}, 4, &*d);
        const auto b = fragile_experiment(h, 2, 200, {5, 1}, 4);
        CHECK(a.t == b.t);
        CHECK(a.gamma_edges == b.gamma_edges);
        CHECK(a.genus_lower_gamma == b.genus_lower_gamma);
    }
}

TEST_CASE("Gamma is a minor of H plus R") {
    std::uint64_t trial = 0;
    std::vector<std::pair<Graph, std::uint64_t>> bases{{path(8), 2}, {cycle(8), 2}, {grid_graph(2, 4), 3}, {path(7), 2},
                                                       {random_tree(8, 3, {4, 4}), 3}};
    for (const auto& [h, delta] : bases)
        for (std::uint64_t l = 1; l * delta <= 4; ++l)
            for (std::uint64_t k = 2; k <= 9; ++k)
                for (int rep = 0; rep < 3; ++rep) {
                    const auto d = select_cores(h, decompose(h, l, delta));
                    const auto p = perturb(h, k, {61, trial++});
                    if (search_size(p.graph) > 3e6) continue;
                    const Graph gamma = build_gamma(d, h.order(), p.random_edges);
                    CHECK(exact_genus(p.graph).genus >= exact_genus(gamma).genus);
                }
}

TEST_CASE("good edges dominate Bin(k, 1/(2 Delta^2)) on average") {
    const Graph h = path(20'000);
    const std::uint64_t k = 800, delta = 2;
    const auto d = fragile_decomposition(h, delta, k);
    REQUIRE(d.has_value());
    double total = 0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t)
        total += static_cast<double>(fragile_experiment(h, delta, k, {71, static_cast<std::uint64_t>(t)}, 3, &*d).good_edge_count);
    const double kd = static_cast<double>(k);
    CHECK(total / trials >= kd / 8.0 - 3.0 * std::sqrt(kd) / 4.0);
}
