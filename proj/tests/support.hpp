#pragma once

// Named graphs and brute-force oracles shared by the test programs. Nothing
// here calls into the library beyond the Graph type itself.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "rgenus/graph.hpp"

namespace rgenus::test {

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) e.push_back({a, b});
    return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex a = 0; a < n; ++a) e.push_back({a, static_cast<Vertex>((a + 1) % n)});
    return Graph::union_of(n, e);
}

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex a = 1; a < n; ++a) e.push_back({a - 1, a});
    return Graph(n, e);
}

inline Graph without(const Graph& g, Edge drop) {
    std::vector<Edge> e;
    for (const Edge& x : g.edges())
        if (x != drop.normalized()) e.push_back(x);
    return Graph(g.order(), e);
}

inline Graph with(const Graph& g, Edge add) {
    auto e = g.edges();
    e.push_back(add);
    return Graph::union_of(g.order(), e);
}

inline Graph k33() {
    std::vector<Edge> e;
    for (Vertex a = 0; a < 3; ++a)
        for (Vertex b = 3; b < 6; ++b) e.push_back({a, b});
    return Graph(6, e);
}

inline Graph cube() {
    std::vector<Edge> e;
    for (Vertex a = 0; a < 8; ++a)
        for (Vertex bit = 1; bit < 8; bit <<= 1)
            if ((a & bit) == 0) e.push_back({a, a | bit});
    return Graph(8, e);
}

inline Graph petersen() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.push_back({i, static_cast<Vertex>((i + 1) % 5)});
        e.push_back({i, static_cast<Vertex>(i + 5)});
        e.push_back({static_cast<Vertex>(i + 5), static_cast<Vertex>((i + 2) % 5 + 5)});
    }
    return Graph::union_of(10, e);
}

// Graph from a bitmask over the pairs of [n] in lexicographic order.
inline Graph from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> e;
    unsigned bit = 0;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b, ++bit)
            if (mask >> bit & 1U) e.push_back({a, b});
    return Graph(n, e);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& gen) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (coin(gen)) e.push_back({a, b});
    return Graph(n, e);
}

inline std::size_t count_components(const Graph& g) {
    std::vector<int> mark(g.order(), -1);
    std::size_t k = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (mark[s] >= 0) continue;
        std::vector<Vertex> st{s};
        mark[s] = static_cast<int>(k);
        while (!st.empty()) {
            Vertex x = st.back();
            st.pop_back();
            for (Vertex y : g.neighbors(x))
                if (mark[y] < 0) {
                    mark[y] = static_cast<int>(k);
                    st.push_back(y);
                }
        }
        ++k;
    }
    return k;
}

// Every simple cycle of length <= L: each vertex subset, each ordering with
// the smallest vertex first and second < last.
inline std::set<std::vector<Vertex>> brute_cycles(const Graph& g, unsigned L) {
    std::set<std::vector<Vertex>> out;
    const std::size_t n = g.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const auto k = static_cast<unsigned>(std::popcount(mask));
        if (k < 3 || k > L) continue;
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1U) vs.push_back(v);
        std::vector<Vertex> rest(vs.begin() + 1, vs.end());
        do {
            if (rest.front() > rest.back()) continue;
            std::vector<Vertex> cyc{vs.front()};
            cyc.insert(cyc.end(), rest.begin(), rest.end());
            bool ok = true;
            for (std::size_t i = 0; i < cyc.size() && ok; ++i) ok = g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
            if (ok) out.insert(cyc);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return out;
}

struct BruteNeighborhood {
    std::uint64_t leaf = 0, good = 0, bad = 0, neighbors = 0;
};

// Deletes V(C), labels the components of what is left, and classifies them.
inline BruteNeighborhood brute_neighborhood(const Graph& g, const std::vector<Vertex>& cyc) {
    const std::size_t n = g.order();
    std::vector<char> on(n, 0);
    for (Vertex v : cyc) on[v] = 1;
    std::vector<int> comp(n, -1);
    std::vector<std::uint64_t> verts, edges2, attach;
    for (Vertex s = 0; s < n; ++s) {
        if (on[s] || comp[s] >= 0) continue;
        const int id = static_cast<int>(verts.size());
        verts.push_back(0);
        edges2.push_back(0);
        attach.push_back(0);
        std::vector<Vertex> st{s};
        comp[s] = id;
        while (!st.empty()) {
            Vertex x = st.back();
            st.pop_back();
            ++verts[id];
            for (Vertex y : g.neighbors(x)) {
                if (on[y]) {
                    ++attach[id];
                    continue;
                }
                ++edges2[id];
                if (comp[y] < 0) {
                    comp[y] = id;
                    st.push_back(y);
                }
            }
        }
    }
    BruteNeighborhood r;
    std::vector<char> leaf(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (on[v]) continue;
        const int id = comp[v];
        if (edges2[id] / 2 + 1 == verts[id] && attach[id] == 1) {
            leaf[v] = 1;
            ++r.leaf;
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (on[v]) continue;
        std::uint64_t hits = 0;
        for (Vertex y : g.neighbors(v)) hits += on[y];
        if (hits > 0) ++r.neighbors;
        if (leaf[v] || hits == 0) continue;
        if (hits == 1) ++r.good;
        else ++r.bad;
    }
    return r;
}

// Shi(x) = sum_k x^{2k+1} / ((2k+1) (2k+1)!), the closed form of the
// lambda(i) double integral at x = 2i.
inline double shi(double x) {
    long double term = x;  // x^{2k+1}/(2k+1)!
    long double sum = 0;
    for (int k = 0; k < 200; ++k) {
        sum += term / (2 * k + 1);
        term *= static_cast<long double>(x) * x / ((2.0L * k + 2) * (2.0L * k + 3));
        if (term < 1e-30L * sum) break;
    }
    return static_cast<double>(sum);
}

// u(c) by direct summation of `terms` terms, each evaluated from logs.
inline long double u_direct(double c, std::uint64_t terms) {
    if (c == 0) return 1;
    const long double lx = std::log(static_cast<long double>(c)) - c;
    long double sum = 0;
    for (std::uint64_t r = 1; r <= terms; ++r) {
        const long double rl = static_cast<long double>(r);
        const long double lt = (rl - 2) * std::log(rl) - std::lgamma(rl + 1) + rl * lx;
        if (lt < -11400) break;  // below the smallest long double
        sum += std::exp(lt);
    }
    return sum / c;
}

// Monte Carlo estimate of the lambda(i) integral. Substituting y = x^2 / z^2
// turns the inner integral into int 2 exp(-z^2/2 - 2x^2/z^2) dz, which is
// sampled with a half-normal z; x is stratified over [0, i].
struct McEstimate {
    double mean = 0, stderr_ = 0;
};
inline McEstimate lambda_mc(double i, std::uint64_t samples, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unit;
    const std::uint64_t strata = 1000;
    const std::uint64_t per = std::max<std::uint64_t>(2, samples / strata);
    double total = 0, var = 0;
    for (std::uint64_t k = 0; k < strata; ++k) {
        double s = 0, s2 = 0;
        for (std::uint64_t j = 0; j < per; ++j) {
            const double x = i * (static_cast<double>(k) + unit(gen)) / static_cast<double>(strata);
            const double z = std::abs(normal(gen));
            const double f = x > 0 ? 0.5 * std::expm1(4 * x) / x * std::exp(-2 * x * x / (z * z)) : 0.0;
            s += f;
            s2 += f * f;
        }
        const double m = s / static_cast<double>(per);
        const double v = (s2 / static_cast<double>(per) - m * m) / static_cast<double>(per - 1);
        total += m * i / static_cast<double>(strata);
        var += v * (i / static_cast<double>(strata)) * (i / static_cast<double>(strata));
    }
    return {total, std::sqrt(var)};
}

// graph6, n <= 62.
inline Graph from_graph6(const std::string& line) {
    if (line.empty() || line[0] < 63 || line[0] > 63 + 62) throw std::runtime_error("bad graph6 line: " + line);
    const std::size_t n = static_cast<std::size_t>(line[0] - 63);
    std::vector<Edge> e;
    std::size_t bit = 0;
    for (Vertex b = 1; b < n; ++b)
        for (Vertex a = 0; a < b; ++a, ++bit) {
            const std::size_t pos = 1 + bit / 6;
            if (pos >= line.size()) throw std::runtime_error("short graph6 line: " + line);
            if ((line[pos] - 63) >> (5 - bit % 6) & 1) e.push_back({a, b});
        }
    return Graph(n, e);
}

inline std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(from_graph6(line));
    return out;
}

}  // namespace rgenus::test
