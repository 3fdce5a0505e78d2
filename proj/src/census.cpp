#include "rgenus/census.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rgenus/embedding.hpp"
#include "rgenus/error.hpp"

namespace rgenus {

NeighborhoodClassifier::NeighborhoodClassifier(const Graph& g)
    : g_(g),
      on_cycle_(g.order(), 0),
      seen_(g.order(), 0),
      in_leaf_(g.order(), 0),
      nb_stamp_(g.order(), 0),
      nb_mult_(g.order(), 0),
      parent_(g.order(), kNoVertex) {}

CycleNeighborhood NeighborhoodClassifier::classify(std::span<const Vertex> cycle) {
    const std::size_t n = g_.order();
    if (round_ == std::numeric_limits<std::uint32_t>::max()) {
        std::fill(on_cycle_.begin(), on_cycle_.end(), 0);
        std::fill(nb_stamp_.begin(), nb_stamp_.end(), 0);
        round_ = 0;
    }
    const std::uint32_t round = ++round_;
    round_start_ = search_;

    if (cycle.size() < 3) throw GraphError("a cycle needs at least 3 vertices");
    for (Vertex v : cycle) {
        if (v >= n) throw GraphError("cycle vertex out of range");
        if (on_cycle_[v] == round) throw GraphError("cycle repeats a vertex");
        on_cycle_[v] = round;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!g_.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]))
            throw GraphError("consecutive cycle vertices are not adjacent");
    }

    nbrs_.clear();
    for (Vertex c : cycle) {
        for (Vertex w : g_.neighbors(c)) {
            if (on_cycle_[w] == round) continue;
            if (nb_stamp_[w] != round) {
                nb_stamp_[w] = round;
                nb_mult_[w] = 0;
                nbrs_.push_back(w);
            }
            ++nb_mult_[w];
        }
    }

    CycleNeighborhood out;
    out.cycle = canonical_cycle({cycle.begin(), cycle.end()});
    out.neighbors = nbrs_.size();

    auto attachments = [&](Vertex v) -> std::uint64_t { return nb_stamp_[v] == round ? nb_mult_[v] : 0; };

    for (Vertex start : nbrs_) {
        if (seen_[start] > round_start_) continue;
        const std::uint64_t id = ++search_;
        queue_.clear();
        queue_.push_back(start);
        seen_[start] = id;
        parent_[start] = kNoVertex;
        std::uint64_t attach = attachments(start);
        bool leaf = attach == 1;
        for (std::size_t head = 0; leaf && head < queue_.size(); ++head) {
            const Vertex x = queue_[head];
            for (Vertex y : g_.neighbors(x)) {
                if (on_cycle_[y] == round || y == parent_[x]) continue;
                if (seen_[y] > round_start_) {
                    // Either a cycle inside this component or contact with a
                    // component already found not to be a leaf tree.
                    leaf = false;
                    break;
                }
                seen_[y] = id;
                parent_[y] = x;
                queue_.push_back(y);
                attach += attachments(y);
                if (attach > 1) {
                    leaf = false;
                    break;
                }
            }
        }
        for (Vertex v : queue_) in_leaf_[v] = leaf ? 1 : 0;
        if (leaf) out.leaf_size += queue_.size();
    }

    for (Vertex w : nbrs_) {
        if (in_leaf_[w]) continue;
        if (nb_mult_[w] == 1)
            ++out.good;
        else
            ++out.bad;
    }
    return out;
}

CycleNeighborhood classify_cycle_neighborhood(const Graph& g, const Cycle& c) {
    NeighborhoodClassifier classifier(g);
    return classifier.classify(c.vertices);
}

namespace {

double log_ratio(std::uint64_t n, std::uint64_t s) {
    const double nd = static_cast<double>(n);
    const double sd = static_cast<double>(s);
    return std::log(sd * sd * sd / (nd * nd));
}

unsigned clamp_length(double length) {
    if (!(length >= 0.0)) return 0;
    return static_cast<unsigned>(std::min(length, 1e9));
}

}  // namespace

ZCount count_Z(const Graph& g, std::uint64_t s, double i, std::uint64_t cap) {
    if (s == 0) throw DomainError("count_Z requires s > 0");
    if (!(i >= 0.0) || !std::isfinite(i)) throw DomainError("count_Z requires finite i >= 0");
    const std::uint64_t n = g.order();
    const double nd = static_cast<double>(n);
    const double sd = static_cast<double>(s);
    ZCount out;
    out.x = n > 0 ? 0.05 * log_ratio(n, s) : 0.0;
    const unsigned max_length = clamp_length(std::floor(i * nd / sd));
    if (max_length < 3) return out;
    const double leaf_max = out.x * nd * nd / (sd * sd);
    const double good_max = out.x * nd / sd;
    NeighborhoodClassifier classifier(g);
    for_each_cycle(g, max_length, cap, [&](std::span<const Vertex> c) {
        const CycleNeighborhood nb = classifier.classify(c);
        if (nb.bad == 0 && nb.good >= 1 && static_cast<double>(nb.good) <= good_max &&
            static_cast<double>(nb.leaf_size) <= leaf_max)
            ++out.z;
    });
    return out;
}

std::uint64_t fact8_length(std::uint64_t n, std::uint64_t s) {
    if (s == 0) throw DomainError("fact8_length requires s > 0");
    const double length = 0.1 * static_cast<double>(n) / static_cast<double>(s) * log_ratio(n, s);
    return length > 0.0 ? static_cast<std::uint64_t>(std::floor(length)) : 0;
}

bool fact8_check(const Graph& g, std::uint64_t L, std::uint64_t cap) {
    if (L < 1) throw DomainError("fact8_check requires L >= 1");
    if (L <= 3) return true;
    const unsigned max_length = static_cast<unsigned>(std::min<std::uint64_t>(L - 1, 1'000'000'000));
    const std::vector<Cycle> cycles = cycles_up_to(g, max_length, cap);
    if (cycles.size() < 2) return true;

    const std::size_t n = g.order();
    std::vector<std::uint32_t> mark(n, 0);
    std::vector<std::uint32_t> dist_stamp(n, 0);
    std::vector<std::uint32_t> dist(n, 0);
    std::vector<Vertex> frontier, next;
    std::uint32_t stamp = 0;

    for (std::size_t a = 0; a < cycles.size(); ++a) {
        const Cycle& c1 = cycles[a];
        ++stamp;
        for (Vertex v : c1.vertices) mark[v] = stamp;
        // Multi-source BFS from C1, deep enough for the shortest partner cycle.
        const std::uint64_t depth_limit = L > c1.length() + 3 ? L - c1.length() - 3 : 0;
        frontier.assign(c1.vertices.begin(), c1.vertices.end());
        for (Vertex v : frontier) {
            dist_stamp[v] = stamp;
            dist[v] = 0;
        }
        for (std::uint32_t d = 1; d <= depth_limit && !frontier.empty(); ++d) {
            next.clear();
            for (Vertex x : frontier)
                for (Vertex y : g.neighbors(x))
                    if (dist_stamp[y] != stamp) {
                        dist_stamp[y] = stamp;
                        dist[y] = d;
                        next.push_back(y);
                    }
            frontier.swap(next);
        }
        for (std::size_t b = a + 1; b < cycles.size(); ++b) {
            const Cycle& c2 = cycles[b];
            std::uint64_t shared = 0;
            std::uint64_t gap = std::numeric_limits<std::uint64_t>::max();
            for (Vertex v : c2.vertices) {
                if (mark[v] == stamp) ++shared;
                if (dist_stamp[v] == stamp) gap = std::min<std::uint64_t>(gap, dist[v]);
            }
            std::uint64_t vertices;
            if (shared > 0)
                vertices = c1.length() + c2.length() - shared;
            else if (gap != std::numeric_limits<std::uint64_t>::max())
                vertices = c1.length() + c2.length() + gap - 1;
            else
                continue;
            if (vertices < L) return false;
        }
    }
    return true;
}

double default_census_a(std::uint64_t n, std::uint64_t s) {
    if (s == 0) throw DomainError("default_census_a requires s > 0");
    return 0.5 * log_ratio(n, s);
}

bool fact9_check(const Graph& g, double a, std::uint64_t s, std::uint64_t cap) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("fact9_check requires a > 0");
    if (s == 0) throw DomainError("fact9_check requires s > 0");
    const double nd = static_cast<double>(g.order());
    const double sd = static_cast<double>(s);
    const double bound = a * nd / sd;
    // length < bound
    const double top = std::ceil(bound) - 1.0;
    const unsigned max_length = clamp_length(top);
    if (max_length < 3) return true;
    const double leaf_max = a * a * nd * nd / (sd * sd);
    const double nbr_max = a * a * nd / sd;
    NeighborhoodClassifier classifier(g);
    bool ok = true;
    for_each_cycle(g, max_length, cap, [&](std::span<const Vertex> c) {
        if (!ok) return;
        const CycleNeighborhood nb = classifier.classify(c);
        if (!(static_cast<double>(nb.leaf_size) < leaf_max) || !(static_cast<double>(nb.neighbors) < nbr_max))
            ok = false;
    });
    return ok;
}

bool supercritical_in_range(std::uint64_t n, std::uint64_t s) {
    const double nd = static_cast<double>(n);
    const double sd = static_cast<double>(s);
    return sd > std::pow(nd, 2.0 / 3.0) && sd < nd / 2.0;
}

SupercriticalReport supercritical_report(std::uint64_t n, std::uint64_t s, Seed seed,
                                         const SupercriticalOptions& options) {
    if (s == 0) throw DomainError("supercritical_report requires s > 0");
    SupercriticalReport r;
    r.n = n;
    r.s = s;
    r.m = n / 2 + s;
    r.seed = seed;
    const double nd = static_cast<double>(n);
    const double sd = static_cast<double>(s);
    r.predicted = 8.0 * sd * sd * sd / (3.0 * nd * nd);

    const Graph g = gnm(n, r.m, seed);
    const Subgraph giant = giant_component(g);
    const Subgraph core = two_core(giant.graph);
    r.giant_vertices = giant.graph.order();
    r.core_vertices = core.graph.order();
    r.core_edges = core.graph.size();
    r.core_excess = excess(core.graph);
    r.core_components = components(core.graph).kappa;
    r.short_cycle_count = count_cycles_up_to(core.graph, options.ell, options.cap);
    r.genus_upper = genus_upper_bound(core.graph);
    if (options.lower_max_ell > 0) {
        const BestLowerBound best = best_genus_lower_bound(core.graph, options.lower_max_ell, options.cap);
        r.genus_lower = best.value;
        r.genus_lower_ell = best.ell;
    } else {
        r.genus_lower = genus_lower_bound_short_cycles(core.graph, options.ell, options.cap);
        r.genus_lower_ell = options.ell;
    }

    r.x_param = 0.05 * log_ratio(n, s);
    if (options.compute_z) r.z_value = count_Z(g, s, options.z_i, options.cap).z;
    if (options.check_facts) {
        r.fact8 = fact8_check(g, fact8_length(n, s), options.cap);
        r.fact9 = fact9_check(g, options.a.value_or(default_census_a(n, s)), s, options.cap);
    }
    return r;
}

}  // namespace rgenus
