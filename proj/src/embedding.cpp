#include "rgenus/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rgenus/error.hpp"

namespace rgenus {

RotationSystem RotationSystem::sorted(const Graph& g) {
    RotationSystem rot;
    rot.order.resize(g.order());
    for (std::size_t v = 0; v < g.order(); ++v) {
        auto row = g.neighbors(static_cast<Vertex>(v));
        rot.order[v].assign(row.begin(), row.end());
    }
    return rot;
}

namespace {

// Darts 2i and 2i+1 are the two orientations of edge i: 2i = (u -> v) and
// 2i+1 = (v -> u) for edges()[i] = {u, v}.
struct DartTable {
    std::vector<Vertex> tail;
    std::vector<Vertex> head;
    // Outgoing darts per vertex, aligned with Graph::neighbors.
    std::vector<std::vector<std::uint32_t>> out;

    explicit DartTable(const Graph& g) : out(g.order()) {
        const auto& edges = g.edges();
        tail.resize(2 * edges.size());
        head.resize(2 * edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            tail[2 * i] = edges[i].u;
            head[2 * i] = edges[i].v;
            tail[2 * i + 1] = edges[i].v;
            head[2 * i + 1] = edges[i].u;
        }
        // Neighbor rows are sorted, so place darts by neighbor rank.
        for (std::size_t v = 0; v < g.order(); ++v) out[v].resize(g.degree(static_cast<Vertex>(v)));
        for (std::uint32_t d = 0; d < tail.size(); ++d) {
            auto row = g.neighbors(tail[d]);
            auto pos = std::lower_bound(row.begin(), row.end(), head[d]) - row.begin();
            out[tail[d]][static_cast<std::size_t>(pos)] = d;
        }
    }
};

// Counts orbits of d -> next_at[d ^ 1]; optionally records their lengths.
std::size_t count_faces(const std::vector<std::uint32_t>& next_at, std::vector<char>& seen,
                        std::vector<std::size_t>* lengths) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t faces = 0;
    for (std::uint32_t d = 0; d < next_at.size(); ++d) {
        if (seen[d]) continue;
        ++faces;
        std::size_t len = 0;
        std::uint32_t cur = d;
        while (!seen[cur]) {
            seen[cur] = 1;
            ++len;
            cur = next_at[cur ^ 1U];
        }
        if (lengths) lengths->push_back(len);
    }
    return faces;
}

std::int64_t as_i64(std::size_t x) { return static_cast<std::int64_t>(x); }

}  // namespace

EmbeddingReport trace_faces(const Graph& g, const RotationSystem& rot) {
    if (rot.order.size() != g.order())
        throw EmbeddingError("rotation system has " + std::to_string(rot.order.size()) +
                             " vertices, graph has " + std::to_string(g.order()));
    DartTable darts(g);
    std::vector<std::uint32_t> next_at(darts.tail.size());
    for (std::size_t v = 0; v < g.order(); ++v) {
        const auto& cyc = rot.order[v];
        auto row = g.neighbors(static_cast<Vertex>(v));
        std::vector<Vertex> check(cyc);
        std::sort(check.begin(), check.end());
        if (!std::equal(check.begin(), check.end(), row.begin(), row.end()))
            throw EmbeddingError("rotation at vertex " + std::to_string(v) +
                                 " is not a cyclic order of its neighbors");
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            auto rank = [&](Vertex w) {
                return static_cast<std::size_t>(std::lower_bound(row.begin(), row.end(), w) - row.begin());
            };
            next_at[darts.out[v][rank(cyc[i])]] = darts.out[v][rank(cyc[(i + 1) % cyc.size()])];
        }
    }
    EmbeddingReport report;
    std::vector<char> seen(next_at.size());
    const std::size_t traced = count_faces(next_at, seen, &report.face_lengths);
    const auto parts = components(g);
    std::size_t isolated = 0;
    for (std::size_t v = 0; v < g.order(); ++v) isolated += g.degree(static_cast<Vertex>(v)) == 0;
    // Per-component faces (an isolated vertex is a sphere with one face),
    // merged onto one surface: kappa - 1 merges.
    const std::size_t per_component = traced + isolated;
    report.face_count = parts.kappa == 0 ? 0 : per_component - (parts.kappa - 1);
    const std::int64_t twice =
        as_i64(g.size()) - as_i64(g.order()) - as_i64(report.face_count) + as_i64(parts.kappa) + 1;
    report.genus = twice / 2;
    return report;
}

std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
    const std::size_t n = g.order();
    constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> disc(n, unvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<std::vector<Edge>> blocks;
    std::vector<Edge> edge_stack;

    struct Frame {
        Vertex v;
        Vertex parent;
        std::size_t next;
    };
    std::vector<Frame> stack;
    std::uint32_t clock = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root] != unvisited || g.degree(static_cast<Vertex>(root)) == 0) continue;
        disc[root] = low[root] = clock++;
        stack.push_back({static_cast<Vertex>(root), kNoVertex, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto row = g.neighbors(f.v);
            if (f.next < row.size()) {
                const Vertex w = row[f.next++];
                if (w == f.parent) continue;
                if (disc[w] == unvisited) {
                    edge_stack.push_back({f.v, w});
                    disc[w] = low[w] = clock++;
                    stack.push_back({w, f.v, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            const Vertex v = f.v;
            const Vertex parent = f.parent;
            stack.pop_back();
            if (parent == kNoVertex) continue;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] >= disc[parent]) {
                std::vector<Edge> block;
                while (true) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e.normalized());
                    if ((e.u == parent && e.v == v)) break;
                }
                blocks.push_back(std::move(block));
            }
        }
    }
    return blocks;
}

namespace {

unsigned girth(const Graph& g) {
    unsigned best = std::numeric_limits<unsigned>::max();
    const std::size_t n = g.order();
    std::vector<int> dist(n);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> queue;
    for (std::size_t s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.assign(1, static_cast<Vertex>(s));
        dist[s] = 0;
        parent[s] = kNoVertex;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    best = std::min(best, static_cast<unsigned>(dist[v] + dist[w] + 1));
                }
            }
        }
    }
    return best;
}

struct BlockResult {
    std::int64_t genus;
    std::uint64_t visited;
};

// Rotation systems of one biconnected block (relabeled compactly), built by
// inserting edges one at a time into a growing embedding. An edge to a new
// vertex leaves the face count alone; an edge between two present vertices
// either splits a face (both corners on it) or merges two faces. Every
// rotation system arises from exactly one sequence of corner choices, and a
// genus-g embedding of a connected graph uses exactly g merges, so the search
// for genus g allows g merges. Targets run upward from the Euler/girth floor.
class BlockSearch {
public:
    BlockSearch(const Graph& block, std::uint64_t budget) : block_(block), budget_(budget) {
        const std::int64_t e = as_i64(block.size()), v = as_i64(block.order());
        const std::int64_t max_faces = 2 * e / static_cast<std::int64_t>(girth(block));
        floor_genus_ = std::max<std::int64_t>(0, (e - v + 2 - max_faces + 1) / 2);
        best_genus_ = (e - v + 1) / 2;
        order_edges();
        const std::size_t nd = 2 * edges_.size();
        next_rot_.assign(nd, kNone);
        prev_rot_.assign(nd, kNone);
        first_dart_.assign(block.order(), kNone);
        face_of_.assign(nd, 0);
    }

    BlockResult run() {
        greedy();
        for (std::int64_t g = floor_genus_; g < best_genus_; ++g) {
            merges_left_ = g;
            if (search(0)) {
                best_genus_ = g;
                break;
            }
        }
        return {best_genus_, visited_};
    }

private:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    // BFS from a maximum-degree vertex; edges back into the placed part come
    // as soon as both ends are present so the face constraints bite early.
    void order_edges() {
        const std::size_t nv = block_.order();
        Vertex root = 0;
        for (std::size_t x = 1; x < nv; ++x)
            if (block_.degree(static_cast<Vertex>(x)) > block_.degree(root)) root = static_cast<Vertex>(x);
        root_ = root;
        std::vector<char> placed(nv, 0);
        std::vector<Vertex> queue{root};
        placed[root] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            for (Vertex w : block_.neighbors(x)) {
                if (placed[w]) continue;
                placed[w] = 1;
                queue.push_back(w);
                edges_.push_back({x, w});
                for (Vertex z : block_.neighbors(w))
                    if (z != x && placed[z]) edges_.push_back({w, z});
            }
        }
    }

    // Dart 2i leaves edges_[i].u, dart 2i+1 leaves edges_[i].v.
    Vertex tail(std::uint32_t d) const { return d % 2 == 0 ? edges_[d / 2].u : edges_[d / 2].v; }

    // Next dart on the face after d.
    std::uint32_t face_next(std::uint32_t d) const { return next_rot_[d ^ 1U]; }

    // Labels the faces of the first `placed` edges; returns their number.
    std::uint32_t label_faces(std::size_t placed) {
        const auto nd = static_cast<std::uint32_t>(2 * placed);
        std::fill(face_of_.begin(), face_of_.begin() + nd, kNone);
        std::uint32_t faces = 0;
        for (std::uint32_t d = 0; d < nd; ++d) {
            if (face_of_[d] != kNone) continue;
            for (std::uint32_t cur = d; face_of_[cur] == kNone; cur = face_next(cur)) face_of_[cur] = faces;
            ++faces;
        }
        return faces;
    }

    // Puts dart d into the rotation of its tail right after dart `after`
    // (kNone when the tail has no darts yet).
    void insert(std::uint32_t d, std::uint32_t after) {
        if (after == kNone) {
            next_rot_[d] = prev_rot_[d] = d;
            first_dart_[tail(d)] = d;
            return;
        }
        const std::uint32_t nx = next_rot_[after];
        next_rot_[after] = d;
        prev_rot_[d] = after;
        next_rot_[d] = nx;
        prev_rot_[nx] = d;
    }

    void remove(std::uint32_t d) {
        if (next_rot_[d] == d) {
            first_dart_[tail(d)] = kNone;
        } else {
            next_rot_[prev_rot_[d]] = next_rot_[d];
            prev_rot_[next_rot_[d]] = prev_rot_[d];
            if (first_dart_[tail(d)] == d) first_dart_[tail(d)] = next_rot_[d];
        }
        next_rot_[d] = prev_rot_[d] = kNone;
    }

    // Corners at x: the darts after which a new dart can go.
    std::vector<std::uint32_t> corners(Vertex x) const {
        std::vector<std::uint32_t> out;
        const std::uint32_t first = first_dart_[x];
        if (first == kNone) return {kNone};
        std::uint32_t d = first;
        do {
            out.push_back(d);
            d = next_rot_[d];
        } while (d != first);
        // reflection: the third dart at the root goes on one side only
        if (x == root_ && out.size() == 2) out.resize(1);
        return out;
    }

    // Corner after dart a at tail(a) lies on the face entered by a ^ 1.
    std::uint32_t corner_face(std::uint32_t a) const { return face_of_[a ^ 1U]; }

    bool search(std::size_t i) {
        if (i == edges_.size()) return true;
        const auto du = static_cast<std::uint32_t>(2 * i), dv = du + 1;
        const Edge e = edges_[i];
        if (i == 0) {
            insert(du, kNone);
            insert(dv, kNone);
            const bool ok = search(1);
            remove(du);
            remove(dv);
            return ok;
        }
        const auto cu = corners(e.u), cv = corners(e.v);
        const bool fresh = cv.front() == kNone;
        if (!fresh) label_faces(i);
        // splits first, then merges while any are left
        for (int pass = 0; pass < (fresh ? 1 : 2); ++pass) {
            if (pass == 1 && merges_left_ == 0) break;
            for (std::uint32_t a : cu)
                for (std::uint32_t b : cv) {
                    if (!fresh) {
                        const bool same = corner_face(a) == corner_face(b);
                        if (same != (pass == 0)) continue;
                    }
                    if (++visited_ > budget_) throw BudgetExceeded(budget_, best_genus_);
                    insert(du, a);
                    insert(dv, b);
                    if (pass == 1) --merges_left_;
                    const bool ok = search(i + 1);
                    if (pass == 1) ++merges_left_;
                    remove(dv);
                    remove(du);
                    if (ok) return true;
                    // face labels are stale after deeper levels
                    if (!fresh) label_faces(i);
                }
        }
        return false;
    }

    // One pass that splits whenever it can; its genus is an upper bound.
    void greedy() {
        std::int64_t merges = 0;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto du = static_cast<std::uint32_t>(2 * i), dv = du + 1;
            if (i == 0) {
                insert(du, kNone);
                insert(dv, kNone);
                continue;
            }
            const auto cu = corners(edges_[i].u), cv = corners(edges_[i].v);
            std::uint32_t pa = cu.front(), pb = cv.front();
            if (cv.front() != kNone) {
                label_faces(i);
                bool split = false;
                for (std::size_t x = 0; x < cu.size() && !split; ++x)
                    for (std::size_t y = 0; y < cv.size() && !split; ++y)
                        if (corner_face(cu[x]) == corner_face(cv[y])) {
                            pa = cu[x];
                            pb = cv[y];
                            split = true;
                        }
                if (!split) ++merges;
            }
            insert(du, pa);
            insert(dv, pb);
        }
        for (std::size_t i = edges_.size(); i-- > 0;) {
            remove(static_cast<std::uint32_t>(2 * i + 1));
            remove(static_cast<std::uint32_t>(2 * i));
        }
        best_genus_ = std::min(best_genus_, merges);
    }

    const Graph& block_;
    std::uint64_t budget_;
    std::uint64_t visited_ = 0;
    std::int64_t floor_genus_ = 0, best_genus_ = 0, merges_left_ = 0;
    Vertex root_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> next_rot_, prev_rot_, first_dart_, face_of_;
};

BlockResult search_block(const Graph& block, std::uint64_t budget, std::int64_t& best_so_far) {
    // Cycles and smaller blocks are planar.
    if (block.size() <= block.order()) {
        best_so_far = 0;
        return {0, 0};
    }
    BlockSearch search(block, budget);
    try {
        const auto r = search.run();
        best_so_far = r.genus;
        return r;
    } catch (const BudgetExceeded& ex) {
        best_so_far = ex.best_upper();
        throw;
    }
}

}  // namespace

ExactGenus exact_genus(const Graph& g, std::uint64_t budget) {
    ExactGenus out;
    std::int64_t settled = 0;
    const auto blocks = biconnected_blocks(g);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto& block_edges = blocks[b];
        std::vector<Vertex> verts;
        for (const auto& e : block_edges) {
            verts.push_back(e.u);
            verts.push_back(e.v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        std::vector<Edge> local;
        local.reserve(block_edges.size());
        for (const auto& e : block_edges) {
            const auto a = static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), e.u) - verts.begin());
            const auto b = static_cast<Vertex>(std::lower_bound(verts.begin(), verts.end(), e.v) - verts.begin());
            local.push_back({a, b});
        }
        const Graph block(verts.size(), std::move(local));
        std::int64_t best = 0;
        try {
            const auto r = search_block(block, budget, best);
            settled += r.genus;
            out.visited += r.visited;
        } catch (const BudgetExceeded&) {
            // Unsearched blocks contribute at most their one-face Euler bound.
            std::int64_t rest = 0;
            for (std::size_t later = b + 1; later < blocks.size(); ++later) {
                const auto& edges = blocks[later];
                std::vector<Vertex> vs;
                for (const auto& e : edges) {
                    vs.push_back(e.u);
                    vs.push_back(e.v);
                }
                std::sort(vs.begin(), vs.end());
                const auto nv = std::unique(vs.begin(), vs.end()) - vs.begin();
                rest += std::max<std::int64_t>(0, (as_i64(edges.size()) - nv + 1) / 2);
            }
            throw BudgetExceeded(budget, settled + best + rest);
        }
    }
    const auto kappa = as_i64(components(g).kappa);
    out.genus = settled;
    out.f_min = as_i64(g.size()) - as_i64(g.order()) + kappa + 1 - 2 * out.genus;
    return out;
}

std::int64_t genus_upper_bound(const Graph& g) {
    const auto kappa = as_i64(components(g).kappa);
    const std::int64_t twice = as_i64(g.size()) - as_i64(g.order()) + kappa;
    return std::max<std::int64_t>(0, twice / 2);
}

namespace {

std::int64_t lower_from_face_bound(const Graph& g, double face_bound) {
    const auto kappa = static_cast<double>(components(g).kappa);
    const double twice = static_cast<double>(g.size()) - static_cast<double>(g.order()) - face_bound + kappa + 1.0;
    // Guard against ceil(k + 1e-15) style round-up from the division above.
    const double value = std::ceil(twice / 2.0 - 1e-9);
    return std::max<std::int64_t>(0, static_cast<std::int64_t>(value));
}

bool acyclic(const Graph& g) { return as_i64(g.size()) == as_i64(g.order()) - as_i64(components(g).kappa); }

}  // namespace

std::int64_t genus_lower_bound_short_cycles(const Graph& g, unsigned ell, std::uint64_t cap) {
    if (ell < 3) throw DomainError("genus_lower_bound_short_cycles: ell must be at least 3");
    if (acyclic(g)) return 0;
    const auto cycles = static_cast<double>(count_cycles_up_to(g, ell, cap));
    const double e = static_cast<double>(g.size());
    const double l = static_cast<double>(ell);
    const double face_bound = (2.0 * e + (l - 2.0) * 2.0 * cycles) / (l + 1.0);
    return lower_from_face_bound(g, face_bound);
}

std::int64_t genus_lower_bound_density(const Graph& g) {
    if (acyclic(g)) return 0;
    return lower_from_face_bound(g, 2.0 * static_cast<double>(g.size()) / 3.0);
}

BestLowerBound best_genus_lower_bound(const Graph& g, unsigned max_ell, std::uint64_t cap) {
    BestLowerBound best{genus_lower_bound_density(g), 2};
    if (acyclic(g)) return best;
    // One enumeration at the largest length, bucketed by length.
    std::vector<std::uint64_t> by_length(max_ell + 1, 0);
    if (max_ell >= 3)
        for_each_cycle(g, max_ell, cap, [&](std::span<const Vertex> c) { ++by_length[c.size()]; });
    std::uint64_t cumulative = 0;
    const double e = static_cast<double>(g.size());
    for (unsigned ell = 3; ell <= max_ell; ++ell) {
        cumulative += by_length[ell];
        const double l = static_cast<double>(ell);
        const double face_bound = (2.0 * e + (l - 2.0) * 2.0 * static_cast<double>(cumulative)) / (l + 1.0);
        const auto value = lower_from_face_bound(g, face_bound);
        if (value > best.value) best = {value, ell};
    }
    return best;
}

std::int64_t perturbation_upper_bound(std::int64_t genus_h, std::int64_t k) {
    if (genus_h < 0 || k < 0) throw DomainError("perturbation_upper_bound: arguments must be non-negative");
    return genus_h + k;
}

GenusBounds genus_bounds(const Graph& g, unsigned ell, std::uint64_t cap) {
    GenusBounds out;
    out.lower = genus_lower_bound_short_cycles(g, ell, cap);
    out.lower_method = "short_cycles(ell=" + std::to_string(ell) + ")";
    const auto density = genus_lower_bound_density(g);
    if (density > out.lower) {
        out.lower = density;
        out.lower_method = "density";
    }
    out.upper = genus_upper_bound(g);
    out.upper_method = "euler_one_face_per_component";
    return out;
}

}  // namespace rgenus
