#include "irpoly/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

namespace irpoly {

namespace {
inline Edge norm_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
}

PlanarGraph antiprism(int n) {
    if (n < 3) throw DomainError("antiprism needs n >= 3");
    // vertices 0..n-1 top ring, n..2n-1 bottom ring; top vertex i sits over
    // the bottom edge (i-1, i), so i connects down to i and i+1
    std::vector<std::vector<int>> rot(2 * n);
    auto T = [n](int i) { return ((i % n) + n) % n; };
    auto B = [n](int i) { return n + ((i % n) + n) % n; };
    for (int i = 0; i < n; ++i) {
        rot[T(i)] = {T(i + 1), B(i + 1), B(i), T(i - 1)};
        rot[B(i) ] = {T(i), B(i + 1), B(i - 1), T(i - 1)};
    }
    return PlanarGraph(std::move(rot));
}

std::vector<EdgePair> twistable_pairs(const PlanarGraph&, const FaceStructure& fs) {
    std::vector<EdgePair> out;
    for (int f = 0; f < fs.face_count(); ++f) {
        const auto& cycle = fs.faces[f];
        const int k = static_cast<int>(cycle.size());
        if (k < 4) continue;
        for (int i = 0; i < k; ++i) {
            for (int j = i + 1; j < k; ++j) {
                const std::array<int, 4> ends = {cycle[i], cycle[(i + 1) % k],
                                                 cycle[j], cycle[(j + 1) % k]};
                bool distinct = true;
                for (int s = 0; s < 4 && distinct; ++s)
                    for (int t = s + 1; t < 4; ++t)
                        if (ends[s] == ends[t]) {
                            distinct = false;
                            break;
                        }
                if (!distinct) continue;
                out.push_back({norm_edge(ends[0], ends[1]), norm_edge(ends[2], ends[3]), f});
            }
        }
    }
    return out;
}

PlanarGraph edge_twist(const PlanarGraph& g, const EdgePair& p) {
    const FaceStructure fs = trace_faces(g);
    if (p.face < 0 || p.face >= fs.face_count())
        throw PreconditionError("edge pair names a nonexistent face");
    const auto& cycle = fs.faces[p.face];
    const int k = static_cast<int>(cycle.size());

    // locate both edges on the boundary, oriented along the trace
    auto locate = [&](Edge e) {
        for (int i = 0; i < k; ++i)
            if (norm_edge(cycle[i], cycle[(i + 1) % k]) == e) return i;
        throw PreconditionError("edge (" + std::to_string(e.first) + "," +
                                std::to_string(e.second) + ") is not on the face");
    };
    const int i1 = locate(p.e1);
    const int i2 = locate(p.e2);
    const int a = cycle[i1], b = cycle[(i1 + 1) % k];
    const int c = cycle[i2], d = cycle[(i2 + 1) % k];
    if (a == c || a == d || b == c || b == d)
        throw PreconditionError("edge pair shares a vertex");

    std::vector<std::vector<int>> rot = g.rotation();
    const int v = g.vertex_count();
    auto replace = [&rot](int at, int from, int to) {
        for (int& x : rot[at])
            if (x == from) {
                x = to;
                return;
            }
    };
    // the new vertex absorbs the two deleted edges; its clockwise order is
    // the order the four endpoints appear along the face boundary
    replace(a, b, v);
    replace(b, a, v);
    replace(c, d, v);
    replace(d, c, v);
    rot.push_back({a, b, c, d});
    return PlanarGraph(std::move(rot));
}

PlanarGraph twisted_antiprism(int n) {
    if (n < 4) throw DomainError("twisted antiprism needs n >= 4");
    const PlanarGraph g = antiprism(n);
    const FaceStructure fs = trace_faces(g);
    // the cap face through vertices 0,1,2,3; twist two of its edges that are
    // separated by one boundary edge
    const int cap = fs.face_at[0][g.position(0, 1)];
    return edge_twist(g, {norm_edge(0, 1), norm_edge(2, 3), cap});
}

namespace {

// is the graph still connected after deleting the vertices in `off`?
bool connected_without(const PlanarGraph& g, const std::vector<int>& off) {
    const int n = g.vertex_count();
    std::vector<char> blocked(n, 0), seen(n, 0);
    for (int v : off) blocked[v] = 1;
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!blocked[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive == 0) return true;
    std::vector<int> stack = {start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!blocked[u] && !seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == alive;
}

// cyclic sequence up to rotation and reflection
std::array<int, 4> normalize_cycle4(std::array<int, 4> c) {
    std::array<int, 4> best = c;
    for (int r = 0; r < 4; ++r) {
        const std::array<int, 4> fwd = {c[r], c[(r + 1) % 4], c[(r + 2) % 4], c[(r + 3) % 4]};
        const std::array<int, 4> rev = {c[r], c[(r + 3) % 4], c[(r + 2) % 4], c[(r + 1) % 4]};
        best = std::min(best, std::min(fwd, rev));
    }
    return best;
}

} // namespace

ValidityReport check_validity(const PlanarGraph& g) {
    ValidityReport rep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 4) {
            rep.reason = "vertex " + std::to_string(v) + " has degree " +
                         std::to_string(g.degree(v)) + ", not 4";
            rep.witness = {v};
            return rep;
        }

    // 3-connected: no one or two vertices disconnect the rest
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (!connected_without(g, {u})) {
            rep.reason = "cut vertex " + std::to_string(u);
            rep.witness = {u};
            return rep;
        }
        for (int v = u + 1; v < n; ++v)
            if (!connected_without(g, {u, v})) {
                rep.reason = "separating pair {" + std::to_string(u) + "," +
                             std::to_string(v) + "}";
                rep.witness = {u, v};
                return rep;
            }
    }

    // With 3-connectivity established the dual is simple, its faces are the
    // quadrilaterals around the 4-valent vertices, and any of its 4-cycles
    // that does not bound a face certifies a forbidden prismatic curve.
    const PlanarGraph d = dual(g);
    std::set<std::array<int, 4>> facial;
    for (const auto& f : trace_faces(d).faces)
        facial.insert(normalize_cycle4({f[0], f[1], f[2], f[3]}));

    const int m = d.vertex_count();
    std::set<std::array<int, 4>> checked;
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            std::vector<int> common;
            for (int x : d.neighbors(a))
                if (d.adjacent(x, b)) common.push_back(x);
            for (std::size_t s = 0; s < common.size(); ++s) {
                for (std::size_t t = s + 1; t < common.size(); ++t) {
                    const auto cyc =
                        normalize_cycle4({a, common[s], b, common[t]});
                    if (!checked.insert(cyc).second) continue;
                    if (!facial.count(cyc)) {
                        rep.reason = "non-facial 4-cycle in the dual through faces {" +
                                     std::to_string(cyc[0]) + "," + std::to_string(cyc[1]) +
                                     "," + std::to_string(cyc[2]) + "," +
                                     std::to_string(cyc[3]) + "}";
                        rep.witness.assign(cyc.begin(), cyc.end());
                        return rep;
                    }
                }
            }
        }
    }

    rep.valid = true;
    return rep;
}

EnumerationResult enumerate_polyhedra(
    int max_faces,
    const std::function<void(const PlanarGraph&, const CanonicalCode&)>& sink,
    int jobs,
    std::ostream* progress) {
    EnumerationResult result;
    if (max_faces < 8) return result;
    if (jobs < 1) jobs = 1;

    using Entry = std::pair<CanonicalCode, PlanarGraph>;
    std::map<int, std::vector<Entry>> frontier;
    std::map<int, std::set<CanonicalCode>> seen;

    for (int n = 3; 2 * n + 2 <= max_faces; ++n) {
        PlanarGraph a = antiprism(n);
        CanonicalCode code = canonical_code(a);
        const int f = 2 * n + 2;
        if (seen[f].insert(code).second)
            frontier[f].emplace_back(std::move(code), std::move(a));
    }

    for (int f = 8; f <= max_faces; ++f) {
        auto& level = frontier[f];
        std::sort(level.begin(), level.end(),
                  [](const Entry& x, const Entry& y) { return x.first < y.first; });
        result.counts[f] = static_cast<int>(level.size());
        for (const auto& [code, g] : level) sink(g, code);
        if (progress) *progress << "level=" << f << " found=" << level.size() << std::endl;
        if (f == max_faces) break;

        // expand: every twist of every valid graph on this level lands on the
        // next level; the seen-set is the one synchronization point
        std::mutex mu;
        auto& next_seen = seen[f + 1];
        auto& next_frontier = frontier[f + 1];
        std::atomic<std::size_t> cursor{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= level.size()) return;
                const PlanarGraph& g = level[i].second;
                const FaceStructure fs = trace_faces(g);
                for (const EdgePair& p : twistable_pairs(g, fs)) {
                    PlanarGraph h = edge_twist(g, p);
                    CanonicalCode code = canonical_code(h);
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        if (!next_seen.insert(code).second) continue;
                    }
                    // invalid shapes are neither emitted nor twisted further
                    if (!check_validity(h)) continue;
                    std::lock_guard<std::mutex> lock(mu);
                    next_frontier.emplace_back(std::move(code), std::move(h));
                }
            }
        };
        if (jobs == 1 || level.size() <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            const int k = std::min<std::size_t>(jobs, level.size());
            pool.reserve(k);
            for (int t = 0; t < k; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        frontier.erase(f);
        seen.erase(f);
    }
    return result;
}

} // namespace irpoly
