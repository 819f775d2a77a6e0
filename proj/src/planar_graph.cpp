#include "irpoly/planar_graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace irpoly {

namespace {

// Face tracing on a raw rotation system.  From the directed edge u -> v the
// face continues along v -> w where w follows u in the clockwise order at v.
// Faces partition the directed edges; the traced cycles list tail vertices.
std::vector<std::vector<int>> trace_raw(const std::vector<std::vector<int>>& rot,
                                        std::vector<std::vector<int>>* face_at) {
    const int n = static_cast<int>(rot.size());
    std::vector<std::vector<int>> faces;
    std::vector<std::vector<int>> mark(n);
    for (int v = 0; v < n; ++v) mark[v].assign(rot[v].size(), -1);

    auto pos_of = [&rot](int v, int u) {
        const auto& r = rot[v];
        for (int i = 0; i < static_cast<int>(r.size()); ++i)
            if (r[i] == u) return i;
        return -1;
    };

    for (int v0 = 0; v0 < n; ++v0) {
        for (int k0 = 0; k0 < static_cast<int>(rot[v0].size()); ++k0) {
            if (mark[v0][k0] >= 0) continue;
            const int id = static_cast<int>(faces.size());
            std::vector<int> cycle;
            int v = v0, k = k0;
            do {
                mark[v][k] = id;
                cycle.push_back(v);
                const int w = rot[v][k];
                const int j = pos_of(w, v);
                k = (j + 1) % static_cast<int>(rot[w].size());
                v = w;
            } while (!(v == v0 && k == k0));
            faces.push_back(std::move(cycle));
        }
    }
    if (face_at) *face_at = std::move(mark);
    return faces;
}

} // namespace

PlanarGraph::PlanarGraph(std::vector<std::vector<int>> rotation)
    : rotation_(std::move(rotation)) {
    const int n = vertex_count();
    if (n < 1) throw StructuralError("empty vertex set");

    int degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        const auto& r = rotation_[v];
        degree_sum += static_cast<int>(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            const int u = r[i];
            if (u < 0 || u >= n)
                throw StructuralError("neighbor index out of range at vertex " +
                                      std::to_string(v));
            if (u == v) throw StructuralError("loop at vertex " + std::to_string(v));
            for (std::size_t j = i + 1; j < r.size(); ++j)
                if (r[j] == u)
                    throw StructuralError("repeated neighbor " + std::to_string(u) +
                                          " at vertex " + std::to_string(v));
        }
    }
    edge_count_ = degree_sum / 2;

    for (int v = 0; v < n; ++v)
        for (int u : rotation_[v])
            if (position(u, v) < 0)
                throw StructuralError("asymmetric adjacency: " + std::to_string(v) +
                                      " lists " + std::to_string(u) + " but not back");

    // connectivity
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : rotation_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                q.push(u);
            }
    }
    if (reached != n) throw StructuralError("graph is not connected");

    // spherical embedding: V - E + F = 2
    const auto faces = trace_raw(rotation_, nullptr);
    const int euler = n - edge_count_ + static_cast<int>(faces.size());
    if (euler != 2)
        throw StructuralError("rotation system is not spherical (V-E+F = " +
                              std::to_string(euler) + ")");
}

bool PlanarGraph::adjacent(int u, int v) const { return position(v, u) >= 0; }

int PlanarGraph::position(int v, int u) const {
    const auto& r = rotation_[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == u) return i;
    return -1;
}

bool PlanarGraph::regular(int k) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (degree(v) != k) return false;
    return true;
}

int FaceStructure::opposite_face(const PlanarGraph& g, int v, int k) const {
    const int w = g.neighbors(v)[k];
    return face_at[w][g.position(w, v)];
}

FaceStructure trace_faces(const PlanarGraph& g) {
    FaceStructure fs;
    fs.faces = trace_raw(g.rotation(), &fs.face_at);
    for (const auto& f : fs.faces) ++fs.face_vector[static_cast<int>(f.size())];
    return fs;
}

std::map<int, int> face_vector(const PlanarGraph& g) { return trace_faces(g).face_vector; }

PlanarGraph dual(const PlanarGraph& g) {
    const FaceStructure fs = trace_faces(g);
    std::vector<std::vector<int>> rot(fs.faces.size());
    for (std::size_t f = 0; f < fs.faces.size(); ++f) {
        const auto& cycle = fs.faces[f];
        const int len = static_cast<int>(cycle.size());
        rot[f].reserve(len);
        for (int i = 0; i < len; ++i) {
            const int u = cycle[i];
            const int v = cycle[(i + 1) % len];
            // the face on the far side of edge u-v
            const int other = fs.face_at[v][g.position(v, u)];
            if (other == static_cast<int>(f))
                throw StructuralError("dual would have a loop: face " + std::to_string(f) +
                                      " meets itself across an edge");
            rot[f].push_back(other);
        }
        std::vector<int> sorted = rot[f];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw StructuralError("dual would be a multigraph: two faces share two edges");
    }
    return PlanarGraph(std::move(rot));
}

} // namespace irpoly
