#include "irpoly/gluing.hpp"

#include <algorithm>
#include <set>

namespace irpoly {

PlanarGraph glue_along_face(const PlanarGraph& g1, int face1,
                            const PlanarGraph& g2, int face2, int offset) {
    const FaceStructure fs1 = trace_faces(g1);
    const FaceStructure fs2 = trace_faces(g2);
    if (face1 < 0 || face1 >= fs1.face_count() || face2 < 0 || face2 >= fs2.face_count())
        throw PreconditionError("face index out of range");
    const auto& c1 = fs1.faces[face1];
    const auto& c2 = fs2.faces[face2];
    const int k = static_cast<int>(c1.size());
    if (static_cast<int>(c2.size()) != k)
        throw PreconditionError("glued faces must have equal length (" +
                                std::to_string(k) + " vs " + std::to_string(c2.size()) + ")");
    for (const auto* c : {&c1, &c2})
        if (std::set<int>(c->begin(), c->end()).size() != c->size())
            throw PreconditionError("face boundary revisits a vertex; gluing undefined");
    offset = ((offset % k) + k) % k;

    // the second sphere is glued from the far side, so its clockwise order
    // reverses; boundary vertices pair up c1[i] ~ c2[(offset + i) mod k]
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    std::vector<int> pos1(n1, -1), pos2(n2, -1);
    for (int i = 0; i < k; ++i) pos1[c1[i]] = i;
    for (int i = 0; i < k; ++i) pos2[c2[i]] = i;

    std::vector<int> map2(n2, -1);
    int fresh = n1;
    for (int w = 0; w < n2; ++w)
        map2[w] = pos2[w] >= 0 ? c1[(((pos2[w] - offset) % k) + k) % k] : fresh++;

    // the linear arc of rot strictly between the two ring edges, clockwise
    // from just after `enter` to just before `leave`
    auto arc = [](const PlanarGraph& g, int v, int enter, int leave) {
        const auto& rot = g.neighbors(v);
        const int d = static_cast<int>(rot.size());
        const int p = g.position(v, enter);
        std::vector<int> out;
        for (int t = (p + 1) % d; rot[t] != leave; t = (t + 1) % d) out.push_back(rot[t]);
        return out;
    };

    std::vector<std::vector<int>> rot(fresh);
    for (int v = 0; v < n1; ++v)
        if (pos1[v] < 0) rot[v] = g1.neighbors(v);
    for (int w = 0; w < n2; ++w)
        if (pos2[w] < 0) {
            auto r = g2.neighbors(w);
            std::reverse(r.begin(), r.end());
            for (int& u : r) u = map2[u];
            rot[map2[w]] = std::move(r);
        }
    for (int i = 0; i < k; ++i) {
        const int x = c1[i];
        const int next1 = c1[(i + 1) % k], prev1 = c1[(i - 1 + k) % k];
        const int j = (offset + i) % k;
        const int w = c2[j];
        const int next2 = c2[(j + 1) % k], prev2 = c2[(j - 1 + k) % k];
        std::vector<int> merged = arc(g1, x, next1, prev1);
        std::vector<int> other = arc(g2, w, next2, prev2);
        std::reverse(other.begin(), other.end());
        for (int u : other) merged.push_back(map2[u]);
        rot[x] = std::move(merged);
    }
    return PlanarGraph(std::move(rot)); // ctor rejects parallel edges / bad splices
}

bool is_itr(const PlanarGraph& g) {
    const FaceStructure fs = trace_faces(g);
    std::vector<const std::vector<int>*> triangles;
    for (const auto& f : fs.faces)
        if (f.size() == 3) triangles.push_back(&f);
    for (std::size_t i = 0; i < triangles.size(); ++i)
        for (std::size_t j = i + 1; j < triangles.size(); ++j)
            for (int u : *triangles[i])
                for (int v : *triangles[j])
                    if (u == v) return false;
    return true;
}

int itr_face_bound(int p3) { return 3 * p3 + 2; }

PlanarGraph itr_double(const PlanarGraph& g, int triangle_face) {
    const FaceStructure fs = trace_faces(g);
    if (triangle_face < 0 || triangle_face >= fs.face_count())
        throw PreconditionError("face index out of range");
    if (fs.faces[triangle_face].size() != 3)
        throw PreconditionError("doubling face must be a triangle");
    if (!is_itr(g))
        throw PreconditionError("doubling requires an ITR polyhedron");
    // offset 0 identifies each boundary vertex with its own mirror image
    return glue_along_face(g, triangle_face, g, triangle_face, 0);
}

} // namespace irpoly
