#include "irpoly/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

namespace irpoly {

namespace {
inline Edge norm_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }
}

std::array<Edge, 2> IdealTriangulation::pair_edges(const Tet& t, int i) {
    switch (i) {
        case 0: return {norm_edge(t.v[0], t.v[1]), norm_edge(t.v[2], t.v[3])};
        case 1: return {norm_edge(t.v[0], t.v[2]), norm_edge(t.v[1], t.v[3])};
        default: return {norm_edge(t.v[0], t.v[3]), norm_edge(t.v[1], t.v[2])};
    }
}

std::vector<int> apex_candidates(const PlanarGraph& g, const FaceStructure& fs) {
    std::vector<long> score(g.vertex_count(), 0);
    for (const auto& f : fs.faces)
        for (int v : f) score[v] += static_cast<long>(f.size());
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&score](int a, int b) { return score[a] > score[b]; });
    return order;
}

IdealTriangulation triangulate(const PlanarGraph& g, int apex) {
    if (apex < 0 || apex >= g.vertex_count())
        throw PreconditionError("apex out of range");
    const FaceStructure fs = trace_faces(g);

    IdealTriangulation tri;
    tri.apex = apex;

    // pairs of vertices lying on a common face but not adjacent: diagonals
    std::set<Edge> cofacial;
    for (const auto& f : fs.faces)
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                if (f[i] != f[j]) cofacial.insert(norm_edge(f[i], f[j]));

    for (const auto& f : fs.faces) {
        if (std::find(f.begin(), f.end(), apex) != f.end()) continue;
        const int len = static_cast<int>(f.size());
        const int rpos = static_cast<int>(
            std::min_element(f.begin(), f.end()) - f.begin());
        const int r = f[rpos];
        for (int i = 1; i + 1 < len; ++i) {
            const int y = f[(rpos + i) % len];
            const int z = f[(rpos + i + 1) % len];
            tri.tets.push_back({{apex, r, y, z}});
        }
    }

    std::map<Edge, int> class_of;
    auto class_id = [&](Edge e) {
        auto it = class_of.find(e);
        if (it != class_of.end()) return it->second;
        const int id = static_cast<int>(tri.class_target.size());
        double target;
        if (g.adjacent(e.first, e.second))
            target = M_PI / 2.0; // polyhedron edge, right angle
        else if (cofacial.count(e))
            target = M_PI; // diagonal inside a face, flat
        else
            target = 2.0 * M_PI; // interior edge, full turn
        class_of.emplace(e, id);
        tri.class_target.push_back(target);
        tri.class_edge.push_back(e);
        return id;
    };

    tri.var_classes.reserve(tri.variable_count());
    for (const auto& t : tri.tets)
        for (int i = 0; i < 3; ++i) {
            const auto edges = IdealTriangulation::pair_edges(t, i);
            tri.var_classes.push_back({class_id(edges[0]), class_id(edges[1])});
        }
    return tri;
}

IdealTriangulation triangulate(const PlanarGraph& g) {
    const ValidityReport rep = check_validity(g);
    if (!rep) throw PreconditionError("not an ideal right-angled polyhedron: " + rep.reason);
    return triangulate(g, apex_candidates(g, trace_faces(g)).front());
}

} // namespace irpoly
