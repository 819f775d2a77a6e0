#include "irpoly/bounds.hpp"

#include <algorithm>
#include <vector>

#include "irpoly/lobachevsky.hpp"

namespace irpoly {

VolumeBounds atkinson_bounds(int n_vertices) {
    if (n_vertices < 6)
        throw DomainError("volume bounds need at least 6 vertices (the octahedron)");
    const double v8 = octahedron_volume();
    return {(n_vertices - 2) * v8 / 4.0, (n_vertices - 4) * v8 / 2.0};
}

double improved_upper_bound(const PlanarGraph& g) {
    std::vector<int> big;
    for (const auto& [len, count] : face_vector(g))
        if (len >= 4) big.insert(big.end(), count, len);
    if (big.size() < 2)
        throw DomainError("needs two faces with at least 4 sides "
                          "(every case except the octahedron)");
    std::sort(big.rbegin(), big.rend());
    const double v8 = octahedron_volume();
    return (g.vertex_count() - big[0] / 2.0 - big[1] / 2.0) * v8 / 2.0;
}

std::optional<double> quad_upper_bound(const PlanarGraph& g) {
    const auto fv = face_vector(g);
    for (const auto& [len, count] : fv)
        if (len > 4) return std::nullopt;
    int faces = 0;
    for (const auto& [len, count] : fv) faces += count;
    if (faces < 17 || g.vertex_count() < 17) return std::nullopt;
    return (g.vertex_count() - 5) * octahedron_volume() / 2.0;
}

double BoundsReport::best_upper() const {
    double u = upper;
    if (improved_upper) u = std::min(u, *improved_upper);
    if (quad_upper) u = std::min(u, *quad_upper);
    return u;
}

BoundsReport bounds_report(const PlanarGraph& g) {
    BoundsReport r;
    const VolumeBounds ab = atkinson_bounds(g.vertex_count());
    r.lower = ab.lower;
    r.upper = ab.upper;
    try {
        r.improved_upper = improved_upper_bound(g);
    } catch (const DomainError&) {
        // octahedron: no eligible face pair
    }
    r.quad_upper = quad_upper_bound(g);
    return r;
}

} // namespace irpoly
