#ifndef IRPOLY_BOUNDS_HPP
#define IRPOLY_BOUNDS_HPP

#include <optional>

#include "irpoly/planar_graph.hpp"

namespace irpoly {

// Two-sided volume bounds for an ideal polyhedron with N 4-valent vertices,
// in units of the octahedron volume v8:
//   (N - 2) v8 / 4  <=  vol  <=  (N - 4) v8 / 2.
// Both are attained exactly by the octahedron (N = 6).  Requires N >= 6.
struct VolumeBounds {
    double lower;
    double upper;
};

VolumeBounds atkinson_bounds(int n_vertices);

// Sharper upper bound when two faces with n1, n2 >= 4 sides exist:
//   vol <= (N - n1/2 - n2/2) v8 / 2, minimized over face pairs.
// Every ideal right-angled polyhedron except the octahedron has such a pair;
// the octahedron is a DomainError.
double improved_upper_bound(const PlanarGraph& g);

// For polyhedra whose faces are only triangles and quadrilaterals:
//   vol < (N - 5) v8 / 2 with N the vertex count.
// Applied only when both the face count and the vertex count are >= 17
// (conservative range); returns nullopt outside that range or when a face
// with 5+ sides exists.
std::optional<double> quad_upper_bound(const PlanarGraph& g);

// All applicable bounds for one graph.
struct BoundsReport {
    double lower = 0.0;
    double upper = 0.0;
    std::optional<double> improved_upper;
    std::optional<double> quad_upper;

    // Tightest applicable upper bound.
    double best_upper() const;
};

BoundsReport bounds_report(const PlanarGraph& g);

} // namespace irpoly

#endif
