#ifndef IRPOLY_TRIANGULATION_HPP
#define IRPOLY_TRIANGULATION_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "irpoly/enumeration.hpp"
#include "irpoly/planar_graph.hpp"

namespace irpoly {

// Ideal triangulation of the polyhedron by coning from one vertex (the
// apex): every face not incident to the apex is fan-triangulated from its
// lowest-index vertex and each resulting triangle spans a tetrahedron with
// the apex.  Faces incident to the apex are swept out by those tetrahedra,
// so the tetrahedron count is the sum of (length - 2) over non-apex faces.
//
// Every tetrahedron edge belongs to exactly one class of identified edges
// with a prescribed total dihedral angle:
//   pi/2  an edge of the polyhedron (right-angled),
//   pi    a diagonal lying inside a face (flat),
//   2pi   an interior edge from the apex to a vertex sharing no face with it.
struct IdealTriangulation {
    struct Tet {
        std::array<int, 4> v; // v[0] is the apex
    };

    int apex = -1;
    std::vector<Tet> tets;

    // Angle variable 3t+i is the dihedral angle of tets[t] at the opposite
    // edge pair i; see pair_edges for the pairing.  The variable feeds the
    // two classes in var_classes[3t+i], and per tet the three variables sum
    // to pi.
    std::vector<double> class_target;               // class id -> pi/2, pi or 2pi
    std::vector<Edge> class_edge;                   // class id -> vertex pair
    std::vector<std::array<int, 2>> var_classes;    // variable -> two class ids

    int tet_count() const { return static_cast<int>(tets.size()); }
    int variable_count() const { return 3 * tet_count(); }
    int class_count() const { return static_cast<int>(class_target.size()); }

    // The two opposite edges covered by angle variable i of tet t:
    // i = 0: {v0,v1}|{v2,v3},  i = 1: {v0,v2}|{v1,v3},  i = 2: {v0,v3}|{v1,v2}.
    static std::array<Edge, 2> pair_edges(const Tet& t, int i);
};

// Apex preference: vertices ordered by descending sum of incident face
// lengths (bigger incident faces leave fewer faces to cone), ties broken by
// lower index.  ideal_volume walks this list until the optimizer succeeds.
std::vector<int> apex_candidates(const PlanarGraph& g, const FaceStructure& fs);

IdealTriangulation triangulate(const PlanarGraph& g, int apex);
// Uses the first apex candidate.  Requires check_validity(g).
IdealTriangulation triangulate(const PlanarGraph& g);

} // namespace irpoly

#endif
