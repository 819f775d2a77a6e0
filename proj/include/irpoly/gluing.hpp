#ifndef IRPOLY_GLUING_HPP
#define IRPOLY_GLUING_HPP

#include "irpoly/planar_graph.hpp"

namespace irpoly {

// Glue g2 onto g1 along faces of equal length k, identifying boundary
// vertices with opposite orientations: vertex i of face1's cycle meets
// vertex (offset - i) mod k of face2's cycle.  The k identified edges are
// then erased because the two right angles on either side merge the adjacent
// faces flat.  Result: V = V1 + V2 - k, E = E1 + E2 - 2k, F = F1 + F2 - 2 - k.
// Face indices refer to trace_faces of the respective graph.  Throws
// PreconditionError on length mismatch, StructuralError if the merge would
// create parallel edges.
PlanarGraph glue_along_face(const PlanarGraph& g1, int face1,
                            const PlanarGraph& g2, int face2, int offset = 0);

// ITR: no two triangular faces share a vertex ("isolated triangle rule").
bool is_itr(const PlanarGraph& g);

// Minimum face count an ITR polyhedron with p3 triangles can have: 3 p3 + 2.
// With p3 >= 8 forced for ideal right-angled polyhedra, ITR needs >= 26 faces.
int itr_face_bound(int p3);

// Double an ITR polyhedron across a triangular face: glue a second copy along
// that face.  The two glued triangles vanish and no new triangles appear, so
// the triangle count follows p3' = 2 p3 - 2 and the result is again ITR.
PlanarGraph itr_double(const PlanarGraph& g, int triangle_face);

} // namespace irpoly

#endif
