#ifndef IRPOLY_ENUMERATION_HPP
#define IRPOLY_ENUMERATION_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "irpoly/canonical.hpp"
#include "irpoly/planar_graph.hpp"

namespace irpoly {

using Edge = std::pair<int, int>; // unordered; normalized to first < second internally

// n-gonal antiprism: 2n vertices, two n-gonal caps joined by a belt of 2n
// triangles.  Every vertex is 4-valent.  n = 3 gives the octahedron.
PlanarGraph antiprism(int n);

// Antiprism with one cap edge pair twisted: 2n+1 vertices, 2n+3 faces with
// face vector {3: 2n-1, 4: 2, n-1: 1, n: 1}.  Requires n >= 4.
PlanarGraph twisted_antiprism(int n);

// Two disjoint edges lying on a common face, the data of one twist move.
struct EdgePair {
    Edge e1;
    Edge e2;
    int face; // index into trace_faces(g).faces
};

// All twistable pairs: for every face, every unordered pair of boundary
// edges with four distinct endpoints.
std::vector<EdgePair> twistable_pairs(const PlanarGraph& g, const FaceStructure& fs);

// The twist move: delete the two edges of p and join their four endpoints to
// one new 4-valent vertex placed inside the face.  V,E,F grow by 1,2,1.
PlanarGraph edge_twist(const PlanarGraph& g, const EdgePair& p);

// Realizability test for ideal right-angled polyhedra (all dihedral angles
// pi/2, all vertices on the sphere at infinity).  A spherical graph qualifies
// iff it is 4-valent, 3-connected, and every 4-cycle of its dual bounds a
// face; cycles of other lengths cannot violate the angle inequalities
// because the dual of a 4-valent sphere graph is bipartite.
struct ValidityReport {
    bool valid = false;
    std::string reason;              // empty when valid
    std::vector<int> witness;        // offending vertex/vertices or dual 4-cycle
    explicit operator bool() const { return valid; }
};

ValidityReport check_validity(const PlanarGraph& g);

// Breadth-first closure of the antiprisms under edge twists, level-indexed
// by face count.  Emits each combinatorial type once (canonical-code dedup,
// mirror images identified) in sorted code order per level.  Only graphs
// that pass check_validity are emitted or twisted further.  Progress lines
// "level=<faces> found=<count>" go to `progress` when non-null.
struct EnumerationResult {
    std::map<int, int> counts; // face count -> number of types
};

EnumerationResult enumerate_polyhedra(
    int max_faces,
    const std::function<void(const PlanarGraph&, const CanonicalCode&)>& sink,
    int jobs = 1,
    std::ostream* progress = nullptr);

} // namespace irpoly

#endif
