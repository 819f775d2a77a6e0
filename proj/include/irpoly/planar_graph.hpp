#ifndef IRPOLY_PLANAR_GRAPH_HPP
#define IRPOLY_PLANAR_GRAPH_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "irpoly/errors.hpp"

namespace irpoly {

// A simple connected graph embedded in the sphere, stored as a rotation
// system: for every vertex, its neighbors in clockwise order.  Construction
// validates simplicity, symmetry and the Euler relation V - E + F = 2, so an
// instance is always a genuine spherical embedding.  Immutable after
// construction; all surgery operations return new graphs.
class PlanarGraph {
  public:
    // rotation[v] lists the neighbors of v (0-based) in clockwise order.
    explicit PlanarGraph(std::vector<std::vector<int>> rotation);

    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return rotation_[v]; }
    const std::vector<std::vector<int>>& rotation() const { return rotation_; }

    bool adjacent(int u, int v) const;
    // Position of u in rotation()[v]; -1 if not adjacent.
    int position(int v, int u) const;
    bool regular(int k) const;

    bool operator==(const PlanarGraph& other) const { return rotation_ == other.rotation_; }

  private:
    std::vector<std::vector<int>> rotation_;
    int edge_count_ = 0;
};

// Faces of the embedding.  faces[i] is the vertex cycle of face i in trace
// order; face_at[v][k] is the face containing the directed edge from v to
// neighbors(v)[k].  Faces partition the directed edges.
struct FaceStructure {
    std::vector<std::vector<int>> faces;
    std::vector<std::vector<int>> face_at;
    std::map<int, int> face_vector; // face length -> count

    int face_count() const { return static_cast<int>(faces.size()); }
    // Face on the other side of the directed edge v -> neighbors(v)[k].
    int opposite_face(const PlanarGraph& g, int v, int k) const;
};

FaceStructure trace_faces(const PlanarGraph& g);

std::map<int, int> face_vector(const PlanarGraph& g);

// Face-adjacency graph with the inherited rotation; vertices of the dual are
// the faces of g in trace order.  Throws StructuralError if two faces share
// more than one edge (the dual would be a multigraph).
PlanarGraph dual(const PlanarGraph& g);

} // namespace irpoly

#endif
