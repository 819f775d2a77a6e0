#ifndef IRPOLY_GRAPH_IO_HPP
#define IRPOLY_GRAPH_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "irpoly/planar_graph.hpp"

namespace irpoly {

// planar_code: the binary interchange format used by plantri and friends.
// An ASCII header ">>planar_code<<" followed by one record per graph: a
// vertex-count byte n (1..255), then for each vertex its clockwise neighbor
// list as 1-based bytes terminated by 0.

extern const char kPlanarCodeHeader[];

void write_planar_code_header(std::ostream& out);
void write_planar_code(std::ostream& out, const PlanarGraph& g);

// Streaming reader; tracks byte offsets for error reporting.
class PlanarCodeReader {
  public:
    explicit PlanarCodeReader(std::istream& in);
    // Next graph, or nullopt at a clean end of stream.
    std::optional<PlanarGraph> next();

  private:
    std::istream& in_;
    std::size_t offset_ = 0;
};

std::vector<PlanarGraph> read_planar_code(std::istream& in);

// JSON form, for graphs too large for one-byte labels or for hand-written
// fixtures: {"vertices": n, "rotation": [[...], ...]} with 1-based indices.
std::string to_json(const PlanarGraph& g);
PlanarGraph from_json(const std::string& text);

} // namespace irpoly

#endif
