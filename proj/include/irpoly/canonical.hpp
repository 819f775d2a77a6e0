#ifndef IRPOLY_CANONICAL_HPP
#define IRPOLY_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "irpoly/planar_graph.hpp"

namespace irpoly {

// Complete isomorphism invariant for spherical embeddings: the
// lexicographically smallest breadth-first encoding over every choice of
// start vertex, start edge and orientation.  Reflections are included, so a
// chiral polyhedron and its mirror image share one code.
class CanonicalCode {
  public:
    CanonicalCode() = default;
    explicit CanonicalCode(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::string hex() const;
    static CanonicalCode from_hex(const std::string& s);

    auto operator<=>(const CanonicalCode&) const = default;

  private:
    std::vector<std::uint8_t> bytes_;
};

CanonicalCode canonical_code(const PlanarGraph& g);

} // namespace irpoly

#endif
