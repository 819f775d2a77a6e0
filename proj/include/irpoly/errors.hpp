#ifndef IRPOLY_ERRORS_HPP
#define IRPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace irpoly {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed combinatorial data: asymmetric adjacency, loops, repeated
// neighbors, failed Euler check, multigraph dual, ...
struct StructuralError : Error {
    using Error::Error;
};

// Argument outside an operation's domain (antiprism(2), bounds for N < 6, ...).
struct DomainError : Error {
    using Error::Error;
};

// Input violates a documented precondition (edge pair sharing a vertex,
// doubling a non-ITR polyhedron, volume of an invalid graph, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Byte-level problems in serialized streams.  offset is the position of the
// offending byte from the start of the stream.
struct FormatError : Error {
    FormatError(const std::string& what, std::size_t offset)
        : Error(what + " (byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// A spectrum was requested past the range the census can certify.
struct CensusIncompleteError : Error {
    CensusIncompleteError(const std::string& what, std::vector<int> missing)
        : Error(what), missing_faces(std::move(missing)) {}
    std::vector<int> missing_faces;
};

// The angle-structure solver could not produce a usable optimum.
struct OptimizerError : Error {
    using Error::Error;
};

} // namespace irpoly

#endif
