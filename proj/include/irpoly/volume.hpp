#ifndef IRPOLY_VOLUME_HPP
#define IRPOLY_VOLUME_HPP

#include <vector>

#include "irpoly/planar_graph.hpp"
#include "irpoly/triangulation.hpp"

namespace irpoly {

// A point of the linear angle-structure polytope together with the objective
// sum over tetrahedra of L(a)+L(b)+L(c), plus solver diagnostics.
struct AngleStructure {
    std::vector<double> angles; // 3 per tetrahedron
    double volume = 0.0;
    int iterations = 0;
    double residual = 0.0; // final reduced-gradient max norm
    bool converged = false;
};

struct OptimizerOptions {
    double gradient_tol = 1e-10;
    int max_iterations = 200;
    unsigned seed = 0; // only used if the feasible start needs perturbing
};

// Maximize total volume over the angle structures of tri.  The objective is
// strictly concave on the constraint polytope, so the damped Newton iteration
// converges to the unique interior maximum, whose value is the hyperbolic
// volume of the polyhedron.  Throws OptimizerError if no strictly positive
// starting point can be found for this triangulation.
AngleStructure maximize_volume(const IdealTriangulation& tri,
                               const OptimizerOptions& opts = {});

// Hyperbolic volume of the ideal right-angled polyhedron with 1-skeleton g.
// Requires check_validity(g); tries apex candidates in preference order until
// the optimizer succeeds.  Absolute accuracy ~1e-8.
double ideal_volume(const PlanarGraph& g, const OptimizerOptions& opts = {});

} // namespace irpoly

#endif
