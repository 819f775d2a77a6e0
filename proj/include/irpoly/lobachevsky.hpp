#ifndef IRPOLY_LOBACHEVSKY_HPP
#define IRPOLY_LOBACHEVSKY_HPP

namespace irpoly {

// The Lobachevsky function L(x) = -integral_0^x log|2 sin t| dt, the volume
// building block for ideal hyperbolic tetrahedra.  Odd, pi-periodic,
// maximized at pi/6.  Evaluated by reducing the argument to [-pi/2, pi/2]
// and summing the series x(1 - log|2x|) + sum_k zeta(2k)/(k(2k+1)) x^{2k+1}/pi^{2k},
// truncated below 1e-15 relative weight; absolute error stays under 1e-13.
double lobachevsky(double x);

// Volume of the ideal tetrahedron with dihedral angles a, b, c at the three
// pairs of opposite edges: L(a) + L(b) + L(c).  Requires a, b, c >= 0 and
// a + b + c = pi within 1e-9.
double milnor_tet_volume(double a, double b, double c);

// Volume of the ideal right-angled octahedron, 8 L(pi/4) = 3.663862376708876.
double octahedron_volume();

// Volume of the ideal right-angled n-gonal antiprism, n >= 3:
// 2n (L(pi/4 + pi/2n) + L(pi/4 - pi/2n)).
double antiprism_volume(int n);

// Volume of the ideal right-angled twisted antiprism, n >= 4; equals
// antiprism_volume(n-1) + octahedron_volume() because the twist is
// realized by gluing an octahedron onto a triangular face.
double twisted_antiprism_volume(int n);

} // namespace irpoly

#endif
