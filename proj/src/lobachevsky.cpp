#include "irpoly/lobachevsky.hpp"

#include <cmath>

#include "irpoly/errors.hpp"

namespace irpoly {

namespace {

// zeta(2k) / (k (2k+1)) for k = 1..kMaxTerms
constexpr int kMaxTerms = 48;

const double* series_coefficients() {
    static double c[kMaxTerms + 1] = {0.0};
    static const bool init = [] {
        for (int k = 1; k <= kMaxTerms; ++k)
            c[k] = std::riemann_zeta(2.0 * k) / (k * (2.0 * k + 1.0));
        return true;
    }();
    (void)init;
    return c;
}

} // namespace

double lobachevsky(double x) {
    // pi-periodic and odd: std::remainder lands in [-pi/2, pi/2]
    const double r = std::remainder(x, M_PI);
    const double y = std::fabs(r);
    if (y == 0.0) return 0.0;

    // L(y) = y(1 - log 2y) + sum_k zeta(2k)/(k(2k+1)) y (y/pi)^{2k}
    const double* c = series_coefficients();
    const double q = (y / M_PI) * (y / M_PI); // <= 1/4 after reduction
    double sum = 0.0, p = 1.0;
    for (int k = 1; k <= kMaxTerms; ++k) {
        p *= q;
        const double term = c[k] * p;
        sum += term;
        if (term < 1e-17) break;
    }
    const double value = y * (1.0 - std::log(2.0 * y)) + y * sum;
    return r < 0 ? -value : value;
}

double milnor_tet_volume(double a, double b, double c) {
    if (a < 0 || b < 0 || c < 0)
        throw DomainError("tetrahedron dihedral angles must be nonnegative");
    if (std::fabs(a + b + c - M_PI) > 1e-9)
        throw DomainError("tetrahedron dihedral angles must sum to pi");
    return lobachevsky(a) + lobachevsky(b) + lobachevsky(c);
}

double octahedron_volume() { return 8.0 * lobachevsky(M_PI / 4.0); }

double antiprism_volume(int n) {
    if (n < 3) throw DomainError("antiprism needs n >= 3");
    const double h = M_PI / (2.0 * n);
    return 2.0 * n * (lobachevsky(M_PI / 4.0 + h) + lobachevsky(M_PI / 4.0 - h));
}

double twisted_antiprism_volume(int n) {
    if (n < 4) throw DomainError("twisted antiprism needs n >= 4");
    // the twist adds exactly one octahedron onto the (n-1)-antiprism
    return antiprism_volume(n - 1) + octahedron_volume();
}

} // namespace irpoly
