#include "irpoly/volume.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

#include "irpoly/lobachevsky.hpp"

namespace irpoly {

namespace {

double objective(const Eigen::VectorXd& theta) {
    double f = 0.0;
    for (Eigen::Index i = 0; i < theta.size(); ++i) f += lobachevsky(theta[i]);
    return f;
}

// Linear system: one row per tetrahedron (angles sum to pi), one row per
// edge class (incident dihedral angles sum to the class target).
void build_constraints(const IdealTriangulation& tri, Eigen::MatrixXd& A,
                       Eigen::VectorXd& b) {
    const int nvar = tri.variable_count();
    const int ntet = tri.tet_count();
    const int ncls = tri.class_count();
    A.setZero(ntet + ncls, nvar);
    b.setZero(ntet + ncls);
    for (int t = 0; t < ntet; ++t) {
        for (int i = 0; i < 3; ++i) A(t, 3 * t + i) = 1.0;
        b(t) = M_PI;
    }
    for (int v = 0; v < nvar; ++v)
        for (int c : tri.var_classes[v]) A(ntet + c, v) += 1.0;
    for (int c = 0; c < ncls; ++c) b(ntet + c) = tri.class_target[c];
}

// Strictly positive point of {A theta = b}, or empty vector if none found.
// Least-squares start aimed at the per-class average, then hinge descent on
// the violations, then seeded random nudges along the kernel.
Eigen::VectorXd feasible_start(const IdealTriangulation& tri, const Eigen::MatrixXd& A,
                               const Eigen::VectorXd& b, const Eigen::MatrixXd& kernel,
                               unsigned seed) {
    const int nvar = tri.variable_count();
    const int ntet = tri.tet_count();

    std::vector<double> slots(tri.class_count(), 0.0);
    for (int v = 0; v < nvar; ++v)
        for (int c : tri.var_classes[v]) slots[c] += 1.0;

    Eigen::VectorXd center(nvar);
    for (int v = 0; v < nvar; ++v) {
        const auto& cs = tri.var_classes[v];
        center(v) = 0.5 * (tri.class_target[cs[0]] / slots[cs[0]] +
                           tri.class_target[cs[1]] / slots[cs[1]]);
    }

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);
    Eigen::VectorXd theta = center + cod.solve(b - A * center);
    if ((A * theta - b).lpNorm<Eigen::Infinity>() > 1e-8) return {};

    const double floor_angle = 1e-6;
    auto min_angle = [](const Eigen::VectorXd& t) { return t.minCoeff(); };

    // push violations above a working margin with projected hinge descent:
    // minimize sum of squared shortfalls below `margin` over the affine space
    const double margin = 0.1 * M_PI / (2.0 * ntet + 4.0) + 1e-3;
    auto hinge = [&](const Eigen::VectorXd& t) {
        double h = 0.0;
        for (int v = 0; v < nvar; ++v)
            if (t(v) < margin) h += (margin - t(v)) * (margin - t(v));
        return h;
    };
    for (int round = 0; round < 500 && min_angle(theta) <= floor_angle; ++round) {
        Eigen::VectorXd shortfall = Eigen::VectorXd::Zero(nvar);
        for (int v = 0; v < nvar; ++v)
            if (theta(v) < margin) shortfall(v) = margin - theta(v);
        const Eigen::VectorXd step = kernel * (kernel.transpose() * shortfall);
        if (step.norm() < 1e-14) break;
        const double h0 = hinge(theta);
        bool moved = false;
        for (double t : {4.0, 2.0, 1.0, 0.5, 0.25, 0.1}) {
            const Eigen::VectorXd cand = theta + t * step;
            if (hinge(cand) < h0) {
                theta = cand;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }

    if (min_angle(theta) <= floor_angle && kernel.cols() > 0) {
        std::mt19937 rng(seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int attempt = 0; attempt < 200 && min_angle(theta) <= floor_angle; ++attempt) {
            Eigen::VectorXd y(kernel.cols());
            for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = u(rng);
            Eigen::VectorXd dir = kernel * y;
            for (double scale : {1.0, 0.3, 0.1, 0.03, 0.01}) {
                Eigen::VectorXd cand = theta + scale * dir;
                if (min_angle(cand) > min_angle(theta)) {
                    theta = cand;
                    break;
                }
            }
        }
    }

    if (min_angle(theta) <= floor_angle) return {};
    return theta;
}

} // namespace

AngleStructure maximize_volume(const IdealTriangulation& tri, const OptimizerOptions& opts) {
    const int nvar = tri.variable_count();
    if (nvar == 0) throw OptimizerError("empty triangulation");

    Eigen::MatrixXd A;
    Eigen::VectorXd b;
    build_constraints(tri, A, b);

    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    lu.setThreshold(1e-9);
    Eigen::MatrixXd kernel = lu.kernel();
    // kernel() returns one zero column for a full-rank matrix; drop it
    if (kernel.cols() == 1 && kernel.col(0).norm() < 1e-12) kernel.resize(nvar, 0);
    // orthonormalize for well-scaled reduced systems
    if (kernel.cols() > 0) {
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(kernel);
        Eigen::MatrixXd q = qr.householderQ();
        kernel = q.leftCols(kernel.cols());
    }

    Eigen::VectorXd theta = feasible_start(tri, A, b, kernel, opts.seed);
    if (theta.size() == 0)
        throw OptimizerError("no strictly positive angle structure found for this apex");

    AngleStructure out;
    double f = objective(theta);
    out.converged = false;

    const int dim = static_cast<int>(kernel.cols());
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        out.iterations = iter;
        Eigen::VectorXd grad_full(nvar);
        for (int i = 0; i < nvar; ++i) grad_full(i) = -std::log(2.0 * std::sin(theta(i)));

        if (dim == 0) {
            // constraints pin the structure completely
            out.residual = 0.0;
            out.converged = true;
            break;
        }

        Eigen::VectorXd g = kernel.transpose() * grad_full;
        out.residual = g.lpNorm<Eigen::Infinity>();
        if (out.residual < opts.gradient_tol) {
            out.converged = true;
            break;
        }

        // objective Hessian is diag(-cot theta); reduced system is negative
        // definite on the kernel, so M below is positive definite
        Eigen::VectorXd cot(nvar);
        for (int i = 0; i < nvar; ++i) cot(i) = std::cos(theta(i)) / std::sin(theta(i));
        Eigen::MatrixXd M = kernel.transpose() * cot.asDiagonal() * kernel;
        Eigen::VectorXd d;
        Eigen::LLT<Eigen::MatrixXd> llt(M);
        if (llt.info() == Eigen::Success) {
            d = llt.solve(g);
        } else {
            // near-degenerate tetrahedra: regularize
            const double mu = 1e-10 + 1e-6 * M.diagonal().cwiseAbs().maxCoeff();
            d = (M + mu * Eigen::MatrixXd::Identity(dim, dim)).ldlt().solve(g);
        }
        const double slope = g.dot(d);
        if (slope <= 0) {
            d = g; // fall back to plain ascent if curvature info went bad
        }

        const Eigen::VectorXd dir = kernel * d;
        double t = 1.0;
        bool accepted = false;
        const double armijo = 1e-4 * g.dot(d);
        for (int half = 0; half < 60; ++half, t *= 0.5) {
            Eigen::VectorXd cand = theta + t * dir;
            if (cand.minCoeff() <= 0.0 || cand.maxCoeff() >= M_PI) continue;
            const double fc = objective(cand);
            if (fc >= f + t * armijo) {
                theta = cand;
                f = fc; // concave objective: accepted steps never decrease it
                accepted = true;
                break;
            }
        }
        if (!accepted) break; // step underflow: report whatever we reached
    }

    out.angles.assign(theta.data(), theta.data() + nvar);
    out.volume = f;
    return out;
}

double ideal_volume(const PlanarGraph& g, const OptimizerOptions& opts) {
    const ValidityReport rep = check_validity(g);
    if (!rep) throw PreconditionError("not an ideal right-angled polyhedron: " + rep.reason);

    const FaceStructure fs = trace_faces(g);
    std::string last = "no apex candidates";
    for (int apex : apex_candidates(g, fs)) {
        try {
            const AngleStructure s = maximize_volume(triangulate(g, apex), opts);
            if (s.converged) return s.volume;
            last = "optimizer stalled at apex " + std::to_string(apex);
        } catch (const OptimizerError& e) {
            last = e.what();
        }
    }
    throw OptimizerError("degenerate triangulation for every apex: " + last);
}

} // namespace irpoly
