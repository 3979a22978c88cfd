#pragma once

// Linearization of affine actions: the embedding x -> (gx)_{g in G} of R^d
// into R^(d|G|), where the group acts linearly by block permutation and the
// sup-block norm is exactly invariant.  Hausdorff distances between lifted
// bodies are taken in the sup-block norm; the point-to-polytope projection
// under that norm is a small convex minimax program (min tau subject to
// 0.5 |residual block g|^2 <= tau over the simplex) solved by a primal-dual
// interior-point method.  The dual block weights certify the answer: for any
// probability weights w the weighted least-squares value sqrt(sum w_g r_g^2)
// lower-bounds the minimax optimum, and that projection is a Euclidean one
// after scaling each block by sqrt(w_g), so the certificate reuses the
// Wolfe projector and its own variational stopping rule.

#include <vector>

#include "ccgeo/group.hpp"

namespace ccgeo {

struct LiftedSpace {
    GroupAction base;    // the acting group on R^d (affine or linear)
    int block_dim = 0;   // d
    int lifted_dim = 0;  // d |G|

    int blocks() const { return base.order(); }

    /// Block permutation of element h: output block g holds input block gh.
    std::vector<int> lifted_perm(int h) const {
        std::vector<int> p(static_cast<std::size_t>(blocks()));
        for (int g = 0; g < blocks(); ++g)
            p[static_cast<std::size_t>(g)] = base.compose(g, h);
        return p;
    }
};

inline LiftedSpace make_lifted_space(const GroupAction& g) {
    LiftedSpace sp;
    sp.base = g;
    sp.block_dim = g.dim;
    sp.lifted_dim = g.dim * g.order();
    return sp;
}

/// Block g of the output is g x (affine).
inline Vec lift_point(const Vec& x, const LiftedSpace& sp) {
    if (x.size() != sp.block_dim) throw dimension_mismatch(sp.block_dim, x.size());
    Vec out(sp.lifted_dim);
    for (int g = 0; g < sp.blocks(); ++g) {
        const GroupElement& el = sp.base.elements[static_cast<std::size_t>(g)];
        out.segment(g * sp.block_dim, sp.block_dim) = el.linear * x + el.offset;
    }
    return out;
}

/// Hull of the lifted vertices; the embedding is affine and injective, so
/// extreme points map to extreme points and no hull reduction is needed.
inline ConvexBody lift_body(const ConvexBody& A, const LiftedSpace& sp) {
    if (A.dim != sp.block_dim) throw dimension_mismatch(sp.block_dim, A.dim);
    ConvexBody out;
    out.dim = sp.lifted_dim;
    for (const Vec& v : A.vertices) out.vertices.push_back(lift_point(v, sp));
    return out;
}

/// The lifted (linear, block-permutation) action of element h on a point.
inline Vec apply_lifted(const LiftedSpace& sp, int h, const Vec& x) {
    if (x.size() != sp.lifted_dim) throw dimension_mismatch(sp.lifted_dim, x.size());
    Vec out(sp.lifted_dim);
    for (int g = 0; g < sp.blocks(); ++g) {
        int src = sp.base.compose(g, h);
        out.segment(g * sp.block_dim, sp.block_dim) =
            x.segment(src * sp.block_dim, sp.block_dim);
    }
    return out;
}

inline ConvexBody apply_lifted_body(const LiftedSpace& sp, int h, const ConvexBody& A) {
    ConvexBody out;
    out.dim = A.dim;
    for (const Vec& v : A.vertices) out.vertices.push_back(apply_lifted(sp, h, v));
    return out;
}

/// max over blocks of the Euclidean block norm.
inline double sup_block_norm(const LiftedSpace& sp, const Vec& x) {
    double m = 0.0;
    for (int g = 0; g < sp.blocks(); ++g)
        m = std::max(m, x.segment(g * sp.block_dim, sp.block_dim).norm());
    return m;
}

/// Sup-block operator norm of (1 - sigma_h): 0 for the identity, otherwise
/// exactly 2 (alternating unit blocks along any nontrivial cycle attain it).
inline double lifted_operator_deviation(const LiftedSpace& sp, int h) {
    return h == sp.base.identity ? 0.0 : 2.0;
}

struct MixedNormProjection {
    double dist = 0;   // certified upper value max_g ||residual block g||
    double lower = 0;  // weighted-least-squares lower bound on the optimum
    long iterations = 0;
};

namespace detail {

/// Primal-dual interior-point solve of
///   min tau  s.t.  q_g(lam) = 0.5 |V_g lam - p_g|^2 <= tau,  lam in simplex.
/// On success fills the primal coefficients and the dual block weights
/// (which sum to one by the stationarity condition in tau).
inline bool sup_block_ipm(const LiftedSpace& sp, const Vec& p,
                          const std::vector<Vec>& vertices,
                          std::vector<double>& lam_out, std::vector<double>& z_out,
                          long& iterations) {
    const int nb = sp.blocks();
    const int bd = sp.block_dim;
    const int n = static_cast<int>(vertices.size());

    std::vector<Mat> V(static_cast<std::size_t>(nb));
    std::vector<Vec> pg(static_cast<std::size_t>(nb));
    for (int g = 0; g < nb; ++g) {
        V[static_cast<std::size_t>(g)].resize(bd, n);
        for (int i = 0; i < n; ++i)
            V[static_cast<std::size_t>(g)].col(i) =
                vertices[static_cast<std::size_t>(i)].segment(g * bd, bd);
        pg[static_cast<std::size_t>(g)] = p.segment(g * bd, bd);
    }
    auto qval = [&](const Vec& l, int g) {
        return 0.5 * (V[static_cast<std::size_t>(g)] * l - pg[static_cast<std::size_t>(g)])
                         .squaredNorm();
    };

    Vec lam = Vec::Constant(n, 1.0 / n);
    double tau = 0.0;
    for (int g = 0; g < nb; ++g) tau = std::max(tau, qval(lam, g));
    tau = 1.1 * tau + 1.0;
    Vec z = Vec::Constant(nb, 1.0 / nb);
    Vec y = Vec::Constant(n, 0.1);
    double nu = 0.0;

    // unknown layout: dlam (n), dtau, dnu, dz (nb), dy (n)
    const int iTau = n, iNu = n + 1, iZ = n + 2, iY = n + 2 + nb;
    const int N = 2 * n + nb + 2;
    for (long it = 0; it < 200; ++it) {
        ++iterations;
        std::vector<Vec> grads(static_cast<std::size_t>(nb));
        Vec c(nb);
        for (int g = 0; g < nb; ++g) {
            Vec rv = V[static_cast<std::size_t>(g)] * lam - pg[static_cast<std::size_t>(g)];
            grads[static_cast<std::size_t>(g)] = V[static_cast<std::size_t>(g)].transpose() * rv;
            c(g) = tau - 0.5 * rv.squaredNorm();
        }
        Vec r1 = Vec::Zero(n);
        for (int g = 0; g < nb; ++g) r1 += z(g) * grads[static_cast<std::size_t>(g)];
        r1 -= y;
        r1.array() += nu;
        double r2 = 1.0 - z.sum();
        double r3 = lam.sum() - 1.0;
        double res = std::max({r1.lpNorm<Eigen::Infinity>(), std::abs(r2), std::abs(r3)});
        double gap = (z.dot(c) + y.dot(lam)) / (nb + n);
        if (res < 1e-11 && gap < 1e-13) break;
        double mu = std::max(0.15 * gap, 1e-15);
        Vec r4 = z.cwiseProduct(c);
        r4.array() -= mu;
        Vec r5 = y.cwiseProduct(lam);
        r5.array() -= mu;

        Mat J = Mat::Zero(N, N);
        Vec F(N);
        for (int g = 0; g < nb; ++g)
            J.block(0, 0, n, n) += z(g) * (V[static_cast<std::size_t>(g)].transpose() *
                                           V[static_cast<std::size_t>(g)]);
        for (int g = 0; g < nb; ++g) J.block(0, iZ + g, n, 1) = grads[static_cast<std::size_t>(g)];
        J.block(0, iY, n, n) = -Mat::Identity(n, n);
        J.block(0, iNu, n, 1).setOnes();
        F.head(n) = -r1;
        for (int g = 0; g < nb; ++g) J(n, iZ + g) = -1.0;
        F(n) = -r2;
        J.block(iNu, 0, 1, n).setOnes();
        F(iNu) = -r3;
        for (int g = 0; g < nb; ++g) {
            J.block(iZ + g, 0, 1, n) = -z(g) * grads[static_cast<std::size_t>(g)].transpose();
            J(iZ + g, iTau) = z(g);
            J(iZ + g, iZ + g) = c(g);
            F(iZ + g) = -r4(g);
        }
        for (int i = 0; i < n; ++i) {
            J(iY + i, i) = y(i);
            J(iY + i, iY + i) = lam(i);
            F(iY + i) = -r5(i);
        }
        Vec d = J.partialPivLu().solve(F);
        if (!d.allFinite()) return false;
        Vec dlam = d.head(n);
        double dtau = d(iTau);
        Vec dz = d.segment(iZ, nb), dy = d.segment(iY, n);

        double alpha = 1.0;
        auto fraction_to_boundary = [&](double v, double dv) {
            if (dv < 0) alpha = std::min(alpha, -0.995 * v / dv);
        };
        for (int g = 0; g < nb; ++g) fraction_to_boundary(z(g), dz(g));
        for (int i = 0; i < n; ++i) {
            fraction_to_boundary(y(i), dy(i));
            fraction_to_boundary(lam(i), dlam(i));
        }
        for (int bt = 0; bt < 60; ++bt) {
            Vec l2 = lam + alpha * dlam;
            double t2 = tau + alpha * dtau;
            bool interior = true;
            for (int g = 0; g < nb && interior; ++g)
                if (t2 - qval(l2, g) <= 0) interior = false;
            if (interior) break;
            alpha *= 0.5;
        }
        lam += alpha * dlam;
        tau += alpha * dtau;
        nu += alpha * d(iNu);
        z += alpha * dz;
        y += alpha * dy;
    }

    lam_out.assign(static_cast<std::size_t>(n), 0.0);
    z_out.assign(static_cast<std::size_t>(nb), 0.0);
    double ls = 0.0, zs = 0.0;
    for (int i = 0; i < n; ++i) {
        lam_out[static_cast<std::size_t>(i)] = std::max(0.0, lam(i));
        ls += lam_out[static_cast<std::size_t>(i)];
    }
    for (int g = 0; g < nb; ++g) {
        z_out[static_cast<std::size_t>(g)] = std::max(0.0, z(g));
        zs += z_out[static_cast<std::size_t>(g)];
    }
    if (ls <= 0.0 || zs <= 0.0) return false;
    for (double& v : lam_out) v /= ls;
    for (double& v : z_out) v /= zs;
    return true;
}

} // namespace detail

/// Distance from p to conv(vertices) under the sup-block norm, with a
/// certified enclosure: dist is attained by a feasible convex combination,
/// lower is a weighted-least-squares duality bound.
inline MixedNormProjection sup_block_distance(const LiftedSpace& sp, const Vec& p,
                                              const std::vector<Vec>& vertices,
                                              double tol = 1e-10) {
    const int nb = sp.blocks();
    const int bd = sp.block_dim;
    const std::size_t n = vertices.size();
    MixedNormProjection out;

    std::vector<Vec> scaled(n);
    Vec p_scaled(sp.lifted_dim);
    auto weighted_projection = [&](const std::vector<double>& w) {
        for (std::size_t i = 0; i < n; ++i) {
            scaled[i].resize(sp.lifted_dim);
            for (int g = 0; g < nb; ++g)
                scaled[i].segment(g * bd, bd) =
                    std::sqrt(w[static_cast<std::size_t>(g)]) * vertices[i].segment(g * bd, bd);
        }
        for (int g = 0; g < nb; ++g)
            p_scaled.segment(g * bd, bd) =
                std::sqrt(w[static_cast<std::size_t>(g)]) * p.segment(g * bd, bd);
        return detail::nearest_point(p_scaled, scaled, 1e300);
    };
    auto sup_block_at = [&](const std::vector<double>& lam) {
        Vec x = Vec::Zero(sp.lifted_dim);
        for (std::size_t i = 0; i < n; ++i)
            if (lam[i] > 0.0) x += lam[i] * vertices[i];
        return sup_block_norm(sp, (x - p).eval());
    };

    // uniform-weight Euclidean projection: cheap upper bound, and exact on
    // the degenerate near-zero cases (p inside or at a vertex of the hull)
    // where the interior-point tau loses half the working precision to the
    // square root
    std::vector<double> w0(static_cast<std::size_t>(nb), 1.0 / nb);
    Projection pr0 = weighted_projection(w0);
    ++out.iterations;
    std::vector<double> lam0(n, 0.0);
    for (const auto& [idx, lam] : pr0.coefficients) lam0[idx] = lam;
    out.dist = sup_block_at(lam0);
    out.lower = std::max(0.0, pr0.dist * (1.0 - 1e-12) - 1e-12);
    if (out.dist <= std::max(tol, 1e-9)) {
        out.lower = 0.0;
        return out;
    }
    if (out.dist - out.lower <= tol) return out;

    std::vector<double> lam, z;
    if (detail::sup_block_ipm(sp, p, vertices, lam, z, out.iterations)) {
        out.dist = std::min(out.dist, sup_block_at(lam));
        Projection pc = weighted_projection(z);
        ++out.iterations;
        out.lower = std::max(out.lower, pc.dist * (1.0 - 1e-12) - 1e-12);
    }
    return out;
}

/// Hausdorff distance between lifted bodies under the sup-block norm;
/// exact by the extreme-point reduction, which holds in any norm.
inline double lifted_hausdorff(const LiftedSpace& sp, const ConvexBody& A,
                               const ConvexBody& B) {
    if (A.dim != B.dim || A.dim != sp.lifted_dim)
        throw dimension_mismatch(sp.lifted_dim, A.dim);
    double h = 0.0;
    for (const Vec& a : A.vertices)
        h = std::max(h, sup_block_distance(sp, a, B.vertices).dist);
    for (const Vec& b : B.vertices)
        h = std::max(h, sup_block_distance(sp, b, A.vertices).dist);
    return h;
}

struct LiftedContinuityCheck {
    double lhs = 0; // lifted d_H(A~, sigma_h A~)
    double rhs = 0; // lifted operator deviation times max sup-block vertex norm
    bool ok = false;
};

inline LiftedContinuityCheck lifted_continuity_check(const LiftedSpace& sp,
                                                     const ConvexBody& lifted, int h) {
    double m = 0.0;
    for (const Vec& v : lifted.vertices) m = std::max(m, sup_block_norm(sp, v));
    LiftedContinuityCheck out;
    out.lhs = lifted_hausdorff(sp, lifted, apply_lifted_body(sp, h, lifted));
    out.rhs = lifted_operator_deviation(sp, h) * m;
    out.ok = out.lhs <= out.rhs + kDefaultTol;
    return out;
}

} // namespace ccgeo
