#pragma once

// Compact convex polytopes in R^d stored by irredundant vertex sets,
// with Minkowski algebra, support functions, nearest-point projection
// and exact Hausdorff distance (Euclidean ground metric).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ccgeo/errors.hpp"

namespace ccgeo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kDedupTol = 1e-9;
inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kProjectionCert = 1e-8;

/// A compact convex polytope given by its extreme points.
/// Construct through hull(); the vertex list is then duplicate-free
/// and irredundant.
struct ConvexBody {
    int dim = 0;
    std::vector<Vec> vertices;

    std::size_t size() const { return vertices.size(); }
};

struct SupportEval {
    double value = 0.0;
    std::size_t witness = 0; // lowest-index attaining vertex
};

struct Projection {
    Vec point;       // nearest point of the body
    double dist = 0; // Euclidean distance
    long iterations = 0;
    std::vector<std::pair<std::size_t, double>> coefficients; // convex combination
};

namespace detail {

// Nearest point of conv(pts) to p: Wolfe's min-norm-point algorithm on the
// shifted points.  Finite major/minor cycles; the affine minimizer on the
// final corral makes the result accurate to linear-algebra precision.
inline Projection nearest_point(const Vec& p, const std::vector<Vec>& pts,
                                double cert_tol = kProjectionCert) {
    const std::size_t n = pts.size();
    const long d = p.size();
    std::vector<Vec> w(n);
    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = pts[i] - p;
        scale = std::max(scale, w[i].squaredNorm());
    }
    const double inner_eps = 5e-14 * scale;
    const long cap = 10 * static_cast<long>(n) * static_cast<long>(n) + 1000;

    // corral
    std::vector<std::size_t> S;
    std::vector<double> lam;
    std::size_t start = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (w[i].squaredNorm() < w[start].squaredNorm()) start = i;
    S.push_back(start);
    lam.push_back(1.0);
    Vec x = w[start];

    long iters = 0;
    double gap = 0.0;
    while (iters < cap) {
        ++iters;
        // most violating vertex
        std::size_t j = 0;
        double best = w[0].dot(x);
        for (std::size_t i = 1; i < n; ++i) {
            double v = w[i].dot(x);
            if (v < best) { best = v; j = i; }
        }
        gap = x.squaredNorm() - best;
        if (gap <= inner_eps) break;
        bool in_corral = false;
        for (std::size_t s : S)
            if (s == j) { in_corral = true; break; }
        if (in_corral) break; // numerical stall; certificate checked below

        S.push_back(j);
        lam.push_back(0.0);

        // minor cycles: affine minimizer over the corral, dropping vertices
        // until the minimizer is a convex combination
        long minor = 0;
        while (minor++ < cap) {
            const std::size_t m = S.size();
            Mat K(m + 1, m + 1);
            Vec rhs = Vec::Zero(m + 1);
            for (std::size_t a = 0; a < m; ++a) {
                for (std::size_t b = 0; b < m; ++b) K(a, b) = 2.0 * w[S[a]].dot(w[S[b]]);
                K(a, m) = 1.0;
                K(m, a) = 1.0;
            }
            K(m, m) = 0.0;
            rhs(m) = 1.0;
            Vec sol = K.completeOrthogonalDecomposition().solve(rhs);
            Vec beta = sol.head(m);

            double bmin = beta.minCoeff();
            if (bmin >= -1e-12) {
                for (std::size_t a = 0; a < m; ++a) lam[a] = std::max(0.0, beta(a));
                double tot = 0.0;
                for (double l : lam) tot += l;
                for (double& l : lam) l /= tot;
                break;
            }
            // step toward beta until a coordinate vanishes
            double theta = 1.0;
            for (std::size_t a = 0; a < m; ++a)
                if (beta(a) < 0.0 && lam[a] - beta(a) > 0.0)
                    theta = std::min(theta, lam[a] / (lam[a] - beta(a)));
            std::size_t drop = m;
            double dmin = 1e300;
            for (std::size_t a = 0; a < m; ++a) {
                lam[a] = (1.0 - theta) * lam[a] + theta * beta(a);
                if (lam[a] < dmin) { dmin = lam[a]; drop = a; }
            }
            // remove vanished coordinates (always at least the blocking one)
            std::vector<std::size_t> S2;
            std::vector<double> lam2;
            for (std::size_t a = 0; a < m; ++a) {
                if (a == drop || lam[a] <= 1e-12) continue;
                S2.push_back(S[a]);
                lam2.push_back(lam[a]);
            }
            if (S2.empty()) { S2.push_back(S[drop]); lam2.push_back(1.0); }
            S.swap(S2);
            lam.swap(lam2);
        }
        x = Vec::Zero(d);
        for (std::size_t a = 0; a < S.size(); ++a) x += lam[a] * w[S[a]];
    }

    // variational certificate: <p-q, v-q> <= cert_tol for all vertices v
    double cert = 0.0;
    for (std::size_t i = 0; i < n; ++i) cert = std::max(cert, x.squaredNorm() - w[i].dot(x));
    if (cert > cert_tol) throw no_convergence(iters);

    Projection out;
    out.point = x + p;
    out.dist = x.norm();
    out.iterations = iters;
    for (std::size_t a = 0; a < S.size(); ++a) out.coefficients.emplace_back(S[a], lam[a]);
    return out;
}

inline double dist_to_hull(const Vec& p, const std::vector<Vec>& pts) {
    return nearest_point(p, pts).dist;
}

inline std::vector<Vec> dedup(const std::vector<Vec>& pts, double tol) {
    std::vector<Vec> out;
    for (const Vec& p : pts) {
        bool dup = false;
        for (const Vec& q : out)
            if ((p - q).norm() <= tol) { dup = true; break; }
        if (!dup) out.push_back(p);
    }
    return out;
}

inline double cross2(const Vec& o, const Vec& a, const Vec& b) {
    return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

// Andrew's monotone chain, strict turns only.
inline std::vector<Vec> chain_hull_2d(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1));
    });
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Vec> h;
    auto build = [&](auto begin, auto end) {
        std::size_t base = h.size();
        for (auto it = begin; it != end; ++it) {
            while (h.size() >= base + 2 && cross2(h[h.size() - 2], h.back(), *it) <= 1e-13)
                h.pop_back();
            h.push_back(*it);
        }
        h.pop_back();
    };
    build(pts.begin(), pts.end());
    build(pts.rbegin(), pts.rend());
    return h;
}

} // namespace detail

/// Extreme points of the convex hull of the input, deduplicated at 1e-9.
inline ConvexBody hull(const std::vector<Vec>& points) {
    if (points.empty()) throw empty_input();
    const long d = points.front().size();
    for (const Vec& p : points)
        if (p.size() != d) throw dimension_mismatch(d, p.size());

    std::vector<Vec> pts = detail::dedup(points, kDedupTol);
    std::vector<Vec> keep;

    if (pts.size() <= 2) {
        keep = pts;
    } else if (d == 1) {
        Vec lo = pts[0], hi = pts[0];
        for (const Vec& p : pts) {
            if (p(0) < lo(0)) lo = p;
            if (p(0) > hi(0)) hi = p;
        }
        keep = {lo, hi};
    } else if (d == 2) {
        keep = detail::chain_hull_2d(pts);
    } else {
        // direction sweep confirms clear extreme points cheaply, then each
        // remaining candidate is tested for membership in the hull of the rest
        std::vector<char> confirmed(pts.size(), 0), dropped(pts.size(), 0);
        std::mt19937_64 eng(0x5DEECE66Dull);
        std::vector<Vec> dirs;
        for (long k = 0; k < d; ++k) {
            Vec e = Vec::Zero(d);
            e(k) = 1.0;
            dirs.push_back(e);
            dirs.push_back(-e);
        }
        for (int k = 0; k < 60 * d; ++k) {
            Vec u(d);
            for (long i = 0; i < d; ++i) {
                // Box-Muller from raw 53-bit uniforms, deterministic
                double u1 = ((eng() >> 11) + 0.5) * 0x1.0p-53;
                double u2 = ((eng() >> 11) + 0.5) * 0x1.0p-53;
                u(i) = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
            }
            if (u.norm() > 1e-6) dirs.push_back(u / u.norm());
        }
        for (const Vec& u : dirs) {
            std::size_t arg = 0;
            double best = pts[0].dot(u);
            bool tie = false;
            for (std::size_t i = 1; i < pts.size(); ++i) {
                double v = pts[i].dot(u);
                if (v > best + 1e-12) { best = v; arg = i; tie = false; }
                else if (v > best - 1e-12) tie = true;
            }
            if (!tie) confirmed[arg] = 1;
        }
        std::vector<Vec> conf;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (confirmed[i]) conf.push_back(pts[i]);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (confirmed[i]) continue;
            if (conf.size() > static_cast<std::size_t>(d) &&
                detail::dist_to_hull(pts[i], conf) <= kDedupTol) {
                dropped[i] = 1;
                continue;
            }
            std::vector<Vec> others;
            for (std::size_t k = 0; k < pts.size(); ++k)
                if (k != i && !dropped[k]) others.push_back(pts[k]);
            if (detail::dist_to_hull(pts[i], others) <= kDedupTol) dropped[i] = 1;
        }
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (!dropped[i]) keep.push_back(pts[i]);
    }

    // final irredundancy sweep
    if (keep.size() > 2) {
        bool changed = true;
        while (changed && keep.size() > 2) {
            changed = false;
            for (std::size_t i = 0; i < keep.size(); ++i) {
                std::vector<Vec> others;
                for (std::size_t k = 0; k < keep.size(); ++k)
                    if (k != i) others.push_back(keep[k]);
                if (detail::dist_to_hull(keep[i], others) <= kDedupTol) {
                    keep.erase(keep.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
            }
        }
    }

    ConvexBody body;
    body.dim = static_cast<int>(d);
    body.vertices = std::move(keep);
    return body;
}

inline ConvexBody singleton(const Vec& p) { return hull({p}); }

/// h_A(u) with its attaining vertex (ties broken by lowest index).
inline SupportEval support(const ConvexBody& A, const Vec& u) {
    if (u.size() != A.dim) throw dimension_mismatch(A.dim, u.size());
    if (std::abs(u.norm() - 1.0) > kDedupTol) throw non_unit_direction(u.norm());
    SupportEval out;
    out.value = A.vertices[0].dot(u);
    for (std::size_t i = 1; i < A.size(); ++i) {
        double v = A.vertices[i].dot(u);
        if (v > out.value) { out.value = v; out.witness = i; }
    }
    return out;
}

inline ConvexBody minkowski_sum(const ConvexBody& A, const ConvexBody& B) {
    if (A.dim != B.dim) throw dimension_mismatch(A.dim, B.dim);
    std::vector<Vec> sums;
    sums.reserve(A.size() * B.size());
    for (const Vec& a : A.vertices)
        for (const Vec& b : B.vertices) sums.push_back(a + b);
    return hull(sums);
}

/// Hull of { t (T v + b) } over the vertices of A.
inline ConvexBody affine_image(const ConvexBody& A, const Mat& T, const Vec& b, double t) {
    if (T.rows() != A.dim || T.cols() != A.dim || b.size() != A.dim)
        throw dimension_mismatch(A.dim, T.cols());
    std::vector<Vec> imgs;
    imgs.reserve(A.size());
    for (const Vec& v : A.vertices) imgs.push_back(t * (T * v + b));
    return hull(imgs);
}

inline ConvexBody scale_body(const ConvexBody& A, double t) {
    return affine_image(A, Mat::Identity(A.dim, A.dim), Vec::Zero(A.dim), t);
}

inline ConvexBody translate(const ConvexBody& A, const Vec& b) {
    return affine_image(A, Mat::Identity(A.dim, A.dim), b, 1.0);
}

/// Euclidean nearest point of A to p, certified by the variational
/// inequality <p-q, v-q> <= 1e-8 for all vertices v.
inline Projection project_point(const Vec& p, const ConvexBody& A) {
    if (p.size() != A.dim) throw dimension_mismatch(A.dim, p.size());
    return detail::nearest_point(p, A.vertices);
}

/// Exact Hausdorff distance between convex compacta: x -> d(x, B) is convex,
/// so both directed suprema are attained at vertices.
inline double hausdorff(const ConvexBody& A, const ConvexBody& B) {
    if (A.dim != B.dim) throw dimension_mismatch(A.dim, B.dim);
    double h = 0.0;
    for (const Vec& a : A.vertices) h = std::max(h, detail::dist_to_hull(a, B.vertices));
    for (const Vec& b : B.vertices) h = std::max(h, detail::dist_to_hull(b, A.vertices));
    return h;
}

/// t A + (1-t) B.
inline ConvexBody family_mix(const ConvexBody& A, const ConvexBody& B, double t) {
    if (A.dim != B.dim) throw dimension_mismatch(A.dim, B.dim);
    if (t < 0.0 || t > 1.0)
        throw parameter_out_of_range("family_mix parameter " + std::to_string(t) +
                                     " outside [0,1]");
    return minkowski_sum(scale_body(A, t), scale_body(B, 1.0 - t));
}

/// Minkowski convex combination sum_i w_i A_i; weights nonnegative, sum 1.
inline ConvexBody minkowski_combination(const std::vector<ConvexBody>& bodies,
                                        const std::vector<double>& weights) {
    if (bodies.empty() || bodies.size() != weights.size()) throw empty_input();
    std::optional<ConvexBody> acc;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        ConvexBody term = scale_body(bodies[i], weights[i]);
        acc = acc ? minkowski_sum(*acc, term) : term;
    }
    if (!acc) throw parameter_out_of_range("all weights are zero");
    return *acc;
}

// ---- family predicates ----

inline bool is_centrally_symmetric(const ConvexBody& A, double tol = kDefaultTol) {
    for (const Vec& v : A.vertices) {
        bool found = false;
        for (const Vec& w : A.vertices)
            if ((v + w).norm() <= tol) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

inline int affine_rank(const ConvexBody& A, double tol = kDefaultTol) {
    if (A.size() <= 1) return 0;
    Mat M(A.dim, A.size() - 1);
    for (std::size_t i = 1; i < A.size(); ++i) M.col(i - 1) = A.vertices[i] - A.vertices[0];
    Eigen::JacobiSVD<Mat> svd(M);
    int r = 0;
    for (long i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol) ++r;
    return r;
}

inline bool is_full_dimensional(const ConvexBody& A, double tol = kDefaultTol) {
    return affine_rank(A, tol) == A.dim;
}

inline bool within_body(const ConvexBody& A, const ConvexBody& M, double tol = kDefaultTol) {
    for (const Vec& v : A.vertices)
        if (detail::dist_to_hull(v, M.vertices) > tol) return false;
    return true;
}

inline bool bodies_equal(const ConvexBody& A, const ConvexBody& B, double tol = kDefaultTol) {
    return A.dim == B.dim && within_body(A, B, tol) && within_body(B, A, tol);
}

struct FamilyTag {
    enum Kind { ALL, FULL_DIMENSIONAL, CENTRALLY_SYMMETRIC, WITHIN_BODY } kind = ALL;
    std::optional<ConvexBody> body; // WITHIN_BODY only

    bool contains(const ConvexBody& A, double tol = kDefaultTol) const {
        switch (kind) {
        case ALL: return true;
        case FULL_DIMENSIONAL: return is_full_dimensional(A, tol);
        case CENTRALLY_SYMMETRIC: return is_centrally_symmetric(A, tol);
        case WITHIN_BODY: return within_body(A, *body, tol);
        }
        return false;
    }
};

} // namespace ccgeo
