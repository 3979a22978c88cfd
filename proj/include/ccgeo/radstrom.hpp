#pragma once

// Formal-difference space H(K) for K = cc(R^d): equivalence classes <A,B>
// with linear structure, norm, the embedding j and the induced group action.
// Classes are never canonicalized; equality is the metric predicate fd_equal.

#include "ccgeo/group.hpp"

namespace ccgeo {

/// A representative <pos, neg> of an equivalence class of H(K).
struct FormalDifference {
    ConvexBody pos;
    ConvexBody neg;

    int dim() const { return pos.dim; }
};

inline FormalDifference fd_zero(int dim) {
    ConvexBody z = singleton(Vec::Zero(dim));
    return {z, z};
}

/// <A,B> ~ <C,D>  iff  A + D = B + C  (as compacta, up to tol in d_H).
inline bool fd_equal(const FormalDifference& x, const FormalDifference& y,
                     double tol = kDefaultTol) {
    if (x.dim() != y.dim()) throw dimension_mismatch(x.dim(), y.dim());
    return hausdorff(minkowski_sum(x.pos, y.neg), minkowski_sum(x.neg, y.pos)) <= tol;
}

inline FormalDifference fd_add(const FormalDifference& x, const FormalDifference& y) {
    if (x.dim() != y.dim()) throw dimension_mismatch(x.dim(), y.dim());
    return {minkowski_sum(x.pos, y.pos), minkowski_sum(x.neg, y.neg)};
}

/// t<A,B> = <tA,tB> for t >= 0 and <-tB,-tA> for t <= 0.
inline FormalDifference fd_scale(double t, const FormalDifference& x) {
    if (t >= 0.0) return {scale_body(x.pos, t), scale_body(x.neg, t)};
    return {scale_body(x.neg, -t), scale_body(x.pos, -t)};
}

inline FormalDifference fd_sub(const FormalDifference& x, const FormalDifference& y) {
    return fd_add(x, fd_scale(-1.0, y));
}

/// ||<A,B>|| = d_H(A,B); class-invariant by translation invariance of d_H.
inline double fd_norm(const FormalDifference& x) { return hausdorff(x.pos, x.neg); }

/// j(A) = <A, {0}> — the isometric Minkowski-additive embedding.
inline FormalDifference embed_j(const ConvexBody& A) {
    return {A, singleton(Vec::Zero(A.dim))};
}

/// g<A,B> = <gA, gB>; requires a linear isometric element.
inline FormalDifference fd_act(const GroupElement& g, const FormalDifference& x) {
    if (g.offset.size() > 0 && g.offset.cwiseAbs().maxCoeff() > 1e-9) throw affine_element();
    return {act_body(g, x.pos), act_body(g, x.neg)};
}

struct SupportSample {
    std::vector<Vec> directions;
    std::vector<double> values;
};

/// Functional model of the class: values[i] = h_pos(u_i) - h_neg(u_i).
/// max |values| is a lower bound for fd_norm, exact in the plane when the
/// directions include the merged normal fans of both bodies.
inline SupportSample support_realization(const FormalDifference& x,
                                         const std::vector<Vec>& dirs) {
    SupportSample s;
    for (const Vec& u : dirs) {
        s.directions.push_back(u);
        s.values.push_back(support(x.pos, u).value - support(x.neg, u).value);
    }
    return s;
}

/// Directions on which sup |h_A - h_B| is attained for planar bodies:
/// both outward edge normals of each body plus all normalized vertex
/// differences between the two (the vertex-cone extremes).
inline std::vector<Vec> exact_direction_set_2d(const ConvexBody& A, const ConvexBody& B) {
    if (A.dim != 2 || B.dim != 2) throw dimension_mismatch(2, A.dim);
    std::vector<Vec> dirs;
    auto add = [&dirs](const Vec& d) {
        if (d.norm() > 1e-12) {
            dirs.push_back(d / d.norm());
            dirs.push_back(-d / d.norm());
        }
    };
    auto edge_normals = [&add](const ConvexBody& P) {
        for (std::size_t i = 0; i < P.size(); ++i)
            for (std::size_t k = i + 1; k < P.size(); ++k) {
                Vec e = P.vertices[k] - P.vertices[i];
                Vec n(2);
                n << -e(1), e(0);
                add(n);
            }
    };
    edge_normals(A);
    edge_normals(B);
    for (const Vec& a : A.vertices)
        for (const Vec& b : B.vertices) add(a - b);
    if (dirs.empty()) { // both singletons at the same point
        Vec e(2);
        e << 1, 0;
        add(e);
    }
    return dirs;
}

} // namespace ccgeo
