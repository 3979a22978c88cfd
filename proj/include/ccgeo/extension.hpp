#pragma once

// Constructive equivariant extension over a finite metric G-space:
// Dugundji-style weights followed by exact group averaging (uniform Haar).

#include <map>
#include <vector>

#include "ccgeo/group.hpp"

namespace ccgeo {

/// A finite metric space with a group acting by metric-preserving
/// permutations of the points.
struct FiniteGSpace {
    int n = 0;                          // number of points
    Mat metric;                         // n x n, symmetric, invariant
    std::vector<std::vector<int>> perm; // perm[g][z] = g z
    GroupAction group;

    int act(int g, int z) const {
        return perm[static_cast<std::size_t>(g)][static_cast<std::size_t>(z)];
    }
};

/// Validates all structural invariants exhaustively.
inline FiniteGSpace build_gspace(const Mat& metric,
                                 const std::vector<std::vector<int>>& perms,
                                 const GroupAction& group) {
    const int n = static_cast<int>(metric.rows());
    if (metric.cols() != n || n == 0) throw metric_violation("metric matrix is not square");
    for (int i = 0; i < n; ++i) {
        if (metric(i, i) != 0.0) throw metric_violation("nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            if (metric(i, j) < 0.0) throw metric_violation("negative entry");
            if (std::abs(metric(i, j) - metric(j, i)) > 1e-12)
                throw metric_violation("not symmetric");
            if (i != j && metric(i, j) <= 0.0)
                throw metric_violation("distinct points at distance zero");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (metric(i, k) > metric(i, j) + metric(j, k) + 1e-12)
                    throw metric_violation("triangle inequality fails");

    const int m = group.order();
    if (static_cast<int>(perms.size()) != m)
        throw not_an_action("need one permutation per group element");
    for (const auto& p : perms) {
        if (static_cast<int>(p.size()) != n) throw not_an_action("permutation size mismatch");
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int v : p) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw not_an_action("not a permutation");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int z = 0; z < n; ++z)
        if (perms[static_cast<std::size_t>(group.identity)][static_cast<std::size_t>(z)] != z)
            throw not_an_action("identity does not fix points");
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            const auto& pab = perms[static_cast<std::size_t>(group.compose(a, b))];
            for (int z = 0; z < n; ++z) {
                int via = perms[static_cast<std::size_t>(a)][static_cast<std::size_t>(
                    perms[static_cast<std::size_t>(b)][static_cast<std::size_t>(z)])];
                if (pab[static_cast<std::size_t>(z)] != via)
                    throw not_an_action("permutations do not respect the cayley table");
            }
        }
    for (int g = 0; g < m; ++g)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int gi = perms[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)];
                int gj = perms[static_cast<std::size_t>(g)][static_cast<std::size_t>(j)];
                if (std::abs(metric(gi, gj) - metric(i, j)) > 1e-12)
                    throw not_invariant_metric("metric not preserved by element " +
                                               std::to_string(g));
            }

    FiniteGSpace s;
    s.n = n;
    s.metric = metric;
    s.perm = perms;
    s.group = group;
    return s;
}

/// (FiniteGSpace, invariant subset A, equivariant f: A -> cc(R^d)).
struct ExtensionProblem {
    FiniteGSpace space;
    std::vector<int> subset;
    std::map<int, ConvexBody> f;
};

/// Checks subset invariance and equivariance of f; throws validation_error.
inline void validate_problem(const ExtensionProblem& p, double tol = kDefaultTol) {
    std::vector<char> in(static_cast<std::size_t>(p.space.n), 0);
    for (int a : p.subset) {
        if (a < 0 || a >= p.space.n) throw validation_error("subset point out of range");
        in[static_cast<std::size_t>(a)] = 1;
        if (!p.f.count(a)) throw validation_error("f undefined on subset point");
    }
    for (int a : p.subset)
        for (int g = 0; g < p.space.group.order(); ++g) {
            int ga = p.space.act(g, a);
            if (!in[static_cast<std::size_t>(ga)])
                throw validation_error("subset is not invariant");
            double defect = hausdorff(p.f.at(ga),
                                      act_body(p.space.group.elements[static_cast<std::size_t>(g)],
                                               p.f.at(a)));
            if (defect > tol) throw validation_error("f is not equivariant");
        }
}

/// Whitney/Dugundji weights w_a(z) = max(0, 2 d(z,A) - d(z,a)) followed by
/// a Minkowski convex combination; exact on the subset.
inline std::vector<ConvexBody> dugundji_extend(const ExtensionProblem& p) {
    if (p.subset.empty()) throw empty_subset();
    std::vector<ConvexBody> F(static_cast<std::size_t>(p.space.n));
    std::vector<char> in(static_cast<std::size_t>(p.space.n), 0);
    for (int a : p.subset) in[static_cast<std::size_t>(a)] = 1;

    for (int z = 0; z < p.space.n; ++z) {
        if (in[static_cast<std::size_t>(z)]) {
            F[static_cast<std::size_t>(z)] = p.f.at(z);
            continue;
        }
        double dA = 1e300;
        for (int a : p.subset) dA = std::min(dA, p.space.metric(z, a));
        std::vector<ConvexBody> terms;
        std::vector<double> weights;
        double total = 0.0;
        for (int a : p.subset) {
            double w = std::max(0.0, 2.0 * dA - p.space.metric(z, a));
            if (w > 0.0) {
                terms.push_back(p.f.at(a));
                weights.push_back(w);
                total += w;
            }
        }
        for (double& w : weights) w /= total;
        F[static_cast<std::size_t>(z)] = minkowski_combination(terms, weights);
    }
    return F;
}

/// F_G(z) = (1/|G|) sum_g g^-1 F(gz) as an equal-weight Minkowski
/// combination.  Fixes equivariant maps; restriction to the subset stays
/// exact because f is equivariant.
inline std::vector<ConvexBody> equivariant_average(const ExtensionProblem& p,
                                                   const std::vector<ConvexBody>& F) {
    const int m = p.space.group.order();
    std::vector<ConvexBody> out(static_cast<std::size_t>(p.space.n));
    std::vector<double> weights(static_cast<std::size_t>(m), 1.0 / m);
    for (int z = 0; z < p.space.n; ++z) {
        std::vector<ConvexBody> terms;
        for (int g = 0; g < m; ++g)
            terms.push_back(act_body(p.space.group.inv(g),
                                     F[static_cast<std::size_t>(p.space.act(g, z))]));
        out[static_cast<std::size_t>(z)] = minkowski_combination(terms, weights);
    }
    return out;
}

struct ExtensionReport {
    double restriction_defect = 0;  // max over subset of d_H(F_G(a), f(a))
    double equivariance_defect = 0; // max over (h,z) of d_H(F_G(hz), h F_G(z))
    Mat value_distances;            // d_H(F_G(z), F_G(z')) table
    Mat point_distances;            // the metric, for the modulus comparison
};

inline ExtensionReport verify_extension(const ExtensionProblem& p,
                                        const std::vector<ConvexBody>& FG) {
    ExtensionReport r;
    for (int a : p.subset)
        r.restriction_defect =
            std::max(r.restriction_defect,
                     hausdorff(FG[static_cast<std::size_t>(a)], p.f.at(a)));
    for (int h = 0; h < p.space.group.order(); ++h)
        for (int z = 0; z < p.space.n; ++z) {
            double d = hausdorff(
                FG[static_cast<std::size_t>(p.space.act(h, z))],
                act_body(p.space.group.elements[static_cast<std::size_t>(h)],
                         FG[static_cast<std::size_t>(z)]));
            r.equivariance_defect = std::max(r.equivariance_defect, d);
        }
    r.value_distances = Mat::Zero(p.space.n, p.space.n);
    for (int i = 0; i < p.space.n; ++i)
        for (int j = i + 1; j < p.space.n; ++j) {
            double d = hausdorff(FG[static_cast<std::size_t>(i)], FG[static_cast<std::size_t>(j)]);
            r.value_distances(i, j) = d;
            r.value_distances(j, i) = d;
        }
    r.point_distances = p.space.metric;
    return r;
}

} // namespace ccgeo
