#pragma once

// Randomized verification suites behind `verify --suite <name>`.  Every
// suite is a pure function of (seed, cases, tol) and assembles an ordered
// JSON report, so repeated runs are byte-identical.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "ccgeo/cantor.hpp"
#include "ccgeo/catalog.hpp"
#include "ccgeo/io.hpp"
#include "ccgeo/lift.hpp"
#include "ccgeo/radstrom.hpp"

namespace ccgeo {

struct SuiteReport {
    Json json;
    int failures = 0;
};

namespace detail {

struct SuiteAccum {
    Json fails = Json::array();
    std::map<std::string, double> maxd;

    /// Records `defect` under `check`; a defect above `bound` is a failure.
    void record(int case_idx, const std::string& check, double defect, double bound) {
        double& m = maxd[check];
        m = std::max(m, defect);
        if (!(defect <= bound)) {
            Json f;
            f["case"] = case_idx;
            f["check"] = check;
            f["defect"] = defect;
            f["bound"] = bound;
            fails.push_back(f);
        }
    }

    SuiteReport finish(const std::string& name, int cases) {
        Json j;
        j["suite"] = name;
        j["cases"] = cases;
        j["failures"] = fails;
        Json md = Json::object();
        for (const auto& [k, v] : maxd) md[k] = v;
        j["max_defects"] = md;
        return {j, static_cast<int>(fails.size())};
    }
};

inline void project_to_simplex(Vec& x) {
    const long n = x.size();
    std::vector<double> u(x.data(), x.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double prefix = 0.0, theta = 0.0;
    for (long i = 0; i < n; ++i) { // the admissible set is a prefix; keep the last theta
        prefix += u[static_cast<std::size_t>(i)];
        double t = (prefix - 1.0) / static_cast<double>(i + 1);
        if (u[static_cast<std::size_t>(i)] > t) theta = t;
    }
    for (long i = 0; i < n; ++i) x(i) = std::max(0.0, x(i) - theta);
}

/// Independent distance-to-hull oracle: accelerated projected gradient on
/// the simplex from a few random starts (shares no code with the Wolfe
/// projector under test).
inline double fista_hull_distance(const Vec& p, const std::vector<Vec>& pts, Rng& rng) {
    const long n = static_cast<long>(pts.size());
    const long d = p.size();
    Mat V(d, n);
    for (long i = 0; i < n; ++i) V.col(i) = pts[static_cast<std::size_t>(i)];
    Mat Q = V.transpose() * V;
    Vec b = V.transpose() * p;
    Vec pw = Vec::Ones(n); // spectral-norm estimate by power iteration
    for (int it = 0; it < 30; ++it) {
        pw = Q * pw;
        double nn = pw.norm();
        if (nn < 1e-30) break;
        pw /= nn;
    }
    double L = 1.1 * (Q * pw).norm() + 1e-12;
    auto value = [&](const Vec& lam) { return 0.5 * lam.dot(Q * lam) - b.dot(lam); };
    double best = 1e300;
    for (int start = 0; start < 3; ++start) {
        Vec lam(n);
        for (long i = 0; i < n; ++i) lam(i) = rng.uniform(0, 1);
        lam /= lam.sum();
        Vec ylam = lam;
        double t = 1.0, fprev = value(lam);
        for (int it = 0; it < 20000; ++it) {
            Vec next = ylam - (Q * ylam - b) / L;
            project_to_simplex(next);
            double f = value(next);
            if (f > fprev) { // adaptive restart keeps the momentum honest
                ylam = lam;
                t = 1.0;
                continue;
            }
            double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
            ylam = next + ((t - 1.0) / tn) * (next - lam);
            Vec mapped = next - (Q * next - b) / L;
            project_to_simplex(mapped);
            lam = next;
            fprev = f;
            t = tn;
            if ((mapped - next).norm() < 1e-13) break;
        }
        best = std::min(best, (V * lam - p).norm());
    }
    return best;
}

inline double fd_defect(const FormalDifference& x, const FormalDifference& y) {
    return hausdorff(minkowski_sum(x.pos, y.neg), minkowski_sum(x.neg, y.pos));
}

inline SuiteReport suite_metric(std::uint64_t seed, int cases, double tol) {
    Rng rng(seed);
    SuiteAccum acc;
    for (int i = 0; i < cases; ++i) {
        int d = rng.uniform_int(1, 4);
        ConvexBody A = rng.body(d), B = rng.body(d), C = rng.body(d);
        acc.record(i, "identity", hausdorff(A, A), tol);
        acc.record(i, "symmetry", std::abs(hausdorff(A, B) - hausdorff(B, A)), tol);
        acc.record(i, "triangle",
                   std::max(0.0, hausdorff(A, C) - hausdorff(A, B) - hausdorff(B, C)), tol);
        Vec t = rng.point(d);
        acc.record(i, "translation_invariance",
                   std::abs(hausdorff(translate(A, t), translate(B, t)) - hausdorff(A, B)),
                   tol);
        Vec u = rng.unit(d);
        acc.record(i, "support_additivity",
                   std::abs(support(minkowski_sum(A, B), u).value - support(A, u).value -
                            support(B, u).value),
                   tol);

        ConvexBody P = rng.body(2), Q = rng.body(2);
        double realized = 0.0;
        for (const SupportSample s = support_realization(
                 {P, Q}, exact_direction_set_2d(P, Q));
             double v : s.values)
            realized = std::max(realized, std::abs(v));
        acc.record(i, "support_realization_2d", std::abs(hausdorff(P, Q) - realized), tol);

        Vec p = rng.point(d, 8.0);
        double oracle = fista_hull_distance(p, A.vertices, rng);
        acc.record(i, "projection_vs_oracle", std::abs(project_point(p, A).dist - oracle),
                   1e-6);
    }
    return acc.finish("metric", cases);
}

inline const CatalogGroup& pick_group(Rng& rng, int max_dim, int max_order) {
    std::vector<const CatalogGroup*> ok;
    for (const CatalogGroup& g : group_catalog())
        if (g.group.dim <= max_dim && g.group.order() <= max_order) ok.push_back(&g);
    return *ok[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(ok.size()) - 1))];
}

inline SuiteReport suite_group(std::uint64_t seed, int cases, double tol) {
    Rng rng(seed);
    SuiteAccum acc;
    for (int i = 0; i < cases; ++i) {
        const CatalogGroup& cg = pick_group(rng, 3, 256);
        const GroupElement& g =
            cg.group.elements[static_cast<std::size_t>(rng.uniform_int(0, cg.group.order() - 1))];
        ConvexBody A = rng.body(cg.group.dim), B = rng.body(cg.group.dim);
        ContinuityCheck c = continuity_check(A, g);
        acc.record(i, "continuity_bound", std::max(0.0, c.lhs - c.rhs), tol);
        acc.record(i, "isometry_invariance",
                   std::abs(hausdorff(act_body(g, A), act_body(g, B)) - hausdorff(A, B)), tol);
    }
    return acc.finish("group", cases);
}

inline SuiteReport suite_radstrom(std::uint64_t seed, int cases, double tol) {
    Rng rng(seed);
    SuiteAccum acc;
    for (int i = 0; i < cases; ++i) {
        int d = rng.uniform_int(1, 3);
        ConvexBody A = rng.body(d), B = rng.body(d);
        acc.record(i, "embedding_isometry",
                   std::abs(fd_norm(fd_sub(embed_j(A), embed_j(B))) - hausdorff(A, B)), tol);
        double t = rng.uniform(0, 3);
        acc.record(i, "homogeneity",
                   fd_defect(fd_scale(t, embed_j(A)), embed_j(scale_body(A, t))), tol);
        acc.record(i, "additivity",
                   fd_defect(fd_add(embed_j(A), embed_j(B)), embed_j(minkowski_sum(A, B))),
                   tol);
        const CatalogGroup& cg = pick_group(rng, d, 256);
        if (cg.group.dim == d) {
            const GroupElement& g = cg.group.elements[static_cast<std::size_t>(
                rng.uniform_int(0, cg.group.order() - 1))];
            FormalDifference x{A, B};
            acc.record(i, "action_isometry", std::abs(fd_norm(fd_act(g, x)) - fd_norm(x)),
                       tol);
            acc.record(i, "action_equivariance",
                       fd_defect(fd_act(g, embed_j(A)), embed_j(act_body(g, A))), tol);
        }
        if (i % 5 < 2) { // cancellation on 40% of cases
            ConvexBody C = rng.body(d);
            acc.record(i, "cancellation",
                       std::abs(hausdorff(minkowski_sum(A, C), minkowski_sum(B, C)) -
                                hausdorff(A, B)),
                       tol);
        }
    }
    return acc.finish("radstrom", cases);
}

/// Random free-orbit extension problem over a small planar or line group.
inline ExtensionProblem random_problem(Rng& rng) {
    for (;;) {
        const CatalogGroup& cg = pick_group(rng, 2, 8);
        GroupAction group = cg.group;
        const int d = group.dim;
        if (rng.uniform_int(0, 1) == 1) group = affine_conjugate(group, rng.point(d, 2.0));
        // two free orbits: the first is the subset, the second is extended over
        std::vector<Vec> reps = {rng.point(d, 4.0), rng.point(d, 4.0)};
        ConvexBody base = rng.body(d, 2, 3, 1.0);
        try {
            return detail::orbit_problem(group, reps, base.vertices);
        } catch (const error&) {
            // colliding orbit positions; redraw
        }
    }
}

inline SuiteReport suite_extension(std::uint64_t seed, int cases, double tol) {
    Rng rng(seed);
    SuiteAccum acc;
    for (int i = 0; i < cases; ++i) {
        ExtensionProblem p = random_problem(rng);
        std::vector<ConvexBody> FG = equivariant_average(p, dugundji_extend(p));
        ExtensionReport r = verify_extension(p, FG);
        acc.record(i, "restriction_defect", r.restriction_defect, tol);
        acc.record(i, "equivariance_defect", r.equivariance_defect, tol);
        ExtensionReport broken = verify_extension(p, break_equivariance(p, FG));
        acc.record(i, "negative_control_margin",
                   std::max(0.0, 1e-3 - broken.equivariance_defect), 0.0);
    }
    return acc.finish("extension", cases);
}

inline SuiteReport suite_cantor(std::uint64_t seed, int cases, double tol) {
    Rng rng(seed);
    SuiteAccum acc;
    (void)tol; // all scene quantities are exact
    for (int i = 0; i < cases; ++i) {
        const int k = 1 + i % 6;
        CantorScene s = build_cantor_scene(k);
        double unit_defect = 0.0, max_ratio = 0.0;
        for (const CantorRow& row : discontinuity_report(s)) {
            unit_defect = std::max(unit_defect, std::abs(row.dh - 1.0));
            max_ratio = std::max(max_ratio, row.ratio);
        }
        acc.record(i, "unit_distance", unit_defect, 0.0);
        acc.record(i, "max_ratio", std::abs(max_ratio - std::ldexp(1.0, k)), 0.0);

        IntervalBox P, Q;
        for (int c = 0; c < s.order; ++c) {
            double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
            P.lo.push_back(std::min(a, b));
            P.hi.push_back(std::max(a, b));
            a = rng.uniform(-2, 2);
            b = rng.uniform(-2, 2);
            Q.lo.push_back(std::min(a, b));
            Q.hi.push_back(std::max(a, b));
        }
        int g = rng.uniform_int(0, s.order - 1);
        acc.record(i, "permutation_isometry",
                   std::abs(box_hausdorff(s.apply(g, P), s.apply(g, Q)) - box_hausdorff(P, Q)),
                   0.0);
    }
    return acc.finish("cantor", cases);
}

inline SuiteReport suite_lift(std::uint64_t seed, int cases, double tol) {
    Rng rng(seed);
    SuiteAccum acc;
    for (int i = 0; i < cases; ++i) {
        const CatalogGroup& cg = pick_group(rng, 2, 8);
        const int d = cg.group.dim;
        LiftedSpace sp = make_lifted_space(affine_conjugate(cg.group, rng.point(d, 2.0)));
        const int m = sp.blocks();
        int h = rng.uniform_int(0, m - 1);
        const GroupElement& el = sp.base.elements[static_cast<std::size_t>(h)];

        Vec x = rng.point(d);
        acc.record(i, "point_equivariance",
                   (lift_point((el.linear * x + el.offset).eval(), sp) -
                    apply_lifted(sp, h, lift_point(x, sp)))
                       .norm(),
                   tol);

        ConvexBody A = rng.body(d, 3, 6), B = rng.body(d, 3, 6);
        ConvexBody LA = lift_body(A, sp), LB = lift_body(B, sp);
        acc.record(i, "body_equivariance",
                   lifted_hausdorff(sp, lift_body(act_body(el, A), sp),
                                    apply_lifted_body(sp, h, LA)),
                   tol);

        Vec w = rng.point(sp.lifted_dim, 4.0);
        acc.record(i, "exact_isometry",
                   std::abs(sup_block_norm(sp, apply_lifted(sp, h, w)) - sup_block_norm(sp, w)),
                   0.0);

        LiftedContinuityCheck c = lifted_continuity_check(sp, LA, h);
        acc.record(i, "post_lift_continuity", std::max(0.0, c.lhs - c.rhs), tol);
        acc.record(i, "post_lift_invariance",
                   std::abs(lifted_hausdorff(sp, apply_lifted_body(sp, h, LA),
                                             apply_lifted_body(sp, h, LB)) -
                            lifted_hausdorff(sp, LA, LB)),
                   tol);
    }
    return acc.finish("lift", cases);
}

} // namespace detail

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed, int cases,
                             double tol = kDefaultTol) {
    if (cases < 1) throw parameter_out_of_range("cases must be positive");
    if (name == "metric") return detail::suite_metric(seed, cases, tol);
    if (name == "group") return detail::suite_group(seed, cases, tol);
    if (name == "radstrom") return detail::suite_radstrom(seed, cases, tol);
    if (name == "extension") return detail::suite_extension(seed, cases, tol);
    if (name == "cantor") return detail::suite_cantor(seed, cases, tol);
    if (name == "lift") return detail::suite_lift(seed, cases, tol);
    if (name == "all") {
        Json j;
        j["suite"] = "all";
        j["cases"] = cases;
        Json fails = Json::array();
        Json md = Json::object();
        int total = 0;
        for (const char* sub : {"metric", "group", "radstrom", "extension", "cantor", "lift"}) {
            SuiteReport r = run_suite(sub, seed, cases, tol);
            for (Json f : r.json["failures"]) {
                f["suite"] = sub;
                fails.push_back(f);
            }
            md[sub] = r.json["max_defects"];
            total += r.failures;
        }
        j["failures"] = fails;
        j["max_defects"] = md;
        return {j, total};
    }
    throw unknown_suite(name);
}

} // namespace ccgeo
