#pragma once

// Fixed catalogs used by the verification suites: a list of finite isometry
// groups (cyclic and dihedral in the plane, sign/signed-permutation and
// rotation groups up to R^3) and a list of equivariant extension problems
// built from free orbits of those groups.

#include <string>
#include <utility>
#include <vector>

#include "ccgeo/extension.hpp"
#include "ccgeo/rng.hpp"

namespace ccgeo {

struct CatalogGroup {
    std::string name;
    std::vector<std::pair<Mat, Vec>> generators;
    GroupAction group;
};

namespace detail {

inline Mat diag2(double a, double b) {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

inline Mat swap3(int i, int j) {
    Mat m = Mat::Identity(3, 3);
    m(i, i) = m(j, j) = 0;
    m(i, j) = m(j, i) = 1;
    return m;
}

inline Mat cycle3() { // (x,y,z) -> (z,x,y), a rotation about (1,1,1)
    Mat m = Mat::Zero(3, 3);
    m(0, 2) = m(1, 0) = m(2, 1) = 1;
    return m;
}

inline Mat diag3(double a, double b, double c) {
    Mat m = Mat::Zero(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
}

} // namespace detail

/// Linear isometric groups the random suites draw from.
inline const std::vector<CatalogGroup>& group_catalog() {
    static const std::vector<CatalogGroup> cat = [] {
        std::vector<CatalogGroup> out;
        auto add = [&out](const std::string& name,
                          std::vector<std::pair<Mat, Vec>> gens) {
            GroupAction g = build_group(gens, 256);
            out.push_back({name, std::move(gens), std::move(g)});
        };
        const Vec z2 = Vec::Zero(2);
        const Vec z3 = Vec::Zero(3);

        add("sign_1d", {{-Mat::Identity(1, 1), Vec::Zero(1)}});
        for (int n : {2, 3, 4, 6, 8, 12})
            add("cyclic_" + std::to_string(n), {{rotation2(2 * M_PI / n), z2}});
        for (int n : {3, 4, 6, 12})
            add("dihedral_" + std::to_string(n),
                {{rotation2(2 * M_PI / n), z2}, {reflection2_x(), z2}});
        add("klein_2d", {{detail::diag2(-1, 1), z2}, {detail::diag2(1, -1), z2}});
        add("hyperoctahedral_2",
            {{rotation2(M_PI / 2), z2}, {reflection2_x(), z2}});
        add("hyperoctahedral_3",
            {{detail::swap3(0, 1), z3}, {detail::swap3(1, 2), z3},
             {detail::diag3(-1, 1, 1), z3}});
        add("cube_rotation",
            {{rotation3(2, M_PI / 2), z3}, {rotation3(0, M_PI / 2), z3}});
        add("tetrahedral", {{detail::cycle3(), z3}, {detail::diag3(-1, -1, 1), z3}});
        return out;
    }();
    return cat;
}

struct CatalogProblem {
    std::string name;
    std::vector<std::pair<Mat, Vec>> generators;
    ExtensionProblem problem;
};

namespace detail {

/// Z = (free orbits of `reps`) with the Euclidean metric on orbit positions;
/// point (g, i) gets id i*|G| + g.  The subset is orbit 0 and f transports
/// `base` along it: f(g . rep_0) = g(base).  `base` empty means singleton
/// values at the orbit positions themselves.
inline ExtensionProblem orbit_problem(const GroupAction& group, const std::vector<Vec>& reps,
                                      const std::vector<Vec>& base) {
    const int m = group.order();
    const int n = m * static_cast<int>(reps.size());
    std::vector<Vec> pos(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (int g = 0; g < m; ++g) {
            const GroupElement& el = group.elements[static_cast<std::size_t>(g)];
            pos[i * static_cast<std::size_t>(m) + static_cast<std::size_t>(g)] =
                el.linear * reps[i] + el.offset;
        }

    Mat metric = Mat::Zero(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            metric(a, b) = (pos[static_cast<std::size_t>(a)] - pos[static_cast<std::size_t>(b)]).norm();

    std::vector<std::vector<int>> perm(static_cast<std::size_t>(m),
                                       std::vector<int>(static_cast<std::size_t>(n)));
    for (int h = 0; h < m; ++h)
        for (std::size_t i = 0; i < reps.size(); ++i)
            for (int g = 0; g < m; ++g)
                perm[static_cast<std::size_t>(h)][i * static_cast<std::size_t>(m) +
                                                  static_cast<std::size_t>(g)] =
                    static_cast<int>(i) * m + group.compose(h, g);

    ExtensionProblem p;
    p.space = build_gspace(metric, perm, group);
    for (int g = 0; g < m; ++g) p.subset.push_back(g);
    for (int g = 0; g < m; ++g) {
        const GroupElement& el = group.elements[static_cast<std::size_t>(g)];
        ConvexBody value = base.empty() ? singleton(pos[static_cast<std::size_t>(g)])
                                        : act_body(el, hull(base));
        p.f[g] = value;
    }
    validate_problem(p);
    return p;
}

} // namespace detail

/// Fixed extension problems: free orbits with transported polytope values in
/// the plane and on the line, singleton values in R^3 where Minkowski
/// averages of large vertex sets would dominate the runtime.
inline const std::vector<CatalogProblem>& extension_catalog() {
    static const std::vector<CatalogProblem> cat = [] {
        std::vector<CatalogProblem> out;
        auto find = [](const std::string& name) -> const CatalogGroup& {
            for (const CatalogGroup& g : group_catalog())
                if (g.name == name) return g;
            throw parameter_out_of_range("catalog group " + name);
        };
        auto add = [&out](const std::string& name, const CatalogGroup& cg, const Vec& center,
                          const std::vector<Vec>& reps, const std::vector<Vec>& base) {
            std::vector<std::pair<Mat, Vec>> gens = cg.generators;
            GroupAction group = cg.group;
            if (center.size() > 0) {
                for (auto& [T, b] : gens) b = b + center - T * center;
                group = build_group(gens, 256);
            }
            out.push_back({name, gens, detail::orbit_problem(group, reps, base)});
        };
        auto v1 = [](double x) { Vec v(1); v << x; return v; };
        auto v2 = [](double x, double y) { Vec v(2); v << x, y; return v; };
        auto v3 = [](double x, double y, double z) { Vec v(3); v << x, y, z; return v; };
        const Vec none;

        add("z2_sign_line", find("sign_1d"), none, {v1(1.3), v1(2.6), v1(0.4)},
            {v1(-0.5), v1(0.8)});
        add("z2_sign_line_affine", find("sign_1d"), v1(0.7), {v1(1.9), v1(3.1)},
            {v1(-0.4), v1(0.6)});
        add("c3_plane", find("cyclic_3"), none, {v2(2.0, 0.3), v2(0.7, -1.4)},
            {v2(0, 0), v2(1, 0.2), v2(0.3, 0.9)});
        add("c4_plane", find("cyclic_4"), none, {v2(1.7, 0.5), v2(-0.6, 2.2)},
            {v2(-0.4, -0.1), v2(0.8, 0), v2(0.2, 0.7)});
        add("c6_plane_affine", find("cyclic_6"), v2(0.4, -0.3), {v2(2.4, 0.6), v2(1.1, -1.8)},
            {v2(0, -0.3), v2(0.9, 0.1)});
        add("d4_plane", find("dihedral_4"), none, {v2(1.9, 0.7), v2(0.8, 2.6)},
            {v2(0.1, 0.2), v2(0.7, -0.3)});
        add("d4_plane_affine", find("dihedral_4"), v2(-0.5, 0.8), {v2(2.2, 0.9), v2(3.1, -0.4)},
            {v2(-0.2, 0.4), v2(0.5, 0)});
        add("d6_plane", find("dihedral_6"), none, {v2(2.3, 0.4), v2(1.2, 1.9)},
            {v2(0, 0), v2(0.6, 0.25)});
        add("klein_plane", find("klein_2d"), none,
            {v2(1.4, 0.6), v2(2.7, 1.9), v2(0.5, 2.4)},
            {v2(-0.3, 0.1), v2(0.5, -0.2), v2(0.1, 0.6)});
        add("tetra_space", find("tetrahedral"), none, {v3(1.7, 0.6, 0.3), v3(0.4, 2.1, 1.1)}, {});
        add("cube_space", find("cube_rotation"), none, {v3(1.9, 0.7, 0.4), v3(0.5, 1.3, 2.2)},
            {});
        return out;
    }();
    return cat;
}

/// Negative control: translate the extension's value at the first point off
/// the subset.  The result still restricts to f but is no longer
/// equivariant, so verify_extension must report a defect of order eps.
inline std::vector<ConvexBody> break_equivariance(const ExtensionProblem& p,
                                                  std::vector<ConvexBody> FG,
                                                  double eps = 0.3) {
    std::vector<char> in(static_cast<std::size_t>(p.space.n), 0);
    for (int a : p.subset) in[static_cast<std::size_t>(a)] = 1;
    for (int z = 0; z < p.space.n; ++z)
        if (!in[static_cast<std::size_t>(z)]) {
            Vec shift = Vec::Zero(p.space.group.dim);
            shift(0) = eps;
            FG[static_cast<std::size_t>(z)] = translate(FG[static_cast<std::size_t>(z)], shift);
            return FG;
        }
    throw empty_subset();
}

} // namespace ccgeo
