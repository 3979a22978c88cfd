#pragma once

// Finite groups acting on R^d by linear isometries or affinities, their
// action on convex bodies, and the operator-norm continuity bound.

#include <utility>
#include <vector>

#include "ccgeo/geometry.hpp"

namespace ccgeo {

struct GroupElement {
    Mat linear;
    Vec offset;
    int index = 0;
};

enum class ActionKind { linear_isometric, affine };

struct GroupAction {
    int dim = 0;
    std::vector<GroupElement> elements;
    std::vector<std::vector<int>> cayley; // cayley[a][b] = index of elements[a] o elements[b]
    int identity = 0;
    std::vector<int> inverse;
    ActionKind kind = ActionKind::linear_isometric;

    int order() const { return static_cast<int>(elements.size()); }
    const GroupElement& e() const { return elements[static_cast<std::size_t>(identity)]; }
    const GroupElement& inv(int i) const {
        return elements[static_cast<std::size_t>(inverse[static_cast<std::size_t>(i)])];
    }
    int compose(int a, int b) const {
        return cayley[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
};

namespace detail {

inline constexpr double kGroupMatchTol = 1e-9;

inline bool element_close(const Mat& A, const Vec& a, const Mat& B, const Vec& b) {
    return (A - B).cwiseAbs().maxCoeff() < kGroupMatchTol &&
           (a.size() == 0 || (a - b).cwiseAbs().maxCoeff() < kGroupMatchTol);
}

} // namespace detail

/// Closes the generators under composition and builds the Cayley table.
/// Composition of (T, b) pairs is the usual affine one: a o b = (Ta Tb, Ta bb + ba).
inline GroupAction build_group(const std::vector<std::pair<Mat, Vec>>& generators,
                               int cap = 256) {
    if (generators.empty()) throw empty_input();
    const long d = generators.front().first.rows();
    for (const auto& [T, b] : generators)
        if (T.rows() != d || T.cols() != d || b.size() != d)
            throw dimension_mismatch(d, T.cols());

    std::vector<Mat> mats;
    std::vector<Vec> offs;
    auto find = [&](const Mat& T, const Vec& b) -> int {
        for (std::size_t i = 0; i < mats.size(); ++i)
            if (detail::element_close(mats[i], offs[i], T, b)) return static_cast<int>(i);
        return -1;
    };
    auto add = [&](const Mat& T, const Vec& b) -> int {
        int at = find(T, b);
        if (at >= 0) return at;
        if (static_cast<int>(mats.size()) >= cap) throw cap_exceeded(cap);
        mats.push_back(T);
        offs.push_back(b);
        return static_cast<int>(mats.size()) - 1;
    };

    add(Mat::Identity(d, d), Vec::Zero(d));
    for (const auto& [T, b] : generators) add(T, b);
    for (std::size_t i = 0; i < mats.size(); ++i) // closure (list grows while iterating)
        for (const auto& [T, b] : generators) add(mats[i] * T, mats[i] * b + offs[i]);

    GroupAction g;
    g.dim = static_cast<int>(d);
    const int n = static_cast<int>(mats.size());
    for (int i = 0; i < n; ++i)
        g.elements.push_back({mats[static_cast<std::size_t>(i)], offs[static_cast<std::size_t>(i)], i});

    g.cayley.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Mat T = mats[static_cast<std::size_t>(a)] * mats[static_cast<std::size_t>(b)];
            Vec o = mats[static_cast<std::size_t>(a)] * offs[static_cast<std::size_t>(b)] +
                    offs[static_cast<std::size_t>(a)];
            int at = find(T, o);
            if (at < 0) throw not_a_group("closure is not composition-stable");
            g.cayley[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = at;
        }

    g.identity = 0;
    g.inverse.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g.compose(a, b) == g.identity && g.compose(b, a) == g.identity) {
                g.inverse[static_cast<std::size_t>(a)] = b;
                break;
            }
        if (g.inverse[static_cast<std::size_t>(a)] < 0)
            throw not_a_group("element " + std::to_string(a) + " has no inverse");
    }

    if (n <= 64) { // associativity spot-check, exhaustive at small order
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (g.compose(g.compose(a, b), c) != g.compose(a, g.compose(b, c)))
                        throw not_a_group("cayley table is not associative");
    }

    g.kind = ActionKind::linear_isometric;
    for (int i = 0; i < n; ++i) {
        const Mat& T = mats[static_cast<std::size_t>(i)];
        bool orth = (T.transpose() * T - Mat::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-9;
        bool lin = offs[static_cast<std::size_t>(i)].cwiseAbs().maxCoeff() < 1e-9;
        if (!orth || !lin) {
            g.kind = ActionKind::affine;
            break;
        }
    }
    return g;
}

/// gA = { ga | a in A }.
inline ConvexBody act_body(const GroupElement& g, const ConvexBody& A) {
    if (g.linear.cols() != A.dim) throw dimension_mismatch(A.dim, g.linear.cols());
    return affine_image(A, g.linear, g.offset, 1.0);
}

/// ||1 - g||_* for the Euclidean norm: largest singular value of I - g.linear.
inline double operator_deviation(const GroupElement& g) {
    if (g.offset.size() > 0 && g.offset.cwiseAbs().maxCoeff() > 1e-9) throw affine_element();
    const long d = g.linear.rows();
    Eigen::JacobiSVD<Mat> svd(Mat::Identity(d, d) - g.linear);
    return svd.singularValues()(0);
}

struct ContinuityCheck {
    double lhs = 0;  // d_H(A, gA)
    double rhs = 0;  // ||1 - g||_* max_a ||a||
    bool ok = false;
};

/// d_H(A, gA) <= ||1 - g||_* max_{a in A} ||a||.
inline ContinuityCheck continuity_check(const ConvexBody& A, const GroupElement& g) {
    double m = 0.0;
    for (const Vec& v : A.vertices) m = std::max(m, v.norm());
    ContinuityCheck out;
    out.lhs = hausdorff(A, act_body(g, A));
    out.rhs = operator_deviation(g) * m;
    out.ok = out.lhs <= out.rhs + kDefaultTol;
    return out;
}

// ---- generator helpers ----

inline Mat rotation2(double theta) {
    Mat r(2, 2);
    r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return r;
}

inline Mat reflection2_x() {
    Mat r(2, 2);
    r << 1, 0, 0, -1;
    return r;
}

/// Rotation about coordinate axis `axis` in R^3.
inline Mat rotation3(int axis, double theta) {
    Mat r = Mat::Identity(3, 3);
    int i = (axis + 1) % 3, j = (axis + 2) % 3;
    r(i, i) = std::cos(theta);
    r(i, j) = -std::sin(theta);
    r(j, i) = std::sin(theta);
    r(j, j) = std::cos(theta);
    return r;
}

/// Conjugates a group by the translation to `center`: g'(x) = T(x - c) + c.
/// Preserves finiteness and turns a linear action into an affine one with
/// fixed point c.
inline GroupAction affine_conjugate(const GroupAction& g, const Vec& center) {
    std::vector<std::pair<Mat, Vec>> gens;
    for (const GroupElement& el : g.elements)
        gens.emplace_back(el.linear, el.offset + center - el.linear * center);
    return build_group(gens, std::max(256, 4 * g.order()));
}

} // namespace ccgeo
