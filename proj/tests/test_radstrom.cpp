#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ccgeo/radstrom.hpp"

using namespace ccgeo;

namespace {

Vec v1(double x) {
    Vec v(1);
    v << x;
    return v;
}

Vec v2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

struct TestRng {
    std::mt19937_64 eng;
    explicit TestRng(std::uint64_t seed) : eng(seed) {}
    double uniform(double a, double b) {
        return a + (b - a) * (((eng() >> 11) + 0.5) * 0x1.0p-53);
    }
    Vec point(int d, double half) {
        Vec p(d);
        for (int i = 0; i < d; ++i) p(i) = uniform(-half, half);
        return p;
    }
    ConvexBody body(int d, int minv, int maxv, double half = 5.0) {
        int n = minv + static_cast<int>(eng() % static_cast<std::uint64_t>(maxv - minv + 1));
        std::vector<Vec> pts;
        for (int i = 0; i < n; ++i) pts.push_back(point(d, half));
        return hull(pts);
    }
    FormalDifference fd(int d) { return {body(d, 3, 6), body(d, 3, 6)}; }
};

ConvexBody interval(double a, double b) { return hull({v1(a), v1(b)}); }

} // namespace

TEST_CASE("zero class and cancellation of a common summand") {
    TestRng rng(1);
    ConvexBody a = rng.body(2, 4, 8);
    CHECK(fd_equal({a, a}, fd_zero(2)));

    for (int rep = 0; rep < 10; ++rep) {
        ConvexBody A = rng.body(2, 3, 6);
        ConvexBody C = rng.body(2, 3, 6);
        FormalDifference lhs{minkowski_sum(A, C), C};
        FormalDifference rhs{A, singleton(Vec::Zero(2))};
        CHECK(fd_equal(lhs, rhs));
    }
}

TEST_CASE("distinct intervals give distinct classes") {
    FormalDifference x{interval(0, 1), singleton(v1(0))};
    FormalDifference y{interval(0, 2), singleton(v1(0))};
    CHECK_FALSE(fd_equal(x, y));
    CHECK(fd_norm(fd_sub(x, y)) == doctest::Approx(1.0));
}

TEST_CASE("fd_add: identity, inverse, associativity") {
    TestRng rng(2);
    for (int rep = 0; rep < 8; ++rep) {
        FormalDifference x = rng.fd(2);
        CHECK(fd_equal(fd_add(x, fd_zero(2)), x));
        CHECK(fd_equal(fd_add(x, FormalDifference{x.neg, x.pos}), fd_zero(2)));
    }
    for (int rep = 0; rep < 5; ++rep) {
        FormalDifference x = rng.fd(2), y = rng.fd(2), z = rng.fd(2);
        CHECK(fd_equal(fd_add(fd_add(x, y), z), fd_add(x, fd_add(y, z))));
        CHECK(fd_equal(fd_add(x, y), fd_add(y, x)));
    }
}

TEST_CASE("fd_add is well-defined on classes") {
    TestRng rng(3);
    for (int rep = 0; rep < 6; ++rep) {
        FormalDifference x = rng.fd(2), y = rng.fd(2);
        ConvexBody c = rng.body(2, 3, 5);
        FormalDifference x2{minkowski_sum(x.pos, c), minkowski_sum(x.neg, c)};
        REQUIRE(fd_equal(x, x2));
        CHECK(fd_equal(fd_add(x, y), fd_add(x2, y)));
    }
}

TEST_CASE("fd_scale cases and composition") {
    TestRng rng(4);
    FormalDifference x = rng.fd(2);
    CHECK(fd_equal(fd_scale(1.0, x), x));
    CHECK(fd_equal(fd_scale(-1.0, x), FormalDifference{x.neg, x.pos}));
    CHECK(fd_norm(fd_scale(0.0, x)) <= 1e-12);
    for (int rep = 0; rep < 10; ++rep) {
        double s = rng.uniform(-2, 2), t = rng.uniform(-2, 2);
        CHECK(fd_equal(fd_scale(s, fd_scale(t, x)), fd_scale(s * t, x), 1e-8));
    }
}

TEST_CASE("distributivity on same-sign scalars") {
    TestRng rng(5);
    FormalDifference x = rng.fd(2), y = rng.fd(2);
    for (int rep = 0; rep < 6; ++rep) {
        double t = rng.uniform(0, 2);
        CHECK(fd_equal(fd_scale(t, fd_add(x, y)), fd_add(fd_scale(t, x), fd_scale(t, y)), 1e-8));
        double s = rng.uniform(0, 2);
        CHECK(fd_equal(fd_scale(s + t, x), fd_add(fd_scale(s, x), fd_scale(t, x)), 1e-8));
    }
}

TEST_CASE("norm laws") {
    TestRng rng(6);
    for (int rep = 0; rep < 8; ++rep) {
        FormalDifference x = rng.fd(2), y = rng.fd(2), z = rng.fd(2);
        double t = rng.uniform(-2, 2);
        CHECK(std::abs(fd_norm(fd_scale(t, x)) - std::abs(t) * fd_norm(x)) <= 1e-8);
        CHECK(fd_norm(fd_sub(x, z)) <=
              fd_norm(fd_sub(x, y)) + fd_norm(fd_sub(y, z)) + 1e-9);
    }
    CHECK(fd_norm(fd_zero(2)) == 0.0);
}

TEST_CASE("embedding j: norm, isometry, additivity, homogeneity") {
    TestRng rng(7);
    for (int rep = 0; rep < 8; ++rep) {
        ConvexBody a = rng.body(2, 4, 8);
        ConvexBody b = rng.body(2, 4, 8);
        double maxnorm = 0;
        for (const Vec& v : a.vertices) maxnorm = std::max(maxnorm, v.norm());
        CHECK(fd_norm(embed_j(a)) == doctest::Approx(maxnorm).epsilon(1e-12));
        CHECK(std::abs(fd_norm(fd_sub(embed_j(a), embed_j(b))) - hausdorff(a, b)) <= 1e-9);
        CHECK(fd_equal(embed_j(minkowski_sum(a, b)), fd_add(embed_j(a), embed_j(b))));
        double t = rng.uniform(0, 2);
        CHECK(fd_equal(embed_j(scale_body(a, t)), fd_scale(t, embed_j(a)), 1e-8));
    }
}

TEST_CASE("group action on H(K): isometric, equivariant, intertwines j") {
    TestRng rng(8);
    GroupAction g = build_group({{rotation2(M_PI / 3), Vec::Zero(2)},
                                 {reflection2_x(), Vec::Zero(2)}});
    for (int rep = 0; rep < 10; ++rep) {
        const GroupElement& el = g.elements[rng.eng() % static_cast<std::uint64_t>(g.order())];
        FormalDifference x = rng.fd(2);
        CHECK(fd_equal(fd_act(g.e(), x), x));
        CHECK(std::abs(fd_norm(fd_act(el, x)) - fd_norm(x)) <= 1e-9);
        ConvexBody a = rng.body(2, 4, 8);
        CHECK(fd_equal(embed_j(act_body(el, a)), fd_act(el, embed_j(a))));
        FormalDifference y = rng.fd(2);
        CHECK(fd_equal(fd_act(el, fd_add(x, y)), fd_add(fd_act(el, x), fd_act(el, y))));
        double t = rng.uniform(-2, 2);
        CHECK(fd_equal(fd_act(el, fd_scale(t, x)), fd_scale(t, fd_act(el, x)), 1e-8));
    }
    Vec off(2);
    off << 1, 0;
    GroupElement affine{Mat::Identity(2, 2), off, 0};
    CHECK_THROWS_AS(fd_act(affine, fd_zero(2)), affine_element);
}

TEST_CASE("radstrom cancellation: A+C = B+C implies A = B") {
    TestRng rng(9);
    for (int rep = 0; rep < 15; ++rep) {
        ConvexBody a = rng.body(2, 3, 6);
        ConvexBody b = rng.body(2, 3, 6);
        ConvexBody c = rng.body(2, 3, 6);
        FormalDifference x{minkowski_sum(a, c), singleton(Vec::Zero(2))};
        FormalDifference y{minkowski_sum(b, c), singleton(Vec::Zero(2))};
        bool sums_equal = fd_equal(x, y);
        bool bodies_same = hausdorff(a, b) <= 1e-9;
        CHECK(sums_equal == bodies_same);
        // same body given by a redundant representative cancels exactly
        std::vector<Vec> fat = a.vertices;
        fat.push_back(0.5 * (a.vertices[0] + a.vertices[1]));
        ConvexBody a2 = hull(fat);
        CHECK(fd_equal(FormalDifference{minkowski_sum(a2, c), singleton(Vec::Zero(2))}, x));
    }
}

TEST_CASE("support_realization: zeros, cube, exact planar agreement") {
    TestRng rng(10);
    ConvexBody a = rng.body(2, 4, 8);
    std::vector<Vec> dirs;
    for (int i = 0; i < 64; ++i) dirs.push_back(v2(std::cos(i * M_PI / 32), std::sin(i * M_PI / 32)));
    SupportSample zero = support_realization({a, a}, dirs);
    for (double v : zero.values) CHECK(std::abs(v) <= 1e-12);

    // j of the cube realizes the l1 norm of the direction
    ConvexBody cube = hull({v2(-1, -1), v2(1, -1), v2(1, 1), v2(-1, 1)});
    SupportSample cs = support_realization(embed_j(cube), dirs);
    for (std::size_t i = 0; i < dirs.size(); ++i)
        CHECK(cs.values[i] == doctest::Approx(dirs[i].cwiseAbs().sum()).epsilon(1e-12));

    // merged-fan directions attain fd_norm exactly in the plane
    for (int rep = 0; rep < 20; ++rep) {
        FormalDifference x = rng.fd(2);
        SupportSample s = support_realization(x, exact_direction_set_2d(x.pos, x.neg));
        double m = 0;
        for (double v : s.values) m = std::max(m, std::abs(v));
        double n = fd_norm(x);
        CHECK(m <= n + 1e-9);
        CHECK(std::abs(m - n) <= 1e-9);
    }
}
