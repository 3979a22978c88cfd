#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ccgeo/geometry.hpp"

using namespace ccgeo;

namespace {

Vec v2(double x, double y) {
    Vec v(2);
    v << x, y;
    return v;
}

Vec v3(double x, double y, double z) {
    Vec v(3);
    v << x, y, z;
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
    Vec unit(int d) {
        Vec u(d);
        do {
            for (int i = 0; i < d; ++i) {
                double u1 = uniform(0, 1), u2 = uniform(0, 1);
                u(i) = std::sqrt(-2.0 * std::log(u1 + 1e-300)) * std::cos(6.283185307179586 * u2);
            }
        } while (u.norm() < 1e-8);
        return u / u.norm();
    }
    ConvexBody body(int d, int minv, int maxv, double half = 5.0) {
        int n = minv + static_cast<int>(eng() % static_cast<std::uint64_t>(maxv - minv + 1));
        std::vector<Vec> pts;
        for (int i = 0; i < n; ++i) pts.push_back(point(d, half));
        return hull(pts);
    }
};

ConvexBody box2(double half) {
    return hull({v2(-half, -half), v2(half, -half), v2(half, half), v2(-half, half)});
}

// independent 2D extreme-point oracle: p is in the convex hull of pts iff the
// directions pts[i]-p leave no angular gap of size > pi around p
bool inside_2d_oracle(const Vec& p, const std::vector<Vec>& pts) {
    std::vector<double> ang;
    for (const Vec& q : pts) {
        Vec d = q - p;
        if (d.norm() <= 1e-9) return true; // coincides with a hull point
        ang.push_back(std::atan2(d(1), d(0)));
    }
    std::sort(ang.begin(), ang.end());
    double maxgap = ang.front() + 2 * M_PI - ang.back();
    for (std::size_t i = 1; i < ang.size(); ++i) maxgap = std::max(maxgap, ang[i] - ang[i - 1]);
    return maxgap < M_PI - 1e-12;
}

} // namespace

TEST_CASE("hull drops interior points") {
    ConvexBody b = hull({v2(0, 0), v2(1, 0), v2(0, 1), v2(0.25, 0.25)});
    CHECK(b.size() == 3);
    for (const Vec& v : b.vertices) CHECK((v - v2(0.25, 0.25)).norm() > 1e-6);
}

TEST_CASE("hull of a singleton") {
    ConvexBody b = hull({v2(0, 0)});
    CHECK(b.size() == 1);
    CHECK(b.vertices[0].norm() == 0.0);
}

TEST_CASE("hull errors") {
    CHECK_THROWS_AS(hull({}), empty_input);
    CHECK_THROWS_AS(hull({v2(0, 0), v3(0, 0, 0)}), dimension_mismatch);
}

TEST_CASE("hull vertex count matches the angular-gap extreme-point oracle") {
    TestRng rng(42);
    for (int rep = 0; rep < 8; ++rep) {
        std::vector<Vec> pts;
        for (int i = 0; i < 50; ++i) pts.push_back(rng.point(2, 0.5) + v2(0.5, 0.5));
        ConvexBody b = hull(pts);
        int extremes = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<Vec> others;
            for (std::size_t k = 0; k < pts.size(); ++k)
                if (k != i) others.push_back(pts[k]);
            if (!inside_2d_oracle(pts[i], others)) ++extremes;
        }
        CHECK(static_cast<int>(b.size()) == extremes);
    }
}

TEST_CASE("hull in R^3 matches brute-force membership") {
    TestRng rng(7);
    for (int rep = 0; rep < 4; ++rep) {
        std::vector<Vec> pts;
        for (int i = 0; i < 30; ++i) pts.push_back(rng.point(3, 4.0));
        ConvexBody b = hull(pts);
        // every input point must lie inside the produced hull
        for (const Vec& p : pts)
            CHECK(detail::dist_to_hull(p, b.vertices) <= 1e-8);
        // every produced vertex must be irredundant
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::vector<Vec> others;
            for (std::size_t k = 0; k < b.size(); ++k)
                if (k != i) others.push_back(b.vertices[k]);
            CHECK(detail::dist_to_hull(b.vertices[i], others) > 1e-9);
        }
    }
}

TEST_CASE("support on the square") {
    ConvexBody sq = box2(1.0);
    SupportEval s = support(sq, v2(1, 0));
    CHECK(s.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sq.vertices[s.witness](0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(support(sq, v2(2, 0)), non_unit_direction);
}

TEST_CASE("support of a singleton") {
    ConvexBody p = singleton(v2(3, -4));
    Vec u = v2(0.6, 0.8);
    CHECK(support(p, u).value == doctest::Approx(3 * 0.6 - 4 * 0.8));
}

TEST_CASE("support equals exhaustive vertex scan") {
    TestRng rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        ConvexBody b = rng.body(3, 4, 12);
        Vec u = rng.unit(3);
        double brute = -1e300;
        for (const Vec& v : b.vertices) brute = std::max(brute, v.dot(u));
        CHECK(support(b, u).value == doctest::Approx(brute).epsilon(1e-12));
    }
}

TEST_CASE("minkowski sum of orthogonal segments is the square") {
    ConvexBody a = hull({v2(0, 0), v2(1, 0)});
    ConvexBody b = hull({v2(0, 0), v2(0, 1)});
    ConvexBody s = minkowski_sum(a, b);
    CHECK(s.size() == 4);
    CHECK(bodies_equal(s, hull({v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)})));
}

TEST_CASE("A + {0} = A") {
    TestRng rng(3);
    ConvexBody a = rng.body(2, 4, 8);
    ConvexBody z = singleton(Vec::Zero(2));
    CHECK(bodies_equal(minkowski_sum(a, z), a));
}

TEST_CASE("support additivity of the minkowski sum in R^3") {
    TestRng rng(5);
    ConvexBody a = rng.body(3, 4, 10);
    ConvexBody b = rng.body(3, 4, 10);
    ConvexBody s = minkowski_sum(a, b);
    for (int i = 0; i < 1000; ++i) {
        Vec u = rng.unit(3);
        double lhs = support(s, u).value;
        double rhs = support(a, u).value + support(b, u).value;
        CHECK(std::abs(lhs - rhs) <= 1e-9);
    }
}

TEST_CASE("affine image identities") {
    TestRng rng(17);
    ConvexBody a = rng.body(2, 4, 8);
    CHECK(bodies_equal(affine_image(a, Mat::Identity(2, 2), Vec::Zero(2), 1.0), a));
    ConvexBody zero = affine_image(a, Mat::Identity(2, 2), Vec::Zero(2), 0.0);
    CHECK(zero.size() == 1);
    CHECK(zero.vertices[0].norm() <= 1e-12);
}

TEST_CASE("doubling the square") {
    ConvexBody sq = box2(1.0);
    ConvexBody dbl = scale_body(sq, 2.0);
    CHECK(bodies_equal(dbl, box2(2.0)));
    // sup of support differences over sampled directions is a lower bound and
    // here equals sqrt(2) at the diagonal; hausdorff must agree
    double h = hausdorff(dbl, sq);
    CHECK(h == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("projection: interior point and hand geometry") {
    ConvexBody sq = box2(1.0);
    Projection pr = project_point(v2(0.25, -0.5), sq);
    CHECK(pr.dist <= 1e-10);

    ConvexBody seg = hull({v2(0, 0), v2(1, 0)});
    Projection pr2 = project_point(v2(2, 1), seg);
    CHECK(pr2.dist == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK((pr2.point - v2(1, 0)).norm() <= 1e-10);
}

TEST_CASE("projection agrees with a sampling oracle in R^3") {
    TestRng rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        ConvexBody a = rng.body(3, 4, 10);
        Vec p = rng.point(3, 8.0);
        Projection pr = project_point(p, a);

        // random-search oracle over convex combinations, shrinking steps
        const std::size_t n = a.size();
        std::vector<double> lam(n, 1.0 / static_cast<double>(n)), cand(n);
        auto eval = [&](const std::vector<double>& l) {
            Vec x = Vec::Zero(3);
            for (std::size_t i = 0; i < n; ++i) x += l[i] * a.vertices[i];
            return (x - p).norm();
        };
        double best = eval(lam);
        for (int i = 0; i < 20000; ++i) { // coarse: random Dirichlet-ish draws
            double tot = 0;
            for (std::size_t k = 0; k < n; ++k) {
                cand[k] = -std::log(rng.uniform(0, 1) + 1e-300);
                tot += cand[k];
            }
            for (std::size_t k = 0; k < n; ++k) cand[k] /= tot;
            double d = eval(cand);
            if (d < best) { best = d; lam = cand; }
        }
        for (double sigma = 0.5; sigma > 1e-8; sigma *= 0.5) { // local refinement
            for (int i = 0; i < 400; ++i) {
                double tot = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    cand[k] = std::max(0.0, lam[k] + sigma * (rng.uniform(0, 1) - 0.5));
                    tot += cand[k];
                }
                if (tot <= 0) continue;
                for (std::size_t k = 0; k < n; ++k) cand[k] /= tot;
                double d = eval(cand);
                if (d < best) { best = d; lam = cand; }
            }
        }
        CHECK(pr.dist <= best + 1e-12); // oracle is an upper bound
        CHECK(best - pr.dist <= 1e-6);  // and a tight one
    }
}

TEST_CASE("hausdorff basics") {
    TestRng rng(31);
    ConvexBody a = rng.body(2, 4, 10);
    CHECK(hausdorff(a, a) == 0.0);
    CHECK(hausdorff(box2(2.0), box2(1.0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("hausdorff dominates the support-sampling lower bound") {
    TestRng rng(37);
    for (int rep = 0; rep < 5; ++rep) {
        ConvexBody a = rng.body(3, 4, 10);
        ConvexBody b = rng.body(3, 4, 10);
        double h = hausdorff(a, b);
        double lb = 0.0;
        for (int i = 0; i < 100000; ++i) {
            Vec u = rng.unit(3);
            lb = std::max(lb, std::abs(support(a, u).value - support(b, u).value));
        }
        CHECK(h >= lb - 1e-9);
    }
}

TEST_CASE("hausdorff metric axioms on random triples") {
    TestRng rng(41);
    for (int rep = 0; rep < 30; ++rep) {
        int d = 1 + static_cast<int>(rng.eng() % 3);
        ConvexBody a = rng.body(d, 4, 8);
        ConvexBody b = rng.body(d, 4, 8);
        ConvexBody c = rng.body(d, 4, 8);
        double ab = hausdorff(a, b), ba = hausdorff(b, a);
        double ac = hausdorff(a, c), bc = hausdorff(b, c);
        CHECK(std::abs(ab - ba) <= 1e-9);
        CHECK(ac <= ab + bc + 1e-9);
        if (ab <= 1e-9) CHECK(bodies_equal(a, b));
    }
}

TEST_CASE("translation invariance of hausdorff") {
    TestRng rng(43);
    for (int rep = 0; rep < 15; ++rep) {
        int d = 1 + static_cast<int>(rng.eng() % 3);
        ConvexBody a = rng.body(d, 4, 8);
        ConvexBody b = rng.body(d, 4, 8);
        ConvexBody c = rng.body(d, 3, 6);
        double base = hausdorff(a, b);
        double shifted = hausdorff(minkowski_sum(a, c), minkowski_sum(b, c));
        CHECK(std::abs(base - shifted) <= 1e-9);
    }
}

TEST_CASE("hausdorff scaling") {
    TestRng rng(47);
    for (int rep = 0; rep < 15; ++rep) {
        ConvexBody a = rng.body(2, 4, 8);
        ConvexBody b = rng.body(2, 4, 8);
        double t = rng.uniform(0, 3);
        CHECK(std::abs(hausdorff(scale_body(a, t), scale_body(b, t)) - t * hausdorff(a, b)) <=
              1e-9);
    }
}

TEST_CASE("family_mix endpoints and closure") {
    TestRng rng(53);
    ConvexBody a = rng.body(2, 4, 8);
    ConvexBody b = rng.body(2, 4, 8);
    CHECK(bodies_equal(family_mix(a, b, 1.0), a));
    CHECK(bodies_equal(family_mix(a, b, 0.0), b));
    CHECK_THROWS_AS(family_mix(a, b, 1.5), parameter_out_of_range);

    // centrally symmetric family is closed under mixing
    ConvexBody sa = minkowski_sum(a, scale_body(a, -1.0));
    ConvexBody sb = minkowski_sum(b, scale_body(b, -1.0));
    REQUIRE(is_centrally_symmetric(sa));
    REQUIRE(is_centrally_symmetric(sb));
    CHECK(is_centrally_symmetric(family_mix(sa, sb, 0.3)));

    // full-dimensional family is closed under mixing
    REQUIRE(is_full_dimensional(a));
    REQUIRE(is_full_dimensional(b));
    CHECK(is_full_dimensional(family_mix(a, b, 0.7)));

    // WITHIN_BODY family is closed under mixing
    ConvexBody m = box2(6.0);
    FamilyTag tag{FamilyTag::WITHIN_BODY, m};
    REQUIRE(tag.contains(a));
    REQUIRE(tag.contains(b));
    CHECK(tag.contains(family_mix(a, b, 0.4)));
}

TEST_CASE("hyperspace closedness surrogate") {
    // if A has a vertex at distance eps from M, A is at least eps away from
    // anything contained in M
    ConvexBody m = box2(1.0);
    TestRng rng(59);
    for (int rep = 0; rep < 20; ++rep) {
        ConvexBody b = rng.body(2, 3, 6, 0.9); // inside M
        REQUIRE(within_body(b, m));
        Vec far = v2(1.0 + rng.uniform(0.1, 2.0), rng.uniform(-1, 1));
        double eps = project_point(far, m).dist;
        ConvexBody a = hull({far, rng.point(2, 0.5)});
        CHECK(hausdorff(a, b) >= eps - 1e-9);
    }
}

TEST_CASE("degenerate bodies are first-class") {
    ConvexBody seg = hull({v3(0, 0, 0), v3(1, 1, 1)});
    CHECK(seg.size() == 2);
    CHECK_FALSE(is_full_dimensional(seg));
    CHECK(affine_rank(seg) == 1);
    CHECK(hausdorff(seg, seg) == 0.0);
    ConvexBody pt = singleton(v3(1, 2, 3));
    CHECK(hausdorff(pt, seg) > 0.0);
}
