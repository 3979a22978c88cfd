#pragma once

// Deterministic random generation for the verification suites.  Everything
// is derived from a single mt19937_64 stream with fixed mixing, so a (seed,
// call sequence) pair reproduces bit-identical values on every platform.

#include <cstdint>
#include <random>

#include "ccgeo/geometry.hpp"

namespace ccgeo {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    /// Uniform in [a, b); the (x >> 11 + 0.5) * 2^-53 map avoids the
    /// platform-dependent behavior of std::uniform_real_distribution.
    double uniform(double a, double b) {
        return a + (b - a) * (((eng() >> 11) + 0.5) * 0x1.0p-53);
    }

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Vec point(int d, double half = 5.0) {
        Vec p(d);
        for (int i = 0; i < d; ++i) p(i) = uniform(-half, half);
        return p;
    }

    Vec unit(int d) {
        for (;;) {
            Vec p = point(d, 1.0);
            double n = p.norm();
            if (n > 1e-3 && n <= 1.0) return p / n;
        }
    }

    /// Hull of N in [minv, maxv] uniform points in [-half, half]^d.
    ConvexBody body(int d, int minv = 4, int maxv = 20, double half = 5.0) {
        const int n = uniform_int(minv, maxv);
        std::vector<Vec> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pts.push_back(point(d, half));
        return hull(pts);
    }
};

} // namespace ccgeo
