#pragma once

// Truncated Cantor groups Z_2^k acting on R^(2^k) with the sup norm by
// coordinate permutations, the pinned box A with d_H(A, yA) = 1, and the
// blow-up of the continuity modulus as k grows.  All quantities are exact
// closed forms on axis boxes; no polytope machinery at dimension 2^k.

#include <cmath>
#include <vector>

#include "ccgeo/errors.hpp"

namespace ccgeo {

/// Axis-aligned product of closed intervals.
struct IntervalBox {
    std::vector<double> lo, hi;

    std::size_t dim() const { return lo.size(); }
};

/// Exact Hausdorff distance between boxes under the sup norm:
/// projection is coordinatewise, so the distance splits per coordinate.
inline double box_hausdorff(const IntervalBox& p, const IntervalBox& q) {
    if (p.dim() != q.dim())
        throw dimension_mismatch(static_cast<long>(p.dim()), static_cast<long>(q.dim()));
    double h = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i)
        h = std::max(h, std::max(std::abs(p.lo[i] - q.lo[i]), std::abs(p.hi[i] - q.hi[i])));
    return h;
}

/// Z_2^k with elements as bitmasks (bit i set = coordinate i+1 equals -1),
/// product = xor, identity = 0.  Coordinates of R^(2^k) are indexed by the
/// group elements themselves.
struct CantorScene {
    int k = 0;
    int order = 0; // 2^k

    int product(int x, int y) const { return x ^ y; }
    int inverse_of(int x) const { return x; }

    /// d(x, y) = sum over differing bits i (1-based) of 2^-i.
    double group_dist(int x, int y) const {
        double d = 0.0;
        int diff = x ^ y;
        for (int i = 0; i < k; ++i)
            if (diff & (1 << i)) d += std::ldexp(1.0, -(i + 1));
        return d;
    }

    /// The action gf(x) = f(xg) as a box permutation: output coordinate x
    /// holds the input coordinate x*g.
    IntervalBox apply(int g, const IntervalBox& b) const {
        IntervalBox out;
        out.lo.resize(static_cast<std::size_t>(order));
        out.hi.resize(static_cast<std::size_t>(order));
        for (int x = 0; x < order; ++x) {
            out.lo[static_cast<std::size_t>(x)] = b.lo[static_cast<std::size_t>(x ^ g)];
            out.hi[static_cast<std::size_t>(x)] = b.hi[static_cast<std::size_t>(x ^ g)];
        }
        return out;
    }

    /// A = { f : G -> [0,1], f(e) = 0 } as a box: [0,0] at the identity
    /// coordinate, [0,1] elsewhere.
    IntervalBox pinned_box() const {
        IntervalBox a;
        a.lo.assign(static_cast<std::size_t>(order), 0.0);
        a.hi.assign(static_cast<std::size_t>(order), 1.0);
        a.hi[0] = 0.0;
        return a;
    }
};

inline CantorScene build_cantor_scene(int k) {
    if (k < 1 || k > 12) throw k_too_large(k);
    CantorScene s;
    s.k = k;
    s.order = 1 << k;
    return s;
}

struct CantorRow {
    int y = 0;
    double dh = 0;    // d_H(A, yA)
    double dist = 0;  // group distance d(e, y)
    double ratio = 0; // dh / dist
};

/// One row per y != e; the max ratio 2^k is attained at the flip of bit k.
inline std::vector<CantorRow> discontinuity_report(const CantorScene& s) {
    std::vector<CantorRow> rows;
    IntervalBox a = s.pinned_box();
    for (int y = 1; y < s.order; ++y) {
        CantorRow r;
        r.y = y;
        r.dh = box_hausdorff(a, s.apply(y, a));
        r.dist = s.group_dist(0, y);
        r.ratio = r.dh / r.dist;
        rows.push_back(r);
    }
    return rows;
}

} // namespace ccgeo
