#pragma once

// Independent reference computations and random inputs for the test suites.
// The oracles deliberately avoid the library's own algorithms: polygon hulls
// by monotone chain, areas by the shoelace formula, chains by enumeration.

#include "seshadri/polytope.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using seshadri::Integer;
using seshadri::Rational;

struct Pt {
    Rational x, y;
    bool operator==(const Pt&) const = default;
};

inline Rational cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Counter-clockwise hull without collinear points.
inline std::vector<Pt> monotone_chain(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return pts;
    std::vector<Pt> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

// Twice the area, which is the normalized volume of a polygon.
inline Rational shoelace2(const std::vector<Pt>& ccw) {
    Rational s = 0;
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        const Pt& a = ccw[i];
        const Pt& b = ccw[(i + 1) % ccw.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return abs(s);
}

// Lattice length of a rational vector: g/L with L the common denominator and
// g the gcd of the numerators over L.
inline Rational lattice_norm(const std::vector<Rational>& d) {
    Integer l = 1;
    for (const auto& q : d)
        l = lcm(l, Integer(q.get_den()));
    Integer g = 0;
    for (const auto& q : d) {
        Rational s = q * l;
        g = gcd(g, Integer(s.get_num()));
    }
    return Rational(g, l);
}

// Length of {w = t} ∩ polygon, measured in the lattice ker(w).
inline Rational chord_length(const std::vector<Pt>& ccw, const Integer& w0, const Integer& w1, const Rational& t) {
    std::vector<Pt> hits;
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        const Pt& a = ccw[i];
        const Pt& b = ccw[(i + 1) % ccw.size()];
        Rational fa = w0 * a.x + w1 * a.y - t;
        Rational fb = w0 * b.x + w1 * b.y - t;
        if (fa == 0)
            hits.push_back(a);
        if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) {
            Rational s = fa / (fa - fb);
            hits.push_back(Pt{a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)});
        }
    }
    Rational best = 0;
    for (const auto& p : hits)
        for (const auto& q : hits)
            best = std::max(best, lattice_norm({q.x - p.x, q.y - p.y}));
    return best;
}

// Rank-one projection bound for a polygon over the given functionals:
// max_w min(width_w, max_t chord_w(t)); the chord length is concave in t,
// so its maximum sits at a vertex value.
inline Rational polygon_projection_bound(const std::vector<Pt>& ccw, const std::vector<std::pair<Integer, Integer>>& ws) {
    Rational best = 0;
    for (const auto& [w0, w1] : ws) {
        Rational lo = w0 * ccw[0].x + w1 * ccw[0].y, hi = lo;
        for (const auto& p : ccw) {
            Rational v = w0 * p.x + w1 * p.y;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        Rational chord = 0;
        for (const auto& p : ccw)
            chord = std::max(chord, chord_length(ccw, w0, w1, w0 * p.x + w1 * p.y));
        best = std::max(best, std::min(Rational(hi - lo), chord));
    }
    return best;
}

// Primitive inward/outward edge normals plus every primitive vector of the
// box [-h,h]^2, each normalized so the first nonzero entry is positive.
inline std::vector<std::pair<Integer, Integer>> polygon_candidates(const std::vector<Pt>& ccw, int h) {
    std::vector<std::pair<Integer, Integer>> out;
    auto add = [&](Integer a, Integer b) {
        Integer g = gcd(a, b);
        a /= g;
        b /= g;
        if (a < 0 || (a == 0 && b < 0)) {
            a = -a;
            b = -b;
        }
        if (std::find(out.begin(), out.end(), std::make_pair(a, b)) == out.end())
            out.emplace_back(a, b);
    };
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        const Pt& a = ccw[i];
        const Pt& b = ccw[(i + 1) % ccw.size()];
        Rational dx = b.x - a.x, dy = b.y - a.y;
        Integer l = lcm(Integer(dx.get_den()), Integer(dy.get_den()));
        add(Integer(Rational(dy * l).get_num()), Integer(Rational(-dx * l).get_num()));
    }
    for (int a = -h; a <= h; ++a)
        for (int b = -h; b <= h; ++b)
            if ((a != 0 || b != 0) && std::gcd(a, b) == 1)
                add(a, b);
    return out;
}

// min_i b_i / b_{i+1}, b_i = a_i + ... + a_n + 1, summed term by term.
inline Rational simplex_ratios(const std::vector<Rational>& a) {
    const std::size_t n = a.size();
    auto b = [&](std::size_t i) {
        Rational s = 1;
        for (std::size_t j = i; j < n; ++j)
            s += a[j];
        return s;
    };
    Rational best = b(0) / b(1);
    for (std::size_t i = 1; i < n; ++i)
        best = std::min(best, Rational(b(i) / b(i + 1)));
    return best;
}

struct ChainResult {
    std::vector<long> chain;
    Rational bound;
};

// Every chain d = c_1 >= ... >= c_n >= 1; ties resolved to the
// lexicographically smallest chain.
inline ChainResult enumerate_chains(unsigned n, long d) {
    ChainResult best{{}, -1};
    std::vector<long> c(n);
    c[0] = d;
    std::function<void(unsigned)> rec = [&](unsigned i) {
        if (i == n) {
            Rational v(c[n - 1]);
            for (unsigned j = 0; j + 1 < n; ++j)
                v = std::min(v, seshadri::make_rational(c[j], c[j + 1]));
            if (v > best.bound || (v == best.bound && c < best.chain))
                best = ChainResult{c, v};
            return;
        }
        for (long x = 1; x <= c[i - 1]; ++x) {
            c[i] = x;
            rec(i + 1);
        }
    };
    rec(1);
    return best;
}

inline long nth_root_floor(long v, unsigned n) {
    long z = 0;
    auto pw = [n](long x) {
        long r = 1;
        for (unsigned i = 0; i < n; ++i)
            r *= x;
        return r;
    };
    while (pw(z + 1) <= v)
        ++z;
    return z;
}

// Cofactor expansion, for small matrices only.
inline Integer laplace_det(const std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Integer det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Integer>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Integer> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c)
                    row.push_back(m[r][k]);
            minor.push_back(row);
        }
        Integer term = m[0][c] * laplace_det(minor);
        det += (c % 2 == 0) ? term : Integer(-term);
    }
    return det;
}

} // namespace oracle

namespace gen {

using seshadri::IntMatrix;
using seshadri::IntVector;
using seshadri::LatticePolytope;

inline IntVector random_point(std::mt19937& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntVector v(n);
    for (auto& x : v)
        x = d(rng);
    return v;
}

// Full-dimensional lattice polytope with vertices in [lo,hi]^n.
inline LatticePolytope random_polytope(std::mt19937& rng, std::size_t n, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> count(n + 1, n + 5);
    for (;;) {
        std::vector<IntVector> pts;
        int k = count(rng);
        for (int i = 0; i < k; ++i)
            pts.push_back(random_point(rng, n, lo, hi));
        auto p = LatticePolytope::from_points(std::span<const IntVector>(pts));
        if (p.full_dimensional())
            return p;
    }
}

// Product of random elementary row operations and swaps.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 8) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = idx(rng), b = idx(rng);
        if (a == b) {
            u.swap_rows(a, (a + 1) % n);
            continue;
        }
        int c = coef(rng);
        for (std::size_t j = 0; j < n; ++j)
            u(a, j) += c * u(b, j);
    }
    return u;
}

inline std::vector<oracle::Pt> as_points(const LatticePolytope& p) {
    std::vector<oracle::Pt> out;
    for (const auto& v : p.vertices())
        out.push_back(oracle::Pt{v[0], v[1]});
    return out;
}

} // namespace gen
