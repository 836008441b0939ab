#include "seshadri/polytope.hpp"

#include "seshadri/error.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>

namespace seshadri {

namespace {

// Affine hull of a point set: rank d and d coordinate axes onto which the
// hull projects injectively.
struct AffineFrame {
    int dim = 0;
    std::vector<std::size_t> pivots;
};

AffineFrame affine_frame(std::span<const RationalPoint> points) {
    AffineFrame f;
    if (points.size() <= 1)
        return f;
    const std::size_t n = points[0].size();
    std::vector<RationalPoint> rows;
    rows.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i)
        rows.push_back(subtract(points[i], points[0]));
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0)
                continue;
            Rational f = rows[i][c] / rows[r][c];
            for (std::size_t k = c; k < n; ++k)
                if (rows[r][k] != 0)
                    rows[i][k] -= f * rows[r][k];
        }
        f.pivots.push_back(c);
        ++r;
    }
    f.dim = static_cast<int>(r);
    return f;
}

RationalPoint project(std::span<const Rational> x, const AffineFrame& f) {
    RationalPoint q(f.pivots.size());
    for (std::size_t k = 0; k < f.pivots.size(); ++k)
        q[k] = x[f.pivots[k]];
    return q;
}

struct FacetData {
    std::vector<std::size_t> indices;
    IntVector normal; // outward, primitive, in projected coordinates
};

// Normal of the hyperplane through d affinely independent points of Q^d, or
// nothing if they are dependent.
std::optional<IntVector> hyperplane_normal(const std::vector<RationalPoint>& q, std::span<const std::size_t> idx) {
    const std::size_t d = q[0].size();
    std::vector<RationalPoint> m;
    m.reserve(idx.size() - 1);
    for (std::size_t k = 1; k < idx.size(); ++k)
        m.push_back(subtract(q[idx[k]], q[idx[0]]));
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < d && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r])
            x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t k = 0; k < d; ++k)
                if (m[r][k] != 0)
                    m[i][k] -= f * m[r][k];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    if (r + 1 != d)
        return std::nullopt;
    std::size_t free_col = 0;
    while (std::find(pivot_cols.begin(), pivot_cols.end(), free_col) != pivot_cols.end())
        ++free_col;
    RationalPoint normal(d, Rational(0));
    normal[free_col] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        normal[pivot_cols[i]] = -m[i][free_col];
    return primitive_part(clear_denominators(normal));
}

// Facets of a full-dimensional point configuration in Q^d (d >= 1).
std::vector<FacetData> facets_of(const std::vector<RationalPoint>& q) {
    const std::size_t d = q[0].size();
    const std::size_t m = q.size();
    std::vector<FacetData> out;
    if (d == 1) {
        Rational lo = q[0][0], hi = q[0][0];
        for (const auto& x : q) {
            lo = std::min(lo, x[0]);
            hi = std::max(hi, x[0]);
        }
        FacetData low{{}, {Integer(-1)}}, high{{}, {Integer(1)}};
        for (std::size_t i = 0; i < m; ++i) {
            if (q[i][0] == lo)
                low.indices.push_back(i);
            if (q[i][0] == hi)
                high.indices.push_back(i);
        }
        out.push_back(std::move(low));
        out.push_back(std::move(high));
        return out;
    }
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        bool known = std::any_of(out.begin(), out.end(), [&](const FacetData& f) {
            return std::includes(f.indices.begin(), f.indices.end(), idx.begin(), idx.end());
        });
        if (!known) {
            if (auto normal = hyperplane_normal(q, idx)) {
                Rational offset = dot(*normal, q[idx[0]]);
                bool below = true, above = true;
                std::vector<std::size_t> on;
                for (std::size_t j = 0; j < m && (below || above); ++j) {
                    Rational s = dot(*normal, q[j]);
                    if (s < offset)
                        above = false;
                    else if (s > offset)
                        below = false;
                    else
                        on.push_back(j);
                }
                if (below || above) {
                    if (above)
                        for (auto& x : *normal)
                            x = -x;
                    out.push_back({std::move(on), std::move(*normal)});
                }
            }
        }
        // next combination
        std::size_t k = d;
        while (k > 0 && idx[k - 1] == m - d + k - 1)
            --k;
        if (k == 0)
            break;
        ++idx[k - 1];
        for (std::size_t j = k; j < d; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return out;
}

bool lex_less(const RationalPoint& a, const RationalPoint& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntVector lift_normal(const IntVector& normal, const AffineFrame& f, std::size_t rank) {
    IntVector w(rank, Integer(0));
    for (std::size_t k = 0; k < f.pivots.size(); ++k)
        w[f.pivots[k]] = normal[k];
    return w;
}

} // namespace

namespace detail {

struct FaceCache {
    std::once_flag once;
    std::vector<Face> faces;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

} // namespace detail

LatticePolytope::LatticePolytope(std::size_t rank, int dim, std::vector<RationalPoint> vertices)
    : rank_(rank), dim_(dim), vertices_(std::move(vertices)), cache_(std::make_shared<detail::FaceCache>()) {}

LatticePolytope LatticePolytope::from_points(std::span<const RationalPoint> points) {
    require(!points.empty(), ErrorCode::InvalidArgument, "convex hull of an empty point set");
    const std::size_t rank = points[0].size();
    for (const auto& p : points)
        require(p.size() == rank, ErrorCode::DimensionMismatch, "points have different ranks");

    std::vector<RationalPoint> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    AffineFrame f = affine_frame(pts);
    if (f.dim == 0)
        return LatticePolytope(rank, 0, {pts[0]});

    std::vector<RationalPoint> q;
    q.reserve(pts.size());
    for (const auto& p : pts)
        q.push_back(project(p, f));
    std::vector<FacetData> facets = facets_of(q);

    // A point is a vertex iff the normals of the facets through it span Q^d.
    std::vector<RationalPoint> verts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<IntVector> normals;
        for (const auto& fd : facets)
            if (std::binary_search(fd.indices.begin(), fd.indices.end(), i))
                normals.push_back(fd.normal);
        if (normals.size() < static_cast<std::size_t>(f.dim))
            continue;
        if (matrix_rank(IntMatrix::from_rows(normals, static_cast<std::size_t>(f.dim))) ==
            static_cast<std::size_t>(f.dim))
            verts.push_back(pts[i]);
    }
    return LatticePolytope(rank, f.dim, std::move(verts));
}

LatticePolytope LatticePolytope::from_points(std::span<const IntVector> points) {
    std::vector<RationalPoint> pts;
    pts.reserve(points.size());
    for (const auto& p : points)
        pts.push_back(to_rational(p));
    return from_points(std::span<const RationalPoint>(pts));
}

bool LatticePolytope::is_integral() const {
    for (const auto& v : vertices_)
        for (const auto& x : v)
            if (x.get_den() != 1)
                return false;
    return true;
}

std::optional<std::size_t> LatticePolytope::index_of(std::span<const Rational> point) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (std::equal(vertices_[i].begin(), vertices_[i].end(), point.begin(), point.end()))
            return i;
    return std::nullopt;
}

const std::vector<Face>& LatticePolytope::faces() const {
    std::call_once(cache_->once, [this] {
        auto& cache = *cache_;
        if (dim_ == 0)
            return;
        AffineFrame f = affine_frame(vertices_);
        std::vector<RationalPoint> q;
        for (const auto& v : vertices_)
            q.push_back(project(v, f));
        std::vector<FacetData> facets = facets_of(q);

        std::set<std::vector<std::size_t>> seen;
        std::deque<std::vector<std::size_t>> queue;
        for (const auto& fd : facets)
            if (seen.insert(fd.indices).second)
                queue.push_back(fd.indices);
        while (!queue.empty()) {
            auto cur = std::move(queue.front());
            queue.pop_front();
            for (const auto& fd : facets) {
                std::vector<std::size_t> meet;
                std::set_intersection(cur.begin(), cur.end(), fd.indices.begin(), fd.indices.end(),
                                      std::back_inserter(meet));
                if (!meet.empty() && seen.insert(meet).second)
                    queue.push_back(std::move(meet));
            }
        }

        for (const auto& idx : seen) {
            Face face;
            face.vertex_indices = idx;
            std::vector<RationalPoint> pts;
            for (auto i : idx)
                pts.push_back(vertices_[i]);
            face.dim = affine_frame(pts).dim;
            IntVector support(static_cast<std::size_t>(f.dim), Integer(0));
            for (const auto& fd : facets)
                if (std::includes(fd.indices.begin(), fd.indices.end(), idx.begin(), idx.end()))
                    for (std::size_t k = 0; k < support.size(); ++k)
                        support[k] += fd.normal[k];
            face.support = lift_normal(support, f, rank_);
            cache.faces.push_back(std::move(face));
        }
        std::stable_sort(cache.faces.begin(), cache.faces.end(),
                         [](const Face& a, const Face& b) { return a.dim < b.dim; });
        for (const auto& face : cache.faces)
            if (face.dim == 1)
                cache.edges.emplace_back(face.vertex_indices.front(), face.vertex_indices.back());
        if (dim_ == 1)
            cache.edges.emplace_back(0, 1);
    });
    return cache_->faces;
}

const std::vector<std::pair<std::size_t, std::size_t>>& LatticePolytope::edges() const {
    faces();
    return cache_->edges;
}

std::vector<Face> LatticePolytope::faces_of_dim(int d) const {
    std::vector<Face> out;
    for (const auto& f : faces())
        if (f.dim == d)
            out.push_back(f);
    return out;
}

Face LatticePolytope::whole() const {
    Face f;
    f.vertex_indices.resize(vertices_.size());
    std::iota(f.vertex_indices.begin(), f.vertex_indices.end(), 0);
    f.dim = dim_;
    f.support = IntVector(rank_, Integer(0));
    return f;
}

Face LatticePolytope::face_with_vertices(std::span<const std::size_t> indices) const {
    std::vector<std::size_t> sorted(indices.begin(), indices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto i : sorted)
        require(i < vertices_.size(), ErrorCode::InvalidArgument, "vertex index out of range");
    if (sorted.size() == vertices_.size())
        return whole();
    for (const auto& f : faces())
        if (f.vertex_indices == sorted)
            return f;
    fail(ErrorCode::InvalidArgument, "vertex set is not a face of the polytope");
}

LatticePolytope convex_hull_vertices(std::span<const RationalPoint> points) {
    return LatticePolytope::from_points(points);
}

std::vector<Face> face_lattice(const LatticePolytope& p) {
    require(p.dim() >= 1, ErrorCode::InvalidArgument, "face lattice needs a polytope of dimension >= 1");
    return p.faces();
}

Interval functional_image(const LatticePolytope& p, std::span<const Integer> w) {
    require(w.size() == p.rank(), ErrorCode::DimensionMismatch, "functional rank differs from polytope rank");
    require(!is_zero(w), ErrorCode::InvalidArgument, "zero functional");
    Interval iv;
    bool first = true;
    for (const auto& v : p.vertices()) {
        Rational x = dot(w, v);
        if (first || x < iv.lo)
            iv.lo = x;
        if (first || x > iv.hi)
            iv.hi = x;
        first = false;
    }
    return iv;
}

Slice slice(const LatticePolytope& p, std::span<const Integer> w, const Rational& t) {
    return slice(p, kernel_splitting(w), t);
}

Slice slice(const LatticePolytope& p, const KernelSplitting& split, const Rational& t) {
    const auto& w = split.functional;
    require(w.size() == p.rank(), ErrorCode::DimensionMismatch, "functional rank differs from polytope rank");
    require(p.rank() >= 1, ErrorCode::DimensionMismatch, "cannot slice a rank-0 polytope");
    std::vector<Rational> values;
    values.reserve(p.vertex_count());
    for (const auto& v : p.vertices())
        values.push_back(dot(w, v));
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    if (t < *lo || t > *hi)
        fail(ErrorCode::InvalidArgument, "slice parameter outside projection image");

    std::vector<RationalPoint> pts;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == t)
            pts.push_back(split.kernel_coordinates(p.vertex(i)));
    if (p.dim() >= 1) {
        for (const auto& [a, b] : p.edges()) {
            const Rational& va = values[a];
            const Rational& vb = values[b];
            if ((va < t && t < vb) || (vb < t && t < va)) {
                Rational lambda = (t - va) / (vb - va);
                RationalPoint x = add(p.vertex(a), scale(subtract(p.vertex(b), p.vertex(a)), lambda));
                pts.push_back(split.kernel_coordinates(x));
            }
        }
    }
    LatticePolytope s = LatticePolytope::from_points(std::span<const RationalPoint>(pts));
    return Slice{std::move(s), s.dim() < p.dim() - 1};
}

Rational lattice_length(std::span<const Rational> a, std::span<const Rational> b) {
    RationalPoint d = subtract(b, a);
    require(!is_zero(d), ErrorCode::InvalidArgument, "degenerate segment");
    Integer l = lcm_of_denominators(d);
    IntVector scaled = clear_denominators(d);
    return make_rational(gcd_of(scaled), l);
}

Rational lattice_length(const LatticePolytope& segment) {
    require(segment.dim() == 1, ErrorCode::InvalidArgument, "lattice length needs a 1-dimensional polytope");
    return lattice_length(segment.vertex(0), segment.vertex(1));
}

std::optional<Rational> min_edge_length(const LatticePolytope& p, std::size_t vertex_index) {
    require(vertex_index < p.vertex_count(), ErrorCode::InvalidArgument, "not a vertex of the polytope");
    if (p.vertex_count() == 1)
        return std::nullopt;
    std::optional<Rational> best;
    for (const auto& [a, b] : p.edges()) {
        if (a != vertex_index && b != vertex_index)
            continue;
        Rational len = lattice_length(p.vertex(a), p.vertex(b));
        if (!best || len < *best)
            best = len;
    }
    return best;
}

std::vector<std::vector<std::size_t>> pulling_triangulation(const LatticePolytope& p) {
    const auto& faces = p.faces();
    auto rec = [&](auto&& self, const std::vector<std::size_t>& face, int d) -> std::vector<std::vector<std::size_t>> {
        if (d == 0)
            return {{face.front()}};
        const std::size_t apex = face.front();
        std::vector<std::vector<std::size_t>> out;
        for (const auto& g : faces) {
            if (g.dim != d - 1)
                continue;
            if (std::binary_search(g.vertex_indices.begin(), g.vertex_indices.end(), apex))
                continue;
            if (!std::includes(face.begin(), face.end(), g.vertex_indices.begin(), g.vertex_indices.end()))
                continue;
            for (auto& s : self(self, g.vertex_indices, d - 1)) {
                s.insert(s.begin(), apex);
                out.push_back(std::move(s));
            }
        }
        return out;
    };
    return rec(rec, p.whole().vertex_indices, p.dim());
}

namespace {

Rational rational_determinant(std::vector<RationalPoint> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

} // namespace

Rational normalized_volume(const LatticePolytope& p) {
    if (!p.full_dimensional())
        fail(ErrorCode::InvalidArgument, "polytope not full-dimensional");
    if (p.rank() == 0)
        return 1;
    Rational total = 0;
    for (const auto& s : pulling_triangulation(p)) {
        std::vector<RationalPoint> rows;
        for (std::size_t k = 1; k < s.size(); ++k)
            rows.push_back(subtract(p.vertex(s[k]), p.vertex(s[0])));
        total += abs(rational_determinant(std::move(rows)));
    }
    return total;
}

std::vector<IntVector> face_lattice_basis(const LatticePolytope& p, const Face& face) {
    std::vector<IntVector> gens;
    const auto& base = p.vertex(face.vertex_indices.front());
    for (std::size_t k = 1; k < face.vertex_indices.size(); ++k)
        gens.push_back(clear_denominators(subtract(p.vertex(face.vertex_indices[k]), base)));
    if (gens.empty())
        return {};
    return quotient_projection(gens, p.rank()).kernel_basis;
}

LatticePolytope face_as_polytope(const LatticePolytope& p, const Face& face) {
    std::vector<IntVector> basis = face_lattice_basis(p, face);
    const auto& base = p.vertex(face.vertex_indices.front());
    std::vector<RationalPoint> pts;
    for (auto i : face.vertex_indices)
        pts.push_back(coordinates_in_basis(basis, subtract(p.vertex(i), base)));
    return LatticePolytope::from_points(std::span<const RationalPoint>(pts));
}

LatticePolytope affine_transform(const LatticePolytope& p, const IntMatrix& u, std::span<const Rational> shift) {
    require(u.rows() == p.rank() && u.cols() == p.rank() && shift.size() == p.rank(), ErrorCode::DimensionMismatch,
            "transform size differs from polytope rank");
    require(is_unimodular(u), ErrorCode::InvalidArgument, "transform is not unimodular");
    std::vector<RationalPoint> pts;
    for (const auto& v : p.vertices())
        pts.push_back(add(u.apply(std::span<const Rational>(v)), shift));
    return LatticePolytope::from_points(std::span<const RationalPoint>(pts));
}

LatticePolytope affine_transform(const LatticePolytope& p, const IntMatrix& u, std::span<const Integer> shift) {
    RationalPoint s = to_rational(shift);
    return affine_transform(p, u, std::span<const Rational>(s));
}

LatticePolytope translate(const LatticePolytope& p, std::span<const Rational> shift) {
    std::vector<RationalPoint> pts;
    for (const auto& v : p.vertices())
        pts.push_back(add(v, shift));
    return LatticePolytope::from_points(std::span<const RationalPoint>(pts));
}

LatticePolytope dilate(const LatticePolytope& p, const Rational& k) {
    require(k > 0, ErrorCode::InvalidArgument, "dilation factor must be positive");
    std::vector<RationalPoint> pts;
    for (const auto& v : p.vertices())
        pts.push_back(scale(v, k));
    return LatticePolytope::from_points(std::span<const RationalPoint>(pts));
}

} // namespace seshadri
