#pragma once

#include "seshadri/arith.hpp"
#include "seshadri/lattice.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace seshadri {

/// A face of a polytope, identified by the indices of the polytope's
/// vertices lying on it. `support` is an integer functional whose argmax
/// over the vertices is exactly this vertex set.
struct Face {
    std::vector<std::size_t> vertex_indices;
    int dim = 0;
    Functional support;

    bool operator==(const Face& other) const { return vertex_indices == other.vertex_indices; }
};

struct Interval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    bool contains(const Rational& t) const { return lo <= t && t <= hi; }
};

class LatticePolytope;

struct Slice;

namespace detail {
struct FaceCache;
}

/// Convex hull of finitely many rational points in Q^n, stored by its
/// vertices in lexicographic order. Immutable; the face lattice is computed
/// on first use and shared between copies.
class LatticePolytope {
public:
    /// Builds the hull; drops duplicates and non-vertices.
    static LatticePolytope from_points(std::span<const RationalPoint> points);
    static LatticePolytope from_points(std::span<const IntVector> points);

    std::size_t rank() const noexcept { return rank_; }
    int dim() const noexcept { return dim_; }
    bool full_dimensional() const noexcept { return dim_ == static_cast<int>(rank_); }
    bool is_integral() const;

    const std::vector<RationalPoint>& vertices() const noexcept { return vertices_; }
    const RationalPoint& vertex(std::size_t i) const { return vertices_.at(i); }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }

    /// Index of an exact vertex match, if any.
    std::optional<std::size_t> index_of(std::span<const Rational> point) const;

    /// All proper faces, ordered by (dim, vertex indices).
    const std::vector<Face>& faces() const;
    /// Faces of one dimension (dim - 1 gives the facets).
    std::vector<Face> faces_of_dim(int d) const;
    /// The face with exactly these vertex indices; throws if there is none.
    Face face_with_vertices(std::span<const std::size_t> indices) const;
    /// P itself as a Face (all vertices, dim P).
    Face whole() const;
    /// Vertex index pairs of the 1-dimensional faces (P itself when dim P = 1).
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const;

    bool operator==(const LatticePolytope& other) const { return vertices_ == other.vertices_ && rank_ == other.rank_; }

private:
    LatticePolytope(std::size_t rank, int dim, std::vector<RationalPoint> vertices);

    std::size_t rank_ = 0;
    int dim_ = 0;
    std::vector<RationalPoint> vertices_;
    std::shared_ptr<detail::FaceCache> cache_;
};

LatticePolytope convex_hull_vertices(std::span<const RationalPoint> points);

/// Full face lattice (proper faces), graded by dimension. Requires dim P >= 1.
std::vector<Face> face_lattice(const LatticePolytope& p);

/// [min w(v), max w(v)] over the vertices.
Interval functional_image(const LatticePolytope& p, std::span<const Integer> w);

struct Slice {
    LatticePolytope polytope; ///< in kernel_splitting(w) coordinates, rank n-1
    bool degenerate = false;  ///< dim(slice) < dim(P) - 1
};

/// P ∩ {w = t} in kernel coordinates. Throws when t is outside w(P).
Slice slice(const LatticePolytope& p, std::span<const Integer> w, const Rational& t);
Slice slice(const LatticePolytope& p, const KernelSplitting& split, const Rational& t);

/// Lattice length of a 1-dimensional polytope.
Rational lattice_length(const LatticePolytope& segment);
/// Lattice length of the segment [a, b] in Z^n.
Rational lattice_length(std::span<const Rational> a, std::span<const Rational> b);

/// Minimum lattice length of an edge through vertex v. std::nullopt stands
/// for +infinity (P is a single point).
std::optional<Rational> min_edge_length(const LatticePolytope& p, std::size_t vertex_index);

/// n! * Euclidean volume, by pulling triangulation from the first vertex.
Rational normalized_volume(const LatticePolytope& p);

/// Simplices (as vertex index lists) of the pulling triangulation.
std::vector<std::vector<std::size_t>> pulling_triangulation(const LatticePolytope& p);

/// The face translated so its first vertex sits at the origin, expressed in
/// the HNF basis of the saturated lattice R(σ-σ) ∩ Z^n.
LatticePolytope face_as_polytope(const LatticePolytope& p, const Face& face);

/// Saturated lattice basis (HNF) of R(σ-σ) ∩ Z^n for a face.
std::vector<IntVector> face_lattice_basis(const LatticePolytope& p, const Face& face);

/// v -> U v + shift with U unimodular.
LatticePolytope affine_transform(const LatticePolytope& p, const IntMatrix& u, std::span<const Integer> shift);
LatticePolytope affine_transform(const LatticePolytope& p, const IntMatrix& u, std::span<const Rational> shift);
LatticePolytope translate(const LatticePolytope& p, std::span<const Rational> shift);
LatticePolytope dilate(const LatticePolytope& p, const Rational& k);

} // namespace seshadri
