#pragma once

// Lower and upper bounds for the Seshadri constant of (X_P, L_P) at a general
// point of the open orbit.
//
// The lower bound is a chain of rank-one projections: for a primitive w and a
// parameter t in w(P), the value min(|w(P)|, lower(P ∩ {w = t})) is a lower
// bound, recursing down to segments. Upper bounds are lattice widths and the
// n-th root of the normalized volume.

#include "seshadri/arith.hpp"
#include "seshadri/lattice.hpp"
#include "seshadri/polytope.hpp"

#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace seshadri {

/// A rational, or the n-th root of a nonnegative rational. Perfect powers
/// are stored as rationals.
struct BoundValue {
    enum class Kind { Rational, NthRoot };

    Kind kind = Kind::Rational;
    Rational value;          // the value, or the radicand
    unsigned long index = 1; // root index for NthRoot

    static BoundValue rational(const Rational& v);
    static BoundValue root(const Rational& radicand, unsigned long index);

    bool operator==(const BoundValue&) const = default;
};

/// Exact comparison by cross-powering; returns <0, 0 or >0.
int compare(const BoundValue& a, const BoundValue& b);
int compare(const Rational& a, const BoundValue& b);

std::string to_string(const BoundValue& v);

struct Certificate;
using CertificatePtr = std::shared_ptr<const Certificate>;

struct BaseSegment {
    Rational length;
};

struct Projection {
    Functional w;
    Rational t;
    Rational width;
    CertificatePtr child;
};

/// P = conv(e_1, ..., e_n, -sum a_i e_i) with the closed-form value.
struct SimplexClosedForm {
    std::vector<Rational> a;
    Rational value;
};

struct Certificate {
    std::variant<BaseSegment, Projection, SimplexClosedForm> node;

    /// Value claimed by the tree (min of width and child for projections).
    Rational value() const;
};

CertificatePtr make_base(const Rational& length);
CertificatePtr make_projection(Functional w, Rational t, Rational width, CertificatePtr child);
CertificatePtr make_simplex(std::vector<Rational> a, Rational value);

struct UpperWitness {
    enum class Kind { Width, Volume, EdgeLength };
    Kind kind = Kind::Width;
    Functional w;            // for Width
    Rational volume;         // for Volume: normalized volume
};

struct BoundReport {
    Rational lower;
    CertificatePtr lower_cert; // null when the lower bound has no tree (vertex orbits)
    BoundValue upper;
    UpperWitness upper_witness;
    bool exact = false;
};

struct SearchStrategy {
    enum class Source { FacetNormals, FacetNormalsPlusBox };

    Source source = Source::FacetNormalsPlusBox;
    int box_height = 1;
    int max_depth = 0; // 0: dim P
    bool memoize = true;
    unsigned threads = 1;

    /// Box of height 1 up to rank 3, facet normals only from rank 4 on.
    static SearchStrategy defaults_for_rank(std::size_t rank);
};

/// Facet normals (and box vectors), primitive, first nonzero entry positive,
/// sorted lexicographically.
std::vector<Functional> candidate_projections(const LatticePolytope& p, const SearchStrategy& strategy);

/// Sorted vertex values of w plus midpoints of consecutive ones, keeping
/// only t whose slice has dimension dim P - 1. Endpoints are kept when the
/// slice there is a facet.
std::vector<Rational> candidate_slice_params(const LatticePolytope& p, std::span<const Integer> w);
std::vector<Rational> candidate_slice_params(const LatticePolytope& p, const KernelSplitting& split);

BoundReport estimate_interior(const LatticePolytope& p, const SearchStrategy& strategy);

/// min_i (a_i + ... + a_n + 1) / (a_{i+1} + ... + a_n + 1).
Rational simplex_lower_bound(std::span<const Rational> a);

/// conv(e_1, ..., e_n, -sum a_i e_i).
LatticePolytope simplex_polytope(std::span<const Rational> a);

/// Recomputes the certified value from scratch; throws DimensionMismatch,
/// DegenerateSlice or ValueMismatch on a bad certificate.
Rational verify_certificate(const LatticePolytope& p, const Certificate& cert);

/// The certificate for affine_transform(P, U, shift) built from one for P.
CertificatePtr transform_certificate(const CertificatePtr& cert, const IntMatrix& u, std::span<const Rational> shift);

} // namespace seshadri
