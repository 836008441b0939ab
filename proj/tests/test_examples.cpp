// Small worked cases for each module, one test per operation.

#include "seshadri/degeneration.hpp"
#include "seshadri/error.hpp"
#include "seshadri/estimator.hpp"
#include "seshadri/orbit.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace seshadri;

namespace {

IntVector iv(std::initializer_list<long> xs) {
    IntVector v;
    for (long x : xs)
        v.push_back(x);
    return v;
}

LatticePolytope poly(std::vector<std::vector<long>> pts) {
    std::vector<IntVector> v;
    for (const auto& p : pts) {
        IntVector x;
        for (long c : p)
            x.push_back(c);
        v.push_back(x);
    }
    return LatticePolytope::from_points(std::span<const IntVector>(v));
}

LatticePolytope cube(long a) {
    return poly({{0, 0, 0}, {a, 0, 0}, {0, a, 0}, {0, 0, a}, {a, a, 0}, {a, 0, a}, {0, a, a}, {a, a, a}});
}

LatticePolytope square(long a) {
    return poly({{0, 0}, {a, 0}, {0, a}, {a, a}});
}

SearchStrategy defaults(const LatticePolytope& p) {
    return SearchStrategy::defaults_for_rank(p.rank());
}

} // namespace

TEST(LatticeExamples, PrimitivePart) {
    EXPECT_EQ(primitive_part(iv({-2, -1})), iv({-2, -1}));
    EXPECT_EQ(primitive_part(iv({4, 6})), iv({2, 3}));
    EXPECT_EQ(primitive_part(iv({0, 0, 5})), iv({0, 0, 1}));
}

TEST(LatticeExamples, Hermite) {
    HermiteForm id = hermite_normal_form(IntMatrix::identity(2));
    EXPECT_EQ(id.H, IntMatrix::identity(2));
    EXPECT_EQ(id.U, IntMatrix::identity(2));

    IntMatrix a{{2, 4}, {0, 3}};
    HermiteForm h = hermite_normal_form(a);
    EXPECT_EQ(h.U * a, h.H);
    EXPECT_EQ(abs(determinant(h.U)), 1);
    EXPECT_EQ(h.H(1, 0), 0);

    HermiteForm z = hermite_normal_form(IntMatrix(2, 2));
    EXPECT_EQ(z.H, IntMatrix(2, 2));
    EXPECT_EQ(z.U, IntMatrix::identity(2));
}

TEST(LatticeExamples, Smith) {
    EXPECT_EQ(smith_normal_form(IntMatrix::identity(2)).S, IntMatrix::identity(2));
    IntMatrix d{{2, 0}, {0, 3}};
    SmithForm s = smith_normal_form(d);
    EXPECT_EQ(s.S, (IntMatrix{{1, 0}, {0, 6}}));
    EXPECT_EQ(s.U * d * s.V, s.S);

    IntMatrix m{{2, 4}, {6, 8}};
    SmithForm t = smith_normal_form(m);
    EXPECT_EQ(t.U * m * t.V, t.S);
    EXPECT_EQ(t.invariant_factors(), (std::vector<Integer>{2, 4}));
}

TEST(LatticeExamples, Quotients) {
    std::vector<IntVector> anti{iv({-1, 1})};
    QuotientMap q = quotient_projection(anti, 2);
    ASSERT_EQ(q.target_rank, 1u);
    Integer sign = q.apply(iv({1, 0}))[0];
    EXPECT_EQ(abs(sign), 1);
    EXPECT_EQ(q.apply(iv({3, 4}))[0], 7 * sign);
    // The triangle's vertices land on an interval of lattice length 3.
    Integer lo = q.apply(iv({-1, -1}))[0], hi = q.apply(iv({1, 0}))[0];
    EXPECT_EQ(abs(hi - lo), 3);
    EXPECT_EQ(q.apply(iv({0, 1}))[0], hi);

    QuotientMap none = quotient_projection({}, 2);
    EXPECT_EQ(none.matrix, IntMatrix::identity(2));

    std::vector<IntVector> plane{iv({1, 0, 0}), iv({0, 1, 0})};
    QuotientMap z = quotient_projection(plane, 3);
    ASSERT_EQ(z.target_rank, 1u);
    EXPECT_EQ(abs(z.apply(iv({5, -7, 1}))[0]), 1);
    EXPECT_EQ(z.apply(iv({5, -7, 0}))[0], 0);
}

TEST(LatticeExamples, KernelSplitting) {
    KernelSplitting a = kernel_splitting(iv({0, 1}));
    EXPECT_EQ(a.kernel_basis, std::vector<IntVector>{iv({1, 0})});
    EXPECT_EQ(a.section, iv({0, 1}));

    KernelSplitting b = kernel_splitting(iv({1, 1}));
    ASSERT_EQ(b.kernel_basis.size(), 1u);
    EXPECT_TRUE(b.kernel_basis[0] == iv({1, -1}) || b.kernel_basis[0] == iv({-1, 1}));
    EXPECT_EQ(b.section[0] + b.section[1], 1);

    KernelSplitting c = kernel_splitting(iv({2, 3}));
    EXPECT_EQ(c.kernel_basis, std::vector<IntVector>{iv({3, -2})});
    EXPECT_EQ(c.section, iv({-1, 1}));

    EXPECT_THROW(kernel_splitting(iv({2, 4})), Error);
}

TEST(PolytopeExamples, Hulls) {
    std::vector<RationalPoint> pts{{0, 0}, {1, 0}, {0, 1}, {Rational(1, 4), Rational(1, 4)}};
    EXPECT_EQ(LatticePolytope::from_points(std::span<const RationalPoint>(pts)).vertex_count(), 3u);
    auto seg = poly({{0, 0}, {2, 0}, {1, 0}});
    EXPECT_EQ(seg.dim(), 1);
    ASSERT_EQ(seg.vertex_count(), 2u);
    EXPECT_EQ(seg.vertex(0), (RationalPoint{0, 0}));
    EXPECT_EQ(seg.vertex(1), (RationalPoint{2, 0}));
}

TEST(PolytopeExamples, SimplexFaces) {
    auto s = poly({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(s.faces_of_dim(0).size(), 4u);
    EXPECT_EQ(s.faces_of_dim(1).size(), 6u);
    EXPECT_EQ(s.faces_of_dim(2).size(), 4u);
    EXPECT_EQ(normalized_volume(s), 1);
}

TEST(PolytopeExamples, ImagesAndSlices) {
    auto t = poly({{1, 0}, {0, 1}, {-1, -1}});
    Interval x = functional_image(t, iv({1, 0}));
    EXPECT_EQ(x.lo, -1);
    EXPECT_EQ(x.hi, 1);
    Interval seg = functional_image(poly({{0}, {5}}), iv({1}));
    EXPECT_EQ(seg.lo, 0);
    EXPECT_EQ(seg.hi, 5);

    Slice s = slice(cube(2), iv({0, 0, 1}), 1);
    EXPECT_FALSE(s.degenerate);
    EXPECT_EQ(s.polytope, square(2));
}

TEST(PolytopeExamples, LengthsAndVolumes) {
    EXPECT_EQ(lattice_length(RationalPoint{1, 0}, RationalPoint{-1, -1}), 1);
    EXPECT_EQ(lattice_length(poly({{0}, {7}})), 7);
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_EQ(min_edge_length(square(2), i), Rational(2));
    auto simplex4 = poly({{-1, -1, -1}, {3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}});
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_EQ(min_edge_length(simplex4, i), Rational(4));
    EXPECT_EQ(normalized_volume(poly({{0, 0}, {3, 0}, {0, 5}, {3, 5}})), 30);
}

TEST(PolytopeExamples, Faces) {
    auto t = poly({{1, 0}, {0, 1}, {-1, -1}});
    std::vector<std::size_t> v{2};
    auto pt = face_as_polytope(t, t.face_with_vertices(v));
    EXPECT_EQ(pt.rank(), 0u);
    EXPECT_EQ(pt.vertex_count(), 1u);

    std::vector<std::size_t> edge{1, 2}; // (0,1), (1,0)
    auto e = face_as_polytope(t, t.face_with_vertices(edge));
    EXPECT_EQ(e.rank(), 1u);
    EXPECT_EQ(lattice_length(e), 1);

    auto c = cube(2);
    std::vector<std::size_t> bottom;
    for (std::size_t i = 0; i < c.vertex_count(); ++i)
        if (c.vertex(i)[2] == 0)
            bottom.push_back(i);
    auto f = face_as_polytope(c, c.face_with_vertices(bottom));
    EXPECT_EQ(f.rank(), 2u);
    EXPECT_EQ(normalized_volume(f), normalized_volume(square(2)));
    EXPECT_EQ(min_edge_length(f, 0), Rational(2));
}

TEST(PolytopeExamples, Transforms) {
    auto t = poly({{1, 0}, {0, 1}, {-1, -1}});
    IntVector zero{0, 0};
    EXPECT_EQ(affine_transform(t, IntMatrix::identity(2), std::span<const Integer>(zero)), t);
    EXPECT_EQ(dilate(t, 2), poly({{2, 0}, {0, 2}, {-2, -2}}));
    auto sheared = affine_transform(square(1), IntMatrix{{1, 1}, {0, 1}}, std::span<const Integer>(zero));
    EXPECT_EQ(sheared, poly({{0, 0}, {1, 0}, {1, 1}, {2, 1}}));
    EXPECT_EQ(normalized_volume(sheared), 2);
}

TEST(EstimatorExamples, Candidates) {
    auto seg = poly({{0}, {3}});
    EXPECT_EQ(candidate_projections(seg, defaults(seg)), std::vector<Functional>{iv({1})});
    EXPECT_TRUE(candidate_slice_params(seg, iv({1})).empty());

    auto sq = square(2);
    auto ws = candidate_projections(sq, defaults(sq));
    EXPECT_NE(std::find(ws.begin(), ws.end(), iv({1, 0})), ws.end());
    EXPECT_NE(std::find(ws.begin(), ws.end(), iv({0, 1})), ws.end());
    // Interior midpoint plus both facets, which are non-degenerate slices.
    EXPECT_EQ(candidate_slice_params(sq, iv({1, 0})), (std::vector<Rational>{0, 1, 2}));

    auto t = poly({{1, 0}, {0, 1}, {-1, -1}});
    SearchStrategy facets = defaults(t);
    facets.source = SearchStrategy::Source::FacetNormals;
    auto normals = candidate_projections(t, facets);
    EXPECT_EQ(normals.size(), 3u);
    EXPECT_EQ(std::find(normals.begin(), normals.end(), iv({0, 1})), normals.end());
}

TEST(EstimatorExamples, Bounds) {
    auto r = poly({{0, 0}, {2, 0}, {0, 5}, {2, 5}});
    BoundReport rr = estimate_interior(r, defaults(r));
    EXPECT_EQ(rr.lower, 2);
    EXPECT_EQ(rr.upper, BoundValue::rational(2));
    EXPECT_TRUE(rr.exact);

    struct Case {
        LatticePolytope p;
        long value;
    };
    for (const auto& [p, value] : {Case{poly({{-1, -1, -1}, {3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}}), 4},
                                   Case{poly({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {-2, -2, 2}}), 2}}) {
        BoundReport b = estimate_interior(p, defaults(p));
        EXPECT_EQ(b.lower, value);
        EXPECT_EQ(b.upper, BoundValue::rational(value));
        EXPECT_TRUE(b.exact);
        EXPECT_EQ(verify_certificate(p, *b.lower_cert), value);
    }

    EXPECT_EQ(simplex_lower_bound(std::vector<Rational>(4, Rational(0))), 1);
    EXPECT_EQ(verify_certificate(poly({{0}, {5}}), *make_base(5)), 5);
}

TEST(OrbitExamples, Segment) {
    auto seg = poly({{0}, {5}});
    auto prof = orbit_profile(seg, defaults(seg));
    ASSERT_EQ(prof.size(), 3u);
    for (const auto& o : prof) {
        EXPECT_EQ(o.bounds.lower, 5);
        EXPECT_TRUE(o.bounds.exact);
    }
}

TEST(OrbitExamples, TriangleFaces) {
    auto t = poly({{1, 0}, {0, 1}, {-1, -1}});
    std::vector<std::size_t> edge{1, 2};
    OrbitReport e = bound_at_orbit(t, t.face_with_vertices(edge), defaults(t));
    EXPECT_EQ(e.bounds.lower, 1);
    EXPECT_TRUE(e.bounds.exact);
    ASSERT_TRUE(e.edge_bound.has_value());
    EXPECT_EQ(*e.edge_bound, 3);

    std::vector<std::size_t> vertex{2};
    OrbitReport v = bound_at_orbit(t, t.face_with_vertices(vertex), defaults(t));
    EXPECT_EQ(v.bounds.lower, 1);
    EXPECT_TRUE(v.bounds.exact);
}

TEST(DegenerationExamples, ToricBounds) {
    ToricBound b = ci_toric_lower_bound({2, {7}}, {{3}, {3}});
    EXPECT_EQ(b.a, (std::vector<Integer>{3, 3}));
    EXPECT_EQ(b.b, (std::vector<Integer>{7, 4}));
    // Ratios 7/4 and 4/1; the chain (7,3) does better.
    EXPECT_EQ(b.bound, Rational(7, 4));
    EXPECT_GT(optimize_chain(2, 7).bound, b.bound);

    std::vector<unsigned> split{1, 1};
    CanonicalExponents two = canonical_exponents({2, {2, 2}}, 2, split);
    ToricBound tb = ci_toric_lower_bound(two.reduced, two.exponents);
    EXPECT_EQ(tb.bound, 2);
    EXPECT_EQ(tb.a, (std::vector<Integer>{2, 1}));
    EXPECT_EQ(tb.b, (std::vector<Integer>{4, 2}));

    std::vector<unsigned> whole{3};
    CanonicalExponents one = canonical_exponents({3, {8}}, 1, whole);
    for (const auto& row : one.exponents)
        for (const auto& x : row)
            EXPECT_EQ(x, 0);
    EXPECT_EQ(ci_toric_lower_bound(one.reduced, one.exponents).bound, 1);
}

TEST(DegenerationExamples, Roots) {
    EXPECT_EQ(integer_nth_root_floor(27, 3), 3);
    EXPECT_EQ(integer_nth_root_floor(22, 3), 2);
    EXPECT_EQ(integer_nth_root_floor(make_rational(8, 2), 2), 2);
}

TEST(DegenerationExamples, MultipointWithSpareDegree) {
    std::vector<Integer> m{1, 1};
    MultipointBound b = multipoint_hypersurface_bound(2, 3, m);
    EXPECT_EQ(b.floor, 1);
    EXPECT_EQ(b.split, (std::vector<Integer>{2, 1}));
    EXPECT_EQ(b.upper, BoundValue::root(make_rational(3, 2), 2));
    EXPECT_FALSE(b.exact);
}

TEST(DegenerationExamples, FanoWitnesses) {
    FanoValue quartic = ci_fano_exact_value({3, {4}});
    EXPECT_EQ(quartic.value, Rational(4, 3));
    ASSERT_TRUE(quartic.curve.has_value());
    EXPECT_EQ(quartic.curve->degree, 8);
    EXPECT_EQ(quartic.curve->multiplicity, 6);
    EXPECT_EQ(ci_fano_exact_value({3, {2, 3}}).value, Rational(3, 2));
    EXPECT_EQ(ci_fano_exact_value({3, {2, 2, 2}}).value, 2);
}

TEST(DegenerationExamples, CombineCertificates) {
    auto leaf = [](Integer last) {
        NefCertificate c;
        c.kind = NefCertificate::Kind::Reference;
        c.descriptor = {3, {2, 3, last}};
        c.weights = {1};
        c.bound = 1;
        c.citation = "weight-one leaf";
        return c;
    };
    NefCertificate both = combine_nef_certificates(leaf(1), leaf(1));
    EXPECT_EQ(both.descriptor.degrees, (std::vector<Integer>{2, 3, 2}));
    EXPECT_EQ(both.weights, (std::vector<Integer>{1, 1}));

    NefCertificate shorter = leaf(1);
    shorter.descriptor.degrees = {2, 1};
    EXPECT_THROW(combine_nef_certificates(leaf(1), shorter), Error);
}

TEST(DegenerationExamples, TableRows) {
    auto rows = fano_table();
    ASSERT_EQ(rows.size(), 17u);
    EXPECT_EQ(rows[6].no, 7);
    EXPECT_EQ(rows[6].value, 2);
    EXPECT_EQ(rows[6].verification, FanoRow::Verification::Reference);
    EXPECT_EQ(rows[10].no, 11);
    EXPECT_EQ(rows[10].verification, FanoRow::Verification::Computed);
    EXPECT_EQ(rows[10].computed, Rational(2));
    EXPECT_EQ(rows[0].computed, Rational(6, 5));
}
