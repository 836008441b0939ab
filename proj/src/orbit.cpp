#include "seshadri/orbit.hpp"

#include "seshadri/error.hpp"
#include "seshadri/lattice.hpp"

namespace seshadri {

OrbitReport bound_at_orbit(const LatticePolytope& p, const Face& face, const SearchStrategy& strategy) {
    require(p.rank() >= 1 && p.full_dimensional(), ErrorCode::InvalidArgument, "polytope not full-dimensional");
    OrbitReport out;
    out.face = p.face_with_vertices(face.vertex_indices);
    const Face& sigma = out.face;

    if (sigma.dim == p.dim()) {
        out.bounds = estimate_interior(p, strategy);
        return out;
    }
    if (sigma.dim == 0) {
        // At a torus-fixed point the value is the shortest edge.
        Rational s = *min_edge_length(p, sigma.vertex_indices.front());
        out.edge_bound = s;
        out.bounds.lower = s;
        out.bounds.upper = BoundValue::rational(s);
        out.bounds.upper_witness.kind = UpperWitness::Kind::EdgeLength;
        out.bounds.exact = true;
        return out;
    }

    const RationalPoint& base = p.vertex(sigma.vertex_indices.front());
    std::vector<IntVector> gens;
    for (auto i : sigma.vertex_indices)
        if (i != sigma.vertex_indices.front())
            gens.push_back(clear_denominators(subtract(p.vertex(i), base)));
    QuotientMap q = quotient_projection(gens, p.rank());
    std::vector<RationalPoint> image;
    for (const auto& v : p.vertices())
        image.push_back(q.apply(std::span<const Rational>(v)));
    LatticePolytope quotient = LatticePolytope::from_points(std::span<const RationalPoint>(image));
    auto apex = quotient.index_of(q.apply(std::span<const Rational>(base)));
    require(apex.has_value(), ErrorCode::InvalidArgument, "face does not map to a vertex of the quotient");
    Rational s = *min_edge_length(quotient, *apex);
    out.edge_bound = s;

    BoundReport inner = estimate_interior(face_as_polytope(p, sigma), strategy);
    out.face_report = inner;

    BoundReport& b = out.bounds;
    if (inner.lower < s) {
        b.lower = inner.lower;
        b.lower_cert = inner.lower_cert;
    } else {
        b.lower = s;
    }
    if (compare(s, inner.upper) < 0) {
        b.upper = BoundValue::rational(s);
        b.upper_witness.kind = UpperWitness::Kind::EdgeLength;
    } else {
        b.upper = inner.upper;
        b.upper_witness = inner.upper_witness;
    }
    b.exact = inner.exact || s <= inner.lower;
    return out;
}

std::vector<OrbitReport> orbit_profile(const LatticePolytope& p, const SearchStrategy& strategy) {
    require(p.rank() >= 1 && p.full_dimensional(), ErrorCode::InvalidArgument, "polytope not full-dimensional");
    std::vector<OrbitReport> out;
    for (const auto& f : p.faces())
        out.push_back(bound_at_orbit(p, f, strategy));
    out.push_back(bound_at_orbit(p, p.whole(), strategy));
    return out;
}

} // namespace seshadri
