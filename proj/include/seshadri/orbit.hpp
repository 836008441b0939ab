#pragma once

// Bounds at a point of the orbit O_σ attached to a face σ of P: the minimum
// of the interior value of σ (as a polytope in its own lattice) and the
// shortest edge at the image vertex of σ in the quotient by the span of σ.

#include "seshadri/estimator.hpp"
#include "seshadri/polytope.hpp"

#include <optional>
#include <vector>

namespace seshadri {

struct OrbitReport {
    Face face;
    BoundReport bounds;
    /// Shortest quotient edge s(P';v'); unset for the open orbit.
    std::optional<Rational> edge_bound;
    /// Interior report of the face polytope; unset for vertices and for P.
    std::optional<BoundReport> face_report;
};

/// `face` may be P itself (see LatticePolytope::whole).
OrbitReport bound_at_orbit(const LatticePolytope& p, const Face& face, const SearchStrategy& strategy);

/// One report per proper face, then one for P.
std::vector<OrbitReport> orbit_profile(const LatticePolytope& p, const SearchStrategy& strategy);

} // namespace seshadri
