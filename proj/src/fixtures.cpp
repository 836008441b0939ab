#include "seshadri/fixtures.hpp"

#include "seshadri/error.hpp"

namespace seshadri {

namespace {

constexpr std::string_view kFixtures = R"json([
  {"name": "triangle_projection_image", "group": "toric", "kind": "functional_image",
   "input": {"polytope": {"rank": 2, "vertices": [["1","0"],["0","1"],["-1","-1"]]}, "w": ["0","1"]},
   "expected": {"lo": "-1", "hi": "1"}},
  {"name": "triangle_slice_at_zero", "group": "toric", "kind": "slice",
   "input": {"polytope": {"rank": 2, "vertices": [["1","0"],["0","1"],["-1","-1"]]}, "w": ["0","1"], "t": "0"},
   "expected": {"vertices": [["-1/2"],["1"]], "degenerate": false}},
  {"name": "triangle_slice_length", "group": "toric", "kind": "lattice_length",
   "input": {"points": [["-1/2"],["1"]]},
   "expected": {"length": "3/2"}},
  {"name": "triangle_interior", "group": "toric", "kind": "estimate_interior",
   "input": {"polytope": {"rank": 2, "vertices": [["1","0"],["0","1"],["-1","-1"]]}, "box": 1},
   "expected": {"lower": "3/2", "exact": false, "w": ["0","1"], "t": "0", "width": "2"}},
  {"name": "triangle_certificate", "group": "toric", "kind": "verify_certificate",
   "input": {"polytope": {"rank": 2, "vertices": [["1","0"],["0","1"],["-1","-1"]]},
             "certificate": {"type": "projection", "w": ["0","1"], "t": "0", "width": "2",
                             "child": {"type": "base", "length": "3/2"}}},
   "expected": {"value": "3/2"}},
  {"name": "product_of_lines_2_5", "group": "toric", "kind": "estimate_interior",
   "input": {"polytope": {"rank": 2, "vertices": [["0","0"],["2","0"],["0","5"],["2","5"]]}},
   "expected": {"lower": "2", "upper": "2", "exact": true}},
  {"name": "simplex_closed_form_sextic", "group": "toric", "kind": "simplex_lower_bound",
   "input": {"a": ["1/3","1/3","1/3"]},
   "expected": {"value": "6/5"}},
  {"name": "triangle_quotient_length", "group": "orbit", "kind": "quotient_length",
   "input": {"polytope": {"rank": 2, "vertices": [["1","0"],["0","1"],["-1","-1"]]}, "generators": [["-1","1"]]},
   "expected": {"image_length": "3"}},
  {"name": "triangle_edge_orbit", "group": "orbit", "kind": "bound_at_orbit",
   "input": {"polytope": {"rank": 2, "vertices": [["1","0"],["0","1"],["-1","-1"]]}, "face": [["1","0"],["0","1"]]},
   "expected": {"lower": "1", "upper": "1", "exact": true, "edge_bound": "3"}},
  {"name": "triangle_vertex_orbit", "group": "orbit", "kind": "bound_at_orbit",
   "input": {"polytope": {"rank": 2, "vertices": [["1","0"],["0","1"],["-1","-1"]]}, "face": [["1","0"]]},
   "expected": {"lower": "1", "upper": "1", "exact": true}},
  {"name": "triangle_boundary_profile", "group": "orbit", "kind": "orbit_profile",
   "input": {"polytope": {"rank": 2, "vertices": [["1","0"],["0","1"],["-1","-1"]]}},
   "expected": {"proper_face_values": ["1","1","1","1","1","1"], "all_proper_exact": true}},
  {"name": "ci_octic_canonical", "group": "ci", "kind": "ci_toric_lower_bound",
   "input": {"n": 3, "degrees": ["8"], "exponents": [["4"],["2"],["1"]]},
   "expected": {"bound": "2", "a": ["4","2","1"], "b": ["8","4","2"]}},
  {"name": "ci_quadric_cubic_exponents", "group": "ci", "kind": "ci_toric_lower_bound",
   "input": {"n": 3, "degrees": ["2","3"], "exponents": [["1","0"],["0","1"],["0","1"]]},
   "expected": {"bound": "3/2", "a": ["3","1","1"], "b": ["6","3","2"]}},
  {"name": "ci_quartic_threefold", "group": "ci", "kind": "ci_fano_exact_value",
   "input": {"n": 3, "degrees": ["4"]},
   "expected": {"value": "4/3", "curve_degree": "8", "curve_multiplicity": "6"}},
  {"name": "ci_quadric_cubic_threefold", "group": "ci", "kind": "ci_fano_exact_value",
   "input": {"n": 3, "degrees": ["2","3"]},
   "expected": {"value": "3/2"}},
  {"name": "ci_three_quadrics_threefold", "group": "ci", "kind": "ci_fano_exact_value",
   "input": {"n": 3, "degrees": ["2","2","2"]},
   "expected": {"value": "2"}},
  {"name": "chain_plane_septic", "group": "hypersurface", "kind": "optimize_chain",
   "input": {"n": 2, "d": "7"},
   "expected": {"chain": ["7","3"], "bound": "7/3"}},
  {"name": "chain_threefold_22", "group": "hypersurface", "kind": "optimize_chain",
   "input": {"n": 3, "d": "22"},
   "expected": {"chain": ["22","8","3"], "bound": "8/3"}},
  {"name": "hypersurface_threefold_22", "group": "hypersurface", "kind": "hypersurface",
   "input": {"n": 3, "d": "22", "weights": ["1"]},
   "expected": {"floor": "2", "lower": "8/3", "upper": {"root": {"radicand": "22", "index": 3}}}},
  {"name": "fano_sextic_polytope", "group": "fano", "kind": "estimate_interior",
   "input": {"polytope": {"rank": 3, "vertices": [["1","0","0"],["0","1","0"],["0","0","1"],["-1/3","-1/3","-1/3"]]}},
   "expected": {"lower": "6/5"}},
  {"name": "fano_row_11_polytope", "group": "fano", "kind": "estimate_interior",
   "input": {"polytope": {"rank": 3, "vertices": [["0","0","0"],["2","0","0"],["0","2","0"],["-2","-2","2"]]}},
   "expected": {"lower": "2", "upper": "2", "exact": true}},
  {"name": "fano_row_17_polytope", "group": "fano", "kind": "estimate_interior",
   "input": {"polytope": {"rank": 3, "vertices": [["-1","-1","-1"],["3","-1","-1"],["-1","3","-1"],["-1","-1","3"]]}},
   "expected": {"lower": "4", "upper": "4", "exact": true}},
  {"name": "fano_table_values", "group": "fano", "kind": "fano_table",
   "input": {},
   "expected": {"values": ["6/5","4/3","3/2","2","2","2","2","2","2","2","2","2","2","2","2","3","4"],
                "computed": {"1": "6/5", "2": "4/3", "3": "3/2", "4": "2", "11": "2",
                             "13": "2", "14": "2", "16": "3", "17": "4"}}}
])json";

const Json& in(const Json& f, const char* key) {
    const Json& input = f.at("input");
    if (!input.contains(key))
        fail(ErrorCode::Parse, std::string("fixture input lacks \"") + key + "\"");
    return input.at(key);
}

std::vector<Integer> integer_list(const Json& a, const std::string& where) {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(integer_from_json(a[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

CIDescriptor descriptor(const Json& f) {
    return CIDescriptor{in(f, "n").get<unsigned>(), integer_list(in(f, "degrees"), "degrees")};
}

SearchStrategy strategy_for(const Json& f, const LatticePolytope& p) {
    SearchStrategy s = SearchStrategy::defaults_for_rank(p.rank());
    const Json& input = f.at("input");
    if (input.contains("box")) {
        int h = input.at("box").get<int>();
        if (h == 0) {
            s.source = SearchStrategy::Source::FacetNormals;
        } else {
            s.source = SearchStrategy::Source::FacetNormalsPlusBox;
            s.box_height = h;
        }
    }
    return s;
}

Face face_from_points(const LatticePolytope& p, const Json& pts) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Rational> x;
        for (std::size_t c = 0; c < pts[i].size(); ++c)
            x.push_back(rational_from_json(pts[i][c], "face"));
        auto k = p.index_of(x);
        if (!k)
            fail(ErrorCode::InvalidArgument, "face point is not a vertex of the polytope");
        idx.push_back(*k);
    }
    return p.face_with_vertices(idx);
}

// JSON equality that ignores the order of object keys.
bool same(const Json& a, const Json& b) {
    return nlohmann::json::parse(a.dump()) == nlohmann::json::parse(b.dump());
}

} // namespace

std::string_view builtin_fixtures() {
    return kFixtures;
}

Json evaluate_fixture(const Json& f) {
    const std::string kind = f.at("kind").get<std::string>();
    if (kind == "functional_image") {
        LatticePolytope p = polytope_from_json(in(f, "polytope"));
        Interval iv = functional_image(p, integer_list(in(f, "w"), "w"));
        return Json{{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}};
    }
    if (kind == "slice") {
        LatticePolytope p = polytope_from_json(in(f, "polytope"));
        Slice s = slice(p, integer_list(in(f, "w"), "w"), rational_from_json(in(f, "t"), "t"));
        Json out = polytope_to_json(s.polytope);
        return Json{{"vertices", out["vertices"]}, {"degenerate", s.degenerate}};
    }
    if (kind == "lattice_length") {
        const Json& pts = in(f, "points");
        std::vector<RationalPoint> v;
        for (const auto& x : pts) {
            RationalPoint q;
            for (const auto& c : x)
                q.push_back(rational_from_json(c, "points"));
            v.push_back(std::move(q));
        }
        if (v.size() != 2)
            fail(ErrorCode::Parse, "lattice_length needs two points");
        return Json{{"length", to_json(lattice_length(v[0], v[1]))}};
    }
    if (kind == "estimate_interior") {
        LatticePolytope p = polytope_from_json(in(f, "polytope"));
        BoundReport r = estimate_interior(p, strategy_for(f, p));
        Json out{{"lower", to_json(r.lower)}, {"upper", to_json(r.upper)}, {"exact", r.exact}};
        if (const auto* proj = std::get_if<Projection>(&r.lower_cert->node)) {
            out["w"] = to_json(std::span<const Integer>(proj->w));
            out["t"] = to_json(proj->t);
            out["width"] = to_json(proj->width);
        }
        return out;
    }
    if (kind == "verify_certificate") {
        LatticePolytope p = polytope_from_json(in(f, "polytope"));
        CertificatePtr c = certificate_from_json(in(f, "certificate"));
        return Json{{"value", to_json(verify_certificate(p, *c))}};
    }
    if (kind == "simplex_lower_bound") {
        std::vector<Rational> a;
        for (const auto& x : in(f, "a"))
            a.push_back(rational_from_json(x, "a"));
        return Json{{"value", to_json(simplex_lower_bound(a))}};
    }
    if (kind == "quotient_length") {
        LatticePolytope p = polytope_from_json(in(f, "polytope"));
        std::vector<IntVector> gens;
        for (const auto& g : in(f, "generators"))
            gens.push_back(integer_list(g, "generators"));
        QuotientMap q = quotient_projection(gens, p.rank());
        std::vector<RationalPoint> image;
        for (const auto& v : p.vertices())
            image.push_back(q.apply(std::span<const Rational>(v)));
        LatticePolytope seg = LatticePolytope::from_points(std::span<const RationalPoint>(image));
        return Json{{"image_length", to_json(lattice_length(seg))}};
    }
    if (kind == "bound_at_orbit") {
        LatticePolytope p = polytope_from_json(in(f, "polytope"));
        OrbitReport r = bound_at_orbit(p, face_from_points(p, in(f, "face")), strategy_for(f, p));
        Json out{{"lower", to_json(r.bounds.lower)}, {"upper", to_json(r.bounds.upper)}, {"exact", r.bounds.exact}};
        out["edge_bound"] = r.edge_bound ? to_json(*r.edge_bound) : Json(nullptr);
        return out;
    }
    if (kind == "orbit_profile") {
        LatticePolytope p = polytope_from_json(in(f, "polytope"));
        Json values = Json::array();
        bool all_exact = true;
        for (const auto& r : orbit_profile(p, strategy_for(f, p))) {
            if (r.face.dim == p.dim())
                continue;
            values.push_back(to_json(r.bounds.lower));
            all_exact = all_exact && r.bounds.exact;
        }
        return Json{{"proper_face_values", values}, {"all_proper_exact", all_exact}};
    }
    if (kind == "ci_toric_lower_bound") {
        ExponentMatrix e;
        for (const auto& row : in(f, "exponents"))
            e.push_back(integer_list(row, "exponents"));
        ToricBound tb = ci_toric_lower_bound(descriptor(f), e);
        return Json{{"bound", to_json(tb.bound)},
                    {"a", to_json(std::span<const Integer>(tb.a))},
                    {"b", to_json(std::span<const Integer>(tb.b))}};
    }
    if (kind == "ci_fano_exact_value") {
        FanoValue fv = ci_fano_exact_value(descriptor(f));
        Json out{{"value", to_json(fv.value)}};
        if (fv.curve) {
            out["curve_degree"] = to_json(fv.curve->degree);
            out["curve_multiplicity"] = to_json(fv.curve->multiplicity);
        }
        if (fv.toric_bound)
            out["toric_bound"] = to_json(*fv.toric_bound);
        return out;
    }
    if (kind == "optimize_chain") {
        Chain c = optimize_chain(in(f, "n").get<unsigned>(), integer_from_json(in(f, "d"), "d"));
        return Json{{"chain", to_json(std::span<const Integer>(c.c))}, {"bound", to_json(c.bound)}};
    }
    if (kind == "hypersurface") {
        unsigned n = in(f, "n").get<unsigned>();
        Integer d = integer_from_json(in(f, "d"), "d");
        std::vector<Integer> m = integer_list(in(f, "weights"), "weights");
        return to_json(multipoint_hypersurface_bound(n, d, m), n, d, m);
    }
    if (kind == "fano_table") {
        Json values = Json::array();
        Json computed = Json::object();
        for (const auto& r : fano_table()) {
            values.push_back(to_json(r.value));
            if (r.computed)
                computed[std::to_string(r.no)] = to_json(*r.computed);
        }
        return Json{{"values", values}, {"computed", computed}};
    }
    fail(ErrorCode::Parse, "unknown fixture kind \"" + kind + "\"");
}

std::vector<FixtureResult> run_fixtures(const Json& fixtures, std::string_view filter) {
    require(fixtures.is_array(), ErrorCode::Parse, "fixtures must be a JSON array");
    std::vector<FixtureResult> out;
    for (const auto& f : fixtures) {
        FixtureResult r;
        r.name = f.value("name", std::string("(unnamed)"));
        r.group = f.value("group", std::string());
        if (!filter.empty() && r.group != filter && r.name.find(filter) == std::string::npos)
            continue;
        r.expected = f.value("expected", Json::object());
        try {
            r.actual = evaluate_fixture(f);
            r.passed = r.expected.is_object();
            for (const auto& [key, value] : r.expected.items())
                if (!r.actual.contains(key) || !same(r.actual[key], value))
                    r.passed = false;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace seshadri
