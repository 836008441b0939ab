#include "seshadri/serialize.hpp"

#include "seshadri/error.hpp"

#include <algorithm>
#include <sstream>

namespace seshadri {

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::string msg = e.what();
        if (auto pos = msg.find("] "); pos != std::string::npos)
            msg = msg.substr(pos + 2);
        if (msg.rfind("parse error ", 0) == 0)
            msg = msg.substr(12);
        fail(ErrorCode::Parse, msg);
    }
}

namespace {

[[noreturn]] void bad_field(const std::string& where, const std::string& what) {
    fail(ErrorCode::Parse, where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object())
        bad_field(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        bad_field(where, std::string("missing field \"") + key + "\"");
    return *it;
}

std::string child_path(const std::string& where, const char* key) {
    return where.empty() ? std::string(key) : where + "." + key;
}

std::string index_path(const std::string& where, std::size_t i) {
    return where + "[" + std::to_string(i) + "]";
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
    const Json& a = field(j, key, where);
    if (!a.is_array())
        bad_field(child_path(where, key), "expected an array");
    return a;
}

std::vector<Rational> rationals_from_json(const Json& a, const std::string& where) {
    if (!a.is_array())
        bad_field(where, "expected an array");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(rational_from_json(a[i], index_path(where, i)));
    return out;
}

std::vector<Integer> integers_from_json(const Json& a, const std::string& where) {
    if (!a.is_array())
        bad_field(where, "expected an array");
    std::vector<Integer> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(integer_from_json(a[i], index_path(where, i)));
    return out;
}

Json faces_to_json(const std::vector<std::size_t>& indices) {
    Json a = Json::array();
    for (auto i : indices)
        a.push_back(i);
    return a;
}

Json witness_to_json(const UpperWitness& w) {
    switch (w.kind) {
    case UpperWitness::Kind::Width:
        return Json{{"type", "width"}, {"w", to_json(std::span<const Integer>(w.w))}};
    case UpperWitness::Kind::Volume:
        return Json{{"type", "volume"}, {"normalized_volume", to_json(w.volume)}};
    case UpperWitness::Kind::EdgeLength:
        return Json{{"type", "edge_length"}};
    }
    return nullptr;
}

} // namespace

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer())
        return Rational(j.dump());
    if (!j.is_string())
        bad_field(where, "expected a rational string such as \"3/2\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        bad_field(where, e.what());
    }
}

Integer integer_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer())
        return Integer(j.dump());
    if (!j.is_string())
        bad_field(where, "expected an integer string");
    try {
        return parse_integer(j.get<std::string>());
    } catch (const Error& e) {
        bad_field(where, e.what());
    }
}

Json to_json(const Rational& q) {
    return to_string(q);
}

Json to_json(const Integer& z) {
    return to_string(z);
}

Json to_json(std::span<const Rational> v) {
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

Json to_json(std::span<const Integer> v) {
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

Json to_json(const BoundValue& v) {
    if (v.kind == BoundValue::Kind::Rational)
        return to_json(v.value);
    return Json{{"root", {{"radicand", to_string(v.value)}, {"index", v.index}}}};
}

BoundValue bound_value_from_json(const Json& j, const std::string& where) {
    if (j.is_object() && j.contains("root")) {
        const Json& r = j["root"];
        const std::string rw = child_path(where, "root");
        Rational radicand = rational_from_json(field(r, "radicand", rw), child_path(rw, "radicand"));
        const Json& idx = field(r, "index", rw);
        if (!idx.is_number_unsigned() || idx.get<unsigned long>() < 1)
            bad_field(child_path(rw, "index"), "expected a positive integer");
        return BoundValue::root(radicand, idx.get<unsigned long>());
    }
    return BoundValue::rational(rational_from_json(j, where));
}

Json polytope_to_json(const LatticePolytope& p) {
    Json verts = Json::array();
    for (const auto& v : p.vertices())
        verts.push_back(to_json(std::span<const Rational>(v)));
    return Json{{"rank", p.rank()}, {"vertices", verts}};
}

LatticePolytope polytope_from_json(const Json& j) {
    const Json& rank = field(j, "rank", "polytope");
    if (!rank.is_number_unsigned() || rank.get<std::size_t>() < 1)
        bad_field("rank", "expected a positive integer");
    const std::size_t n = rank.get<std::size_t>();
    const Json& verts = array_field(j, "vertices", "");
    if (verts.empty())
        bad_field("vertices", "expected at least one vertex");
    std::vector<RationalPoint> pts;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const std::string where = index_path("vertices", i);
        RationalPoint p = rationals_from_json(verts[i], where);
        if (p.size() != n)
            fail(ErrorCode::DimensionMismatch,
                 where + ": expected " + std::to_string(n) + " coordinates, got " + std::to_string(p.size()));
        pts.push_back(std::move(p));
    }
    return LatticePolytope::from_points(std::span<const RationalPoint>(pts));
}

Json certificate_to_json(const Certificate& cert) {
    return std::visit(
        [](const auto& n) -> Json {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, BaseSegment>) {
                return Json{{"type", "base"}, {"length", to_json(n.length)}};
            } else if constexpr (std::is_same_v<T, Projection>) {
                return Json{{"type", "projection"},
                            {"w", to_json(std::span<const Integer>(n.w))},
                            {"t", to_json(n.t)},
                            {"width", to_json(n.width)},
                            {"child", certificate_to_json(*n.child)}};
            } else {
                return Json{{"type", "simplex"}, {"a", to_json(std::span<const Rational>(n.a))}, {"value", to_json(n.value)}};
            }
        },
        cert.node);
}

namespace {

CertificatePtr certificate_from_json(const Json& j, const std::string& where) {
    const Json& type = field(j, "type", where);
    if (!type.is_string())
        bad_field(child_path(where, "type"), "expected a string");
    const std::string t = type.get<std::string>();
    if (t == "base")
        return make_base(rational_from_json(field(j, "length", where), child_path(where, "length")));
    if (t == "projection") {
        Functional w = integers_from_json(field(j, "w", where), child_path(where, "w"));
        Rational tt = rational_from_json(field(j, "t", where), child_path(where, "t"));
        Rational width = rational_from_json(field(j, "width", where), child_path(where, "width"));
        CertificatePtr child = certificate_from_json(field(j, "child", where), child_path(where, "child"));
        return make_projection(std::move(w), std::move(tt), std::move(width), std::move(child));
    }
    if (t == "simplex") {
        std::vector<Rational> a = rationals_from_json(field(j, "a", where), child_path(where, "a"));
        Rational v = rational_from_json(field(j, "value", where), child_path(where, "value"));
        return make_simplex(std::move(a), std::move(v));
    }
    bad_field(child_path(where, "type"), "unknown certificate type \"" + t + "\"");
}

} // namespace

CertificatePtr certificate_from_json(const Json& j) {
    return certificate_from_json(j, "certificate");
}

Json to_json(const BoundReport& r) {
    Json out{{"lower", to_json(r.lower)}, {"upper", to_json(r.upper)}, {"exact", r.exact}};
    out["lower_certificate"] = r.lower_cert ? certificate_to_json(*r.lower_cert) : Json(nullptr);
    out["upper_witness"] = witness_to_json(r.upper_witness);
    return out;
}

Json to_json(const OrbitReport& r) {
    Json out{{"face_vertex_indices", faces_to_json(r.face.vertex_indices)},
             {"dim", r.face.dim},
             {"lower", to_json(r.bounds.lower)},
             {"upper", to_json(r.bounds.upper)},
             {"exact", r.bounds.exact}};
    out["edge_bound"] = r.edge_bound ? to_json(*r.edge_bound) : Json(nullptr);
    out["lower_certificate"] = r.bounds.lower_cert ? certificate_to_json(*r.bounds.lower_cert) : Json(nullptr);
    out["upper_witness"] = witness_to_json(r.bounds.upper_witness);
    if (r.face_report)
        out["face_report"] = to_json(*r.face_report);
    return out;
}

Json orbit_profile_to_json(std::span<const OrbitReport> profile) {
    Json a = Json::array();
    for (const auto& r : profile)
        a.push_back(to_json(r));
    return a;
}

Json to_json(const NefCertificate& c) {
    Json out;
    switch (c.kind) {
    case NefCertificate::Kind::Split:
        out["type"] = "split";
        break;
    case NefCertificate::Kind::Toric:
        out["type"] = "toric";
        break;
    case NefCertificate::Kind::Reference:
        out["type"] = "reference";
        break;
    }
    out["n"] = c.descriptor.n;
    out["degrees"] = to_json(std::span<const Integer>(c.descriptor.degrees));
    out["weights"] = to_json(std::span<const Integer>(c.weights));
    if (c.kind == NefCertificate::Kind::Toric) {
        if (c.chain)
            out["chain"] = to_json(std::span<const Integer>(*c.chain));
        if (c.exponents) {
            Json rows = Json::array();
            for (const auto& row : *c.exponents)
                rows.push_back(to_json(std::span<const Integer>(row)));
            out["exponents"] = rows;
        }
        out["bound"] = to_json(c.bound);
    } else if (c.kind == NefCertificate::Kind::Reference) {
        out["citation"] = c.citation;
    } else {
        Json parts = Json::array();
        for (const auto& p : c.parts)
            parts.push_back(to_json(p));
        out["parts"] = parts;
    }
    return out;
}

Json to_json(const MultipointBound& b, unsigned n, const Integer& d, std::span<const Integer> m) {
    Json out{{"n", n},
             {"d", to_json(d)},
             {"weights", to_json(m)},
             {"floor", to_json(b.floor)},
             {"lower", to_json(b.lower)},
             {"upper", to_json(b.upper)},
             {"exact", b.exact},
             {"split", to_json(std::span<const Integer>(b.split))}};
    out["certificate"] = b.certificate ? to_json(*b.certificate) : Json(nullptr);
    if (b.refinement) {
        out["chain"] = to_json(std::span<const Integer>(b.refinement->c));
        out["chain_bound"] = to_json(b.refinement->bound);
    }
    return out;
}

Json complete_intersection_to_json(const CIDescriptor& desc) {
    ExponentSearch search = best_exponents(desc);
    Integer degree = 1;
    for (const auto& d : desc.degrees)
        degree *= d;
    BoundValue upper = BoundValue::root(degree, desc.n);
    Json rows = Json::array();
    for (const auto& row : search.exponents)
        rows.push_back(to_json(std::span<const Integer>(row)));
    Json out{{"n", desc.n},
             {"degrees", to_json(std::span<const Integer>(desc.degrees))},
             {"lower", to_json(search.toric.bound)},
             {"upper", to_json(upper)},
             {"exact", compare(search.toric.bound, upper) == 0},
             {"exponents", rows},
             {"exponent_degrees", to_json(std::span<const Integer>(search.applies_to.degrees))},
             {"a", to_json(std::span<const Integer>(search.toric.a))},
             {"b", to_json(std::span<const Integer>(search.toric.b))},
             {"exhaustive", search.exhaustive}};

    Integer sum = 0;
    bool all_at_least_two = true;
    for (const auto& d : desc.degrees) {
        sum += d;
        all_at_least_two = all_at_least_two && d >= 2;
    }
    if (all_at_least_two && sum <= Integer(desc.n) + Integer(desc.degrees.size())) {
        FanoValue fv = ci_fano_exact_value(desc);
        Json fano{{"value", to_json(fv.value)}, {"covered_by_lines", fv.covered_by_lines}};
        if (fv.curve)
            fano["curve"] = {{"degree", to_json(fv.curve->degree)}, {"multiplicity", to_json(fv.curve->multiplicity)}};
        out["fano"] = fano;
    }
    return out;
}

Json fano_table_to_json(std::span<const FanoRow> rows) {
    Json a = Json::array();
    for (const auto& r : rows) {
        Json row{{"no", r.no},
                 {"index", r.index},
                 {"degree", r.degree},
                 {"degree_value", to_json(r.degree_value)},
                 {"description", r.description},
                 {"value", to_json(r.value)},
                 {"verification", r.verification == FanoRow::Verification::Computed ? "COMPUTED" : "REFERENCE"}};
        row["computed"] = r.computed ? to_json(*r.computed) : Json(nullptr);
        row["method"] = r.method;
        row["citation"] = r.citation;
        a.push_back(row);
    }
    return a;
}

namespace {

std::size_t display_width(const std::string& s) {
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

} // namespace

std::string fano_table_to_text(std::span<const FanoRow> rows) {
    std::vector<std::vector<std::string>> cells = {{"No.", "Index", "(-K)^3", "value", "verification", "description"}};
    for (const auto& r : rows)
        cells.push_back({std::to_string(r.no), std::to_string(r.index), r.degree, to_string(r.value),
                         r.verification == FanoRow::Verification::Computed ? "COMPUTED" : "REFERENCE", r.description});
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], display_width(row[c]));
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size())
                out << std::string(width[c] - display_width(row[c]) + 2, ' ');
        }
        out << '\n';
    }
    return out.str();
}

} // namespace seshadri
