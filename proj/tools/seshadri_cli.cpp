// Command-line front end. Talks to the library only through seshadri.h.
//
// Exit codes: 0 success, 1 reproduction mismatch, 2 input error,
// 3 certificate rejected, 4 internal failure.

#include "seshadri/seshadri.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kCertificateRejected = 3;
constexpr int kInternal = 4;

struct Failure {
    int code;
    std::string message;
};

struct CString {
    char* p = nullptr;
    ~CString() { sesh_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

using PolytopeHandle = std::unique_ptr<sesh_polytope, decltype(&sesh_polytope_free)>;
using StrategyHandle = std::unique_ptr<sesh_strategy, decltype(&sesh_strategy_free)>;

bool is_certificate_failure(sesh_status s) {
    return s == SESH_ERR_VALUE_MISMATCH || s == SESH_ERR_DEGENERATE_SLICE || s == SESH_ERR_DIMENSION_MISMATCH;
}

void check(sesh_status s, const std::string& context, int code = kInputError) {
    if (s == SESH_OK)
        return;
    int exit_code = s == SESH_ERR_INTERNAL ? kInternal : code;
    throw Failure{exit_code, context + ": " + sesh_status_name(s) + ": " + sesh_last_error()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Failure{kInputError, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PolytopeHandle load_polytope(const std::string& path) {
    sesh_polytope* p = nullptr;
    check(sesh_polytope_from_json(read_file(path).c_str(), &p), path);
    return PolytopeHandle(p, sesh_polytope_free);
}

// Parallelism: all hardware threads unless SESHADRI_THREADS caps it.
unsigned thread_budget() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SESHADRI_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || cap < 1)
            throw Failure{kInputError, "SESHADRI_THREADS must be a positive integer"};
        n = std::min<unsigned long>(n, static_cast<unsigned long>(cap));
    }
    return n;
}

struct StrategyOptions {
    std::optional<int> box;
    bool facet_normals_only = false;
    std::optional<int> max_depth;
    bool no_memo = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--box", box, "Height H of the box [-H,H]^n of extra projection candidates")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--facet-normals-only", facet_normals_only, "Use only facet normals as projections");
        cmd->add_option("--max-depth", max_depth, "Levels searched exhaustively before going greedy")
            ->check(CLI::PositiveNumber);
        cmd->add_flag("--no-memo", no_memo, "Disable memoization of slice searches");
    }

    StrategyHandle build() const {
        sesh_strategy* s = nullptr;
        check(sesh_strategy_new(&s), "strategy");
        StrategyHandle h(s, sesh_strategy_free);
        if (facet_normals_only)
            check(sesh_strategy_set_box(s, 0), "--facet-normals-only");
        else if (box)
            check(sesh_strategy_set_box(s, *box), "--box");
        if (max_depth)
            check(sesh_strategy_set_max_depth(s, *max_depth), "--max-depth");
        if (no_memo)
            check(sesh_strategy_set_memoize(s, 0), "--no-memo");
        check(sesh_strategy_set_threads(s, thread_budget()), "threads");
        return h;
    }
};

// Text rendering of exact values: rationals as is, roots as r^(1/k).
std::string scalar_text(const Json& v) {
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_object() && v.contains("root") && v.size() == 1) {
        const Json& r = v["root"];
        std::string radicand = r.at("radicand").get<std::string>();
        if (radicand.find('/') != std::string::npos)
            radicand = "(" + radicand + ")";
        return radicand + "^(1/" + std::to_string(r.at("index").get<int>()) + ")";
    }
    if (v.is_null())
        return "-";
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_string() || x.is_number(); })) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + scalar_text(v[i]);
        return s + ")";
    }
    return v.dump();
}

void print_text(std::ostream& os, const Json& j, const std::string& indent = "") {
    for (const auto& [key, value] : j.items()) {
        bool nested = value.is_object() && !(value.contains("root") && value.size() == 1);
        if (nested) {
            os << indent << key << ":\n";
            print_text(os, value, indent + "  ");
        } else if (value.is_array() && !value.empty() && value[0].is_object()) {
            os << indent << key << ":\n";
            for (std::size_t i = 0; i < value.size(); ++i) {
                os << indent << "  [" << i << "]\n";
                print_text(os, value[i], indent + "    ");
            }
        } else {
            os << indent << key << ": " << scalar_text(value) << "\n";
        }
    }
}

void emit(const std::string& json, const std::string& format) {
    if (format == "text")
        print_text(std::cout, Json::parse(json));
    else
        std::cout << Json::parse(json).dump(2) << "\n";
}

std::vector<std::size_t> parse_indices(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw Failure{kInputError, "--point expects \"interior\" or comma-separated vertex indices, got \"" +
                                           text + "\""};
        out.push_back(std::stoul(item));
    }
    if (out.empty())
        throw Failure{kInputError, "--point lists no vertex indices"};
    return out;
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
    std::vector<const char*> out;
    for (const auto& s : v)
        out.push_back(s.c_str());
    return out;
}

int verify_paper(const std::string& filter, const std::string& fixtures_path, bool dump, const std::string& format) {
    if (dump) {
        CString text;
        check(sesh_builtin_fixtures(&text.p), "fixtures");
        std::cout << Json::parse(text.str()).dump(2) << "\n";
        return kOk;
    }
    std::string custom = fixtures_path.empty() ? std::string() : read_file(fixtures_path);
    CString report;
    int all_passed = 0;
    check(sesh_verify_fixtures(fixtures_path.empty() ? nullptr : custom.c_str(), filter.c_str(), &report.p,
                               &all_passed),
          fixtures_path.empty() ? "fixtures" : fixtures_path);
    Json r = Json::parse(report.str());
    if (format == "text") {
        for (const auto& item : r["results"]) {
            std::cout << (item["passed"].get<bool>() ? "PASS " : "FAIL ") << item["name"].get<std::string>() << "\n";
        }
        std::cout << r["passed"] << "/" << r["total"] << " fixtures passed\n";
    } else {
        std::cout << r.dump(2) << "\n";
    }
    for (const auto& item : r["results"]) {
        if (item["passed"].get<bool>())
            continue;
        std::cerr << "FAIL " << item["name"].get<std::string>() << ": expected " << item["expected"].dump()
                  << ", got " << item["actual"].dump();
        if (item.contains("error"))
            std::cerr << " (" << item["error"].get<std::string>() << ")";
        std::cerr << "\n";
    }
    if (r["total"].get<std::size_t>() == 0) {
        std::cerr << "no fixtures matched\n";
        return kMismatch;
    }
    return all_passed ? kOk : kMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Seshadri constant bounds for toric varieties, hypersurfaces and complete intersections"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.set_version_flag("--version", std::string(sesh_version()));

    std::string polytope_path, cert_path, point = "interior";
    StrategyOptions toric_opts, profile_opts;

    auto* toric = app.add_subcommand("toric-bound", "Bounds at a point of the open orbit or of a face orbit");
    toric->add_option("polytope", polytope_path, "Polytope JSON file")->required();
    toric->add_option("--point", point, "\"interior\" or comma-separated vertex indices of a face")
        ->capture_default_str();
    toric_opts.attach(toric);

    auto* profile = app.add_subcommand("orbit-profile", "Bounds at every torus orbit");
    profile->add_option("polytope", polytope_path, "Polytope JSON file")->required();
    profile_opts.attach(profile);

    unsigned n = 0;
    std::string degree;
    std::vector<std::string> weights{"1"}, degrees;
    auto* hyper = app.add_subcommand("hypersurface", "Multi-point bound for a very general hypersurface");
    hyper->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
    hyper->add_option("--d", degree, "Degree")->required();
    hyper->add_option("--weights", weights, "Point weights m_i")->delimiter(',')->capture_default_str();

    auto* ci = app.add_subcommand("complete-intersection", "Toric lower bound for a complete intersection");
    ci->add_option("--n", n, "Dimension")->required()->check(CLI::PositiveNumber);
    ci->add_option("--degrees", degrees, "Degrees")->required()->delimiter(',');

    app.add_subcommand("fano-table", "Seshadri constants of Fano threefolds of Picard rank one");

    auto* vcert = app.add_subcommand("verify-cert", "Check a lower-bound certificate against a polytope");
    vcert->add_option("polytope", polytope_path, "Polytope JSON file")->required();
    vcert->add_option("certificate", cert_path, "Certificate JSON file")->required();

    std::string filter, fixtures_path;
    bool dump = false;
    auto* vpaper = app.add_subcommand("verify-paper", "Run the reproduction fixtures");
    vpaper->add_option("--filter", filter, "Only fixtures in this group or whose name contains this text");
    vpaper->add_option("--fixtures", fixtures_path, "Fixture file replacing the built-in set");
    vpaper->add_flag("--dump-fixtures", dump, "Print the built-in fixtures and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (toric->parsed()) {
            auto p = load_polytope(polytope_path);
            auto s = toric_opts.build();
            CString out;
            if (point == "interior") {
                check(sesh_estimate_interior(p.get(), s.get(), &out.p), polytope_path);
            } else {
                auto idx = parse_indices(point);
                check(sesh_bound_at_face(p.get(), idx.data(), idx.size(), s.get(), &out.p), polytope_path);
            }
            emit(out.str(), format);
        } else if (profile->parsed()) {
            auto p = load_polytope(polytope_path);
            auto s = profile_opts.build();
            CString out;
            check(sesh_orbit_profile(p.get(), s.get(), &out.p), polytope_path);
            emit(out.str(), format);
        } else if (hyper->parsed()) {
            auto w = c_strings(weights);
            CString out;
            check(sesh_hypersurface(n, degree.c_str(), w.data(), w.size(), &out.p), "hypersurface");
            emit(out.str(), format);
        } else if (ci->parsed()) {
            auto d = c_strings(degrees);
            CString out;
            check(sesh_complete_intersection(n, d.data(), d.size(), &out.p), "complete-intersection");
            emit(out.str(), format);
        } else if (app.got_subcommand("fano-table")) {
            CString out;
            if (format == "text") {
                check(sesh_fano_table(SESH_FORMAT_TEXT, &out.p), "fano-table");
                std::cout << out.str();
            } else {
                check(sesh_fano_table(SESH_FORMAT_JSON, &out.p), "fano-table");
                emit(out.str(), format);
            }
        } else if (vcert->parsed()) {
            auto p = load_polytope(polytope_path);
            std::string cert = read_file(cert_path);
            CString out;
            sesh_status s = sesh_verify_certificate(p.get(), cert.c_str(), &out.p);
            check(s, cert_path, is_certificate_failure(s) ? kCertificateRejected : kInputError);
            emit(out.str(), format);
        } else if (vpaper->parsed()) {
            return verify_paper(filter, fixtures_path, dump, format);
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    }
    return kOk;
}
