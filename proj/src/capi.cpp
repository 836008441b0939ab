#include "seshadri/seshadri.h"

#include "seshadri/error.hpp"
#include "seshadri/fixtures.hpp"
#include "seshadri/serialize.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>

using namespace seshadri;

struct sesh_polytope {
    LatticePolytope polytope;
};

struct sesh_strategy {
    std::optional<int> box;
    std::optional<int> max_depth;
    std::optional<bool> memoize;
    std::optional<unsigned> threads;

    SearchStrategy materialize(std::size_t rank) const {
        SearchStrategy s = SearchStrategy::defaults_for_rank(rank);
        if (box) {
            if (*box == 0) {
                s.source = SearchStrategy::Source::FacetNormals;
            } else {
                s.source = SearchStrategy::Source::FacetNormalsPlusBox;
                s.box_height = *box;
            }
        }
        if (max_depth)
            s.max_depth = *max_depth;
        if (memoize)
            s.memoize = *memoize;
        if (threads)
            s.threads = *threads;
        return s;
    }
};

namespace {

thread_local std::string last_error;

sesh_status status_of(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return SESH_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return SESH_ERR_PARSE;
    case ErrorCode::DimensionMismatch: return SESH_ERR_DIMENSION_MISMATCH;
    case ErrorCode::DegenerateSlice: return SESH_ERR_DEGENERATE_SLICE;
    case ErrorCode::ValueMismatch: return SESH_ERR_VALUE_MISMATCH;
    case ErrorCode::NotFano: return SESH_ERR_NOT_FANO;
    case ErrorCode::Unsupported: return SESH_ERR_UNSUPPORTED;
    }
    return SESH_ERR_INTERNAL;
}

// Runs body, converting every exception into a status and a message.
template <class F>
sesh_status guarded(F&& body) {
    last_error.clear();
    try {
        body();
        return SESH_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.code());
    } catch (const nlohmann::json::exception& e) {
        last_error = e.what();
        return SESH_ERR_PARSE;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return SESH_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SESH_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return SESH_ERR_INTERNAL;
    }
}

char* copy_out(const std::string& s) {
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf)
        throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

void emit(char** out, const Json& j) {
    *out = copy_out(j.dump());
}

void need(const void* ptr, const char* what) {
    if (!ptr)
        fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

SearchStrategy strategy_for(const sesh_strategy* s, const LatticePolytope& p) {
    return s ? s->materialize(p.rank()) : SearchStrategy::defaults_for_rank(p.rank());
}

std::vector<Integer> integers(const char* const* items, std::size_t count, const char* what) {
    if (count)
        need(items, what);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < count; ++i) {
        need(items[i], what);
        out.push_back(parse_integer(items[i]));
    }
    return out;
}

} // namespace

extern "C" {

const char* sesh_version(void) {
    return "1.0.0";
}

const char* sesh_status_name(sesh_status status) {
    switch (status) {
    case SESH_OK: return "ok";
    case SESH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SESH_ERR_PARSE: return "parse error";
    case SESH_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case SESH_ERR_DEGENERATE_SLICE: return "degenerate slice";
    case SESH_ERR_VALUE_MISMATCH: return "value mismatch";
    case SESH_ERR_NOT_FANO: return "not Fano";
    case SESH_ERR_UNSUPPORTED: return "unsupported";
    case SESH_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* sesh_last_error(void) {
    return last_error.c_str();
}

void sesh_string_free(char* s) {
    std::free(s);
}

sesh_status sesh_polytope_from_json(const char* json, sesh_polytope** out) {
    return guarded([&] {
        need(json, "json");
        need(out, "out");
        *out = new sesh_polytope{polytope_from_json(parse_json(json))};
    });
}

sesh_status sesh_polytope_to_json(const sesh_polytope* p, char** out) {
    return guarded([&] {
        need(p, "polytope");
        need(out, "out");
        emit(out, polytope_to_json(p->polytope));
    });
}

size_t sesh_polytope_rank(const sesh_polytope* p) {
    return p ? p->polytope.rank() : 0;
}

size_t sesh_polytope_vertex_count(const sesh_polytope* p) {
    return p ? p->polytope.vertex_count() : 0;
}

void sesh_polytope_free(sesh_polytope* p) {
    delete p;
}

sesh_status sesh_strategy_new(sesh_strategy** out) {
    return guarded([&] {
        need(out, "out");
        *out = new sesh_strategy{};
    });
}

void sesh_strategy_free(sesh_strategy* s) {
    delete s;
}

sesh_status sesh_strategy_set_box(sesh_strategy* s, int height) {
    return guarded([&] {
        need(s, "strategy");
        require(height >= 0, ErrorCode::InvalidArgument, "box height must be non-negative");
        s->box = height;
    });
}

sesh_status sesh_strategy_set_max_depth(sesh_strategy* s, int depth) {
    return guarded([&] {
        need(s, "strategy");
        require(depth >= 0, ErrorCode::InvalidArgument, "max depth must be non-negative");
        s->max_depth = depth;
    });
}

sesh_status sesh_strategy_set_memoize(sesh_strategy* s, int enabled) {
    return guarded([&] {
        need(s, "strategy");
        s->memoize = enabled != 0;
    });
}

sesh_status sesh_strategy_set_threads(sesh_strategy* s, unsigned threads) {
    return guarded([&] {
        need(s, "strategy");
        require(threads >= 1, ErrorCode::InvalidArgument, "thread count must be positive");
        s->threads = threads;
    });
}

sesh_status sesh_estimate_interior(const sesh_polytope* p, const sesh_strategy* s, char** out) {
    return guarded([&] {
        need(p, "polytope");
        need(out, "out");
        emit(out, to_json(estimate_interior(p->polytope, strategy_for(s, p->polytope))));
    });
}

sesh_status sesh_bound_at_face(const sesh_polytope* p, const size_t* vertex_indices, size_t count,
                               const sesh_strategy* s, char** out) {
    return guarded([&] {
        need(p, "polytope");
        need(out, "out");
        require(count > 0, ErrorCode::InvalidArgument, "face needs at least one vertex index");
        need(vertex_indices, "vertex_indices");
        std::vector<std::size_t> idx(vertex_indices, vertex_indices + count);
        for (std::size_t i : idx)
            if (i >= p->polytope.vertex_count())
                fail(ErrorCode::InvalidArgument, "vertex index " + std::to_string(i) + " out of range");
        Face face = p->polytope.face_with_vertices(idx);
        emit(out, to_json(bound_at_orbit(p->polytope, face, strategy_for(s, p->polytope))));
    });
}

sesh_status sesh_orbit_profile(const sesh_polytope* p, const sesh_strategy* s, char** out) {
    return guarded([&] {
        need(p, "polytope");
        need(out, "out");
        auto profile = orbit_profile(p->polytope, strategy_for(s, p->polytope));
        emit(out, orbit_profile_to_json(profile));
    });
}

sesh_status sesh_verify_certificate(const sesh_polytope* p, const char* certificate_json, char** out) {
    return guarded([&] {
        need(p, "polytope");
        need(certificate_json, "certificate_json");
        need(out, "out");
        CertificatePtr cert = certificate_from_json(parse_json(certificate_json));
        emit(out, Json{{"value", to_json(verify_certificate(p->polytope, *cert))}});
    });
}

sesh_status sesh_hypersurface(unsigned n, const char* degree, const char* const* weights, size_t count,
                              char** out) {
    return guarded([&] {
        need(degree, "degree");
        need(out, "out");
        Integer d = parse_integer(degree);
        std::vector<Integer> m = integers(weights, count, "weights");
        emit(out, to_json(multipoint_hypersurface_bound(n, d, m), n, d, m));
    });
}

sesh_status sesh_complete_intersection(unsigned n, const char* const* degrees, size_t count, char** out) {
    return guarded([&] {
        need(out, "out");
        emit(out, complete_intersection_to_json(CIDescriptor{n, integers(degrees, count, "degrees")}));
    });
}

sesh_status sesh_fano_table(sesh_format format, char** out) {
    return guarded([&] {
        need(out, "out");
        auto rows = fano_table();
        if (format == SESH_FORMAT_TEXT)
            *out = copy_out(fano_table_to_text(rows));
        else
            emit(out, fano_table_to_json(rows));
    });
}

sesh_status sesh_builtin_fixtures(char** out) {
    return guarded([&] {
        need(out, "out");
        *out = copy_out(std::string(builtin_fixtures()));
    });
}

sesh_status sesh_verify_fixtures(const char* fixtures_json, const char* filter, char** out, int* all_passed) {
    return guarded([&] {
        need(out, "out");
        need(all_passed, "all_passed");
        Json fixtures = parse_json(fixtures_json ? std::string_view(fixtures_json) : builtin_fixtures());
        auto results = run_fixtures(fixtures, filter ? std::string_view(filter) : std::string_view());
        Json list = Json::array();
        std::size_t passed = 0;
        for (const auto& r : results) {
            Json item{{"name", r.name}, {"group", r.group}, {"passed", r.passed}};
            if (!r.passed) {
                item["expected"] = r.expected;
                item["actual"] = r.actual;
                if (!r.error.empty())
                    item["error"] = r.error;
            }
            passed += r.passed ? 1 : 0;
            list.push_back(std::move(item));
        }
        *all_passed = passed == results.size() ? 1 : 0;
        emit(out, Json{{"total", results.size()},
                       {"passed", passed},
                       {"failed", results.size() - passed},
                       {"results", list}});
    });
}

} // extern "C"
