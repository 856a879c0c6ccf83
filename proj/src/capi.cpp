#include <kgraph/kgraph_c.h>

#include <kgraph/checks.hpp>

#include <cstring>

using nlohmann::json;

struct kg_skeleton {
    kgraph::Skeleton impl;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char** slot, const json& j) {
    if (slot) *slot = dup_string(j.dump());
}

kg_status from_exit_code(int code) {
    switch (code) {
        case kgraph::kExitOk: return KG_OK;
        case kgraph::kExitInvalid: return KG_INVALID_SKELETON;
        case kgraph::kExitCheckFailed: return KG_CHECK_FAILED;
        default: return KG_BAD_ARGUMENT;
    }
}

// Runs a command body, mapping exceptions onto status codes and an
// {"error": ...} report.
template <class F>
kg_status guarded(char** report_json, F body) {
    try {
        kgraph::CommandResult result = body();
        emit(report_json, result.report);
        return from_exit_code(result.exit_code);
    } catch (const kgraph::SkeletonError& e) {
        emit(report_json, json{{"error", e.what()}});
        return KG_INVALID_SKELETON;
    } catch (const std::exception& e) {
        emit(report_json, json{{"error", e.what()}});
        return KG_BAD_ARGUMENT;
    }
}

kgraph::Degree parse_bound(const kg_skeleton* sk, const char* bound) {
    if (!bound) return kgraph::Degree(std::vector<int>(static_cast<std::size_t>(sk->impl.k()), 2));
    return kgraph::Degree::parse(bound, static_cast<std::size_t>(sk->impl.k()));
}

}  // namespace

extern "C" {

kg_status kg_skeleton_from_json(const char* json_text, kg_skeleton** out, char** error_json) {
    if (!out || !json_text) {
        emit(error_json, json{{"error", "null argument"}});
        return KG_BAD_ARGUMENT;
    }
    *out = nullptr;
    try {
        auto doc = kgraph::skeleton_doc_from_string(json_text);
        *out = new kg_skeleton{kgraph::Skeleton::load(doc)};
        return KG_OK;
    } catch (const kgraph::SkeletonError& e) {
        emit(error_json, json{{"error", e.what()}});
        return KG_INVALID_SKELETON;
    } catch (const std::exception& e) {
        emit(error_json, json{{"error", e.what()}});
        return KG_BAD_ARGUMENT;
    }
}

kg_status kg_skeleton_fixture(const char* name, int m, uint64_t seed, kg_skeleton** out,
                              char** error_json) {
    if (!out || !name) {
        emit(error_json, json{{"error", "null argument"}});
        return KG_BAD_ARGUMENT;
    }
    *out = nullptr;
    try {
        auto doc = kgraph::make_fixture(name, m, seed);
        *out = new kg_skeleton{kgraph::Skeleton::load(doc)};
        return KG_OK;
    } catch (const kgraph::SkeletonError& e) {
        emit(error_json, json{{"error", e.what()}});
        return KG_INVALID_SKELETON;
    } catch (const std::exception& e) {
        emit(error_json, json{{"error", e.what()}});
        return KG_BAD_ARGUMENT;
    }
}

void kg_skeleton_free(kg_skeleton* sk) { delete sk; }

char* kg_skeleton_to_json(const kg_skeleton* sk) {
    if (!sk) return nullptr;
    return dup_string(kgraph::skeleton_doc_to_json(sk->impl.to_doc()).dump(2));
}

kg_status kg_validate_json(const char* json_text, char** report_json) {
    if (!json_text) {
        emit(report_json, json{{"error", "null argument"}});
        return KG_BAD_ARGUMENT;
    }
    return guarded(report_json, [&] {
        try {
            auto doc = kgraph::skeleton_doc_from_string(json_text);
            return kgraph::run_validate(doc);
        } catch (const kgraph::SkeletonError& e) {
            kgraph::CommandResult r;
            r.report = json{{"valid", false}, {"error", e.what()}};
            r.exit_code = kgraph::kExitInvalid;
            return r;
        }
    });
}

kg_status kg_mce(const kg_skeleton* sk, const char* mu_literal, const char* nu_literal,
                 char** report_json) {
    if (!sk || !mu_literal || !nu_literal) {
        emit(report_json, json{{"error", "null argument"}});
        return KG_BAD_ARGUMENT;
    }
    return guarded(report_json, [&] { return kgraph::run_mce(sk->impl, mu_literal, nu_literal); });
}

kg_status kg_vee(const kg_skeleton* sk, const char* const* literals, int count,
                 char** report_json) {
    if (!sk || (!literals && count > 0) || count < 1) {
        emit(report_json, json{{"error", "need a skeleton and at least one path literal"}});
        return KG_BAD_ARGUMENT;
    }
    return guarded(report_json, [&] {
        std::vector<std::string> lits(literals, literals + count);
        return kgraph::run_vee(sk->impl, lits);
    });
}

kg_status kg_align(const kg_skeleton* sk, const char* bound, char** report_json) {
    if (!sk) {
        emit(report_json, json{{"error", "null skeleton"}});
        return KG_BAD_ARGUMENT;
    }
    return guarded(report_json, [&] { return kgraph::run_align(sk->impl, parse_bound(sk, bound)); });
}

kg_status kg_check(const kg_skeleton* sk, const char* bound, double tol, uint64_t seed,
                   int samples, char** report_json) {
    if (!sk) {
        emit(report_json, json{{"error", "null skeleton"}});
        return KG_BAD_ARGUMENT;
    }
    return guarded(report_json, [&] {
        if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
        if (samples < 0) throw std::invalid_argument("samples must be >= 0");
        return kgraph::run_check(sk->impl, parse_bound(sk, bound), tol, seed, samples);
    });
}

kg_status kg_faithful(const kg_skeleton* sk, const char* vertex_id, const char* sets_json,
                      const char* gens_json, const char* bound, char** report_json) {
    if (!sk || !vertex_id) {
        emit(report_json, json{{"error", "null argument"}});
        return KG_BAD_ARGUMENT;
    }
    return guarded(report_json, [&] {
        json sets = sets_json ? json::parse(sets_json) : json(nullptr);
        json gens = gens_json ? json::parse(gens_json) : json(nullptr);
        return kgraph::run_faithful(sk->impl, vertex_id, sets, gens, parse_bound(sk, bound));
    });
}

void kg_string_free(char* s) { std::free(s); }

const char* kg_version(void) { return "0.1.0"; }

}  // extern "C"
