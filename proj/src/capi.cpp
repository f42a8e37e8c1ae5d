#include "rotconj/rotconj.h"

#include "commands.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct rc_session {
    rotconj::Session session;
    std::string last_error;
};

namespace {

using rotconj::ValidationError;

rc_status status_for(const ValidationError& e) {
    const std::string& code = e.code();
    if (code == "arity") return RC_ERR_ARITY;
    if (code == "parse") return RC_ERR_PARSE;
    if (code == "unknown-group") return RC_ERR_UNKNOWN_GROUP;
    if (code == "basis") return RC_ERR_BASIS;
    if (code == "invalid-argument" || code == "mode" || code == "samples" || code == "radius" || code == "bound" ||
        code == "covering")
        return RC_ERR_INVALID_ARGUMENT;
    return RC_ERR_DOMAIN;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename F>
rc_status guarded(rc_session* s, F&& body) {
    if (!s) return RC_ERR_INVALID_ARGUMENT;
    s->last_error.clear();
    try {
        return body();
    } catch (const ValidationError& e) {
        s->last_error = e.code() + ": " + e.what();
        return status_for(e);
    } catch (const std::bad_alloc&) {
        s->last_error = "out of memory";
        return RC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        s->last_error = std::string("internal: ") + e.what();
        return RC_ERR_INTERNAL;
    }
}

template <typename F>
rc_status json_call(rc_session* s, char** out, std::initializer_list<const char*> required, F&& body) {
    if (out) *out = nullptr;
    return guarded(s, [&]() -> rc_status {
        if (!out) throw ValidationError("invalid-argument", "output pointer is null");
        for (const char* arg : required)
            if (!arg) throw ValidationError("invalid-argument", "required argument is null");
        rotconj::json result = body();
        *out = dup_string(result.dump());
        if (!*out) throw std::bad_alloc();
        return RC_OK;
    });
}

std::string opt(const char* s) { return s ? s : ""; }

}  // namespace

extern "C" {

rc_status rc_session_create(rc_session** out) {
    if (!out) return RC_ERR_INVALID_ARGUMENT;
    *out = new (std::nothrow) rc_session();
    return *out ? RC_OK : RC_ERR_INTERNAL;
}

void rc_session_destroy(rc_session* s) { delete s; }

rc_status rc_session_set_basis_json(rc_session* s, const char* basis_json) {
    return guarded(s, [&] {
        if (!basis_json)
            s->session.config.basis.reset();
        else
            s->session.set_basis_json(basis_json);
        return RC_OK;
    });
}

rc_status rc_session_set_seed(rc_session* s, uint64_t seed) {
    if (!s) return RC_ERR_INVALID_ARGUMENT;
    s->session.config.seed = seed;
    return RC_OK;
}

rc_status rc_session_set_numeric_angles(rc_session* s, int enabled) {
    if (!s) return RC_ERR_INVALID_ARGUMENT;
    s->session.config.numeric = enabled != 0;
    return RC_OK;
}

const char* rc_last_error(const rc_session* s) { return s ? s->last_error.c_str() : "null session"; }

const char* rc_status_name(rc_status status) {
    switch (status) {
        case RC_OK: return "ok";
        case RC_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case RC_ERR_ARITY: return "arity";
        case RC_ERR_PARSE: return "parse";
        case RC_ERR_UNKNOWN_GROUP: return "unknown-group";
        case RC_ERR_BASIS: return "basis";
        case RC_ERR_DOMAIN: return "domain";
        case RC_ERR_INTERNAL: return "internal";
    }
    return "unknown-status";
}

rc_status rc_classify(rc_session* s, const char* group, const char* mode, const char* rho, const char* rho_prime,
                      int bound, char** out_json) {
    return json_call(s, out_json, {group, mode, rho, rho_prime},
                     [&] { return s->session.classify(group, mode, rho, rho_prime, bound); });
}

rc_status rc_classify_elements(rc_session* s, const char* group, const char* mode, const char* element,
                               const char* element_prime, char** out_json) {
    return json_call(s, out_json, {mode, element, element_prime},
                     [&] { return s->session.classify_elements(opt(group), mode, element, element_prime); });
}

rc_status rc_reduce(rc_session* s, const char* group, const char* element, char** out_json) {
    return json_call(s, out_json, {element}, [&] { return s->session.reduce(opt(group), element); });
}

rc_status rc_witness(rc_session* s, const char* group, const char* rho, const char* rho_prime, int verify_samples,
                     char** out_json) {
    return json_call(s, out_json, {group, rho, rho_prime},
                     [&] { return s->session.witness(group, rho, rho_prime, verify_samples); });
}

rc_status rc_verify(rc_session* s, const char* group, const char* rho, const char* rho_prime, int samples,
                    char** out_json) {
    return json_call(s, out_json, {group, rho, rho_prime},
                     [&] { return s->session.verify(group, rho, rho_prime, samples); });
}

rc_status rc_orbit(rc_session* s, const char* group, const char* rho, int64_t samples, double radius,
                   int include_points, char** out_json) {
    return json_call(s, out_json, {group, rho},
                     [&] { return s->session.orbit(group, rho, samples, radius, include_points != 0); });
}

rc_status rc_lift(rc_session* s, const char* covering, const char* rho, char** out_json) {
    return json_call(s, out_json, {covering, rho}, [&] { return s->session.lift(covering, rho); });
}

rc_status rc_project(rc_session* s, const char* covering, const char* input, char** out_json) {
    return json_call(s, out_json, {covering, input}, [&] { return s->session.project(covering, input); });
}

rc_status rc_selftest(rc_session* s, char** out_json) {
    return json_call(s, out_json, {}, [&] { return s->session.selftest(); });
}

int rc_result_is_unknown(const char* result_json) {
    if (!result_json) return 0;
    auto j = rotconj::json::parse(result_json, nullptr, false);
    return !j.is_discarded() && rotconj::has_unknown_verdict(j) ? 1 : 0;
}

void rc_string_free(char* str) { std::free(str); }

}  // extern "C"
