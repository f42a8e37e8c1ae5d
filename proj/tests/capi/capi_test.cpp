// Exercises the shared library only through its C header.
#include <rotconj/rotconj.h>

#include <cstdio>
#include <cstring>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const char* what) {
    if (!ok) {
        std::fprintf(stderr, "FAIL: %s\n", what);
        ++failures;
    }
}

bool contains(const char* haystack, const char* needle) { return haystack && std::strstr(haystack, needle); }

}  // namespace

int main() {
    rc_session* s = nullptr;
    expect(rc_session_create(nullptr) == RC_ERR_INVALID_ARGUMENT, "create rejects null");
    expect(rc_session_create(&s) == RC_OK && s, "create");

    char* out = nullptr;
    expect(rc_classify(s, "spinc3", "topological", "[0, \"alpha\"]", "[\"alpha\", \"alpha\"]", 10, &out) == RC_OK,
           "classify spinc3");
    expect(contains(out, "\"status\":\"conjugate\""), "spinc3 verdict");
    expect(rc_result_is_unknown(out) == 0, "spinc3 not unknown");
    expect(std::strcmp(rc_last_error(s), "") == 0, "no error after success");
    rc_string_free(out);

    out = nullptr;
    expect(rc_classify(s, "u2", "topological", "[\"1/3\"]", "[\"1/3\", 0]", 10, &out) == RC_ERR_ARITY, "arity");
    expect(out == nullptr, "no output on failure");
    expect(std::strlen(rc_last_error(s)) > 0, "arity message");
    expect(rc_classify(s, "sp4", "topological", "0", "0", 10, &out) == RC_ERR_UNKNOWN_GROUP, "unknown group");
    expect(rc_classify(s, "su2", "topological", "1/", "0", 10, &out) == RC_ERR_PARSE, "parse");
    expect(rc_classify(s, "su2", "holomorphic", "0", "0", 10, &out) == RC_ERR_INVALID_ARGUMENT, "mode");
    expect(rc_classify(s, "su2", "topological", nullptr, "0", 10, &out) == RC_ERR_INVALID_ARGUMENT, "null rho");
    expect(rc_classify(s, "su2", "topological", "0", "0", 10, nullptr) == RC_ERR_INVALID_ARGUMENT, "null out");
    expect(rc_lift(s, "su2-so4", "0", &out) == RC_ERR_UNKNOWN_GROUP, "unknown covering");
    expect(rc_orbit(s, "su2", "1/3", 0, 0.05, 0, &out) == RC_ERR_INVALID_ARGUMENT, "zero samples");
    expect(rc_reduce(s, "su2", "{\"q\": [2, 0, 0, 0]}", &out) == RC_ERR_DOMAIN, "non-unit quaternion");

    expect(rc_session_set_basis_json(s, "{\"symbols\": [\"alpha\"], \"numeric\": {\"alpha\": 0.25}}") == RC_ERR_BASIS,
           "rational basis value rejected");
    expect(rc_session_set_basis_json(
               s, "{\"symbols\": [\"alpha\"], \"numeric\": {\"alpha\": 0.41421356237309515}}") == RC_OK,
           "basis");
    expect(rc_classify(s, "u2", "topological", "[0, \"beta\"]", "[0, \"beta\"]", 10, &out) == RC_ERR_BASIS,
           "undeclared symbol");
    expect(rc_session_set_basis_json(s, nullptr) == RC_OK, "clear basis");

    expect(rc_verify(s, "su2", "[0.3]", "[0.7]", 1000, &out) == RC_OK, "verify");
    expect(contains(out, "\"passed\":true"), "verify passes");
    std::string first = out ? out : "";
    rc_string_free(out);
    expect(rc_verify(s, "su2", "[0.3]", "[0.7]", 1000, &out) == RC_OK && first == out, "deterministic verify");
    rc_string_free(out);

    expect(rc_session_set_seed(s, 7) == RC_OK, "seed");
    expect(rc_witness(s, "u2", "[\"1/4\", \"alpha\"]", "[\"1/4 + 2*alpha\", \"alpha\"]", 200, &out) == RC_OK,
           "witness");
    expect(contains(out, "\"twist\":2"), "twist 2");
    rc_string_free(out);

    expect(rc_classify_elements(s, "su2", "topological", "{\"q\": [0.5403023058681398, 0, 0, 0.8414709848078965]}",
                                "{\"q\": [0.8, 0, 0, 0.6]}", &out) == RC_OK,
           "classify elements");
    expect(rc_result_is_unknown(out) == 1, "opaque elements are unknown");
    rc_string_free(out);

    expect(rc_session_set_numeric_angles(s, 1) == RC_OK, "numeric");
    expect(rc_classify(s, "su2", "topological", "[0.3333333333333333]", "[0.6666666666666666]", 10, &out) == RC_OK,
           "numeric classify");
    expect(contains(out, "\"rational\":\"1/3\""), "numeric recognition");
    rc_string_free(out);

    expect(rc_project(s, "su2-so3", "{\"q\": [0, 0, 0, 1]}", &out) == RC_OK, "project");
    rc_string_free(out);
    expect(rc_orbit(s, "su2", "[\"2/5\"]", 100, 0.1, 1, &out) == RC_OK, "orbit");
    expect(contains(out, "\"points\""), "orbit points");
    rc_string_free(out);

    expect(std::strcmp(rc_status_name(RC_ERR_PARSE), "parse") == 0, "status name");
    rc_string_free(nullptr);
    rc_session_destroy(s);
    rc_session_destroy(nullptr);

    if (failures) {
        std::fprintf(stderr, "%d failure(s)\n", failures);
        return 1;
    }
    std::puts("capi_test: all checks passed");
    return 0;
}
