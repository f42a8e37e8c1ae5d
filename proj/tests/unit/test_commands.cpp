#include "helpers.hpp"

#include "commands.hpp"

#include <doctest.h>

using namespace testing;

namespace {

std::string code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ValidationError& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_SUITE("commands") {

TEST_CASE("classify reports exact verdicts") {
    Session s;
    json r = s.classify("spinc3", "topological", "[0, \"alpha\"]", "[\"alpha\", \"alpha\"]");
    CHECK(r["verdict"]["status"] == "conjugate");
    CHECK(r["verdict"]["solution"]["n"] == 1);
    json so = s.classify("so3xs1", "topological", "[0, \"alpha\"]", "[\"alpha\", \"alpha\"]");
    CHECK(so["verdict"]["reason"] == "odd-coefficient");
    CHECK_FALSE(has_unknown_verdict(r));
}

TEST_CASE("classify pseudo-groups") {
    Session s;
    CHECK(s.classify("circle", "topological", "1/3", "2/3")["verdict"]["status"] == "conjugate");
    CHECK(s.classify("torus2", "topological", "[\"1/4\", \"alpha\"]", "[\"alpha\", \"1/4\"]")["verdict"]["status"] ==
          "conjugate");
}

TEST_CASE("error codes") {
    Session s;
    CHECK(code_of([&] { s.classify("u2", "topological", "[\"1/3\"]", "[\"1/3\", 0]"); }) == "arity");
    CHECK(code_of([&] { s.classify("sp4", "topological", "0", "0"); }) == "unknown-group");
    CHECK(code_of([&] { s.classify("su2", "holomorphic", "0", "0"); }) == "mode");
    CHECK(code_of([&] { s.classify("su2", "topological", "1/", "0"); }) == "parse");
    CHECK(code_of([&] { s.orbit("su2", "1/3", 0, 0.05, false); }) == "samples");
    CHECK(code_of([&] { s.orbit("su2", "1/3", 100, -1.0, false); }) == "radius");
    CHECK(code_of([&] { s.lift("su2-so4", "0"); }) == "unknown-group");
    Session declared;
    declared.set_basis_json(R"({"symbols": ["alpha"], "numeric": {"alpha": 0.41421356237309515}})");
    CHECK(code_of([&] { declared.classify("u2", "topological", "[0, \"beta\"]", "[0, \"beta\"]"); }) == "basis");
}

TEST_CASE("automatic basis uses square roots of primes in symbol order") {
    Session s;
    RotationVector r = s.parse_rho(GroupId::U2, "[\"zeta\", \"alpha\"]");
    IrrationalBasis b = s.resolve_basis({&r});
    CHECK(b.value("alpha") == doctest::Approx(std::sqrt(2.0) - 1).epsilon(1e-15));
    CHECK(b.value("zeta") == doctest::Approx(std::sqrt(3.0) - 1).epsilon(1e-15));
}

TEST_CASE("results are deterministic") {
    Session s;
    CHECK(s.verify("u2", "[\"1/4\", \"alpha\"]", "[\"1/4 + 2*alpha\", \"alpha\"]", 500).dump() ==
          s.verify("u2", "[\"1/4\", \"alpha\"]", "[\"1/4 + 2*alpha\", \"alpha\"]", 500).dump());
    CHECK(s.orbit("u2", "[\"1/3\", \"alpha\"]", 3000, 0.05, false).dump() ==
          s.orbit("u2", "[\"1/3\", \"alpha\"]", 3000, 0.05, false).dump());
}

TEST_CASE("verify passes for built witnesses") {
    Session s;
    json v = s.verify("spinc3", "[0, \"alpha\"]", "[\"alpha\", \"alpha\"]", 1000);
    CHECK(v["passed"] == true);
    CHECK(v["max_error"].get<double>() < 1e-9);
}

TEST_CASE("reduce feeds classify") {
    Session s;
    json r = s.reduce("so3", "{\"matrix\": [[0,0,1],[1,0,0],[0,1,0]]}");
    CHECK(r["rho"][0]["rational"] == "1/3");
    json c = s.classify("so3", "topological", r["rho"].dump(), "[\"2/3\"]");
    CHECK(c["verdict"]["status"] == "conjugate");
}

TEST_CASE("lift and project") {
    Session s;
    json l = s.lift("su2-so3", "[\"1/3\"]");
    REQUIRE(l["lifts"].size() == 2);
    json p = s.project("su2-so3", "{\"q\": [0, 0, 0, 1]}");
    CHECK(p["element"]["group"] == "so3");
    json pr = s.project("u2-self:3", "[0, \"alpha\"]");
    CHECK(pr["rho"][1]["coeffs"]["alpha"] == "3");
}

TEST_CASE("Unknown verdicts are flagged") {
    Session s;
    json r = s.classify_elements("su2", "topological", "{\"q\": [0.5403023058681398, 0, 0, 0.8414709848078965]}",
                                 "{\"q\": [0.8, 0, 0, 0.6]}");
    CHECK(has_unknown_verdict(r));
}

TEST_CASE("selftest passes") {
    Session s;
    json r = s.selftest();
    CHECK(r["passed"] == true);
}

}  // TEST_SUITE
