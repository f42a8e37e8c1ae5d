#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

TEST_SUITE("orbits") {

TEST_CASE("closure examples") {
    const AngleValue a = sym("alpha"), b = sym("beta");
    OrbitClosure p = classify_orbit_closure(GroupId::SU2, rv(GroupId::SU2, {ang(2, 5)}));
    CHECK(p.kind == ClosureKind::FinitePoints);
    CHECK(p.count == 5);

    OrbitClosure c = classify_orbit_closure(GroupId::U2, rv(GroupId::U2, {ang(1, 3), a}));
    CHECK(c.kind == ClosureKind::Circles);
    CHECK(c.count == 3);
    REQUIRE(c.relation);
    CHECK(*c.relation == std::array<long long, 3>{3, 0, -1});

    CHECK(classify_orbit_closure(GroupId::U2, rv(GroupId::U2, {a, b})).kind == ClosureKind::Torus2);

    OrbitClosure r = classify_orbit_closure(GroupId::U2, rv(GroupId::U2, {a, ang(1, 3) - rat(2, 3) * a}));
    CHECK(r.kind == ClosureKind::Circles);
    CHECK(r.count == 1);
    REQUIRE(r.relation);
    CHECK(*r.relation == std::array<long long, 3>{2, 3, -1});
}

TEST_CASE("closure of rational vectors is a finite cyclic group") {
    CHECK(classify_orbit_closure(GroupId::SO3, rv(GroupId::SO3, {ang(0)})).count == 1);
    OrbitClosure u = classify_orbit_closure(GroupId::U2, rv(GroupId::U2, {ang(1, 4), ang(1, 6)}));
    CHECK(u.kind == ClosureKind::FinitePoints);
    CHECK(u.count == 12);
    CHECK(u.components() == 12);
    CHECK(classify_orbit_closure(GroupId::U2, rv(GroupId::U2, {sym("alpha"), sym("beta")})).components() == 1);
}

TEST_CASE("closure rejects opaque angles") {
    CHECK_THROWS_AS(classify_orbit_closure(GroupId::SU2, rv(GroupId::SU2, {AngleValue::opaque(0.1234567)})),
                    ValidationError);
}

TEST_CASE("sample_orbit") {
    auto pts = sample_orbit(GroupId::SU2, rv(GroupId::SU2, {ang(1, 4)}), 4, basis());
    REQUIRE(pts.size() == 4);
    CHECK(distance(pts[0], GroupElement::su2(su2_torus(0.25))) < 1e-12);
    CHECK(distance(pts[3], identity(GroupId::SU2)) < 1e-12);
    CHECK_THROWS_AS(sample_orbit(GroupId::U2, rv(GroupId::U2, {ang(0), sym("alpha")}), 0, basis()), ValidationError);
}

TEST_CASE("count_components examples") {
    CHECK(count_components({identity(GroupId::SU2)}, 0.1) == 1);
    auto five = sample_orbit(GroupId::SU2, rv(GroupId::SU2, {ang(2, 5)}), 50, basis());
    CHECK(count_components(five, 0.1) == 5);
    auto circles = sample_orbit(GroupId::U2, rv(GroupId::U2, {ang(1, 3), sym("alpha")}), 3000, basis());
    CHECK(count_components(circles, 0.05) == 3);
    CHECK_THROWS_AS(count_components({}, 0.1), ValidationError);
}

TEST_CASE("sampled components agree with the exact closure") {
    const AngleValue a = sym("alpha");
    const std::vector<RotationVector> cases{
        rv(GroupId::U2, {ang(1, 2), a}),           rv(GroupId::U2, {a, ang(1, 4)}),
        rv(GroupId::U2, {ang(1, 3) + a, ang(0)}), rv(GroupId::U2, {ang(2, 5), ang(1, 3)}),
        rv(GroupId::SU2, {ang(3, 7)}),             rv(GroupId::SO3xS1, {ang(1, 4), a}),
    };
    for (const RotationVector& r : cases) {
        OrbitClosure c = classify_orbit_closure(r.group, r);
        auto pts = sample_orbit(r.group, r, 4000, basis());
        CHECK(count_components(pts, 0.1) == c.components());
    }
}

TEST_CASE("orbit_period") {
    CHECK(orbit_period(GroupElement::su2(su2_torus(0.4)), 100) == 5);
    CHECK(orbit_period(identity(GroupId::U2), 10) == 1);
    CHECK_FALSE(orbit_period(GroupElement::su2(su2_torus(std::sqrt(2.0) - 1)), 1000));
    CHECK(orbit_period(torus_element(rv(GroupId::SO3xS1, {ang(1, 6), ang(1, 4)}), basis()), 100) == 12);
}

}  // TEST_SUITE
