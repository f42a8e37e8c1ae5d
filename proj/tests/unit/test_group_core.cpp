#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

namespace {

const Complex I(0.0, 1.0);

bool mat2_close(const Mat2& a, const Mat2& b, double tol = 1e-12) { return frobenius(a, b) < tol; }
bool mat3_close(const Mat3& a, const Mat3& b, double tol = 1e-12) { return frobenius(a, b) < tol; }

}  // namespace

TEST_SUITE("group_core") {

TEST_CASE("names and arity") {
    for (GroupId g : kAll) CHECK(parse_group(group_name(g)) == g);
    CHECK_FALSE(parse_group("sp4"));
    CHECK(group_arity(GroupId::SU2) == 1);
    CHECK(group_arity(GroupId::SO3) == 1);
    CHECK(group_arity(GroupId::U2) == 2);
    CHECK(group_arity(GroupId::SpinC3) == 2);
}

TEST_CASE("quaternion matrix model is a homomorphism") {
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        Quat a = sample_haar(GroupId::SU2, rng).quat(), b = sample_haar(GroupId::SU2, rng).quat();
        CHECK(mat2_close(quat_to_su2(a * b), quat_to_su2(a) * quat_to_su2(b)));
        CHECK(mat3_close(rotation_matrix(a * b), rotation_matrix(a) * rotation_matrix(b)));
        CHECK(quat_distance(su2_to_quat(quat_to_su2(a)), a) < 1e-12);
    }
    CHECK(mat2_close(quat_to_su2(Quat{0, 1, 0, 0}), Mat2{0, 1, -1, 0}));
}

TEST_CASE("multiply, inverse, identity") {
    Rng rng(2);
    Quat q = sample_haar(GroupId::SU2, rng).quat();
    CHECK(distance(multiply(identity(GroupId::SU2), GroupElement::su2(q)), GroupElement::su2(q)) < 1e-15);
    GroupElement s = GroupElement::spinc3(q, std::polar(1.0, 0.7));
    CHECK(distance(multiply(s, inverse(s)), identity(GroupId::SpinC3)) < 1e-12);
    GroupElement prod = multiply(GroupElement::u2(diag2(I, 1.0)), GroupElement::u2(diag2(1.0, I)));
    CHECK(mat2_close(prod.mat2(), diag2(I, I)));
}

TEST_CASE("group axioms on random samples") {
    Rng rng(3);
    for (GroupId g : kAll)
        for (int i = 0; i < 100; ++i) {
            GroupElement a = sample_haar(g, rng), b = sample_haar(g, rng), c = sample_haar(g, rng);
            CHECK(distance(multiply(multiply(a, b), c), multiply(a, multiply(b, c))) < 1e-12);
            CHECK(distance(multiply(a, inverse(a)), identity(g)) < 1e-12);
            CHECK(distance(left_translate(a, b), multiply(a, b)) < 1e-15);
            CHECK(distance(power(a, 3), multiply(a, multiply(a, a))) < 1e-12);
            CHECK(distance(power(a, -2), inverse(multiply(a, a))) < 1e-12);
            CHECK_NOTHROW(validate_element(a));
        }
}

TEST_CASE("SpinC3 class is independent of the representative") {
    Rng rng(4);
    for (int i = 0; i < 200; ++i) {
        Quat q = sample_haar(GroupId::SU2, rng).quat();
        Complex l = std::polar(1.0, std::uniform_real_distribution<double>(-3.14, 3.14)(rng));
        GroupElement a = GroupElement::spinc3(q, l), b = GroupElement::spinc3(negate(q), -l);
        CHECK(distance(a, b) < 1e-12);
        CHECK(std::arg(a.phase()) >= -1e-12);
        CHECK(std::arg(a.phase()) < 3.14159265358979 + 1e-12);
        GroupElement c = sample_haar(GroupId::SpinC3, rng);
        CHECK(distance(multiply(a, c), multiply(b, c)) < 1e-12);
    }
}

TEST_CASE("validate_element rejects non-members") {
    CHECK_THROWS_AS(validate_element(GroupElement::u2(Mat2{2.0, 0.0, 0.0, 1.0})), ValidationError);
    CHECK_THROWS_AS(validate_element(GroupElement::so3(Mat3{1, 0, 0, 0, 1, 0, 0, 0, -1})), ValidationError);
    CHECK_THROWS_AS(validate_element(GroupElement::su2(Quat{1.0, 1.0, 0.0, 0.0})), ValidationError);
}

TEST_CASE("torus_element examples") {
    GroupElement t = torus_element(rv(GroupId::SU2, {ang(1, 4)}), basis());
    CHECK(mat2_close(quat_to_su2(t.quat()), diag2(I, -I)));
    GroupElement u = torus_element(rv(GroupId::U2, {ang(0), ang(1, 4)}), basis());
    CHECK(mat2_close(u.mat2(), diag2(I, 1.0)));
    GroupElement r = torus_element(rv(GroupId::SO3, {ang(1, 2)}), basis());
    CHECK(mat3_close(r.mat3(), Mat3{-1, 0, 0, 0, -1, 0, 0, 0, 1}));
    CHECK_THROWS_AS(torus_element(rv(GroupId::U2, {ang(1, 3)}), basis()), ValidationError);
}

TEST_CASE("torus is a homomorphic image of parameters") {
    Rng rng(5);
    for (GroupId g : kAll)
        for (int i = 0; i < 100; ++i) {
            RotationVector a = random_rv(g, rng), b = random_rv(g, rng);
            RotationVector sum{g, {}};
            for (size_t k = 0; k < a.angles.size(); ++k) sum.angles.push_back(a.angles[k] + b.angles[k]);
            CHECK(distance(multiply(torus_element(a, basis()), torus_element(b, basis())),
                           torus_element(sum, basis())) < 1e-12);
        }
}

TEST_CASE("reduce_to_torus examples") {
    auto su = reduce_to_torus(GroupElement::su2(su2_torus(0.25)));
    CHECK(su.rho.angles[0] == ang(1, 4));
    CHECK(distance(su.conjugator, identity(GroupId::SU2)) < 1e-12);

    auto u = reduce_to_torus(GroupElement::u2(diag2(I, 1.0)));
    CHECK(u.rho.angles[0] == ang(0));
    CHECK(u.rho.angles[1] == ang(1, 4));

    // Rotation by 2 pi / 3 about (1,1,1)/sqrt 3 is the cyclic permutation matrix.
    GroupElement perm = GroupElement::so3(Mat3{0, 0, 1, 1, 0, 0, 0, 1, 0});
    auto so = reduce_to_torus(perm);
    CHECK(so.rho.angles[0] == ang(1, 3));
    CHECK(mat3_close(conjugate_by(so.conjugator, perm).mat3(), rotation_z(kTwoPi / 3.0), 1e-12));
    const Mat3& s = so.conjugator.mat3();
    const double ax[3] = {1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0)};
    for (int i = 0; i < 3; ++i) CHECK(s[3 * i] * ax[0] + s[3 * i + 1] * ax[1] + s[3 * i + 2] * ax[2] ==
                                      doctest::Approx(i == 2 ? 1.0 : 0.0).epsilon(1e-12));
}

TEST_CASE("reduce_to_torus conjugates into the torus for every group") {
    Rng rng(6);
    for (GroupId g : kAll)
        for (int i = 0; i < 1000; ++i) {
            GroupElement x = sample_haar(g, rng);
            for (WeylChoice w : {WeylChoice::Canonical, WeylChoice::Alternate}) {
                TorusReduction r = reduce_to_torus(x, w);
                CHECK(distance(conjugate_by(r.conjugator, x), r.torus_rep) < 1e-10);
                CHECK(distance(torus_element(g, r.numeric_rho), r.torus_rep) < 1e-10);
            }
        }
}

TEST_CASE("reduce_to_torus recovers exact rational parameters after conjugation") {
    Rng rng(7);
    for (GroupId g : kAll)
        for (int i = 0; i < 200; ++i) {
            RotationVector rho = random_rv(g, rng, false);
            GroupElement v = sample_haar(g, rng);
            TorusReduction r = reduce_to_torus(conjugate_by(v, torus_element(rho, basis())));
            for (const auto& a : r.rho.angles) CHECK(a.is_exact());
            Verdict same = decide(g, ConjugacyMode::Topological, rho, r.rho);
            CHECK(same.conjugate());
        }
}

TEST_CASE("central elements reduce without a conjugator") {
    auto r = reduce_to_torus(GroupElement::u2(diag2(std::polar(1.0, 1.0), std::polar(1.0, 1.0))));
    CHECK(distance(r.torus_rep, GroupElement::u2(diag2(std::polar(1.0, 1.0), std::polar(1.0, 1.0)))) < 1e-12);
    auto minus = reduce_to_torus(GroupElement::su2(Quat{-1, 0, 0, 0}));
    CHECK(minus.rho.angles[0] == ang(1, 2));
}

TEST_CASE("rotation_vector examples") {
    CHECK(rotation_vector(GroupElement::su2(su2_torus(0.3))).angles[0] == ang(3, 10));
    Complex z = std::polar(1.0, kTwoPi / 3.0), l = std::polar(1.0, kTwoPi / 5.0);
    auto rho = rotation_vector(GroupElement::u2(diag2(l * z, std::conj(z))));
    CHECK(rho.angles[0] == ang(1, 3));
    CHECK(rho.angles[1] == ang(1, 5));
    for (GroupId g : kAll)
        for (const auto& a : rotation_vector(identity(g)).angles) CHECK(a == ang(0));
    CHECK_THROWS_AS(rotation_vector(GroupElement::su2(Quat{0, 1, 0, 0})), ValidationError);
}

TEST_CASE("rotation_vector inverts torus_element") {
    Rng rng(8);
    for (GroupId g : kAll)
        for (int i = 0; i < 200; ++i) {
            RotationVector rho = random_rv(g, rng, false);
            RotationVector back = rotation_vector(torus_element(rho, basis()));
            for (size_t k = 0; k < rho.angles.size(); ++k) CHECK(back.angles[k] == rho.angles[k]);
        }
}

TEST_CASE("conjugation identity v (g u) v^-1 = (v g v^-1)(v u v^-1)") {
    Rng rng(9);
    for (GroupId g : kAll)
        for (int i = 0; i < 1000; ++i) {
            GroupElement v = sample_haar(g, rng), x = sample_haar(g, rng), u = sample_haar(g, rng);
            CHECK(distance(conjugate_by(v, multiply(x, u)), multiply(conjugate_by(v, x), conjugate_by(v, u))) <
                  1e-12);
        }
}

TEST_CASE("check_arity") {
    CHECK_THROWS_AS(check_arity(rv(GroupId::U2, {ang(1, 3)})), ValidationError);
    CHECK_THROWS_AS(check_arity(rv(GroupId::SU2, {ang(1, 3), ang(1, 3)})), ValidationError);
    try {
        check_arity(rv(GroupId::U2, {ang(1, 3)}));
    } catch (const ValidationError& e) {
        CHECK(e.code() == "arity");
    }
}

}  // TEST_SUITE
