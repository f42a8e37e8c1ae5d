#include "helpers.hpp"

#include <doctest.h>

using namespace testing;

TEST_SUITE("exact_angles") {

TEST_CASE("angle_add reduces the rational part mod 1") {
    CHECK(ang(1, 3) + ang(2, 3) == ang(0));
    CHECK((ang(1, 4) + sym("alpha")) + (ang(3, 4) + sym("alpha")) == sym("alpha", 2));
    AngleValue a(rat(1, 2), {{"alpha", rat(1, 3)}});
    AngleValue b(rat(1, 2), {{"alpha", rat(2, 3)}});
    CHECK(a + b == sym("alpha"));
}

TEST_CASE("angle_scale") {
    CHECK(angle_scale(sym("alpha"), rat(1, 2)) == sym("alpha", 1, 2));
    CHECK(angle_scale(ang(2, 5), rat(3)) == ang(1, 5));
    CHECK(angle_scale(ang(1, 3) + sym("alpha"), rat(2)) == ang(2, 3) + sym("alpha", 2));
}

TEST_CASE("as_fraction returns (p, q) for q/p") {
    auto f = ang(2, 5).as_fraction();
    REQUIRE(f);
    CHECK(f->first == 5);
    CHECK(f->second == 2);
    CHECK_FALSE(sym("alpha").as_fraction());
    auto z = ang(0).as_fraction();
    REQUIRE(z);
    CHECK(z->first == 1);
    CHECK(z->second == 0);
    CHECK(ang(-1, 3) == ang(2, 3));
    CHECK(ang(7, 3) == ang(1, 3));
}

TEST_CASE("zero coefficients are dropped") {
    AngleValue a(rat(1, 2), {{"alpha", rat(0)}});
    CHECK(a.is_rational());
    CHECK(sym("alpha") - sym("alpha") == ang(0));
}

TEST_CASE("parse_rational and decimals") {
    CHECK(parse_rational("3/6") == rat(1, 2));
    CHECK(parse_rational(" -2/4 ") == rat(-1, 2));
    CHECK(parse_rational("0.3") == rat(3, 10));
    CHECK(parse_rational("1e-2") == rat(1, 100));
    CHECK(rational_from_decimal("2.5E1") == rat(25));
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("abc"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
}

TEST_CASE("best_rational_approx and recognition") {
    auto a = best_rational_approx(0.75, 100);
    CHECK(a.p == 3);
    CHECK(a.q == 4);
    auto pi = best_rational_approx(3.14159265358979, 1000);
    CHECK(pi.p == 355);
    CHECK(pi.q == 113);
    CHECK(AngleValue::recognize(1.0 / 7.0) == ang(1, 7));
    CHECK(AngleValue::recognize(-0.25) == ang(3, 4));
    CHECK(AngleValue::recognize(std::sqrt(2.0) - 1.0).is_opaque());
    CHECK(AngleValue::recognize(0.3 + 1e-9).is_opaque());
}

TEST_CASE("opaque values do not mix with symbols") {
    AngleValue o = AngleValue::opaque(0.123456789);
    CHECK_FALSE(o.is_exact());
    CHECK(o + ang(1, 2) == AngleValue::opaque(0.623456789));
    CHECK_THROWS_AS(o + sym("alpha"), ValidationError);
}

TEST_CASE("basis validation") {
    CHECK_THROWS_AS(IrrationalBasis({"a"}, {{"a", 0.5}}), ValidationError);
    CHECK_THROWS_AS(IrrationalBasis({"a"}, {{"a", 1.5}}), ValidationError);
    CHECK_THROWS_AS(IrrationalBasis({"a", "a"}, {{"a", 0.41}}), ValidationError);
    CHECK_THROWS_AS(IrrationalBasis({"a"}, {}), ValidationError);
    CHECK_NOTHROW(IrrationalBasis({"a"}, {{"a", std::sqrt(3.0) - 1.0}}));
    CHECK_THROWS_AS(check_basis(sym("delta"), basis()), ValidationError);
    CHECK_NOTHROW(check_basis(sym("alpha") + sym("beta"), basis()));
    CHECK(basis().with_symbol("delta", std::sqrt(7.0) - 2.0).contains("delta"));
}

TEST_CASE("numeric evaluation") {
    CHECK((ang(1, 4) + sym("alpha", 2)).numeric(basis()) ==
          doctest::Approx(std::fmod(0.25 + 2.0 * (std::sqrt(2.0) - 1.0), 1.0)).epsilon(1e-15));
    CHECK(sym("alpha", -1).numeric(basis()) == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("to_string") {
    CHECK(ang(1, 3).to_string() == "1/3");
    CHECK((ang(1, 4) + sym("alpha", 2) - sym("beta")).to_string() == "1/4 + 2*alpha - beta");
    CHECK(sym("alpha", -1, 2).to_string() == "-1/2*alpha");
}

TEST_CASE("solve_affine_lattice examples") {
    auto s = solve_affine_lattice(ang(1, 4), sym("alpha"), ang(1, 4) + sym("alpha", 2), 1);
    REQUIRE(s);
    CHECK(s->sign == 1);
    CHECK(s->n == 2);
    CHECK(s->n_prime == 0);
    CHECK_FALSE(solve_affine_lattice(ang(0), sym("alpha"), sym("alpha"), 2));
    CHECK_FALSE(solve_affine_lattice(ang(1, 3), ang(1, 2), ang(1, 4), 1));
    auto t = solve_affine_lattice(ang(1, 3), ang(1, 2), ang(5, 6), 1);
    REQUIRE(t);
    CHECK(t->sign == 1);
    CHECK(t->n == 1);
}

TEST_CASE("lattice solutions reconstruct theta'") {
    Rng rng(11);
    int solved = 0;
    for (int i = 0; i < 2000; ++i) {
        AngleValue theta = random_angle(rng), phi = random_angle(rng);
        long long mult = uniform(rng, 1, 2);
        AngleValue theta_p = uniform(rng, 0, 1) ? random_angle(rng)
                                                : rat(uniform(rng, 0, 1) ? 1 : -1) * theta +
                                                      rat(mult * uniform(rng, -5, 5)) * phi + ang(uniform(rng, -3, 3));
        auto sol = solve_affine_lattice(theta, phi, theta_p, mult);
        if (!sol) continue;
        ++solved;
        Rational np = theta_p.rational() - rat(sol->sign) * theta.rational() -
                      rat(mult) * rat(sol->n) * phi.rational();
        np.canonicalize();
        CHECK(np == rat(sol->n_prime));
        CHECK(rat(sol->sign) * theta + rat(mult * sol->n) * phi == theta_p);
    }
    CHECK(solved > 800);
}

TEST_CASE("lattice solver against brute-force enumeration at rational scale") {
    // Oracle: scan n over one period of phi in floating point.
    for (long long b = 1; b <= 6; ++b)
        for (long long a = 0; a < b; ++a)
            for (long long d = 1; d <= 6; ++d)
                for (long long c = 0; c < d; ++c)
                    for (long long f = 1; f <= 6; ++f)
                        for (long long e = 0; e < f; e += (f > 3 ? 2 : 1)) {
                            const double th = double(a) / b, ph = double(c) / d, tp = double(e) / f;
                            bool brute = false;
                            for (int s : {1, -1})
                                for (long long n = 0; n < d; ++n) brute = brute || circ(tp - s * th - n * ph) < 1e-12;
                            bool solved = solve_affine_lattice(ang(a, b), ang(c, d), ang(e, f), 1).has_value();
                            CHECK(brute == solved);
                        }
}

TEST_CASE("lattice relation is symmetric") {
    Rng rng(12);
    for (int i = 0; i < 1000; ++i) {
        AngleValue theta = random_angle(rng), phi = random_angle(rng);
        AngleValue theta_p = uniform(rng, 0, 2) ? rat(uniform(rng, 0, 1) ? 1 : -1) * theta +
                                                      rat(uniform(rng, -5, 5)) * phi
                                                : random_angle(rng);
        CHECK(solve_affine_lattice(theta, phi, theta_p, 1).has_value() ==
              solve_affine_lattice(theta_p, phi, theta, 1).has_value());
    }
}

TEST_CASE("angle arithmetic group laws") {
    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        AngleValue a = random_angle(rng), b = random_angle(rng), c = random_angle(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a + ang(0) == a);
        CHECK(a - a == ang(0));
        CHECK(rat(3) * (a + b) == rat(3) * a + rat(3) * b);
        const double d = (a + b).numeric(basis()) - (a.numeric(basis()) + b.numeric(basis()));
        CHECK(std::fabs(d - std::round(d)) < 1e-12);
    }
}

TEST_CASE("decide_circle examples") {
    Verdict v = decide_circle(ang(1, 3), ang(2, 3));
    CHECK(v.conjugate());
    CHECK(v.solution->sign == -1);
    Verdict z = decide_circle(ang(0), ang(0));
    CHECK(z.conjugate());
    CHECK(z.solution->sign == 1);
    Verdict n = decide_circle(ang(1, 3), ang(1, 4));
    CHECK(n.status == Status::NotConjugate);
    CHECK(n.reason == "orbit-size");
    CHECK(decide_circle(ang(1, 5), ang(2, 5)).reason == "sign-exhausted");
    CHECK(decide_circle(sym("alpha"), ang(1, 2)).reason == "orbit-size");
    CHECK(decide_circle(sym("alpha"), sym("alpha", -1)).conjugate());
    CHECK(decide_circle(AngleValue::opaque(0.1234567891), ang(1, 2)).status == Status::Unknown);
}

TEST_CASE("circle conjugacy is an equivalence relation") {
    std::vector<AngleValue> all;
    for (long long p = 1; p <= 12; ++p)
        for (long long q = 0; q < p; ++q) all.push_back(ang(q, p));
    auto conj = [](const AngleValue& a, const AngleValue& b) { return decide_circle(a, b).conjugate(); };
    for (const auto& a : all) {
        CHECK(conj(a, a));
        for (const auto& b : all) {
            CHECK(conj(a, b) == conj(b, a));
            if (!conj(a, b)) continue;
            for (const auto& c : all)
                if (conj(b, c)) CHECK(conj(a, c));
        }
    }
}

TEST_CASE("decide_torus2") {
    Verdict id = decide_torus2({sym("alpha"), sym("beta")}, {sym("alpha"), sym("beta")}, 1);
    CHECK(id.conjugate());
    CHECK(*id.matrix == std::array<long long, 4>{1, 0, 0, 1});
    Verdict sw = decide_torus2({sym("alpha"), sym("beta")}, {sym("beta"), sym("alpha")}, 1);
    CHECK(sw.conjugate());
    CHECK(*sw.matrix == std::array<long long, 4>{0, 1, 1, 0});
    Verdict un = decide_torus2({sym("alpha"), ang(0)}, {sym("alpha", 2), ang(0)}, 1);
    CHECK(un.status == Status::Unknown);
    CHECK(un.reason == "beyond-bound");
    Verdict shear = decide_torus2({sym("alpha"), sym("beta")}, {sym("alpha") + sym("beta", 2), sym("beta")}, 2);
    CHECK(shear.conjugate());
    CHECK(std::llabs((*shear.matrix)[0] * (*shear.matrix)[3] - (*shear.matrix)[1] * (*shear.matrix)[2]) == 1);
}

TEST_CASE("estimate_rotation_number") {
    CHECK(estimate_rotation_number([](double x) { return x + 0.3; }, 100) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(estimate_rotation_number([](double x) { return x; }, 10) == 0.0);
    auto lift = [](double x) { return x + 0.7 + 0.01 * std::sin(kTwoPi * x); };
    const double ref = estimate_rotation_number(lift, 1000000);
    CHECK(std::fabs(estimate_rotation_number(lift, 100000) - 0.7) < 0.02);
    CHECK(std::fabs(estimate_rotation_number(lift, 100000) - ref) < 1e-4);
    CHECK_THROWS(estimate_rotation_number(lift, 0));
}

}  // TEST_SUITE
