#pragma once

#include "classifier.hpp"
#include "coverings.hpp"
#include "exact_angles.hpp"
#include "group_core.hpp"
#include "orbits.hpp"
#include "witnesses.hpp"

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace rotconj;

inline Rational rat(long long p, long long q = 1) {
    Rational r(static_cast<long>(p), static_cast<long>(q));
    r.canonicalize();
    return r;
}

inline AngleValue ang(long long p, long long q = 1) { return AngleValue(rat(p, q)); }

inline AngleValue sym(const std::string& name, long long p = 1, long long q = 1) {
    return AngleValue::symbol(name, rat(p, q));
}

inline const IrrationalBasis& basis() {
    static const IrrationalBasis b({"alpha", "beta", "gamma"}, {{"alpha", std::sqrt(2.0) - 1.0},
                                                                {"beta", std::sqrt(3.0) - 1.0},
                                                                {"gamma", std::sqrt(5.0) - 2.0}});
    return b;
}

inline RotationVector rv(GroupId g, std::vector<AngleValue> a) { return RotationVector{g, std::move(a)}; }

inline long long uniform(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Rational part with denominator <= max_den, plus random small alpha/beta terms.
inline AngleValue random_angle(Rng& rng, bool symbolic = true, long long max_den = 12) {
    long long den = uniform(rng, 1, max_den);
    Rational r = rat(uniform(rng, 0, den - 1), den);
    std::map<std::string, Rational> c;
    if (symbolic && uniform(rng, 0, 1)) {
        long long a = uniform(rng, -3, 3);
        if (a) c["alpha"] = rat(a, uniform(rng, 1, 3));
        if (uniform(rng, 0, 2) == 0) c["beta"] = rat(uniform(rng, -2, 2));
    }
    return AngleValue(r, c);
}

inline RotationVector random_rv(GroupId g, Rng& rng, bool symbolic = true) {
    RotationVector r{g, {random_angle(rng, symbolic)}};
    if (group_arity(g) == 2) r.angles.push_back(random_angle(rng, symbolic));
    return r;
}

/// Distance of x from the nearest integer.
inline double circ(double x) { return std::fabs(x - std::round(x)); }

inline GroupElement conjugate_by(const GroupElement& v, const GroupElement& g) {
    return multiply(multiply(v, g), inverse(v));
}

inline constexpr GroupId kFive[] = {GroupId::SU2, GroupId::U2, GroupId::SO3, GroupId::SO3xS1, GroupId::SpinC3};
inline constexpr GroupId kAll[] = {GroupId::SU2,    GroupId::U2,     GroupId::SO3,
                                   GroupId::SO3xS1, GroupId::SpinC3, GroupId::SU2xS1};

}  // namespace testing
