#include "classifier.hpp"

#include "coverings.hpp"

#include <cmath>

namespace rotconj {

namespace {

std::vector<int> phi_signs(const AngleValue& phi, const AngleValue& phi_prime) {
    std::vector<int> out;
    if (phi_prime == phi) out.push_back(1);
    if (phi_prime == angle_neg(phi)) out.push_back(-1);
    return out;
}

Verdict decide_lattice(const RotationVector& rho, const RotationVector& rho_prime, long long multiplier) {
    const AngleValue &theta = rho.angles[0], &phi = rho.angles[1];
    const auto signs = phi_signs(phi, rho_prime.angles[1]);
    if (signs.empty()) return Verdict::no("phi-mismatch");
    auto sol = solve_affine_lattice(theta, phi, rho_prime.angles[0], multiplier);
    if (sol) return Verdict::yes(sol, signs.front());
    if (multiplier > 1 && solve_affine_lattice(theta, phi, rho_prime.angles[0], 1))
        return Verdict::no("odd-coefficient");
    return Verdict::no("theta-mismatch");
}

/// Automorphisms of U(2) are inner, possibly composed with entrywise
/// conjugation; on the torus they act on (theta, phi) as these four maps.
std::optional<Verdict> u2_type_automorphism(const RotationVector& rho, const RotationVector& rho_prime) {
    const AngleValue &theta = rho.angles[0], &phi = rho.angles[1];
    const AngleValue &theta_p = rho_prime.angles[0], &phi_p = rho_prime.angles[1];
    struct Image {
        int s;
        long long n;
        int sigma;
    };
    for (const Image& im : {Image{1, 0, 1}, Image{-1, -1, 1}, Image{-1, 0, -1}, Image{1, 1, -1}}) {
        if (phi_p != angle_scale(phi, Rational(im.sigma))) continue;
        auto np = lattice_residue(theta, phi, theta_p, 1, im.s, im.n);
        if (!np) continue;
        return Verdict::yes(LatticeSolution{im.s, im.n, *np}, im.sigma);
    }
    return std::nullopt;
}

std::optional<Verdict> so3xs1_automorphism(const RotationVector& rho, const RotationVector& rho_prime) {
    const auto signs = phi_signs(rho.angles[1], rho_prime.angles[1]);
    if (signs.empty()) return std::nullopt;
    Verdict circle = decide_circle(rho.angles[0], rho_prime.angles[0]);
    if (!circle.conjugate()) return std::nullopt;
    return Verdict::yes(circle.solution, signs.front());
}

Verdict decide_algebraic(GroupId group, const RotationVector& rho, const RotationVector& rho_prime) {
    switch (group) {
        case GroupId::U2:
        case GroupId::SU2xS1: {
            auto v = u2_type_automorphism(rho, rho_prime);
            return v ? *v : Verdict::no("eigenvalue-mismatch");
        }
        case GroupId::SO3xS1: {
            auto v = so3xs1_automorphism(rho, rho_prime);
            return v ? *v : Verdict::no("automorphism-mismatch");
        }
        case GroupId::SpinC3: {
            if (auto v = u2_type_automorphism(rho, rho_prime)) return *v;
            const Covering down = make_covering(CoveringKind::SpinC3_to_SO3xS1);
            RotationVector base = pushforward(down, rho), base_p = pushforward(down, rho_prime);
            if (!so3xs1_automorphism(base, base_p)) return Verdict::no("descent-refuted");
            return Verdict::unknown("descent-inconclusive");
        }
        default: break;
    }
    return decide_circle(rho.angles[0], rho_prime.angles[0]);
}

}  // namespace

const char* mode_name(ConjugacyMode m) {
    switch (m) {
        case ConjugacyMode::Topological: return "topological";
        case ConjugacyMode::Smooth: return "smooth";
        case ConjugacyMode::Algebraic: return "algebraic";
    }
    return "?";
}

std::optional<ConjugacyMode> parse_mode(const std::string& name) {
    for (ConjugacyMode m : {ConjugacyMode::Topological, ConjugacyMode::Smooth, ConjugacyMode::Algebraic})
        if (name == mode_name(m)) return m;
    return std::nullopt;
}

long long lattice_multiplier(GroupId group) { return group == GroupId::SO3xS1 ? 2 : 1; }

Verdict decide(GroupId group, ConjugacyMode mode, const RotationVector& rho, const RotationVector& rho_prime) {
    if (rho.group != group || rho_prime.group != group)
        throw ValidationError("group", std::string("rotation vectors must belong to ") + group_name(group));
    check_arity(rho);
    check_arity(rho_prime);
    for (const auto* r : {&rho, &rho_prime})
        for (const auto& a : r->angles)
            if (!a.is_exact()) return Verdict::unknown("inexact-input");

    if (group_arity(group) == 1) return decide_circle(rho.angles[0], rho_prime.angles[0]);
    if (mode == ConjugacyMode::Algebraic) return decide_algebraic(group, rho, rho_prime);
    return decide_lattice(rho, rho_prime, lattice_multiplier(group));
}

ElementDecision decide_elements(const GroupElement& g, const GroupElement& g_prime, ConjugacyMode mode) {
    if (g.group() != g_prime.group())
        throw ValidationError("group", std::string("group mismatch: ") + group_name(g.group()) + " vs " +
                                           group_name(g_prime.group()));
    TorusReduction r = reduce_to_torus(g), rp = reduce_to_torus(g_prime);
    bool exact = true;
    for (const auto* red : {&r, &rp})
        for (const auto& a : red->rho.angles) exact = exact && a.is_exact();
    if (exact) return {decide(g.group(), mode, r.rho, rp.rho), r, rp};

    bool close = true;
    for (size_t i = 0; i < r.numeric_rho.size(); ++i) {
        double d = std::fabs(r.numeric_rho[i] - rp.numeric_rho[i]);
        close = close && std::min(d, 1.0 - d) < 1e-9;
    }
    if (!close) return {Verdict::unknown("inexact-input"), r, rp};
    Verdict v = Verdict::yes(LatticeSolution{1, 0, 0}, group_arity(g.group()) == 2 ? 1 : 0);
    v.certificate = "numeric";
    return {v, r, rp};
}

}  // namespace rotconj
