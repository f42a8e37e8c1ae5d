#include "witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace rotconj {

namespace {

const Quat kQuatI{0, 1, 0, 0};
const Mat3 kWeylSO3{0, 1, 0, 1, 0, 0, 0, 0, -1};

Quat torus_quat(Complex z) { return Quat{z.real(), 0.0, 0.0, z.imag()}; }

Complex int_power(Complex z, long long k) {
    Complex base = k < 0 ? std::conj(z) : z;
    unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
    Complex acc(1.0, 0.0);
    while (e) {
        if (e & 1ULL) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc / std::abs(acc);
}

int case_tag_for(int s, int sigma) {
    if (s > 0) return sigma > 0 ? 1 : 2;
    return sigma > 0 ? 3 : 4;
}

[[noreturn]] void inconsistent(const std::string& what) {
    throw ValidationError("witness", "inconsistent solution: " + what);
}

/// Spin^C(3) witness with downstairs parameters (s, m, sigma), realized as the
/// descent of the SU2xS1 twist with exponent 2m - s + sigma.
Witness spinc3_witness(int s, long long m, int sigma) {
    Witness up = twist_witness(GroupId::SU2xS1, s, 2 * m - s + sigma, sigma);
    Witness w = descend_map(make_covering(CoveringKind::U2_to_SpinC3), up);
    if (w.kind == WitnessKind::Descended) w.twist = m;
    return w;
}

std::vector<int> phi_signs(const AngleValue& phi, const AngleValue& phi_prime) {
    std::vector<int> out;
    if (phi_prime == phi) out.push_back(1);
    if (phi_prime == angle_neg(phi)) out.push_back(-1);
    return out;
}

/// Witnesses on `group` (SU2, SU2xS1 or SpinC3) carrying rho to rho_prime,
/// twist exponents taken from the lattice family within +-window steps.
std::vector<Witness> witness_family(GroupId group, const RotationVector& rho, const RotationVector& rho_prime,
                                    long long window) {
    std::vector<Witness> out;
    if (group == GroupId::SU2) {
        if (rho_prime.angles[0] == rho.angles[0]) out.push_back(identity_witness(GroupId::SU2));
        if (rho_prime.angles[0] == angle_neg(rho.angles[0])) {
            Witness w;
            w.group = GroupId::SU2;
            w.kind = WitnessKind::FixedConjugation;
            w.conjugator = GroupElement::su2(kQuatI);
            w.theta_sign = -1;
            out.push_back(w);
        }
        return out;
    }
    const AngleValue &theta = rho.angles[0], &phi = rho.angles[1];
    const AngleValue &theta_p = rho_prime.angles[0], &phi_p = rho_prime.angles[1];
    struct Cand {
        long long m;
        int s, sigma;
    };
    std::vector<Cand> cands;
    for (int sigma : phi_signs(phi, phi_p))
        for (int s : {1, -1}) {
            auto fam = solve_affine_lattice_family(theta, phi, theta_p, 1, s);
            if (!fam) continue;
            if (fam->step == 0) {
                cands.push_back({fam->n0, s, sigma});
                continue;
            }
            long long base = ((fam->n0 % fam->step) + fam->step) % fam->step;
            for (long long k = -window; k <= window; ++k) cands.push_back({base + k * fam->step, s, sigma});
        }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (std::llabs(a.m) != std::llabs(b.m)) return std::llabs(a.m) < std::llabs(b.m);
        return a.m > b.m;
    });
    for (const auto& c : cands)
        out.push_back(group == GroupId::SpinC3 ? spinc3_witness(c.s, c.m, c.sigma)
                                               : twist_witness(group, c.s, c.m, c.sigma));
    return out;
}

}  // namespace

const char* witness_kind_name(WitnessKind k) {
    switch (k) {
        case WitnessKind::Identity: return "identity";
        case WitnessKind::FixedConjugation: return "fixed-conjugation";
        case WitnessKind::DetTwist: return "det-twist";
        case WitnessKind::DetTwistFlip: return "det-twist-flip";
        case WitnessKind::Descended: return "descended";
    }
    return "?";
}

Witness identity_witness(GroupId group) {
    Witness w;
    w.group = group;
    w.kind = WitnessKind::Identity;
    w.case_tag = group_arity(group) == 2 ? 1 : 0;
    return w;
}

Witness twist_witness(GroupId group, int theta_sign, long long twist, int phi_sign) {
    if (group != GroupId::U2 && group != GroupId::SU2xS1)
        throw std::invalid_argument("twist witnesses live on U2 or SU2xS1");
    if (theta_sign > 0 && phi_sign > 0 && twist == 0) return identity_witness(group);
    Witness w;
    w.group = group;
    w.kind = theta_sign > 0 ? WitnessKind::DetTwist : WitnessKind::DetTwistFlip;
    w.twist = twist;
    w.theta_sign = theta_sign;
    w.phi_sign = phi_sign;
    w.case_tag = case_tag_for(theta_sign, phi_sign);
    return w;
}

std::vector<DescentCandidate> descent_candidates(const Covering& c, const RotationVector& rho,
                                                 const RotationVector& rho_prime) {
    const auto lifts = lift_rotation_vectors(c, rho);
    const auto lifts_prime = lift_rotation_vectors(c, rho_prime);
    const long long window = 2 * c.fold() + 2;
    std::vector<DescentCandidate> out;
    for (const auto& lp : lifts_prime)
        for (auto& w : witness_family(c.source(), lifts[0], lp, window))
            if (preserves_deck(c, as_map(w))) out.push_back({w, lifts[0], lp});
    return out;
}

Witness build_witness(GroupId group, const RotationVector& rho, const RotationVector& rho_prime,
                      const Verdict& verdict, const IrrationalBasis& basis) {
    check_arity(rho);
    check_arity(rho_prime);
    if (rho.group != group || rho_prime.group != group) throw ValidationError("group", "rotation vector group mismatch");
    if (!verdict.conjugate()) throw ValidationError("witness", "no witness exists for a non-conjugate verdict");
    for (const auto* r : {&rho, &rho_prime})
        for (const auto& a : r->angles)
            if (!a.is_exact()) throw ValidationError("exactness", "witness construction needs exact angles");

    bool same = true;
    for (size_t i = 0; i < rho.angles.size(); ++i) same = same && rho.angles[i] == rho_prime.angles[i];
    if (same) return identity_witness(group);
    if (!verdict.solution) inconsistent("missing lattice solution");
    const LatticeSolution sol = *verdict.solution;

    if (group == GroupId::SU2 || group == GroupId::SO3) {
        if (rho_prime.angles[0] != angle_scale(rho.angles[0], Rational(sol.sign))) inconsistent("theta' != s theta");
        if (sol.sign > 0) return identity_witness(group);
        Witness w;
        w.group = group;
        w.kind = WitnessKind::FixedConjugation;
        w.conjugator = group == GroupId::SU2 ? GroupElement::su2(kQuatI) : GroupElement::so3(kWeylSO3);
        w.theta_sign = -1;
        return w;
    }

    const int sigma = verdict.phi_sign;
    if (sigma != 1 && sigma != -1) inconsistent("phi sign missing");
    if (rho_prime.angles[1] != angle_scale(rho.angles[1], Rational(sigma))) inconsistent("phi' != sigma phi");
    const long long mult = group == GroupId::SO3xS1 ? 2 : 1;
    if (!lattice_residue(rho.angles[0], rho.angles[1], rho_prime.angles[0], mult, sol.sign, sol.n))
        inconsistent("theta' != s theta + n phi (mod 1)");

    if (group == GroupId::U2 || group == GroupId::SU2xS1) return twist_witness(group, sol.sign, sol.n, sigma);

    const Covering cover = make_covering(group == GroupId::SO3xS1 ? CoveringKind::U2_to_SO3xS1
                                                                  : CoveringKind::U2_to_SpinC3);
    auto cands = descent_candidates(cover, rho, rho_prime);
    const long long preferred = group == GroupId::SO3xS1 ? sol.n : 2 * sol.n - sol.sign + sigma;
    std::stable_partition(cands.begin(), cands.end(), [&](const DescentCandidate& d) {
        return d.upstairs.theta_sign == sol.sign && d.upstairs.phi_sign == sigma && d.upstairs.twist == preferred;
    });
    const GroupElement g = torus_element(rho, basis);
    const GroupElement gp = torus_element(rho_prime, basis);
    for (const auto& cand : cands) {
        Witness w = descend_map(cover, cand.upstairs);
        if (w.kind == WitnessKind::Descended) {
            const Witness& up = cand.upstairs;
            w.twist = group == GroupId::SO3xS1 ? up.twist : (up.twist + up.theta_sign - up.phi_sign) / 2;
        }
        if (verify_conjugacy(w, g, gp, 64, 0x5EED) < 1e-9) return w;
    }
    throw std::logic_error("no descending witness passed verification");
}

GroupElement apply_witness(const Witness& w, const GroupElement& u) {
    if (u.group() != w.group)
        throw ValidationError("group", std::string("witness on ") + group_name(w.group) + " applied to " +
                                           group_name(u.group()) + " element");
    switch (w.kind) {
        case WitnessKind::Identity: return u;
        case WitnessKind::FixedConjugation: return multiply(multiply(*w.conjugator, u), inverse(*w.conjugator));
        case WitnessKind::DetTwist:
        case WitnessKind::DetTwistFlip: {
            Quat v;
            Complex mu;
            if (u.group() == GroupId::U2) {
                std::tie(v, mu) = u2_to_product(u.mat2());
            } else {
                v = u.quat();
                mu = u.phase();
            }
            if (w.kind == WitnessKind::DetTwistFlip) v = kQuatI * v * conjugate(kQuatI);
            Quat v2 = torus_quat(int_power(mu, w.twist)) * v;
            Complex mu2 = w.phi_sign > 0 ? mu : std::conj(mu);
            if (u.group() == GroupId::U2) return GroupElement::u2(u2_from_product(v2, mu2));
            return GroupElement::su2xs1(v2, mu2);
        }
        case WitnessKind::Descended:
            return project(*w.covering, apply_witness(*w.upstairs, section(*w.covering, u)));
    }
    throw std::logic_error("unhandled witness kind");
}

ElementMap as_map(const Witness& w) {
    return [w](const GroupElement& u) { return apply_witness(w, u); };
}

ElementMap normalize_witness(const ElementMap& w, GroupId group) {
    const GroupElement shift = inverse(w(identity(group)));
    return [w, shift](const GroupElement& u) { return multiply(w(u), shift); };
}

double verify_conjugacy(const ElementMap& w, const GroupElement& g, const GroupElement& g_prime, int samples,
                        std::uint64_t seed) {
    if (g.group() != g_prime.group()) throw ValidationError("group", "group mismatch in verification");
    if (samples < 1) return 0.0;
    constexpr int kShard = 256;
    const int shards = (samples + kShard - 1) / kShard;
    auto run_shard = [&](int k) {
        Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(k + 1)));
        const int count = std::min(kShard, samples - k * kShard);
        double worst = 0.0;
        for (int i = 0; i < count; ++i) {
            GroupElement u = sample_haar(g.group(), rng);
            double d = distance(w(multiply(g, u)), multiply(g_prime, w(u)));
            if (std::isnan(d)) d = INFINITY;
            worst = std::max(worst, d);
        }
        return worst;
    };
    double worst = 0.0;
    if (std::thread::hardware_concurrency() > 1 && shards > 1) {
        std::vector<std::future<double>> parts;
        for (int k = 0; k < shards; ++k) parts.push_back(std::async(std::launch::async, run_shard, k));
        for (auto& f : parts) worst = std::max(worst, f.get());
    } else {
        for (int k = 0; k < shards; ++k) worst = std::max(worst, run_shard(k));
    }
    return worst;
}

double verify_conjugacy(const Witness& w, const GroupElement& g, const GroupElement& g_prime, int samples,
                        std::uint64_t seed) {
    if (g.group() != w.group) throw ValidationError("group", "witness group mismatch in verification");
    return verify_conjugacy(as_map(w), g, g_prime, samples, seed);
}

bool preserves_deck(const Covering& c, const ElementMap& upstairs) {
    const auto deck = deck_group(c);
    for (const auto& d : deck) {
        GroupElement image = upstairs(d);
        bool found = false;
        for (const auto& e : deck)
            if (distance(image, e) < kGroupTol) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace rotconj
