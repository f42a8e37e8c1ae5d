#include "acceptance.hpp"

#include "classifier.hpp"
#include "coverings.hpp"
#include "orbits.hpp"
#include "witnesses.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

namespace rotconj {

namespace {

const IrrationalBasis& basis() {
    static const IrrationalBasis b({"alpha", "beta"},
                                   {{"alpha", std::sqrt(2.0) - 1.0}, {"beta", std::sqrt(3.0) - 1.0}});
    return b;
}

long long uniform(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

Rational rat(long long p, long long q = 1) {
    Rational r(static_cast<long>(p), static_cast<long>(q));
    r.canonicalize();
    return r;
}

AngleValue random_rational_angle(Rng& rng, long long max_den) {
    long long den = uniform(rng, 1, max_den);
    return AngleValue(rat(uniform(rng, 0, den - 1), den));
}

/// Rational part with denominator <= 12 plus, half the time, small multiples
/// of alpha and beta.
AngleValue random_mixed_angle(Rng& rng) {
    AngleValue a = random_rational_angle(rng, 12);
    if (uniform(rng, 0, 1) == 0) return a;
    std::map<std::string, Rational> coeffs;
    long long ca = uniform(rng, -3, 3);
    if (ca != 0) coeffs["alpha"] = rat(ca, uniform(rng, 1, 2));
    if (uniform(rng, 0, 3) == 0) coeffs["beta"] = rat(uniform(rng, 1, 2));
    return AngleValue(a.rational(), coeffs);
}

RotationVector random_rho(GroupId group, Rng& rng) {
    RotationVector r{group, {random_mixed_angle(rng)}};
    if (group_arity(group) == 2) r.angles.push_back(random_mixed_angle(rng));
    return r;
}

long long criterion_multiplier(GroupId group) { return group == GroupId::SO3xS1 ? 2 : 1; }

/// A pair satisfying the topological criterion by construction:
/// theta' = s theta + M n phi + n', phi' = sigma phi.
RotationVector engineered_partner(GroupId group, const RotationVector& rho, Rng& rng) {
    const Rational s = uniform(rng, 0, 1) ? rat(1) : rat(-1);
    const long long n = uniform(rng, -5, 5), n_prime = uniform(rng, -3, 3);
    RotationVector out{group, {}};
    AngleValue theta = s * rho.angles[0] + AngleValue(rat(n_prime));
    if (group_arity(group) == 1) {
        out.angles.push_back(theta);
        return out;
    }
    const Rational sigma = uniform(rng, 0, 1) ? rat(1) : rat(-1);
    theta = theta + rat(criterion_multiplier(group) * n) * rho.angles[1];
    out.angles = {theta, sigma * rho.angles[1]};
    return out;
}

/// A partner violating the criterion in the theta coordinate by construction
/// whenever phi is irrational (odd coefficient for SO3xS1, extra symbol otherwise).
RotationVector broken_partner(GroupId group, const RotationVector& rho, Rng& rng) {
    RotationVector out = engineered_partner(group, rho, rng);
    if (group == GroupId::SO3xS1 && uniform(rng, 0, 1) == 0)
        out.angles[0] = out.angles[0] + rho.angles[1];
    else
        out.angles[0] = out.angles[0] + AngleValue::symbol("beta", rat(1, 3)) + random_rational_angle(rng, 6);
    return out;
}

constexpr GroupId kFiveGroups[] = {GroupId::SU2, GroupId::U2, GroupId::SO3, GroupId::SO3xS1, GroupId::SpinC3};

struct Tally {
    long long total = 0;
    long long failures = 0;
    std::string first_failure;
    void record(bool ok, const std::string& what) {
        ++total;
        if (!ok && failures++ == 0) first_failure = what;
    }
};

std::string describe(const RotationVector& r) {
    std::string out = "(";
    for (size_t i = 0; i < r.angles.size(); ++i) out += (i ? ", " : "") + r.angles[i].to_string();
    return out + ")";
}

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

std::string summarize(const Tally& t) {
    std::string out = std::to_string(t.total - t.failures) + "/" + std::to_string(t.total) + " ok";
    if (t.failures) out += "; first failure: " + t.first_failure;
    return out;
}

CriterionResult c1_soundness(std::uint64_t seed) {
    Rng rng(seed);
    Tally tally;
    double worst = 0.0;
    for (GroupId g : kFiveGroups) {
        for (int i = 0; i < 200; ++i) {
            RotationVector rho = random_rho(g, rng);
            RotationVector rho_p = engineered_partner(g, rho, rng);
            Verdict v = decide(g, ConjugacyMode::Topological, rho, rho_p);
            std::string tag = std::string(group_name(g)) + " " + describe(rho) + " -> " + describe(rho_p);
            if (!v.conjugate()) {
                tally.record(false, tag + ": verdict " + status_name(v.status));
                continue;
            }
            Witness w = build_witness(g, rho, rho_p, v, basis());
            double err = verify_conjugacy(w, torus_element(rho, basis()), torus_element(rho_p, basis()), 1000,
                                          seed + static_cast<std::uint64_t>(i));
            worst = std::max(worst, err);
            tally.record(err < 1e-9, tag + ": max_error " + format_double(err));
        }
    }
    return {1, "soundness loop", tally.failures == 0, summarize(tally) + "; worst error " + format_double(worst)};
}

CriterionResult c2_necessity(std::uint64_t) {
    Tally tally;
    std::vector<std::pair<long long, long long>> fracs;  // (p, q)
    for (long long p = 1; p <= 8; ++p)
        for (long long q = 0; q < p; ++q)
            if (std::gcd(p, q) == 1) fracs.emplace_back(p, q);
    for (GroupId g : {GroupId::SU2, GroupId::SO3})
        for (auto [p, q] : fracs)
            for (auto [pp, qp] : fracs) {
                RotationVector rho{g, {AngleValue(rat(q, p))}}, rho_p{g, {AngleValue(rat(qp, pp))}};
                Verdict v = decide(g, ConjugacyMode::Topological, rho, rho_p);
                const bool expected = p == pp && ((qp - q) % p == 0 || (qp + q) % p == 0);
                std::string tag = std::string(group_name(g)) + " " + std::to_string(q) + "/" + std::to_string(p) +
                                  " vs " + std::to_string(qp) + "/" + std::to_string(pp);
                if (v.conjugate() != expected) {
                    tally.record(false, tag + ": verdict disagrees with q' = +-q mod p");
                    continue;
                }
                if (expected) {
                    tally.record(true, tag);
                    continue;
                }
                // Brute-force obstruction: iterate both translations.
                const GroupElement a = torus_element(rho, basis()), b = torus_element(rho_p, basis());
                auto period_a = orbit_period(a, 64), period_b = orbit_period(b, 64);
                bool obstruction;
                std::string expected_reason;
                if (period_a != period_b) {
                    obstruction = true;
                    expected_reason = "orbit-size";
                } else {
                    obstruction = distance(a, b) > 1e-6 && distance(inverse(a), b) > 1e-6;
                    expected_reason = "sign-exhausted";
                }
                tally.record(obstruction && v.reason == expected_reason,
                             tag + ": reason " + v.reason + ", brute force says " + expected_reason);
            }
    return {2, "necessity at rational scale", tally.failures == 0, summarize(tally)};
}

CriterionResult c3_separation(std::uint64_t seed) {
    const AngleValue alpha = AngleValue::symbol("alpha");
    std::vector<std::string> problems;
    RotationVector so{GroupId::SO3xS1, {AngleValue(), alpha}}, so_p{GroupId::SO3xS1, {alpha, alpha}};
    Verdict v1 = decide(GroupId::SO3xS1, ConjugacyMode::Topological, so, so_p);
    if (v1.status != Status::NotConjugate || v1.reason != "odd-coefficient")
        problems.push_back(std::string("so3xs1 verdict ") + status_name(v1.status) + " (" + v1.reason + ")");

    RotationVector sp{GroupId::SpinC3, {AngleValue(), alpha}}, sp_p{GroupId::SpinC3, {alpha, alpha}};
    Verdict v2 = decide(GroupId::SpinC3, ConjugacyMode::Topological, sp, sp_p);
    double err = INFINITY;
    if (!v2.conjugate() || !v2.solution || v2.solution->n != 1) {
        problems.push_back(std::string("spinc3 verdict ") + status_name(v2.status));
    } else {
        Witness w = build_witness(GroupId::SpinC3, sp, sp_p, v2, basis());
        err = verify_conjugacy(w, torus_element(sp, basis()), torus_element(sp_p, basis()), 1000, seed);
        if (!(err < 1e-9)) problems.push_back("spinc3 witness error " + format_double(err));
    }
    std::string detail = problems.empty() ? "so3xs1 odd-coefficient; spinc3 conjugate n=1, max_error " +
                                                format_double(err)
                                          : problems.front();
    return {3, "so3xs1 vs spinc3 separation", problems.empty(), detail};
}

CriterionResult c4_mode_splits(std::uint64_t) {
    const AngleValue alpha = AngleValue::symbol("alpha");
    const AngleValue quarter(rat(1, 4));
    struct Case {
        GroupId group;
        long long coefficient;
    };
    std::vector<std::string> notes;
    bool ok = true;
    for (Case c : {Case{GroupId::U2, 2}, Case{GroupId::SO3xS1, 2}, Case{GroupId::SpinC3, 1}}) {
        RotationVector rho{c.group, {quarter, alpha}};
        RotationVector rho_p{c.group, {quarter + rat(c.coefficient) * alpha, alpha}};
        Verdict top = decide(c.group, ConjugacyMode::Topological, rho, rho_p);
        Verdict smooth = decide(c.group, ConjugacyMode::Smooth, rho, rho_p);
        Verdict alg = decide(c.group, ConjugacyMode::Algebraic, rho, rho_p);
        bool alg_ok = alg.status == Status::NotConjugate;
        if (c.group == GroupId::SpinC3) {
            // Unknown is acceptable only when the descent refutation is unavailable.
            alg_ok = alg_ok || (alg.status == Status::Unknown && alg.reason == "descent-inconclusive");
            notes.push_back(std::string("spinc3 algebraic ") + status_name(alg.status) + " via " + alg.reason);
        }
        if (!(top.conjugate() && smooth.conjugate() && alg_ok)) {
            ok = false;
            notes.insert(notes.begin(), std::string(group_name(c.group)) + ": top " + status_name(top.status) +
                                            ", smooth " + status_name(smooth.status) + ", algebraic " +
                                            status_name(alg.status));
        }
    }
    std::string detail = ok ? "u2, so3xs1, spinc3 split as expected" : "";
    for (const auto& n : notes) detail += (detail.empty() ? "" : "; ") + n;
    return {4, "mode splits", ok, detail};
}

CriterionResult c5_smooth_equals_topological(std::uint64_t seed) {
    Rng rng(seed ^ 0x55);
    Tally tally;
    long long conjugate = 0;
    for (GroupId g : kFiveGroups)
        for (int i = 0; i < 500; ++i) {
            RotationVector rho = random_rho(g, rng);
            RotationVector rho_p;
            switch (uniform(rng, 0, 2)) {
                case 0: rho_p = engineered_partner(g, rho, rng); break;
                case 1: rho_p = broken_partner(g, rho, rng); break;
                default: rho_p = random_rho(g, rng); break;
            }
            Verdict top = decide(g, ConjugacyMode::Topological, rho, rho_p);
            Verdict smooth = decide(g, ConjugacyMode::Smooth, rho, rho_p);
            conjugate += top.conjugate();
            tally.record(top.status == smooth.status,
                         std::string(group_name(g)) + " " + describe(rho) + " -> " + describe(rho_p));
        }
    return {5, "smooth equals topological", tally.failures == 0,
            summarize(tally) + " (" + std::to_string(conjugate) + " conjugate pairs)"};
}

CriterionResult c6_orbit_closures(std::uint64_t) {
    Tally tally;
    const AngleValue alpha = AngleValue::symbol("alpha");
    for (long long p = 1; p <= 7; ++p)
        for (long long q = 0; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            RotationVector rho{GroupId::U2, {AngleValue(rat(q, p)), alpha}};
            OrbitClosure c = classify_orbit_closure(GroupId::U2, rho);
            long long clusters = count_components(sample_orbit(GroupId::U2, rho, 5000, basis()), 0.05);
            tally.record(c.kind == ClosureKind::Circles && c.count == p && clusters == p,
                         describe(rho) + ": " + closure_kind_name(c.kind) + "(" + std::to_string(c.count) +
                             "), clusters " + std::to_string(clusters));
        }
    std::vector<std::pair<long long, long long>> fracs;
    for (long long p = 1; p <= 6; ++p)
        for (long long q = 0; q < p; ++q)
            if (std::gcd(p, q) == 1) fracs.emplace_back(p, q);
    for (auto [b, a] : fracs)
        for (auto [d, c] : fracs) {
            RotationVector rho{GroupId::U2, {AngleValue(rat(a, b)), AngleValue(rat(c, d))}};
            OrbitClosure cl = classify_orbit_closure(GroupId::U2, rho);
            long long clusters = count_components(sample_orbit(GroupId::U2, rho, 5000, basis()), 0.05);
            const long long expected = std::lcm(b, d);
            tally.record(cl.kind == ClosureKind::FinitePoints && cl.count == expected && clusters == expected,
                         describe(rho) + ": count " + std::to_string(cl.count) + ", clusters " +
                             std::to_string(clusters) + ", lcm " + std::to_string(expected));
        }
    return {6, "orbit-closure oracle agreement", tally.failures == 0, summarize(tally)};
}

RotationVector random_base_partner(const Covering& c, const RotationVector& rho, Rng& rng) {
    switch (uniform(rng, 0, 3)) {
        case 0:
        case 1: return engineered_partner(c.target(), rho, rng);
        case 2: {
            if (group_arity(c.target()) == 1) return random_rho(c.target(), rng);
            RotationVector out = engineered_partner(c.target(), rho, rng);
            out.angles[0] = out.angles[0] + rho.angles[1];
            return out;
        }
        default: return random_rho(c.target(), rng);
    }
}

CriterionResult c7_coverings(std::uint64_t seed) {
    Rng rng(seed ^ 0x77);
    Tally hom, lifts, corr;
    double worst = 0.0;
    std::vector<Covering> coverings = {make_covering(CoveringKind::SU2_to_SO3),
                                       make_covering(CoveringKind::U2_to_SO3xS1),
                                       make_covering(CoveringKind::U2_to_SpinC3),
                                       make_covering(CoveringKind::U2_selfcover, 3),
                                       make_covering(CoveringKind::SpinC3_to_SO3xS1)};
    for (const Covering& c : coverings) {
        for (int i = 0; i < 1000; ++i) {
            GroupElement a = sample_haar(c.source(), rng), b = sample_haar(c.source(), rng);
            double d = distance(project(c, multiply(a, b)), multiply(project(c, a), project(c, b)));
            worst = std::max(worst, d);
            hom.record(d < 1e-12, c.name() + ": homomorphism defect " + format_double(d));
        }
        for (int i = 0; i < 50; ++i) {
            RotationVector rho = random_rho(c.target(), rng);
            for (const auto& up : lift_rotation_vectors(c, rho)) {
                RotationVector down = pushforward(c, up);
                bool same = down.angles.size() == rho.angles.size();
                for (size_t k = 0; same && k < rho.angles.size(); ++k) same = down.angles[k] == rho.angles[k];
                lifts.record(same, c.name() + ": lift " + describe(up) + " of " + describe(rho));
            }
        }
        for (int i = 0; i < 200; ++i) {
            RotationVector rho = random_rho(c.target(), rng);
            RotationVector rho_p = random_base_partner(c, rho, rng);
            bool up = check_lift_correspondence(c, rho, rho_p);
            bool down = decide(c.target(), ConjugacyMode::Topological, rho, rho_p).conjugate();
            corr.record(up == down, c.name() + " " + describe(rho) + " -> " + describe(rho_p) + ": lift " +
                                        (up ? "yes" : "no") + ", base " + (down ? "yes" : "no"));
        }
    }
    bool ok = hom.failures == 0 && lifts.failures == 0 && corr.failures == 0;
    std::string detail = "homomorphism " + summarize(hom) + " (worst " + format_double(worst) + "); lifts " +
                         summarize(lifts) + "; correspondence " + summarize(corr);
    return {7, "covering homomorphism and lift consistency", ok, detail};
}

CriterionResult c8_weyl(std::uint64_t seed) {
    Rng rng(seed ^ 0x88);
    Tally exact_tally, haar_tally;
    auto check_pair = [](const TorusReduction& a, const TorusReduction& b) {
        const AngleValue &t1 = a.rho.angles[0], &phi = a.rho.angles[1], &t2 = b.rho.angles[0];
        Verdict v = decide(GroupId::U2, ConjugacyMode::Topological, a.rho, b.rho);
        return v.conjugate() && b.rho.angles[1] == phi && lattice_residue(t1, phi, t2, 1, -1, -1).has_value();
    };
    for (int i = 0; i < 500; ++i) {
        // Exact instance: a conjugate of a torus point with rational parameters.
        std::vector<double> params{static_cast<double>(uniform(rng, 0, 23)) / 24.0,
                                   static_cast<double>(uniform(rng, 0, 23)) / 24.0};
        GroupElement v = sample_haar(GroupId::U2, rng);
        GroupElement g = multiply(multiply(v, torus_element(GroupId::U2, params)), inverse(v));
        TorusReduction a = reduce_to_torus(g, WeylChoice::Canonical), b = reduce_to_torus(g, WeylChoice::Alternate);
        exact_tally.record(check_pair(a, b), describe(a.rho) + " vs " + describe(b.rho));

        // Haar instance: the two numeric orderings satisfy theta2 = -theta1 - phi.
        GroupElement h = sample_haar(GroupId::U2, rng);
        TorusReduction ha = reduce_to_torus(h, WeylChoice::Canonical), hb = reduce_to_torus(h, WeylChoice::Alternate);
        double r = ha.numeric_rho[0] + hb.numeric_rho[0] + ha.numeric_rho[1];
        double defect = std::fabs(r - std::round(r)) + std::fabs(ha.numeric_rho[1] - hb.numeric_rho[1]);
        bool conj_ok = distance(multiply(multiply(ha.conjugator, h), inverse(ha.conjugator)), ha.torus_rep) < 1e-9 &&
                       distance(multiply(multiply(hb.conjugator, h), inverse(hb.conjugator)), hb.torus_rep) < 1e-9;
        haar_tally.record(defect < 1e-9 && conj_ok, "haar sample " + std::to_string(i) + ": defect " +
                                                        format_double(defect));
    }
    bool ok = exact_tally.failures == 0 && haar_tally.failures == 0;
    return {8, "weyl ambiguity", ok, "exact " + summarize(exact_tally) + "; haar " + summarize(haar_tally)};
}

double reference_rotation_number(double base, double amplitude, long long n) {
    long double x = 0.0L;
    for (long long i = 0; i < n; ++i)
        x = x + base + amplitude * std::sin(2.0L * 3.14159265358979323846264338327950288L * x);
    return static_cast<double>(x / static_cast<long double>(n));
}

CriterionResult c9_rotation_number(std::uint64_t) {
    std::vector<std::string> problems;
    for (double theta : {0.0, 0.3, 0.7, 1.0 / 3.0, std::sqrt(2.0) - 1.0}) {
        double est = estimate_rotation_number([theta](double x) { return x + theta; }, 100);
        double err = std::min(std::fabs(est - theta), 1.0 - std::fabs(est - theta));
        if (!(err < 1e-12)) problems.push_back("rigid " + format_double(theta) + " error " + format_double(err));
    }
    auto lift = [](double x) { return x + 0.7 + 0.01 * std::sin(kTwoPi * x); };
    const double reference = reference_rotation_number(0.7, 0.01, 10000000);
    double e3 = std::fabs(estimate_rotation_number(lift, 1000) - reference);
    double e5 = std::fabs(estimate_rotation_number(lift, 100000) - reference);
    if (!(e5 < e3)) problems.push_back("perturbed error did not shrink: " + format_double(e3) + " -> " + format_double(e5));
    std::string detail = problems.empty() ? "rigid exact to 1e-12; perturbed error " + format_double(e3) + " -> " +
                                                format_double(e5)
                                          : problems.front();
    return {9, "rotation-number estimator", problems.empty(), detail};
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    CriterionResult r;
    try {
        switch (id) {
            case 1: r = c1_soundness(seed); break;
            case 2: r = c2_necessity(seed); break;
            case 3: r = c3_separation(seed); break;
            case 4: r = c4_mode_splits(seed); break;
            case 5: r = c5_smooth_equals_topological(seed); break;
            case 6: r = c6_orbit_closures(seed); break;
            case 7: r = c7_coverings(seed); break;
            case 8: r = c8_weyl(seed); break;
            case 9: r = c9_rotation_number(seed); break;
            default: throw std::invalid_argument("criterion id must be in 1..9");
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (id == 1 && r.passed && r.seconds >= 60.0) {
        r.passed = false;
        r.detail += "; exceeded 60 s";
    }
    if (id == 6 && r.passed && r.seconds >= 120.0) {
        r.passed = false;
        r.detail += "; exceeded 120 s";
    }
    return r;
}

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, const CriterionReporter& report) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= 9; ++id) {
        out.push_back(run_criterion(id, seed));
        if (report) report(out.back());
    }
    return out;
}

}  // namespace rotconj
