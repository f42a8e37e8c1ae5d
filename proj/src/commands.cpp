#include "commands.hpp"

#include "acceptance.hpp"

#include <cmath>

namespace rotconj {

namespace {

std::vector<long long> first_primes(size_t count) {
    std::vector<long long> out;
    for (long long n = 2; out.size() < count; ++n) {
        bool prime = true;
        for (long long p : out) {
            if (p * p > n) break;
            if (n % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) out.push_back(n);
    }
    return out;
}

json reduction_json(const TorusReduction& r) {
    return json{{"rho", to_json(r.rho)},
                {"numeric_rho", r.numeric_rho},
                {"torus_rep", to_json(r.torus_rep)},
                {"conjugator", to_json(r.conjugator)}};
}

json element_coordinates(const GroupElement& g) {
    json row = json::array();
    switch (g.group()) {
        case GroupId::SU2: row = {g.quat().w, g.quat().x, g.quat().y, g.quat().z}; break;
        case GroupId::U2:
            for (const Complex& z : g.mat2()) {
                row.push_back(z.real());
                row.push_back(z.imag());
            }
            break;
        case GroupId::SO3:
            for (double x : g.mat3()) row.push_back(x);
            break;
        case GroupId::SO3xS1:
            for (double x : g.mat3()) row.push_back(x);
            row.push_back(g.phase().real());
            row.push_back(g.phase().imag());
            break;
        case GroupId::SpinC3:
        case GroupId::SU2xS1:
            row = {g.quat().w, g.quat().x, g.quat().y, g.quat().z, g.phase().real(), g.phase().imag()};
            break;
    }
    return row;
}

std::vector<AngleValue> pseudo_angles(const std::string& text, size_t arity, const char* name, bool numeric) {
    auto angles = angles_from_text(text, AngleParseOptions{numeric});
    if (angles.size() != arity)
        throw ValidationError("arity", std::string(name) + " expects " + std::to_string(arity) + " angle(s), got " +
                                           std::to_string(angles.size()));
    return angles;
}

json angles_json(const std::vector<AngleValue>& angles) {
    json arr = json::array();
    for (const auto& a : angles) arr.push_back(to_json(a));
    return arr;
}

}  // namespace

GroupId require_group(const std::string& name) {
    auto g = parse_group(name);
    if (!g) throw ValidationError("unknown-group", "unknown group '" + name + "'");
    return *g;
}

ConjugacyMode require_mode(const std::string& name) {
    auto m = parse_mode(name);
    if (!m) throw ValidationError("mode", "unknown mode '" + name + "' (expected topological, smooth or algebraic)");
    return *m;
}

Covering require_covering(const std::string& name) {
    auto c = parse_covering(name);
    if (!c) throw ValidationError("unknown-group", "unknown covering '" + name + "'");
    return *c;
}

bool has_unknown_verdict(const json& result) {
    return result.is_object() && result.contains("verdict") && result["verdict"].is_object() &&
           result["verdict"].value("status", "") == status_name(Status::Unknown);
}

void Session::set_basis_json(const std::string& text) { config.basis = basis_from_json(parse_json_text(text, "basis")); }

RotationVector Session::parse_rho(GroupId group, const std::string& text) const {
    RotationVector rho{group, angles_from_text(text, AngleParseOptions{config.numeric})};
    check_arity(rho);
    return rho;
}

IrrationalBasis Session::resolve_basis(const std::vector<const RotationVector*>& rhos) const {
    std::set<std::string> symbols;
    for (const auto* r : rhos)
        for (const auto& a : r->angles) collect_symbols(a, symbols);
    if (config.basis) {
        for (const auto& s : symbols)
            if (!config.basis->contains(s)) throw ValidationError("basis", "undeclared symbol '" + s + "'");
        return *config.basis;
    }
    const auto primes = first_primes(symbols.size());
    std::vector<std::string> names(symbols.begin(), symbols.end());
    std::map<std::string, double> numeric;
    for (size_t i = 0; i < names.size(); ++i) {
        double root = std::sqrt(static_cast<double>(primes[i]));
        numeric[names[i]] = root - std::floor(root);
    }
    return IrrationalBasis(names, numeric);
}

json Session::classify(const std::string& group, const std::string& mode, const std::string& rho_text,
                       const std::string& rho_prime_text, int bound) const {
    const ConjugacyMode m = require_mode(mode);
    if (group == "circle") {
        auto a = pseudo_angles(rho_text, 1, "circle", config.numeric);
        auto b = pseudo_angles(rho_prime_text, 1, "circle", config.numeric);
        return json{{"group", group}, {"mode", mode_name(m)}, {"rho", angles_json(a)}, {"rho_prime", angles_json(b)},
                    {"verdict", to_json(decide_circle(a[0], b[0]))}};
    }
    if (group == "torus2") {
        if (bound < 1) throw ValidationError("bound", "entry bound must be at least 1");
        auto a = pseudo_angles(rho_text, 2, "torus2", config.numeric);
        auto b = pseudo_angles(rho_prime_text, 2, "torus2", config.numeric);
        Verdict v = decide_torus2({a[0], a[1]}, {b[0], b[1]}, bound);
        return json{{"group", group},       {"mode", mode_name(m)},       {"rho", angles_json(a)},
                    {"rho_prime", angles_json(b)}, {"bound", bound}, {"verdict", to_json(v)}};
    }
    const GroupId g = require_group(group);
    RotationVector rho = parse_rho(g, rho_text), rho_p = parse_rho(g, rho_prime_text);
    resolve_basis({&rho, &rho_p});
    Verdict v = decide(g, m, rho, rho_p);
    return json{{"group", group_name(g)}, {"mode", mode_name(m)},  {"rho", to_json(rho)},
                {"rho_prime", to_json(rho_p)}, {"verdict", to_json(v)}};
}

json Session::classify_elements(const std::string& group, const std::string& mode, const std::string& element,
                                const std::string& element_prime) const {
    const ConjugacyMode m = require_mode(mode);
    std::optional<GroupId> expected;
    if (!group.empty()) expected = require_group(group);
    GroupElement a = element_from_text(element, expected);
    GroupElement b = element_from_text(element_prime, expected ? expected : std::optional<GroupId>(a.group()));
    ElementDecision d = decide_elements(a, b, m);
    return json{{"group", group_name(a.group())},
                {"mode", mode_name(m)},
                {"reduction", reduction_json(d.reduction)},
                {"reduction_prime", reduction_json(d.reduction_prime)},
                {"verdict", to_json(d.verdict)}};
}

json Session::reduce(const std::string& group, const std::string& element) const {
    std::optional<GroupId> expected;
    if (!group.empty()) expected = require_group(group);
    GroupElement g = element_from_text(element, expected);
    TorusReduction canonical = reduce_to_torus(g, WeylChoice::Canonical);
    TorusReduction alternate = reduce_to_torus(g, WeylChoice::Alternate);
    json out = reduction_json(canonical);
    out["group"] = group_name(g.group());
    out["alternate"] = reduction_json(alternate);
    return out;
}

json Session::witness(const std::string& group, const std::string& rho_text, const std::string& rho_prime_text,
                      int verify_samples) const {
    const GroupId g = require_group(group);
    RotationVector rho = parse_rho(g, rho_text), rho_p = parse_rho(g, rho_prime_text);
    const IrrationalBasis basis = resolve_basis({&rho, &rho_p});
    Verdict v = decide(g, ConjugacyMode::Topological, rho, rho_p);
    json out{{"group", group_name(g)}, {"rho", to_json(rho)}, {"rho_prime", to_json(rho_p)}, {"verdict", to_json(v)}};
    if (!v.conjugate()) {
        out["witness"] = nullptr;
        return out;
    }
    Witness w = build_witness(g, rho, rho_p, v, basis);
    out["witness"] = to_json(w);
    if (verify_samples > 0) {
        out["samples"] = verify_samples;
        out["max_error"] = verify_conjugacy(w, torus_element(rho, basis), torus_element(rho_p, basis),
                                            verify_samples, config.seed);
    }
    return out;
}

json Session::verify(const std::string& group, const std::string& rho_text, const std::string& rho_prime_text,
                     int samples) const {
    if (samples < 1) throw ValidationError("samples", "sample count must be positive");
    json out = witness(group, rho_text, rho_prime_text, samples);
    if (out["witness"].is_null()) {
        out["max_error"] = nullptr;
        out["passed"] = false;
    } else {
        out["passed"] = out["max_error"].get<double>() < 1e-9;
    }
    return out;
}

json Session::orbit(const std::string& group, const std::string& rho_text, long long samples, double radius,
                    bool include_points) const {
    if (samples < 1) throw ValidationError("samples", "sample count must be positive");
    if (!(radius > 0.0)) throw ValidationError("radius", "clustering radius must be positive");
    const GroupId g = require_group(group);
    RotationVector rho = parse_rho(g, rho_text);
    const IrrationalBasis basis = resolve_basis({&rho});
    OrbitClosure closure = classify_orbit_closure(g, rho);
    auto points = sample_orbit(g, rho, samples, basis);
    long long clusters = count_components(points, radius);
    json out{{"group", group_name(g)},        {"rho", to_json(rho)},   {"closure", to_json(closure)},
             {"samples", samples},            {"radius", radius},      {"sampled_components", clusters},
             {"agrees", clusters == closure.components()}};
    if (include_points) {
        json pts = json::array();
        for (const auto& p : points) pts.push_back(element_coordinates(p));
        out["points"] = pts;
    }
    return out;
}

json Session::lift(const std::string& covering, const std::string& rho_text) const {
    const Covering c = require_covering(covering);
    RotationVector rho = parse_rho(c.target(), rho_text);
    json lifts = json::array();
    for (const auto& l : lift_rotation_vectors(c, rho)) lifts.push_back(to_json(l));
    return json{{"covering", c.name()},
                {"source", group_name(c.source())},
                {"target", group_name(c.target())},
                {"rho", to_json(rho)},
                {"lifts", lifts}};
}

json Session::project(const std::string& covering, const std::string& input) const {
    const Covering c = require_covering(covering);
    json out{{"covering", c.name()}, {"source", group_name(c.source())}, {"target", group_name(c.target())}};
    json j;
    bool is_element = false;
    try {
        j = json::parse(input);
        is_element = j.is_object() && (j.contains("q") || j.contains("matrix"));
    } catch (const json::parse_error&) {
    }
    if (is_element) {
        std::optional<GroupId> expected = c.source();
        if (j.contains("group") && j["group"] == "u2" && c.source() == GroupId::SU2xS1) expected = GroupId::U2;
        GroupElement e = element_from_json(j, expected);
        out["element"] = to_json(rotconj::project(c, e));
        return out;
    }
    RotationVector rho = parse_rho(c.source(), input);
    out["rho"] = to_json(pushforward(c, rho));
    return out;
}

json Session::selftest() const {
    json criteria = json::array();
    bool all = true;
    for (const auto& r : run_acceptance(config.seed)) {
        all = all && r.passed;
        criteria.push_back(
            json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    return json{{"criteria", criteria}, {"passed", all}};
}

}  // namespace rotconj
