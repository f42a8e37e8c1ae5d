#include "coverings.hpp"

#include "witnesses.hpp"

#include <cmath>
#include <stdexcept>

namespace rotconj {

namespace {

Quat quat_from_rotation(const Mat3& r) {
    const double tr = r[0] + r[4] + r[8];
    Quat q;
    if (tr >= r[0] && tr >= r[4] && tr >= r[8]) {
        q.w = std::sqrt(std::max(0.0, 1.0 + tr)) / 2.0;
        q.x = (r[7] - r[5]) / (4.0 * q.w);
        q.y = (r[2] - r[6]) / (4.0 * q.w);
        q.z = (r[3] - r[1]) / (4.0 * q.w);
    } else if (r[0] >= r[4] && r[0] >= r[8]) {
        q.x = std::sqrt(std::max(0.0, 1.0 + r[0] - r[4] - r[8])) / 2.0;
        q.w = (r[7] - r[5]) / (4.0 * q.x);
        q.y = (r[1] + r[3]) / (4.0 * q.x);
        q.z = (r[2] + r[6]) / (4.0 * q.x);
    } else if (r[4] >= r[8]) {
        q.y = std::sqrt(std::max(0.0, 1.0 - r[0] + r[4] - r[8])) / 2.0;
        q.w = (r[2] - r[6]) / (4.0 * q.y);
        q.x = (r[1] + r[3]) / (4.0 * q.y);
        q.z = (r[5] + r[7]) / (4.0 * q.y);
    } else {
        q.z = std::sqrt(std::max(0.0, 1.0 - r[0] - r[4] + r[8])) / 2.0;
        q.w = (r[3] - r[1]) / (4.0 * q.z);
        q.x = (r[2] + r[6]) / (4.0 * q.z);
        q.y = (r[5] + r[7]) / (4.0 * q.z);
    }
    return normalized(q);
}

GroupElement coerce_source(const Covering& c, const GroupElement& e) {
    if (c.source() == GroupId::SU2xS1 && e.group() == GroupId::U2) {
        auto [v, mu] = u2_to_product(e.mat2());
        return GroupElement::su2xs1(v, mu);
    }
    if (e.group() != c.source())
        throw ValidationError("group", std::string("covering ") + c.name() + " expects a " + group_name(c.source()) +
                                           " element, got " + group_name(e.group()));
    return e;
}

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

RotationVector make_rho(GroupId g, std::vector<AngleValue> angles) { return RotationVector{g, std::move(angles)}; }

}  // namespace

GroupId Covering::source() const {
    switch (kind) {
        case CoveringKind::SU2_to_SO3: return GroupId::SU2;
        case CoveringKind::SpinC3_to_SO3xS1: return GroupId::SpinC3;
        default: return GroupId::SU2xS1;
    }
}

GroupId Covering::target() const {
    switch (kind) {
        case CoveringKind::SU2_to_SO3: return GroupId::SO3;
        case CoveringKind::U2_to_SO3xS1: return GroupId::SO3xS1;
        case CoveringKind::U2_to_SpinC3: return GroupId::SpinC3;
        case CoveringKind::U2_selfcover: return GroupId::SU2xS1;
        case CoveringKind::SpinC3_to_SO3xS1: return GroupId::SO3xS1;
    }
    throw std::logic_error("unhandled covering");
}

int Covering::fold() const { return kind == CoveringKind::U2_selfcover ? p : 2; }

std::vector<std::vector<long long>> Covering::torus_matrix() const {
    switch (kind) {
        case CoveringKind::SU2_to_SO3: return {{2}};
        case CoveringKind::U2_to_SO3xS1: return {{2, 0}, {0, 1}};
        case CoveringKind::U2_to_SpinC3: return {{1, -1}, {0, 2}};
        case CoveringKind::U2_selfcover: return {{1, 0}, {0, p}};
        case CoveringKind::SpinC3_to_SO3xS1: return {{2, 1}, {0, 1}};
    }
    throw std::logic_error("unhandled covering");
}

std::string Covering::name() const {
    switch (kind) {
        case CoveringKind::SU2_to_SO3: return "su2-so3";
        case CoveringKind::U2_to_SO3xS1: return "u2-so3xs1";
        case CoveringKind::U2_to_SpinC3: return "u2-spinc3";
        case CoveringKind::U2_selfcover: return "u2-self:" + std::to_string(p);
        case CoveringKind::SpinC3_to_SO3xS1: return "spinc3-so3xs1";
    }
    throw std::logic_error("unhandled covering");
}

Covering make_covering(CoveringKind kind, int p) {
    if (kind == CoveringKind::U2_selfcover && p < 1) throw ValidationError("covering", "self-cover degree must be >= 1");
    return Covering{kind, kind == CoveringKind::U2_selfcover ? p : 1};
}

std::optional<Covering> parse_covering(const std::string& name) {
    if (name == "su2-so3") return make_covering(CoveringKind::SU2_to_SO3);
    if (name == "u2-so3xs1") return make_covering(CoveringKind::U2_to_SO3xS1);
    if (name == "u2-spinc3") return make_covering(CoveringKind::U2_to_SpinC3);
    if (name == "spinc3-so3xs1") return make_covering(CoveringKind::SpinC3_to_SO3xS1);
    const std::string prefix = "u2-self:";
    if (name.rfind(prefix, 0) == 0) {
        std::string digits = name.substr(prefix.size());
        if (digits.empty() || digits.size() > 6 || digits.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        int p = std::stoi(digits);
        if (p < 1) return std::nullopt;
        return make_covering(CoveringKind::U2_selfcover, p);
    }
    return std::nullopt;
}

std::vector<Covering> all_coverings(int selfcover_p) {
    return {make_covering(CoveringKind::SU2_to_SO3), make_covering(CoveringKind::U2_to_SO3xS1),
            make_covering(CoveringKind::U2_to_SpinC3), make_covering(CoveringKind::U2_selfcover, selfcover_p),
            make_covering(CoveringKind::SpinC3_to_SO3xS1)};
}

GroupElement project(const Covering& c, const GroupElement& element) {
    const GroupElement e = coerce_source(c, element);
    switch (c.kind) {
        case CoveringKind::SU2_to_SO3: return GroupElement::so3(rotation_matrix(e.quat()));
        case CoveringKind::U2_to_SO3xS1: return GroupElement::so3xs1(rotation_matrix(e.quat()), e.phase());
        case CoveringKind::U2_to_SpinC3: return GroupElement::spinc3(e.quat(), e.phase());
        case CoveringKind::U2_selfcover: return GroupElement::su2xs1(e.quat(), int_power(e.phase(), c.p));
        case CoveringKind::SpinC3_to_SO3xS1:
            return GroupElement::so3xs1(rotation_matrix(e.quat()), e.phase() * e.phase());
    }
    throw std::logic_error("unhandled covering");
}

GroupElement section(const Covering& c, const GroupElement& e) {
    if (e.group() != c.target())
        throw ValidationError("group", std::string("covering ") + c.name() + " has base " + group_name(c.target()) +
                                           ", got " + group_name(e.group()));
    switch (c.kind) {
        case CoveringKind::SU2_to_SO3: return GroupElement::su2(quat_from_rotation(e.mat3()));
        case CoveringKind::U2_to_SO3xS1: return GroupElement::su2xs1(quat_from_rotation(e.mat3()), e.phase());
        case CoveringKind::U2_to_SpinC3: return GroupElement::su2xs1(e.quat(), e.phase());
        case CoveringKind::U2_selfcover:
            return GroupElement::su2xs1(e.quat(), std::polar(1.0, std::arg(e.phase()) / c.p));
        case CoveringKind::SpinC3_to_SO3xS1:
            return GroupElement::spinc3(quat_from_rotation(e.mat3()), std::polar(1.0, std::arg(e.phase()) / 2.0));
    }
    throw std::logic_error("unhandled covering");
}

std::vector<GroupElement> deck_group(const Covering& c) {
    const Quat one{}, minus_one{-1, 0, 0, 0};
    switch (c.kind) {
        case CoveringKind::SU2_to_SO3: return {GroupElement::su2(one), GroupElement::su2(minus_one)};
        case CoveringKind::U2_to_SO3xS1:
            return {GroupElement::su2xs1(one, 1.0), GroupElement::su2xs1(minus_one, 1.0)};
        case CoveringKind::U2_to_SpinC3:
            return {GroupElement::su2xs1(one, 1.0), GroupElement::su2xs1(minus_one, -1.0)};
        case CoveringKind::U2_selfcover: {
            std::vector<GroupElement> out;
            for (int j = 0; j < c.p; ++j)
                out.push_back(GroupElement::su2xs1(one, unit_phase(static_cast<double>(j) / c.p)));
            return out;
        }
        case CoveringKind::SpinC3_to_SO3xS1:
            return {GroupElement::spinc3(one, 1.0), GroupElement::spinc3(one, -1.0)};
    }
    throw std::logic_error("unhandled covering");
}

std::vector<RotationVector> lift_rotation_vectors(const Covering& c, const RotationVector& rho) {
    if (rho.group != c.target())
        throw ValidationError("group", std::string("covering ") + c.name() + " has base " + group_name(c.target()) +
                                           ", got " + group_name(rho.group));
    check_arity(rho);
    const GroupId up = c.source();
    const Rational half(1, 2);
    std::vector<RotationVector> out;
    switch (c.kind) {
        case CoveringKind::SU2_to_SO3: {
            AngleValue base = angle_scale(rho.angles[0], half);
            for (int j = 0; j < 2; ++j) out.push_back(make_rho(up, {base + AngleValue(Rational(j, 2))}));
            break;
        }
        case CoveringKind::U2_to_SO3xS1: {
            AngleValue base = angle_scale(rho.angles[0], half);
            for (int j = 0; j < 2; ++j)
                out.push_back(make_rho(up, {base + AngleValue(Rational(j, 2)), rho.angles[1]}));
            break;
        }
        case CoveringKind::U2_to_SpinC3: {
            AngleValue half_phi = angle_scale(rho.angles[1], half);
            for (int j = 0; j < 2; ++j) {
                AngleValue shift(Rational(j, 2));
                out.push_back(make_rho(up, {rho.angles[0] + half_phi + shift, half_phi + shift}));
            }
            break;
        }
        case CoveringKind::U2_selfcover: {
            AngleValue base = angle_scale(rho.angles[1], Rational(1, c.p));
            for (int j = 0; j < c.p; ++j) {
                Rational shift(j, c.p);
                shift.canonicalize();
                out.push_back(make_rho(up, {rho.angles[0], base + AngleValue(shift)}));
            }
            break;
        }
        case CoveringKind::SpinC3_to_SO3xS1: {
            AngleValue base = angle_scale(rho.angles[0] - rho.angles[1], half);
            for (int j = 0; j < 2; ++j)
                out.push_back(make_rho(up, {base + AngleValue(Rational(j, 2)), rho.angles[1]}));
            break;
        }
    }
    return out;
}

AngleValue pushforward(const std::vector<AngleValue>& rho, const std::vector<long long>& row) {
    if (rho.size() != row.size()) throw ValidationError("arity", "dimension mismatch in pushforward");
    AngleValue acc;
    for (size_t i = 0; i < rho.size(); ++i) acc = acc + angle_scale(rho[i], Rational(static_cast<long>(row[i])));
    return acc;
}

std::vector<AngleValue> pushforward(const std::vector<AngleValue>& rho,
                                    const std::vector<std::vector<long long>>& matrix) {
    std::vector<AngleValue> out;
    for (const auto& row : matrix) out.push_back(pushforward(rho, row));
    return out;
}

RotationVector pushforward(const Covering& c, const RotationVector& upstairs) {
    if (upstairs.group != c.source())
        throw ValidationError("group", std::string("covering ") + c.name() + " expects " + group_name(c.source()));
    return make_rho(c.target(), pushforward(upstairs.angles, c.torus_matrix()));
}

bool check_lift_correspondence(const Covering& c, const RotationVector& rho, const RotationVector& rho_prime) {
    for (const auto* r : {&rho, &rho_prime})
        for (const auto& a : r->angles)
            if (!a.is_exact()) return false;
    return !descent_candidates(c, rho, rho_prime).empty();
}

Witness descend_map(const Covering& c, const Witness& upstairs) {
    if (upstairs.group != c.source())
        throw ValidationError("group", std::string("covering ") + c.name() + " expects an upstairs witness on " +
                                           group_name(c.source()));
    if (!preserves_deck(c, as_map(upstairs)))
        throw ValidationError("deck", "witness does not preserve the deck subgroup of " + c.name());
    if (upstairs.kind == WitnessKind::Identity) return identity_witness(c.target());
    Witness w;
    w.group = c.target();
    w.kind = WitnessKind::Descended;
    w.upstairs = std::make_shared<const Witness>(upstairs);
    w.covering = c;
    w.theta_sign = upstairs.theta_sign;
    w.phi_sign = upstairs.phi_sign;
    w.case_tag = upstairs.case_tag;
    return w;
}

ElementMap descend_map(const Covering& c, const ElementMap& upstairs) {
    if (!preserves_deck(c, upstairs))
        throw ValidationError("deck", "map does not preserve the deck subgroup of " + c.name());
    return [c, upstairs](const GroupElement& u) { return project(c, upstairs(section(c, u))); };
}

}  // namespace rotconj
