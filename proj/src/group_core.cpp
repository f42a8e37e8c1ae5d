#include "group_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rotconj {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double wrap01(double x) {
    double f = x - std::floor(x);
    if (f >= 1.0 - 1e-13) f = 0.0;
    return f;
}

const Mat3 kWeylSO3{0, 1, 0, 1, 0, 0, 0, 0, -1};
const Quat kQuatI{0, 1, 0, 0};

[[noreturn]] void group_mismatch(GroupId a, GroupId b) {
    throw ValidationError("group", std::string("group mismatch: ") + group_name(a) + " vs " + group_name(b));
}

/// Unit quaternion s with s u s^-1 = k for a unit vector u.
Quat rotate_to_z(double ux, double uy, double uz) {
    if (uz < -1.0 + 1e-14) return kQuatI;
    return normalized(Quat{1.0 + uz, uy, -ux, 0.0});
}

struct Option {
    double theta = 0.0;
    double phi = 0.0;
    GroupElement conjugator;
};

struct SU2Reduction {
    double theta;  // in [0, 1/2]
    Quat s;
};

SU2Reduction reduce_su2(const Quat& q) {
    double n = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (n < 1e-12) return {q.w > 0 ? 0.0 : 0.5, Quat{}};
    return {std::atan2(n, q.w) / kTwoPi, rotate_to_z(q.x / n, q.y / n, q.z / n)};
}

struct SO3Reduction {
    double theta;  // in [0, 1/2]
    Mat3 s;
};

SO3Reduction reduce_so3(const Mat3& r) {
    const double wx = r[7] - r[5], wy = r[2] - r[6], wz = r[3] - r[1];
    const double wn = std::sqrt(wx * wx + wy * wy + wz * wz);
    const double c = (r[0] + r[4] + r[8] - 1.0) / 2.0;
    const double psi = std::atan2(wn / 2.0, c);
    if (psi < 1e-12) return {0.0, Mat3{1, 0, 0, 0, 1, 0, 0, 0, 1}};
    double n[3];
    if (wn / 2.0 > 1e-6 || c > 0.0) {
        n[0] = wx / wn;
        n[1] = wy / wn;
        n[2] = wz / wn;
    } else {
        // near pi: (R + R^T)/2 - c I = (1 - c) n n^T
        double b[9];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) b[3 * i + j] = (r[3 * i + j] + r[3 * j + i]) / 2.0 - (i == j ? c : 0.0);
        int col = 0;
        for (int j = 1; j < 3; ++j)
            if (b[4 * j] > b[4 * col]) col = j;
        double len = std::sqrt(b[col] * b[col] + b[3 + col] * b[3 + col] + b[6 + col] * b[6 + col]);
        for (int i = 0; i < 3; ++i) n[i] = b[3 * i + col] / len;
        double dot = n[0] * wx + n[1] * wy + n[2] * wz;
        bool flip = false;
        if (wn > 1e-14) {
            flip = dot < 0.0;
        } else {
            for (double v : n)
                if (std::fabs(v) > 1e-12) {
                    flip = v < 0.0;
                    break;
                }
        }
        if (flip)
            for (double& v : n) v = -v;
    }
    return {psi / kTwoPi, rotation_matrix(rotate_to_z(n[0], n[1], n[2]))};
}

std::array<Option, 2> torus_options(const GroupElement& g) {
    switch (g.group()) {
        case GroupId::SU2: {
            auto red = reduce_su2(g.quat());
            return {Option{red.theta, 0.0, GroupElement::su2(red.s)},
                    Option{-red.theta, 0.0, GroupElement::su2(kQuatI * red.s)}};
        }
        case GroupId::SO3: {
            auto red = reduce_so3(g.mat3());
            return {Option{red.theta, 0.0, GroupElement::so3(red.s)},
                    Option{-red.theta, 0.0, GroupElement::so3(kWeylSO3 * red.s)}};
        }
        case GroupId::SO3xS1: {
            auto red = reduce_so3(g.mat3());
            double phi = std::arg(g.phase()) / kTwoPi;
            return {Option{red.theta, phi, GroupElement::so3xs1(red.s, 1.0)},
                    Option{-red.theta, phi, GroupElement::so3xs1(kWeylSO3 * red.s, 1.0)}};
        }
        case GroupId::SU2xS1: {
            auto red = reduce_su2(g.quat());
            double phi = std::arg(g.phase()) / kTwoPi;
            return {Option{red.theta, phi, GroupElement::su2xs1(red.s, 1.0)},
                    Option{-red.theta, phi, GroupElement::su2xs1(kQuatI * red.s, 1.0)}};
        }
        case GroupId::SpinC3: {
            auto red = reduce_su2(g.quat());
            double b = std::arg(g.phase()) / kTwoPi;
            return {Option{red.theta - b, 2.0 * b, GroupElement::spinc3(red.s, 1.0)},
                    Option{-red.theta - b, 2.0 * b, GroupElement::spinc3(kQuatI * red.s, 1.0)}};
        }
        case GroupId::U2: {
            // u = sqrt(det u) V with V in SU(2); the eigenvalue angle of V comes
            // from the quaternion, which stays accurate for nearly scalar u.
            const Mat2& u = g.mat2();
            const Complex D = det(u);
            const double d = std::arg(D) / kTwoPi;
            const Complex root = std::polar(1.0, std::arg(D) / 2.0);
            Mat2 v = u;
            for (Complex& z : v) z /= root;
            auto red = reduce_su2(su2_to_quat(v));
            return {Option{red.theta - d / 2.0, d, GroupElement::u2(quat_to_su2(red.s))},
                    Option{-red.theta - d / 2.0, d, GroupElement::u2(quat_to_su2(kQuatI * red.s))}};
        }
    }
    throw std::logic_error("unhandled group");
}

std::vector<double> torus_params(const GroupElement& t) {
    switch (t.group()) {
        case GroupId::SU2: return {std::atan2(t.quat().z, t.quat().w) / kTwoPi};
        case GroupId::SO3: return {std::atan2(t.mat3()[3], t.mat3()[0]) / kTwoPi};
        case GroupId::SO3xS1:
            return {std::atan2(t.mat3()[3], t.mat3()[0]) / kTwoPi, std::arg(t.phase()) / kTwoPi};
        case GroupId::SU2xS1:
            return {std::atan2(t.quat().z, t.quat().w) / kTwoPi, std::arg(t.phase()) / kTwoPi};
        case GroupId::SpinC3: {
            double a = std::atan2(t.quat().z, t.quat().w) / kTwoPi;
            double b = std::arg(t.phase()) / kTwoPi;
            return {a - b, 2.0 * b};
        }
        case GroupId::U2: {
            const Mat2& u = t.mat2();
            return {-std::arg(u[3]) / kTwoPi, std::arg(u[0] * u[3]) / kTwoPi};
        }
    }
    throw std::logic_error("unhandled group");
}

RotationVector recognize_params(GroupId group, const std::vector<double>& params) {
    RotationVector rho{group, {}};
    for (double p : params) rho.angles.push_back(AngleValue::recognize(wrap01(p)));
    return rho;
}

}  // namespace

const char* group_name(GroupId g) {
    switch (g) {
        case GroupId::SU2: return "su2";
        case GroupId::U2: return "u2";
        case GroupId::SO3: return "so3";
        case GroupId::SO3xS1: return "so3xs1";
        case GroupId::SpinC3: return "spinc3";
        case GroupId::SU2xS1: return "su2xs1";
    }
    return "?";
}

std::optional<GroupId> parse_group(const std::string& name) {
    for (GroupId g : {GroupId::SU2, GroupId::U2, GroupId::SO3, GroupId::SO3xS1, GroupId::SpinC3, GroupId::SU2xS1})
        if (name == group_name(g)) return g;
    return std::nullopt;
}

int group_arity(GroupId g) { return (g == GroupId::SU2 || g == GroupId::SO3) ? 1 : 2; }

Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quat conjugate(const Quat& q) { return {q.w, -q.x, -q.y, -q.z}; }
Quat negate(const Quat& q) { return {-q.w, -q.x, -q.y, -q.z}; }
double norm(const Quat& q) { return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z); }

Quat normalized(const Quat& q) {
    double n = norm(q);
    return {q.w / n, q.x / n, q.y / n, q.z / n};
}

double quat_distance(const Quat& a, const Quat& b) {
    return norm(Quat{a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z});
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

Mat2 adjoint(const Mat2& a) { return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; }
Complex det(const Mat2& a) { return a[0] * a[3] - a[1] * a[2]; }

double frobenius(const Mat2& a, const Mat2& b) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

Mat2 diag2(Complex a, Complex b) { return {a, Complex(0), Complex(0), b}; }

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a[3 * i + k] * b[3 * k + j];
            c[3 * i + j] = s;
        }
    return c;
}

Mat3 transpose(const Mat3& a) { return {a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]}; }

double det(const Mat3& a) {
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

double frobenius(const Mat3& a, const Mat3& b) {
    double s = 0.0;
    for (int i = 0; i < 9; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

Mat3 rotation_z(double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    return {c, -s, 0, s, c, 0, 0, 0, 1};
}

Mat2 quat_to_su2(const Quat& q) {
    return {Complex(q.w, q.z), Complex(q.x, q.y), Complex(-q.x, q.y), Complex(q.w, -q.z)};
}

Quat su2_to_quat(const Mat2& m) {
    return {(m[0].real() + m[3].real()) / 2.0, (m[1].real() - m[2].real()) / 2.0,
            (m[1].imag() + m[2].imag()) / 2.0, (m[0].imag() - m[3].imag()) / 2.0};
}

Mat3 rotation_matrix(const Quat& r) {
    const double a = r.w, b = r.x, c = r.y, d = r.z;
    return {a * a + b * b - c * c - d * d, 2 * (b * c - a * d),           2 * (b * d + a * c),
            2 * (b * c + a * d),           a * a - b * b + c * c - d * d, 2 * (c * d - a * b),
            2 * (b * d - a * c),           2 * (c * d + a * b),           a * a - b * b - c * c + d * d};
}

Quat su2_torus(double theta) { return {std::cos(kTwoPi * theta), 0.0, 0.0, std::sin(kTwoPi * theta)}; }

Complex unit_phase(double turns) { return {std::cos(kTwoPi * turns), std::sin(kTwoPi * turns)}; }

Mat2 u2_from_product(const Quat& v, Complex mu) {
    Mat2 m = quat_to_su2(v);
    m[0] *= mu;
    m[1] *= mu;
    return m;
}

std::pair<Quat, Complex> u2_to_product(const Mat2& u) {
    Complex mu = det(u);
    mu /= std::abs(mu);
    Mat2 m = u;
    m[0] *= std::conj(mu);
    m[1] *= std::conj(mu);
    return {su2_to_quat(m), mu};
}

GroupElement GroupElement::su2(const Quat& q) {
    GroupElement g;
    g.group_ = GroupId::SU2;
    g.quat_ = q;
    return g;
}

GroupElement GroupElement::u2(const Mat2& m) {
    GroupElement g;
    g.group_ = GroupId::U2;
    g.mat2_ = m;
    return g;
}

GroupElement GroupElement::so3(const Mat3& r) {
    GroupElement g;
    g.group_ = GroupId::SO3;
    g.mat3_ = r;
    return g;
}

GroupElement GroupElement::so3xs1(const Mat3& r, Complex phase) {
    GroupElement g;
    g.group_ = GroupId::SO3xS1;
    g.mat3_ = r;
    g.phase_ = phase;
    return g;
}

GroupElement GroupElement::spinc3(const Quat& q, Complex phase) {
    GroupElement g;
    g.group_ = GroupId::SpinC3;
    const double eps = 1e-14;
    bool flip = phase.imag() < -eps || (std::fabs(phase.imag()) <= eps && phase.real() < 0.0);
    g.quat_ = flip ? negate(q) : q;
    g.phase_ = flip ? -phase : phase;
    return g;
}

GroupElement GroupElement::su2xs1(const Quat& q, Complex phase) {
    GroupElement g;
    g.group_ = GroupId::SU2xS1;
    g.quat_ = q;
    g.phase_ = phase;
    return g;
}

void validate_element(const GroupElement& g) {
    auto fail = [&](const std::string& what) {
        throw ValidationError("element", std::string("invalid ") + group_name(g.group()) + " element: " + what);
    };
    auto check_quat = [&](const Quat& q) {
        if (!std::isfinite(q.w) || !std::isfinite(q.x) || !std::isfinite(q.y) || !std::isfinite(q.z))
            fail("non-finite entry");
        if (std::fabs(norm(q) - 1.0) > kGroupTol) fail("quaternion is not unit");
    };
    auto check_phase = [&](Complex p) {
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) fail("non-finite phase");
        if (std::fabs(std::abs(p) - 1.0) > kGroupTol) fail("phase is not unit");
    };
    auto check_so3 = [&](const Mat3& r) {
        for (double v : r)
            if (!std::isfinite(v)) fail("non-finite entry");
        if (frobenius(transpose(r) * r, Mat3{1, 0, 0, 0, 1, 0, 0, 0, 1}) > kGroupTol) fail("matrix is not orthogonal");
        if (std::fabs(det(r) - 1.0) > kGroupTol) fail("determinant is not +1");
    };
    switch (g.group()) {
        case GroupId::SU2: check_quat(g.quat()); break;
        case GroupId::U2:
            for (Complex v : g.mat2())
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) fail("non-finite entry");
            if (frobenius(adjoint(g.mat2()) * g.mat2(), diag2(1.0, 1.0)) > kGroupTol) fail("matrix is not unitary");
            break;
        case GroupId::SO3: check_so3(g.mat3()); break;
        case GroupId::SO3xS1:
            check_so3(g.mat3());
            check_phase(g.phase());
            break;
        case GroupId::SpinC3:
        case GroupId::SU2xS1:
            check_quat(g.quat());
            check_phase(g.phase());
            break;
    }
}

GroupElement identity(GroupId group) {
    switch (group) {
        case GroupId::SU2: return GroupElement::su2(Quat{});
        case GroupId::U2: return GroupElement::u2(diag2(1.0, 1.0));
        case GroupId::SO3: return GroupElement::so3(Mat3{1, 0, 0, 0, 1, 0, 0, 0, 1});
        case GroupId::SO3xS1: return GroupElement::so3xs1(Mat3{1, 0, 0, 0, 1, 0, 0, 0, 1}, 1.0);
        case GroupId::SpinC3: return GroupElement::spinc3(Quat{}, 1.0);
        case GroupId::SU2xS1: return GroupElement::su2xs1(Quat{}, 1.0);
    }
    throw std::logic_error("unhandled group");
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    if (a.group() != b.group()) group_mismatch(a.group(), b.group());
    switch (a.group()) {
        case GroupId::SU2: return GroupElement::su2(a.quat() * b.quat());
        case GroupId::U2: return GroupElement::u2(a.mat2() * b.mat2());
        case GroupId::SO3: return GroupElement::so3(a.mat3() * b.mat3());
        case GroupId::SO3xS1: return GroupElement::so3xs1(a.mat3() * b.mat3(), a.phase() * b.phase());
        case GroupId::SpinC3: return GroupElement::spinc3(a.quat() * b.quat(), a.phase() * b.phase());
        case GroupId::SU2xS1: return GroupElement::su2xs1(a.quat() * b.quat(), a.phase() * b.phase());
    }
    throw std::logic_error("unhandled group");
}

GroupElement inverse(const GroupElement& a) {
    switch (a.group()) {
        case GroupId::SU2: return GroupElement::su2(conjugate(a.quat()));
        case GroupId::U2: return GroupElement::u2(adjoint(a.mat2()));
        case GroupId::SO3: return GroupElement::so3(transpose(a.mat3()));
        case GroupId::SO3xS1: return GroupElement::so3xs1(transpose(a.mat3()), std::conj(a.phase()));
        case GroupId::SpinC3: return GroupElement::spinc3(conjugate(a.quat()), std::conj(a.phase()));
        case GroupId::SU2xS1: return GroupElement::su2xs1(conjugate(a.quat()), std::conj(a.phase()));
    }
    throw std::logic_error("unhandled group");
}

GroupElement left_translate(const GroupElement& g, const GroupElement& u) { return multiply(g, u); }

GroupElement power(const GroupElement& g, long long k) {
    GroupElement base = k < 0 ? inverse(g) : g;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1ULL : static_cast<unsigned long long>(k);
    GroupElement acc = identity(g.group());
    while (e) {
        if (e & 1ULL) acc = multiply(acc, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return acc;
}

double distance(const GroupElement& a, const GroupElement& b) {
    if (a.group() != b.group()) group_mismatch(a.group(), b.group());
    switch (a.group()) {
        case GroupId::SU2: return quat_distance(a.quat(), b.quat());
        case GroupId::U2: return frobenius(a.mat2(), b.mat2());
        case GroupId::SO3: return frobenius(a.mat3(), b.mat3());
        case GroupId::SO3xS1: {
            double r = frobenius(a.mat3(), b.mat3());
            return std::sqrt(r * r + std::norm(a.phase() - b.phase()));
        }
        case GroupId::SU2xS1: {
            double q = quat_distance(a.quat(), b.quat());
            return std::sqrt(q * q + std::norm(a.phase() - b.phase()));
        }
        case GroupId::SpinC3: {
            double q1 = quat_distance(a.quat(), b.quat());
            double d1 = q1 * q1 + std::norm(a.phase() - b.phase());
            double q2 = quat_distance(a.quat(), negate(b.quat()));
            double d2 = q2 * q2 + std::norm(a.phase() + b.phase());
            return std::sqrt(std::min(d1, d2));
        }
    }
    throw std::logic_error("unhandled group");
}

GroupElement sample_haar(GroupId group, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    Quat q;
    double n = 0.0;
    do {
        q = Quat{normal(rng), normal(rng), normal(rng), normal(rng)};
        n = norm(q);
    } while (n < 1e-6);
    q = Quat{q.w / n, q.x / n, q.y / n, q.z / n};
    switch (group) {
        case GroupId::SU2: return GroupElement::su2(q);
        case GroupId::SO3: return GroupElement::so3(rotation_matrix(q));
        default: break;
    }
    Complex phase = unit_phase(uniform(rng));
    switch (group) {
        case GroupId::U2: {
            Mat2 m = quat_to_su2(q);
            for (auto& v : m) v *= phase;
            return GroupElement::u2(m);
        }
        case GroupId::SO3xS1: return GroupElement::so3xs1(rotation_matrix(q), phase);
        case GroupId::SpinC3: return GroupElement::spinc3(q, phase);
        case GroupId::SU2xS1: return GroupElement::su2xs1(q, phase);
        default: break;
    }
    throw std::logic_error("unhandled group");
}

void check_arity(const RotationVector& rho) {
    if (static_cast<int>(rho.angles.size()) != group_arity(rho.group))
        throw ValidationError("arity", std::string("arity mismatch: ") + group_name(rho.group) + " expects " +
                                           std::to_string(group_arity(rho.group)) + " angle(s), got " +
                                           std::to_string(rho.angles.size()));
}

std::vector<double> numeric_angles(const RotationVector& rho, const IrrationalBasis& basis) {
    std::vector<double> out;
    for (const auto& a : rho.angles) out.push_back(a.numeric(basis));
    return out;
}

GroupElement torus_element(GroupId group, const std::vector<double>& p) {
    if (static_cast<int>(p.size()) != group_arity(group)) throw ValidationError("arity", "arity mismatch");
    switch (group) {
        case GroupId::SU2: return GroupElement::su2(su2_torus(p[0]));
        case GroupId::SO3: return GroupElement::so3(rotation_z(kTwoPi * p[0]));
        case GroupId::U2: return GroupElement::u2(diag2(unit_phase(p[1] + p[0]), unit_phase(-p[0])));
        case GroupId::SO3xS1: return GroupElement::so3xs1(rotation_z(kTwoPi * p[0]), unit_phase(p[1]));
        case GroupId::SU2xS1: return GroupElement::su2xs1(su2_torus(p[0]), unit_phase(p[1]));
        case GroupId::SpinC3: {
            double phi = wrap01(p[1]);
            return GroupElement::spinc3(su2_torus(p[0] + phi / 2.0), unit_phase(phi / 2.0));
        }
    }
    throw std::logic_error("unhandled group");
}

GroupElement torus_element(const RotationVector& rho, const IrrationalBasis& basis) {
    check_arity(rho);
    return torus_element(rho.group, numeric_angles(rho, basis));
}

TorusReduction reduce_to_torus(const GroupElement& g, WeylChoice choice) {
    validate_element(g);
    auto opts = torus_options(g);
    for (auto& o : opts) {
        o.theta = wrap01(o.theta);
        o.phi = wrap01(o.phi);
    }
    size_t pick = opts[1].theta < opts[0].theta ? 1 : 0;
    if (choice == WeylChoice::Alternate) pick = 1 - pick;
    const Option& o = opts[pick];
    std::vector<double> params{o.theta};
    if (group_arity(g.group()) == 2) params.push_back(o.phi);
    return TorusReduction{torus_element(g.group(), params), o.conjugator, recognize_params(g.group(), params),
                          params};
}

RotationVector rotation_vector(const GroupElement& t) {
    auto params = torus_params(t);
    for (double& p : params) p = wrap01(p);
    if (distance(t, torus_element(t.group(), params)) > kGroupTol)
        throw ValidationError("not-in-torus", std::string("element is not in the fixed ") + group_name(t.group()) +
                                                  " torus");
    return recognize_params(t.group(), params);
}

}  // namespace rotconj
