#include "orbits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace rotconj {

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), size_t{0}); }
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

double sweep_key(const GroupElement& g) {
    switch (g.group()) {
        case GroupId::SU2:
        case GroupId::SU2xS1: return g.quat().w;
        case GroupId::SpinC3: return std::fabs(g.quat().w);
        case GroupId::U2: return g.mat2()[0].real();
        case GroupId::SO3:
        case GroupId::SO3xS1: return g.mat3()[0];
    }
    return 0.0;
}

/// Primitive integer vector proportional to the rational vector (x, y) != 0.
std::pair<mpz_class, mpz_class> primitive(const Rational& x, const Rational& y) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), x.get_den().get_mpz_t(), y.get_den().get_mpz_t());
    Rational sx = x * Rational(l), sy = y * Rational(l);
    sx.canonicalize();
    sy.canonicalize();
    mpz_class a = sx.get_num(), b = sy.get_num(), g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return {a / g, b / g};
}

long long to_ll(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("orbit relation coefficient too large");
    return z.get_si();
}

}  // namespace

const char* closure_kind_name(ClosureKind k) {
    switch (k) {
        case ClosureKind::FinitePoints: return "finite-points";
        case ClosureKind::Circles: return "circles";
        case ClosureKind::Torus2: return "torus2";
    }
    return "?";
}

OrbitClosure classify_orbit_closure(GroupId group, const RotationVector& rho) {
    if (rho.group != group) throw ValidationError("group", "rotation vector group mismatch");
    check_arity(rho);
    for (const auto& a : rho.angles)
        if (!a.is_exact()) throw ValidationError("exactness", "exactness required for orbit-closure classification");

    if (group_arity(group) == 1) {
        auto f = rho.angles[0].as_fraction();
        if (f) return OrbitClosure{ClosureKind::FinitePoints, f->first, std::nullopt};
        return OrbitClosure{ClosureKind::Circles, 1, std::nullopt};
    }

    const AngleValue &theta = rho.angles[0], &phi = rho.angles[1];
    auto ft = theta.as_fraction(), fp = phi.as_fraction();
    if (ft && fp) return OrbitClosure{ClosureKind::FinitePoints, std::lcm(ft->first, fp->first), std::nullopt};

    // Integer (A, B) killing every irrational coordinate: orthogonal to all (theta_c, phi_c).
    std::set<std::string> keys;
    for (const auto& kv : theta.coeffs()) keys.insert(kv.first);
    for (const auto& kv : phi.coeffs()) keys.insert(kv.first);
    std::optional<std::pair<Rational, Rational>> direction;
    for (const auto& k : keys) {
        Rational x = theta.coeff(k), y = phi.coeff(k);
        if (!direction) {
            direction = std::make_pair(x, y);
        } else if (direction->first * y - direction->second * x != 0) {
            return OrbitClosure{ClosureKind::Torus2, 1, std::nullopt};
        }
    }
    auto [a, b] = primitive(direction->second, Rational(-direction->first));
    Rational r = Rational(a) * theta.rational() + Rational(b) * phi.rational();
    r.canonicalize();
    mpz_class v = r.get_den();
    mpz_class A = v * a, B = v * b;
    Rational c = -(Rational(A) * theta.rational() + Rational(B) * phi.rational());
    c.canonicalize();
    mpz_class C = c.get_num();
    if (A < 0 || (A == 0 && B < 0)) {
        A = -A;
        B = -B;
        C = -C;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    return OrbitClosure{ClosureKind::Circles, to_ll(g), std::array<long long, 3>{to_ll(A), to_ll(B), to_ll(C)}};
}

std::vector<GroupElement> sample_orbit(GroupId group, const RotationVector& rho, long long iterations,
                                       const IrrationalBasis& basis) {
    if (iterations < 1) throw ValidationError("orbit", "iterations must be positive");
    if (rho.group != group) throw ValidationError("group", "rotation vector group mismatch");
    const GroupElement g = torus_element(rho, basis);
    std::vector<GroupElement> out;
    out.reserve(static_cast<size_t>(iterations));
    GroupElement u = identity(group);
    for (long long k = 0; k < iterations; ++k) {
        u = left_translate(g, u);
        out.push_back(u);
    }
    return out;
}

long long count_components(const std::vector<GroupElement>& points, double radius) {
    if (points.empty()) throw ValidationError("orbit", "count_components needs at least one point");
    const size_t n = points.size();
    std::vector<double> key(n);
    for (size_t i = 0; i < n; ++i) key[i] = sweep_key(points[i]);
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return key[a] < key[b]; });
    UnionFind uf(n);
    for (size_t i = 0; i < n; ++i) {
        const size_t a = order[i];
        for (size_t j = i + 1; j < n && key[order[j]] - key[a] <= radius; ++j) {
            const size_t b = order[j];
            if (uf.find(a) == uf.find(b)) continue;
            if (distance(points[a], points[b]) <= radius) uf.unite(a, b);
        }
    }
    std::set<size_t> roots;
    for (size_t i = 0; i < n; ++i) roots.insert(uf.find(i));
    return static_cast<long long>(roots.size());
}

std::optional<long long> orbit_period(const GroupElement& g, long long max_k, double tol) {
    const GroupElement e = identity(g.group());
    GroupElement u = g;
    for (long long k = 1; k <= max_k; ++k) {
        if (distance(u, e) < tol) return k;
        u = multiply(g, u);
    }
    return std::nullopt;
}

}  // namespace rotconj
