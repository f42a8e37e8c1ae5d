#include "exact_angles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace rotconj {

namespace {

bool is_integer_text(const std::string& s) {
    size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
}

long long to_ll(const mpz_class& z, const char* what) {
    if (!z.fits_slong_p()) throw std::overflow_error(std::string(what) + " does not fit a machine integer");
    return z.get_si();
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

mpz_class mod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

Rational rational_from_decimal(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw ValidationError("parse", "empty number");
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    long long exponent = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string ex = s.substr(epos + 1);
        if (!is_integer_text(ex)) throw ValidationError("parse", "malformed number '" + text + "'");
        exponent = std::stoll(ex);
        s = s.substr(0, epos);
    }
    auto dot = s.find('.');
    std::string ip = dot == std::string::npos ? s : s.substr(0, dot);
    std::string fp = dot == std::string::npos ? "" : s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ValidationError("parse", "malformed number '" + text + "'");
    for (char c : ip + fp)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ValidationError("parse", "malformed number '" + text + "'");
    if (std::llabs(exponent) > 4000) throw ValidationError("parse", "exponent out of range in '" + text + "'");
    mpz_class num(ip + fp, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(fp.size()));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::llabs(exponent)));
    if (exponent >= 0)
        num *= scale;
    else
        den *= scale;
    Rational r(num, den);
    r.canonicalize();
    return neg ? Rational(-r) : r;
}

Rational parse_rational(const std::string& text) {
    std::string s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (is_integer_text(s)) return Rational(mpz_class(s[0] == '+' ? s.substr(1) : s, 10));
        return rational_from_decimal(s);
    }
    std::string a = trim(s.substr(0, slash));
    std::string b = trim(s.substr(slash + 1));
    if (!is_integer_text(a) || !is_integer_text(b) || b[0] == '-' || b[0] == '+')
        throw ValidationError("parse", "malformed fraction '" + text + "'");
    mpz_class den(b, 10);
    if (den == 0) throw ValidationError("parse", "zero denominator in '" + text + "'");
    Rational r(mpz_class(a[0] == '+' ? a.substr(1) : a, 10), den);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

Rational frac(const Rational& x) {
    Rational r = x;
    r.canonicalize();
    mpz_class fl = floor_div(r.get_num(), r.get_den());
    Rational out = r - Rational(fl);
    out.canonicalize();
    return out;
}

RationalApprox best_rational_approx(double x, long long max_den) {
    RationalApprox best{static_cast<long long>(std::llround(x)), 1, std::fabs(x - std::round(x))};
    long double y = x;
    long long h0 = 0, k0 = 1, h1 = 1, k1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        long double a_ld = std::floor(y);
        if (a_ld > 1e15L) break;
        long long a = static_cast<long long>(a_ld);
        long long h2 = a * h1 + h0;
        long long k2 = a * k1 + k0;
        if (k2 > max_den) {
            if (k1 > 0) {
                long long t = (max_den - k0) / k1;
                if (t > 0) {
                    long long hs = t * h1 + h0, ks = t * k1 + k0;
                    double err = std::fabs(x - static_cast<double>(hs) / static_cast<double>(ks));
                    if (err < best.error) best = {hs, ks, err};
                }
            }
            break;
        }
        double err = std::fabs(x - static_cast<double>(h2) / static_cast<double>(k2));
        if (err < best.error || (err == best.error && k2 < best.q)) best = {h2, k2, err};
        h0 = h1;
        k0 = k1;
        h1 = h2;
        k1 = k2;
        long double rem = y - a_ld;
        if (rem < 1e-18L) break;
        y = 1.0L / rem;
    }
    return best;
}

IrrationalBasis::IrrationalBasis(std::vector<std::string> symbols, std::map<std::string, double> numeric)
    : symbols_(std::move(symbols)), numeric_(std::move(numeric)) {
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.empty()) throw ValidationError("basis", "empty symbol name");
        if (!seen.insert(s).second) throw ValidationError("basis", "duplicate symbol '" + s + "'");
        auto it = numeric_.find(s);
        if (it == numeric_.end()) throw ValidationError("basis", "symbol '" + s + "' has no numeric value");
        double v = it->second;
        if (!std::isfinite(v) || v <= 0.0 || v >= 1.0)
            throw ValidationError("basis", "numeric value of '" + s + "' must lie in (0,1)");
        if (best_rational_approx(v, 10000).error < 1e-11)
            throw ValidationError("basis", "numeric value of '" + s + "' is indistinguishable from a rational");
    }
    if (numeric_.size() != symbols_.size())
        throw ValidationError("basis", "numeric values given for undeclared symbols");
}

double IrrationalBasis::value(const std::string& symbol) const {
    auto it = numeric_.find(symbol);
    if (it == numeric_.end()) throw ValidationError("basis", "undeclared symbol '" + symbol + "'");
    return it->second;
}

IrrationalBasis IrrationalBasis::with_symbol(const std::string& symbol, double value) const {
    auto syms = symbols_;
    auto nums = numeric_;
    syms.push_back(symbol);
    nums[symbol] = value;
    return IrrationalBasis(std::move(syms), std::move(nums));
}

AngleValue::AngleValue(Rational r) : rational_(frac(r)) {}

AngleValue::AngleValue(Rational r, std::map<std::string, Rational> coeffs) : rational_(frac(r)) {
    for (auto& [k, v] : coeffs) {
        v.canonicalize();
        if (v != 0) coeffs_.emplace(k, v);
    }
}

AngleValue AngleValue::symbol(const std::string& name, Rational coeff) { return AngleValue(0, {{name, coeff}}); }

AngleValue AngleValue::opaque(double value) {
    AngleValue a;
    double f = value - std::floor(value);
    if (f >= 1.0) f = 0.0;
    a.opaque_ = f;
    return a;
}

AngleValue AngleValue::recognize(double value, long long max_den, double tol) {
    double f = value - std::floor(value);
    RationalApprox ap = best_rational_approx(f, max_den);
    if (ap.error < tol) {
        Rational r(static_cast<long>(ap.p), static_cast<long>(ap.q));
        r.canonicalize();
        return AngleValue(r);
    }
    return opaque(f);
}

std::optional<std::pair<long long, long long>> AngleValue::as_fraction() const {
    if (!is_rational()) return std::nullopt;
    Rational r = rational_;
    r.canonicalize();
    return std::make_pair(to_ll(r.get_den(), "denominator"), to_ll(r.get_num(), "numerator"));
}

Rational AngleValue::coeff(const std::string& symbol) const {
    auto it = coeffs_.find(symbol);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

double AngleValue::numeric(const IrrationalBasis& basis) const {
    if (opaque_) return *opaque_;
    long double acc = rational_.get_d();
    for (const auto& [k, c] : coeffs_) acc += static_cast<long double>(c.get_d()) * basis.value(k);
    long double f = acc - std::floor(acc);
    if (f >= 1.0L) f = 0.0L;
    return static_cast<double>(f);
}

bool AngleValue::operator==(const AngleValue& o) const {
    if (opaque_ || o.opaque_) return opaque_ == o.opaque_ && coeffs_.empty() && o.coeffs_.empty();
    return rational_ == o.rational_ && coeffs_ == o.coeffs_;
}

std::string AngleValue::to_string() const {
    if (opaque_) {
        std::ostringstream os;
        os.precision(17);
        os << "~" << *opaque_;
        return os.str();
    }
    std::string out;
    if (rational_ != 0 || coeffs_.empty()) out = rational_.get_str();
    for (const auto& [k, c] : coeffs_) {
        std::string term = (c == 1 || c == -1) ? k : Rational(abs(c)).get_str() + "*" + k;
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

AngleValue angle_add(const AngleValue& a, const AngleValue& b) {
    if (a.is_opaque() || b.is_opaque()) {
        if (!a.coeffs().empty() || !b.coeffs().empty())
            throw ValidationError("exactness", "cannot mix opaque and symbolic angles");
        double va = a.is_opaque() ? a.opaque_value() : a.rational().get_d();
        double vb = b.is_opaque() ? b.opaque_value() : b.rational().get_d();
        return AngleValue::opaque(va + vb);
    }
    auto coeffs = a.coeffs();
    for (const auto& [k, c] : b.coeffs()) coeffs[k] += c;
    return AngleValue(a.rational() + b.rational(), std::move(coeffs));
}

AngleValue angle_neg(const AngleValue& a) { return angle_scale(a, Rational(-1)); }

AngleValue angle_sub(const AngleValue& a, const AngleValue& b) { return angle_add(a, angle_neg(b)); }

AngleValue angle_scale(const AngleValue& a, const Rational& m) {
    if (a.is_opaque()) return AngleValue::opaque(a.opaque_value() * m.get_d());
    std::map<std::string, Rational> coeffs;
    for (const auto& [k, c] : a.coeffs()) coeffs.emplace(k, c * m);
    return AngleValue(a.rational() * m, std::move(coeffs));
}

void check_basis(const AngleValue& a, const IrrationalBasis& basis) {
    for (const auto& [k, c] : a.coeffs())
        if (!basis.contains(k)) throw ValidationError("basis", "basis mismatch: undeclared symbol '" + k + "'");
}

std::optional<LatticeFamily> solve_affine_lattice_family(const AngleValue& theta, const AngleValue& phi,
                                                         const AngleValue& theta_prime, long long multiplier,
                                                         int sign) {
    if (multiplier < 1) throw std::invalid_argument("multiplier must be positive");
    if (!theta.is_exact() || !phi.is_exact() || !theta_prime.is_exact())
        throw ValidationError("exactness", "exact angles required");
    AngleValue delta = angle_sub(theta_prime, angle_scale(theta, Rational(sign)));
    const Rational M(static_cast<long>(multiplier));

    if (!phi.coeffs().empty()) {
        std::optional<Rational> forced;
        std::set<std::string> keys;
        for (const auto& kv : delta.coeffs()) keys.insert(kv.first);
        for (const auto& kv : phi.coeffs()) keys.insert(kv.first);
        for (const auto& k : keys) {
            Rational pc = phi.coeff(k), dc = delta.coeff(k);
            if (pc == 0) {
                if (dc != 0) return std::nullopt;
                continue;
            }
            Rational n = dc / (M * pc);
            n.canonicalize();
            if (n.get_den() != 1) return std::nullopt;
            if (forced && *forced != n) return std::nullopt;
            forced = n;
        }
        long long n = to_ll(forced->get_num(), "n");
        if (!lattice_residue(theta, phi, theta_prime, multiplier, sign, n)) return std::nullopt;
        return LatticeFamily{sign, n, 0};
    }

    if (!delta.coeffs().empty()) return std::nullopt;
    // M*n*a/b == c/d (mod 1)  <=>  A n == C (mod L)
    const mpz_class a = phi.rational().get_num(), b = phi.rational().get_den();
    const mpz_class c = delta.rational().get_num(), d = delta.rational().get_den();
    mpz_class L;
    mpz_lcm(L.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
    mpz_class A = mod_pos(mpz_class(static_cast<long>(multiplier)) * a * (L / b), L);
    mpz_class C = mod_pos(c * (L / d), L);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), L.get_mpz_t());
    if (g == 0) g = L;
    if (mod_pos(C, g) != 0) return std::nullopt;
    mpz_class Lg = L / g;
    mpz_class n0 = 0;
    if (Lg > 1) {
        mpz_class Ag = A / g, inv;
        mpz_invert(inv.get_mpz_t(), Ag.get_mpz_t(), Lg.get_mpz_t());
        n0 = mod_pos((C / g) * inv, Lg);
    }
    return LatticeFamily{sign, to_ll(n0, "n"), to_ll(Lg, "step")};
}

std::optional<long long> lattice_residue(const AngleValue& theta, const AngleValue& phi,
                                         const AngleValue& theta_prime, long long multiplier, int sign,
                                         long long n) {
    Rational mn = Rational(static_cast<long>(multiplier)) * Rational(static_cast<long>(n));
    for (const auto& [k, c] : theta_prime.coeffs())
        if (c != Rational(sign) * theta.coeff(k) + mn * phi.coeff(k)) return std::nullopt;
    for (const auto& [k, c] : theta.coeffs())
        if (theta_prime.coeff(k) != Rational(sign) * c + mn * phi.coeff(k)) return std::nullopt;
    for (const auto& [k, c] : phi.coeffs())
        if (theta_prime.coeff(k) != Rational(sign) * theta.coeff(k) + mn * c) return std::nullopt;
    Rational r = theta_prime.rational() - Rational(sign) * theta.rational() - mn * phi.rational();
    r.canonicalize();
    if (r.get_den() != 1) return std::nullopt;
    return to_ll(r.get_num(), "n'");
}

std::optional<LatticeSolution> solve_affine_lattice(const AngleValue& theta, const AngleValue& phi,
                                                    const AngleValue& theta_prime, long long multiplier) {
    for (int sign : {1, -1}) {
        auto fam = solve_affine_lattice_family(theta, phi, theta_prime, multiplier, sign);
        if (!fam) continue;
        long long n = fam->n0;
        if (fam->step > 0) {
            long long r = ((fam->n0 % fam->step) + fam->step) % fam->step;
            long long alt = r - fam->step;
            n = (std::llabs(alt) < r) ? alt : r;
        }
        auto np = lattice_residue(theta, phi, theta_prime, multiplier, sign, n);
        if (!np) throw std::logic_error("lattice family member failed re-substitution");
        return LatticeSolution{sign, n, *np};
    }
    return std::nullopt;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Conjugate: return "conjugate";
        case Status::NotConjugate: return "not-conjugate";
        case Status::Unknown: return "unknown";
    }
    return "unknown";
}

Verdict Verdict::yes(std::optional<LatticeSolution> sol, int phi_sign) {
    Verdict v;
    v.status = Status::Conjugate;
    v.solution = sol;
    v.phi_sign = phi_sign;
    return v;
}

Verdict Verdict::no(std::string reason) {
    Verdict v;
    v.status = Status::NotConjugate;
    v.reason = std::move(reason);
    return v;
}

Verdict Verdict::unknown(std::string reason) {
    Verdict v;
    v.status = Status::Unknown;
    v.reason = std::move(reason);
    return v;
}

Verdict decide_circle(const AngleValue& rho, const AngleValue& rho_prime) {
    if (!rho.is_exact() || !rho_prime.is_exact()) return Verdict::unknown("inexact-input");
    for (int sign : {1, -1}) {
        AngleValue candidate = angle_scale(rho, Rational(sign));
        if (candidate == rho_prime) {
            Rational np = rho_prime.rational() - Rational(sign) * rho.rational();
            np.canonicalize();
            return Verdict::yes(LatticeSolution{sign, 0, to_ll(np.get_num(), "n'")});
        }
    }
    auto f = rho.as_fraction(), fp = rho_prime.as_fraction();
    if (f.has_value() != fp.has_value()) return Verdict::no("orbit-size");
    if (f && f->first != fp->first) return Verdict::no("orbit-size");
    return Verdict::no("sign-exhausted");
}

Verdict decide_torus2(const std::array<AngleValue, 2>& rho, const std::array<AngleValue, 2>& rho_prime,
                      int entry_bound) {
    if (entry_bound < 1) throw std::invalid_argument("entry bound must be at least 1");
    for (const auto* v : {&rho, &rho_prime})
        for (const auto& a : *v)
            if (!a.is_exact()) return Verdict::unknown("inexact-input");
    for (int k = 1; k <= entry_bound; ++k) {
        for (long long a = -k; a <= k; ++a)
            for (long long b = -k; b <= k; ++b)
                for (long long c = -k; c <= k; ++c)
                    for (long long d = -k; d <= k; ++d) {
                        if (std::max({std::llabs(a), std::llabs(b), std::llabs(c), std::llabs(d)}) != k) continue;
                        long long det = a * d - b * c;
                        if (det != 1 && det != -1) continue;
                        const Rational ra(static_cast<long>(a)), rb(static_cast<long>(b));
                        const Rational rc(static_cast<long>(c)), rd(static_cast<long>(d));
                        if (ra * rho[0] + rb * rho[1] != rho_prime[0]) continue;
                        if (rc * rho[0] + rd * rho[1] != rho_prime[1]) continue;
                        Verdict v = Verdict::yes();
                        v.matrix = std::array<long long, 4>{a, b, c, d};
                        return v;
                    }
    }
    return Verdict::unknown("beyond-bound");
}

double estimate_rotation_number(const std::function<double(double)>& lift, long long iterations) {
    if (iterations < 1) throw std::invalid_argument("iterations must be positive");
    double x = 0.0;
    for (long long i = 0; i < iterations; ++i) x = lift(x);
    double r = x / static_cast<double>(iterations);
    double f = r - std::floor(r);
    return f >= 1.0 ? 0.0 : f;
}

}  // namespace rotconj
