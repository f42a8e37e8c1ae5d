#pragma once

#include <gmpxx.h>

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rotconj {

using Rational = mpq_class;

/// Raised when an input refers to something outside the declared model
/// (undeclared symbol, malformed fraction, bad basis value).
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);
Rational frac(const Rational& r);
Rational rational_from_decimal(const std::string& text);

class IrrationalBasis {
public:
    IrrationalBasis() = default;
    IrrationalBasis(std::vector<std::string> symbols, std::map<std::string, double> numeric);

    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::map<std::string, double>& numeric() const { return numeric_; }
    bool contains(const std::string& symbol) const { return numeric_.count(symbol) != 0; }
    double value(const std::string& symbol) const;

    /// Returns a copy that additionally declares `symbol`.
    IrrationalBasis with_symbol(const std::string& symbol, double value) const;

private:
    std::vector<std::string> symbols_;
    std::map<std::string, double> numeric_;
};

/// Smallest |x - p/q| over q <= max_den, and the fraction attaining it.
struct RationalApprox {
    long long p = 0;
    long long q = 1;
    double error = 0.0;
};
RationalApprox best_rational_approx(double x, long long max_den);

/// Element of R/Z: rational part in [0,1) plus rational coefficients over named
/// irrational generators. An "opaque" value carries only a double and is
/// produced when a float could not be recognized as an exact angle.
class AngleValue {
public:
    AngleValue() = default;
    explicit AngleValue(Rational r);
    AngleValue(Rational r, std::map<std::string, Rational> coeffs);

    static AngleValue symbol(const std::string& name, Rational coeff = 1);
    static AngleValue opaque(double value);
    /// Rational recognition with denominator cap and tolerance; opaque otherwise.
    static AngleValue recognize(double value, long long max_den = 10000, double tol = 1e-11);

    const Rational& rational() const { return rational_; }
    const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
    bool is_opaque() const { return opaque_.has_value(); }
    bool is_exact() const { return !opaque_.has_value(); }
    double opaque_value() const { return opaque_.value_or(0.0); }

    bool is_rational() const { return !opaque_ && coeffs_.empty(); }
    /// (p, q) with q/p in lowest terms, 0 <= q < p.
    std::optional<std::pair<long long, long long>> as_fraction() const;
    Rational coeff(const std::string& symbol) const;

    double numeric(const IrrationalBasis& basis) const;

    bool operator==(const AngleValue& o) const;
    bool operator!=(const AngleValue& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Rational rational_;
    std::map<std::string, Rational> coeffs_;
    std::optional<double> opaque_;
};

AngleValue angle_add(const AngleValue& a, const AngleValue& b);
AngleValue angle_neg(const AngleValue& a);
AngleValue angle_sub(const AngleValue& a, const AngleValue& b);
AngleValue angle_scale(const AngleValue& a, const Rational& m);

inline AngleValue operator+(const AngleValue& a, const AngleValue& b) { return angle_add(a, b); }
inline AngleValue operator-(const AngleValue& a, const AngleValue& b) { return angle_sub(a, b); }
inline AngleValue operator-(const AngleValue& a) { return angle_neg(a); }
inline AngleValue operator*(const Rational& m, const AngleValue& a) { return angle_scale(a, m); }
inline AngleValue operator*(long m, const AngleValue& a) { return angle_scale(a, Rational(m)); }

/// Every symbol mentioned by `a` must be declared in `basis`.
void check_basis(const AngleValue& a, const IrrationalBasis& basis);

struct LatticeSolution {
    int sign = 1;
    long long n = 0;
    long long n_prime = 0;
};

/// All n with theta' = s*theta + (M n) phi mod Z for one fixed sign:
/// n = n0 + k*step (step == 0 means n is unique).
struct LatticeFamily {
    int sign = 1;
    long long n0 = 0;
    long long step = 0;
};

std::optional<LatticeFamily> solve_affine_lattice_family(const AngleValue& theta, const AngleValue& phi,
                                                         const AngleValue& theta_prime, long long multiplier,
                                                         int sign);

std::optional<LatticeSolution> solve_affine_lattice(const AngleValue& theta, const AngleValue& phi,
                                                    const AngleValue& theta_prime, long long multiplier);

/// n' for a given (s, n), or nullopt if the residue is not an integer.
std::optional<long long> lattice_residue(const AngleValue& theta, const AngleValue& phi,
                                         const AngleValue& theta_prime, long long multiplier, int sign,
                                         long long n);

enum class Status { Conjugate, NotConjugate, Unknown };

const char* status_name(Status s);

struct Verdict {
    Status status = Status::Unknown;
    std::optional<LatticeSolution> solution;
    /// Sign relating phi' to phi for two-parameter groups (0 when not applicable).
    int phi_sign = 0;
    /// Row-major integer matrix found by decide_torus2.
    std::optional<std::array<long long, 4>> matrix;
    std::string reason;
    std::string certificate = "exact";

    bool conjugate() const { return status == Status::Conjugate; }
    static Verdict yes(std::optional<LatticeSolution> sol = std::nullopt, int phi_sign = 0);
    static Verdict no(std::string reason);
    static Verdict unknown(std::string reason);
};

Verdict decide_circle(const AngleValue& rho, const AngleValue& rho_prime);

Verdict decide_torus2(const std::array<AngleValue, 2>& rho, const std::array<AngleValue, 2>& rho_prime,
                      int entry_bound = 10);

double estimate_rotation_number(const std::function<double(double)>& lift, long long iterations);

}  // namespace rotconj
