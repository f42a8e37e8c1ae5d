#pragma once

#include "exact_angles.hpp"

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace rotconj {

/// SU2xS1 is the direct product SU(2) x S^1. It is not one of the five
/// classified groups; it serves as the covering group for the u2-* coverings.
enum class GroupId { SU2, U2, SO3, SO3xS1, SpinC3, SU2xS1 };

const char* group_name(GroupId g);
std::optional<GroupId> parse_group(const std::string& name);
int group_arity(GroupId g);

using Complex = std::complex<double>;
using Mat2 = std::array<Complex, 4>;  // row-major
using Mat3 = std::array<double, 9>;   // row-major
using Rng = std::mt19937_64;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kGroupTol = 1e-9;

struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;
};

Quat operator*(const Quat& a, const Quat& b);
Quat conjugate(const Quat& q);
Quat negate(const Quat& q);
double norm(const Quat& q);
Quat normalized(const Quat& q);
double quat_distance(const Quat& a, const Quat& b);

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 adjoint(const Mat2& a);
Complex det(const Mat2& a);
double frobenius(const Mat2& a, const Mat2& b);
Mat2 diag2(Complex a, Complex b);

Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 transpose(const Mat3& a);
double det(const Mat3& a);
double frobenius(const Mat3& a, const Mat3& b);
Mat3 rotation_z(double angle);

/// M(a + bi + cj + dk) = [[a+di, b+ci], [-b+ci, a-di]]; a homomorphism onto SU(2).
Mat2 quat_to_su2(const Quat& q);
Quat su2_to_quat(const Mat2& m);
/// The rotation p -> r p r^-1 of pure quaternions as a 3x3 matrix.
Mat3 rotation_matrix(const Quat& r);

/// SU(2) torus point t(theta) = cos(2 pi theta) + sin(2 pi theta) k.
Quat su2_torus(double theta);
Complex unit_phase(double turns);

/// U(2) matrix <-> (v, mu) with u = diag(mu, 1) M(v), mu = det u.
Mat2 u2_from_product(const Quat& v, Complex mu);
std::pair<Quat, Complex> u2_to_product(const Mat2& u);

class GroupElement {
public:
    static GroupElement su2(const Quat& q);
    static GroupElement u2(const Mat2& m);
    static GroupElement so3(const Mat3& r);
    static GroupElement so3xs1(const Mat3& r, Complex phase);
    /// Canonicalizes the class of (q, phase) so that arg(phase) lies in [0, pi).
    static GroupElement spinc3(const Quat& q, Complex phase);
    static GroupElement su2xs1(const Quat& q, Complex phase);

    GroupId group() const { return group_; }
    const Quat& quat() const { return quat_; }
    const Mat2& mat2() const { return mat2_; }
    const Mat3& mat3() const { return mat3_; }
    Complex phase() const { return phase_; }

private:
    GroupId group_ = GroupId::SU2;
    Quat quat_;
    Mat2 mat2_{Complex(1), Complex(0), Complex(0), Complex(1)};
    Mat3 mat3_{1, 0, 0, 0, 1, 0, 0, 0, 1};
    Complex phase_{1.0, 0.0};
};

/// Unitarity / orthogonality / determinant checks at kGroupTol.
void validate_element(const GroupElement& g);

GroupElement identity(GroupId group);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
GroupElement left_translate(const GroupElement& g, const GroupElement& u);
GroupElement power(const GroupElement& g, long long k);
double distance(const GroupElement& a, const GroupElement& b);

GroupElement sample_haar(GroupId group, Rng& rng);

using ElementMap = std::function<GroupElement(const GroupElement&)>;

struct RotationVector {
    GroupId group = GroupId::SU2;
    std::vector<AngleValue> angles;
};

void check_arity(const RotationVector& rho);
std::vector<double> numeric_angles(const RotationVector& rho, const IrrationalBasis& basis);

GroupElement torus_element(GroupId group, const std::vector<double>& params);
GroupElement torus_element(const RotationVector& rho, const IrrationalBasis& basis);

enum class WeylChoice { Canonical, Alternate };

struct TorusReduction {
    GroupElement torus_rep;
    GroupElement conjugator;
    RotationVector rho;
    std::vector<double> numeric_rho;
};

TorusReduction reduce_to_torus(const GroupElement& g, WeylChoice choice = WeylChoice::Canonical);

/// Torus parameters of an element of the fixed torus; throws "not-in-torus".
RotationVector rotation_vector(const GroupElement& t);

}  // namespace rotconj
