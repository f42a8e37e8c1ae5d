#pragma once

#include "exact_angles.hpp"
#include "group_core.hpp"

#include <array>
#include <optional>
#include <vector>

namespace rotconj {

enum class ClosureKind { FinitePoints, Circles, Torus2 };

const char* closure_kind_name(ClosureKind k);

struct OrbitClosure {
    ClosureKind kind = ClosureKind::FinitePoints;
    long long count = 1;
    /// (A, B, C) with A theta + B phi + C = 0, primitive, A >= 0 (B > 0 if A == 0).
    std::optional<std::array<long long, 3>> relation;

    /// Number of connected components of the closure (1 for Torus2).
    long long components() const { return kind == ClosureKind::Torus2 ? 1 : count; }
    bool operator==(const OrbitClosure& o) const {
        return kind == o.kind && count == o.count && relation == o.relation;
    }
};

OrbitClosure classify_orbit_closure(GroupId group, const RotationVector& rho);

/// [g^k e for k = 1..N].
std::vector<GroupElement> sample_orbit(GroupId group, const RotationVector& rho, long long iterations,
                                       const IrrationalBasis& basis);

/// Connected components of the radius graph under the group metric.
long long count_components(const std::vector<GroupElement>& points, double radius);

/// Smallest k >= 1 with g^k = e within tol, or nullopt if none up to max_k.
std::optional<long long> orbit_period(const GroupElement& g, long long max_k, double tol = 1e-10);

}  // namespace rotconj
