#pragma once

#include "exact_angles.hpp"
#include "group_core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rotconj {

enum class CoveringKind { SU2_to_SO3, U2_to_SO3xS1, U2_to_SpinC3, U2_selfcover, SpinC3_to_SO3xS1 };

/// One of the five covering homomorphisms. The u2-* coverings act on the
/// product group SU2xS1 (U(2) matrices are accepted and converted through
/// u = diag(det u, 1) M(v)).
struct Covering {
    CoveringKind kind = CoveringKind::SU2_to_SO3;
    int p = 1;  // only for U2_selfcover

    GroupId source() const;
    GroupId target() const;
    int fold() const;
    std::vector<std::vector<long long>> torus_matrix() const;
    std::string name() const;
};

Covering make_covering(CoveringKind kind, int p = 1);
/// "su2-so3", "u2-so3xs1", "u2-spinc3", "u2-self:P", "spinc3-so3xs1".
std::optional<Covering> parse_covering(const std::string& name);
std::vector<Covering> all_coverings(int selfcover_p = 3);

GroupElement project(const Covering& c, const GroupElement& e);
/// Some preimage of a base element.
GroupElement section(const Covering& c, const GroupElement& e);
std::vector<GroupElement> deck_group(const Covering& c);

std::vector<RotationVector> lift_rotation_vectors(const Covering& c, const RotationVector& rho);

AngleValue pushforward(const std::vector<AngleValue>& rho, const std::vector<long long>& row);
std::vector<AngleValue> pushforward(const std::vector<AngleValue>& rho,
                                    const std::vector<std::vector<long long>>& matrix);
RotationVector pushforward(const Covering& c, const RotationVector& upstairs);

struct Witness;

/// True iff, for the first lift of rho, some lift of rho_prime is reached by an
/// upstairs conjugacy that descends (maps the deck group into itself).
bool check_lift_correspondence(const Covering& c, const RotationVector& rho, const RotationVector& rho_prime);

/// Throws ValidationError("deck") when the upstairs witness does not preserve
/// the deck group.
Witness descend_map(const Covering& c, const Witness& upstairs);
ElementMap descend_map(const Covering& c, const ElementMap& upstairs);

}  // namespace rotconj
