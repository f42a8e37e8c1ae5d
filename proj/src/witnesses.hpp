#pragma once

#include "coverings.hpp"
#include "exact_angles.hpp"
#include "group_core.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace rotconj {

enum class WitnessKind { Identity, FixedConjugation, DetTwist, DetTwistFlip, Descended };

const char* witness_kind_name(WitnessKind k);

/// Symbolic conjugating homeomorphism.
///
/// FixedConjugation: u -> J u J^-1.
/// DetTwist / DetTwistFlip (groups U2 and SU2xS1), in product coordinates
/// u = diag(mu, 1) M(v):  (v, mu) -> (t(mu^twist) F(v), mu^phi_sign), where F is
/// the identity for DetTwist and v -> i v i^-1 for DetTwistFlip.
/// Descended: project(c, upstairs(section(c, u))).
struct Witness {
    GroupId group = GroupId::SU2;
    WitnessKind kind = WitnessKind::Identity;
    std::optional<GroupElement> conjugator;
    long long twist = 0;
    int theta_sign = 1;
    int phi_sign = 1;
    int case_tag = 0;
    std::shared_ptr<const Witness> upstairs;
    std::optional<Covering> covering;
};

Witness identity_witness(GroupId group);
/// Twist witness on U2 or SU2xS1 mapping (theta, phi) to (s theta + m phi, sigma phi).
Witness twist_witness(GroupId group, int theta_sign, long long twist, int phi_sign);

/// Build the proof witness for a Conjugate verdict (topological criterion).
Witness build_witness(GroupId group, const RotationVector& rho, const RotationVector& rho_prime,
                      const Verdict& verdict, const IrrationalBasis& basis);

GroupElement apply_witness(const Witness& w, const GroupElement& u);
ElementMap as_map(const Witness& w);

/// u -> w(u) w(e)^-1
ElementMap normalize_witness(const ElementMap& w, GroupId group);

/// Max over sampled u of distance(w(g u), g' w(u)).
double verify_conjugacy(const Witness& w, const GroupElement& g, const GroupElement& g_prime, int samples,
                        std::uint64_t seed);
double verify_conjugacy(const ElementMap& w, const GroupElement& g, const GroupElement& g_prime, int samples,
                        std::uint64_t seed);

/// True iff w maps every deck element of c into the deck group (tolerance kGroupTol).
bool preserves_deck(const Covering& c, const ElementMap& upstairs);

struct DescentCandidate {
    Witness upstairs;
    RotationVector rho_lift;
    RotationVector rho_prime_lift;
};

/// Upstairs witnesses, over lifts of rho_prime and the lattice-solution family,
/// that carry the first lift of rho to a lift of rho_prime and preserve the
/// deck group. Ordered by (lift index, |twist|).
std::vector<DescentCandidate> descent_candidates(const Covering& c, const RotationVector& rho,
                                                 const RotationVector& rho_prime);

}  // namespace rotconj
