#pragma once

#include "exact_angles.hpp"
#include "group_core.hpp"

#include <optional>
#include <string>

namespace rotconj {

enum class ConjugacyMode { Topological, Smooth, Algebraic };

const char* mode_name(ConjugacyMode m);
std::optional<ConjugacyMode> parse_mode(const std::string& name);

/// The integer multiplying n*phi in the group's lattice criterion (2 for SO3xS1).
long long lattice_multiplier(GroupId group);

Verdict decide(GroupId group, ConjugacyMode mode, const RotationVector& rho, const RotationVector& rho_prime);

struct ElementDecision {
    Verdict verdict;
    TorusReduction reduction;
    TorusReduction reduction_prime;
};

ElementDecision decide_elements(const GroupElement& g, const GroupElement& g_prime, ConjugacyMode mode);

}  // namespace rotconj
