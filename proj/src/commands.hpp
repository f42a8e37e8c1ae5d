#pragma once

#include "json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace rotconj {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

struct SessionConfig {
    /// Declared basis; when absent, symbols are bound to fractional parts of
    /// square roots of successive primes in sorted symbol order.
    std::optional<IrrationalBasis> basis;
    std::uint64_t seed = kDefaultSeed;
    bool numeric = false;
};

/// Batch operations. Every method returns a JSON document and throws
/// ValidationError on bad input.
class Session {
public:
    SessionConfig config;

    void set_basis_json(const std::string& text);

    json classify(const std::string& group, const std::string& mode, const std::string& rho,
                  const std::string& rho_prime, int bound = 10) const;
    json classify_elements(const std::string& group, const std::string& mode, const std::string& element,
                           const std::string& element_prime) const;
    json reduce(const std::string& group, const std::string& element) const;
    json witness(const std::string& group, const std::string& rho, const std::string& rho_prime,
                 int verify_samples) const;
    json verify(const std::string& group, const std::string& rho, const std::string& rho_prime, int samples) const;
    json orbit(const std::string& group, const std::string& rho, long long samples, double radius,
               bool include_points) const;
    json lift(const std::string& covering, const std::string& rho) const;
    /// `input` is a GroupElement of the covering's source, or a source rotation vector.
    json project(const std::string& covering, const std::string& input) const;
    json selftest() const;

    /// Basis covering every symbol in `rho` (declared or automatic).
    IrrationalBasis resolve_basis(const std::vector<const RotationVector*>& rhos) const;
    RotationVector parse_rho(GroupId group, const std::string& text) const;
};

GroupId require_group(const std::string& name);
ConjugacyMode require_mode(const std::string& name);
Covering require_covering(const std::string& name);

/// True when the command result carries an Unknown verdict.
bool has_unknown_verdict(const json& result);

}  // namespace rotconj
