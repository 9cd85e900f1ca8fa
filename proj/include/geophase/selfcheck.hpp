#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace geophase {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Fast invariant battery behind `geophase check`: phase identities, cross-representation
/// agreement, norm laws, PT classification, precession and spectrum symmetries.
std::vector<CheckResult> run_self_checks(std::uint64_t seed);

/// GEOPHASE_SEED when set, otherwise a fixed default.
std::uint64_t self_check_seed();

}  // namespace geophase
