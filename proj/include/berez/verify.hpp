#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "berez/oracle.hpp"

namespace berez {

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string case_id;
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail; // failure description or skip reason
};

/// Runs every applicable exact identity on one matrix: inverse laws, trace
/// cyclicity, Berezinian multiplicativity and the exponential relation,
/// the exterior-power route for the characteristic coefficients, all
/// recurrences, Hankel vanishing, both Berezinian formulas, the invariant
/// factorizations and the annihilating polynomial. Partner matrices for the
/// two-operand identities are drawn from the seed.
std::vector<CheckResult> verify_matrix(const std::string& case_id, const Supermatrix& a,
                                       std::uint64_t seed);

/// Seeded battery over p, q <= 2 with N = 4, plus ordinary (q = 0) cases.
std::vector<CheckResult> verify_battery(std::uint64_t seed);

/// The battery plus a deliberately corrupted characteristic coefficient;
/// the corrupted case must surface as a FAIL, proving the checks can fire.
std::vector<CheckResult> selftest_checks(std::uint64_t seed);

bool all_passed(const std::vector<CheckResult>& results);

std::string to_string(CheckStatus s);

} // namespace berez
