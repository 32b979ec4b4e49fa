#pragma once

// Named self-checks over one admissible parameter triple. Each check rebuilds
// what it needs from scratch, so any subset can run on its own.

#include <cstdint>
#include <string>
#include <vector>

#include "dcodes/code.hpp"

namespace dcodes {

struct VerifyParams {
    std::uint64_t q = 11;
    std::uint64_t p = 3;
    unsigned m = 2;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 20240917;
};

enum class CheckStatus { pass, fail, skip };

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string detail;
};

const char* to_string(CheckStatus s);

/// All check names, in execution order.
const std::vector<std::string>& check_names();

/// Runs the checks named in `only` (all of them when empty). Throws
/// InadmissibleParameters before running anything if (q, p, m) is not
/// admissible and std::invalid_argument for an unknown check name.
std::vector<CheckResult> run_checks(const VerifyParams& params, const std::vector<std::string>& only = {});

/// One line per result: "PASS name", "FAIL name: detail" or "SKIP name: detail".
std::string format_result(const CheckResult& r);

/// The coset-slot claim for the [18, 2] code of F_q D_9 f: every codeword is
/// constant on the six cosets g H_1, and no nonzero codeword vanishes on more
/// than one of them. Returns the number of nonzero codewords violating it.
std::size_t coset_slot_violations(const LinearCode& code, const Group& dihedral);

}  // namespace dcodes
