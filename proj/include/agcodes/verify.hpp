#ifndef AGCODES_VERIFY_HPP
#define AGCODES_VERIFY_HPP

#include <string>
#include <vector>

#include "agcodes/curve.hpp"

namespace agcodes {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Cross-module invariant suite for one curve: point validity, the
/// additive structure of the betas, the weak-Castle test, basis sizes
/// against semigroup counts, rank against the dimension formulas,
/// duality and nesting of the codes, and (optionally) agreement of all
/// emitted distance and weight bounds with the brute-force oracle.
std::vector<CheckResult> run_verification(const Curve& curve, bool with_oracle, const std::vector<long>& ghw_ls = {2});

bool all_passed(const std::vector<CheckResult>& results);

} // namespace agcodes

#endif
