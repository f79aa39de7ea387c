#ifndef ORTHOPOLY_VERIFY_HPP
#define ORTHOPOLY_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orthopoly/classical.hpp"

namespace orthopoly {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 42;
    std::size_t max_degree = 8;
    std::size_t det_size = 6;
    std::size_t instances = 100;
    std::size_t max_dim = 5;
    std::size_t permutations = 5;
    std::size_t hodge_max_degree = 5;
    std::size_t eset_max = 10;
};

/// The family/parameter grid every orthogonalization suite runs over.
std::vector<MomentFunctional> verification_grid();

/// Runs the selected suite (ratcore, detkit, gschmidt, classical, exterior,
/// or all) and returns one result per named check, in a fixed order.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);

/// Deterministic plain-text report: the effective options, one PASS/FAIL line
/// per check with the first counterexample on failure, and a summary line.
/// Contains no timing or timestamps, so identical runs are byte-identical.
std::string render_report(const VerifyOptions& options, const std::vector<CheckResult>& results);

} // namespace orthopoly

#endif
