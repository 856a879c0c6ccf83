#ifndef KGRAPH_CHECKS_HPP
#define KGRAPH_CHECKS_HPP

#include <kgraph/fixtures.hpp>
#include <kgraph/json_io.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace kgraph {

// Exit code contract shared by the CLI and the C API:
// 0 = all checks pass (interior-pass counts as a pass),
// 1 = skeleton validation failure, 2 = check failure, 3 = usage error.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1,
    kExitCheckFailed = 2,
    kExitUsage = 3,
};

struct CommandResult {
    nlohmann::json report;
    int exit_code = kExitOk;
};

CommandResult run_validate(const SkeletonDoc& doc);

CommandResult run_mce(const Skeleton& sk, const std::string& mu_literal,
                      const std::string& nu_literal);

CommandResult run_vee(const Skeleton& sk, const std::vector<std::string>& literals);

CommandResult run_align(const Skeleton& sk, const Degree& bound);

// Relation suite, Nica-covariance products over every degree pair <= bound,
// partition identities over `samples` sampled admissible sets F, and the
// maximal-subpath projection identity on the same samples. Whenever a
// symbolic residue is nonzero it is re-evaluated in the Fock
// representation; a residue the Fock family kills is surfaced as a
// warning rather than silently accepted.
CommandResult run_check(const Skeleton& sk, const Degree& bound, double tol,
                        std::uint64_t seed, int samples);

// sets: {"p1,p2,...": [path literals], ...} per degree.
// gens: [[color-1 edge ids], [color-2 edge ids], ...] or null; when given,
// an avoiding path is searched and its Fock identity verified.
CommandResult run_faithful(const Skeleton& sk, const std::string& vertex_id,
                           const nlohmann::json& sets, const nlohmann::json& gens,
                           const Degree& bound);

}  // namespace kgraph

#endif
