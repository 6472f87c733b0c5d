#ifndef CYCLOCOVER_CLI_HPP
#define CYCLOCOVER_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclocover/solution.hpp"

namespace cyclocover {

// Exit codes: 0 success/valid, 1 invalid solution or bench violation,
// 2 input error, 3 enumeration limit exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchConfig {
    int trials = 50;
    int n_max = 25;
    int c_max = 4;
    std::uint64_t seed = 1;
    bool families = false;
    int exact_upto = 0; // brute/xp cross-checks for instances with n <= this
};

// Runs every construction on seeded random instances (optionally plus the
// fixed tight families), asserting the size bounds and oracle validity;
// violations are recorded, never aborted on.
json run_bench(const BenchConfig& config);

} // namespace cyclocover

#endif // CYCLOCOVER_CLI_HPP
