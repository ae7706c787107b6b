#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace berezin {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInequalityFailure = 1;
inline constexpr int kExitInputError = 2;

/// Commands: norms, sweep-t, verify, reproduce, lemmas.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct ReproduceRow {
    std::string name;
    double expected = 0.0;
    double computed = 0.0;
    double difference = 0.0;
    double threshold = 1e-10;
    bool pass = false;
    std::string note;
};

/// Worked examples: expected value, computed value and absolute difference.
std::vector<ReproduceRow> reproduce_rows();

}  // namespace berezin
