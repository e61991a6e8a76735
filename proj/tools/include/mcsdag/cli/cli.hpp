#ifndef MCSDAG_CLI_CLI_HPP
#define MCSDAG_CLI_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcsdag/mdag.hpp"

namespace mcsdag::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitData = 2,
    kExitOracleMismatch = 3,
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A literal string, or the contents of a file when prefixed with '@'
/// (one trailing newline removed).
std::string read_input(const std::string& arg);

struct VerifyReport {
    std::uint64_t checked = 0;
    std::uint64_t not_maximal = 0;
    std::uint64_t out_of_order = 0;
    bool truncated = false;
    std::string first_failure;

    bool ok() const { return not_maximal == 0 && out_of_order == 0; }
};

inline constexpr std::uint64_t kDefaultVerifyCap = 100000;

/// Enumerates g (at most `cap` strings) and checks each one for maximality
/// against x and y, and that the sequence is strictly increasing.
VerifyReport verify_mdag(const Mdag& g, std::string_view x, std::string_view y,
                         std::uint64_t cap = kDefaultVerifyCap);

/// Deterministic random pair of length-n strings over the first `sigma`
/// letters of "ACGT" followed by the rest of the Latin alphabet.
std::pair<std::string, std::string> random_pair(std::size_t n, std::size_t sigma,
                                                std::uint64_t seed);

struct BenchRow {
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::uint64_t seed = 0;
    std::size_t nodes = 0; // pruned, before compaction
    std::size_t edges = 0;
    std::size_t compact_nodes = 0;
    std::size_t compact_edges = 0;
    double build_ms = 0;
    std::size_t mcs_count_digits = 0;
    std::uint64_t enumerated = 0;
    double enumerate_ms = 0;
    double frames_per_solution = 0;
    std::size_t max_lm_multiplicity = 0;
};

/// Builds, compacts and enumerates (up to `enumeration_cap` strings) one
/// random instance.
BenchRow bench_instance(std::size_t n, std::size_t sigma, std::uint64_t seed,
                        std::uint64_t enumeration_cap);

void write_bench_header(std::ostream& out);
void write_bench_row(std::ostream& out, const BenchRow& row);

} // namespace mcsdag::cli

#endif
