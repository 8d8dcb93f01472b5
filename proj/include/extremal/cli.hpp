#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace extremal {

enum class Command { Generate, Filtration, Betti, Persistence, Oracle, Verify, Radii };

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

struct RunConfig {
    Command command = Command::Generate;
    std::string kind = "3d";
    int k = 2;
    int n = 2;
    std::string delta = "auto"; ///< "auto" or a number
    std::string h = "0.5";       ///< "auto" or a number (suspended sets)
    std::optional<double> radius;
    std::optional<int> p;
    std::string output;         ///< empty: standard output
    std::string input;          ///< optional point file replacing the generator
    std::string svg;
    std::string theorem;
    bool unreduced = false;
    std::size_t budget = 10'000'000;
    int threads = 0;            ///< 0: keep the default
};

/// Parses argv. Returns nullopt and sets exit_code when parsing ends the run
/// (help, or a usage error already reported on err).
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

/// Executes one command. Data goes to `out` (or the -o file); diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv);

} // namespace extremal
