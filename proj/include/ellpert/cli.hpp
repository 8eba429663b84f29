#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ellpert/solver.hpp"
#include "ellpert/validation/exact.hpp"

namespace ellpert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDiverging = 3;

/// Exit status of a finished series run: 3 for diverging, 0 otherwise.
int exit_status(StopReason reason);

/// Bad or unreadable configuration; maps to exit status 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FourierSource {
    std::map<int, cplx> modes;
};
struct HolderSource {
    double alpha = 0.75;
    int modes = 64;
    std::uint64_t seed = 1;
};
struct ExactSource {
    validation::ExactFamily family = validation::ExactFamily::LAME;
    std::vector<cplx> poly;
};
using BoundarySource = std::variant<FourierSource, HolderSource, ExactSource>;

enum class Command { Solve, ValidateOps, Opnorm, CompareFd };

struct OpnormOptions {
    std::vector<KernelId> kernels{KernelId::GREEN_K, KernelId::BEURLING_KD, KernelId::KDBAR};
    std::vector<double> p_values{2.0, 2.5, 3.0};
    int trials = 4;
    std::uint64_t seed = 1;
};

struct RunConfig {
    Command command = Command::Solve;
    double tau = 0.0;
    double sigma = 0.0;
    std::optional<BoundarySource> boundary;
    std::vector<cplx> map{0.0, 1.0};
    SolverConfig solver;  ///< grid size lives in solver.max_mode / radial_count
    std::filesystem::path output_dir = ".";
    OpnormOptions opnorm;
    int fd_n = 64;
    int validate_points = 10;
    std::uint64_t validate_seed = 7;
};

/// Schema:
///   command      "solve" | "validate-ops" | "opnorm" | "compare-fd"
///   tau, sigma   numbers, default 0
///   boundary     exactly one of
///                  {"fourier": {"<k>": [re, im], ...}}
///                  {"holder": {"alpha": a, "modes": m, "seed": s}}
///                  {"exact": {"family": "LAME"|"SKEW", "poly": [[re, im], ...]}}
///   map          [[re, im], ...] power-series coefficients, default identity
///   grid         {"max_mode": K, "radial_count": J}
///   solver       {"max_terms", "tail_tol", "p_exponent"}
///   output_dir   path
///   opnorm       {"kernels": [...], "p": [...], "trials", "seed"}
///   fd           {"n": lattice size}
///   validate     {"points", "seed"}
/// Unknown top-level keys are rejected. Throws ConfigError.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::filesystem::path& path);

/// Runs one command and returns the process exit status. Progress goes to
/// `log`; errors are written to `err`.
int run(const RunConfig& config, std::ostream& log, std::ostream& err);

}  // namespace ellpert::cli
