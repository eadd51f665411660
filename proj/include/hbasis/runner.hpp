/**
 * Pipeline front door shared by the CLI and the Python bindings: parse,
 * validate, dispatch to the requested computation, and emit a
 * machine-readable result document.
 *
 * Exit codes: 0 ok, 2 parse error, 3 validation error, 4 guard refusal,
 * 5 internal invariant failure.
 */

#ifndef HBASIS_RUNNER_HPP
#define HBASIS_RUNNER_HPP

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "hbasis/candidates.hpp"

namespace hbasis {

enum class Command { Exact, Approx, Hd, Rank, Oracle, Validate };

struct RunConfig {
    Command command = Command::Exact;
    std::string input_path;
    std::string output_path; // empty = stdout
    SizeKind measure = SizeKind::SumOfWeights;
    DistanceKind distance = DistanceKind::Graph;
    int dim = 1;
    std::uint64_t seed = 0;
    double c0 = 2.0;
    std::size_t max_oracle_edges = 25;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitValidate = 3;
inline constexpr int kExitGuard = 4;
inline constexpr int kExitInternal = 5;

/// Run the configured command on an already parsed complex.
/// Deterministic for fixed (config, input, seed) except the timing_ms
/// field. Throws the typed errors from errors.hpp.
nlohmann::ordered_json run(const RunConfig& config, const SimplicialComplex& k);

/// Parse the input file, run, write the document to output_path or
/// stdout, map errors to exit codes.
int run_main(const RunConfig& config);

const char* command_name(Command c);

} // namespace hbasis

#endif
