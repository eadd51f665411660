// Command-line front end: parse a complex document, run the requested
// pipeline, emit a result document.

#include <CLI11.hpp>

#include "hbasis/runner.hpp"

namespace {

void add_common_flags(CLI::App* cmd, hbasis::RunConfig& config, bool with_measure = true,
                      bool with_distance = true)
{
    cmd->add_option("--input", config.input_path, "Input complex document")->required();
    cmd->add_option("--output", config.output_path, "Result document path (default: stdout)");
    if (with_measure) {
        cmd->add_option_function<std::string>(
               "--measure",
               [&config](const std::string& v) {
                   config.measure = v == "radius" ? hbasis::SizeKind::Radius
                                                  : hbasis::SizeKind::SumOfWeights;
               },
               "Cycle size measure")
            ->check(CLI::IsMember({"sum", "radius"}))
            ->default_str("sum");
    }
    if (with_distance) {
        cmd->add_option_function<std::string>(
               "--distance",
               [&config](const std::string& v) {
                   config.distance = v == "function" ? hbasis::DistanceKind::Function
                                                     : hbasis::DistanceKind::Graph;
               },
               "Vertex distance function")
            ->check(CLI::IsMember({"graph", "function"}))
            ->default_str("graph");
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimal homology bases of weighted simplicial complexes over Z2"};
    app.require_subcommand(1);

    hbasis::RunConfig config;

    CLI::App* exact = app.add_subcommand("exact", "Exact minimal homology basis");
    add_common_flags(exact, config);

    CLI::App* approx = app.add_subcommand("approx", "Sampled 2-approximate basis (sum measure)");
    add_common_flags(approx, config, /*with_measure=*/false);
    approx->add_option("--seed", config.seed, "Sampling seed")->default_val(0);
    approx->add_option("--c0", config.c0, "Sample size constant")->default_val(2.0);

    CLI::App* hd = app.add_subcommand("hd", "Radius-minimal basis of H_d via persistence");
    add_common_flags(hd, config, /*with_measure=*/false);
    hd->add_option("--dim", config.dim, "Homology dimension")->required()
        ->check(CLI::Range(1, 64));

    CLI::App* rank = app.add_subcommand("rank", "First Betti number");
    add_common_flags(rank, config, /*with_measure=*/false, /*with_distance=*/false);

    CLI::App* oracle = app.add_subcommand("oracle", "Brute-force minimal basis (guarded)");
    add_common_flags(oracle, config);
    oracle->add_option("--max-oracle-edges", config.max_oracle_edges,
                       "Edge-count guard for the oracle")
        ->default_val(25);

    CLI::App* validate = app.add_subcommand("validate", "Structural audit of the input");
    add_common_flags(validate, config, /*with_measure=*/false, /*with_distance=*/false);

    CLI11_PARSE(app, argc, argv);

    if (exact->parsed())
        config.command = hbasis::Command::Exact;
    else if (approx->parsed())
        config.command = hbasis::Command::Approx;
    else if (hd->parsed())
        config.command = hbasis::Command::Hd;
    else if (rank->parsed())
        config.command = hbasis::Command::Rank;
    else if (oracle->parsed())
        config.command = hbasis::Command::Oracle;
    else if (validate->parsed())
        config.command = hbasis::Command::Validate;

    return hbasis::run_main(config);
}
