#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "vqx/pipeline.hpp"

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_dir;
    std::string scale;
    uint64_t seed = 0;
    bool seed_set = false;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool config_required = true) {
    auto* opt = cmd->add_option("--config", flags.config_path, "experiment config file");
    if (config_required) opt->required();
    cmd->add_option("--seed", flags.seed, "master seed (overrides the config)")
        ->each([&flags](const std::string&) { flags.seed_set = true; });
    cmd->add_option("--out", flags.out_dir, "output directory (overrides the config)");
    cmd->add_option("--threads", flags.threads, "worker threads (overrides the config)");
    cmd->add_option("--scale", flags.scale,
                    "desk or paper; overrides the config scale and resets its "
                    "default k and run counts")
        ->check(CLI::IsMember({"desk", "paper"}));
}

vqx::ExperimentConfig load_config(const CommonFlags& flags) {
    vqx::ExperimentConfig cfg = flags.config_path.empty()
                                    ? vqx::ExperimentConfig::from_text("")
                                    : vqx::ExperimentConfig::from_file(flags.config_path);
    if (flags.seed_set) {
        cfg.seed = flags.seed;
        cfg.seed_set = true;
    }
    if (!flags.out_dir.empty()) cfg.out_dir = flags.out_dir;
    if (flags.threads > 0) cfg.threads = flags.threads;
    if (!flags.scale.empty()) {
        cfg.scale = flags.scale;
        cfg.apply_scale_defaults();
    }
    if (!cfg.seed_set)
        throw std::invalid_argument("a master seed is mandatory (config experiment.seed "
                                    "or --seed); wall-clock seeding is not supported");
    return cfg;
}

int report(const vqx::CommandOutcome& outcome) {
    for (const auto& f : outcome.failures) std::cerr << "failure: " << f << "\n";
    for (const auto& a : outcome.artifacts) std::cout << "wrote " << a << "\n";
    return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian-expressibility estimation, shot-based VQE, and "
                 "expressibility/quality correlation analysis"};
    app.require_subcommand(1);

    CommonFlags expr_flags, vqe_flags, corr_flags, sweep_flags, gen_flags;
    std::string corr_expr_csv, corr_vqe_csv;

    auto* expr = app.add_subcommand("expressibility",
                                    "Monte Carlo frame potentials and expressibility metrics");
    add_common(expr, expr_flags);

    auto* vqe = app.add_subcommand("vqe", "shot-based VQE over the configured dataset");
    add_common(vqe, vqe_flags);

    auto* corr = app.add_subcommand("correlate",
                                    "join expressibility and VQE outputs, correlate per class");
    add_common(corr, corr_flags);
    corr->add_option("--expressibility-csv", corr_expr_csv, "expressibility.csv path")
        ->required();
    corr->add_option("--vqe-csv", corr_vqe_csv, "vqe_aggregate.csv path")->required();

    auto* sweep = app.add_subcommand("noise-sweep",
                                     "correlation coefficients vs backend error rate");
    add_common(sweep, sweep_flags);

    auto* dataset = app.add_subcommand("dataset", "dataset utilities");
    dataset->require_subcommand(1);
    auto* gen = dataset->add_subcommand("gen", "generate and export the Hamiltonian dataset");
    add_common(gen, gen_flags);
    auto* catalog = dataset->add_subcommand("catalog", "print the bundled circuit catalog");

    CLI11_PARSE(app, argc, argv);

    try {
        if (catalog->parsed()) {
            std::cout << vqx::bundled_catalog_text();
            return 0;
        }
        if (expr->parsed()) return report(vqx::cmd_expressibility(load_config(expr_flags)));
        if (vqe->parsed()) return report(vqx::cmd_vqe(load_config(vqe_flags)));
        if (corr->parsed())
            return report(
                vqx::cmd_correlate(load_config(corr_flags), corr_expr_csv, corr_vqe_csv));
        if (sweep->parsed()) return report(vqx::cmd_noise_sweep(load_config(sweep_flags)));
        if (gen->parsed()) return report(vqx::cmd_dataset_gen(load_config(gen_flags)));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
