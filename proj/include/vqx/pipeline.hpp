#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vqx/analysis.hpp"
#include "vqx/expressibility.hpp"
#include "vqx/noise.hpp"
#include "vqx/vqe.hpp"

namespace vqx {

// Resolved experiment configuration. Parsed from a line-oriented key-value
// file (one dotted key per line, `key = value`); a JSON copy of the resolved
// configuration is written next to every run's outputs.
struct ExperimentConfig {
    int n_qubits = 4;
    std::string scale = "desk"; // desk | paper
    uint64_t seed = 0;
    bool seed_set = false;
    int threads = 1;
    std::string out_dir = "out";

    std::vector<std::string> template_ids; // empty means the full catalog
    int layers_min = 1;
    int layers_max = 1;
    std::string catalog_file; // empty means the bundled catalog

    std::vector<std::string> dataset_classes; // empty means all classes
    std::map<std::string, int> class_counts;  // per-class overrides
    double mvc_penalty = 8.0;
    int nondiagonal_terms = 0; // 0 means 2 * n_qubits

    long k = 50000;
    long threshold_k = 0; // 0 means same as k
    DeviationMode deviation = DeviationMode::AsPublished;

    VqeConfig vqe;
    std::vector<std::string> noise_profiles; // named or file:<path>; empty = ideal

    std::string topology_kind = "default"; // line | ring | full | default
    std::string topology_file;

    static ExperimentConfig from_text(const std::string& text);
    static ExperimentConfig from_file(const std::string& path);
    // resets k and n_runs to the scale's defaults (used by --scale overrides)
    void apply_scale_defaults();
    std::string to_json() const;
    uint64_t config_hash() const;

    Topology topology() const;
    const CircuitCatalog& catalog() const;
    std::vector<std::string> resolved_template_ids() const;

  private:
    mutable std::optional<CircuitCatalog> loaded_catalog_;
};

struct DatasetInstance {
    std::string id;
    Hamiltonian hamiltonian;
};

// Deterministic in (config seed, class, index); identical across commands.
std::vector<DatasetInstance> build_dataset(const ExperimentConfig& cfg);

NoiseModel resolve_noise_profile(const std::string& name);

// One (circuit, hamiltonian) expressibility record, as written to CSV.
struct ExpressibilityRecord {
    std::string template_id;
    int layers = 0;
    int n_qubits = 0;
    std::string hamiltonian_id;
    long k = 0;
    FramePotentialEstimate estimate;
    double f_haar = 0.0;
    ExpressibilityResult result;
    uint64_t seed = 0;
};

struct CommandOutcome {
    int exit_code = 0; // 0 ok, 2 config error, 3 partial failure
    std::vector<std::string> artifacts;
    std::vector<std::string> failures;
};

CommandOutcome cmd_dataset_gen(const ExperimentConfig& cfg);
CommandOutcome cmd_expressibility(const ExperimentConfig& cfg);
CommandOutcome cmd_vqe(const ExperimentConfig& cfg);
CommandOutcome cmd_correlate(const ExperimentConfig& cfg, const std::string& expr_csv,
                             const std::string& vqe_csv);
CommandOutcome cmd_noise_sweep(const ExperimentConfig& cfg);

// Full pipeline for one Hamiltonian across an ordered list of noise profiles:
// expressibility is computed once (it is noise-independent), VQE reruns per
// profile, and each profile's coefficients are paired with its Err.
struct NoiseSweepPoint {
    std::string profile;
    double err = 0.0;
    CorrelationReport epsilon_report;
    CorrelationReport gamma_report;
};

std::vector<NoiseSweepPoint> noise_sweep(const std::vector<CircuitTemplate>& templates,
                                         Hamiltonian& h,
                                         const std::vector<std::string>& profiles,
                                         const ExperimentConfig& cfg);

// deterministic float formatting shared by all emitters ("%.12g")
std::string format_double(double v);

} // namespace vqx
