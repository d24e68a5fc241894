#pragma once

#include <functional>
#include <vector>

#include "vqx/circuits.hpp"
#include "vqx/hamiltonians.hpp"
#include "vqx/noise.hpp"

namespace vqx {

// --- Pauli decomposition ------------------------------------------------------

struct PauliDecomposition {
    double identity_coefficient = 0.0;
    std::vector<PauliString> terms; // non-identity, non-zero coefficients
};

// c_P = Tr[P H] / 2^n over all Pauli strings; zero terms dropped
PauliDecomposition pauli_decompose(const Hamiltonian& h);
Matrix reconstruct(const PauliDecomposition& dec, int n_qubits);

// --- Execution ------------------------------------------------------------------

struct Executor {
    enum class Mode { Ideal, Noisy };
    Mode mode = Mode::Ideal;
    const NoiseModel* noise = nullptr;
    const Topology* topology = nullptr;

    static Executor ideal(const Topology& topo);
    static Executor noisy(const NoiseModel& model, const Topology& topo);
};

struct MeasurementTerm {
    PauliString pauli;
    double coefficient = 0.0;
    std::vector<GateOp> basis_change; // native gates appended before measuring
    std::vector<int> support;         // qubits with a non-identity factor
};

// Precomputed measurement circuits for one (template, Hamiltonian) pair.
struct MeasurementPlan {
    CircuitTemplate native;
    double identity_coefficient = 0.0;
    std::vector<MeasurementTerm> terms;
};

enum class ShotBudget { PerTerm, SplitEvenly };

MeasurementPlan prepare_measurement_plan(const CircuitTemplate& t, const Hamiltonian& h);

double sampled_energy(const MeasurementPlan& plan, const std::vector<double>& params,
                      const Executor& exec, long n_shots, Rng& rng,
                      ShotBudget budget = ShotBudget::PerTerm);

// one-call form; prefer prepare_measurement_plan + sampled_energy in loops
double sample_expectation(const CircuitTemplate& t, const std::vector<double>& params,
                          const Hamiltonian& h, const Executor& exec, long n_shots, Rng& rng);

// --- Optimizers -------------------------------------------------------------------

using Objective = std::function<double(const std::vector<double>&)>;

struct OptimizeResult {
    std::vector<double> x;
    double f = 0.0;
    long eval_count = 0;
    bool converged = false; // false when the eval budget ran out first
    std::vector<double> trace; // every objective value, in evaluation order
};

// Derivative-free linear-approximation trust-region descent over a simplex;
// terminates when the trust radius falls below rhoend or the budget is spent,
// and returns the best observed point.
OptimizeResult cobyla_minimize(const Objective& f, const std::vector<double>& x0,
                               double rhobeg, double rhoend, long max_evals);

OptimizeResult nelder_mead_minimize(const Objective& f, const std::vector<double>& x0,
                                    double initial_step, double tol, long max_evals);

// --- VQE driver --------------------------------------------------------------------

struct VqeConfig {
    long n_shots = 1000;
    int n_runs = 10;
    long max_evals = 1000;
    enum class InitialParams { UniformRandom, Zeros } initial = InitialParams::UniformRandom;
    enum class Optimizer { Cobyla, NelderMead } optimizer = Optimizer::Cobyla;
    double rhobeg = 1.0;
    double rhoend = 1e-4;
    ShotBudget shot_budget = ShotBudget::PerTerm;
};

struct VqeRun {
    std::vector<double> best_params;
    double best_energy = 0.0;
    long eval_count = 0;
    std::vector<double> energy_trace;
    double ar = 0.0;
    uint64_t seed = 0;
};

struct ExperimentResult {
    double ar_mean = 0.0;
    double ar_std = 0.0; // population convention
    std::vector<VqeRun> per_run;
};

// (energy - lambda_max) / (lambda_min - lambda_max), clamped into [0, 1]
// only for shot-noise excursions below 0.02; larger excursions throw.
double approximation_ratio(double energy, const SpectrumBounds& bounds);

// n_runs independent optimizations with seeds derived from master_seed;
// bit-reproducible for a fixed (master_seed, cfg, template, h).
ExperimentResult run_experiment(const CircuitTemplate& t, Hamiltonian& h,
                                const Executor& exec, const VqeConfig& cfg,
                                uint64_t master_seed);

} // namespace vqx
