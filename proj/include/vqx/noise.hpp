#pragma once

#include <map>
#include <string>
#include <vector>

#include "vqx/circuits.hpp"

namespace vqx {

struct KrausSet {
    std::vector<Matrix> operators; // 2^m x 2^m, m = 1 or 2
    int n_qubits = 1;

    double completeness_error() const; // max |sum K^dag K - I|
    void apply(DensityMatrix& rho, int qubit) const;
    void apply(DensityMatrix& rho, int qubit_a, int qubit_b) const;
};

// Amplitude damping (p = 1 - e^{-t/T1}) composed with pure dephasing so the
// off-diagonal decay factor equals e^{-t/T2}. Requires t2 <= 2*t1.
KrausSet thermal_relaxation_kraus(double t1, double t2, double duration);

// m-qubit depolarizing channel: rho -> (1-p) rho + p I/2^m.
KrausSet depolarizing_kraus(double p, int m_qubits);

KrausSet compose(const KrausSet& first, const KrausSet& second); // second after first
KrausSet tensor(const KrausSet& a, const KrausSet& b);

// F_avg = (sum_k |Tr[U^dag K_k]|^2 + d) / (d^2 + d)
double average_gate_fidelity(const UnitaryMatrix& ideal, const KrausSet& channel);

// Per-gate noise: thermal relaxation over the gate duration on each involved
// qubit, then a depolarizing channel calibrated so the composite average
// gate infidelity equals err1 (single-qubit) or err2 (two-qubit).
struct GateChannel {
    KrausSet relax;     // single-qubit relaxation stage
    KrausSet depol;     // calibrated depolarizing stage (1q or 2q)
    KrausSet composite; // full Kraus set of the noise map, for fidelities
    bool trivial = true; // identity channel
};

struct NoiseModel {
    double t1 = 0.0;   // seconds; +inf disables relaxation
    double t2 = 0.0;
    double err1 = 0.0; // single-qubit gate & measurement error rate
    double err2 = 0.0; // two-qubit gate error rate
    std::map<GateKind, double> gate_durations; // seconds
    double measure_duration = 1e-6;
    // P(M = k | state = j) per qubit; empty means a symmetric err1 flip
    std::vector<Eigen::Matrix2d> readout_confusion;

    static NoiseModel ideal();
    static NoiseModel from_params(double t1, double t2, double err1, double err2);
    // enforces t2 = t1 and err2 = 25 * err1
    static NoiseModel paper_profile(double t1, double err1);

    bool is_ideal() const;
    Eigen::Matrix2d confusion_for(int qubit) const;
    const GateChannel& gate_channel(GateKind kind) const;
    double duration_for(GateKind kind) const;

  private:
    void build_channels();
    std::map<GateKind, GateChannel> channels_;
    friend NoiseModel parse_noise_profile(const std::string&);
};

struct GateSet {
    std::vector<GateKind> one_qubit;
    std::vector<GateKind> two_qubit;

    static GateSet native(); // {Id, Rz, SqrtX, X} + {Cx}
};

struct ErrorRateReport {
    double eta = 1.0;
    double delta = 1.0;
    double err_total = 0.0; // 1 - eta * delta
    std::map<std::string, double> per_gate;
};

// Average gate accuracy eta (Eq.-style mean over every applicable gate slot:
// each single-qubit gate on each qubit, each two-qubit gate on each directed
// pair of a topology edge).
ErrorRateReport gate_accuracy(const NoiseModel& model, const Topology& topo,
                              const GateSet& gates);

// delta = prod_i (P(M=0|0)_i + P(M=1|1)_i) / 2
double measurement_accuracy(const NoiseModel& model, int n_qubits);

ErrorRateReport error_rate(const NoiseModel& model, const Topology& topo,
                           const GateSet& gates, int n_qubits);

// Density-matrix execution of a native, topology-valid template: each gate
// applies its ideal unitary followed by the gate's noise channel.
DensityMatrix noisy_execute(const CircuitTemplate& t, const std::vector<double>& params,
                            const NoiseModel& model, const Topology& topo);

// Samples bitstrings from diag(rho), then flips each bit per the readout
// confusion matrix. Keys use qubit 0 as the leftmost character.
std::map<std::string, long> measure_counts(const DensityMatrix& rho, const NoiseModel& model,
                                           long n_shots, Rng& rng);

// "noise t1=<s> t2=<s> err1=<p> err2=<p>" plus optional "duration <gate> <s>"
NoiseModel parse_noise_profile(const std::string& text);
NoiseModel load_noise_profile_file(const std::string& path);

} // namespace vqx
