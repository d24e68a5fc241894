#pragma once

#include <utility>

#include "vqx/circuits.hpp"
#include "vqx/hamiltonians.hpp"

namespace vqx {

// How the reported deviation of the Monte Carlo frame potential is formed.
// AsPublished keeps the population standard deviation of the trace samples;
// StandardError divides by sqrt(k) to give the deviation of the mean.
enum class DeviationMode { AsPublished, StandardError };

struct FramePotentialEstimate {
    double f_tilde = 0.0;     // Monte Carlo mean of the squared traces
    double sigma_tilde = 0.0; // deviation per the chosen mode
    double err = 0.0;         // t*(0.995) * sigma_tilde
    long k = 0;               // number of sample pairs
    double t_star = 0.0;      // critical value used for err
};

struct ConfidenceInterval {
    double lo = 0.0;
    double hi = 0.0;
};

// raw (unclipped) metric; defined == false when f_tilde < f_haar
struct RawMetric {
    double value = 0.0;
    ConfidenceInterval ci;
    bool defined = true;
};

struct HaarThresholds {
    double epsilon = 0.0; // epsilon_haar > 0
    double gamma = 1.0;   // gamma_haar > 1
};

struct ExpressibilityResult {
    double epsilon = 0.0;
    ConfidenceInterval epsilon_ci;
    double gamma = 1.0;
    ConfidenceInterval gamma_ci;
    double threshold_epsilon = 0.0;
    double threshold_gamma = 1.0;
    bool maximally_expressive = false;
};

// two-sided Student-t critical value at confidence level `confidence`
// (e.g. 0.99 gives t*(0.995)); uses the normal quantile above 1000 dof
double student_t_critical(double confidence, long dof);

// closed-form Haar-Hamiltonian frame potential:
// (Tr[H]^4 + Tr[H^2]^2) / (2^{2n} - 1) - 2 Tr[H^2] Tr[H]^2 / (2^n (2^{2n} - 1))
double haar_frame_potential(const Hamiltonian& h);

// Tr[H U1^dag U2 H U2^dag U1], evaluated through d matrix-vector passes
// without materializing any d x d product; the imaginary residue of the
// trace is discarded (it is zero analytically).
double frame_trace(const Matrix& h, const Matrix& u1, const Matrix& u2);

// Monte Carlo frame potential of a circuit ensemble: 2k parameter vectors
// uniform on [0, 2pi)^p, k pairs, Trace_i = frame_trace(...)^2. Sample i
// derives its own child seed from rng, so results do not depend on how the
// work is split across threads.
FramePotentialEstimate estimate_frame_potential(const CircuitTemplate& t,
                                                const Hamiltonian& h, long k, Rng& rng,
                                                DeviationMode mode = DeviationMode::AsPublished,
                                                int threads = 1);

// Same estimator fed with Haar-sampled unitaries instead of circuit unitaries.
FramePotentialEstimate estimate_haar_frame_potential(const Hamiltonian& h, long k, Rng& rng,
                                                     DeviationMode mode = DeviationMode::AsPublished,
                                                     int threads = 1);

// sqrt(F~ - F_Haar) with the max-clipped confidence interval; flagged
// undefined when F~ < F_Haar (handled by adjusted_metrics)
RawMetric hamiltonian_expressibility(const FramePotentialEstimate& est, double f_haar);

// F~ / F_Haar with the max-clipped confidence interval
RawMetric expressibility_ratio(const FramePotentialEstimate& est, double f_haar);

// empirical maximal-expressibility thresholds from Haar sampling:
// eps = sqrt(|F~_Haar - F_Haar|), gamma = 1 + |F~_Haar - F_Haar| / F_Haar
HaarThresholds haar_thresholds(const Hamiltonian& h, long k, Rng& rng,
                               DeviationMode mode = DeviationMode::AsPublished,
                               int threads = 1);

// clipped estimators: below F_Haar the metrics fall back to
// min{sqrt|F~ - F_Haar|, eps_haar} and min{1 + |F~ - F_Haar|/F_Haar, gamma_haar};
// maximally_expressive <=> epsilon <= threshold_epsilon
ExpressibilityResult adjusted_metrics(const FramePotentialEstimate& est, double f_haar,
                                      const HaarThresholds& thresholds);

} // namespace vqx
