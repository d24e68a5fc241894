#include "vqx/expressibility.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace vqx {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
// z_{0.995}; relative error of the t quantile is below 1e-5 past 1000 dof
constexpr double kNormal995 = 2.575829303548901;

// regularized incomplete beta I_x(a, b) via Lentz continued fraction
double betacf(double a, double b, double x) {
    const int max_iter = 300;
    const double eps = 3e-16, fpmin = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0, d = 1.0 - qab * x / qap;
    if (std::abs(d) < fpmin) d = fpmin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = 1.0 + aa / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < eps) break;
    }
    return h;
}

double reg_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log(1.0 - x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

// P(T <= t) for Student t with nu dof, t >= 0
double student_t_cdf(double t, double nu) {
    const double x = nu / (nu + t * t);
    return 1.0 - 0.5 * reg_incomplete_beta(nu / 2.0, 0.5, x);
}

} // namespace

double student_t_critical(double confidence, long dof) {
    if (dof < 1) throw std::invalid_argument("t critical value needs dof >= 1");
    if (confidence <= 0.0 || confidence >= 1.0)
        throw std::invalid_argument("confidence must be in (0, 1)");
    if (dof > 1000 && confidence == 0.99) return kNormal995;
    const double target = 0.5 * (1.0 + confidence);
    double lo = 0.0, hi = 1e4;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (student_t_cdf(mid, static_cast<double>(dof)) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double haar_frame_potential(const Hamiltonian& h) {
    const double d = static_cast<double>(dim_for_qubits(h.n_qubits));
    const double d2 = d * d;
    const double tr = h.trace_real();
    const double tr2 = h.trace_h2();
    return (tr * tr * tr * tr + tr2 * tr2) / (d2 - 1.0) -
           2.0 * tr2 * tr * tr / (d * (d2 - 1.0));
}

double frame_trace(const Matrix& h, const Matrix& u1, const Matrix& u2) {
    const long d = h.rows();
    Vector v(d), w(d);
    cxd acc = 0.0;
    for (long b = 0; b < d; ++b) {
        // e_b^dag H U1^dag U2 H U2^dag U1 e_b, right to left
        v.noalias() = u2.adjoint() * u1.col(b);
        w.noalias() = h * v;
        v.noalias() = u2 * w;
        w.noalias() = u1.adjoint() * v;
        acc += (h.row(b) * w)(0, 0);
    }
    return acc.real();
}

namespace {

struct ChunkStats {
    long count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    void merge(const ChunkStats& other) {
        if (other.count == 0) return;
        if (count == 0) {
            *this = other;
            return;
        }
        const double delta = other.mean - mean;
        const double total = static_cast<double>(count + other.count);
        m2 += other.m2 + delta * delta * static_cast<double>(count) *
                             static_cast<double>(other.count) / total;
        mean += delta * static_cast<double>(other.count) / total;
        count += other.count;
    }
};

constexpr long kChunkSize = 4096;

// Runs `sample(i)` for i in [0, k) in fixed chunks; the chunk boundaries and
// merge order do not depend on the thread count, so the reduction is
// reproducible for any --threads value.
ChunkStats chunked_reduce(long k, int threads, const std::function<double(long)>& sample) {
    const long n_chunks = (k + kChunkSize - 1) / kChunkSize;
    std::vector<ChunkStats> chunk_stats(n_chunks);
    auto run_chunk = [&](long c) {
        ChunkStats st;
        const long begin = c * kChunkSize;
        const long end = std::min(k, begin + kChunkSize);
        for (long i = begin; i < end; ++i) st.add(sample(i));
        chunk_stats[c] = st;
    };
    if (threads <= 1 || n_chunks == 1) {
        for (long c = 0; c < n_chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        std::atomic<long> next{0};
        const int n_workers = static_cast<int>(std::min<long>(threads, n_chunks));
        for (int w = 0; w < n_workers; ++w)
            pool.emplace_back([&] {
                for (long c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
                    run_chunk(c);
            });
        for (auto& th : pool) th.join();
    }
    ChunkStats total;
    for (const auto& st : chunk_stats) total.merge(st);
    return total;
}

FramePotentialEstimate finalize_estimate(const ChunkStats& stats, long k, DeviationMode mode) {
    FramePotentialEstimate est;
    est.k = k;
    est.f_tilde = stats.mean;
    const double pop_var = stats.m2 / static_cast<double>(k);
    double sigma = std::sqrt(std::max(0.0, pop_var));
    if (mode == DeviationMode::StandardError) sigma /= std::sqrt(static_cast<double>(k));
    est.sigma_tilde = sigma;
    est.t_star = student_t_critical(0.99, k - 1);
    est.err = est.t_star * est.sigma_tilde;
    return est;
}

} // namespace

FramePotentialEstimate estimate_frame_potential(const CircuitTemplate& t, const Hamiltonian& h,
                                                long k, Rng& rng, DeviationMode mode,
                                                int threads) {
    if (k < 2) throw std::invalid_argument("estimate_frame_potential needs k >= 2");
    if (t.n_qubits != h.n_qubits)
        throw std::invalid_argument("template and Hamiltonian act on different registers");
    const long d = dim_for_qubits(t.n_qubits);
    const uint64_t base_seed = rng.next_u64();

    auto bind_unitary = [&](long draw_index, Matrix& u) {
        Rng draw_rng(Rng::derive_seed(base_seed, static_cast<uint64_t>(draw_index)));
        std::vector<double> params(t.param_count);
        for (auto& p : params) p = draw_rng.uniform(0.0, kTwoPi);
        u.setIdentity(d, d);
        Vector col(d);
        for (long b = 0; b < d; ++b) {
            col = u.col(b);
            apply_circuit_inplace(t, params, col);
            u.col(b) = col;
        }
    };

    const ChunkStats stats = chunked_reduce(k, threads, [&](long i) {
        Matrix u1(d, d), u2(d, d);
        bind_unitary(i, u1);
        bind_unitary(k + i, u2);
        const double tr = frame_trace(h.matrix, u1, u2);
        return tr * tr;
    });
    return finalize_estimate(stats, k, mode);
}

FramePotentialEstimate estimate_haar_frame_potential(const Hamiltonian& h, long k, Rng& rng,
                                                     DeviationMode mode, int threads) {
    if (k < 2) throw std::invalid_argument("estimate needs k >= 2");
    const uint64_t base_seed = rng.next_u64();
    const ChunkStats stats = chunked_reduce(k, threads, [&](long i) {
        Rng r1(Rng::derive_seed(base_seed, static_cast<uint64_t>(i)));
        Rng r2(Rng::derive_seed(base_seed, static_cast<uint64_t>(k + i)));
        const UnitaryMatrix v = haar_unitary(h.n_qubits, r1);
        const UnitaryMatrix w = haar_unitary(h.n_qubits, r2);
        const double tr = frame_trace(h.matrix, v.matrix, w.matrix);
        return tr * tr;
    });
    return finalize_estimate(stats, k, mode);
}

RawMetric hamiltonian_expressibility(const FramePotentialEstimate& est, double f_haar) {
    RawMetric m;
    const double diff = est.f_tilde - f_haar;
    m.defined = diff >= 0.0;
    m.value = m.defined ? std::sqrt(diff) : 0.0;
    m.ci.lo = std::sqrt(std::max(est.f_tilde - est.err, f_haar) - f_haar);
    m.ci.hi = std::sqrt(std::max(est.f_tilde + est.err, f_haar) - f_haar);
    return m;
}

RawMetric expressibility_ratio(const FramePotentialEstimate& est, double f_haar) {
    RawMetric m;
    m.value = est.f_tilde / f_haar;
    m.defined = true;
    m.ci.lo = std::max(est.f_tilde - est.err, f_haar) / f_haar;
    m.ci.hi = std::max(est.f_tilde + est.err, f_haar) / f_haar;
    return m;
}

HaarThresholds haar_thresholds(const Hamiltonian& h, long k, Rng& rng, DeviationMode mode,
                               int threads) {
    const FramePotentialEstimate est = estimate_haar_frame_potential(h, k, rng, mode, threads);
    const double f_haar = haar_frame_potential(h);
    const double dev = std::abs(est.f_tilde - f_haar);
    return HaarThresholds{std::sqrt(dev), 1.0 + dev / f_haar};
}

ExpressibilityResult adjusted_metrics(const FramePotentialEstimate& est, double f_haar,
                                      const HaarThresholds& thresholds) {
    ExpressibilityResult r;
    r.threshold_epsilon = thresholds.epsilon;
    r.threshold_gamma = thresholds.gamma;
    const double diff = est.f_tilde - f_haar;
    if (diff >= 0.0) {
        r.epsilon = std::sqrt(diff);
        r.gamma = est.f_tilde / f_haar;
    } else {
        r.epsilon = std::min(std::sqrt(-diff), thresholds.epsilon);
        r.gamma = std::min(1.0 - diff / f_haar, thresholds.gamma);
    }
    const RawMetric eps = hamiltonian_expressibility(est, f_haar);
    const RawMetric gam = expressibility_ratio(est, f_haar);
    r.epsilon_ci = eps.ci;
    r.gamma_ci = {std::max(gam.ci.lo, 1.0), std::max(gam.ci.hi, 1.0)};
    r.maximally_expressive = r.epsilon <= thresholds.epsilon;
    return r;
}

} // namespace vqx
