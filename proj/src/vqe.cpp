#include "vqx/vqe.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace vqx {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
} // namespace

PauliDecomposition pauli_decompose(const Hamiltonian& h) {
    const int n = h.n_qubits;
    const long d = dim_for_qubits(n);
    long total = 1;
    for (int q = 0; q < n; ++q) total *= 4;
    PauliDecomposition dec;
    static const char kOps[4] = {'I', 'X', 'Y', 'Z'};
    for (long code = 0; code < total; ++code) {
        std::string ops(n, 'I');
        long c = code;
        for (int q = n - 1; q >= 0; --q) {
            ops[q] = kOps[c % 4];
            c /= 4;
        }
        const cxd tr = pauli_trace_product(PauliString{ops, 1.0}, h.matrix);
        const double coeff = tr.real() / static_cast<double>(d);
        if (std::abs(tr.imag()) > 1e-9 * std::max(1.0, std::abs(tr.real())))
            throw std::runtime_error("non-Hermitian input to pauli_decompose");
        if (std::abs(coeff) < 1e-12) continue;
        if (code == 0)
            dec.identity_coefficient = coeff;
        else
            dec.terms.push_back(PauliString{ops, coeff});
    }
    return dec;
}

Matrix reconstruct(const PauliDecomposition& dec, int n_qubits) {
    const long d = dim_for_qubits(n_qubits);
    Matrix m = dec.identity_coefficient * Matrix::Identity(d, d);
    for (const auto& p : dec.terms) m += pauli_matrix(p);
    return m;
}

Executor Executor::ideal(const Topology& topo) {
    Executor e;
    e.mode = Mode::Ideal;
    e.topology = &topo;
    return e;
}

Executor Executor::noisy(const NoiseModel& model, const Topology& topo) {
    Executor e;
    e.mode = Mode::Noisy;
    e.noise = &model;
    e.topology = &topo;
    return e;
}

namespace {

// native basis-change gadget rotating the measurement of op into Z:
// X: H-equivalent {Rz(pi/2), SX, Rz(pi/2)}; Y: {SX} (SX Y SX^dag = Z)
void append_basis_change(std::vector<GateOp>& out, int qubit, char op) {
    switch (op) {
        case 'I':
        case 'Z':
            return;
        case 'X':
            out.push_back(GateOp::fixed(GateKind::Rz, qubit, kPi / 2));
            out.push_back(GateOp::simple(GateKind::SqrtX, qubit));
            out.push_back(GateOp::fixed(GateKind::Rz, qubit, kPi / 2));
            return;
        case 'Y':
            out.push_back(GateOp::simple(GateKind::SqrtX, qubit));
            return;
        default:
            throw std::invalid_argument("invalid Pauli op");
    }
}

double parity_eigenvalue(long basis_index, int n, const std::vector<int>& support) {
    int ones = 0;
    for (int q : support) ones += (basis_index >> qubit_bit(n, q)) & 1;
    return ones % 2 ? -1.0 : 1.0;
}

void apply_gate_noisy(DensityMatrix& rho, const GateOp& g, const NoiseModel& model) {
    const double angle = g.angle ? *g.angle : 0.0;
    const GateChannel& ch = model.gate_channel(g.kind);
    if (is_two_qubit_gate(g.kind)) {
        apply_2q_gate(rho.matrix, rho.n_qubits, g.qubit_a, g.qubit_b,
                      two_qubit_gate_matrix(g.kind, angle));
        if (!ch.trivial) {
            ch.relax.apply(rho, g.qubit_a);
            ch.relax.apply(rho, g.qubit_b);
            ch.depol.apply(rho, g.qubit_a, g.qubit_b);
        }
    } else {
        apply_1q_gate(rho.matrix, rho.n_qubits, g.qubit_a,
                      single_qubit_gate_matrix(g.kind, angle));
        if (!ch.trivial) {
            ch.relax.apply(rho, g.qubit_a);
            ch.depol.apply(rho, g.qubit_a);
        }
    }
}

long sample_index(const std::vector<double>& cdf, double total, Rng& rng) {
    const double u = rng.uniform() * total;
    long idx = std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    if (idx >= static_cast<long>(cdf.size())) idx = static_cast<long>(cdf.size()) - 1;
    return idx;
}

} // namespace

MeasurementPlan prepare_measurement_plan(const CircuitTemplate& t, const Hamiltonian& h) {
    if (t.n_qubits != h.n_qubits)
        throw std::invalid_argument("template and Hamiltonian act on different registers");
    MeasurementPlan plan;
    plan.native = decompose_to_native(t);
    const PauliDecomposition dec = pauli_decompose(h);
    plan.identity_coefficient = dec.identity_coefficient;
    for (const auto& p : dec.terms) {
        MeasurementTerm term;
        term.pauli = p;
        term.coefficient = p.coefficient;
        for (int q = 0; q < p.n_qubits(); ++q) {
            if (p.ops[q] == 'I') continue;
            term.support.push_back(q);
            append_basis_change(term.basis_change, q, p.ops[q]);
        }
        plan.terms.push_back(std::move(term));
    }
    return plan;
}

double sampled_energy(const MeasurementPlan& plan, const std::vector<double>& params,
                      const Executor& exec, long n_shots, Rng& rng, ShotBudget budget) {
    if (n_shots < 1) throw std::invalid_argument("n_shots must be >= 1");
    const int n = plan.native.n_qubits;
    const long d = dim_for_qubits(n);
    long shots_per_term = n_shots;
    if (budget == ShotBudget::SplitEvenly && !plan.terms.empty())
        shots_per_term = std::max<long>(1, n_shots / static_cast<long>(plan.terms.size()));

    double energy = plan.identity_coefficient;

    if (exec.mode == Executor::Mode::Ideal) {
        Statevector base = Statevector::zero_state(n);
        apply_circuit_inplace(plan.native, params, base.amplitudes);
        Vector work(d);
        std::vector<double> cdf(d);
        for (const auto& term : plan.terms) {
            work = base.amplitudes;
            for (const auto& g : term.basis_change)
                apply_1q_gate(work, n, g.qubit_a,
                              single_qubit_gate_matrix(g.kind, g.angle ? *g.angle : 0.0));
            double total = 0.0;
            for (long i = 0; i < d; ++i) {
                total += std::norm(work[i]);
                cdf[i] = total;
            }
            double acc = 0.0;
            for (long s = 0; s < shots_per_term; ++s)
                acc += parity_eigenvalue(sample_index(cdf, total, rng), n, term.support);
            energy += term.coefficient * acc / static_cast<double>(shots_per_term);
        }
        return energy;
    }

    // noisy path: one template execution shared across terms
    const DensityMatrix base = noisy_execute(plan.native, params, *exec.noise, *exec.topology);
    for (const auto& term : plan.terms) {
        DensityMatrix rho = base;
        for (const auto& g : term.basis_change) apply_gate_noisy(rho, g, *exec.noise);
        const auto counts = measure_counts(rho, *exec.noise, shots_per_term, rng);
        double acc = 0.0;
        for (const auto& [bits, count] : counts) {
            int ones = 0;
            for (int q : term.support) ones += bits[q] == '1';
            acc += (ones % 2 ? -1.0 : 1.0) * static_cast<double>(count);
        }
        energy += term.coefficient * acc / static_cast<double>(shots_per_term);
    }
    return energy;
}

double sample_expectation(const CircuitTemplate& t, const std::vector<double>& params,
                          const Hamiltonian& h, const Executor& exec, long n_shots, Rng& rng) {
    const MeasurementPlan plan = prepare_measurement_plan(t, h);
    return sampled_energy(plan, params, exec, n_shots, rng);
}

// --- Optimizers ------------------------------------------------------------------

OptimizeResult cobyla_minimize(const Objective& f, const std::vector<double>& x0,
                               double rhobeg, double rhoend, long max_evals) {
    if (rhoend >= rhobeg) throw std::invalid_argument("rhoend must be < rhobeg");
    const int n = static_cast<int>(x0.size());
    if (n < 1) throw std::invalid_argument("empty parameter vector");

    OptimizeResult result;
    std::vector<double> best_x = x0;
    double best_f = std::numeric_limits<double>::infinity();

    auto eval = [&](const std::vector<double>& x) {
        const double v = f(x);
        result.trace.push_back(v);
        ++result.eval_count;
        if (v < best_f) {
            best_f = v;
            best_x = x;
        }
        return v;
    };

    using Point = std::pair<std::vector<double>, double>;
    std::vector<Point> simplex;

    auto rebuild_simplex = [&](const std::vector<double>& center, double radius) {
        simplex.clear();
        simplex.push_back({center, eval(center)});
        for (int i = 0; i < n && result.eval_count < max_evals; ++i) {
            std::vector<double> x = center;
            x[i] += radius;
            simplex.push_back({x, eval(x)});
        }
    };

    auto dist_to = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double d = 0.0;
        for (int j = 0; j < n; ++j) d += (a[j] - b[j]) * (a[j] - b[j]);
        return std::sqrt(d);
    };

    double rho = rhobeg;
    rebuild_simplex(x0, rho);
    Eigen::MatrixXd s(n, n);
    Eigen::VectorXd df(n), g(n);
    int failures = 0;

    while (result.eval_count < max_evals && rho >= rhoend) {
        if (static_cast<int>(simplex.size()) < n + 1) break; // budget ran out mid-build
        std::sort(simplex.begin(), simplex.end(),
                  [](const Point& a, const Point& b) { return a.second < b.second; });
        const std::vector<double> x_best = simplex.front().first;
        const double f_best = simplex.front().second;

        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) s(i, j) = simplex[i + 1].first[j] - x_best[j];
            df[i] = simplex[i + 1].second - f_best;
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(s);
        lu.setThreshold(1e-12);
        const bool degenerate = lu.rank() < n;
        double gnorm = 0.0;
        if (!degenerate) {
            g = lu.solve(df);
            gnorm = g.norm();
        }

        // vertices stranded far outside the trust region, or a rank-deficient
        // interpolation set: refresh the geometry around the best vertex
        double max_dist = 0.0;
        for (int i = 1; i <= n; ++i)
            max_dist = std::max(max_dist, dist_to(simplex[i].first, x_best));
        if (degenerate || max_dist > 8.0 * rho) {
            rebuild_simplex(x_best, rho);
            continue;
        }
        if (gnorm < 1e-300) {
            rho *= 0.5;
            continue;
        }

        // trust-region step on the linear model
        std::vector<double> x_new(n);
        for (int j = 0; j < n; ++j) x_new[j] = x_best[j] - rho * g[j] / gnorm;
        const double f_new = eval(x_new);
        const double predicted = rho * gnorm;
        const double ratio = (f_best - f_new) / predicted;

        // replace the farthest vertex the new point beats, keeping the
        // simplex anchored near the current minimizer
        long replace = -1;
        double far = -1.0;
        for (int i = 0; i <= n; ++i) {
            if (simplex[i].second <= f_new) continue;
            const double d = dist_to(simplex[i].first, x_new);
            if (d > far) {
                far = d;
                replace = i;
            }
        }
        if (replace >= 0) simplex[replace] = {x_new, f_new};

        if (ratio >= 0.7) {
            rho = std::min(rho * 1.6, 1e3 * rhobeg);
            failures = 0;
        } else if (ratio < 0.1) {
            // two poor steps in a row before shrinking; a single one is
            // indistinguishable from objective noise
            if (++failures >= 2) {
                failures = 0;
                rho *= 0.5;
            }
        } else {
            failures = 0;
        }
    }

    result.x = best_x;
    result.f = best_f;
    result.converged = rho < rhoend;
    return result;
}

OptimizeResult nelder_mead_minimize(const Objective& f, const std::vector<double>& x0,
                                    double initial_step, double tol, long max_evals) {
    const int n = static_cast<int>(x0.size());
    OptimizeResult result;
    std::vector<double> best_x = x0;
    double best_f = std::numeric_limits<double>::infinity();
    auto eval = [&](const std::vector<double>& x) {
        const double v = f(x);
        result.trace.push_back(v);
        ++result.eval_count;
        if (v < best_f) {
            best_f = v;
            best_x = x;
        }
        return v;
    };

    using Point = std::pair<std::vector<double>, double>;
    std::vector<Point> sx;
    sx.push_back({x0, eval(x0)});
    for (int i = 0; i < n && result.eval_count < max_evals; ++i) {
        std::vector<double> x = x0;
        x[i] += initial_step;
        sx.push_back({x, eval(x)});
    }

    const double alpha = 1.0, gamma = 2.0, beta = 0.5, delta = 0.5;
    while (result.eval_count < max_evals && static_cast<int>(sx.size()) == n + 1) {
        std::sort(sx.begin(), sx.end(),
                  [](const Point& a, const Point& b) { return a.second < b.second; });
        if (std::abs(sx.back().second - sx.front().second) <
            tol * (std::abs(sx.front().second) + tol)) {
            result.converged = true;
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) centroid[j] += sx[i].first[j] / n;

        auto blend = [&](double coef) {
            std::vector<double> x(n);
            for (int j = 0; j < n; ++j)
                x[j] = centroid[j] + coef * (centroid[j] - sx.back().first[j]);
            return x;
        };

        const auto xr = blend(alpha);
        const double fr = eval(xr);
        if (fr < sx.front().second) {
            const auto xe = blend(gamma);
            const double fe = eval(xe);
            sx.back() = fe < fr ? Point{xe, fe} : Point{xr, fr};
        } else if (fr < sx[n - 1].second) {
            sx.back() = {xr, fr};
        } else {
            const auto xc = blend(-beta);
            const double fc = eval(xc);
            if (fc < sx.back().second) {
                sx.back() = {xc, fc};
            } else {
                for (int i = 1; i <= n; ++i) {
                    for (int j = 0; j < n; ++j)
                        sx[i].first[j] =
                            sx[0].first[j] + delta * (sx[i].first[j] - sx[0].first[j]);
                    sx[i].second = eval(sx[i].first);
                    if (result.eval_count >= max_evals) break;
                }
            }
        }
    }

    result.x = best_x;
    result.f = best_f;
    return result;
}

// --- VQE driver --------------------------------------------------------------------

double approximation_ratio(double energy, const SpectrumBounds& bounds) {
    if (bounds.lambda_min >= bounds.lambda_max)
        throw std::invalid_argument("degenerate spectrum: lambda_min >= lambda_max");
    const double r = (energy - bounds.lambda_max) / (bounds.lambda_min - bounds.lambda_max);
    if (r >= 0.0 && r <= 1.0) return r;
    if (r > 1.0 && r - 1.0 < 0.02) return 1.0;
    if (r < 0.0 && -r < 0.02) return 0.0;
    throw std::runtime_error("approximation ratio excursion beyond the clamp band: " +
                             std::to_string(r));
}

ExperimentResult run_experiment(const CircuitTemplate& t, Hamiltonian& h,
                                const Executor& exec, const VqeConfig& cfg,
                                uint64_t master_seed) {
    if (cfg.n_shots < 1 || cfg.n_runs < 1) throw std::invalid_argument("bad VQE config");
    if (cfg.rhoend >= cfg.rhobeg) throw std::invalid_argument("rhoend must be < rhobeg");
    const SpectrumBounds bounds = h.ensure_bounds();

    MeasurementPlan plan = prepare_measurement_plan(t, h);
    if (exec.topology) {
        const auto violations = validate_topology(plan.native, *exec.topology);
        if (!violations.empty())
            throw std::invalid_argument("template violates topology after decomposition (" +
                                        std::to_string(violations.size()) + " gates)");
    }

    ExperimentResult result;
    for (int run = 0; run < cfg.n_runs; ++run) {
        const uint64_t run_seed = Rng::derive_seed(master_seed, static_cast<uint64_t>(run));
        Rng run_rng(run_seed);

        std::vector<double> x0(t.param_count, 0.0);
        if (cfg.initial == VqeConfig::InitialParams::UniformRandom)
            for (auto& v : x0) v = run_rng.uniform(0.0, kTwoPi);

        long eval_index = 0;
        Objective objective = [&](const std::vector<double>& params) {
            Rng eval_rng(Rng::derive_seed(run_seed, 0x56514531ULL + eval_index++));
            return sampled_energy(plan, params, exec, cfg.n_shots, eval_rng, cfg.shot_budget);
        };

        if (t.param_count == 0) {
            // nothing to optimize: a fixed preparation is sampled once
            VqeRun vr;
            vr.best_energy = objective({});
            vr.eval_count = 1;
            vr.energy_trace = {vr.best_energy};
            vr.ar = approximation_ratio(vr.best_energy, bounds);
            vr.seed = run_seed;
            result.per_run.push_back(std::move(vr));
            continue;
        }

        // restart from the best observed point while budget remains: the
        // trust radius collapses early on shot-noisy landscapes
        VqeRun vr;
        double best_seen = std::numeric_limits<double>::infinity();
        std::vector<double> start = x0;
        double rho_start = cfg.rhobeg;
        while (vr.eval_count < cfg.max_evals) {
            OptimizeResult opt;
            const long budget = cfg.max_evals - vr.eval_count;
            if (cfg.optimizer == VqeConfig::Optimizer::Cobyla)
                opt = cobyla_minimize(objective, start, rho_start, cfg.rhoend, budget);
            else
                opt = nelder_mead_minimize(objective, start, rho_start, 1e-10, budget);
            vr.eval_count += opt.eval_count;
            vr.energy_trace.insert(vr.energy_trace.end(), opt.trace.begin(), opt.trace.end());
            if (opt.f < best_seen) {
                best_seen = opt.f;
                vr.best_params = opt.x;
            }
            start = vr.best_params;
            rho_start = std::max(0.3 * cfg.rhobeg, 100.0 * cfg.rhoend);
            if (opt.eval_count == 0) break;
        }
        // the reported energy is a fresh sample at the best parameters, so it
        // carries no best-of selection bias
        Rng final_rng(Rng::derive_seed(run_seed, 0xF1A1));
        vr.best_energy =
            sampled_energy(plan, vr.best_params, exec, cfg.n_shots, final_rng, cfg.shot_budget);
        vr.energy_trace.push_back(vr.best_energy);
        ++vr.eval_count;
        vr.ar = approximation_ratio(vr.best_energy, bounds);
        vr.seed = run_seed;
        result.per_run.push_back(std::move(vr));
    }

    double mean = 0.0;
    for (const auto& r : result.per_run) mean += r.ar;
    mean /= static_cast<double>(result.per_run.size());
    double var = 0.0;
    for (const auto& r : result.per_run) var += (r.ar - mean) * (r.ar - mean);
    var /= static_cast<double>(result.per_run.size());
    result.ar_mean = mean;
    result.ar_std = std::sqrt(var);
    return result;
}

} // namespace vqx
