#include "vqx/noise.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace vqx {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

long kraus_dim(int m_qubits) { return m_qubits == 1 ? 2 : 4; }

bool trivially_identity_ops(const std::vector<Matrix>& ops) {
    if (ops.size() != 1) return false;
    const long d = ops.front().rows();
    return (ops.front() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() == 0.0;
}
} // namespace

double KrausSet::completeness_error() const {
    if (operators.empty()) return 1.0;
    const long d = operators.front().rows();
    Matrix acc = Matrix::Zero(d, d);
    for (const auto& k : operators) acc += k.adjoint() * k;
    return (acc - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

void KrausSet::apply(DensityMatrix& rho, int qubit) const {
    if (n_qubits != 1) throw std::invalid_argument("expected a single-qubit channel");
    Matrix out = Matrix::Zero(rho.matrix.rows(), rho.matrix.cols());
    Matrix tmp;
    for (const auto& k : operators) {
        tmp = rho.matrix;
        apply_1q_gate(tmp, rho.n_qubits, qubit, Eigen::Matrix2cd(k));
        out += tmp;
    }
    rho.matrix = std::move(out);
}

void KrausSet::apply(DensityMatrix& rho, int qubit_a, int qubit_b) const {
    if (n_qubits != 2) throw std::invalid_argument("expected a two-qubit channel");
    Matrix out = Matrix::Zero(rho.matrix.rows(), rho.matrix.cols());
    Matrix tmp;
    for (const auto& k : operators) {
        tmp = rho.matrix;
        apply_2q_gate(tmp, rho.n_qubits, qubit_a, qubit_b, Eigen::Matrix4cd(k));
        out += tmp;
    }
    rho.matrix = std::move(out);
}

KrausSet thermal_relaxation_kraus(double t1, double t2, double duration) {
    if (duration < 0.0) throw std::invalid_argument("duration must be >= 0");
    if (t2 > 2.0 * t1) throw std::invalid_argument("thermal relaxation requires t2 <= 2*t1");
    const double p_down = t1 == kInf ? 0.0 : 1.0 - std::exp(-duration / t1);
    // off-diagonal factor e^{-t/T2} = sqrt(1-p) * (1 - 2q)
    double lambda_phi = 1.0;
    if (t2 != kInf || t1 != kInf) {
        const double exponent = (t2 == kInf ? 0.0 : duration / t2) -
                                (t1 == kInf ? 0.0 : 0.5 * duration / t1);
        lambda_phi = std::exp(-exponent);
    }
    const double q = 0.5 * (1.0 - lambda_phi);

    Eigen::Matrix2cd k0, k1, z;
    k0 << 1, 0, 0, std::sqrt(1.0 - p_down);
    k1 << 0, std::sqrt(p_down), 0, 0;
    z << 1, 0, 0, -1;

    KrausSet set;
    set.n_qubits = 1;
    auto push = [&](double w, const Eigen::Matrix2cd& k) {
        if (w <= 0.0) return;
        Matrix op = std::sqrt(w) * k;
        if (op.cwiseAbs().maxCoeff() > 0.0) set.operators.push_back(std::move(op));
    };
    push(1.0 - q, k0);
    push(1.0 - q, k1);
    push(q, z * k0);
    push(q, z * k1);
    return set;
}

KrausSet depolarizing_kraus(double p, int m_qubits) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p must be in [0, 1]");
    if (m_qubits != 1 && m_qubits != 2) throw std::invalid_argument("m_qubits must be 1 or 2");
    const long d = kraus_dim(m_qubits);
    const double d2 = static_cast<double>(d * d);
    KrausSet set;
    set.n_qubits = m_qubits;
    const double w_id = 1.0 - p * (d2 - 1.0) / d2;
    set.operators.push_back(std::sqrt(w_id) * Matrix::Identity(d, d));
    if (p > 0.0) {
        static const char kOps[4] = {'I', 'X', 'Y', 'Z'};
        const double w = p / d2;
        const int n_strings = m_qubits == 1 ? 4 : 16;
        for (int code = 1; code < n_strings; ++code) {
            std::string ops(m_qubits, 'I');
            int c = code;
            for (int q = m_qubits - 1; q >= 0; --q) {
                ops[q] = kOps[c % 4];
                c /= 4;
            }
            set.operators.push_back(std::sqrt(w) * pauli_matrix(PauliString{ops, 1.0}));
        }
    }
    return set;
}

KrausSet compose(const KrausSet& first, const KrausSet& second) {
    if (first.n_qubits != second.n_qubits)
        throw std::invalid_argument("cannot compose channels on different registers");
    KrausSet out;
    out.n_qubits = first.n_qubits;
    for (const auto& b : second.operators)
        for (const auto& a : first.operators) out.operators.push_back(b * a);
    return out;
}

KrausSet tensor(const KrausSet& a, const KrausSet& b) {
    if (a.n_qubits != 1 || b.n_qubits != 1)
        throw std::invalid_argument("tensor expects single-qubit channels");
    KrausSet out;
    out.n_qubits = 2;
    for (const auto& ka : a.operators)
        for (const auto& kb : b.operators) {
            Matrix k(4, 4);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) k.block<2, 2>(2 * r, 2 * c) = ka(r, c) * kb;
            out.operators.push_back(std::move(k));
        }
    return out;
}

double average_gate_fidelity(const UnitaryMatrix& ideal, const KrausSet& channel) {
    const long d = ideal.matrix.rows();
    if (channel.operators.empty() || channel.operators.front().rows() != d)
        throw std::invalid_argument("channel dimension does not match the ideal gate");
    double sum = 0.0;
    for (const auto& k : channel.operators) {
        const cxd tr = (ideal.matrix.adjoint() * k).trace();
        sum += std::norm(tr);
    }
    const double dd = static_cast<double>(d);
    return (sum + dd) / (dd * dd + dd);
}

namespace {

// fidelity of a noise channel against the identity; exact 1.0 for {I}
double channel_fidelity(const KrausSet& channel) {
    const long d = channel.operators.front().rows();
    double sum = 0.0;
    for (const auto& k : channel.operators) sum += std::norm(k.trace());
    const double dd = static_cast<double>(d);
    return (sum + dd) / (dd * dd + dd);
}

KrausSet identity_channel(int m_qubits) {
    KrausSet set;
    set.n_qubits = m_qubits;
    const long d = kraus_dim(m_qubits);
    set.operators.push_back(Matrix::Identity(d, d));
    return set;
}

KrausSet relax_stage(int m_qubits, const KrausSet& relax_1q) {
    return m_qubits == 1 ? relax_1q : tensor(relax_1q, relax_1q);
}

// p such that fidelity(depol_p after relax) = 1 - err; fidelity is linear in
// p. When relaxation alone already reaches or exceeds the budget the result
// clamps to 0 and the achieved infidelity is the relaxation's own.
double calibrate_depolarizing(const KrausSet& relax, int m_qubits, double err) {
    if (err <= 0.0) return 0.0;
    const double target = 1.0 - err;
    const KrausSet stage = relax_stage(m_qubits, relax);
    const double f0 = channel_fidelity(stage);
    if (f0 <= target) return 0.0;
    const double f1 = channel_fidelity(compose(stage, depolarizing_kraus(1.0, m_qubits)));
    if (f1 >= f0) return 0.0; // fully mixed already; nothing to add
    return std::clamp((target - f0) / (f1 - f0), 0.0, 1.0);
}

} // namespace

NoiseModel NoiseModel::ideal() { return from_params(kInf, kInf, 0.0, 0.0); }

NoiseModel NoiseModel::from_params(double t1, double t2, double err1, double err2) {
    NoiseModel m;
    m.t1 = t1;
    m.t2 = t2;
    m.err1 = err1;
    m.err2 = err2;
    if (err1 < 0 || err1 > 1 || err2 < 0 || err2 > 1)
        throw std::invalid_argument("error rates must be probabilities");
    if (t2 > 2.0 * t1) throw std::invalid_argument("noise model requires t2 <= 2*t1");
    m.gate_durations = {
        {GateKind::Id, 50e-9},    {GateKind::Rz, 50e-9}, {GateKind::SqrtX, 50e-9},
        {GateKind::X, 50e-9},     {GateKind::Cx, 300e-9},
    };
    m.measure_duration = 1e-6;
    m.build_channels();
    return m;
}

NoiseModel NoiseModel::paper_profile(double t1, double err1) {
    return from_params(t1, t1, err1, 25.0 * err1);
}

bool NoiseModel::is_ideal() const {
    return err1 == 0.0 && err2 == 0.0 && t1 == kInf && t2 == kInf;
}

Eigen::Matrix2d NoiseModel::confusion_for(int qubit) const {
    if (qubit >= 0 && qubit < static_cast<int>(readout_confusion.size())) {
        const Eigen::Matrix2d& c = readout_confusion[qubit];
        for (int r = 0; r < 2; ++r)
            if (std::abs(c(r, 0) + c(r, 1) - 1.0) > 1e-12 || c(r, 0) < 0.0 || c(r, 1) < 0.0)
                throw std::invalid_argument("readout confusion rows must be stochastic");
        return c;
    }
    Eigen::Matrix2d c;
    c << 1.0 - err1, err1, err1, 1.0 - err1;
    return c;
}

double NoiseModel::duration_for(GateKind kind) const {
    auto it = gate_durations.find(kind);
    if (it == gate_durations.end())
        throw std::invalid_argument("no duration for gate " + gate_kind_name(kind));
    return it->second;
}

void NoiseModel::build_channels() {
    for (GateKind kind : {GateKind::Id, GateKind::Rz, GateKind::SqrtX, GateKind::X, GateKind::Cx}) {
        const int m = is_two_qubit_gate(kind) ? 2 : 1;
        const double err = m == 1 ? err1 : err2;
        GateChannel ch;
        if (is_ideal()) {
            ch.relax = identity_channel(1);
            ch.depol = identity_channel(m);
            ch.composite = identity_channel(m);
            ch.trivial = true;
        } else {
            ch.relax = thermal_relaxation_kraus(t1, t2, duration_for(kind));
            const double p = calibrate_depolarizing(ch.relax, m, err);
            ch.depol = depolarizing_kraus(p, m);
            ch.composite = compose(relax_stage(m, ch.relax), ch.depol);
            ch.trivial = trivially_identity_ops(ch.composite.operators);
        }
        channels_[kind] = std::move(ch);
    }
}

const GateChannel& NoiseModel::gate_channel(GateKind kind) const {
    auto it = channels_.find(kind);
    if (it == channels_.end())
        throw std::invalid_argument("no noise channel for gate " + gate_kind_name(kind));
    return it->second;
}

GateSet GateSet::native() {
    return GateSet{{GateKind::Id, GateKind::Rz, GateKind::SqrtX, GateKind::X}, {GateKind::Cx}};
}

ErrorRateReport gate_accuracy(const NoiseModel& model, const Topology& topo,
                              const GateSet& gates) {
    if (gates.one_qubit.empty() && gates.two_qubit.empty())
        throw std::invalid_argument("empty gate set");
    ErrorRateReport report;
    double sum = 0.0;
    long count = 0;
    for (GateKind g : gates.one_qubit) {
        const double f = channel_fidelity(model.gate_channel(g).composite);
        for (int q = 0; q < topo.n_qubits; ++q) {
            report.per_gate[gate_kind_name(g) + "(" + std::to_string(q) + ")"] = f;
            sum += f;
            ++count;
        }
    }
    // the bundled model is direction-symmetric, but both orientations of every
    // edge count as distinct applicable gates
    for (GateKind g : gates.two_qubit) {
        const double f = channel_fidelity(model.gate_channel(g).composite);
        for (const auto& [i, j] : topo.edges) {
            for (const auto& [c, t] : {std::pair{i, j}, std::pair{j, i}}) {
                report.per_gate[gate_kind_name(g) + "(" + std::to_string(c) + "->" +
                                std::to_string(t) + ")"] = f;
                sum += f;
                ++count;
            }
        }
    }
    report.eta = count ? sum / static_cast<double>(count) : 1.0;
    return report;
}

double measurement_accuracy(const NoiseModel& model, int n_qubits) {
    double delta = 1.0;
    for (int q = 0; q < n_qubits; ++q) {
        const Eigen::Matrix2d c = model.confusion_for(q);
        delta *= 0.5 * (c(0, 0) + c(1, 1));
    }
    return delta;
}

ErrorRateReport error_rate(const NoiseModel& model, const Topology& topo,
                           const GateSet& gates, int n_qubits) {
    ErrorRateReport report = gate_accuracy(model, topo, gates);
    report.delta = measurement_accuracy(model, n_qubits);
    report.err_total = 1.0 - report.eta * report.delta;
    return report;
}

DensityMatrix noisy_execute(const CircuitTemplate& t, const std::vector<double>& params,
                            const NoiseModel& model, const Topology& topo) {
    for (const auto& g : t.gates)
        if (!is_native_gate(g.kind))
            throw std::invalid_argument("noisy execution requires native gates, found " +
                                        gate_kind_name(g.kind));
    const auto violations = validate_topology(t, topo);
    if (!violations.empty())
        throw std::invalid_argument("template violates the topology (" +
                                    std::to_string(violations.size()) + " gates)");
    if (static_cast<int>(params.size()) != t.param_count)
        throw std::invalid_argument("parameter count mismatch");

    DensityMatrix rho = DensityMatrix::zero_state(t.n_qubits);
    for (const auto& g : t.gates) {
        const double angle = gate_angle(g, params);
        const GateChannel& ch = model.gate_channel(g.kind);
        if (is_two_qubit_gate(g.kind)) {
            apply_2q_gate(rho.matrix, t.n_qubits, g.qubit_a, g.qubit_b,
                          two_qubit_gate_matrix(g.kind, angle));
            if (!ch.trivial) {
                ch.relax.apply(rho, g.qubit_a);
                ch.relax.apply(rho, g.qubit_b);
                ch.depol.apply(rho, g.qubit_a, g.qubit_b);
            }
        } else {
            apply_1q_gate(rho.matrix, t.n_qubits, g.qubit_a,
                          single_qubit_gate_matrix(g.kind, angle));
            if (!ch.trivial) {
                ch.relax.apply(rho, g.qubit_a);
                ch.depol.apply(rho, g.qubit_a);
            }
        }
    }
    return rho;
}

std::map<std::string, long> measure_counts(const DensityMatrix& rho, const NoiseModel& model,
                                           long n_shots, Rng& rng) {
    if (n_shots < 1) throw std::invalid_argument("n_shots must be >= 1");
    const long d = rho.matrix.rows();
    const int n = rho.n_qubits;
    std::vector<double> cdf(d);
    double acc = 0.0;
    for (long i = 0; i < d; ++i) {
        acc += std::max(0.0, rho.matrix(i, i).real());
        cdf[i] = acc;
    }
    if (acc <= 0.0) throw std::invalid_argument("density matrix has no probability mass");

    std::map<std::string, long> counts;
    std::string bits(n, '0');
    for (long shot = 0; shot < n_shots; ++shot) {
        const double u = rng.uniform() * acc;
        long idx = std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        if (idx >= d) idx = d - 1;
        for (int q = 0; q < n; ++q) {
            const int true_bit = (idx >> qubit_bit(n, q)) & 1;
            const Eigen::Matrix2d c = model.confusion_for(q);
            const int measured =
                rng.uniform() < c(true_bit, 1 - true_bit) ? 1 - true_bit : true_bit;
            bits[q] = measured ? '1' : '0';
        }
        counts[bits]++;
    }
    return counts;
}

NoiseModel parse_noise_profile(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    double t1 = kInf, t2 = kInf, err1 = 0.0, err2 = 0.0;
    std::map<GateKind, double> durations;
    bool have_header = false;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "noise") {
            have_header = true;
            std::string kv;
            while (ls >> kv) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw std::invalid_argument("bad noise token '" + kv + "'");
                const std::string key = kv.substr(0, eq);
                const double val = kv.substr(eq + 1) == "inf" ? kInf : std::stod(kv.substr(eq + 1));
                if (key == "t1") t1 = val;
                else if (key == "t2") t2 = val;
                else if (key == "err1") err1 = val;
                else if (key == "err2") err2 = val;
                else throw std::invalid_argument("unknown noise key '" + key + "'");
            }
        } else if (tok == "duration") {
            std::string gate;
            double seconds;
            if (!(ls >> gate >> seconds))
                throw std::invalid_argument("duration line needs <gate> <seconds>");
            durations[gate_kind_from_name(gate)] = seconds;
        } else {
            throw std::invalid_argument("unexpected token '" + tok + "' in noise profile");
        }
    }
    if (!have_header) throw std::invalid_argument("missing noise header");
    NoiseModel m = NoiseModel::from_params(t1, t2, err1, err2);
    if (!durations.empty()) {
        for (const auto& [k, v] : durations) m.gate_durations[k] = v;
        m.build_channels();
    }
    return m;
}

NoiseModel load_noise_profile_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open noise profile " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_noise_profile(ss.str());
}

} // namespace vqx
