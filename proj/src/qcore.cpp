#include "vqx/qcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <cmath>
#include <stdexcept>

namespace vqx {

long dim_for_qubits(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw std::invalid_argument("n_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n_qubits));
    return 1L << n_qubits;
}

Statevector Statevector::zero_state(int n_qubits) {
    return basis_state(n_qubits, 0);
}

Statevector Statevector::basis_state(int n_qubits, long index) {
    const long d = dim_for_qubits(n_qubits);
    if (index < 0 || index >= d) throw std::invalid_argument("basis index out of range");
    Statevector psi;
    psi.n_qubits = n_qubits;
    psi.amplitudes = Vector::Zero(d);
    psi.amplitudes[index] = 1.0;
    return psi;
}

double Statevector::norm_error() const {
    return std::abs(amplitudes.squaredNorm() - 1.0);
}

DensityMatrix DensityMatrix::zero_state(int n_qubits) {
    return pure(Statevector::zero_state(n_qubits));
}

DensityMatrix DensityMatrix::pure(const Statevector& psi) {
    DensityMatrix rho;
    rho.n_qubits = psi.n_qubits;
    rho.matrix = psi.amplitudes * psi.amplitudes.adjoint();
    return rho;
}

double DensityMatrix::trace_error() const {
    return std::abs(matrix.trace() - cxd(1.0, 0.0));
}

double DensityMatrix::hermiticity_error() const {
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> es(matrix, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

UnitaryMatrix UnitaryMatrix::identity(int n_qubits) {
    const long d = dim_for_qubits(n_qubits);
    return UnitaryMatrix{Matrix::Identity(d, d), n_qubits};
}

double UnitaryMatrix::unitarity_error() const {
    const long d = matrix.rows();
    return (matrix.adjoint() * matrix - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

bool PauliString::is_identity() const {
    return ops.find_first_not_of('I') == std::string::npos;
}

bool PauliString::is_diagonal() const {
    return ops.find_first_not_of("IZ") == std::string::npos;
}

void apply_1q_gate(Vector& amplitudes, int n_qubits, int qubit,
                   const Eigen::Matrix2cd& gate) {
    if (qubit < 0 || qubit >= n_qubits) throw std::invalid_argument("qubit out of range");
    const long d = amplitudes.size();
    const long s = 1L << qubit_bit(n_qubits, qubit);
    for (long i = 0; i < d; ++i) {
        if (i & s) continue;
        const cxd a0 = amplitudes[i];
        const cxd a1 = amplitudes[i | s];
        amplitudes[i] = gate(0, 0) * a0 + gate(0, 1) * a1;
        amplitudes[i | s] = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
}

void apply_2q_gate(Vector& amplitudes, int n_qubits, int qubit_a, int qubit_b,
                   const Eigen::Matrix4cd& gate) {
    if (qubit_a == qubit_b) throw std::invalid_argument("two-qubit gate needs distinct qubits");
    if (qubit_a < 0 || qubit_a >= n_qubits || qubit_b < 0 || qubit_b >= n_qubits)
        throw std::invalid_argument("qubit out of range");
    const long d = amplitudes.size();
    const long sa = 1L << qubit_bit(n_qubits, qubit_a);
    const long sb = 1L << qubit_bit(n_qubits, qubit_b);
    for (long i = 0; i < d; ++i) {
        if ((i & sa) || (i & sb)) continue;
        const long i00 = i, i01 = i | sb, i10 = i | sa, i11 = i | sa | sb;
        const cxd v[4] = {amplitudes[i00], amplitudes[i01], amplitudes[i10], amplitudes[i11]};
        for (int r = 0; r < 4; ++r) {
            cxd acc = 0.0;
            for (int c = 0; c < 4; ++c) acc += gate(r, c) * v[c];
            const long idx = i | (r & 2 ? sa : 0) | (r & 1 ? sb : 0);
            amplitudes[idx] = acc;
        }
    }
}

void apply_1q_gate(Matrix& rho, int n_qubits, int qubit, const Eigen::Matrix2cd& gate) {
    const long d = rho.rows();
    Vector col(d);
    for (long c = 0; c < d; ++c) {
        col = rho.col(c);
        apply_1q_gate(col, n_qubits, qubit, gate);
        rho.col(c) = col;
    }
    const Eigen::Matrix2cd gc = gate.conjugate();
    for (long r = 0; r < d; ++r) {
        col = rho.row(r).transpose();
        apply_1q_gate(col, n_qubits, qubit, gc);
        rho.row(r) = col.transpose();
    }
}

void apply_2q_gate(Matrix& rho, int n_qubits, int qubit_a, int qubit_b,
                   const Eigen::Matrix4cd& gate) {
    const long d = rho.rows();
    Vector col(d);
    for (long c = 0; c < d; ++c) {
        col = rho.col(c);
        apply_2q_gate(col, n_qubits, qubit_a, qubit_b, gate);
        rho.col(c) = col;
    }
    const Eigen::Matrix4cd gc = gate.conjugate();
    for (long r = 0; r < d; ++r) {
        col = rho.row(r).transpose();
        apply_2q_gate(col, n_qubits, qubit_a, qubit_b, gc);
        rho.row(r) = col.transpose();
    }
}

UnitaryMatrix haar_unitary(int n_qubits, Rng& rng) {
    const long d = dim_for_qubits(n_qubits);
    Matrix g(d, d);
    const double inv_sqrt2 = 0.70710678118654752440;
    for (long c = 0; c < d; ++c)
        for (long r = 0; r < d; ++r)
            g(r, c) = cxd(rng.normal(), rng.normal()) * inv_sqrt2;
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (long j = 0; j < d; ++j) {
        const cxd rjj = r(j, j);
        const double mag = std::abs(rjj);
        // r_jj = 0 has probability zero; keep the column as-is in that case
        if (mag > 0.0) q.col(j) *= rjj / mag;
    }
    return UnitaryMatrix{std::move(q), n_qubits};
}

namespace {

// P e_k = phase(k) e_{k ^ flip_mask}; returns the flip mask and fills
// per-basis phases lazily through the callback-free accessor below.
struct PauliAction {
    long flip_mask = 0;
    // masks of qubits contributing i, -i, -1 factors
    long y_mask = 0;
    long z_mask = 0;
};

PauliAction pauli_action(const PauliString& p) {
    const int n = p.n_qubits();
    PauliAction act;
    for (int q = 0; q < n; ++q) {
        const long bit = 1L << qubit_bit(n, q);
        switch (p.ops[q]) {
            case 'I': break;
            case 'X': act.flip_mask |= bit; break;
            case 'Y': act.flip_mask |= bit; act.y_mask |= bit; break;
            case 'Z': act.z_mask |= bit; break;
            default:
                throw std::invalid_argument("invalid Pauli op '" +
                                            std::string(1, p.ops[q]) + "'");
        }
    }
    return act;
}

cxd pauli_phase(const PauliAction& act, long k) {
    // Y|0> = i|1>, Y|1> = -i|0>, Z|1> = -|1>
    static const cxd i_powers[4] = {cxd(1, 0), cxd(0, 1), cxd(-1, 0), cxd(0, -1)};
    const int y_total = __builtin_popcountl(act.y_mask);
    const int y_ones = __builtin_popcountl(act.y_mask & k);
    const int z_ones = __builtin_popcountl(act.z_mask & k);
    // i^(y zeros) * (-i)^(y ones) * (-1)^(z ones)
    int ipow = (y_total - y_ones) - y_ones;
    ipow = ((ipow % 4) + 4) % 4;
    cxd phase = i_powers[ipow];
    if (z_ones % 2) phase = -phase;
    return phase;
}

} // namespace

Matrix pauli_matrix(const PauliString& p) {
    const int n = p.n_qubits();
    const long d = dim_for_qubits(n);
    if (!std::isfinite(p.coefficient))
        throw std::invalid_argument("Pauli coefficient must be finite");
    const PauliAction act = pauli_action(p);
    Matrix m = Matrix::Zero(d, d);
    for (long k = 0; k < d; ++k)
        m(k ^ act.flip_mask, k) = p.coefficient * pauli_phase(act, k);
    return m;
}

cxd pauli_trace_product(const PauliString& p, const Matrix& m) {
    const int n = p.n_qubits();
    const long d = dim_for_qubits(n);
    if (m.rows() != d || m.cols() != d)
        throw std::invalid_argument("matrix dimension does not match Pauli string");
    const PauliAction act = pauli_action(p);
    cxd acc = 0.0;
    // Tr[P M] = sum_k P_{m(k), k}^T ... = sum_k phase(k) M(k, k ^ flip)
    for (long k = 0; k < d; ++k)
        acc += pauli_phase(act, k) * m(k, k ^ act.flip_mask);
    return p.coefficient * acc;
}

double expectation(const Statevector& psi, const Matrix& hermitian) {
    if (hermitian.rows() != psi.amplitudes.size())
        throw std::invalid_argument("dimension mismatch between state and operator");
    const cxd val = psi.amplitudes.dot(hermitian * psi.amplitudes);
    if (std::abs(val.imag()) >= 1e-10)
        throw std::runtime_error("expectation has non-negligible imaginary part");
    return val.real();
}

} // namespace vqx
