#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "vqx/rng.hpp"

namespace vqx {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Qubit ordering convention, used everywhere in this library:
// qubit 0 is the most significant bit of the basis-state index, so for
// n = 2 the basis order is |00>, |01>, |10>, |11> and X on qubit 0 maps
// |00> -> |10> (index 0 -> 2).
inline int qubit_bit(int n_qubits, int qubit) { return n_qubits - 1 - qubit; }

constexpr int kMaxQubits = 8;

long dim_for_qubits(int n_qubits);

struct Statevector {
    Vector amplitudes;
    int n_qubits = 0;

    static Statevector zero_state(int n_qubits);
    static Statevector basis_state(int n_qubits, long index);

    double norm_error() const; // | ||psi||^2 - 1 |
};

struct DensityMatrix {
    Matrix matrix;
    int n_qubits = 0;

    static DensityMatrix zero_state(int n_qubits);
    static DensityMatrix pure(const Statevector& psi);

    double trace_error() const;     // | Tr[rho] - 1 |
    double hermiticity_error() const;
    double min_eigenvalue() const;
};

struct UnitaryMatrix {
    Matrix matrix;
    int n_qubits = 0;

    static UnitaryMatrix identity(int n_qubits);
    double unitarity_error() const; // max |U^dag U - I|
};

// Length-n word over {I, X, Y, Z} with a real coefficient.
struct PauliString {
    std::string ops;
    double coefficient = 1.0;

    int n_qubits() const { return static_cast<int>(ops.size()); }
    bool is_identity() const;
    bool is_diagonal() const; // only I/Z factors
};

// --- Gate application kernels ---------------------------------------------

// psi <- G_q psi for a single-qubit gate G on `qubit`.
void apply_1q_gate(Vector& amplitudes, int n_qubits, int qubit,
                   const Eigen::Matrix2cd& gate);

// psi <- G_{a,b} psi for a two-qubit gate; the gate matrix is indexed by
// (bit_a, bit_b) -> 2*bit_a + bit_b, with `a` the first listed qubit
// (the control for controlled gates).
void apply_2q_gate(Vector& amplitudes, int n_qubits, int qubit_a, int qubit_b,
                   const Eigen::Matrix4cd& gate);

// rho <- G rho G^dag, same indexing conventions.
void apply_1q_gate(Matrix& rho, int n_qubits, int qubit,
                   const Eigen::Matrix2cd& gate);
void apply_2q_gate(Matrix& rho, int n_qubits, int qubit_a, int qubit_b,
                   const Eigen::Matrix4cd& gate);

// --- Operations ------------------------------------------------------------

// Haar-distributed unitary on n qubits: complex Ginibre matrix -> QR,
// with the R diagonal phase-normalized (Mezzadri construction).
UnitaryMatrix haar_unitary(int n_qubits, Rng& rng);

// coefficient * kron of single-qubit Pauli matrices, qubit 0 leftmost.
Matrix pauli_matrix(const PauliString& p);

// Tr[P * M] using the permutation structure of P; O(d).
cxd pauli_trace_product(const PauliString& p, const Matrix& m);

// <psi| H |psi| for Hermitian H; the imaginary residue is discarded
// (it is checked to be below 1e-10).
double expectation(const Statevector& psi, const Matrix& hermitian);

} // namespace vqx
