#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vqx/qcore.hpp"

namespace vqx {

enum class GateKind {
    Id,
    Rz,
    SqrtX,
    X,
    Cx,
    Rx,
    Ry,
    Crx,
    Crz,
    Cz,
    H,
};

// Hardware-native subset; everything else decomposes onto it.
bool is_native_gate(GateKind kind);
bool is_two_qubit_gate(GateKind kind);
bool is_parametric_gate(GateKind kind);

std::string gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

struct GateOp {
    GateKind kind = GateKind::Id;
    int qubit_a = 0;                 // target, or control for two-qubit gates
    int qubit_b = -1;                // target of two-qubit gates
    std::optional<int> param_slot;   // index into theta
    std::optional<double> angle;     // fixed rotation angle
    // effective angle = param_scale * theta[slot] + param_offset
    double param_scale = 1.0;
    double param_offset = 0.0;

    static GateOp simple(GateKind kind, int qubit);
    static GateOp rotation(GateKind kind, int qubit, int slot);
    static GateOp fixed(GateKind kind, int qubit, double angle);
    static GateOp two_qubit(GateKind kind, int control, int target);
    static GateOp controlled_rotation(GateKind kind, int control, int target, int slot);
};

struct CircuitTemplate {
    std::string template_id;
    int n_qubits = 0;
    int layers = 1;
    std::vector<GateOp> gates;
    int param_count = 0;

    // throws std::invalid_argument on slot/qubit inconsistencies
    void validate() const;
};

struct Topology {
    int n_qubits = 0;
    std::set<std::pair<int, int>> edges; // stored with first < second

    static Topology line(int n_qubits);
    static Topology ring(int n_qubits);
    static Topology fully_connected(int n_qubits);
    static Topology default_for(int n_qubits); // 4q line, 8q ring, else full

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;
};

struct TopologyViolation {
    std::size_t gate_index = 0;
    GateOp gate;
};

// --- Catalog ----------------------------------------------------------------

// A single-layer pattern as parsed from a circuit-definition file.
struct TemplatePattern {
    std::string template_id;
    int n_qubits = 0;
    int params_per_layer = 0;
    std::vector<GateOp> layer_gates;
};

class CircuitCatalog {
  public:
    // parses the line-oriented circuit-definition format:
    //   template <id> qubits=<n> params_per_layer=<p>
    //   <kind> <qubits,comma-separated> [slot=<k>|angle=<radians>]
    static CircuitCatalog parse(const std::string& text);
    static CircuitCatalog load_file(const std::string& path);
    // the bundled transcription of the 19-circuit reference set (4 and 8 qubits)
    static const CircuitCatalog& bundled();

    bool contains(const std::string& template_id, int n_qubits) const;
    const TemplatePattern& pattern(const std::string& template_id, int n_qubits) const;
    std::vector<std::string> template_ids(int n_qubits) const;

  private:
    std::map<std::pair<std::string, int>, TemplatePattern> patterns_;
};

// Raw text of the bundled circuit-definition file.
const char* bundled_catalog_text();

// Catalog lookup plus the generic patterns (any register size):
//   rz_only, rx_only, ry_only, rx_ring, hw_efficient
CircuitTemplate build_template(const std::string& template_id, int n_qubits, int layers);
CircuitTemplate build_template(const CircuitCatalog& catalog, const std::string& template_id,
                               int n_qubits, int layers);

// --- Operations -------------------------------------------------------------

Eigen::Matrix2cd single_qubit_gate_matrix(GateKind kind, double angle);
Eigen::Matrix4cd two_qubit_gate_matrix(GateKind kind, double angle);

// effective rotation angle of a gate under a parameter binding
double gate_angle(const GateOp& g, const std::vector<double>& params);

Statevector apply_circuit(const CircuitTemplate& t, const std::vector<double>& params,
                          const Statevector& input);
UnitaryMatrix circuit_unitary(const CircuitTemplate& t, const std::vector<double>& params);

// in-place statevector update, no copies; params length must match
void apply_circuit_inplace(const CircuitTemplate& t, const std::vector<double>& params,
                           Vector& amplitudes);

std::vector<TopologyViolation> validate_topology(const CircuitTemplate& t,
                                                 const Topology& topo);

// Rewrites every gate onto {Id, Rz, SqrtX, X, Cx}; the unitary is preserved
// up to a global phase. Parameter slots and counts are unchanged.
CircuitTemplate decompose_to_native(const CircuitTemplate& t);

Topology parse_topology(const std::string& text);
Topology load_topology_file(const std::string& path);
std::string topology_to_text(const Topology& topo);

} // namespace vqx
