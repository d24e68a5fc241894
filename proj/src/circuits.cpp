#include "vqx/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vqx {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

bool is_native_gate(GateKind kind) {
    switch (kind) {
        case GateKind::Id:
        case GateKind::Rz:
        case GateKind::SqrtX:
        case GateKind::X:
        case GateKind::Cx:
            return true;
        default:
            return false;
    }
}

bool is_two_qubit_gate(GateKind kind) {
    switch (kind) {
        case GateKind::Cx:
        case GateKind::Crx:
        case GateKind::Crz:
        case GateKind::Cz:
            return true;
        default:
            return false;
    }
}

bool is_parametric_gate(GateKind kind) {
    switch (kind) {
        case GateKind::Rz:
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Crx:
        case GateKind::Crz:
            return true;
        default:
            return false;
    }
}

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::Id: return "id";
        case GateKind::Rz: return "rz";
        case GateKind::SqrtX: return "sx";
        case GateKind::X: return "x";
        case GateKind::Cx: return "cx";
        case GateKind::Rx: return "rx";
        case GateKind::Ry: return "ry";
        case GateKind::Crx: return "crx";
        case GateKind::Crz: return "crz";
        case GateKind::Cz: return "cz";
        case GateKind::H: return "h";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
    if (name == "id") return GateKind::Id;
    if (name == "rz") return GateKind::Rz;
    if (name == "sx") return GateKind::SqrtX;
    if (name == "x") return GateKind::X;
    if (name == "cx") return GateKind::Cx;
    if (name == "rx") return GateKind::Rx;
    if (name == "ry") return GateKind::Ry;
    if (name == "crx") return GateKind::Crx;
    if (name == "crz") return GateKind::Crz;
    if (name == "cz") return GateKind::Cz;
    if (name == "h") return GateKind::H;
    throw std::invalid_argument("unknown gate kind '" + name + "'");
}

GateOp GateOp::simple(GateKind kind, int qubit) {
    GateOp g;
    g.kind = kind;
    g.qubit_a = qubit;
    return g;
}

GateOp GateOp::rotation(GateKind kind, int qubit, int slot) {
    GateOp g;
    g.kind = kind;
    g.qubit_a = qubit;
    g.param_slot = slot;
    return g;
}

GateOp GateOp::fixed(GateKind kind, int qubit, double angle) {
    GateOp g;
    g.kind = kind;
    g.qubit_a = qubit;
    g.angle = angle;
    return g;
}

GateOp GateOp::two_qubit(GateKind kind, int control, int target) {
    GateOp g;
    g.kind = kind;
    g.qubit_a = control;
    g.qubit_b = target;
    return g;
}

GateOp GateOp::controlled_rotation(GateKind kind, int control, int target, int slot) {
    GateOp g;
    g.kind = kind;
    g.qubit_a = control;
    g.qubit_b = target;
    g.param_slot = slot;
    return g;
}

void CircuitTemplate::validate() const {
    dim_for_qubits(n_qubits);
    if (layers < 1) throw std::invalid_argument("layers must be >= 1");
    std::vector<int> slot_uses(param_count, 0);
    for (const auto& g : gates) {
        if (g.qubit_a < 0 || g.qubit_a >= n_qubits)
            throw std::invalid_argument("gate references qubit out of range");
        if (is_two_qubit_gate(g.kind)) {
            if (g.qubit_b < 0 || g.qubit_b >= n_qubits || g.qubit_b == g.qubit_a)
                throw std::invalid_argument("two-qubit gate needs two distinct in-range qubits");
        } else if (g.qubit_b != -1) {
            throw std::invalid_argument("single-qubit gate with a second qubit");
        }
        if (is_parametric_gate(g.kind)) {
            if (g.param_slot.has_value() == g.angle.has_value())
                throw std::invalid_argument(
                    "rotation gate needs exactly one of param slot / fixed angle");
        } else if (g.param_slot || g.angle) {
            throw std::invalid_argument("non-parametric gate with rotation data");
        }
        if (g.param_slot) {
            if (*g.param_slot < 0 || *g.param_slot >= param_count)
                throw std::invalid_argument("param slot out of range");
            slot_uses[*g.param_slot]++;
        }
    }
    for (int s = 0; s < param_count; ++s)
        if (slot_uses[s] == 0)
            throw std::invalid_argument("param slot " + std::to_string(s) + " is unused");
}

Topology Topology::line(int n_qubits) {
    Topology t;
    t.n_qubits = n_qubits;
    for (int i = 0; i + 1 < n_qubits; ++i) t.add_edge(i, i + 1);
    return t;
}

Topology Topology::ring(int n_qubits) {
    Topology t = line(n_qubits);
    if (n_qubits > 2) t.add_edge(0, n_qubits - 1);
    return t;
}

Topology Topology::fully_connected(int n_qubits) {
    Topology t;
    t.n_qubits = n_qubits;
    for (int i = 0; i < n_qubits; ++i)
        for (int j = i + 1; j < n_qubits; ++j) t.add_edge(i, j);
    return t;
}

Topology Topology::default_for(int n_qubits) {
    if (n_qubits == 4) return line(4);
    if (n_qubits == 8) return ring(8);
    return fully_connected(n_qubits);
}

void Topology::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("topology self-loop");
    if (i < 0 || j < 0 || i >= n_qubits || j >= n_qubits)
        throw std::invalid_argument("topology edge out of range");
    edges.insert({std::min(i, j), std::max(i, j)});
}

bool Topology::has_edge(int i, int j) const {
    return edges.count({std::min(i, j), std::max(i, j)}) > 0;
}

// --- Catalog -----------------------------------------------------------------

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// parses "key=value", returns value
std::string kv_value(const std::string& tok, const std::string& key) {
    const std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw std::invalid_argument("expected '" + key + "=...', got '" + tok + "'");
    return tok.substr(prefix.size());
}

GateOp parse_gate_line(const std::vector<std::string>& toks) {
    GateOp g;
    g.kind = gate_kind_from_name(toks[0]);
    std::vector<int> qubits;
    {
        std::stringstream qs(toks[1]);
        std::string part;
        while (std::getline(qs, part, ',')) qubits.push_back(std::stoi(part));
    }
    if (is_two_qubit_gate(g.kind)) {
        if (qubits.size() != 2) throw std::invalid_argument("two-qubit gate needs 2 qubits");
        g.qubit_a = qubits[0];
        g.qubit_b = qubits[1];
    } else {
        if (qubits.size() != 1) throw std::invalid_argument("single-qubit gate needs 1 qubit");
        g.qubit_a = qubits[0];
    }
    if (toks.size() > 2) {
        const std::string& t = toks[2];
        if (t.rfind("slot=", 0) == 0)
            g.param_slot = std::stoi(kv_value(t, "slot"));
        else if (t.rfind("angle=", 0) == 0)
            g.angle = std::stod(kv_value(t, "angle"));
        else
            throw std::invalid_argument("unexpected gate attribute '" + t + "'");
    }
    return g;
}

} // namespace

CircuitCatalog CircuitCatalog::parse(const std::string& text) {
    CircuitCatalog cat;
    std::istringstream in(text);
    std::string line;
    TemplatePattern* current = nullptr;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        try {
            if (toks[0] == "template") {
                if (toks.size() != 4)
                    throw std::invalid_argument("template header needs id, qubits, params");
                TemplatePattern p;
                p.template_id = toks[1];
                p.n_qubits = std::stoi(kv_value(toks[2], "qubits"));
                p.params_per_layer = std::stoi(kv_value(toks[3], "params_per_layer"));
                auto key = std::make_pair(p.template_id, p.n_qubits);
                auto [it, inserted] = cat.patterns_.emplace(key, std::move(p));
                if (!inserted)
                    throw std::invalid_argument("duplicate template " + toks[1]);
                current = &it->second;
            } else {
                if (!current)
                    throw std::invalid_argument("gate line before any template header");
                current->layer_gates.push_back(parse_gate_line(toks));
            }
        } catch (const std::exception& e) {
            throw std::invalid_argument("circuit definition line " + std::to_string(lineno) +
                                        ": " + e.what());
        }
    }
    // validate every pattern as a 1-layer template
    for (const auto& [key, p] : cat.patterns_) {
        CircuitTemplate t;
        t.template_id = p.template_id;
        t.n_qubits = p.n_qubits;
        t.layers = 1;
        t.gates = p.layer_gates;
        t.param_count = p.params_per_layer;
        t.validate();
    }
    return cat;
}

CircuitCatalog CircuitCatalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open circuit definition file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

const CircuitCatalog& CircuitCatalog::bundled() {
    static const CircuitCatalog cat = parse(bundled_catalog_text());
    return cat;
}

bool CircuitCatalog::contains(const std::string& template_id, int n_qubits) const {
    return patterns_.count({template_id, n_qubits}) > 0;
}

const TemplatePattern& CircuitCatalog::pattern(const std::string& template_id,
                                               int n_qubits) const {
    auto it = patterns_.find({template_id, n_qubits});
    if (it == patterns_.end())
        throw std::invalid_argument("unknown template '" + template_id + "' for " +
                                    std::to_string(n_qubits) + " qubits");
    return it->second;
}

std::vector<std::string> CircuitCatalog::template_ids(int n_qubits) const {
    std::vector<std::string> ids;
    for (const auto& [key, p] : patterns_)
        if (key.second == n_qubits) ids.push_back(key.first);
    return ids;
}

// --- Generic patterns ---------------------------------------------------------

namespace {

std::optional<TemplatePattern> generic_pattern(const std::string& id, int n) {
    TemplatePattern p;
    p.template_id = id;
    p.n_qubits = n;
    if (id == "rz_only" || id == "rx_only" || id == "ry_only") {
        const GateKind k = id == "rz_only"   ? GateKind::Rz
                           : id == "rx_only" ? GateKind::Rx
                                             : GateKind::Ry;
        for (int q = 0; q < n; ++q) p.layer_gates.push_back(GateOp::rotation(k, q, q));
        p.params_per_layer = n;
        return p;
    }
    if (id == "rx_ring") {
        for (int q = 0; q < n; ++q)
            p.layer_gates.push_back(GateOp::rotation(GateKind::Rx, q, q));
        for (int q = 0; q + 1 < n; ++q)
            p.layer_gates.push_back(GateOp::two_qubit(GateKind::Cx, q, q + 1));
        if (n > 2) p.layer_gates.push_back(GateOp::two_qubit(GateKind::Cx, n - 1, 0));
        p.params_per_layer = n;
        return p;
    }
    if (id == "hw_efficient") {
        for (int q = 0; q < n; ++q)
            p.layer_gates.push_back(GateOp::rotation(GateKind::Ry, q, q));
        for (int q = 0; q < n; ++q)
            p.layer_gates.push_back(GateOp::rotation(GateKind::Rz, q, n + q));
        for (int q = 0; q + 1 < n; ++q)
            p.layer_gates.push_back(GateOp::two_qubit(GateKind::Cx, q, q + 1));
        if (n > 2) p.layer_gates.push_back(GateOp::two_qubit(GateKind::Cx, n - 1, 0));
        p.params_per_layer = 2 * n;
        return p;
    }
    return std::nullopt;
}

CircuitTemplate replicate_layers(const TemplatePattern& p, int layers) {
    if (layers < 1) throw std::invalid_argument("layers must be >= 1");
    CircuitTemplate t;
    t.template_id = p.template_id;
    t.n_qubits = p.n_qubits;
    t.layers = layers;
    t.param_count = layers * p.params_per_layer;
    t.gates.reserve(p.layer_gates.size() * layers);
    for (int l = 0; l < layers; ++l) {
        for (GateOp g : p.layer_gates) {
            if (g.param_slot) *g.param_slot += l * p.params_per_layer;
            t.gates.push_back(g);
        }
    }
    t.validate();
    return t;
}

} // namespace

CircuitTemplate build_template(const CircuitCatalog& catalog, const std::string& template_id,
                               int n_qubits, int layers) {
    if (auto generic = generic_pattern(template_id, n_qubits))
        return replicate_layers(*generic, layers);
    return replicate_layers(catalog.pattern(template_id, n_qubits), layers);
}

CircuitTemplate build_template(const std::string& template_id, int n_qubits, int layers) {
    return build_template(CircuitCatalog::bundled(), template_id, n_qubits, layers);
}

// --- Gate matrices -------------------------------------------------------------

Eigen::Matrix2cd single_qubit_gate_matrix(GateKind kind, double angle) {
    Eigen::Matrix2cd m;
    const cxd i(0.0, 1.0);
    switch (kind) {
        case GateKind::Id:
            m.setIdentity();
            return m;
        case GateKind::X:
            m << 0, 1, 1, 0;
            return m;
        case GateKind::SqrtX:
            m << cxd(0.5, 0.5), cxd(0.5, -0.5), cxd(0.5, -0.5), cxd(0.5, 0.5);
            return m;
        case GateKind::H:
            m << 1, 1, 1, -1;
            return m / std::sqrt(2.0);
        case GateKind::Rz:
            m << std::exp(-i * (angle / 2)), 0, 0, std::exp(i * (angle / 2));
            return m;
        case GateKind::Rx:
            m << std::cos(angle / 2), -i * std::sin(angle / 2),
                 -i * std::sin(angle / 2), std::cos(angle / 2);
            return m;
        case GateKind::Ry:
            m << std::cos(angle / 2), -std::sin(angle / 2),
                 std::sin(angle / 2), std::cos(angle / 2);
            return m;
        default:
            throw std::invalid_argument("not a single-qubit gate: " + gate_kind_name(kind));
    }
}

Eigen::Matrix4cd two_qubit_gate_matrix(GateKind kind, double angle) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    switch (kind) {
        case GateKind::Cx:
            m(2, 2) = 0; m(3, 3) = 0;
            m(2, 3) = 1; m(3, 2) = 1;
            return m;
        case GateKind::Cz:
            m(3, 3) = -1;
            return m;
        case GateKind::Crz:
        case GateKind::Crx: {
            const Eigen::Matrix2cd r = single_qubit_gate_matrix(
                kind == GateKind::Crz ? GateKind::Rz : GateKind::Rx, angle);
            m.block<2, 2>(2, 2) = r;
            return m;
        }
        default:
            throw std::invalid_argument("not a two-qubit gate: " + gate_kind_name(kind));
    }
}

double gate_angle(const GateOp& g, const std::vector<double>& params) {
    if (g.param_slot) return g.param_scale * params[*g.param_slot] + g.param_offset;
    if (g.angle) return *g.angle;
    return 0.0;
}

void apply_circuit_inplace(const CircuitTemplate& t, const std::vector<double>& params,
                           Vector& amplitudes) {
    if (static_cast<int>(params.size()) != t.param_count)
        throw std::invalid_argument("parameter count mismatch: template has " +
                                    std::to_string(t.param_count) + ", got " +
                                    std::to_string(params.size()));
    if (amplitudes.size() != dim_for_qubits(t.n_qubits))
        throw std::invalid_argument("state dimension does not match template");
    for (const auto& g : t.gates) {
        const double angle = gate_angle(g, params);
        if (is_two_qubit_gate(g.kind))
            apply_2q_gate(amplitudes, t.n_qubits, g.qubit_a, g.qubit_b,
                          two_qubit_gate_matrix(g.kind, angle));
        else
            apply_1q_gate(amplitudes, t.n_qubits, g.qubit_a,
                          single_qubit_gate_matrix(g.kind, angle));
    }
}

Statevector apply_circuit(const CircuitTemplate& t, const std::vector<double>& params,
                          const Statevector& input) {
    if (input.n_qubits != t.n_qubits)
        throw std::invalid_argument("qubit count mismatch between template and state");
    Statevector out = input;
    apply_circuit_inplace(t, params, out.amplitudes);
    return out;
}

UnitaryMatrix circuit_unitary(const CircuitTemplate& t, const std::vector<double>& params) {
    const long d = dim_for_qubits(t.n_qubits);
    UnitaryMatrix u;
    u.n_qubits = t.n_qubits;
    u.matrix = Matrix::Identity(d, d);
    Vector col(d);
    for (long b = 0; b < d; ++b) {
        col = u.matrix.col(b);
        apply_circuit_inplace(t, params, col);
        u.matrix.col(b) = col;
    }
    return u;
}

std::vector<TopologyViolation> validate_topology(const CircuitTemplate& t,
                                                 const Topology& topo) {
    std::vector<TopologyViolation> violations;
    for (std::size_t i = 0; i < t.gates.size(); ++i) {
        const auto& g = t.gates[i];
        if (!is_two_qubit_gate(g.kind)) continue;
        if (!topo.has_edge(g.qubit_a, g.qubit_b)) violations.push_back({i, g});
    }
    return violations;
}

// --- Decomposition to the native gate set --------------------------------------
//
// Up to a global phase:
//   H      = Rz(pi/2) SX Rz(pi/2)
//   Rx(a)  = Rz(pi/2) SX Rz(a+pi) SX Rz(pi/2)
//   Ry(a)  = Rz(pi) SX Rz(a+pi) SX
//   CRz(a) = [Rz(a/2) t] [CX] [Rz(-a/2) t] [CX]                (exact)
//   CRx(a) = [H t] CRz(a) [H t]
//   CZ     = [H t] CX [H t]
// Sequences below are written in application order (first gate first).

namespace {

GateOp scaled_slot_rz(int qubit, const GateOp& src, double scale, double offset) {
    GateOp g;
    g.kind = GateKind::Rz;
    g.qubit_a = qubit;
    if (src.param_slot) {
        g.param_slot = src.param_slot;
        g.param_scale = src.param_scale * scale;
        g.param_offset = src.param_offset * scale + offset;
    } else {
        g.angle = *src.angle * scale + offset;
    }
    return g;
}

void emit_h(std::vector<GateOp>& out, int q) {
    out.push_back(GateOp::fixed(GateKind::Rz, q, kPi / 2));
    out.push_back(GateOp::simple(GateKind::SqrtX, q));
    out.push_back(GateOp::fixed(GateKind::Rz, q, kPi / 2));
}

void emit_crz(std::vector<GateOp>& out, const GateOp& g) {
    out.push_back(scaled_slot_rz(g.qubit_b, g, 0.5, 0.0));
    out.push_back(GateOp::two_qubit(GateKind::Cx, g.qubit_a, g.qubit_b));
    out.push_back(scaled_slot_rz(g.qubit_b, g, -0.5, 0.0));
    out.push_back(GateOp::two_qubit(GateKind::Cx, g.qubit_a, g.qubit_b));
}

} // namespace

CircuitTemplate decompose_to_native(const CircuitTemplate& t) {
    CircuitTemplate out;
    out.template_id = t.template_id;
    out.n_qubits = t.n_qubits;
    out.layers = t.layers;
    out.param_count = t.param_count;
    for (const auto& g : t.gates) {
        switch (g.kind) {
            case GateKind::Id:
            case GateKind::Rz:
            case GateKind::SqrtX:
            case GateKind::X:
            case GateKind::Cx:
                out.gates.push_back(g);
                break;
            case GateKind::H:
                emit_h(out.gates, g.qubit_a);
                break;
            case GateKind::Rx:
                out.gates.push_back(GateOp::fixed(GateKind::Rz, g.qubit_a, kPi / 2));
                out.gates.push_back(GateOp::simple(GateKind::SqrtX, g.qubit_a));
                out.gates.push_back(scaled_slot_rz(g.qubit_a, g, 1.0, kPi));
                out.gates.push_back(GateOp::simple(GateKind::SqrtX, g.qubit_a));
                out.gates.push_back(GateOp::fixed(GateKind::Rz, g.qubit_a, kPi / 2));
                break;
            case GateKind::Ry:
                out.gates.push_back(GateOp::simple(GateKind::SqrtX, g.qubit_a));
                out.gates.push_back(scaled_slot_rz(g.qubit_a, g, 1.0, kPi));
                out.gates.push_back(GateOp::simple(GateKind::SqrtX, g.qubit_a));
                out.gates.push_back(GateOp::fixed(GateKind::Rz, g.qubit_a, kPi));
                break;
            case GateKind::Crz:
                emit_crz(out.gates, g);
                break;
            case GateKind::Crx:
                emit_h(out.gates, g.qubit_b);
                emit_crz(out.gates, g);
                emit_h(out.gates, g.qubit_b);
                break;
            case GateKind::Cz:
                emit_h(out.gates, g.qubit_b);
                out.gates.push_back(GateOp::two_qubit(GateKind::Cx, g.qubit_a, g.qubit_b));
                emit_h(out.gates, g.qubit_b);
                break;
        }
    }
    out.validate();
    return out;
}

// --- Topology files -------------------------------------------------------------

Topology parse_topology(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Topology topo;
    bool have_header = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        try {
            if (toks[0] == "topology") {
                if (toks.size() != 2) throw std::invalid_argument("topology header needs qubits=<n>");
                topo.n_qubits = std::stoi(kv_value(toks[1], "qubits"));
                have_header = true;
            } else if (toks[0] == "edge") {
                if (!have_header) throw std::invalid_argument("edge before topology header");
                if (toks.size() != 3) throw std::invalid_argument("edge needs two qubits");
                topo.add_edge(std::stoi(toks[1]), std::stoi(toks[2]));
            } else {
                throw std::invalid_argument("unexpected token '" + toks[0] + "'");
            }
        } catch (const std::exception& e) {
            throw std::invalid_argument("topology line " + std::to_string(lineno) + ": " +
                                        e.what());
        }
    }
    if (!have_header) throw std::invalid_argument("missing topology header");
    return topo;
}

Topology load_topology_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open topology file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_topology(ss.str());
}

std::string topology_to_text(const Topology& topo) {
    std::ostringstream out;
    out << "topology qubits=" << topo.n_qubits << "\n";
    for (const auto& [i, j] : topo.edges) out << "edge " << i << " " << j << "\n";
    return out.str();
}

} // namespace vqx
