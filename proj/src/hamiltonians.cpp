#include "vqx/hamiltonians.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vqx {

void Graph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("graph self-loop");
    if (i < 0 || j < 0 || i >= n_vertices || j >= n_vertices)
        throw std::invalid_argument("graph edge out of range");
    edges.insert({std::min(i, j), std::max(i, j)});
}

bool Graph::has_edge(int i, int j) const {
    return edges.count({std::min(i, j), std::max(i, j)}) > 0;
}

std::vector<std::pair<int, int>> Graph::non_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_vertices; ++i)
        for (int j = i + 1; j < n_vertices; ++j)
            if (!has_edge(i, j)) out.push_back({i, j});
    return out;
}

std::string problem_class_name(ProblemClass c) {
    switch (c) {
        case ProblemClass::MaxCut: return "maxcut";
        case ProblemClass::MinVertexCover: return "min_vertex_cover";
        case ProblemClass::MaxClique: return "max_clique";
        case ProblemClass::RandomDiagonal: return "random_diagonal";
        case ProblemClass::HeisenbergXXZ: return "heisenberg_xxz";
        case ProblemClass::TransverseIsing: return "transverse_ising";
        case ProblemClass::Adiabatic: return "adiabatic";
        case ProblemClass::RandomNonDiagonal: return "random_nondiagonal";
    }
    return "?";
}

double Hamiltonian::hermiticity_error() const {
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

double Hamiltonian::trace_real() const { return matrix.trace().real(); }

double Hamiltonian::trace_h2() const {
    // Tr[H H] = sum_ij H_ij H_ji = sum_ij |H_ij|^2 for Hermitian H
    return matrix.cwiseAbs2().sum();
}

const SpectrumBounds& Hamiltonian::ensure_bounds() {
    if (!bounds) bounds = spectrum_bounds(*this);
    return *bounds;
}

GroundKind Hamiltonian::ensure_ground_kind(double tol) {
    if (!ground_kind) ground_kind = classify_ground_state(*this, tol);
    return *ground_kind;
}

namespace {

bool matrix_is_diagonal(const Matrix& m) {
    for (long c = 0; c < m.cols(); ++c)
        for (long r = 0; r < m.rows(); ++r)
            if (r != c && std::abs(m(r, c)) >= 1e-12) return false;
    return true;
}

Hamiltonian make_hamiltonian(Matrix m, int n, ProblemClass cls) {
    Hamiltonian h;
    h.matrix = std::move(m);
    h.n_qubits = n;
    h.problem_class = cls;
    h.is_diagonal = matrix_is_diagonal(h.matrix);
    return h;
}

// z value of qubit q in basis state b: +1 for |0>, -1 for |1>
inline double zval(long b, int n, int q) {
    return (b >> qubit_bit(n, q)) & 1 ? -1.0 : 1.0;
}

Matrix diag_to_matrix(const Eigen::VectorXd& diag) {
    Matrix m = Matrix::Zero(diag.size(), diag.size());
    for (long i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

// adds c * P to m where P is the Pauli string with given single-qubit ops
void add_pauli_term(Matrix& m, int /*n*/, const std::string& ops, double c) {
    m += pauli_matrix(PauliString{ops, c});
}

std::string pauli_ops_with(int n, std::initializer_list<std::pair<int, char>> placed) {
    std::string ops(n, 'I');
    for (auto [q, op] : placed) ops[q] = op;
    return ops;
}

} // namespace

Hamiltonian maxcut(const Graph& g) {
    const int n = g.n_vertices;
    const long d = dim_for_qubits(n);
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(d);
    for (long b = 0; b < d; ++b)
        for (const auto& [i, j] : g.edges)
            diag[b] += 0.5 * (zval(b, n, i) * zval(b, n, j) - 1.0);
    return make_hamiltonian(diag_to_matrix(diag), n, ProblemClass::MaxCut);
}

Hamiltonian min_vertex_cover(const Graph& g, double penalty) {
    if (penalty <= 0.0) throw std::invalid_argument("penalty must be > 0");
    const int n = g.n_vertices;
    const long d = dim_for_qubits(n);
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(d);
    // qubit value 1 <=> vertex in the cover
    for (long b = 0; b < d; ++b) {
        double v = 0.0;
        for (int i = 0; i < n; ++i) v += 0.5 * (1.0 - zval(b, n, i));
        for (const auto& [i, j] : g.edges)
            v += penalty / 4.0 *
                 (1.0 + zval(b, n, i) + zval(b, n, j) + zval(b, n, i) * zval(b, n, j));
        diag[b] = v;
    }
    return make_hamiltonian(diag_to_matrix(diag), n, ProblemClass::MinVertexCover);
}

Hamiltonian max_clique(const Graph& g) {
    const int n = g.n_vertices;
    const long d = dim_for_qubits(n);
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(d);
    const auto complement = g.non_edges();
    for (long b = 0; b < d; ++b) {
        double v = 0.0;
        for (int i = 0; i < n; ++i) v += -0.5 * (1.0 - zval(b, n, i));
        for (const auto& [i, j] : complement)
            v += 0.5 * (1.0 - zval(b, n, i) - zval(b, n, j) + zval(b, n, i) * zval(b, n, j));
        diag[b] = v;
    }
    return make_hamiltonian(diag_to_matrix(diag), n, ProblemClass::MaxClique);
}

Hamiltonian heisenberg_xxz(int n, double delta, double g) {
    if (n < 2) throw std::invalid_argument("heisenberg_xxz needs n >= 2");
    const long d = dim_for_qubits(n);
    Matrix m = Matrix::Zero(d, d);
    // literal periodic sum: for n = 2 each bond appears twice
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        add_pauli_term(m, n, pauli_ops_with(n, {{i, 'X'}, {j, 'X'}}), 1.0);
        add_pauli_term(m, n, pauli_ops_with(n, {{i, 'Y'}, {j, 'Y'}}), 1.0);
        add_pauli_term(m, n, pauli_ops_with(n, {{i, 'Z'}, {j, 'Z'}}), delta);
    }
    for (int i = 0; i < n; ++i)
        add_pauli_term(m, n, pauli_ops_with(n, {{i, 'Z'}}), g);
    return make_hamiltonian(std::move(m), n, ProblemClass::HeisenbergXXZ);
}

Hamiltonian transverse_ising(int n, double j, double g) {
    if (n < 2) throw std::invalid_argument("transverse_ising needs n >= 2");
    const long d = dim_for_qubits(n);
    Matrix m = Matrix::Zero(d, d);
    for (int i = 0; i < n; ++i) {
        const int k = (i + 1) % n;
        add_pauli_term(m, n, pauli_ops_with(n, {{i, 'X'}, {k, 'X'}}), -j);
    }
    for (int i = 0; i < n; ++i)
        add_pauli_term(m, n, pauli_ops_with(n, {{i, 'Z'}}), -g);
    return make_hamiltonian(std::move(m), n, ProblemClass::TransverseIsing);
}

Hamiltonian adiabatic(const Hamiltonian& h_p, double s, const ScheduleTable& sched) {
    if (s < 0.0 || s > 1.0) throw std::invalid_argument("s must be in [0, 1]");
    const int n = h_p.n_qubits;
    Matrix m = (sched.b_at(s) / 2.0) * h_p.matrix;
    for (int i = 0; i < n; ++i)
        add_pauli_term(m, n, pauli_ops_with(n, {{i, 'X'}}), -sched.a_at(s) / 2.0);
    return make_hamiltonian(std::move(m), n, ProblemClass::Adiabatic);
}

double sample_dist(RandomDist dist, Rng& rng) {
    switch (dist) {
        case RandomDist::Uniform:
            return rng.uniform(-10.0, 10.0);
        case RandomDist::TruncNormal: {
            // truncation by resampling, not clipping
            double v;
            do {
                v = 4.0 * rng.normal();
            } while (v < -10.0 || v > 10.0);
            return v;
        }
        case RandomDist::LogUniform: {
            // magnitude log-uniform on [1e-2, 10], sign uniform
            const double lo = std::log(1e-2), hi = std::log(10.0);
            const double mag = std::exp(rng.uniform(lo, hi));
            return rng.uniform() < 0.5 ? -mag : mag;
        }
    }
    throw std::invalid_argument("unknown distribution");
}

Hamiltonian random_diagonal(int n, RandomDist dist, Rng& rng) {
    const long d = dim_for_qubits(n);
    Eigen::VectorXd diag(d);
    for (long i = 0; i < d; ++i) diag[i] = sample_dist(dist, rng);
    return make_hamiltonian(diag_to_matrix(diag), n, ProblemClass::RandomDiagonal);
}

Hamiltonian random_nondiagonal(int n, RandomDist dist, int n_terms, Rng& rng) {
    const long d = dim_for_qubits(n);
    long total = 1;
    for (int q = 0; q < n; ++q) total *= 4;
    if (n_terms < 1) throw std::invalid_argument("n_terms must be >= 1");
    if (n_terms > total - 1)
        throw std::invalid_argument("n_terms exceeds the number of non-identity Pauli strings");
    std::set<long> chosen;
    while (static_cast<int>(chosen.size()) < n_terms) {
        const long code = 1 + static_cast<long>(rng.uniform_int(total - 1));
        chosen.insert(code);
    }
    Matrix m = Matrix::Zero(d, d);
    static const char kOps[4] = {'I', 'X', 'Y', 'Z'};
    for (const long code : chosen) {
        std::string ops(n, 'I');
        long c = code;
        for (int q = n - 1; q >= 0; --q) {
            ops[q] = kOps[c % 4];
            c /= 4;
        }
        add_pauli_term(m, n, ops, sample_dist(dist, rng));
    }
    return make_hamiltonian(std::move(m), n, ProblemClass::RandomNonDiagonal);
}

SpectrumBounds spectrum_bounds(const Hamiltonian& h) {
    if (h.matrix.rows() > 256) throw std::invalid_argument("dimension exceeds 256");
    if (h.hermiticity_error() >= 1e-10)
        throw std::invalid_argument("spectrum_bounds needs a Hermitian matrix");
    Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    const auto& vals = es.eigenvalues();
    const long d = vals.size();
    SpectrumBounds b{vals[0], vals[d - 1]};
    // residual check on the extreme eigenpairs
    for (long idx : {0L, d - 1}) {
        const double res =
            (h.matrix * es.eigenvectors().col(idx) - vals[idx] * es.eigenvectors().col(idx))
                .norm();
        if (res >= 1e-8) throw std::runtime_error("eigenpair residual too large");
    }
    return b;
}

GroundKind classify_ground_state(const Hamiltonian& h, double tol) {
    Hamiltonian copy = h;
    const SpectrumBounds b = h.bounds ? *h.bounds : spectrum_bounds(copy);
    const long d = h.matrix.rows();
    for (long i = 0; i < d; ++i)
        if (h.matrix(i, i).real() <= b.lambda_min + tol) return GroundKind::BasisState;
    return GroundKind::Superposition;
}

// --- Schedule -------------------------------------------------------------------

void ScheduleTable::validate() const {
    if (s.size() < 2 || s.size() != a.size() || s.size() != b.size())
        throw std::invalid_argument("schedule needs matching s/a/b samples");
    if (s.front() != 0.0 || s.back() != 1.0)
        throw std::invalid_argument("schedule must cover s = 0 and s = 1");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] <= s[i - 1]) throw std::invalid_argument("schedule s must be increasing");
}

namespace {
double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x < xs.front() || x > xs.back()) throw std::invalid_argument("s out of range");
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.end()) return ys.back();
    const std::size_t hi = it - xs.begin();
    if (hi == 0) return ys.front();
    const double t = (x - xs[hi - 1]) / (xs[hi] - xs[hi - 1]);
    return ys[hi - 1] + t * (ys[hi] - ys[hi - 1]);
}
} // namespace

double ScheduleTable::a_at(double s_query) const { return interp(s, a, s_query); }
double ScheduleTable::b_at(double s_query) const { return interp(s, b, s_query); }

const ScheduleTable& ScheduleTable::bundled() {
    static const ScheduleTable table = [] {
        ScheduleTable t;
        t.s = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
        t.a = {6.0, 4.6, 3.4, 2.4, 1.6, 1.0, 0.6, 0.3, 0.15, 0.05, 0.0};
        t.b = {0.0, 0.6, 1.3, 2.1, 3.0, 4.0, 5.2, 6.6, 8.2, 10.0, 12.0};
        t.validate();
        return t;
    }();
    return table;
}

// --- Graph files and generators ---------------------------------------------------

namespace {
std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}
} // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Graph g;
    bool have_header = false;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "graph") {
            if (toks.size() != 2 || toks[1].rfind("vertices=", 0) != 0)
                throw std::invalid_argument("graph header needs vertices=<n>");
            g.n_vertices = std::stoi(toks[1].substr(9));
            have_header = true;
        } else if (toks[0] == "edge") {
            if (!have_header) throw std::invalid_argument("edge before graph header");
            if (toks.size() != 3) throw std::invalid_argument("edge needs two vertices");
            g.add_edge(std::stoi(toks[1]), std::stoi(toks[2]));
        } else {
            throw std::invalid_argument("unexpected token '" + toks[0] + "'");
        }
    }
    if (!have_header) throw std::invalid_argument("missing graph header");
    return g;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "graph vertices=" << g.n_vertices << "\n";
    for (const auto& [i, j] : g.edges) out << "edge " << i << " " << j << "\n";
    return out.str();
}

std::vector<Graph> all_four_node_graphs() {
    // the 10 non-isomorphic, non-empty simple graphs on 4 vertices,
    // by edge count: 1, 2, 2, 3, 3, 3, 4, 4, 5, 6
    const std::vector<std::vector<std::pair<int, int>>> edge_sets = {
        {{0, 1}},                                                  // single edge
        {{0, 1}, {2, 3}},                                          // perfect matching
        {{0, 1}, {1, 2}},                                          // path P3
        {{0, 1}, {1, 2}, {2, 3}},                                  // path P4
        {{0, 1}, {1, 2}, {0, 2}},                                  // triangle + isolated
        {{0, 1}, {0, 2}, {0, 3}},                                  // star K1,3
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}},                          // cycle C4
        {{0, 1}, {1, 2}, {0, 2}, {2, 3}},                          // triangle + pendant
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}},                  // K4 minus edge
        {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}},          // K4
    };
    std::vector<Graph> out;
    for (const auto& es : edge_sets) {
        Graph g;
        g.n_vertices = 4;
        for (auto [i, j] : es) g.add_edge(i, j);
        out.push_back(std::move(g));
    }
    return out;
}

Graph erdos_renyi(int n, double p, Rng& rng) {
    Graph g;
    g.n_vertices = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < p) g.add_edge(i, j);
    return g;
}

Graph random_regular(int n, int degree, Rng& rng) {
    if ((n * degree) % 2 != 0) throw std::invalid_argument("n * degree must be even");
    // pairing model with rejection on self-loops / multi-edges
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < degree; ++k) stubs.push_back(v);
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.uniform_int(i)]);
        Graph g;
        g.n_vertices = n;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            const int a = stubs[i], b = stubs[i + 1];
            if (a == b || g.has_edge(a, b)) ok = false;
            else g.add_edge(a, b);
        }
        if (ok) return g;
    }
    throw std::runtime_error("failed to sample a regular graph");
}

Graph barabasi_albert(int n, int m, Rng& rng) {
    if (m < 1 || m >= n) throw std::invalid_argument("need 1 <= m < n");
    Graph g;
    g.n_vertices = n;
    // start from a star on m+1 vertices, then preferential attachment
    std::vector<int> repeated;
    for (int v = 1; v <= m; ++v) {
        g.add_edge(0, v);
        repeated.push_back(0);
        repeated.push_back(v);
    }
    for (int v = m + 1; v < n; ++v) {
        std::set<int> targets;
        while (static_cast<int>(targets.size()) < m) {
            const int t = repeated[rng.uniform_int(repeated.size())];
            if (t != v) targets.insert(t);
        }
        for (int t : targets) {
            g.add_edge(v, t);
            repeated.push_back(v);
            repeated.push_back(t);
        }
    }
    return g;
}

// --- Export ----------------------------------------------------------------------

std::string hamiltonian_to_text(const Hamiltonian& h) {
    std::ostringstream out;
    out.precision(17);
    out << "hamiltonian qubits=" << h.n_qubits << " class=" << problem_class_name(h.problem_class)
        << " diagonal=" << (h.is_diagonal ? 1 : 0);
    if (h.bounds)
        out << " lambda_min=" << h.bounds->lambda_min << " lambda_max=" << h.bounds->lambda_max;
    out << "\n";
    const long d = h.matrix.rows();
    for (long r = 0; r < d; ++r) {
        for (long c = 0; c < d; ++c) {
            if (c) out << " ";
            out << h.matrix(r, c).real() << "," << h.matrix(r, c).imag();
        }
        out << "\n";
    }
    return out.str();
}

Hamiltonian parse_hamiltonian(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty hamiltonian text");
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0] != "hamiltonian")
        throw std::invalid_argument("missing hamiltonian header");
    Hamiltonian h;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto eq = toks[i].find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad header token " + toks[i]);
        const std::string key = toks[i].substr(0, eq), val = toks[i].substr(eq + 1);
        if (key == "qubits") h.n_qubits = std::stoi(val);
        else if (key == "diagonal") h.is_diagonal = val == "1";
        else if (key == "class") {
            bool found = false;
            for (int c = 0; c <= static_cast<int>(ProblemClass::RandomNonDiagonal); ++c)
                if (problem_class_name(static_cast<ProblemClass>(c)) == val) {
                    h.problem_class = static_cast<ProblemClass>(c);
                    found = true;
                }
            if (!found) throw std::invalid_argument("unknown class " + val);
        } else if (key == "lambda_min") {
            if (!h.bounds) h.bounds = SpectrumBounds{};
            h.bounds->lambda_min = std::stod(val);
        } else if (key == "lambda_max") {
            if (!h.bounds) h.bounds = SpectrumBounds{};
            h.bounds->lambda_max = std::stod(val);
        }
    }
    const long d = dim_for_qubits(h.n_qubits);
    h.matrix = Matrix::Zero(d, d);
    for (long r = 0; r < d; ++r) {
        if (!std::getline(in, line)) throw std::invalid_argument("truncated hamiltonian matrix");
        const auto cells = split_ws(line);
        if (static_cast<long>(cells.size()) != d)
            throw std::invalid_argument("wrong column count in hamiltonian row");
        for (long c = 0; c < d; ++c) {
            const auto comma = cells[c].find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("matrix cell needs re,im");
            h.matrix(r, c) = cxd(std::stod(cells[c].substr(0, comma)),
                                 std::stod(cells[c].substr(comma + 1)));
        }
    }
    return h;
}

} // namespace vqx
