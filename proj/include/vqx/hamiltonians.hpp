#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vqx/qcore.hpp"

namespace vqx {

struct Graph {
    int n_vertices = 0;
    std::set<std::pair<int, int>> edges; // stored with first < second

    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;
    std::vector<std::pair<int, int>> non_edges() const;
};

enum class ProblemClass {
    MaxCut,
    MinVertexCover,
    MaxClique,
    RandomDiagonal,
    HeisenbergXXZ,
    TransverseIsing,
    Adiabatic,
    RandomNonDiagonal,
};

std::string problem_class_name(ProblemClass c);

enum class GroundKind { BasisState, Superposition };

struct SpectrumBounds {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
};

struct Hamiltonian {
    Matrix matrix;
    int n_qubits = 0;
    ProblemClass problem_class = ProblemClass::RandomDiagonal;
    bool is_diagonal = false;
    std::optional<SpectrumBounds> bounds;
    std::optional<GroundKind> ground_kind;

    double hermiticity_error() const;
    double trace_real() const;
    double trace_h2() const; // Tr[H^2]

    // fills bounds/ground_kind if absent; returns the cached values
    const SpectrumBounds& ensure_bounds();
    GroundKind ensure_ground_kind(double tol = 1e-8);
};

// Piecewise-linear anneal schedule: s in [0,1] -> (A(s), B(s)).
struct ScheduleTable {
    std::vector<double> s;
    std::vector<double> a;
    std::vector<double> b;

    double a_at(double s_query) const;
    double b_at(double s_query) const;
    void validate() const;

    // Bundled table, qualitatively matching a quantum annealer schedule:
    // A decreases to 0, B increases from 0, crossing mid-anneal.
    static const ScheduleTable& bundled();
};

enum class RandomDist { Uniform, TruncNormal, LogUniform };

// --- Builders (Hermitian by construction) -----------------------------------

Hamiltonian maxcut(const Graph& g);
Hamiltonian min_vertex_cover(const Graph& g, double penalty);
Hamiltonian max_clique(const Graph& g);
Hamiltonian heisenberg_xxz(int n, double delta, double g);
Hamiltonian transverse_ising(int n, double j, double g);
Hamiltonian adiabatic(const Hamiltonian& h_p, double s, const ScheduleTable& sched);
Hamiltonian random_diagonal(int n, RandomDist dist, Rng& rng);
Hamiltonian random_nondiagonal(int n, RandomDist dist, int n_terms, Rng& rng);

double sample_dist(RandomDist dist, Rng& rng);

SpectrumBounds spectrum_bounds(const Hamiltonian& h);
GroundKind classify_ground_state(const Hamiltonian& h, double tol = 1e-8);

// --- Graphs -------------------------------------------------------------------

Graph parse_graph(const std::string& text);   // "graph vertices=<n>" + "edge i j"
Graph load_graph_file(const std::string& path);
std::string graph_to_text(const Graph& g);

// the ten non-isomorphic, non-empty simple graphs on 4 vertices
std::vector<Graph> all_four_node_graphs();

Graph erdos_renyi(int n, double p, Rng& rng);
Graph random_regular(int n, int degree, Rng& rng);
Graph barabasi_albert(int n, int m, Rng& rng);

// --- Export -------------------------------------------------------------------

// metadata header plus one row per matrix row of "re,im" pairs
std::string hamiltonian_to_text(const Hamiltonian& h);
Hamiltonian parse_hamiltonian(const std::string& text);

} // namespace vqx
