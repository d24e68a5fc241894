#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vqx/analysis.hpp"
#include "vqx/expressibility.hpp"
#include "vqx/noise.hpp"
#include "vqx/pipeline.hpp"
#include "vqx/vqe.hpp"

namespace py = pybind11;
using namespace vqx;

namespace {

Graph graph_from_edges(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.n_vertices = n_vertices;
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
}

RandomDist dist_from_name(const std::string& name) {
    if (name == "uniform") return RandomDist::Uniform;
    if (name == "normal") return RandomDist::TruncNormal;
    if (name == "loguniform") return RandomDist::LogUniform;
    throw std::invalid_argument("distribution must be uniform|normal|loguniform");
}

Topology topology_from_name(const std::string& kind, int n_qubits) {
    if (kind == "line") return Topology::line(n_qubits);
    if (kind == "ring") return Topology::ring(n_qubits);
    if (kind == "full") return Topology::fully_connected(n_qubits);
    if (kind == "default") return Topology::default_for(n_qubits);
    throw std::invalid_argument("topology must be line|ring|full|default");
}

ExpressibilityResult estimate_expressibility(const CircuitTemplate& t, Hamiltonian& h, long k,
                                             long threshold_k, uint64_t seed, int threads) {
    Rng thr_rng(Rng::derive_seed(seed, 0x7117));
    const HaarThresholds thr =
        haar_thresholds(h, threshold_k > 0 ? threshold_k : k, thr_rng,
                        DeviationMode::AsPublished, threads);
    Rng rng(seed);
    const auto est =
        estimate_frame_potential(t, h, k, rng, DeviationMode::AsPublished, threads);
    return adjusted_metrics(est, haar_frame_potential(h), thr);
}

ExperimentResult run_vqe(const CircuitTemplate& t, Hamiltonian& h, uint64_t seed,
                         long n_shots, int n_runs, long max_evals, double rhoend,
                         const std::string& noise_profile, const std::string& topology) {
    const Topology topo = topology_from_name(topology, t.n_qubits);
    const NoiseModel model = resolve_noise_profile(noise_profile);
    const Executor exec =
        model.is_ideal() ? Executor::ideal(topo) : Executor::noisy(model, topo);
    VqeConfig cfg;
    cfg.n_shots = n_shots;
    cfg.n_runs = n_runs;
    cfg.max_evals = max_evals;
    cfg.rhoend = rhoend;
    return run_experiment(t, h, exec, cfg, seed);
}

} // namespace

PYBIND11_MODULE(_vqx, m) {
    m.doc() = "Hamiltonian expressibility estimation, shot-based VQE, and correlation "
              "analysis for parametrized quantum circuits";

    py::class_<CircuitTemplate>(m, "CircuitTemplate")
        .def_readonly("template_id", &CircuitTemplate::template_id)
        .def_readonly("n_qubits", &CircuitTemplate::n_qubits)
        .def_readonly("layers", &CircuitTemplate::layers)
        .def_readonly("param_count", &CircuitTemplate::param_count)
        .def("__repr__", [](const CircuitTemplate& t) {
            return "<CircuitTemplate " + t.template_id + " qubits=" +
                   std::to_string(t.n_qubits) + " layers=" + std::to_string(t.layers) +
                   " params=" + std::to_string(t.param_count) + ">";
        });

    py::class_<Hamiltonian>(m, "Hamiltonian")
        .def_property_readonly("matrix",
                               [](const Hamiltonian& h) { return h.matrix; })
        .def_readonly("n_qubits", &Hamiltonian::n_qubits)
        .def_readonly("is_diagonal", &Hamiltonian::is_diagonal)
        .def_property_readonly("problem_class",
                               [](const Hamiltonian& h) {
                                   return problem_class_name(h.problem_class);
                               })
        .def("spectrum_bounds",
             [](Hamiltonian& h) {
                 const auto b = h.ensure_bounds();
                 return std::make_pair(b.lambda_min, b.lambda_max);
             })
        .def("ground_kind", [](Hamiltonian& h) {
            return h.ensure_ground_kind() == GroundKind::BasisState ? "basis"
                                                                    : "superposition";
        });

    py::class_<FramePotentialEstimate>(m, "FramePotentialEstimate")
        .def_readonly("f_tilde", &FramePotentialEstimate::f_tilde)
        .def_readonly("sigma_tilde", &FramePotentialEstimate::sigma_tilde)
        .def_readonly("err", &FramePotentialEstimate::err)
        .def_readonly("k", &FramePotentialEstimate::k)
        .def_readonly("t_star", &FramePotentialEstimate::t_star);

    py::class_<ExpressibilityResult>(m, "ExpressibilityResult")
        .def_readonly("epsilon", &ExpressibilityResult::epsilon)
        .def_readonly("gamma", &ExpressibilityResult::gamma)
        .def_readonly("threshold_epsilon", &ExpressibilityResult::threshold_epsilon)
        .def_readonly("threshold_gamma", &ExpressibilityResult::threshold_gamma)
        .def_readonly("maximally_expressive", &ExpressibilityResult::maximally_expressive)
        .def_property_readonly("epsilon_ci",
                               [](const ExpressibilityResult& r) {
                                   return std::make_pair(r.epsilon_ci.lo, r.epsilon_ci.hi);
                               })
        .def_property_readonly("gamma_ci", [](const ExpressibilityResult& r) {
            return std::make_pair(r.gamma_ci.lo, r.gamma_ci.hi);
        });

    py::class_<VqeRun>(m, "VqeRun")
        .def_readonly("best_energy", &VqeRun::best_energy)
        .def_readonly("eval_count", &VqeRun::eval_count)
        .def_readonly("ar", &VqeRun::ar)
        .def_readonly("best_params", &VqeRun::best_params);

    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("ar_mean", &ExperimentResult::ar_mean)
        .def_readonly("ar_std", &ExperimentResult::ar_std)
        .def_readonly("per_run", &ExperimentResult::per_run);

    // circuits
    m.def("build_template",
          py::overload_cast<const std::string&, int, int>(&build_template),
          py::arg("template_id"), py::arg("n_qubits"), py::arg("layers") = 1,
          "catalog or generic pattern lookup with layer replication");
    m.def("catalog_template_ids",
          [](int n_qubits) { return CircuitCatalog::bundled().template_ids(n_qubits); },
          py::arg("n_qubits") = 4);
    m.def("catalog_text", [] { return std::string(bundled_catalog_text()); });
    m.def("circuit_unitary",
          [](const CircuitTemplate& t, const std::vector<double>& params) {
              return circuit_unitary(t, params).matrix;
          });

    // hamiltonians
    m.def("maxcut",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              return maxcut(graph_from_edges(n, edges));
          },
          py::arg("n_vertices"), py::arg("edges"));
    m.def("min_vertex_cover",
          [](int n, const std::vector<std::pair<int, int>>& edges, double penalty) {
              return min_vertex_cover(graph_from_edges(n, edges), penalty);
          },
          py::arg("n_vertices"), py::arg("edges"), py::arg("penalty") = 8.0);
    m.def("max_clique",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
              return max_clique(graph_from_edges(n, edges));
          },
          py::arg("n_vertices"), py::arg("edges"));
    m.def("heisenberg_xxz", &heisenberg_xxz, py::arg("n"), py::arg("delta"), py::arg("g"));
    m.def("transverse_ising", &transverse_ising, py::arg("n"), py::arg("j"), py::arg("g"));
    m.def("adiabatic",
          [](const Hamiltonian& hp, double s) {
              return adiabatic(hp, s, ScheduleTable::bundled());
          },
          py::arg("problem_hamiltonian"), py::arg("s"),
          "anneal-interpolated Hamiltonian under the bundled schedule");
    m.def("random_diagonal",
          [](int n, const std::string& dist, uint64_t seed) {
              Rng rng(seed);
              return random_diagonal(n, dist_from_name(dist), rng);
          },
          py::arg("n"), py::arg("dist") = "uniform", py::arg("seed") = 0);
    m.def("random_nondiagonal",
          [](int n, const std::string& dist, int n_terms, uint64_t seed) {
              Rng rng(seed);
              return random_nondiagonal(n, dist_from_name(dist), n_terms, rng);
          },
          py::arg("n"), py::arg("dist") = "uniform", py::arg("n_terms") = 2,
          py::arg("seed") = 0);

    // expressibility
    m.def("haar_frame_potential", &haar_frame_potential, py::arg("hamiltonian"));
    m.def("estimate_frame_potential",
          [](const CircuitTemplate& t, Hamiltonian& h, long k, uint64_t seed, int threads) {
              Rng rng(seed);
              return estimate_frame_potential(t, h, k, rng, DeviationMode::AsPublished,
                                              threads);
          },
          py::arg("template"), py::arg("hamiltonian"), py::arg("k"), py::arg("seed"),
          py::arg("threads") = 1);
    m.def("estimate_expressibility", &estimate_expressibility, py::arg("template"),
          py::arg("hamiltonian"), py::arg("k") = 50000, py::arg("threshold_k") = 0,
          py::arg("seed") = 0, py::arg("threads") = 1,
          "frame-potential estimate plus Haar thresholds and clipped metrics");

    // vqe
    m.def("run_vqe", &run_vqe, py::arg("template"), py::arg("hamiltonian"), py::arg("seed"),
          py::arg("n_shots") = 1000, py::arg("n_runs") = 5, py::arg("max_evals") = 1000,
          py::arg("rhoend") = 1e-4, py::arg("noise_profile") = "ideal",
          py::arg("topology") = "default");

    // noise
    m.def("error_rate",
          [](const std::string& profile, const std::string& topology, int n_qubits) {
              const NoiseModel model = resolve_noise_profile(profile);
              const Topology topo = topology_from_name(topology, n_qubits);
              return error_rate(model, topo, GateSet::native(), n_qubits).err_total;
          },
          py::arg("profile"), py::arg("topology") = "default", py::arg("n_qubits") = 4);

    // analysis
    m.def("pearson", &pearson, py::arg("x"), py::arg("y"));
    m.def("spearman", &spearman, py::arg("x"), py::arg("y"));
    m.def("kendall_tau", &kendall_tau, py::arg("x"), py::arg("y"));
    m.def("mutual_information", &mutual_information, py::arg("x"), py::arg("y"),
          py::arg("bins") = 0);
}
