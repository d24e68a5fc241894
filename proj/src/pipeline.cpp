#include "vqx/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace vqx {

namespace {

uint64_t fnv1a(const std::string& bytes, uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// stream of task seeds: (master, tag, a, b) -> uint64
uint64_t task_seed(uint64_t master, const std::string& tag, uint64_t a = 0, uint64_t b = 0) {
    uint64_t s = Rng::derive_seed(master, fnv1a(tag));
    s = Rng::derive_seed(s, a);
    return Rng::derive_seed(s, b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep)) {
        // trim
        const auto b = part.find_first_not_of(" \t\r");
        const auto e = part.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? "" : part.substr(b, e - b + 1));
    }
    return out;
}

void parallel_for(long n_items, int threads, const std::function<void(long)>& work) {
    if (threads <= 1 || n_items <= 1) {
        for (long i = 0; i < n_items; ++i) work(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    const int n_workers = static_cast<int>(std::min<long>(threads, n_items));
    for (int w = 0; w < n_workers; ++w)
        pool.emplace_back([&] {
            for (long i = next.fetch_add(1); i < n_items; i = next.fetch_add(1)) work(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// --- Config ----------------------------------------------------------------------

ExperimentConfig ExperimentConfig::from_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::map<std::string, std::string> kv;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const auto trim = [](std::string s) {
            const auto x = s.find_first_not_of(" \t\r");
            const auto y = s.find_last_not_of(" \t\r");
            return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": empty key or value");
        if (!kv.emplace(key, val).second)
            throw std::invalid_argument("duplicate config key " + key);
    }

    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    if (auto v = take("experiment.n_qubits")) cfg.n_qubits = std::stoi(*v);
    if (auto v = take("experiment.scale")) cfg.scale = *v;
    if (auto v = take("experiment.seed")) {
        cfg.seed = std::stoull(*v);
        cfg.seed_set = true;
    }
    if (auto v = take("experiment.threads")) cfg.threads = std::stoi(*v);
    if (auto v = take("experiment.out")) cfg.out_dir = *v;
    if (auto v = take("templates.ids")) {
        if (*v != "all") cfg.template_ids = split(*v, ',');
    }
    if (auto v = take("templates.layers")) {
        const auto dots = v->find("..");
        if (dots == std::string::npos) {
            cfg.layers_min = cfg.layers_max = std::stoi(*v);
        } else {
            cfg.layers_min = std::stoi(v->substr(0, dots));
            cfg.layers_max = std::stoi(v->substr(dots + 2));
        }
    }
    if (auto v = take("catalog.file")) cfg.catalog_file = *v;
    if (auto v = take("dataset.classes")) {
        if (*v != "all") cfg.dataset_classes = split(*v, ',');
    }
    if (auto v = take("dataset.mvc_penalty")) cfg.mvc_penalty = std::stod(*v);
    if (auto v = take("dataset.nondiagonal_terms")) cfg.nondiagonal_terms = std::stoi(*v);
    for (auto it = kv.begin(); it != kv.end();) {
        if (it->first.rfind("dataset.counts.", 0) == 0) {
            cfg.class_counts[it->first.substr(15)] = std::stoi(it->second);
            it = kv.erase(it);
        } else {
            ++it;
        }
    }
    bool k_set = false, n_runs_set = false;
    if (auto v = take("expressibility.k")) {
        cfg.k = std::stol(*v);
        k_set = true;
    }
    if (auto v = take("expressibility.threshold_k")) cfg.threshold_k = std::stol(*v);
    if (auto v = take("expressibility.deviation")) {
        if (*v == "population") cfg.deviation = DeviationMode::AsPublished;
        else if (*v == "standard_error") cfg.deviation = DeviationMode::StandardError;
        else throw std::invalid_argument("expressibility.deviation must be population|standard_error");
    }
    if (auto v = take("vqe.n_shots")) cfg.vqe.n_shots = std::stol(*v);
    if (auto v = take("vqe.n_runs")) {
        cfg.vqe.n_runs = std::stoi(*v);
        n_runs_set = true;
    }
    if (auto v = take("vqe.max_evals")) cfg.vqe.max_evals = std::stol(*v);
    if (auto v = take("vqe.rhobeg")) cfg.vqe.rhobeg = std::stod(*v);
    if (auto v = take("vqe.rhoend")) cfg.vqe.rhoend = std::stod(*v);
    if (auto v = take("vqe.optimizer")) {
        if (*v == "cobyla") cfg.vqe.optimizer = VqeConfig::Optimizer::Cobyla;
        else if (*v == "nelder_mead") cfg.vqe.optimizer = VqeConfig::Optimizer::NelderMead;
        else throw std::invalid_argument("vqe.optimizer must be cobyla|nelder_mead");
    }
    if (auto v = take("vqe.initial")) {
        if (*v == "uniform") cfg.vqe.initial = VqeConfig::InitialParams::UniformRandom;
        else if (*v == "zeros") cfg.vqe.initial = VqeConfig::InitialParams::Zeros;
        else throw std::invalid_argument("vqe.initial must be uniform|zeros");
    }
    if (auto v = take("vqe.shot_budget")) {
        if (*v == "per_term") cfg.vqe.shot_budget = ShotBudget::PerTerm;
        else if (*v == "split_evenly") cfg.vqe.shot_budget = ShotBudget::SplitEvenly;
        else throw std::invalid_argument("vqe.shot_budget must be per_term|split_evenly");
    }
    if (auto v = take("noise.profiles")) cfg.noise_profiles = split(*v, ',');
    if (auto v = take("topology.kind")) cfg.topology_kind = *v;
    if (auto v = take("topology.file")) cfg.topology_file = *v;

    if (!kv.empty()) throw std::invalid_argument("unknown config key " + kv.begin()->first);
    if (cfg.scale != "desk" && cfg.scale != "paper")
        throw std::invalid_argument("experiment.scale must be desk|paper");
    // scale defaults never override explicitly configured values
    if (!k_set) cfg.k = cfg.scale == "paper" ? 250000 : 50000;
    if (!n_runs_set) cfg.vqe.n_runs = cfg.scale == "paper" ? 10 : 5;
    return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_text(ss.str());
}

// resets the scale-dependent sampling defaults; used when --scale overrides
// the configured scale
void ExperimentConfig::apply_scale_defaults() {
    k = scale == "paper" ? 250000 : 50000;
    vqe.n_runs = scale == "paper" ? 10 : 5;
}

Topology ExperimentConfig::topology() const {
    if (!topology_file.empty()) return load_topology_file(topology_file);
    if (topology_kind == "line") return Topology::line(n_qubits);
    if (topology_kind == "ring") return Topology::ring(n_qubits);
    if (topology_kind == "full") return Topology::fully_connected(n_qubits);
    if (topology_kind == "default") return Topology::default_for(n_qubits);
    throw std::invalid_argument("unknown topology kind " + topology_kind);
}

const CircuitCatalog& ExperimentConfig::catalog() const {
    if (catalog_file.empty()) return CircuitCatalog::bundled();
    if (!loaded_catalog_) loaded_catalog_ = CircuitCatalog::load_file(catalog_file);
    return *loaded_catalog_;
}

std::vector<std::string> ExperimentConfig::resolved_template_ids() const {
    if (!template_ids.empty()) return template_ids;
    return catalog().template_ids(n_qubits);
}

std::string ExperimentConfig::to_json() const {
    // threads and the output directory are execution machinery, not part of
    // the experiment's identity; they live in the manifest instead
    json j;
    j["experiment"] = {{"n_qubits", n_qubits}, {"scale", scale}, {"seed", seed}};
    j["templates"] = {{"ids", resolved_template_ids()},
                      {"layers_min", layers_min},
                      {"layers_max", layers_max},
                      {"catalog_file", catalog_file}};
    json counts = json::object();
    for (const auto& [k_, v] : class_counts) counts[k_] = v;
    j["dataset"] = {{"classes", dataset_classes.empty()
                                    ? std::vector<std::string>{"all"}
                                    : dataset_classes},
                    {"counts", counts},
                    {"mvc_penalty", mvc_penalty},
                    {"nondiagonal_terms", nondiagonal_terms}};
    j["expressibility"] = {{"k", k},
                           {"threshold_k", threshold_k ? threshold_k : k},
                           {"deviation", deviation == DeviationMode::AsPublished
                                             ? "population"
                                             : "standard_error"}};
    j["vqe"] = {{"n_shots", vqe.n_shots},
                {"n_runs", vqe.n_runs},
                {"max_evals", vqe.max_evals},
                {"rhobeg", vqe.rhobeg},
                {"rhoend", vqe.rhoend},
                {"optimizer", vqe.optimizer == VqeConfig::Optimizer::Cobyla ? "cobyla"
                                                                            : "nelder_mead"},
                {"initial", vqe.initial == VqeConfig::InitialParams::UniformRandom ? "uniform"
                                                                                   : "zeros"},
                {"shot_budget",
                 vqe.shot_budget == ShotBudget::PerTerm ? "per_term" : "split_evenly"}};
    j["noise"] = {{"profiles", noise_profiles}};
    j["topology"] = {{"kind", topology_kind}, {"file", topology_file}};
    return j.dump(2) + "\n";
}

uint64_t ExperimentConfig::config_hash() const { return fnv1a(to_json()); }

// --- Dataset -----------------------------------------------------------------------

namespace {

struct ClassPlan {
    std::string name;
    int desk_count;
    int paper_count;
};

const std::vector<ClassPlan>& class_plans() {
    static const std::vector<ClassPlan> plans = {
        {"maxcut", 3, 10},          {"min_vertex_cover", 3, 10},
        {"max_clique", 3, 10},      {"random_diagonal", 6, 60},
        {"heisenberg_xxz", 6, 23},  {"transverse_ising", 6, 24},
        {"adiabatic", 9, 36},       {"random_nondiagonal", 6, 60},
    };
    return plans;
}

// evenly spread selection of `want` indices from [0, total)
std::vector<int> spread_indices(int total, int want) {
    std::vector<int> out;
    if (want >= total) {
        for (int i = 0; i < total; ++i) out.push_back(i);
        return out;
    }
    for (int i = 0; i < want; ++i) {
        const int idx = want == 1 ? 0
                                  : static_cast<int>(std::lround(
                                        static_cast<double>(i) * (total - 1) / (want - 1)));
        out.push_back(idx);
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string fmt_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::vector<Graph> dataset_graphs(const ExperimentConfig& cfg, const std::string& class_tag) {
    if (cfg.n_qubits == 4) return all_four_node_graphs();
    // 8-qubit families per the dataset table: Erdos-Renyi p in {0.3, 0.7},
    // 3-regular, Barabasi-Albert m=2; five graphs per family
    std::vector<Graph> out;
    int idx = 0;
    for (double p : {0.3, 0.7})
        for (int i = 0; i < 5; ++i) {
            Rng rng(task_seed(cfg.seed, "graph8_" + class_tag, idx++));
            out.push_back(erdos_renyi(8, p, rng));
        }
    for (int i = 0; i < 5; ++i) {
        Rng rng(task_seed(cfg.seed, "graph8_" + class_tag, idx++));
        out.push_back(random_regular(8, 3, rng));
    }
    for (int i = 0; i < 5; ++i) {
        Rng rng(task_seed(cfg.seed, "graph8_" + class_tag, idx++));
        out.push_back(barabasi_albert(8, 2, rng));
    }
    return out;
}

// (delta, g) grid of the Heisenberg dataset table, in declaration order
std::vector<std::pair<double, double>> heisenberg_grid() {
    std::vector<std::pair<double, double>> grid;
    for (double delta : {-1.5, -1.0, -0.5, 0.5, 1.0, 1.5}) {
        const double gc = 2.0 * (1.0 + delta);
        if (gc == 0.0) {
            for (double g : {-1.0, 0.0, 1.0}) grid.push_back({delta, g});
        } else {
            for (double g : {-gc, -gc / 2.0, gc / 2.0, gc}) grid.push_back({delta, g});
        }
    }
    return grid;
}

std::vector<std::pair<double, double>> ising_grid() {
    std::vector<std::pair<double, double>> grid;
    for (double j : {-1.0, -0.5, 0.5, 1.0})
        for (double g : {-1.5, -1.0, -0.5, 0.5, 1.0, 1.5}) grid.push_back({j, g});
    return grid;
}

// adiabatic base graphs: 4 nodes with 3/4/5/6 edges at n = 4; at n = 8 the
// table's 4-node wording cannot apply, so four fixed 8-node graphs of
// increasing density stand in
std::vector<Graph> adiabatic_graphs(int n_qubits) {
    std::vector<Graph> out;
    if (n_qubits == 4) {
        const auto all = all_four_node_graphs();
        for (int idx : {3, 6, 8, 9}) out.push_back(all[idx]); // P4, C4, K4-e, K4
        return out;
    }
    Graph path;
    path.n_vertices = 8;
    for (int i = 0; i + 1 < 8; ++i) path.add_edge(i, i + 1);
    Graph ring = path;
    ring.add_edge(0, 7);
    Graph ring_chords = ring;
    for (int i = 0; i < 4; ++i) ring_chords.add_edge(i, i + 4);
    Graph dense = ring_chords;
    for (int i = 0; i < 8; ++i) dense.add_edge(i, (i + 2) % 8);
    out = {path, ring, ring_chords, dense};
    return out;
}

int class_count(const ExperimentConfig& cfg, const ClassPlan& plan) {
    auto it = cfg.class_counts.find(plan.name);
    if (it != cfg.class_counts.end()) return it->second;
    const bool graph_class = plan.name == "maxcut" || plan.name == "min_vertex_cover" ||
                             plan.name == "max_clique";
    if (cfg.scale == "paper")
        // the 8-qubit table doubles the graph-problem instance counts
        return graph_class && cfg.n_qubits == 8 ? 2 * plan.paper_count : plan.paper_count;
    return graph_class && cfg.n_qubits == 8 ? 4 : plan.desk_count;
}

} // namespace

std::vector<DatasetInstance> build_dataset(const ExperimentConfig& cfg) {
    if (!cfg.seed_set) throw std::invalid_argument("config seed is mandatory");
    const int n = cfg.n_qubits;
    std::vector<std::string> wanted = cfg.dataset_classes;
    if (wanted.empty())
        for (const auto& p : class_plans()) wanted.push_back(p.name);

    std::vector<DatasetInstance> out;
    auto add = [&](std::string id, Hamiltonian h) {
        out.push_back(DatasetInstance{std::move(id), std::move(h)});
    };

    for (const std::string& name : wanted) {
        const auto plan_it =
            std::find_if(class_plans().begin(), class_plans().end(),
                         [&](const ClassPlan& p) { return p.name == name; });
        if (plan_it == class_plans().end())
            throw std::invalid_argument("unknown dataset class " + name);
        const int count = class_count(cfg, *plan_it);
        if (count <= 0) continue;

        if (name == "maxcut" || name == "min_vertex_cover" || name == "max_clique") {
            const auto graphs = dataset_graphs(cfg, name);
            const auto sel = spread_indices(static_cast<int>(graphs.size()), count);
            for (std::size_t i = 0; i < sel.size(); ++i) {
                char id[64];
                const char* prefix = name == "maxcut" ? "maxcut"
                                     : name == "min_vertex_cover" ? "mvc"
                                                                  : "clique";
                std::snprintf(id, sizeof(id), "%s_%02zu", prefix, i);
                const Graph& g = graphs[sel[i]];
                if (name == "maxcut") add(id, maxcut(g));
                else if (name == "min_vertex_cover") add(id, min_vertex_cover(g, cfg.mvc_penalty));
                else add(id, max_clique(g));
            }
        } else if (name == "random_diagonal" || name == "random_nondiagonal") {
            const bool diag = name == "random_diagonal";
            // default to sparse two-term combinations: denser random Pauli
            // sums self-average toward the Haar frame potential and level the
            // diagonal/non-diagonal expressibility contrast
            const int terms = cfg.nondiagonal_terms > 0 ? cfg.nondiagonal_terms : 2;
            const std::vector<std::pair<RandomDist, std::string>> dists = {
                {RandomDist::Uniform, "uniform"},
                {RandomDist::TruncNormal, "normal"},
                {RandomDist::LogUniform, "loguniform"},
            };
            const int base = count / 3, extra = count % 3;
            for (std::size_t di = 0; di < dists.size(); ++di) {
                const int c = base + (static_cast<int>(di) < extra ? 1 : 0);
                for (int i = 0; i < c; ++i) {
                    Rng rng(task_seed(cfg.seed, name + "_" + dists[di].second, i));
                    char id[64];
                    std::snprintf(id, sizeof(id), "%s_%s_%02d", diag ? "rdiag" : "rnd",
                                  dists[di].second.c_str(), i);
                    add(id, diag ? random_diagonal(n, dists[di].first, rng)
                                 : random_nondiagonal(n, dists[di].first, terms, rng));
                }
            }
        } else if (name == "heisenberg_xxz") {
            const auto grid = heisenberg_grid();
            for (int idx : spread_indices(static_cast<int>(grid.size()), count)) {
                const auto [delta, g] = grid[idx];
                add("heis_d" + fmt_param(delta) + "_g" + fmt_param(g),
                    heisenberg_xxz(n, delta, g));
            }
        } else if (name == "transverse_ising") {
            const auto grid = ising_grid();
            for (int idx : spread_indices(static_cast<int>(grid.size()), count)) {
                const auto [j, g] = grid[idx];
                add("ising_J" + fmt_param(j) + "_g" + fmt_param(g), transverse_ising(n, j, g));
            }
        } else if (name == "adiabatic") {
            const auto graphs = adiabatic_graphs(n);
            std::vector<std::tuple<std::string, int, double>> combos;
            for (const char* qubo : {"maxcut", "mvc", "clique"})
                for (std::size_t gi = 0; gi < graphs.size(); ++gi)
                    for (double s : {0.25, 0.5, 0.75})
                        combos.push_back({qubo, static_cast<int>(gi), s});
            for (int idx : spread_indices(static_cast<int>(combos.size()), count)) {
                const auto& [qubo, gi, s] = combos[idx];
                const Graph& g = graphs[gi];
                Hamiltonian hp = qubo == std::string("maxcut")
                                     ? maxcut(g)
                                     : qubo == std::string("mvc")
                                           ? min_vertex_cover(g, cfg.mvc_penalty)
                                           : max_clique(g);
                add("adia_" + qubo + "_g" + std::to_string(gi) + "_s" + fmt_param(s),
                    adiabatic(hp, s, ScheduleTable::bundled()));
            }
        }
    }
    return out;
}

NoiseModel resolve_noise_profile(const std::string& name) {
    if (name == "ideal") return NoiseModel::ideal();
    if (name == "paper-full") return NoiseModel::paper_profile(200e-6, 1.6e-4);
    if (name == "paper-intermediate") return NoiseModel::paper_profile(400e-6, 4e-5);
    if (name == "paper-low") return NoiseModel::paper_profile(1500e-6, 8e-6);
    if (name.rfind("file:", 0) == 0) return load_noise_profile_file(name.substr(5));
    throw std::invalid_argument("unknown noise profile '" + name + "'");
}

// --- Output helpers ------------------------------------------------------------------

namespace {

struct CsvWriter {
    std::ostringstream out;

    explicit CsvWriter(const std::string& header) {
        out << "# schema=1\n" << header << "\n";
    }
    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ",";
            out << cells[i];
        }
        out << "\n";
    }
    void write(const fs::path& path) const {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + path.string());
        f << out.str();
    }
};

struct ManifestBuilder {
    json j;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    ManifestBuilder(const std::string& command, const ExperimentConfig& cfg) {
        j["schema"] = 1;
        j["command"] = command;
        char hash[32];
        std::snprintf(hash, sizeof(hash), "%016llx",
                      static_cast<unsigned long long>(cfg.config_hash()));
        j["config_hash"] = hash;
        j["threads"] = cfg.threads;
        j["out_dir"] = cfg.out_dir;
        j["versions"] = {{"vqx", "0.1.0"}};
        j["artifacts"] = json::array();
        j["failures"] = json::array();
    }
    void finish(const fs::path& out_dir, const std::string& name, CommandOutcome& outcome) {
        for (const auto& a : outcome.artifacts) j["artifacts"].push_back(a);
        for (const auto& f : outcome.failures) j["failures"].push_back(f);
        j["timing_seconds"] = std::chrono::duration<double>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
        std::ofstream f(out_dir / name, std::ios::binary);
        f << j.dump(2) << "\n";
    }
};

fs::path prepare_out_dir(const ExperimentConfig& cfg, CommandOutcome& outcome) {
    const fs::path dir(cfg.out_dir);
    fs::create_directories(dir);
    std::ofstream f(dir / "resolved_config.json", std::ios::binary);
    f << cfg.to_json();
    outcome.artifacts.push_back((dir / "resolved_config.json").string());
    return dir;
}

struct CircuitKey {
    std::string template_id;
    int layers;
};

std::vector<CircuitKey> circuit_keys(const ExperimentConfig& cfg) {
    std::vector<CircuitKey> keys;
    for (const auto& id : cfg.resolved_template_ids())
        for (int l = cfg.layers_min; l <= cfg.layers_max; ++l) keys.push_back({id, l});
    return keys;
}

std::string ground_kind_name(GroundKind k) {
    return k == GroundKind::BasisState ? "basis" : "superposition";
}

// parsed CSV with "# schema" line skipped; returns header + rows
std::pair<std::vector<std::string>, std::vector<std::vector<std::string>>> read_csv(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV " + path);
    std::string line;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto cells = split(line, ',');
        if (header.empty()) header = std::move(cells);
        else rows.push_back(std::move(cells));
    }
    if (header.empty()) throw std::runtime_error("empty CSV " + path);
    return {header, rows};
}

long column_index(const std::vector<std::string>& header, const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw std::runtime_error("CSV is missing column " + name);
    return it - header.begin();
}

} // namespace

// --- Commands ------------------------------------------------------------------------

CommandOutcome cmd_dataset_gen(const ExperimentConfig& cfg) {
    CommandOutcome outcome;
    const fs::path dir = prepare_out_dir(cfg, outcome);
    ManifestBuilder manifest("dataset_gen", cfg);
    auto dataset = build_dataset(cfg);

    fs::create_directories(dir / "hamiltonians");
    CsvWriter index("id,class,n_qubits,diagonal,lambda_min,lambda_max,ground_kind");
    for (auto& inst : dataset) {
        inst.hamiltonian.ensure_bounds();
        const GroundKind gk = inst.hamiltonian.ensure_ground_kind();
        index.row({inst.id, problem_class_name(inst.hamiltonian.problem_class),
                   std::to_string(inst.hamiltonian.n_qubits),
                   inst.hamiltonian.is_diagonal ? "1" : "0",
                   format_double(inst.hamiltonian.bounds->lambda_min),
                   format_double(inst.hamiltonian.bounds->lambda_max),
                   ground_kind_name(gk)});
        const fs::path hp = dir / "hamiltonians" / (inst.id + ".txt");
        std::ofstream f(hp, std::ios::binary);
        f << hamiltonian_to_text(inst.hamiltonian);
        outcome.artifacts.push_back(hp.string());
    }
    index.write(dir / "dataset_index.csv");
    outcome.artifacts.push_back((dir / "dataset_index.csv").string());
    manifest.finish(dir, "manifest_dataset_gen.json", outcome);
    return outcome;
}

CommandOutcome cmd_expressibility(const ExperimentConfig& cfg) {
    CommandOutcome outcome;
    const fs::path dir = prepare_out_dir(cfg, outcome);
    ManifestBuilder manifest("expressibility", cfg);

    auto dataset = build_dataset(cfg);
    const auto keys = circuit_keys(cfg);
    const long threshold_k = cfg.threshold_k > 0 ? cfg.threshold_k : cfg.k;

    // thresholds once per Hamiltonian, shared by all circuits
    std::vector<HaarThresholds> thresholds(dataset.size());
    std::vector<double> f_haar(dataset.size());
    parallel_for(static_cast<long>(dataset.size()),
                 dataset.size() > 1 ? cfg.threads : 1, [&](long hi) {
                     Rng rng(task_seed(cfg.seed, "thresholds", hi));
                     f_haar[hi] = haar_frame_potential(dataset[hi].hamiltonian);
                     thresholds[hi] =
                         haar_thresholds(dataset[hi].hamiltonian, threshold_k, rng,
                                         cfg.deviation,
                                         dataset.size() > 1 ? 1 : cfg.threads);
                 });

    const long n_items = static_cast<long>(keys.size() * dataset.size());
    std::vector<std::optional<ExpressibilityRecord>> records(n_items);
    std::vector<std::string> failures(n_items);
    parallel_for(n_items, n_items > 1 ? cfg.threads : 1, [&](long item) {
        const long ci = item / static_cast<long>(dataset.size());
        const long hi = item % static_cast<long>(dataset.size());
        try {
            const CircuitTemplate t =
                build_template(cfg.catalog(), keys[ci].template_id, cfg.n_qubits,
                               keys[ci].layers);
            const uint64_t seed = task_seed(cfg.seed, "frame", ci, hi);
            Rng rng(seed);
            ExpressibilityRecord rec;
            rec.template_id = keys[ci].template_id;
            rec.layers = keys[ci].layers;
            rec.n_qubits = cfg.n_qubits;
            rec.hamiltonian_id = dataset[hi].id;
            rec.k = cfg.k;
            rec.estimate = estimate_frame_potential(t, dataset[hi].hamiltonian, cfg.k, rng,
                                                    cfg.deviation,
                                                    n_items > 1 ? 1 : cfg.threads);
            rec.f_haar = f_haar[hi];
            rec.result = adjusted_metrics(rec.estimate, rec.f_haar, thresholds[hi]);
            rec.seed = seed;
            records[item] = std::move(rec);
        } catch (const std::exception& e) {
            failures[item] = keys[ci].template_id + "/L" + std::to_string(keys[ci].layers) +
                             "/" + dataset[hi].id + ": " + e.what();
        }
    });

    CsvWriter csv(
        "template_id,layers,n_qubits,hamiltonian_id,k,f_tilde,sigma_tilde,err,f_haar,"
        "epsilon,epsilon_lo,epsilon_hi,gamma,gamma_lo,gamma_hi,threshold_epsilon,"
        "threshold_gamma,maximal_flag,seed");
    for (long i = 0; i < n_items; ++i) {
        if (!records[i]) {
            if (!failures[i].empty()) outcome.failures.push_back(failures[i]);
            continue;
        }
        const auto& r = *records[i];
        csv.row({r.template_id, std::to_string(r.layers), std::to_string(r.n_qubits),
                 r.hamiltonian_id, std::to_string(r.k), format_double(r.estimate.f_tilde),
                 format_double(r.estimate.sigma_tilde), format_double(r.estimate.err),
                 format_double(r.f_haar), format_double(r.result.epsilon),
                 format_double(r.result.epsilon_ci.lo), format_double(r.result.epsilon_ci.hi),
                 format_double(r.result.gamma), format_double(r.result.gamma_ci.lo),
                 format_double(r.result.gamma_ci.hi), format_double(r.result.threshold_epsilon),
                 format_double(r.result.threshold_gamma),
                 r.result.maximally_expressive ? "1" : "0", std::to_string(r.seed)});
    }
    csv.write(dir / "expressibility.csv");
    outcome.artifacts.push_back((dir / "expressibility.csv").string());
    manifest.finish(dir, "manifest_expressibility.json", outcome);
    outcome.exit_code = outcome.failures.empty() ? 0 : 3;
    return outcome;
}

CommandOutcome cmd_vqe(const ExperimentConfig& cfg) {
    CommandOutcome outcome;
    const fs::path dir = prepare_out_dir(cfg, outcome);
    ManifestBuilder manifest("vqe", cfg);

    auto dataset = build_dataset(cfg);
    const auto keys = circuit_keys(cfg);
    const Topology topo = cfg.topology();

    const std::string profile_name =
        cfg.noise_profiles.empty() ? "ideal" : cfg.noise_profiles.front();
    const NoiseModel noise = resolve_noise_profile(profile_name);
    const bool noisy = !noise.is_ideal();
    const double profile_err =
        noisy ? error_rate(noise, topo, GateSet::native(), cfg.n_qubits).err_total : 0.0;
    const Executor exec = noisy ? Executor::noisy(noise, topo) : Executor::ideal(topo);

    for (auto& inst : dataset) inst.hamiltonian.ensure_bounds();

    const long n_items = static_cast<long>(keys.size() * dataset.size());
    std::vector<std::optional<ExperimentResult>> results(n_items);
    std::vector<uint64_t> seeds(n_items);
    std::vector<std::string> failures(n_items);
    parallel_for(n_items, n_items > 1 ? cfg.threads : 1, [&](long item) {
        const long ci = item / static_cast<long>(dataset.size());
        const long hi = item % static_cast<long>(dataset.size());
        try {
            const CircuitTemplate t =
                build_template(cfg.catalog(), keys[ci].template_id, cfg.n_qubits,
                               keys[ci].layers);
            seeds[item] = task_seed(cfg.seed, "vqe", ci, hi);
            results[item] =
                run_experiment(t, dataset[hi].hamiltonian, exec, cfg.vqe, seeds[item]);
        } catch (const std::exception& e) {
            failures[item] = keys[ci].template_id + "/L" + std::to_string(keys[ci].layers) +
                             "/" + dataset[hi].id + ": " + e.what();
        }
    });

    CsvWriter runs_csv("template_id,layers,hamiltonian_id,run_index,seed,eval_count,"
                       "best_energy,ar");
    CsvWriter agg_csv("template_id,layers,hamiltonian_id,ar_mean,ar_std,noise_err");
    for (long i = 0; i < n_items; ++i) {
        const long ci = i / static_cast<long>(dataset.size());
        const long hi = i % static_cast<long>(dataset.size());
        if (!results[i]) {
            if (!failures[i].empty()) outcome.failures.push_back(failures[i]);
            continue;
        }
        const auto& res = *results[i];
        for (std::size_t r = 0; r < res.per_run.size(); ++r) {
            const auto& run = res.per_run[r];
            runs_csv.row({keys[ci].template_id, std::to_string(keys[ci].layers),
                          dataset[hi].id, std::to_string(r), std::to_string(run.seed),
                          std::to_string(run.eval_count), format_double(run.best_energy),
                          format_double(run.ar)});
        }
        agg_csv.row({keys[ci].template_id, std::to_string(keys[ci].layers), dataset[hi].id,
                     format_double(res.ar_mean), format_double(res.ar_std),
                     format_double(profile_err)});
    }
    runs_csv.write(dir / "vqe_runs.csv");
    agg_csv.write(dir / "vqe_aggregate.csv");
    outcome.artifacts.push_back((dir / "vqe_runs.csv").string());
    outcome.artifacts.push_back((dir / "vqe_aggregate.csv").string());
    manifest.finish(dir, "manifest_vqe.json", outcome);
    outcome.exit_code = outcome.failures.empty() ? 0 : 3;
    return outcome;
}

CommandOutcome cmd_correlate(const ExperimentConfig& cfg, const std::string& expr_csv,
                             const std::string& vqe_csv) {
    CommandOutcome outcome;
    const fs::path dir = prepare_out_dir(cfg, outcome);
    ManifestBuilder manifest("correlate", cfg);

    const auto [eh, erows] = read_csv(expr_csv);
    const auto [vh, vrows] = read_csv(vqe_csv);
    const long e_tid = column_index(eh, "template_id"), e_lay = column_index(eh, "layers"),
               e_ham = column_index(eh, "hamiltonian_id"), e_eps = column_index(eh, "epsilon"),
               e_gam = column_index(eh, "gamma");
    const long v_tid = column_index(vh, "template_id"), v_lay = column_index(vh, "layers"),
               v_ham = column_index(vh, "hamiltonian_id"), v_ar = column_index(vh, "ar_mean"),
               v_err = column_index(vh, "noise_err");

    struct Entry {
        double epsilon, gamma, ar;
        bool have_expr = false, have_vqe = false;
    };
    std::map<std::tuple<std::string, std::string, std::string>, Entry> joined;
    for (const auto& row : erows) {
        auto& e = joined[{row[e_ham], row[e_tid], row[e_lay]}];
        e.epsilon = std::stod(row[e_eps]);
        e.gamma = std::stod(row[e_gam]);
        e.have_expr = true;
    }
    double noise_err = 0.0;
    for (const auto& row : vrows) {
        auto& e = joined[{row[v_ham], row[v_tid], row[v_lay]}];
        e.ar = std::stod(row[v_ar]);
        e.have_vqe = true;
        noise_err = std::stod(row[v_err]);
    }
    for (const auto& [key, e] : joined)
        if (!e.have_expr || !e.have_vqe) {
            outcome.exit_code = 2;
            outcome.failures.push_back("join key mismatch at " + std::get<0>(key) + "/" +
                                       std::get<1>(key) + "/L" + std::get<2>(key));
        }
    if (outcome.exit_code == 2) {
        manifest.finish(dir, "manifest_correlate.json", outcome);
        return outcome; // no partial output on key mismatch
    }

    // class/subclass lookup from the deterministic dataset
    auto dataset = build_dataset(cfg);
    std::map<std::string, ClassKey> class_of;
    for (auto& inst : dataset) {
        ClassKey key{inst.hamiltonian.problem_class, std::nullopt};
        if (inst.hamiltonian.problem_class == ProblemClass::HeisenbergXXZ)
            key.subclass = inst.hamiltonian.ensure_ground_kind();
        class_of[inst.id] = key;
    }

    std::map<std::string, std::vector<std::tuple<std::string, std::string, Entry>>> per_ham;
    for (const auto& [key, e] : joined)
        per_ham[std::get<0>(key)].push_back({std::get<1>(key), std::get<2>(key), e});

    std::vector<InstanceReport> eps_reports, gam_reports;
    for (const auto& [ham_id, entries] : per_ham) {
        const auto cls_it = class_of.find(ham_id);
        if (cls_it == class_of.end()) {
            outcome.exit_code = 2;
            outcome.failures.push_back("hamiltonian " + ham_id +
                                       " is not in the configured dataset");
            manifest.finish(dir, "manifest_correlate.json", outcome);
            return outcome;
        }
        PairedSeries eps_series, gam_series;
        CsvWriter scatter("template_id,layers,epsilon,gamma,ar");
        for (const auto& [tid, lay, e] : entries) {
            eps_series.x.push_back(e.epsilon);
            eps_series.y.push_back(e.ar);
            gam_series.x.push_back(e.gamma);
            gam_series.y.push_back(e.ar);
            eps_series.labels.push_back(tid + "/L" + lay);
            scatter.row({tid, lay, format_double(e.epsilon), format_double(e.gamma),
                         format_double(e.ar)});
        }
        scatter.write(dir / ("scatter_" + ham_id + ".csv"));
        outcome.artifacts.push_back((dir / ("scatter_" + ham_id + ".csv")).string());
        try {
            eps_reports.push_back({cls_it->second, ham_id, correlation_report(eps_series)});
            gam_reports.push_back({cls_it->second, ham_id, correlation_report(gam_series)});
        } catch (const std::exception& e) {
            outcome.failures.push_back(ham_id + ": " + e.what());
        }
    }

    CsvWriter csv("class,subclass,n_instances,pearson_mean,pearson_std,spearman_mean,"
                  "spearman_std,kendall_mean,kendall_std,mi_mean,mi_std,metric,noise_err");
    auto emit = [&](const std::vector<InstanceReport>& reports, const std::string& metric) {
        if (reports.empty()) return;
        for (const auto& agg : aggregate_by_class(reports)) {
            csv.row({problem_class_name(agg.key.problem_class),
                     agg.key.subclass ? ground_kind_name(*agg.key.subclass) : "all",
                     std::to_string(agg.n_instances), format_double(agg.pearson_mean),
                     format_double(agg.pearson_std), format_double(agg.spearman_mean),
                     format_double(agg.spearman_std), format_double(agg.kendall_mean),
                     format_double(agg.kendall_std), format_double(agg.mi_mean),
                     format_double(agg.mi_std), metric, format_double(noise_err)});
        }
    };
    emit(eps_reports, "epsilon");
    emit(gam_reports, "gamma");
    csv.write(dir / "correlations.csv");
    outcome.artifacts.push_back((dir / "correlations.csv").string());
    manifest.finish(dir, "manifest_correlate.json", outcome);
    if (outcome.exit_code == 0 && !outcome.failures.empty()) outcome.exit_code = 3;
    return outcome;
}

std::vector<NoiseSweepPoint> noise_sweep(const std::vector<CircuitTemplate>& templates,
                                         Hamiltonian& h,
                                         const std::vector<std::string>& profiles,
                                         const ExperimentConfig& cfg) {
    if (profiles.empty()) throw std::invalid_argument("noise sweep needs >= 1 profile");
    const Topology topo = cfg.topology();
    h.ensure_bounds();

    // expressibility once per circuit (noise-independent)
    Rng thr_rng(task_seed(cfg.seed, "sweep_thresholds"));
    const long threshold_k = cfg.threshold_k > 0 ? cfg.threshold_k : cfg.k;
    const HaarThresholds thresholds = haar_thresholds(h, threshold_k, thr_rng, cfg.deviation);
    const double f_haar = haar_frame_potential(h);
    std::vector<double> epsilons(templates.size()), gammas(templates.size());
    parallel_for(static_cast<long>(templates.size()), cfg.threads, [&](long i) {
        Rng rng(task_seed(cfg.seed, "sweep_frame", i));
        const auto est = estimate_frame_potential(templates[i], h, cfg.k, rng, cfg.deviation);
        const auto res = adjusted_metrics(est, f_haar, thresholds);
        epsilons[i] = res.epsilon;
        gammas[i] = res.gamma;
    });

    std::vector<NoiseSweepPoint> points;
    for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
        const NoiseModel noise = resolve_noise_profile(profiles[pi]);
        const bool noisy = !noise.is_ideal();
        NoiseSweepPoint point;
        point.profile = profiles[pi];
        point.err =
            noisy ? error_rate(noise, topo, GateSet::native(), cfg.n_qubits).err_total : 0.0;
        const Executor exec = noisy ? Executor::noisy(noise, topo) : Executor::ideal(topo);

        std::vector<double> ars(templates.size());
        parallel_for(static_cast<long>(templates.size()), cfg.threads, [&](long i) {
            const uint64_t seed = task_seed(cfg.seed, "sweep_vqe_" + profiles[pi], i);
            ars[i] = run_experiment(templates[i], h, exec, cfg.vqe, seed).ar_mean;
        });

        PairedSeries eps_series{epsilons, ars, {}}, gam_series{gammas, ars, {}};
        point.epsilon_report = correlation_report(eps_series);
        point.gamma_report = correlation_report(gam_series);
        points.push_back(std::move(point));
    }
    return points;
}

CommandOutcome cmd_noise_sweep(const ExperimentConfig& cfg) {
    CommandOutcome outcome;
    if (cfg.noise_profiles.size() < 2) {
        outcome.exit_code = 2;
        outcome.failures.push_back("noise sweep needs >= 2 profiles");
        return outcome;
    }
    const fs::path dir = prepare_out_dir(cfg, outcome);
    ManifestBuilder manifest("noise_sweep", cfg);

    auto dataset = build_dataset(cfg);
    std::vector<CircuitTemplate> templates;
    for (const auto& key : circuit_keys(cfg))
        templates.push_back(
            build_template(cfg.catalog(), key.template_id, cfg.n_qubits, key.layers));

    CsvWriter csv("hamiltonian_id,profile,err,metric,pearson,spearman,kendall,mutual_info,n");
    for (auto& inst : dataset) {
        try {
            const auto points = noise_sweep(templates, inst.hamiltonian, cfg.noise_profiles, cfg);
            for (const auto& p : points) {
                csv.row({inst.id, p.profile, format_double(p.err), "epsilon",
                         format_double(p.epsilon_report.pearson),
                         format_double(p.epsilon_report.spearman),
                         format_double(p.epsilon_report.kendall),
                         format_double(p.epsilon_report.mutual_info),
                         std::to_string(p.epsilon_report.n)});
                csv.row({inst.id, p.profile, format_double(p.err), "gamma",
                         format_double(p.gamma_report.pearson),
                         format_double(p.gamma_report.spearman),
                         format_double(p.gamma_report.kendall),
                         format_double(p.gamma_report.mutual_info),
                         std::to_string(p.gamma_report.n)});
            }
        } catch (const std::exception& e) {
            outcome.failures.push_back(inst.id + ": " + e.what());
        }
    }
    csv.write(dir / "noise_sweep.csv");
    outcome.artifacts.push_back((dir / "noise_sweep.csv").string());
    manifest.finish(dir, "manifest_noise_sweep.json", outcome);
    outcome.exit_code = outcome.failures.empty() ? 0 : 3;
    return outcome;
}

} // namespace vqx
