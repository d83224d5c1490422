#include "ga_command.hpp"

#include <cstdlib>
#include <set>
#include <sstream>
#include <variant>

#include <nlohmann/json.hpp>

#include "io.hpp"
#include "qgx/errors.hpp"
#include "qgx/ga/engine.hpp"
#include "qgx/ga/problems.hpp"

namespace qgx::cli {

namespace {

using nlohmann::json;
using namespace qgx::ga;

void allow_keys(const json& j, const char* where, std::initializer_list<const char*> keys) {
    if (!j.is_object()) throw ConfigError(std::string(where) + " must be an object");
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw ConfigError(std::string("unknown key '") + k + "' in " + where);
}

template <class T>
T get(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("bad value for '") + key + "'");
    }
}

template <class T>
T need(const json& j, const char* key) {
    if (!j.contains(key)) throw ConfigError(std::string("missing key '") + key + "'");
    return get<T>(j, key, T{});
}

AdjacencyMatrix load_graph(const json& p) {
    if (p.contains("graph_file")) return parse_edge_list(read_file(need<std::string>(p, "graph_file")));
    return random_graph(need<std::size_t>(p, "nodes"), get(p, "edge_probability", 0.2), get<std::uint64_t>(p, "graph_seed", 1));
}

SymmetricFunction load_function(const json& p) {
    const auto f = parse_symmetric_function(need<std::string>(p, "function"));
    if (!f) throw ConfigError("unknown symmetric function '" + p.at("function").get<std::string>() + "'");
    return *f;
}

using AnyProblem = std::variant<Problem<SymbolVector>, Problem<RealVector>, Problem<Permutation>, Problem<AdjacencyMatrix>,
                                Problem<Sequence>>;

AnyProblem load_problem(const json& p) {
    const auto type = need<std::string>(p, "type");
    if (type == "partition") {
        allow_keys(p, "problem", {"type", "graph_file", "nodes", "edge_probability", "graph_seed", "k", "imbalance_weight"});
        return make_partition_problem(load_graph(p), need<int>(p, "k"), get(p, "imbalance_weight", 1.0));
    }
    if (type == "coloring") {
        allow_keys(p, "problem", {"type", "graph_file", "nodes", "edge_probability", "graph_seed", "k"});
        return make_coloring_problem(load_graph(p), need<int>(p, "k"));
    }
    if (type == "tsp") {
        allow_keys(p, "problem", {"type", "cities", "file", "random_cities", "instance_seed"});
        if (p.contains("file")) return make_tsp_problem(parse_tsp(read_file(need<std::string>(p, "file"))));
        if (p.contains("cities")) {
            TspInstance inst;
            for (const auto& c : p.at("cities")) {
                if (!c.is_array() || c.size() != 2) throw ConfigError("cities must be [x, y] pairs");
                inst.cities.emplace_back(c[0].get<double>(), c[1].get<double>());
            }
            return make_tsp_problem(std::move(inst));
        }
        return make_tsp_problem(random_tsp(need<std::size_t>(p, "random_cities"), get<std::uint64_t>(p, "instance_seed", 1)));
    }
    if (type == "symmetric_real") {
        allow_keys(p, "problem", {"type", "function", "dimension", "lower", "upper"});
        return make_symmetric_real_problem(load_function(p), need<std::size_t>(p, "dimension"), get(p, "lower", -5.0),
                                           get(p, "upper", 5.0));
    }
    if (type == "symmetric_discrete") {
        allow_keys(p, "problem", {"type", "function", "dimension", "k"});
        return make_symmetric_discrete_problem(load_function(p), need<std::size_t>(p, "dimension"), need<int>(p, "k"));
    }
    if (type == "degree_sequence") {
        allow_keys(p, "problem", {"type", "degrees", "edge_probability"});
        return make_degree_sequence_problem(need<std::vector<int>>(p, "degrees"), get(p, "edge_probability", 0.3));
    }
    if (type == "sequence_match") {
        allow_keys(p, "problem", {"type", "target", "alphabet", "min_length", "max_length"});
        try {
            return make_sequence_match_problem(Sequence(need<std::string>(p, "target")), get<std::string>(p, "alphabet", "acgt"),
                                               get<std::size_t>(p, "min_length", 1), get<std::size_t>(p, "max_length", 20));
        } catch (const InputError& e) {
            throw ConfigError(e.what());
        }
    }
    throw ConfigError("unknown problem type '" + type + "'");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::size_t thread_count(const json& ga) {
    const char* env = std::getenv("QGX_THREADS");
    std::optional<std::size_t> cap;
    if (env && *env) {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (*end != '\0' || v < 1) throw ConfigError("QGX_THREADS must be a positive integer");
        cap = static_cast<std::size_t>(v);
    }
    if (ga.contains("threads")) {
        const auto t = get<std::size_t>(ga, "threads", 1);
        return cap ? std::min(t, *cap) : t;
    }
    return cap.value_or(1);
}

} // namespace

void run_ga_command(const std::string& config_path, const std::string& out_path, const GaOverrides& overrides,
                    std::ostream& out) {
    json root;
    try {
        root = json::parse(read_file(config_path));
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    allow_keys(root, "config", {"problem", "family", "mode", "ga", "operators"});

    const json ga = root.value("ga", json::object());
    allow_keys(ga, "ga", {"population_size", "generations", "crossover_rate", "mutation_rate", "tournament_size", "seed",
                          "threads"});
    GAConfig config;
    config.population_size = get(ga, "population_size", config.population_size);
    config.generations = get(ga, "generations", config.generations);
    config.crossover_rate = get(ga, "crossover_rate", config.crossover_rate);
    config.mutation_rate = get(ga, "mutation_rate", config.mutation_rate);
    config.tournament_size = get(ga, "tournament_size", config.tournament_size);
    config.seed = overrides.seed.value_or(get(ga, "seed", config.seed));
    config.threads = thread_count(ga);
    const auto mode_name = overrides.mode.value_or(get<std::string>(root, "mode", "quotient"));
    const auto mode = parse_mode(mode_name);
    if (!mode) throw ConfigError("unknown mode '" + mode_name + "'");
    config.mode = *mode;
    config.validate();

    const json ops = root.value("operators", json::object());
    allow_keys(ops, "operators", {"mutation_sigma", "permutation_metric", "graph_restarts", "sequence_alphabet"});
    OperatorOptions options;
    options.mutation_sigma = get(ops, "mutation_sigma", options.mutation_sigma);
    if (ops.contains("permutation_metric")) {
        const auto m = parse_permutation_metric(need<std::string>(ops, "permutation_metric"));
        if (!m) throw ConfigError("unknown permutation_metric");
        options.permutation_metric = *m;
    }
    options.graph_restarts = get(ops, "graph_restarts", options.graph_restarts);
    options.sequence_alphabet = get(ops, "sequence_alphabet", options.sequence_alphabet);

    if (!root.contains("problem")) throw ConfigError("missing key 'problem'");
    auto problem = load_problem(root.at("problem"));
    if (root.contains("family")) {
        const auto fam = parse_family(need<std::string>(root, "family"));
        if (!fam) throw ConfigError("unknown family '" + root.at("family").get<std::string>() + "'");
        const auto actual = std::visit([](const auto& p) { return p.family; }, problem);
        if (*fam != actual)
            throw ConfigError("family '" + std::string(name(*fam)) + "' does not match the problem's family '" +
                              std::string(name(actual)) + "'");
    }
    // mutation draws letters from the problem's alphabet unless told otherwise
    if (std::holds_alternative<Problem<Sequence>>(problem) && !ops.contains("sequence_alphabet"))
        options.sequence_alphabet = get<std::string>(root.at("problem"), "alphabet", "acgt");

    std::visit(
        [&](const auto& p) {
            const auto result = run_ga(p, config, options);
            std::ostringstream csv;
            csv << "generation,best,mean,evaluations,mode,seed\n";
            for (std::size_t g = 0; g < result.best_per_generation.size(); ++g)
                csv << (g + 1) << ',' << format_real(result.best_per_generation[g]) << ','
                    << format_real(result.mean_per_generation[g]) << ',' << result.evaluations_per_generation[g] << ','
                    << csv_field(std::string(name(config.mode))) << ',' << config.seed << '\n';
            write_file(out_path, csv.str());
            out << "best " << format_real(result.best_fitness) << " after " << result.evaluations << " evaluations\n";
        },
        problem);
}

} // namespace qgx::cli
