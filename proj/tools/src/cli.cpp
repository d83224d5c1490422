#include "qgx/cli/cli.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "ga_command.hpp"
#include "io.hpp"
#include "qgx/circular.hpp"
#include "qgx/errors.hpp"
#include "qgx/ga/operators.hpp"
#include "qgx/graphs.hpp"
#include "qgx/grouping.hpp"
#include "qgx/metric.hpp"
#include "qgx/sequences.hpp"
#include "qgx/symmetric.hpp"

namespace qgx::cli {

namespace {

using ga::Family;

struct Args {
    std::string family;
    std::string metric;
    std::string mode = "quotient";
    std::uint64_t seed = 1;
    int k = 0;
    std::size_t restarts = 10;
    std::vector<std::string> inputs;
};

template <class T>
std::vector<T> parse_numbers(const std::string& text, const char* what) {
    std::istringstream is(text);
    std::vector<T> out;
    T v{};
    while (is >> v) out.push_back(v);
    if (!is.eof()) throw InputError("cannot parse '" + text + "' as " + what);
    if (out.empty()) throw InputError(std::string("empty ") + what);
    return out;
}

std::pair<SymbolVector, SymbolVector> symbol_pair(const Args& a) {
    const auto x = parse_numbers<int>(a.inputs[0], "integer vector");
    const auto y = parse_numbers<int>(a.inputs[1], "integer vector");
    int k = a.k;
    if (k == 0) k = std::max(*std::max_element(x.begin(), x.end()), *std::max_element(y.begin(), y.end()));
    return {SymbolVector(x, k), SymbolVector(y, k)};
}

std::pair<RealVector, RealVector> real_pair(const Args& a) {
    return {RealVector(parse_numbers<double>(a.inputs[0], "real vector")),
            RealVector(parse_numbers<double>(a.inputs[1], "real vector"))};
}

std::pair<Permutation, Permutation> perm_pair(const Args& a) {
    return {Permutation(parse_numbers<int>(a.inputs[0], "permutation")),
            Permutation(parse_numbers<int>(a.inputs[1], "permutation"))};
}

std::pair<AdjacencyMatrix, AdjacencyMatrix> graph_pair(const Args& a) {
    return {parse_edge_list(read_file(a.inputs[0])), parse_edge_list(read_file(a.inputs[1]))};
}

std::pair<Sequence, Sequence> sequence_pair(const Args& a) { return {Sequence(a.inputs[0]), Sequence(a.inputs[1])}; }

Family family_of(const Args& a) {
    const auto f = ga::parse_family(a.family);
    if (!f) throw InputError("unknown family '" + a.family + "'");
    return *f;
}

/// Checks --metric against the family and returns the effective name.
std::string metric_of(const Args& a, Family f) {
    const char* fallback = f == Family::symmetric_real ? "euclidean" : f == Family::sequence ? "edit" : "hamming";
    const std::string m = a.metric.empty() ? fallback : a.metric;
    const bool ok = m == fallback || (f == Family::circular && m == "swap");
    if (!ok) throw InputError("metric '" + m + "' is not available for family '" + a.family + "'");
    return m;
}

bool quotient_mode(const Args& a) {
    if (a.mode == "quotient") return true;
    if (a.mode == "raw") return false;
    throw InputError("unknown mode '" + a.mode + "'");
}

GraphMatch match_graphs(const AdjacencyMatrix& x, const AdjacencyMatrix& y, const Args& a) {
    Rng rng = make_stream(a.seed, {});
    return auto_graph_matcher(a.restarts)(x, y, rng);
}

std::string distance(const Args& a) {
    const auto f = family_of(a);
    const auto metric = metric_of(a, f);
    const bool q = quotient_mode(a);
    switch (f) {
    case Family::grouping: {
        auto [x, y] = symbol_pair(a);
        return std::to_string(q ? li_distance(x, y, x.alphabet()) : hamming_distance(x, y));
    }
    case Family::symmetric_discrete: {
        auto [x, y] = symbol_pair(a);
        return q ? format_real(sym_normalize_discrete(x, y).distance) : std::to_string(hamming_distance(x, y));
    }
    case Family::symmetric_real: {
        auto [x, y] = real_pair(a);
        return format_real(q ? sym_normalize_real(x, y).distance : euclidean_distance(x, y));
    }
    case Family::circular: {
        auto [x, y] = perm_pair(a);
        const auto m = *parse_permutation_metric(metric);
        return std::to_string(q ? circ_quotient_distance(x, y, m) : permutation_distance(x, y, m));
    }
    case Family::graph: {
        auto [x, y] = graph_pair(a);
        return std::to_string(q ? match_graphs(x, y, a).distance : hamming_distance(x, y));
    }
    case Family::sequence: {
        auto [x, y] = sequence_pair(a);
        if (q) return std::to_string(edit_distance(x, y));
        if (x.size() != y.size()) throw InputError("raw sequence distance needs equal lengths");
        std::size_t d = 0;
        for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
        return std::to_string(d);
    }
    }
    return {};
}

std::string normalize(const Args& a) {
    const auto f = family_of(a);
    const auto metric = metric_of(a, f);
    switch (f) {
    case Family::grouping: {
        auto [x, y] = symbol_pair(a);
        return to_string(li_normalize(x, y, x.alphabet()));
    }
    case Family::symmetric_discrete: {
        auto [x, y] = symbol_pair(a);
        return to_string(sym_normalize_discrete(x, y).point);
    }
    case Family::symmetric_real: {
        auto [x, y] = real_pair(a);
        return to_string(sym_normalize_real(x, y).point);
    }
    case Family::circular: {
        auto [x, y] = perm_pair(a);
        return to_string(circ_normalize(x, y, *parse_permutation_metric(metric)).point);
    }
    case Family::graph: {
        auto [x, y] = graph_pair(a);
        return to_string(conjugate(y, match_graphs(x, y, a).perm));
    }
    case Family::sequence: {
        auto [x, y] = sequence_pair(a);
        const auto al = optimal_align(x, y);
        return al.left.str() + "\n" + al.right.str();
    }
    }
    return {};
}

template <class G>
G cross(Family f, const G& x, const G& y, const Args& a, const std::string& metric) {
    ga::OperatorOptions options;
    if (f == Family::circular) options.permutation_metric = *parse_permutation_metric(metric);
    options.graph_restarts = a.restarts;
    const auto mode = quotient_mode(a) ? ga::CrossoverMode::quotient : ga::CrossoverMode::raw;
    Rng rng = make_stream(a.seed, {});
    return ga::make_crossover<G>(f, mode, options)(x, y, rng);
}

std::string crossover(const Args& a) {
    const auto f = family_of(a);
    const auto metric = metric_of(a, f);
    switch (f) {
    case Family::grouping:
    case Family::symmetric_discrete: {
        auto [x, y] = symbol_pair(a);
        return to_string(cross(f, x, y, a, metric));
    }
    case Family::symmetric_real: {
        auto [x, y] = real_pair(a);
        return to_string(cross(f, x, y, a, metric));
    }
    case Family::circular: {
        auto [x, y] = perm_pair(a);
        return to_string(cross(f, x, y, a, metric));
    }
    case Family::graph: {
        auto [x, y] = graph_pair(a);
        return to_string(cross(f, x, y, a, metric));
    }
    case Family::sequence: {
        auto [x, y] = sequence_pair(a);
        return cross(f, x, y, a, metric).str();
    }
    }
    return {};
}

int verify(const std::string& suite_name, const Args& a, std::size_t trials, const VerifierRegistry& verifiers,
           std::ostream& out, std::ostream& err) {
    const auto suite = parse_suite(suite_name);
    if (!suite) throw InputError("unknown suite '" + suite_name + "'");
    const auto it = verifiers.find(a.family);
    if (it == verifiers.end()) throw InputError("unknown family '" + a.family + "'");
    Rng rng = make_stream(a.seed, {});
    const auto reports = it->second(*suite, trials, rng, VerifyOptions{a.metric});
    if (!reports) {
        err << "qgx: suite '" << suite_name << "' does not apply to family '" << a.family << "'\n";
        return kInputError;
    }
    bool passed = true;
    for (const auto& r : *reports) {
        out << r.name << ": " << r.checks << " checks, " << r.violations << " violations\n";
        if (!r.passed()) {
            out << "  counterexample: " << r.first_witness << "\n";
            passed = false;
        }
    }
    out << (passed ? "PASS" : "FAIL") << "\n";
    return passed ? kOk : kVerificationFailed;
}

void add_common(CLI::App* cmd, Args& a, bool with_mode, bool with_seed) {
    cmd->add_option("--family", a.family, "grouping | symmetric-real | symmetric-discrete | graph | circular | sequence")
        ->required();
    cmd->add_option("--metric", a.metric, "base metric (hamming, euclidean, swap, edit)");
    if (with_mode) cmd->add_option("--mode", a.mode, "raw | quotient")->capture_default_str();
    if (with_seed) cmd->add_option("--seed", a.seed, "random seed")->capture_default_str();
    cmd->add_option("--k", a.k, "alphabet size for k-ary vectors (default: largest symbol seen)");
    cmd->add_option("--restarts", a.restarts, "heuristic graph matching restarts above 8 vertices")->capture_default_str();
    cmd->add_option("inputs", a.inputs, "two genotypes (graphs: edge-list files)")->required()->expected(2);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const VerifierRegistry& verifiers) {
    CLI::App app{"Quotient geometric crossover toolkit", "qgx"};
    app.require_subcommand(1);

    Args a;
    auto* dist = app.add_subcommand("distance", "distance between two genotypes");
    add_common(dist, a, true, true);
    auto* norm = app.add_subcommand("normalize", "second genotype moved to its representative closest to the first");
    add_common(norm, a, false, true);
    auto* cx = app.add_subcommand("crossover", "one offspring of two genotypes");
    add_common(cx, a, true, true);

    std::string suite;
    std::size_t trials = 1000;
    auto* ver = app.add_subcommand("verify", "run a property-verification suite");
    ver->add_option("suite", suite, "metric | group | quotient | segment")->required();
    ver->add_option("--family", a.family, "family to verify")->required();
    ver->add_option("--metric", a.metric, "base metric");
    ver->add_option("--trials", trials, "sampled cases")->capture_default_str();
    ver->add_option("--seed", a.seed, "random seed")->capture_default_str();

    std::string config, out_path;
    GaOverrides overrides;
    auto* gacmd = app.add_subcommand("ga", "run a GA experiment from a JSON config and write a CSV");
    gacmd->add_option("--config", config, "JSON config file")->required();
    gacmd->add_option("--out", out_path, "CSV output path")->required();
    gacmd->add_option("--mode", overrides.mode, "override the config's crossover mode");
    gacmd->add_option("--seed", overrides.seed, "override the config's seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*dist) out << distance(a) << "\n";
        if (*norm) out << normalize(a) << "\n";
        if (*cx) out << crossover(a) << "\n";
        if (*ver) return verify(suite, a, trials, verifiers, out, err);
        if (*gacmd) run_ga_command(config, out_path, overrides, out);
    } catch (const IoFailure& e) {
        err << "qgx: " << e.what() << "\n";
        return kIoError;
    } catch (const qgx::Error& e) {
        err << "qgx: " << e.what() << "\n";
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "qgx: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}

} // namespace qgx::cli
