#include "swarmctl_cli/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swarmctl/analytic.hpp"
#include "swarmctl/errors.hpp"
#include "swarmctl/experiment.hpp"
#include "swarmctl/generator.hpp"
#include "swarmctl/graph.hpp"
#include "swarmctl/matching.hpp"
#include "swarmctl/rng.hpp"
#include "swarmctl/verify.hpp"

namespace swarmctl::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string config;
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string mode = "default";

    std::string kind = "regular";
    int k = 1;
    int k1 = 1;
    int k2 = 2;
    double alpha = 0.5;
    double p = 0.0;
    std::size_t n = 0;
    std::size_t replicas = kDefaultReplicas;
    int id = 0;
    std::string in;
    std::size_t weight_seeds = 3;
};

bool given(const CLI::App* sub, const std::string& name) {
    const auto* opt = sub->get_option_no_throw(name);
    if (opt == nullptr && sub->get_parent() != nullptr)
        opt = sub->get_parent()->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

void require(const CLI::App* sub, const std::string& name) {
    if (!given(sub, name))
        throw ValidationError(sub->get_name() + ": " + name + " is required");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Config values fill options the command line left unset.
void apply_config(const std::string& path, CLI::App* sub) {
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw ValidationError("config '" + path + "': " + e.what());
    }
    if (!doc.is_object()) throw ValidationError("config '" + path + "' must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "config") continue;
        CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr) opt = sub->get_parent()->get_option_no_throw("--" + key);
        if (opt == nullptr)
            throw ValidationError("config '" + path + "': unknown field '" + key + "'");
        if (opt->count() > 0) continue;
        opt->add_result(value.is_string() ? value.get<std::string>() : value.dump());
        opt->run_callback();
    }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw ValidationError("cannot write '" + o.out + "'");
    file << text;
}

void require_json(const Options& o, const std::string& command) {
    if (o.format != "json") throw ValidationError(command + " only supports --format json");
}

NetworkSpec spec_from_options(const Options& o, const CLI::App* sub) {
    NetworkSpec spec;
    spec.n = o.n;
    spec.removal_fraction = o.p;
    spec.seed = o.seed;
    if (o.kind == "regular") {
        require(sub, "--k");
        spec.out_degree = RegularDegree{o.k};
    } else if (o.kind == "bimodal") {
        require(sub, "--k1");
        require(sub, "--k2");
        require(sub, "--alpha");
        spec.out_degree = BimodalDegree{o.k1, o.k2, o.alpha};
    } else {
        throw ValidationError("--kind must be regular or bimodal");
    }
    validate(spec);
    return spec;
}

json solution_json(const FixedPointSolution& s) {
    return {{"w1", s.w1},
            {"w2", s.w2},
            {"w1_hat", s.w1_hat},
            {"w2_hat", s.w2_hat},
            {"n_d", s.n_d},
            {"iterations", s.iterations},
            {"residual", s.residual},
            {"method", to_string(s.method)}};
}

std::string run_analytic(const Options& o, const CLI::App* sub) {
    require_json(o, "analytic");
    if (o.p < 0.0 || o.p > 1.0) throw ValidationError("--p must lie in [0, 1]");
    json j;
    if (o.kind == "regular") {
        require(sub, "--k");
        if (o.k < 0) throw ValidationError("--k must be >= 0");
        j = solution_json(nd_closed_regular(o.k, o.p));
        j["kind"] = "regular";
        j["k"] = o.k;
        j["p"] = o.p;
        j["n_d_asymptotic"] = nd_asymptotic(DegreeModel::regular(o.k, o.p));
    } else if (o.kind == "bimodal") {
        require(sub, "--k1");
        require(sub, "--k2");
        require(sub, "--alpha");
        const auto mode = parse_exponent_mode(o.mode);
        j = solution_json(nd_closed_bimodal(o.k1, o.k2, o.alpha, o.p, mode));
        j["kind"] = "bimodal";
        j["k1"] = o.k1;
        j["k2"] = o.k2;
        j["alpha"] = o.alpha;
        j["p"] = o.p;
        j["mode"] = to_string(mode);
        const double mean = o.alpha * o.k1 + (1.0 - o.alpha) * o.k2;
        j["n_d_asymptotic"] = std::exp(-mean * (1.0 - o.p));
    } else if (o.kind == "legacy") {
        require(sub, "--k");
        const auto legacy = komareji_legacy_nd(o.k);
        j = {{"kind", "legacy"},
             {"k", o.k},
             {"w2", legacy.w2},
             {"n_d", legacy.n_d},
             {"n_d_asymptotic", legacy.asymptotic}};
    } else {
        throw ValidationError("--kind must be regular, bimodal or legacy");
    }
    return j.dump(2) + "\n";
}

void run_generate(const Options& o, const CLI::App* sub, std::ostream& out) {
    require(sub, "--n");
    require(sub, "--seed");
    NetworkSpec spec = spec_from_options(o, sub);
    spec.seed = derive_seed(o.seed, 0);
    DirectedGraph g = sample_ssn(spec);
    if (o.p > 0.0) g = remove_links(g, o.p, derive_seed(o.seed, 1));
    std::ostringstream text;
    write_edge_list(text, g);
    emit(o, text.str(), out);
}

DirectedGraph load_graph(const Options& o, const CLI::App* sub) {
    require(sub, "--in");
    return read_edge_list_file(o.in, o.n);
}

std::string run_drivers(const Options& o, const CLI::App* sub) {
    const DirectedGraph g = load_graph(o, sub);
    const MatchingResult m = max_matching(g);
    if (o.format == "csv") {
        std::ostringstream text;
        text << "driver\n";
        for (NodeId d : m.driver_nodes) text << d << '\n';
        return text.str();
    }
    json matching = json::array();
    for (const Edge& e : m.matched_pairs) matching.push_back({e.source, e.target});
    json j = {{"n", g.node_count()},
              {"edges", g.edge_count()},
              {"n_driver", m.n_driver},
              {"n_d", m.fraction},
              {"drivers", m.driver_nodes},
              {"matching", matching}};
    return j.dump(2) + "\n";
}

std::string run_verify(const Options& o, const CLI::App* sub) {
    require_json(o, "verify");
    require(sub, "--seed");
    const DirectedGraph g = load_graph(o, sub);
    const VerificationReport r = verify_driver_set(g, o.seed, o.weight_seeds);
    json j = {{"n", r.n},
              {"n_driver", r.n_driver},
              {"drivers", r.drivers},
              {"anchors", r.anchors},
              {"weight_seeds", r.weight_seeds},
              {"ranks", r.ranks},
              {"controllable", r.controllable}};
    return j.dump(2) + "\n";
}

RunOptions run_options(const Options& o) {
    RunOptions ro;
    ro.threads = o.threads;
    ro.mode = parse_exponent_mode(o.mode);
    return ro;
}

std::string render(const Options& o, const ExperimentReport& report) {
    return o.format == "csv" ? to_csv(report) : to_json(report) + "\n";
}

std::string run_simulate(const Options& o, const CLI::App* sub) {
    require(sub, "--n");
    require(sub, "--seed");
    const NetworkSpec spec = spec_from_options(o, sub);
    const RunOptions ro = run_options(o);
    ScenarioResult row = run_scenario(spec, o.replicas, o.seed, ro);
    if (o.format == "csv") {
        ExperimentReport report;
        report.id = "scenario";
        report.provenance = {o.seed, o.n, o.replicas, ro.mode};
        report.rows.push_back(std::move(row));
        return to_csv(report);
    }
    return to_json(row) + "\n";
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--out", o.out, "Output file (default: stdout)");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

void add_spec_flags(CLI::App* sub, Options& o) {
    sub->add_option("--kind", o.kind, "Out-degree law")->check(CLI::IsMember({"regular", "bimodal"}));
    sub->add_option("--k", o.k, "Regular out-degree");
    sub->add_option("--k1", o.k1, "Bi-modal degree of the alpha fraction");
    sub->add_option("--k2", o.k2, "Bi-modal degree of the rest");
    sub->add_option("--alpha", o.alpha, "Fraction of nodes with degree k1");
    sub->add_option("--p", o.p, "Fraction of removed links");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Driver-node analysis of random swarm signaling networks", "swarmctl"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--config", o.config, "JSON file with default flag values");
    app.add_option("--seed", o.seed, "Master seed");
    app.add_option("--threads", o.threads, "Worker threads for replicas")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--mode", o.mode, "Bi-modal exponent mode")
        ->check(CLI::IsMember({"default", "consistent", "paper-literal", "paper-table"}));

    auto* analytic = app.add_subcommand("analytic", "Closed-form driver fraction");
    analytic->add_option("--kind", o.kind, "regular | bimodal | legacy")
        ->check(CLI::IsMember({"regular", "bimodal", "legacy"}));
    analytic->add_option("--k", o.k, "Regular out-degree");
    analytic->add_option("--k1", o.k1, "Bi-modal degree of the alpha fraction");
    analytic->add_option("--k2", o.k2, "Bi-modal degree of the rest");
    analytic->add_option("--alpha", o.alpha, "Fraction of nodes with degree k1");
    analytic->add_option("--p", o.p, "Fraction of removed links");
    add_common(analytic, o);

    auto* generate = app.add_subcommand("generate", "Sample a network and write its edge list");
    generate->add_option("--n", o.n, "Node count");
    add_spec_flags(generate, o);
    add_common(generate, o);

    auto* drivers = app.add_subcommand("drivers", "Minimum driver set of an edge list");
    drivers->add_option("--in", o.in, "Edge-list CSV");
    drivers->add_option("--n", o.n, "Node count if larger than max endpoint + 1");
    add_common(drivers, o);

    auto* verify = app.add_subcommand("verify", "Kalman rank check of the driver set");
    verify->add_option("--in", o.in, "Edge-list CSV");
    verify->add_option("--n", o.n, "Node count if larger than max endpoint + 1");
    verify->add_option("--weight-seeds", o.weight_seeds, "Independent weight draws")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
    add_common(verify, o);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo driver fraction");
    simulate->add_option("--n", o.n, "Node count");
    simulate->add_option("--replicas", o.replicas, "Number of networks")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
    add_spec_flags(simulate, o);
    add_common(simulate, o);

    auto* table = app.add_subcommand("table", "Reproduce a results table");
    table->add_option("--id", o.id, "Table 1..4")->check(CLI::Range(1, 4));
    table->add_option("--n", o.n, "Node count");
    table->add_option("--replicas", o.replicas, "Networks per row (0: analytic only)");
    add_common(table, o);

    auto* figure = app.add_subcommand("figure", "Data behind a figure");
    figure->add_option("--id", o.id, "Figure 2 or 3")->check(CLI::Range(2, 3));
    figure->add_option("--n", o.n, "Node count");
    figure->add_option("--replicas", o.replicas, "Networks per point (0: analytic only)");
    add_common(figure, o);

    std::vector<std::string> argv{"swarmctl"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> cargv;
    for (const auto& a : argv) cargv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (!o.config.empty()) apply_config(o.config, sub);
        if (o.format != "csv" && o.format != "json")
            throw ValidationError("--format must be csv or json");

        if (sub == analytic) {
            emit(o, run_analytic(o, sub), out);
        } else if (sub == generate) {
            run_generate(o, sub, out);
        } else if (sub == drivers) {
            emit(o, run_drivers(o, sub), out);
        } else if (sub == verify) {
            emit(o, run_verify(o, sub), out);
        } else if (sub == simulate) {
            emit(o, run_simulate(o, sub), out);
        } else if (sub == table) {
            require(sub, "--id");
            const std::size_t n = given(sub, "--n") ? o.n : kDefaultNodes;
            emit(o, render(o, reproduce_table(o.id, n, o.replicas, o.seed, run_options(o))), out);
        } else if (sub == figure) {
            require(sub, "--id");
            const std::size_t n = given(sub, "--n") ? o.n : kDefaultNodes;
            emit(o, render(o, figure_data(o.id, n, o.replicas, o.seed, run_options(o))), out);
        }
    } catch (const SolverError& e) {
        err << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace swarmctl::cli
