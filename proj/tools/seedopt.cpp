#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "seedopt/network.hpp"
#include "seedopt/optimizer.hpp"
#include "seedopt/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;    // unreadable/malformed input, invalid flag values
constexpr int kExitRefusal = 3;  // solver refused (enumeration limit)

using namespace seedopt;

ParseMode mode_from_flag(const std::string& mode) {
    if (mode == "directed")
        return ParseMode::DirectedToUndirected;
    if (mode == "undirected")
        return ParseMode::Undirected;
    throw std::invalid_argument("unknown edge-list mode '" + mode + "'");
}

Rational parse_coeff(const std::string& text, const char* what) {
    Rational r = Rational::parse(text);
    if (!r.is_positive())
        throw std::invalid_argument(std::string(what) + " must be positive");
    return r;
}

double parse_phi(const std::string& text) {
    std::size_t pos = 0;
    const double phi = std::stod(text, &pos);
    if (pos != text.size() || !(phi >= 0.0 && phi <= 1.0))
        throw std::invalid_argument("phi must be a number in [0,1]");
    return phi;
}

ParamDist dist_from_flag(const std::string& name) {
    if (name == "uniform")
        return ParamDist::Uniform;
    if (name == "gauss")
        return ParamDist::Gaussian;
    throw std::invalid_argument("unknown distribution '" + name + "' (uniform|gauss)");
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    return out;
}

void print_seed_labels(const Network& net, const std::vector<int>& seeds) {
    std::cout << "seeds:";
    for (int s : seeds)
        std::cout << ' ' << net.original_ids[s];
    std::cout << '\n';
}

struct CommonSolveArgs {
    std::string graph_file;
    std::string params_file;
    std::string sample_dist;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string phi_text = "0";
    std::string p_text = "1";
    std::string q_text = "1";
    std::string mode = "directed";
    bool basic = false;
};

void add_common_solve_flags(CLI::App* cmd, CommonSolveArgs& args, bool phi_required) {
    cmd->add_option("--graph", args.graph_file, "edge-list file")->required();
    auto* params_opt = cmd->add_option("--params", args.params_file, "parameter file");
    auto* sample_opt =
        cmd->add_option("--sample", args.sample_dist, "sample parameters (uniform|gauss)");
    params_opt->excludes(sample_opt);
    cmd->add_option("--seed", args.seed, "rng seed for --sample")
        ->each([&](const std::string&) { args.seed_given = true; });
    auto* phi_opt = cmd->add_option("--phi", args.phi_text, "product appeal in [0,1]");
    if (phi_required)
        phi_opt->required();
    cmd->add_option("--p", args.p_text, "payoff per acceptance (rational, e.g. 1/3)");
    cmd->add_option("--q", args.q_text, "penalty per rejection (rational)");
    cmd->add_option("--mode", args.mode, "edge-list interpretation (directed|undirected)");
    cmd->add_flag("--basic", args.basic, "coerce to the two-threshold model (tau=0, sigma=theta)");
}

struct LoadedInstance {
    Network net;
    AgentParams params;
    Product product;
};

LoadedInstance load_instance(const CommonSolveArgs& args) {
    LoadedInstance inst;
    inst.net = parse_edge_list_file(args.graph_file, mode_from_flag(args.mode));
    if (!args.params_file.empty()) {
        inst.params = parse_params_file(args.params_file, inst.net);
    } else if (!args.sample_dist.empty()) {
        if (!args.seed_given)
            throw std::invalid_argument("--sample requires --seed");
        inst.params =
            sample_params(dist_from_flag(args.sample_dist), args.seed, inst.net.node_count());
    } else {
        throw std::invalid_argument("one of --params or --sample is required");
    }
    if (args.basic)
        inst.params.coerce_basic();
    inst.product.phi = parse_phi(args.phi_text);
    inst.product.p = parse_coeff(args.p_text, "p");
    inst.product.q = parse_coeff(args.q_text, "q");
    return inst;
}

int cmd_solve(const CommonSolveArgs& args, const std::string& dump_flow_file, bool verbose) {
    LoadedInstance inst = load_instance(args);

    SolveStats stats;
    const SeedResult result = optimal_generalized(inst.net, inst.params, inst.product, &stats);

    if (!dump_flow_file.empty()) {
        const auto cl = clusters(inst.net, inst.params, inst.product);
        const FlowNetwork fn = build_flow_network(cl, inst.product.p, inst.product.q);
        auto out = open_output(dump_flow_file);
        dump_flow_network(fn, out);
    }

    std::cout << "solve payoff=" << result.payoff.str() << " seeds=" << result.seeds.size()
              << " clusters=" << stats.cluster_count << " mincut=" << stats.mincut_value.str()
              << " phi=" << format_double(inst.product.phi)
              << " mincut_seconds=" << format_double(stats.mincut_seconds)
              << " total_seconds=" << format_double(stats.total_seconds) << '\n';
    print_seed_labels(inst.net, result.seeds);
    if (verbose) {
        std::cout << "exposed=" << result.exposure.exposed.size()
                  << " accepted=" << result.exposure.accepted.size()
                  << " rejected=" << result.exposure.rejected.size()
                  << " ignored=" << result.exposure.ignored.size() << '\n';
    }
    return kExitOk;
}

int cmd_budgeted(const CommonSolveArgs& args, int k, const std::string& method, int cluster_limit) {
    if (k < 0)
        throw std::invalid_argument("k must be nonnegative");
    LoadedInstance inst = load_instance(args);

    for (int i = 0; i < inst.net.node_count(); ++i) {
        const AgentType t = classify_agent(inst.params, i, inst.product.phi);
        if (t == AgentType::I || t == AgentType::III)
            throw std::invalid_argument(
                "budgeted seeding needs the two-threshold model: agent with label " +
                std::to_string(inst.net.original_ids[i]) + " is of type " + agent_type_name(t) +
                " at this phi (pass --basic to coerce)");
    }

    BudgetedInstance binst{inst.net, inst.params, inst.product, k};
    SeedResult result;
    if (method == "exact") {
        result = budgeted_exact_parallel(binst, cluster_limit);
    } else if (method == "greedy") {
        result = budgeted_greedy(binst);
    } else {
        throw std::invalid_argument("unknown method '" + method + "' (exact|greedy)");
    }

    std::cout << "budgeted method=" << method << " k=" << k << " payoff=" << result.payoff.str()
              << " seeds=" << result.seeds.size() << '\n';
    print_seed_labels(inst.net, result.seeds);
    return kExitOk;
}

int cmd_sweep(const std::string& graph_file, const std::string& mode, SweepConfig cfg,
              const std::string& strategies_csv, const std::string& out_file,
              const std::string& debug_log_file) {
    if (!strategies_csv.empty()) {
        cfg.strategies.clear();
        std::istringstream ss(strategies_csv);
        std::string name;
        while (std::getline(ss, name, ',')) {
            const auto s = parse_strategy(name);
            if (!s)
                throw std::invalid_argument("unknown strategy '" + name + "'");
            cfg.strategies.push_back(*s);
        }
    }
    const Network net = parse_edge_list_file(graph_file, mode_from_flag(mode));

    std::vector<SweepCell> cells;
    const auto records = run_sweep(net, cfg, debug_log_file.empty() ? nullptr : &cells);

    {
        auto out = open_output(out_file);
        emit_csv(records, out);
    }
    if (!debug_log_file.empty()) {
        auto out = open_output(debug_log_file);
        emit_debug_log(cells, out);
    }
    std::cout << "sweep records=" << records.size() << " trials=" << cfg.trials
              << " phis=" << cfg.phi_count << " out=" << out_file << '\n';
    return kExitOk;
}

int cmd_reduce(const std::string& graph_file, const std::string& mode, int k,
               const std::string& epsilon_text, const std::string& out_prefix) {
    const Network g = parse_edge_list_file(graph_file, mode_from_flag(mode));
    const Rational epsilon = Rational::parse(epsilon_text);
    const BudgetedInstance inst = clique_reduction(g, k, epsilon);

    {
        auto out = open_output(out_prefix + ".edges");
        emit_edge_list(inst.net, out);
    }
    {
        auto out = open_output(out_prefix + ".params");
        emit_params(inst.params, inst.net, out, /*basic_form=*/true);
    }
    std::cout << "reduce nodes=" << inst.net.node_count() << " edges=" << inst.net.edge_count()
              << " p=" << inst.product.p.str() << " q=" << inst.product.q.str()
              << " phi=" << format_double(inst.product.phi) << " k=" << inst.budget
              << " out=" << out_prefix << '\n';
    return kExitOk;
}

int cmd_gen_params(const std::string& graph_file, const std::string& mode, int n,
                   const std::string& dist, std::uint64_t seed, const std::string& out_file,
                   const std::string& model) {
    Network net;
    if (!graph_file.empty()) {
        net = parse_edge_list_file(graph_file, mode_from_flag(mode));
    } else {
        if (n < 0)
            throw std::invalid_argument("one of --graph or --n is required");
        net = make_network(n, {});
    }
    AgentParams params = sample_params(dist_from_flag(dist), seed, net.node_count());
    const bool basic = model == "basic";
    if (!basic && model != "general")
        throw std::invalid_argument("unknown model '" + model + "' (general|basic)");

    auto out = open_output(out_file);
    emit_params(params, net, out, basic);
    std::cout << "gen-params agents=" << net.node_count() << " model=" << model
              << " out=" << out_file << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Overexposure-aware seed selection in social networks"};
    app.require_subcommand(1);

    // solve
    CommonSolveArgs solve_args;
    std::string dump_flow_file;
    bool verbose = false;
    auto* solve = app.add_subcommand("solve", "optimal unbudgeted seed set");
    add_common_solve_flags(solve, solve_args, /*phi_required=*/true);
    solve->add_option("--dump-flow", dump_flow_file, "write the derived flow network");
    solve->add_flag("--verbose,-v", verbose, "print exposure breakdown");

    // sweep
    std::string sweep_graph, sweep_mode = "directed", sweep_dist = "uniform";
    std::string sweep_out, sweep_strategies, sweep_debug_log;
    std::string sweep_p = "1", sweep_q = "1";
    SweepConfig cfg;
    auto* sweep = app.add_subcommand("sweep", "appeal sweep with repeated trials, CSV output");
    sweep->add_option("--graph", sweep_graph, "edge-list file")->required();
    sweep->add_option("--mode", sweep_mode, "edge-list interpretation (directed|undirected)");
    sweep->add_option("--dist", sweep_dist, "threshold distribution (uniform|gauss)");
    sweep->add_option("--trials", cfg.trials, "trials per appeal value");
    sweep->add_option("--phis", cfg.phi_count, "number of appeal values");
    sweep->add_option("--p", sweep_p, "payoff per acceptance (rational)");
    sweep->add_option("--q", sweep_q, "penalty per rejection (rational)");
    sweep->add_option("--seed", cfg.rng_seed, "base rng seed");
    sweep->add_option("--out", sweep_out, "CSV output file")->required();
    sweep->add_option("--strategies", sweep_strategies,
                      "comma-separated subset of optimal,T3,T3_and_T4,tau_leq_phi,upper_bound");
    sweep->add_option("--workers", cfg.workers, "trial workers (0 = all cores, 1 = serial)");
    sweep->add_option("--debug-log", sweep_debug_log, "JSON-lines per-evaluation log");

    // budgeted
    CommonSolveArgs budgeted_args;
    int budget_k = 0;
    int cluster_limit = kDefaultClusterLimit;
    std::string budget_method = "exact";
    auto* budgeted = app.add_subcommand("budgeted", "seeding with a cardinality budget");
    add_common_solve_flags(budgeted, budgeted_args, /*phi_required=*/true);
    budgeted->add_option("--k", budget_k, "maximum number of seeds")->required();
    budgeted->add_option("--method", budget_method, "exact|greedy");
    budgeted->add_option("--limit", cluster_limit, "cluster count limit for exact enumeration");

    // reduce
    std::string reduce_graph, reduce_mode = "directed", reduce_epsilon, reduce_out;
    int reduce_k = 0;
    auto* reduce = app.add_subcommand(
        "reduce", "clique-to-budgeted-seeding instance (subdivide a d-regular graph)");
    reduce->add_option("--graph", reduce_graph, "d-regular edge-list file")->required();
    reduce->add_option("--mode", reduce_mode, "edge-list interpretation (directed|undirected)");
    reduce->add_option("--k", reduce_k, "clique size / budget")->required();
    reduce->add_option("--epsilon", reduce_epsilon, "rational margin, 0 < epsilon < 1/n^2")
        ->required();
    reduce->add_option("--out", reduce_out, "output file prefix")->required();

    // gen-params
    std::string gen_graph, gen_mode = "directed", gen_dist = "uniform", gen_out,
                gen_model = "general";
    int gen_n = -1;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen-params", "sample and write an agent parameter file");
    auto* gen_graph_opt = gen->add_option("--graph", gen_graph, "edge-list file (labels reused)");
    gen->add_option("--mode", gen_mode, "edge-list interpretation (directed|undirected)");
    gen->add_option("--n", gen_n, "agent count (labels 0..n-1)")->excludes(gen_graph_opt);
    gen->add_option("--dist", gen_dist, "uniform|gauss");
    gen->add_option("--seed", gen_seed, "rng seed")->required();
    gen->add_option("--out", gen_out, "output parameter file")->required();
    gen->add_option("--model", gen_model, "general (4 columns) | basic (2 columns)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (solve->parsed())
            return cmd_solve(solve_args, dump_flow_file, verbose);
        if (sweep->parsed()) {
            cfg.distribution = dist_from_flag(sweep_dist);
            cfg.p = parse_coeff(sweep_p, "p");
            cfg.q = parse_coeff(sweep_q, "q");
            return cmd_sweep(sweep_graph, sweep_mode, cfg, sweep_strategies, sweep_out,
                             sweep_debug_log);
        }
        if (budgeted->parsed())
            return cmd_budgeted(budgeted_args, budget_k, budget_method, cluster_limit);
        if (reduce->parsed())
            return cmd_reduce(reduce_graph, reduce_mode, reduce_k, reduce_epsilon, reduce_out);
        if (gen->parsed())
            return cmd_gen_params(gen_graph, gen_mode, gen_n, gen_dist, gen_seed, gen_out,
                                  gen_model);
    } catch (const EnumerationLimitError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitRefusal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
