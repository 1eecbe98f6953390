// Serial vs OpenMP comparison for the two parallel kernels: sweep trials and
// the budgeted subset search. Prints wall times and verifies both paths agree.
//
// usage: bench_compare [graph-file] [trials] [phis]
// Without a graph file a synthetic benchmark network is generated.

#include <chrono>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "seedopt/optimizer.hpp"
#include "seedopt/sweep.hpp"
#include "support/oracles.hpp"

using namespace seedopt;

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double timed(F&& fn) {
    const auto t0 = Clock::now();
    fn();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool same_payoffs(const std::vector<SweepRecord>& a, const std::vector<SweepRecord>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].phi != b[i].phi || a[i].strategy != b[i].strategy ||
            a[i].mean_payoff != b[i].mean_payoff || a[i].std_payoff != b[i].std_payoff)
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) try {
    std::string graph_file = argc > 1 ? argv[1] : "";
    const int trials = argc > 2 ? std::stoi(argv[2]) : 20;
    const int phis = argc > 3 ? std::stoi(argv[3]) : 20;

    if (graph_file.empty()) {
        graph_file = "bench_network.txt";
        testing::write_synthetic_snap(graph_file, 986, 16064, 4242);
        std::cout << "generated " << graph_file << '\n';
    }
    const Network net = parse_edge_list_file(graph_file);
    std::cout << "network: " << net.node_count() << " nodes, " << net.edge_count() << " edges\n";
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n\n";
#else
    std::cout << "openmp: disabled at build time\n\n";
#endif

    SweepConfig cfg;
    cfg.trials = trials;
    cfg.phi_count = phis;
    cfg.rng_seed = 1;

    std::vector<SweepRecord> serial_records, parallel_records;
    const double sweep_serial = timed([&] { serial_records = run_sweep_serial(net, cfg); });
    const double sweep_parallel = timed([&] { parallel_records = run_sweep_parallel(net, cfg); });
    std::cout << "sweep (" << trials << " trials x " << phis << " appeals x "
              << cfg.strategies.size() << " strategies)\n";
    std::cout << "  serial   " << sweep_serial << " s\n";
    std::cout << "  openmp   " << sweep_parallel << " s  (speedup x"
              << sweep_serial / sweep_parallel << ")\n";
    std::cout << "  results  " << (same_payoffs(serial_records, parallel_records) ? "identical" : "MISMATCH")
              << "\n\n";

    // budgeted subset search: pick the appeal with the largest cluster count
    // that still fits the enumeration limit
    std::mt19937_64 rng(7);
    BudgetedInstance inst;
    inst.net = testing::random_graph(rng, 400, 0.01);
    inst.params = testing::random_params_basic(rng, 400);
    inst.budget = 10;
    std::size_t best_count = 0;
    for (int i = 1; i < 20; ++i) {
        const Product probe{i / 20.0, Rational(1), Rational(1)};
        const std::size_t count = clusters(inst.net, inst.params, probe).size();
        if (count > best_count && count <= static_cast<std::size_t>(kDefaultClusterLimit)) {
            best_count = count;
            inst.product = probe;
        }
    }
    const auto cl = clusters(inst.net, inst.params, inst.product);
    std::cout << "budgeted subset search (" << cl.size() << " clusters, budget " << inst.budget
              << ", appeal " << inst.product.phi << ")\n";
    SeedResult serial_result, parallel_result;
    const double exact_serial = timed([&] { serial_result = budgeted_exact(inst); });
    const double exact_parallel = timed([&] { parallel_result = budgeted_exact_parallel(inst); });
    std::cout << "  serial   " << exact_serial << " s\n";
    std::cout << "  openmp   " << exact_parallel << " s  (speedup x"
              << exact_serial / exact_parallel << ")\n";
    const bool same = serial_result.payoff == parallel_result.payoff &&
                      serial_result.seeds == parallel_result.seeds;
    std::cout << "  results  " << (same ? "identical" : "MISMATCH") << '\n';
    return same ? 0 : 1;
} catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
}
