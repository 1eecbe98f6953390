#ifndef SEEDOPT_SWEEP_HPP
#define SEEDOPT_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seedopt/optimizer.hpp"

namespace seedopt {

enum class Strategy { Optimal, T3, T3AndT4, TauLeqPhi, UpperBound };

const char* strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& name);
std::vector<Strategy> all_strategies();

struct SweepConfig {
    int phi_count = 100;
    int trials = 100;
    ParamDist distribution = ParamDist::Uniform;
    Rational p{1};
    Rational q{1};
    std::uint64_t rng_seed = 0;
    std::vector<Strategy> strategies = all_strategies();
    int workers = 0;  // 0 = all available threads, 1 = serial reference path

    void validate() const;
};

struct SweepRecord {
    double phi = 0.0;
    std::string strategy;
    double mean_payoff = 0.0;
    double std_payoff = 0.0;  // sample standard deviation, 0 when trials == 1
    int trials = 0;
    double mean_mincut_seconds = 0.0;
    double mean_total_seconds = 0.0;
};

// One evaluation: strategy at a given appeal within a given trial. run_sweep
// optionally fills these for debug logging.
struct SweepCell {
    int trial = 0;
    double phi = 0.0;
    Strategy strategy = Strategy::Optimal;
    Rational payoff;
    int seeds = 0;
    int exposed = 0;
    int accepted = 0;
    int rejected = 0;
    int ignored = 0;
    double mincut_seconds = 0.0;
    double total_seconds = 0.0;
};

// Evenly spaced appeals in [0,1], endpoints included when count > 1.
std::vector<double> phi_grid(int count);

// Every trial samples fresh agent parameters (seed mixed from rng_seed and the
// trial index) and shares them across all appeals. Payoff means are computed
// from exact per-trial payoffs; timing means skip trial 0 as warm-up when
// more than one trial ran. Records come out sorted by (phi, strategy) and are
// identical whichever worker count produced them.
std::vector<SweepRecord> run_sweep(const Network& net, const SweepConfig& cfg,
                                   std::vector<SweepCell>* cells = nullptr);
std::vector<SweepRecord> run_sweep_serial(const Network& net, const SweepConfig& cfg,
                                          std::vector<SweepCell>* cells = nullptr);
std::vector<SweepRecord> run_sweep_parallel(const Network& net, const SweepConfig& cfg,
                                            std::vector<SweepCell>* cells = nullptr);

// CSV with header phi,strategy,mean_payoff,std_payoff,trials,
// mean_mincut_seconds,mean_total_seconds; doubles rendered with full
// round-trip precision; byte-deterministic for fixed records.
void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out);

// JSON-lines debug log, one object per evaluation.
void emit_debug_log(const std::vector<SweepCell>& cells, std::ostream& out);

std::string format_double(double v);

}  // namespace seedopt

#endif
