#include "seedopt/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seedopt {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Optimal: return "optimal";
        case Strategy::T3: return "T3";
        case Strategy::T3AndT4: return "T3_and_T4";
        case Strategy::TauLeqPhi: return "tau_leq_phi";
        case Strategy::UpperBound: return "upper_bound";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
    for (Strategy s : all_strategies())
        if (name == strategy_name(s))
            return s;
    return std::nullopt;
}

std::vector<Strategy> all_strategies() {
    return {Strategy::Optimal, Strategy::T3, Strategy::T3AndT4, Strategy::TauLeqPhi,
            Strategy::UpperBound};
}

void SweepConfig::validate() const {
    if (phi_count < 1)
        throw std::invalid_argument("phi_count must be at least 1");
    if (trials < 1)
        throw std::invalid_argument("trials must be at least 1");
    if (strategies.empty())
        throw std::invalid_argument("no strategies enabled");
    if (!p.is_positive() || !q.is_positive())
        throw std::invalid_argument("p and q must be positive");
}

std::vector<double> phi_grid(int count) {
    std::vector<double> grid;
    grid.reserve(count);
    if (count == 1) {
        grid.push_back(0.0);
        return grid;
    }
    for (int i = 0; i < count; ++i)
        grid.push_back(static_cast<double>(i) / (count - 1));
    return grid;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

SweepCell evaluate_cell(const Network& net, const AgentParams& params, const Product& product,
                        Strategy strategy) {
    SweepCell cell;
    cell.strategy = strategy;
    cell.phi = product.phi;
    const auto t0 = Clock::now();
    if (strategy == Strategy::UpperBound) {
        cell.payoff = upper_bound(params, product.phi, product.p);
    } else if (strategy == Strategy::Optimal) {
        SolveStats stats;
        const SeedResult r = optimal_generalized(net, params, product, &stats);
        cell.payoff = r.payoff;
        cell.seeds = static_cast<int>(r.seeds.size());
        cell.exposed = static_cast<int>(r.exposure.exposed.size());
        cell.accepted = static_cast<int>(r.exposure.accepted.size());
        cell.rejected = static_cast<int>(r.exposure.rejected.size());
        cell.ignored = static_cast<int>(r.exposure.ignored.size());
        cell.mincut_seconds = stats.mincut_seconds;
    } else {
        const BaselineKind kind = strategy == Strategy::T3 ? BaselineKind::T3
                                  : strategy == Strategy::T3AndT4 ? BaselineKind::T3AndT4
                                                                  : BaselineKind::TauLeqPhi;
        const SeedResult r = baseline_seed(net, params, product, kind);
        cell.payoff = r.payoff;
        cell.seeds = static_cast<int>(r.seeds.size());
        cell.exposed = static_cast<int>(r.exposure.exposed.size());
        cell.accepted = static_cast<int>(r.exposure.accepted.size());
        cell.rejected = static_cast<int>(r.exposure.rejected.size());
        cell.ignored = static_cast<int>(r.exposure.ignored.size());
    }
    cell.total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return cell;
}

std::vector<SweepRecord> reduce_cells(const SweepConfig& cfg, const std::vector<double>& grid,
                                      std::vector<SweepCell>& cells) {
    // cells laid out trial-major: [trial][phi][strategy]
    const int ns = static_cast<int>(cfg.strategies.size());
    const int np = static_cast<int>(grid.size());
    auto at = [&](int trial, int pi, int si) -> const SweepCell& {
        return cells[(static_cast<std::size_t>(trial) * np + pi) * ns + si];
    };

    std::vector<SweepRecord> records;
    records.reserve(static_cast<std::size_t>(np) * ns);
    for (int pi = 0; pi < np; ++pi) {
        for (int si = 0; si < ns; ++si) {
            SweepRecord rec;
            rec.phi = grid[pi];
            rec.strategy = strategy_name(cfg.strategies[si]);
            rec.trials = cfg.trials;

            Rational sum{0};
            for (int t = 0; t < cfg.trials; ++t)
                sum = sum + at(t, pi, si).payoff;
            rec.mean_payoff = (sum / Rational(cfg.trials)).to_double();

            if (cfg.trials > 1) {
                double ss = 0.0;
                for (int t = 0; t < cfg.trials; ++t) {
                    const double d = at(t, pi, si).payoff.to_double() - rec.mean_payoff;
                    ss += d * d;
                }
                rec.std_payoff = std::sqrt(ss / (cfg.trials - 1));
            }

            const int first_timed = cfg.trials > 1 ? 1 : 0;  // skip warm-up trial
            double cut = 0.0, total = 0.0;
            for (int t = first_timed; t < cfg.trials; ++t) {
                cut += at(t, pi, si).mincut_seconds;
                total += at(t, pi, si).total_seconds;
            }
            const int timed = cfg.trials - first_timed;
            rec.mean_mincut_seconds = cut / timed;
            rec.mean_total_seconds = total / timed;
            records.push_back(std::move(rec));
        }
    }
    std::stable_sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
        if (a.phi != b.phi)
            return a.phi < b.phi;
        return a.strategy < b.strategy;
    });
    return records;
}

std::vector<SweepRecord> run_sweep_impl(const Network& net, const SweepConfig& cfg,
                                        std::vector<SweepCell>* cells_out, bool parallel) {
    cfg.validate();
    const auto grid = phi_grid(cfg.phi_count);
    const int ns = static_cast<int>(cfg.strategies.size());
    const int np = static_cast<int>(grid.size());
    std::vector<SweepCell> cells(static_cast<std::size_t>(cfg.trials) * np * ns);

    auto run_trial = [&](int t) {
        const AgentParams params =
            sample_params(cfg.distribution, mix_seed(cfg.rng_seed, t), net.node_count());
        for (int pi = 0; pi < np; ++pi) {
            Product product{grid[pi], cfg.p, cfg.q};
            for (int si = 0; si < ns; ++si) {
                SweepCell cell = evaluate_cell(net, params, product, cfg.strategies[si]);
                cell.trial = t;
                cells[(static_cast<std::size_t>(t) * np + pi) * ns + si] = std::move(cell);
            }
        }
    };

    if (parallel) {
#ifdef _OPENMP
        if (cfg.workers > 0)
            omp_set_num_threads(cfg.workers);
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < cfg.trials; ++t)
            run_trial(t);
#else
        for (int t = 0; t < cfg.trials; ++t)
            run_trial(t);
#endif
    } else {
        for (int t = 0; t < cfg.trials; ++t)
            run_trial(t);
    }

    auto records = reduce_cells(cfg, grid, cells);
    if (cells_out)
        *cells_out = std::move(cells);
    return records;
}

}  // namespace

std::vector<SweepRecord> run_sweep_serial(const Network& net, const SweepConfig& cfg,
                                          std::vector<SweepCell>* cells) {
    return run_sweep_impl(net, cfg, cells, false);
}

std::vector<SweepRecord> run_sweep_parallel(const Network& net, const SweepConfig& cfg,
                                            std::vector<SweepCell>* cells) {
    return run_sweep_impl(net, cfg, cells, true);
}

std::vector<SweepRecord> run_sweep(const Network& net, const SweepConfig& cfg,
                                   std::vector<SweepCell>* cells) {
    if (cfg.workers == 1)
        return run_sweep_serial(net, cfg, cells);
    return run_sweep_parallel(net, cfg, cells);
}

void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out) {
    out << "phi,strategy,mean_payoff,std_payoff,trials,mean_mincut_seconds,mean_total_seconds\n";
    for (const auto& r : records) {
        out << format_double(r.phi) << ',' << r.strategy << ',' << format_double(r.mean_payoff)
            << ',' << format_double(r.std_payoff) << ',' << r.trials << ','
            << format_double(r.mean_mincut_seconds) << ',' << format_double(r.mean_total_seconds)
            << '\n';
    }
}

void emit_debug_log(const std::vector<SweepCell>& cells, std::ostream& out) {
    for (const auto& c : cells) {
        out << "{\"trial\":" << c.trial << ",\"phi\":" << format_double(c.phi) << ",\"strategy\":\""
            << strategy_name(c.strategy) << "\",\"payoff\":\"" << c.payoff.str()
            << "\",\"seeds\":" << c.seeds << ",\"exposed\":" << c.exposed
            << ",\"accepted\":" << c.accepted << ",\"rejected\":" << c.rejected
            << ",\"ignored\":" << c.ignored << "}\n";
    }
}

}  // namespace seedopt
