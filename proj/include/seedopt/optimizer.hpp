#ifndef SEEDOPT_OPTIMIZER_HPP
#define SEEDOPT_OPTIMIZER_HPP

#include <string>
#include <vector>

#include "seedopt/cascade.hpp"
#include "seedopt/maxflow.hpp"

namespace seedopt {

struct SeedResult {
    std::vector<int> seeds;  // sorted dense indices
    Rational payoff;         // equals exposure.payoff, recomputed independently
    ExposureResult exposure;
    std::string method;
};

struct BudgetedInstance {
    Network net;
    AgentParams params;
    Product product;
    int budget = 0;
};

struct SolveStats {
    int cluster_count = 0;
    Rational mincut_value;
    double mincut_seconds = 0.0;
    double total_seconds = 0.0;
};

// Optimal seeding with no budget, two-threshold model (every agent Type II or
// IV at this appeal; callers with mixed types use optimal_generalized). Seeds
// one canonical per cluster on the source side of a min cut.
SeedResult optimal_unbudgeted(const Network& net, const AgentParams& params, const Product& product,
                              SolveStats* stats = nullptr);

// Optimal seeding in the three-threshold model: solve the relay/reject
// subproblem by min cut, then union in every silently-accepting (Type III)
// agent.
SeedResult optimal_generalized(const Network& net, const AgentParams& params, const Product& product,
                               SolveStats* stats = nullptr);

// The threshold values split [0,1] into finitely many subintervals on which
// the optimum is constant. One profile point per candidate appeal: every
// breakpoint (intervals are closed on the left) and every midpoint between
// consecutive breakpoints.
struct PhiPoint {
    double phi;
    SeedResult result;
};

std::vector<PhiPoint> phi_profile(const Network& net, const AgentParams& params, const Rational& p,
                                  const Rational& q);

// Best appeal and seed set over the whole profile; smallest maximizing phi on
// ties.
PhiPoint optimal_phi(const Network& net, const AgentParams& params, const Rational& p,
                     const Rational& q);

// Thrown when a subset-enumeration solve would exceed the cluster limit.
struct EnumerationLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultClusterLimit = 25;

// Exact budgeted seeding (two-threshold model) by enumeration over subsets of
// at most `budget` clusters; one canonical seed per chosen cluster. Ties
// break toward the lexicographically smallest cluster-index set. Refuses
// above cluster_limit.
SeedResult budgeted_exact(const BudgetedInstance& inst, int cluster_limit = kDefaultClusterLimit);

// Same contract and same result, subset search fanned out with OpenMP.
SeedResult budgeted_exact_parallel(const BudgetedInstance& inst,
                                   int cluster_limit = kDefaultClusterLimit);

// Greedy heuristic: repeatedly add the cluster with the best marginal payoff
// while it is positive and the budget allows.
SeedResult budgeted_greedy(const BudgetedInstance& inst);

// Seeds one canonical per cluster whose own payoff p|interior| - q|boundary|
// is nonnegative (ignores boundary overlap between clusters).
SeedResult naive_nonnegative(const Network& net, const AgentParams& params, const Product& product);

enum class BaselineKind { T3, T3AndT4, TauLeqPhi };

const char* baseline_name(BaselineKind kind);

// Seeds a whole agent class: all Type III, all Type III and IV, or every
// agent with tau <= phi (which drags in Type II agents that reject).
SeedResult baseline_seed(const Network& net, const AgentParams& params, const Product& product,
                         BaselineKind kind);

// p * |{i : theta_i <= phi}| — no strategy can beat it.
Rational upper_bound(const AgentParams& params, double phi, const Rational& p);

// Budgeted instance whose optimum is positive iff the d-regular input graph
// has a k-clique: subdivide every edge with a rejecting node, make original
// nodes accepting, and set q = 1, p = d - (k-1)/2 + epsilon.
BudgetedInstance clique_reduction(const Network& regular_graph, int k, const Rational& epsilon);

}  // namespace seedopt

#endif
