#include "seedopt/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace seedopt {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<int> agents_of_type(const AgentParams& params, double phi, AgentType t) {
    std::vector<int> out;
    for (int i = 0; i < params.size(); ++i)
        if (classify_agent(params, i, phi) == t)
            out.push_back(i);
    return out;
}

// Scaled integer view of p and q so subset payoffs compare exactly.
struct ScaledCoeffs {
    std::int64_t p = 1, q = 1, scale = 1;

    ScaledCoeffs(const Rational& pr, const Rational& qr) {
        scale = lcm_i64(pr.den, qr.den);
        p = pr.num * (scale / pr.den);
        q = qr.num * (scale / qr.den);
    }
};

}  // namespace

SeedResult optimal_unbudgeted(const Network& net, const AgentParams& params, const Product& product,
                              SolveStats* stats) {
    const auto t0 = Clock::now();
    product.validate();

    const auto cl = clusters(net, params, product);
    const FlowNetwork fn = build_flow_network(cl, product.p, product.q);

    const auto t_cut = Clock::now();
    const CutResult cut = min_cut(fn);
    const double mincut_seconds = seconds_since(t_cut);

    SeedResult result;
    result.method = "mincut";
    for (int i = 0; i < fn.cluster_count; ++i)
        if (cut.source_side[fn.cluster_node(i)])
            result.seeds.push_back(cl[i].canonical);
    result.exposure = exposed_set(net, params, product, result.seeds);
    result.payoff = result.exposure.payoff;

    if (stats) {
        stats->cluster_count = static_cast<int>(cl.size());
        stats->mincut_value = Rational(cut.cut_value, fn.scale);
        stats->mincut_seconds = mincut_seconds;
        stats->total_seconds = seconds_since(t0);
    }
    return result;
}

SeedResult optimal_generalized(const Network& net, const AgentParams& params, const Product& product,
                               SolveStats* stats) {
    const auto t0 = Clock::now();
    product.validate();

    // Restrict to the agents that matter for cascades (views-and-rejects and
    // relays), solve there, then add every silent acceptor to the seed set.
    std::vector<bool> keep(net.node_count());
    for (int i = 0; i < net.node_count(); ++i) {
        const AgentType t = classify_agent(params, i, product.phi);
        keep[i] = (t == AgentType::II || t == AgentType::IV);
    }
    const Subgraph sub = induced_subgraph(net, keep);
    AgentParams sub_params;
    sub_params.tau.reserve(sub.to_parent.size());
    sub_params.theta.reserve(sub.to_parent.size());
    sub_params.sigma.reserve(sub.to_parent.size());
    for (int i : sub.to_parent) {
        sub_params.tau.push_back(params.tau[i]);
        sub_params.theta.push_back(params.theta[i]);
        sub_params.sigma.push_back(params.sigma[i]);
    }

    SolveStats inner;
    const SeedResult sub_result = optimal_unbudgeted(sub.graph, sub_params, product, &inner);

    SeedResult result;
    result.method = "mincut";
    for (int s : sub_result.seeds)
        result.seeds.push_back(sub.to_parent[s]);
    for (int i : agents_of_type(params, product.phi, AgentType::III))
        result.seeds.push_back(i);
    std::sort(result.seeds.begin(), result.seeds.end());
    result.exposure = exposed_set(net, params, product, result.seeds);
    result.payoff = result.exposure.payoff;

    if (stats) {
        stats->cluster_count = inner.cluster_count;
        stats->mincut_value = inner.mincut_value;
        stats->mincut_seconds = inner.mincut_seconds;
        stats->total_seconds = seconds_since(t0);
    }
    return result;
}

std::vector<PhiPoint> phi_profile(const Network& net, const AgentParams& params, const Rational& p,
                                  const Rational& q) {
    std::vector<double> breaks{0.0, 1.0};
    breaks.insert(breaks.end(), params.tau.begin(), params.tau.end());
    breaks.insert(breaks.end(), params.theta.begin(), params.theta.end());
    breaks.insert(breaks.end(), params.sigma.begin(), params.sigma.end());
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    // Appeal intervals are closed on the left, so each breakpoint is its own
    // candidate; midpoints stand in for the open interior of each interval.
    std::vector<double> candidates;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        candidates.push_back(breaks[i]);
        if (i + 1 < breaks.size()) {
            const double mid = breaks[i] + (breaks[i + 1] - breaks[i]) / 2.0;
            if (mid > breaks[i] && mid < breaks[i + 1])
                candidates.push_back(mid);
        }
    }

    std::vector<PhiPoint> profile;
    profile.reserve(candidates.size());
    for (double phi : candidates) {
        Product product{phi, p, q};
        profile.push_back({phi, optimal_generalized(net, params, product)});
    }
    return profile;
}

PhiPoint optimal_phi(const Network& net, const AgentParams& params, const Rational& p,
                     const Rational& q) {
    auto profile = phi_profile(net, params, p, q);
    if (profile.empty())
        throw std::logic_error("empty appeal profile");
    std::size_t best = 0;
    for (std::size_t i = 1; i < profile.size(); ++i)
        if (profile[i].result.payoff > profile[best].result.payoff)
            best = i;
    return std::move(profile[best]);
}

namespace {

// Shared state for the subset search over clusters. Enumeration follows
// lexicographic order of the chosen index sets, so keeping the first strict
// maximum yields the lexicographically smallest optimal subset.
struct SubsetSearch {
    const std::vector<Cluster>& cl;
    const ScaledCoeffs& coeffs;
    int budget;
    std::vector<int> boundary_count;  // per agent: #chosen clusters claiming it
    std::vector<int> chosen;
    std::int64_t interior_sum = 0;
    std::int64_t rejected = 0;

    std::int64_t best_value = 0;  // empty set
    std::vector<int> best_set;

    SubsetSearch(const std::vector<Cluster>& cl_, const ScaledCoeffs& coeffs_, int budget_, int n)
        : cl(cl_), coeffs(coeffs_), budget(budget_), boundary_count(n, 0) {}

    std::int64_t value() const { return coeffs.p * interior_sum - coeffs.q * rejected; }

    void push(int c) {
        chosen.push_back(c);
        interior_sum += static_cast<std::int64_t>(cl[c].interior.size());
        for (int b : cl[c].boundary)
            if (boundary_count[b]++ == 0)
                ++rejected;
    }

    void pop() {
        const int c = chosen.back();
        chosen.pop_back();
        interior_sum -= static_cast<std::int64_t>(cl[c].interior.size());
        for (int b : cl[c].boundary)
            if (--boundary_count[b] == 0)
                --rejected;
    }

    void consider() {
        if (value() > best_value) {
            best_value = value();
            best_set = chosen;
        }
    }

    void search(int start) {
        if (static_cast<int>(chosen.size()) >= budget)
            return;
        for (int c = start; c < static_cast<int>(cl.size()); ++c) {
            push(c);
            consider();
            search(c + 1);
            pop();
        }
    }
};

SeedResult finish_budgeted(const BudgetedInstance& inst, const std::vector<Cluster>& cl,
                           const std::vector<int>& best_set, const char* method) {
    SeedResult result;
    result.method = method;
    for (int c : best_set)
        result.seeds.push_back(cl[c].canonical);
    std::sort(result.seeds.begin(), result.seeds.end());
    result.exposure = exposed_set(inst.net, inst.params, inst.product, result.seeds);
    result.payoff = result.exposure.payoff;
    return result;
}

void check_cluster_limit(std::size_t count, int cluster_limit) {
    if (static_cast<int>(count) > cluster_limit)
        throw EnumerationLimitError("instance has " + std::to_string(count) +
                                    " clusters; exact enumeration is limited to " +
                                    std::to_string(cluster_limit));
}

}  // namespace

SeedResult budgeted_exact(const BudgetedInstance& inst, int cluster_limit) {
    if (inst.budget < 0)
        throw std::invalid_argument("budget must be nonnegative");
    inst.product.validate();
    const auto cl = clusters(inst.net, inst.params, inst.product);
    check_cluster_limit(cl.size(), cluster_limit);

    const ScaledCoeffs coeffs(inst.product.p, inst.product.q);
    SubsetSearch search(cl, coeffs, inst.budget, inst.net.node_count());
    search.search(0);
    return finish_budgeted(inst, cl, search.best_set, "brute");
}

SeedResult budgeted_exact_parallel(const BudgetedInstance& inst, int cluster_limit) {
    if (inst.budget < 0)
        throw std::invalid_argument("budget must be nonnegative");
    inst.product.validate();
    const auto cl = clusters(inst.net, inst.params, inst.product);
    check_cluster_limit(cl.size(), cluster_limit);

    const ScaledCoeffs coeffs(inst.product.p, inst.product.q);
    const int m = static_cast<int>(cl.size());

    // One branch per smallest chosen index; concatenating branch results in
    // index order reproduces the serial lexicographic traversal, so the
    // merged answer does not depend on thread count or schedule.
    std::vector<std::int64_t> branch_value(m, 0);
    std::vector<std::vector<int>> branch_set(m);

#pragma omp parallel for schedule(dynamic)
    for (int first = 0; first < m; ++first) {
        if (inst.budget == 0)
            continue;
        SubsetSearch search(cl, coeffs, inst.budget, inst.net.node_count());
        search.best_value = 0;
        search.push(first);
        search.consider();
        search.search(first + 1);
        branch_value[first] = search.best_value;
        branch_set[first] = std::move(search.best_set);
    }

    std::int64_t best_value = 0;  // empty set
    std::vector<int> best_set;
    for (int first = 0; first < m; ++first) {
        if (branch_value[first] > best_value) {
            best_value = branch_value[first];
            best_set = branch_set[first];
        }
    }
    return finish_budgeted(inst, cl, best_set, "brute");
}

SeedResult budgeted_greedy(const BudgetedInstance& inst) {
    if (inst.budget < 0)
        throw std::invalid_argument("budget must be nonnegative");
    inst.product.validate();
    const auto cl = clusters(inst.net, inst.params, inst.product);
    const ScaledCoeffs coeffs(inst.product.p, inst.product.q);
    const int m = static_cast<int>(cl.size());

    std::vector<bool> taken(m, false);
    std::vector<int> boundary_count(inst.net.node_count(), 0);
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < inst.budget) {
        int best = -1;
        std::int64_t best_gain = 0;
        for (int c = 0; c < m; ++c) {
            if (taken[c])
                continue;
            std::int64_t new_boundary = 0;
            for (int b : cl[c].boundary)
                if (boundary_count[b] == 0)
                    ++new_boundary;
            const std::int64_t gain =
                coeffs.p * static_cast<std::int64_t>(cl[c].interior.size()) -
                coeffs.q * new_boundary;
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        if (best < 0)
            break;  // no positive marginal cluster left
        taken[best] = true;
        chosen.push_back(best);
        for (int b : cl[best].boundary)
            ++boundary_count[b];
    }
    std::sort(chosen.begin(), chosen.end());
    return finish_budgeted(inst, cl, chosen, "greedy");
}

SeedResult naive_nonnegative(const Network& net, const AgentParams& params, const Product& product) {
    product.validate();
    const auto cl = clusters(net, params, product);
    const ScaledCoeffs coeffs(product.p, product.q);

    SeedResult result;
    result.method = "naive";
    for (const auto& c : cl) {
        const std::int64_t own = coeffs.p * static_cast<std::int64_t>(c.interior.size()) -
                                 coeffs.q * static_cast<std::int64_t>(c.boundary.size());
        if (own >= 0)
            result.seeds.push_back(c.canonical);
    }
    result.exposure = exposed_set(net, params, product, result.seeds);
    result.payoff = result.exposure.payoff;
    return result;
}

const char* baseline_name(BaselineKind kind) {
    switch (kind) {
        case BaselineKind::T3: return "T3";
        case BaselineKind::T3AndT4: return "T3_and_T4";
        case BaselineKind::TauLeqPhi: return "tau_leq_phi";
    }
    return "?";
}

SeedResult baseline_seed(const Network& net, const AgentParams& params, const Product& product,
                         BaselineKind kind) {
    product.validate();
    SeedResult result;
    result.method = baseline_name(kind);
    for (int i = 0; i < net.node_count(); ++i) {
        const AgentType t = classify_agent(params, i, product.phi);
        const bool seed = (kind == BaselineKind::T3 && t == AgentType::III) ||
                          (kind == BaselineKind::T3AndT4 &&
                           (t == AgentType::III || t == AgentType::IV)) ||
                          (kind == BaselineKind::TauLeqPhi && t != AgentType::I);
        if (seed)
            result.seeds.push_back(i);
    }
    result.exposure = exposed_set(net, params, product, result.seeds);
    result.payoff = result.exposure.payoff;
    return result;
}

Rational upper_bound(const AgentParams& params, double phi, const Rational& p) {
    std::int64_t count = 0;
    for (int i = 0; i < params.size(); ++i)
        if (params.theta[i] <= phi)
            ++count;
    return p * Rational(count);
}

BudgetedInstance clique_reduction(const Network& regular_graph, int k, const Rational& epsilon) {
    const int n = regular_graph.node_count();
    if (n == 0)
        throw std::invalid_argument("empty graph");
    if (k < 1)
        throw std::invalid_argument("clique size k must be at least 1");
    const int d = static_cast<int>(regular_graph.neighbors(0).size());
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(regular_graph.neighbors(i).size()) != d)
            throw std::invalid_argument("graph is not regular");
    if (d < k)
        throw std::invalid_argument("degree " + std::to_string(d) + " is below clique size " +
                                    std::to_string(k));
    if (!epsilon.is_positive() ||
        !(epsilon * Rational(static_cast<std::int64_t>(n) * n) < Rational(1)))
        throw std::invalid_argument("epsilon must satisfy 0 < epsilon < 1/n^2");

    // Subdivide every edge with a fresh rejecting node. Original nodes accept
    // at phi = 0.5, subdivision nodes do not.
    std::int64_t next_label = 0;
    for (std::int64_t label : regular_graph.original_ids)
        next_label = std::max(next_label, label + 1);

    std::vector<std::pair<int, int>> edges;
    std::vector<std::int64_t> labels = regular_graph.original_ids;
    int next_node = n;
    for (int u = 0; u < n; ++u) {
        for (int v : regular_graph.neighbors(u)) {
            if (u >= v)
                continue;
            const int mid = next_node++;
            labels.push_back(next_label++);
            edges.emplace_back(u, mid);
            edges.emplace_back(mid, v);
        }
    }

    // Reindex in BFS order so each node (after its component's first) is
    // adjacent to an earlier one; edge-list emission then needs no self-intro
    // lines.
    std::vector<std::vector<int>> adj(next_node);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj)
        std::sort(a.begin(), a.end());
    std::vector<int> order(next_node, -1);  // provisional id -> final id
    int assigned = 0;
    std::vector<int> queue;
    for (int root = 0; root < next_node; ++root) {
        if (order[root] != -1)
            continue;
        order[root] = assigned++;
        queue.assign(1, root);
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int v : adj[queue[h]])
                if (order[v] == -1) {
                    order[v] = assigned++;
                    queue.push_back(v);
                }
    }

    std::vector<std::pair<int, int>> final_edges;
    final_edges.reserve(edges.size());
    for (auto [u, v] : edges)
        final_edges.emplace_back(order[u], order[v]);
    std::vector<std::int64_t> final_labels(next_node);
    for (int i = 0; i < next_node; ++i)
        final_labels[order[i]] = labels[i];

    BudgetedInstance inst;
    inst.net = make_network(next_node, final_edges, std::move(final_labels));
    inst.params.tau.assign(next_node, 0.0);
    inst.params.theta.assign(next_node, 0.75);
    inst.params.sigma.assign(next_node, 0.75);
    for (int i = 0; i < n; ++i) {
        inst.params.theta[order[i]] = 0.25;
        inst.params.sigma[order[i]] = 0.25;
    }
    inst.product.phi = 0.5;
    inst.product.p = Rational(d) - Rational(k - 1, 2) + epsilon;
    inst.product.q = Rational(1);
    inst.budget = k;
    return inst;
}

}  // namespace seedopt
