#include <doctest.h>

#include <algorithm>
#include <random>

#include "seedopt/optimizer.hpp"
#include "support/oracles.hpp"

using namespace seedopt;
using namespace seedopt::testing;

namespace {

Rational interior_total(const std::vector<Cluster>& cl, const Rational& p) {
    std::int64_t total = 0;
    for (const auto& c : cl)
        total += static_cast<std::int64_t>(c.interior.size());
    return p * Rational(total);
}

}  // namespace

TEST_CASE("two-cluster example: optimum seeds both clusters for payoff 1") {
    const Instance inst = example_two_clusters();
    SolveStats stats;
    const SeedResult r = optimal_unbudgeted(inst.net, inst.params, inst.product, &stats);
    CHECK(r.payoff == Rational(1));
    CHECK(r.seeds.size() == 2);
    CHECK(stats.cluster_count == 2);
    CHECK(stats.mincut_value == Rational(3));
    CHECK(r.exposure.accepted.size() == 4);
    CHECK(r.exposure.rejected.size() == 3);

    const SeedResult naive = naive_nonnegative(inst.net, inst.params, inst.product);
    CHECK(naive.payoff == Rational(0));
    CHECK(naive.seeds.empty());
}

TEST_CASE("no relaying agents: empty optimum") {
    Instance inst = example_two_clusters();
    inst.product.phi = 0.05;
    const SeedResult r = optimal_unbudgeted(inst.net, inst.params, inst.product);
    CHECK(r.seeds.empty());
    CHECK(r.payoff == Rational(0));
}

TEST_CASE("unbudgeted optimum equals exhaustive search, two-threshold model") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int round = 0; round < 120; ++round) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Network net = random_graph(rng, n, 0.3);
        const AgentParams params = random_params_basic(rng, n);
        const Product product{uni(rng), random_coeff(rng), random_coeff(rng)};

        SolveStats stats;
        const SeedResult r = optimal_unbudgeted(net, params, product, &stats);
        const OracleBest best = oracle_best_seed_set(net, params, product, true);
        CHECK(r.payoff == best.payoff);
        CHECK(r.payoff == oracle_payoff(net, params, product, r.seeds));
        CHECK(r.payoff >= Rational(0));

        // payoff identity against the cut
        const auto cl = clusters(net, params, product);
        CHECK(r.payoff == interior_total(cl, product.p) - stats.mincut_value);
    }
}

TEST_CASE("generalized optimum equals exhaustive search over all seed sets") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int round = 0; round < 120; ++round) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Network net = random_graph(rng, n, 0.3);
        const AgentParams params = random_params_general(rng, n);
        const Product product{uni(rng), random_coeff(rng), random_coeff(rng)};

        const SeedResult r = optimal_generalized(net, params, product);
        const OracleBest best = oracle_best_seed_set(net, params, product, false);
        CHECK(r.payoff == best.payoff);
        CHECK(r.payoff == oracle_payoff(net, params, product, r.seeds));

        // every silent acceptor is seeded, so the optimum is at least p*|T3|
        std::int64_t t3 = 0;
        for (int i = 0; i < n; ++i)
            if (classify_agent(params, i, product.phi) == AgentType::III)
                ++t3;
        CHECK(r.payoff >= product.p * Rational(t3));
    }
}

TEST_CASE("all-silent instance: optimum is exactly the Type III set") {
    std::mt19937_64 rng(43);
    const int n = 9;
    const Network net = random_graph(rng, n, 0.4);
    AgentParams params = random_params_general(rng, n);
    params.tau = params.theta;
    std::fill(params.sigma.begin(), params.sigma.end(), 1.0);
    const Product product{0.6, Rational(2), Rational(3)};

    const SeedResult r = optimal_generalized(net, params, product);
    std::vector<int> t3;
    for (int i = 0; i < n; ++i)
        if (classify_agent(params, i, product.phi) == AgentType::III)
            t3.push_back(i);
    CHECK(r.seeds == t3);
    CHECK(r.payoff == product.p * Rational(static_cast<std::int64_t>(t3.size())));
}

TEST_CASE("generalized solver reduces to the two-threshold solver on basic instances") {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int round = 0; round < 40; ++round) {
        const Network net = random_graph(rng, 10, 0.3);
        const AgentParams params = random_params_basic(rng, 10);
        const Product product{uni(rng), random_coeff(rng), random_coeff(rng)};
        const SeedResult a = optimal_unbudgeted(net, params, product);
        const SeedResult b = optimal_generalized(net, params, product);
        CHECK(a.seeds == b.seeds);
        CHECK(a.payoff == b.payoff);
    }
}

TEST_CASE("appeal profile of the rising-and-falling example") {
    const Instance inst = example_nonmonotone(0.0);
    const auto profile = phi_profile(inst.net, inst.params, inst.product.p, inst.product.q);
    for (const auto& pt : profile) {
        Rational expected;
        if (pt.phi < 0.2)
            expected = Rational(0);
        else if (pt.phi < 0.5)
            expected = Rational(1);
        else if (pt.phi < 1.0)
            expected = Rational(0);
        else
            expected = Rational(7);  // everyone accepts at phi = 1
        CHECK(pt.result.payoff == expected);
    }
    const PhiPoint best = optimal_phi(inst.net, inst.params, inst.product.p, inst.product.q);
    CHECK(best.phi == 1.0);
    CHECK(best.result.payoff == Rational(7));
}

TEST_CASE("appeal 0: only zero-criticality agents contribute") {
    const Network net = make_network(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    AgentParams params;
    params.tau.assign(5, 0.0);
    params.theta = {0.0, 0.0, 0.3, 0.6, 0.9};
    params.sigma = {0.6, 0.7, 0.5, 0.8, 1.0};
    const Product product{0.0, Rational(3), Rational(1)};
    const SeedResult r = optimal_generalized(net, params, product);
    CHECK(r.payoff == Rational(6));  // p times the two theta = 0 agents
    CHECK(r.seeds == std::vector<int>{0, 1});
}

TEST_CASE("single agent with all thresholds at 0.5") {
    const Network net = make_network(1, {});
    AgentParams params;
    params.tau = {0.5};
    params.theta = {0.5};
    params.sigma = {0.5};
    const PhiPoint best = optimal_phi(net, params, Rational(1), Rational(1));
    CHECK(best.phi >= 0.5);
    CHECK(best.result.payoff == Rational(1));
}

TEST_CASE("optimal_phi matches a dense appeal grid") {
    std::mt19937_64 rng(45);
    auto grid_max = [](const Network& net, const AgentParams& params, const Rational& p,
                       const Rational& q, int steps) {
        Rational best(0);
        for (int i = 0; i <= steps; ++i) {
            const Product product{static_cast<double>(i) / steps, p, q};
            const Rational value = optimal_generalized(net, params, product).payoff;
            if (value > best)
                best = value;
        }
        return best;
    };

    SUBCASE("exact agreement when threshold gaps exceed the grid step") {
        // thresholds on a 1/16 lattice: every constant piece of the payoff is
        // at least 1/16 wide, so a grid of step 1/(8n) cannot miss one
        for (int round = 0; round < 10; ++round) {
            const int n = 2 + static_cast<int>(rng() % 7);
            const Network net = random_graph(rng, n, 0.35);
            AgentParams params;
            params.tau.resize(n);
            params.theta.resize(n);
            params.sigma.resize(n);
            for (int i = 0; i < n; ++i) {
                double d[3] = {static_cast<double>(rng() % 17) / 16.0,
                               static_cast<double>(rng() % 17) / 16.0,
                               static_cast<double>(rng() % 17) / 16.0};
                std::sort(d, d + 3);
                params.tau[i] = d[0];
                params.theta[i] = d[1];
                params.sigma[i] = d[2];
            }
            const Rational p = random_coeff(rng), q = random_coeff(rng);
            const PhiPoint best = optimal_phi(net, params, p, q);
            CHECK(best.result.payoff == grid_max(net, params, p, q, 8 * n));
        }
    }

    SUBCASE("no grid point ever beats the profile maximum") {
        for (int round = 0; round < 6; ++round) {
            const int n = 2 + static_cast<int>(rng() % 7);
            const Network net = random_graph(rng, n, 0.35);
            const AgentParams params = random_params_general(rng, n);
            const Rational p = random_coeff(rng), q = random_coeff(rng);
            const PhiPoint best = optimal_phi(net, params, p, q);
            CHECK(grid_max(net, params, p, q, 8 * n) <= best.result.payoff);
        }
    }
}

TEST_CASE("budgeted exact on the submodularity example") {
    const Instance inst = example_submodularity();
    BudgetedInstance binst{inst.net, inst.params, inst.product, 1};
    const SeedResult r = budgeted_exact(binst);
    CHECK(r.payoff == Rational(1));
    REQUIRE(r.seeds.size() == 1);
    // the winning cluster is {1,2,3}; its canonical is node 1
    CHECK(r.seeds[0] == inst.net.dense_index(1));

    binst.budget = 0;
    const SeedResult r0 = budgeted_exact(binst);
    CHECK(r0.seeds.empty());
    CHECK(r0.payoff == Rational(0));
}

TEST_CASE("budget at least the cluster count recovers the unbudgeted optimum") {
    std::mt19937_64 rng(46);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int round = 0; round < 40; ++round) {
        const Network net = random_graph(rng, 10, 0.3);
        const AgentParams params = random_params_basic(rng, 10);
        const Product product{uni(rng), random_coeff(rng), random_coeff(rng)};
        const auto cl = clusters(net, params, product);
        BudgetedInstance binst{net, params, product, static_cast<int>(cl.size())};
        const SeedResult budgeted = budgeted_exact(binst);
        const SeedResult unbudgeted = optimal_unbudgeted(net, params, product);
        CHECK(budgeted.payoff == unbudgeted.payoff);
    }
}

TEST_CASE("two-cluster example under budget: exact escapes the greedy trap") {
    const Instance inst = example_two_clusters();
    BudgetedInstance binst{inst.net, inst.params, inst.product, 2};
    const SeedResult exact = budgeted_exact(binst);
    CHECK(exact.payoff == Rational(1));
    const SeedResult greedy = budgeted_greedy(binst);
    CHECK(greedy.payoff == Rational(0));
    CHECK(greedy.seeds.empty());
}

TEST_CASE("greedy equals exact when a single positive cluster exists") {
    const Instance inst = example_nonmonotone(0.3);
    BudgetedInstance binst{inst.net, inst.params, inst.product, 3};
    CHECK(budgeted_greedy(binst).payoff == budgeted_exact(binst).payoff);
}

TEST_CASE("budgeted exact matches exhaustive node-subset search, greedy never beats it") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int round = 0; round < 50; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Network net = random_graph(rng, n, 0.35);
        const AgentParams params = random_params_basic(rng, n);
        const Product product{uni(rng), random_coeff(rng), random_coeff(rng)};
        const int k = static_cast<int>(rng() % 4);
        BudgetedInstance binst{net, params, product, k};

        const SeedResult exact = budgeted_exact(binst);
        const OracleBest best = oracle_best_budgeted(net, params, product, k);
        CHECK(exact.payoff == best.payoff);
        CHECK(static_cast<int>(exact.seeds.size()) <= k);
        CHECK(exact.payoff == oracle_payoff(net, params, product, exact.seeds));

        const SeedResult greedy = budgeted_greedy(binst);
        CHECK(greedy.payoff <= exact.payoff);
    }
}

TEST_CASE("parallel subset search returns the serial answer") {
    std::mt19937_64 rng(48);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int round = 0; round < 40; ++round) {
        const Network net = random_graph(rng, 12, 0.25);
        const AgentParams params = random_params_basic(rng, 12);
        const Product product{uni(rng), random_coeff(rng), random_coeff(rng)};
        BudgetedInstance binst{net, params, product, static_cast<int>(rng() % 5)};
        const SeedResult serial = budgeted_exact(binst);
        const SeedResult parallel = budgeted_exact_parallel(binst);
        CHECK(serial.payoff == parallel.payoff);
        CHECK(serial.seeds == parallel.seeds);
    }
}

TEST_CASE("equal-value ties go to the lexicographically smallest cluster set") {
    // two interchangeable positive singleton clusters; budget 1 must pick
    // the first
    const Network net = make_network(2, {});
    AgentParams params;
    params.tau.assign(2, 0.0);
    params.theta.assign(2, 0.1);
    params.sigma.assign(2, 0.1);
    BudgetedInstance binst{net, params, Product{0.5, Rational(1), Rational(1)}, 1};
    for (auto solve : {budgeted_exact, budgeted_exact_parallel}) {
        const SeedResult r = solve(binst, kDefaultClusterLimit);
        CHECK(r.payoff == Rational(1));
        CHECK(r.seeds == std::vector<int>{0});
    }
}

TEST_CASE("exact enumeration refuses above the cluster limit") {
    // 3 isolated accepting nodes = 3 clusters; limit 2 refuses
    const Network net = make_network(3, {});
    AgentParams params;
    params.tau.assign(3, 0.0);
    params.theta.assign(3, 0.1);
    params.sigma.assign(3, 0.1);
    BudgetedInstance binst{net, params, Product{0.5, Rational(1), Rational(1)}, 2};
    CHECK_THROWS_WITH_AS(budgeted_exact(binst, 2), doctest::Contains("limited to 2"),
                         EnumerationLimitError);
    CHECK_THROWS_AS(budgeted_exact_parallel(binst, 2), EnumerationLimitError);
    CHECK_NOTHROW(budgeted_exact(binst, 3));
}

TEST_CASE("clique reduction of K4 with k=3") {
    const Network k4 = complete_graph(4);
    const Rational eps(1, 100);
    const BudgetedInstance inst = clique_reduction(k4, 3, eps);
    CHECK(inst.net.node_count() == 4 + 6);
    CHECK(inst.net.edge_count() == 12);
    CHECK(inst.product.p == Rational(2) + eps);
    CHECK(inst.product.q == Rational(1));
    CHECK(inst.budget == 3);

    const SeedResult r = budgeted_exact(inst);
    CHECK(r.payoff == Rational(3, 100));  // 3 * epsilon, exactly
}

TEST_CASE("clique reduction rejects bad inputs") {
    CHECK_THROWS_AS(clique_reduction(cycle_graph(5), 3, Rational(1, 100)),
                    std::invalid_argument);  // d=2 < k=3
    const Network path = make_network(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_WITH_AS(clique_reduction(path, 1, Rational(1, 100)),
                         doctest::Contains("regular"), std::invalid_argument);
    CHECK_THROWS_AS(clique_reduction(complete_graph(4), 3, Rational(1, 2)),
                    std::invalid_argument);  // epsilon >= 1/n^2
    CHECK_THROWS_AS(clique_reduction(complete_graph(4), 3, Rational(-1, 100)),
                    std::invalid_argument);
}

TEST_CASE("reduction soundness across a small regular-graph family") {
    struct Case {
        Network graph;
        int k;
    };
    const Case cases[] = {
        {complete_graph(4), 3}, {complete_graph(5), 3}, {complete_graph(5), 4},
        {petersen_graph(), 3},  {cycle_graph(5), 2},
    };
    for (const auto& c : cases) {
        const BudgetedInstance inst = clique_reduction(c.graph, c.k, Rational(1, 200));
        const SeedResult r = budgeted_exact(inst);
        CHECK(r.payoff.is_positive() == has_k_clique(c.graph, c.k));
    }
}

TEST_CASE("baselines") {
    SUBCASE("all agents silent acceptors: T3 seeding meets the upper bound") {
        const Network net = make_network(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
        AgentParams params;
        params.tau.assign(5, 0.0);
        params.theta.assign(5, 0.2);
        params.sigma.assign(5, 1.0);
        const Product product{0.5, Rational(2), Rational(1)};
        const SeedResult r = baseline_seed(net, params, product, BaselineKind::T3);
        CHECK(r.payoff == Rational(10));
        CHECK(r.payoff == upper_bound(params, product.phi, product.p));
    }
    SUBCASE("two-cluster example: seeding Types III and IV pays 1") {
        const Instance inst = example_two_clusters();
        const SeedResult r = baseline_seed(inst.net, inst.params, inst.product,
                                           BaselineKind::T3AndT4);
        CHECK(r.seeds.size() == 4);
        CHECK(r.payoff == Rational(1));
    }
    SUBCASE("baselines never beat the optimum") {
        std::mt19937_64 rng(49);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (int round = 0; round < 40; ++round) {
            const Network net = random_graph(rng, 11, 0.3);
            const AgentParams params = random_params_general(rng, 11);
            const Product product{uni(rng), random_coeff(rng), random_coeff(rng)};
            const Rational opt = optimal_generalized(net, params, product).payoff;
            for (BaselineKind kind :
                 {BaselineKind::T3, BaselineKind::T3AndT4, BaselineKind::TauLeqPhi})
                CHECK(baseline_seed(net, params, product, kind).payoff <= opt);
            CHECK(opt <= upper_bound(params, product.phi, product.p));
        }
    }
}

TEST_CASE("supermodularity and submodularity both fail on the seven-node example") {
    const Instance inst = example_submodularity();
    auto pay = [&](std::vector<std::int64_t> labels) {
        std::vector<int> seeds;
        for (auto l : labels)
            seeds.push_back(inst.net.dense_index(l));
        return payoff(inst.net, inst.params, inst.product, seeds);
    };
    // supermodularity would need pi({1,7}) - pi({1}) <= pi({1,6,7}) - pi({1,6})
    CHECK(pay({1, 7}) - pay({1}) == Rational(2));
    CHECK(pay({1, 6, 7}) - pay({1, 6}) == Rational(0));
    // submodularity would need pi({7}) - pi({}) >= pi({1,7}) - pi({1})
    CHECK(pay({7}) - Rational(0) == Rational(0));
}
