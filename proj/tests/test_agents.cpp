#include <doctest.h>

#include <random>

#include "seedopt/agents.hpp"
#include "support/oracles.hpp"

using namespace seedopt;

namespace {

AgentParams one_agent(double tau, double theta, double sigma) {
    AgentParams p;
    p.tau = {tau};
    p.theta = {theta};
    p.sigma = {sigma};
    return p;
}

}  // namespace

TEST_CASE("classification cases") {
    const AgentParams p = one_agent(0.1, 0.4, 0.8);
    CHECK(classify_agent(p, 0, 0.5) == AgentType::III);
    CHECK(classify_agent(p, 0, 0.05) == AgentType::I);
    CHECK(classify_agent(p, 0, 0.2) == AgentType::II);
    CHECK(classify_agent(p, 0, 0.9) == AgentType::IV);

    const AgentParams basic = one_agent(0.0, 0.3, 0.3);
    CHECK(classify_agent(basic, 0, 0.3) == AgentType::IV);
    CHECK(classify_agent(basic, 0, 0.29) == AgentType::II);
}

TEST_CASE("classification intervals are closed on the left") {
    const AgentParams p = one_agent(0.1, 0.4, 0.8);
    CHECK(classify_agent(p, 0, 0.1) == AgentType::II);   // phi = tau is not Type I
    CHECK(classify_agent(p, 0, 0.4) == AgentType::III);  // phi = theta is not Type II
    CHECK(classify_agent(p, 0, 0.8) == AgentType::IV);   // phi = sigma is Type IV
}

TEST_CASE("classification partitions for random parameters") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int round = 0; round < 200; ++round) {
        const AgentParams p = testing::random_params_general(rng, 1);
        const double phi = uni(rng);
        const AgentType t = classify_agent(p, 0, phi);
        const int matches = (phi < p.tau[0] ? 1 : 0) +
                            (phi >= p.tau[0] && phi < p.theta[0] ? 1 : 0) +
                            (phi >= p.theta[0] && phi < p.sigma[0] ? 1 : 0) +
                            (phi >= p.sigma[0] ? 1 : 0);
        CHECK(matches == 1);
        CHECK(agent_type_name(t) != nullptr);
    }
}

TEST_CASE("two-threshold embedding yields only Types II and IV") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int round = 0; round < 100; ++round) {
        const AgentParams p = testing::random_params_basic(rng, 8);
        const double phi = uni(rng);
        for (int i = 0; i < 8; ++i) {
            const AgentType t = classify_agent(p, i, phi);
            CHECK((t == AgentType::II || t == AgentType::IV));
            CHECK(propagates(p, i, phi) == (t == AgentType::IV));
        }
    }
}

TEST_CASE("sample_params ordering invariant, both distributions") {
    for (ParamDist dist : {ParamDist::Uniform, ParamDist::Gaussian}) {
        const AgentParams p = sample_params(dist, 123, 500);
        CHECK_NOTHROW(p.validate());
        for (int i = 0; i < p.size(); ++i) {
            CHECK(p.tau[i] >= 0.0);
            CHECK(p.sigma[i] <= 1.0);
        }
    }
}

TEST_CASE("sample_params empty and deterministic") {
    CHECK(sample_params(ParamDist::Uniform, 1, 0).size() == 0);

    const AgentParams a = sample_params(ParamDist::Uniform, 42, 64);
    const AgentParams b = sample_params(ParamDist::Uniform, 42, 64);
    CHECK(a.tau == b.tau);
    CHECK(a.theta == b.theta);
    CHECK(a.sigma == b.sigma);

    const AgentParams c = sample_params(ParamDist::Uniform, 43, 64);
    CHECK(a.theta != c.theta);
}

TEST_CASE("mix_seed separates trials") {
    CHECK(mix_seed(0, 0) != mix_seed(0, 1));
    CHECK(mix_seed(0, 0) != mix_seed(1, 0));
    CHECK(mix_seed(5, 7) == mix_seed(5, 7));
}

TEST_CASE("propagating subgraph of the two-cluster example") {
    const auto inst = testing::example_two_clusters();
    const Subgraph sub = propagating_subgraph(inst.net, inst.params, inst.product.phi);
    CHECK(sub.graph.node_count() == 4);
    CHECK(sub.graph.edge_count() == 2);
    // the only edges among accepting agents are 1-2 and 6-7 (labels)
    CHECK(sub.graph.has_edge(sub.from_parent[0], sub.from_parent[1]));
    CHECK(sub.graph.has_edge(sub.from_parent[5], sub.from_parent[6]));
}

TEST_CASE("propagating subgraph is empty when phi is below every tau") {
    std::mt19937_64 rng(9);
    AgentParams params = testing::random_params_general(rng, 6);
    for (double& t : params.tau)
        t = 0.5 + t / 2.0;  // push every tau above 0.4
    for (int i = 0; i < 6; ++i) {
        params.theta[i] = std::max(params.theta[i], params.tau[i]);
        params.sigma[i] = std::max(params.sigma[i], params.theta[i]);
    }
    const Network net = testing::random_graph(rng, 6, 0.5);
    const Subgraph sub = propagating_subgraph(net, params, 0.1);
    CHECK(sub.graph.node_count() == 0);
}

TEST_CASE("propagating subgraph equals a brute-force edge filter") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int round = 0; round < 25; ++round) {
        const Network net = testing::random_graph(rng, 12, 0.35);
        const AgentParams params = testing::random_params_general(rng, 12);
        const double phi = uni(rng);
        const Subgraph sub = propagating_subgraph(net, params, phi);

        std::size_t expected_edges = 0;
        int expected_nodes = 0;
        for (int u = 0; u < 12; ++u) {
            if (propagates(params, u, phi))
                ++expected_nodes;
            for (int v : net.neighbors(u))
                if (u < v && propagates(params, u, phi) && propagates(params, v, phi))
                    ++expected_edges;
        }
        CHECK(sub.graph.node_count() == expected_nodes);
        CHECK(sub.graph.edge_count() == expected_edges);
        for (int s = 0; s < sub.graph.node_count(); ++s)
            for (int t : sub.graph.neighbors(s))
                CHECK(net.has_edge(sub.to_parent[s], sub.to_parent[t]));
    }
}
