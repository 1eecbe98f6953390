#ifndef SEEDOPT_AGENTS_HPP
#define SEEDOPT_AGENTS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "seedopt/network.hpp"
#include "seedopt/rational.hpp"

namespace seedopt {

// Per-agent thresholds, tau <= theta <= sigma, all in [0,1].
//   tau    minimum appeal at which the agent even views the product
//   theta  minimum appeal for acceptance
//   sigma  minimum appeal at which an accepting agent relays to neighbors
// The two-threshold model is the special case tau = 0, theta = sigma.
struct AgentParams {
    std::vector<double> tau;
    std::vector<double> theta;
    std::vector<double> sigma;

    int size() const { return static_cast<int>(theta.size()); }

    void validate() const;  // throws on violated ordering or range

    // Rewrites every agent to tau = 0, sigma = theta.
    void coerce_basic();
};

struct Product {
    double phi = 0.0;   // appeal in [0,1]
    Rational p{1};      // payoff per acceptance, > 0
    Rational q{1};      // penalty per rejection, > 0

    void validate() const;
};

enum class AgentType : std::uint8_t {
    I,    // phi < tau: never views the product
    II,   // tau <= phi < theta: views and rejects
    III,  // theta <= phi < sigma: accepts, does not relay
    IV,   // phi >= sigma: accepts and relays
};

inline AgentType classify_agent(const AgentParams& params, int i, double phi) {
    if (phi < params.tau[i])
        return AgentType::I;
    if (phi < params.theta[i])
        return AgentType::II;
    if (phi < params.sigma[i])
        return AgentType::III;
    return AgentType::IV;
}

inline bool propagates(const AgentParams& params, int i, double phi) {
    return phi >= params.sigma[i];
}

const char* agent_type_name(AgentType t);

enum class ParamDist { Uniform, Gaussian };

// Three independent draws per agent, sorted ascending into (tau, theta, sigma).
// Gaussian draws (mean 0.5, sd 0.1) are clamped into [0,1] before sorting.
// Identical seed gives identical output.
AgentParams sample_params(ParamDist dist, std::uint64_t rng_seed, int n);

// Deterministic per-trial seed derivation (splitmix64 mixing).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t trial);

// Parameter files: '#' comments; per agent either "label tau theta sigma" or
// "label theta" (the latter sets tau = 0, sigma = theta). Every node label of
// the network must appear exactly once.
AgentParams parse_params(std::istream& in, const Network& net);
AgentParams parse_params_file(const std::string& path, const Network& net);
void emit_params(const AgentParams& params, const Network& net, std::ostream& out, bool basic_form = false);

struct Subgraph {
    Network graph;
    std::vector<int> to_parent;    // sub index -> parent index
    std::vector<int> from_parent;  // parent index -> sub index or -1
};

// Subgraph induced on the agents kept by `keep`.
Subgraph induced_subgraph(const Network& net, const std::vector<bool>& keep);

// Subgraph of agents that relay at this appeal (two-threshold model: the
// accepting subgraph).
Subgraph propagating_subgraph(const Network& net, const AgentParams& params, double phi);

}  // namespace seedopt

#endif
