#ifndef SEEDOPT_CASCADE_HPP
#define SEEDOPT_CASCADE_HPP

#include <vector>

#include "seedopt/agents.hpp"
#include "seedopt/network.hpp"
#include "seedopt/rational.hpp"

namespace seedopt {

// Outcome of seeding a set S: who hears about the product and how they react.
// exposed = accepted + rejected + ignored, pairwise disjoint, all sorted.
// payoff = p * |accepted| - q * |rejected|, exact.
struct ExposureResult {
    std::vector<int> exposed;
    std::vector<int> accepted;   // Types III and IV
    std::vector<int> rejected;   // Type II
    std::vector<int> ignored;    // Type I
    Rational payoff;
};

// A maximal relaying component together with the rejecting fringe it drags in.
// canonical is the smallest interior index; interior and boundary are sorted.
struct Cluster {
    int canonical = -1;
    std::vector<int> interior;  // Type IV agents, one connected component
    std::vector<int> boundary;  // adjacent Type II agents
};

// Word-of-mouth closure. Every seed is exposed; exposure spreads from an
// exposed agent to all its neighbors iff that agent relays (Type IV). Seeds
// of any type are allowed: a non-relaying seed is exposed, takes its own
// payoff, and stops there.
ExposureResult exposed_set(const Network& net, const AgentParams& params, const Product& product,
                           const std::vector<int>& seeds);

Rational payoff(const Network& net, const AgentParams& params, const Product& product,
                const std::vector<int>& seeds);

// All clusters at this appeal: interiors are the connected components of the
// Type IV subgraph; each boundary collects the Type II neighbors of that
// component. Boundaries may overlap across clusters. Ordered by canonical.
std::vector<Cluster> clusters(const Network& net, const AgentParams& params, const Product& product);

}  // namespace seedopt

#endif
