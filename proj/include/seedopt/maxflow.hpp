#ifndef SEEDOPT_MAXFLOW_HPP
#define SEEDOPT_MAXFLOW_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "seedopt/cascade.hpp"
#include "seedopt/rational.hpp"

namespace seedopt {

// Flow network derived from a cluster decomposition:
//   source -> one node per cluster        capacity p * |interior|
//   cluster -> each of its boundary agents  "infinite"
//   boundary agent -> sink                capacity q
// All capacities are integers after scaling p and q by the lcm of their
// denominators; "infinite" is sum(source caps) + q * |R| + 1, which no min
// cut can afford to cross.
struct FlowNetwork {
    int source = 0;
    int sink = 0;
    int cluster_count = 0;
    std::vector<int> boundary_agents;       // distinct, sorted by agent index
    std::vector<std::int64_t> source_caps;  // per cluster, scaled
    std::int64_t sink_cap = 0;              // q, scaled (same for every boundary agent)
    std::int64_t infinite_cap = 0;
    std::int64_t scale = 1;                 // payoffs are integers / scale

    struct Arc {
        int to;
        std::int64_t cap;
    };
    // node ids: 0 = source, 1..k = clusters, k+1..k+|R| = boundary, k+|R|+1 = sink
    std::vector<std::vector<Arc>> arcs;  // forward arcs only, for inspection/dump

    int cluster_node(int cluster_idx) const { return 1 + cluster_idx; }
    int boundary_node(int r_idx) const { return 1 + cluster_count + r_idx; }
    int node_count() const { return cluster_count + static_cast<int>(boundary_agents.size()) + 2; }

    std::int64_t total_source_cap() const;
};

struct CutResult {
    std::vector<bool> source_side;  // per flow-network node, true iff in X
    std::int64_t cut_value = 0;
    std::int64_t flow_value = 0;
};

FlowNetwork build_flow_network(const std::vector<Cluster>& clusters, const Rational& p,
                               const Rational& q);

// Dinic's algorithm. Exact integer arithmetic, deterministic arc order, and
// the returned X is the set of nodes reachable from the source in the final
// residual network (the inclusion-minimal source side among min cuts).
CutResult min_cut(const FlowNetwork& fn);

// Plain-text dump, one "node node capacity" line per arc, for inspection and
// differential testing. Nodes print as s, t, A<i>, R<agent-index>.
void dump_flow_network(const FlowNetwork& fn, std::ostream& out);

}  // namespace seedopt

#endif
