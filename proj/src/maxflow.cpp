#include "seedopt/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace seedopt {

std::int64_t FlowNetwork::total_source_cap() const {
    std::int64_t sum = 0;
    for (std::int64_t c : source_caps)
        sum += c;
    return sum;
}

FlowNetwork build_flow_network(const std::vector<Cluster>& clusters, const Rational& p,
                               const Rational& q) {
    if (!p.is_positive() || !q.is_positive())
        throw std::invalid_argument("p and q must be positive");

    FlowNetwork fn;
    fn.scale = lcm_i64(p.den, q.den);
    const std::int64_t p_scaled = p.num * (fn.scale / p.den);
    const std::int64_t q_scaled = q.num * (fn.scale / q.den);
    fn.cluster_count = static_cast<int>(clusters.size());

    for (const auto& c : clusters)
        for (int b : c.boundary)
            fn.boundary_agents.push_back(b);
    std::sort(fn.boundary_agents.begin(), fn.boundary_agents.end());
    fn.boundary_agents.erase(std::unique(fn.boundary_agents.begin(), fn.boundary_agents.end()),
                             fn.boundary_agents.end());

    fn.source = 0;
    fn.sink = fn.cluster_count + static_cast<int>(fn.boundary_agents.size()) + 1;
    fn.sink_cap = q_scaled;

    std::int64_t cap_sum = 0;
    for (const auto& c : clusters) {
        const std::int64_t cap = p_scaled * static_cast<std::int64_t>(c.interior.size());
        fn.source_caps.push_back(cap);
        cap_sum += cap;
    }
    fn.infinite_cap = cap_sum + q_scaled * static_cast<std::int64_t>(fn.boundary_agents.size()) + 1;

    fn.arcs.assign(fn.node_count(), {});
    for (int i = 0; i < fn.cluster_count; ++i)
        fn.arcs[fn.source].push_back({fn.cluster_node(i), fn.source_caps[i]});
    for (int i = 0; i < fn.cluster_count; ++i) {
        for (int b : clusters[i].boundary) {
            const auto it =
                std::lower_bound(fn.boundary_agents.begin(), fn.boundary_agents.end(), b);
            const int r = static_cast<int>(it - fn.boundary_agents.begin());
            fn.arcs[fn.cluster_node(i)].push_back({fn.boundary_node(r), fn.infinite_cap});
        }
    }
    for (int r = 0; r < static_cast<int>(fn.boundary_agents.size()); ++r)
        fn.arcs[fn.boundary_node(r)].push_back({fn.sink, fn.sink_cap});
    return fn;
}

namespace {

// Standard Dinic residual representation: paired edges, forward at even index.
struct Dinic {
    struct Edge {
        int to;
        std::int64_t cap;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> head;
    std::vector<int> level, iter;
    int n;

    explicit Dinic(int n_) : head(n_), n(n_) {}

    void add_edge(int u, int v, std::int64_t cap) {
        head[u].push_back(static_cast<int>(edges.size()));
        edges.push_back({v, cap});
        head[v].push_back(static_cast<int>(edges.size()));
        edges.push_back({u, 0});
    }

    bool bfs(int s, int t) {
        level.assign(n, -1);
        std::vector<int> queue{s};
        level[s] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const int u = queue[h];
            for (int id : head[u]) {
                const Edge& e = edges[id];
                if (e.cap > 0 && level[e.to] < 0) {
                    level[e.to] = level[u] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        return level[t] >= 0;
    }

    std::int64_t dfs(int u, int t, std::int64_t limit) {
        if (u == t)
            return limit;
        for (int& i = iter[u]; i < static_cast<int>(head[u].size()); ++i) {
            const int id = head[u][i];
            Edge& e = edges[id];
            if (e.cap > 0 && level[e.to] == level[u] + 1) {
                const std::int64_t d = dfs(e.to, t, std::min(limit, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    edges[id ^ 1].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    std::int64_t max_flow(int s, int t) {
        std::int64_t flow = 0;
        while (bfs(s, t)) {
            iter.assign(n, 0);
            while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max()))
                flow += f;
        }
        return flow;
    }

    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(n, false);
        std::vector<int> queue{s};
        seen[s] = true;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            for (int id : head[queue[h]]) {
                const Edge& e = edges[id];
                if (e.cap > 0 && !seen[e.to]) {
                    seen[e.to] = true;
                    queue.push_back(e.to);
                }
            }
        }
        return seen;
    }
};

}  // namespace

CutResult min_cut(const FlowNetwork& fn) {
    Dinic dinic(fn.node_count());
    for (int u = 0; u < fn.node_count(); ++u)
        for (const auto& a : fn.arcs[u])
            dinic.add_edge(u, a.to, a.cap);

    CutResult result;
    result.flow_value = dinic.max_flow(fn.source, fn.sink);
    result.source_side = dinic.residual_reachable(fn.source);

    // Cut value recomputed from the original capacities crossing X -> Y; the
    // max-flow/min-cut certificate requires it to equal the flow value.
    result.cut_value = 0;
    for (int u = 0; u < fn.node_count(); ++u) {
        if (!result.source_side[u])
            continue;
        for (const auto& a : fn.arcs[u])
            if (!result.source_side[a.to])
                result.cut_value += a.cap;
    }
    return result;
}

void dump_flow_network(const FlowNetwork& fn, std::ostream& out) {
    auto name = [&](int node) -> std::string {
        if (node == fn.source)
            return "s";
        if (node == fn.sink)
            return "t";
        if (node <= fn.cluster_count)
            return "A" + std::to_string(node - 1);
        return "R" + std::to_string(fn.boundary_agents[node - fn.cluster_count - 1]);
    };
    for (int u = 0; u < fn.node_count(); ++u)
        for (const auto& a : fn.arcs[u])
            out << name(u) << ' ' << name(a.to) << ' ' << a.cap << '\n';
}

}  // namespace seedopt
