#include "seedopt/cascade.hpp"

#include <algorithm>
#include <stdexcept>

namespace seedopt {

ExposureResult exposed_set(const Network& net, const AgentParams& params, const Product& product,
                           const std::vector<int>& seeds) {
    const int n = net.node_count();
    std::vector<bool> exposed(n, false);
    std::vector<int> queue;
    queue.reserve(seeds.size());

    for (int s : seeds) {
        if (s < 0 || s >= n)
            throw std::out_of_range("seed index " + std::to_string(s) + " out of range");
        if (!exposed[s]) {
            exposed[s] = true;
            if (propagates(params, s, product.phi))
                queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v : net.neighbors(u)) {
            if (!exposed[v]) {
                exposed[v] = true;
                if (propagates(params, v, product.phi))
                    queue.push_back(v);
            }
        }
    }

    ExposureResult result;
    for (int i = 0; i < n; ++i) {
        if (!exposed[i])
            continue;
        result.exposed.push_back(i);
        switch (classify_agent(params, i, product.phi)) {
            case AgentType::I: result.ignored.push_back(i); break;
            case AgentType::II: result.rejected.push_back(i); break;
            case AgentType::III:
            case AgentType::IV: result.accepted.push_back(i); break;
        }
    }
    result.payoff = product.p * Rational(static_cast<std::int64_t>(result.accepted.size())) -
                    product.q * Rational(static_cast<std::int64_t>(result.rejected.size()));
    return result;
}

Rational payoff(const Network& net, const AgentParams& params, const Product& product,
                const std::vector<int>& seeds) {
    return exposed_set(net, params, product, seeds).payoff;
}

std::vector<Cluster> clusters(const Network& net, const AgentParams& params, const Product& product) {
    const int n = net.node_count();
    std::vector<AgentType> type(n);
    for (int i = 0; i < n; ++i)
        type[i] = classify_agent(params, i, product.phi);

    std::vector<Cluster> out;
    std::vector<int> comp(n, -1);
    std::vector<int> boundary_mark(n, -1);  // cluster id that last claimed the agent
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
        if (type[i] != AgentType::IV || comp[i] != -1)
            continue;
        const int cid = static_cast<int>(out.size());
        Cluster c;
        c.canonical = i;
        comp[i] = cid;
        stack.push_back(i);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            c.interior.push_back(u);
            for (int v : net.neighbors(u)) {
                if (type[v] == AgentType::IV) {
                    if (comp[v] == -1) {
                        comp[v] = cid;
                        stack.push_back(v);
                    }
                } else if (type[v] == AgentType::II && boundary_mark[v] != cid) {
                    boundary_mark[v] = cid;
                    c.boundary.push_back(v);
                }
            }
        }
        std::sort(c.interior.begin(), c.interior.end());
        std::sort(c.boundary.begin(), c.boundary.end());
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace seedopt
