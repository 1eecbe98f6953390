#include "seedopt/agents.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace seedopt {

void AgentParams::validate() const {
    if (tau.size() != theta.size() || sigma.size() != theta.size())
        throw std::invalid_argument("agent parameter arrays differ in length");
    for (int i = 0; i < size(); ++i) {
        if (!(0.0 <= tau[i] && tau[i] <= theta[i] && theta[i] <= sigma[i] && sigma[i] <= 1.0))
            throw std::invalid_argument("agent " + std::to_string(i) +
                                        ": thresholds must satisfy 0 <= tau <= theta <= sigma <= 1");
    }
}

void AgentParams::coerce_basic() {
    std::fill(tau.begin(), tau.end(), 0.0);
    sigma = theta;
}

void Product::validate() const {
    if (!(phi >= 0.0 && phi <= 1.0))
        throw std::invalid_argument("phi must lie in [0,1]");
    if (!p.is_positive() || !q.is_positive())
        throw std::invalid_argument("p and q must be positive");
}

const char* agent_type_name(AgentType t) {
    switch (t) {
        case AgentType::I: return "I";
        case AgentType::II: return "II";
        case AgentType::III: return "III";
        case AgentType::IV: return "IV";
    }
    return "?";
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t trial) {
    // splitmix64 over base xor a Weyl step of the trial index
    std::uint64_t z = base ^ (0x9E3779B97F4A7C15ULL * (trial + 1));
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

AgentParams sample_params(ParamDist dist, std::uint64_t rng_seed, int n) {
    AgentParams params;
    params.tau.resize(n);
    params.theta.resize(n);
    params.sigma.resize(n);
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::normal_distribution<double> gauss(0.5, 0.1);
    for (int i = 0; i < n; ++i) {
        double d[3];
        for (double& x : d) {
            if (dist == ParamDist::Uniform) {
                x = uni(rng);
            } else {
                x = gauss(rng);
                x = std::clamp(x, 0.0, 1.0);
            }
        }
        std::sort(d, d + 3);
        params.tau[i] = d[0];
        params.theta[i] = d[1];
        params.sigma[i] = d[2];
    }
    return params;
}

AgentParams parse_params(std::istream& in, const Network& net) {
    const int n = net.node_count();
    AgentParams params;
    params.tau.assign(n, 0.0);
    params.theta.assign(n, 0.0);
    params.sigma.assign(n, 0.0);
    std::vector<bool> seen(n, false);
    const auto index = net.label_index();

    std::string line;
    int line_no = 0;
    int columns = 0;  // 2 or 4, fixed by the first data line
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t)
            toks.push_back(t);
        if (toks.size() != 2 && toks.size() != 4)
            throw ParseError(line_no, "expected 'label theta' or 'label tau theta sigma'");
        if (columns == 0)
            columns = static_cast<int>(toks.size());
        else if (columns != static_cast<int>(toks.size()))
            throw ParseError(line_no, "mixed 2- and 4-column parameter lines");

        char* end = nullptr;
        errno = 0;
        const long long label = std::strtoll(toks[0].c_str(), &end, 10);
        if (errno != 0 || end != toks[0].c_str() + toks[0].size())
            throw ParseError(line_no, "bad node label '" + toks[0] + "'");
        const auto it = index.find(label);
        if (it == index.end())
            throw ParseError(line_no, "label " + std::to_string(label) + " not in graph");
        const int i = it->second;
        if (seen[i])
            throw ParseError(line_no, "duplicate parameters for label " + std::to_string(label));
        seen[i] = true;

        auto num = [&](const std::string& s) {
            try {
                std::size_t pos = 0;
                const double v = std::stod(s, &pos);
                if (pos != s.size())
                    throw std::invalid_argument(s);
                return v;
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad threshold '" + s + "'");
            }
        };
        if (columns == 2) {
            params.tau[i] = 0.0;
            params.theta[i] = num(toks[1]);
            params.sigma[i] = params.theta[i];
        } else {
            params.tau[i] = num(toks[1]);
            params.theta[i] = num(toks[2]);
            params.sigma[i] = num(toks[3]);
        }
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i])
            throw std::runtime_error("no parameters for node label " +
                                     std::to_string(net.original_ids[i]));
    params.validate();
    return params;
}

AgentParams parse_params_file(const std::string& path, const Network& net) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open parameter file: " + path);
    return parse_params(in, net);
}

void emit_params(const AgentParams& params, const Network& net, std::ostream& out, bool basic_form) {
    out.precision(17);
    for (int i = 0; i < net.node_count(); ++i) {
        if (basic_form)
            out << net.original_ids[i] << ' ' << params.theta[i] << '\n';
        else
            out << net.original_ids[i] << ' ' << params.tau[i] << ' ' << params.theta[i] << ' '
                << params.sigma[i] << '\n';
    }
}

Subgraph induced_subgraph(const Network& net, const std::vector<bool>& keep) {
    Subgraph sub;
    const int n = net.node_count();
    sub.from_parent.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (keep[i]) {
            sub.from_parent[i] = static_cast<int>(sub.to_parent.size());
            sub.to_parent.push_back(i);
        }
    }
    const int m = static_cast<int>(sub.to_parent.size());
    sub.graph.adjacency.assign(m, {});
    sub.graph.original_ids.resize(m);
    for (int s = 0; s < m; ++s) {
        const int i = sub.to_parent[s];
        sub.graph.original_ids[s] = net.original_ids[i];
        for (int j : net.neighbors(i))
            if (keep[j])
                sub.graph.adjacency[s].push_back(sub.from_parent[j]);
    }
    return sub;
}

Subgraph propagating_subgraph(const Network& net, const AgentParams& params, double phi) {
    std::vector<bool> keep(net.node_count());
    for (int i = 0; i < net.node_count(); ++i)
        keep[i] = propagates(params, i, phi);
    return induced_subgraph(net, keep);
}

}  // namespace seedopt
