#include "seedopt/network.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace seedopt {

namespace {

bool parse_label(const std::string& tok, std::int64_t& out) {
    if (tok.empty())
        return false;
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(tok.c_str(), &end, 10);
    if (errno != 0 || end != tok.c_str() + tok.size() || v < 0)
        return false;
    out = v;
    return true;
}

void sort_dedup(std::vector<int>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool Network::has_edge(int u, int v) const {
    const auto& a = adjacency.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

int Network::dense_index(std::int64_t label) const {
    for (int i = 0; i < node_count(); ++i)
        if (original_ids[i] == label)
            return i;
    throw std::out_of_range("unknown node label " + std::to_string(label));
}

std::unordered_map<std::int64_t, int> Network::label_index() const {
    std::unordered_map<std::int64_t, int> m;
    m.reserve(original_ids.size());
    for (int i = 0; i < node_count(); ++i)
        m.emplace(original_ids[i], i);
    return m;
}

Network parse_edge_list(std::istream& in, ParseMode mode) {
    (void)mode;  // both modes collapse to the same undirected edge set
    Network net;
    std::unordered_map<std::int64_t, int> index;

    auto intern = [&](std::int64_t label) {
        auto it = index.find(label);
        if (it != index.end())
            return it->second;
        const int id = static_cast<int>(net.original_ids.size());
        index.emplace(label, id);
        net.original_ids.push_back(label);
        net.adjacency.emplace_back();
        return id;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos)
            continue;
        if (line[start] == '#')
            continue;
        std::istringstream ls(line);
        std::string tok_u, tok_v;
        if (!(ls >> tok_u >> tok_v))
            throw ParseError(line_no, "expected at least two columns");
        std::int64_t lu = 0, lv = 0;
        if (!parse_label(tok_u, lu))
            throw ParseError(line_no, "bad node label '" + tok_u + "'");
        if (!parse_label(tok_v, lv))
            throw ParseError(line_no, "bad node label '" + tok_v + "'");
        const int u = intern(lu);
        const int v = intern(lv);
        if (u == v)
            continue;
        net.adjacency[u].push_back(v);
        net.adjacency[v].push_back(u);
    }
    for (auto& a : net.adjacency)
        sort_dedup(a);
    return net;
}

Network parse_edge_list_file(const std::string& path, ParseMode mode) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file: " + path);
    return parse_edge_list(in, mode);
}

void emit_edge_list(const Network& net, std::ostream& out) {
    // Lines are ordered so that labels first appear in dense-index order:
    // node k is introduced through an edge to an earlier node, through its
    // edge to k+1, or (failing both) through a self-loop line that parsers
    // drop while interning the label. parse(emit(net)) then reproduces net
    // exactly, including isolated nodes.
    const int n = net.node_count();
    std::vector<bool> introduced(n, false);
    std::set<std::pair<int, int>> written;
    for (int k = 0; k < n; ++k) {
        if (introduced[k])
            continue;
        const auto& adj = net.adjacency[k];
        if (!adj.empty() && adj.front() < k) {
            out << net.original_ids[adj.front()] << ' ' << net.original_ids[k] << '\n';
            written.emplace(adj.front(), k);
        } else if (!adj.empty() && adj.front() == k + 1) {
            out << net.original_ids[k] << ' ' << net.original_ids[k + 1] << '\n';
            written.emplace(k, k + 1);
            introduced[k + 1] = true;
        } else {
            out << net.original_ids[k] << ' ' << net.original_ids[k] << '\n';
        }
        introduced[k] = true;
    }
    for (int u = 0; u < n; ++u)
        for (int v : net.adjacency[u])
            if (u < v && !written.count({u, v}))
                out << net.original_ids[u] << ' ' << net.original_ids[v] << '\n';
}

Network make_network(int n, const std::vector<std::pair<int, int>>& edges,
                     std::vector<std::int64_t> labels) {
    Network net;
    net.adjacency.assign(n, {});
    if (labels.empty()) {
        net.original_ids.resize(n);
        for (int i = 0; i < n; ++i)
            net.original_ids[i] = i;
    } else {
        if (static_cast<int>(labels.size()) != n)
            throw std::invalid_argument("labels size mismatch");
        net.original_ids = std::move(labels);
    }
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v)
            continue;
        net.adjacency[u].push_back(v);
        net.adjacency[v].push_back(u);
    }
    for (auto& a : net.adjacency)
        sort_dedup(a);
    return net;
}

bool operator==(const Network& a, const Network& b) {
    return a.adjacency == b.adjacency && a.original_ids == b.original_ids;
}

}  // namespace seedopt
