#ifndef SEEDOPT_NETWORK_HPP
#define SEEDOPT_NETWORK_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace seedopt {

// Undirected simple graph over densely reindexed agents.
// Node labels from the source file are kept in original_ids (dense -> label,
// first-appearance order); adjacency lists are sorted and deduplicated.
struct Network {
    std::vector<std::vector<int>> adjacency;
    std::vector<std::int64_t> original_ids;

    int node_count() const { return static_cast<int>(adjacency.size()); }

    std::size_t edge_count() const {
        std::size_t deg = 0;
        for (const auto& a : adjacency)
            deg += a.size();
        return deg / 2;
    }

    const std::vector<int>& neighbors(int i) const { return adjacency.at(i); }

    bool has_edge(int u, int v) const;

    // Throws std::out_of_range for unknown labels.
    int dense_index(std::int64_t label) const;

    std::unordered_map<std::int64_t, int> label_index() const;
};

enum class ParseMode {
    DirectedToUndirected,  // source lists arcs; an edge exists iff either direction appears
    Undirected,            // every line is already an undirected pair
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Reads SNAP-style edge lists: '#' comment lines, two integer label columns,
// an optional third column (timestamp) that is ignored. Self-loops are
// dropped, duplicate edges collapse. Labels are densely reindexed in
// first-appearance order.
Network parse_edge_list(std::istream& in, ParseMode mode = ParseMode::DirectedToUndirected);
Network parse_edge_list_file(const std::string& path, ParseMode mode = ParseMode::DirectedToUndirected);

// One "label_u label_v" line per edge, u before v in dense order. Parsing the
// emitted text reproduces the same Network (isolated nodes cannot occur here
// since parsing only learns nodes from edges).
void emit_edge_list(const Network& net, std::ostream& out);

// Builds a graph directly from dense-index edges; labels default to 0..n-1.
Network make_network(int n, const std::vector<std::pair<int, int>>& edges,
                     std::vector<std::int64_t> labels = {});

bool operator==(const Network& a, const Network& b);

}  // namespace seedopt

#endif
