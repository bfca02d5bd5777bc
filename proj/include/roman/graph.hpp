#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "roman/bitset.hpp"

namespace roman {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction:
/// build one with make_graph / parse_graph / generate_graph and share freely.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, lexicographically sorted, unique
    std::vector<std::vector<int>> adj;       // sorted neighbor lists

    int edge_count() const { return int(edges.size()); }
    int degree(int v) const { return int(adj[v].size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

/// Validates vertex ranges, rejects self-loops, collapses duplicate edges
/// (in either orientation) and builds sorted adjacency lists.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// N[v] = {v} plus the neighbors of v. Throws std::out_of_range for bad v.
VertexSet closed_neighborhood(const Graph& g, int v);

enum class GraphFormat { edgelist, dimacs };

/// Edgelist: first line "n m", then m lines "u v" (0-indexed); '#' starts a
/// comment line. DIMACS: optional "c" comments, one "p edge n m" line, then m
/// lines "e u v" (1-indexed). Errors carry the offending line number.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);

std::string render_graph(const Graph& g, GraphFormat format);

enum class GraphFamily { path, cycle, complete, gnp };

/// SplitMix64; the exact update rule is documented in the README so that
/// generated corpora are reproducible across implementations.
struct SplitMix64 {
    uint64_t state = 0;

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1): top 53 bits of the next output.
    double next_unit() { return double(next() >> 11) * 0x1.0p-53; }
};

/// Deterministic generators for the test and benchmark corpus.
/// path/complete require n >= 1, cycle requires n >= 3. gnp includes each
/// pair {u, v}, u < v, scanned in lexicographic order, with probability p.
Graph generate_graph(GraphFamily family, int n, double p = 0.0, uint64_t seed = 0);

}  // namespace roman
