// Simple undirected graphs: construction, validation, parsing, generators,
// induced subgraphs and the pendant-bridge-hub counterexample family.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace selkow {

// Strictly increasing vertex ids.
using VertexSet = std::vector<int>;

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message);
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency
// lists. Every constructor validates symmetry, no self-loops, no duplicates.
class Graph {
public:
    Graph() = default;

    // Duplicate edges collapse to one; self-loops and out-of-range ids throw.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const noexcept { return n_; }
    long long edge_count() const noexcept { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    std::span<const int> neighbors(int v) const { return adj_[v]; }
    const std::vector<std::vector<int>>& adjacency() const noexcept { return adj_; }
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;

    void check_invariants() const;
};

// DIMACS col format: "c" comments, one "p edge <n> <m>" header, "e <u> <v>"
// lines with 1-based ids. Errors carry the offending line number.
Graph parse_dimacs(std::string_view text);

// Whitespace-separated "u v" pairs, one per line; blank lines and lines
// starting with '#' are skipped. Vertex count is inferred from the largest id.
Graph parse_edge_list(std::string_view text, bool one_based);

Graph path_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0
Graph empty_graph(int n);
// Erdos-Renyi G(n,p); deterministic for a given (n, p, seed).
Graph gnp_graph(int n, double p, std::uint64_t seed);

// Colon-separated generator spec for the CLI: "path:5", "cycle:6",
// "complete:4", "star:3", "empty:8", "gnp:8:0.5:1".
Graph parse_generator_spec(std::string_view spec);

// The family refuting the per-vertex second-phase probability claim: take an
// arbitrary base graph, then append a pendant vertex, a bridge vertex and a
// hub vertex. Edges: pendant-bridge, bridge-hub, hub-y for every base vertex
// y. Ids: base occupies 0..n-4, pendant = n-3, bridge = n-2, hub = n-1.
struct CounterexampleSpec {
    Graph base;  // any simple graph with >= 1 vertex

    int total_vertices() const { return base.vertex_count() + 3; }
    int pendant() const { return total_vertices() - 3; }  // degree 1
    int bridge() const { return total_vertices() - 2; }   // degree 2
    int hub() const { return total_vertices() - 1; }      // degree |base|+1
};

Graph counterexample_graph(const CounterexampleSpec& spec);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // sub id -> parent id (increasing)
    std::vector<int> to_sub;     // parent id -> sub id, -1 if dropped
};

// Subgraph induced by `keep` (sorted unique ids inside the parent).
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace selkow
