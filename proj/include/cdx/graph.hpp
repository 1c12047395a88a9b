#pragma once

// Simple undirected graphs with sorted adjacency lists, plus the
// constructions used by the bundled instances: LCF notation for cubic
// Hamiltonian graphs and voltage-graph lifts over Z/mZ.

#include <optional>
#include <string>
#include <vector>

namespace cdx {

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int order() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);  // rejects loops and duplicates

    bool is_regular(int* degree_out = nullptr) const;
    bool is_connected() const;
    int girth() const;     // large sentinel when acyclic
    int diameter() const;  // large sentinel when disconnected
    std::vector<int> bfs_distances(int src) const;

    static constexpr int kInfinity = 1 << 28;

private:
    std::vector<std::vector<int>> adj_;
};

// Hamiltonian cycle 0..n-1 plus chords i -> i + jumps[i mod |jumps|].
// Rejects self-loops, chord collisions, and non-cubic results.
Graph graph_from_lcf(const std::vector<int>& jumps, int repeats);

// Parses "[12,7,-7]x8".
Graph graph_from_lcf_string(const std::string& spec);

// Base multigraph with arc voltages in Z/mZ. Undirected edges are stored
// once with an orientation; loops and parallel arcs are allowed.
struct VoltageGraph {
    int n = 0;
    struct Arc {
        int u, v;
        long voltage;
    };
    std::vector<Arc> arcs;
};

// Lift on V(base) x Z/mZ with (u,i) ~ (v, i+voltage). Rejects non-simple lifts.
Graph voltage_lift(const VoltageGraph& base, long group_order);

// Text format: "n <order>", then "i: j k l" per vertex, '#' comments.
Graph load_graph(const std::string& path);
Graph parse_graph_text(const std::string& text);
std::string graph_to_text(const Graph& g);

// Brute-force isomorphism for small orders (permutation search with degree
// pruning); intended for n <= 10.
bool is_isomorphic(const Graph& a, const Graph& b);

// Exact count of distinct cycles of the given length through v.
long cycles_through_vertex(const Graph& g, int length, int v);

// Stock constructions used by tests and the bundled verifications.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();
Graph moebius_ladder(int n);  // C_n plus n/2 diameters, n even

}  // namespace cdx
