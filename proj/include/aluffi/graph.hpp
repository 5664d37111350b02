#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aluffi/ideal.hpp"

namespace aluffi {

// Finite simple graph on vertices 1..n, adjacency kept as bitmasks.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int num_vertices() const { return n_; }
    void add_edge(int u, int v);  // 1-based, u != v
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    std::uint64_t adj_mask(int v) const { return adj_[v - 1]; }
    std::vector<std::pair<int, int>> edges() const;
    int num_edges() const;
    bool connected() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Ideal generated by x_i x_j over the edges, in Q[x1..xn].
Ideal edge_ideal(const Graph& g);

// Minimum vertex cover cardinality (branch and bound; exact).
int vertex_cover_number(const Graph& g);

// N(S): union of neighborhoods of the vertices of S (1-based lists).
std::vector<int> neighborhood(const Graph& g, const std::vector<int>& s);

// Whether the degree-r monomial m is an r-transversal of the edge-ideal
// Jacobian: r distinct edges with pairwise distinct first endpoints whose
// second endpoints multiply to m. Decided by bipartite matching.
bool is_r_transversal(const Graph& g, const Monomial& m, int r);

struct Witness34 {
    int x1 = 0, x2 = 0;
    std::vector<int> s;
};

// Searches for adjacent x1, x2 and a nonempty S with S+{x1}, S+{x2}
// independent and |N(S)| = r-1 (r = cover number, must be > 1). Supersets of
// any S with |N(S)| > r-1 are pruned.
std::optional<Witness34> theorem34_witness(const Graph& g);

// Re-checks a candidate witness against the two conditions.
bool witness34_valid(const Graph& g, const Witness34& w);

// Combinatorial torsion-freeness: stars (cover number 1) are not torsion
// free; otherwise torsion-free iff no witness exists.
bool is_graph_atf(const Graph& g);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int n);  // n vertices total, vertex 1 is the center
Graph complete_multipartite(const std::vector<int>& parts);
Graph complete_minus_matching(int n, int matching_size);

// "complete:5", "cycle:6", "path:4", "star:6", "multipartite:2,2,3", "kmm:6,3"
Graph parse_graph_family(std::string_view text);

// First line n, then one "i j" edge per line (1-based).
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
std::string graph_to_text(const Graph& g);

// Connected graphs on exactly n vertices, one per isomorphism class,
// deterministic order. n <= 8.
std::vector<Graph> connected_graphs_up_to_iso(int n);

}  // namespace aluffi
