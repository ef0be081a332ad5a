// Simple undirected graphs: constructors, products, edit operations, automorphisms.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tmc {

using Edge = std::pair<int, int>;        // stored with first < second
using Permutation = std::vector<int>;    // images of 0..N-1

class Graph {
  public:
    Graph() = default;
    Graph(int num_vertices, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    const std::vector<std::vector<bool>>& adjacency() const { return adj_; }
    std::vector<int> neighbors(int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<bool>> adj_;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);

// vertex (u, v) of g1 x g2 encoded as u * |V(g2)| + v
Graph cartesian_product(const Graph& g1, const Graph& g2);

Graph delete_edge(const Graph& g, Edge e);
// merges endpoints into the smaller index, relabels to 0..N-2, simplifies
Graph contract_edge(const Graph& g, Edge e);

// Full automorphism group. Without generators: brute force over permutations,
// guarded at N <= 9. With generators: each is verified to preserve the edge
// set, then the generated group is closed under composition.
std::vector<Permutation> automorphism_group(const Graph& g);
std::vector<Permutation> automorphism_group(const Graph& g,
                                            const std::vector<Permutation>& generators);
bool is_automorphism(const Graph& g, const Permutation& p);

// `path:N`, `cycle:N`, `complete:N`, `prod:<spec>x<spec>`, or an edge-list file path
Graph parse_graph_spec(const std::string& spec);
// text format: first line "N M", then M lines "u v"
Graph read_edge_list(const std::string& path);
std::vector<Permutation> read_permutations(const std::string& path, int n);

}  // namespace tmc
