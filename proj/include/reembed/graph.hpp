#ifndef REEMBED_GRAPH_HPP
#define REEMBED_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace reembed {

// Undirected edge, stored with u < v. The index of an edge in
// Graph::edges() is its stable identifier; twist sets, dual maps and
// walks all reference edges by index.
struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
};

struct Incidence {
  int vertex = 0;  // neighbor
  int edge = 0;    // edge index
};

// Simple undirected graph with indexed vertices 0..n-1 and an indexed
// edge list. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edge_pairs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  // Sorted by neighbor index.
  const std::vector<Incidence>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  std::optional<int> edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v).has_value(); }
  bool is_cubic() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

// Bitset over the edge indices of a host graph. Capped at 64 edges,
// which covers every graph this library is meant for.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int universe, std::uint64_t bits = 0);

  int universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(int e) const { return (bits_ >> e) & 1u; }
  void insert(int e);
  void erase(int e);
  void toggle(int e);
  int count() const;
  bool empty() const { return bits_ == 0; }
  std::vector<int> indices() const;

  bool operator==(const EdgeSet&) const = default;
  bool operator<(const EdgeSet& o) const { return bits_ < o.bits_; }

 private:
  std::uint64_t bits_ = 0;
  int universe_ = 0;
};

EdgeSet edge_set_of(const Graph& g, const std::vector<std::pair<int, int>>& endpoint_pairs);

// graph6 (McKay's format), one graph per line.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

bool is_connected(const Graph& g);

// k in 1..3; decided by exhaustive small-cut enumeration.
bool is_k_connected(const Graph& g, int k);

bool is_bipartite(const Graph& g);

// k in 2..5. True iff no edge set of at most k-1 edges separates the
// graph into two or more components that each contain a cycle. Graphs
// without two vertex-disjoint cycles satisfy this vacuously for all k.
bool cyclically_k_edge_connected(const Graph& g, int k);

// Canonical byte string: two graphs are isomorphic iff their canonical
// forms are equal. The string is the graph6 encoding of a canonically
// relabeled copy, found by refinement plus individualization backtracking.
std::string canonical_form(const Graph& g);

// perm[old] = new.
Graph relabeled(const Graph& g, std::span<const int> perm);

}  // namespace reembed

#endif
