#ifndef REEMBED_PATTERNS_HPP
#define REEMBED_PATTERNS_HPP

#include <string>
#include <vector>

#include "reembed/graph.hpp"
#include "reembed/planar.hpp"
#include "reembed/scheme.hpp"

namespace reembed {

enum class PatternTag { K2, K4, K11m, K2m, K222, A1, A2, A3, A4, A5, A6 };

struct PatternKind {
  PatternTag tag = PatternTag::K2;
  // Size of the large part for K2m / K11m.
  int m = 0;
  // For K2m: every partition class of size exactly two consists of
  // vertices that are non-adjacent in the host graph.
  bool size2_parts_nonadjacent = false;
};

std::string pattern_string(const PatternKind& kind);

// Concrete vertex and edge subset of the dual graph realizing a pattern.
// Two subgraphs are distinct iff their edge sets differ.
struct TwistedSubgraph {
  std::vector<int> vertices;  // sorted
  EdgeSet edges;
  PatternKind kind;
};

enum class Parity { even, odd, any };

// Enumerators work on any simple graph; the DualGraph overloads unwrap
// the dual. Results are deduplicated by edge set and sorted by it.
std::vector<TwistedSubgraph> find_k2(const Graph& d);
std::vector<TwistedSubgraph> find_k4(const Graph& d);
// Complete bipartite subgraphs with one part of size 2 and one of size
// m >= 1 matching the parity filter.
std::vector<TwistedSubgraph> find_k2m(const Graph& d, Parity m_parity);
std::vector<TwistedSubgraph> find_k222(const Graph& d);
// Edge {x,y} plus m >= 1 common neighbors with all cross edges.
std::vector<TwistedSubgraph> find_k11m(const Graph& d, Parity m_parity = Parity::any);
// which must be one of A1..A6.
std::vector<TwistedSubgraph> find_a_pattern(const Graph& d, PatternTag which);

std::vector<TwistedSubgraph> find_k2(const DualGraph& d);
std::vector<TwistedSubgraph> find_k4(const DualGraph& d);
std::vector<TwistedSubgraph> find_k2m(const DualGraph& d, Parity m_parity);
std::vector<TwistedSubgraph> find_k222(const DualGraph& d);
std::vector<TwistedSubgraph> find_k11m(const DualGraph& d, Parity m_parity = Parity::any);
std::vector<TwistedSubgraph> find_a_pattern(const DualGraph& d, PatternTag which);

// The pattern families of the characterization theorems. With
// strong_only the families whose twisted subgraphs always yield strong
// re-embeddings; otherwise the full correspondence families.
std::vector<TwistedSubgraph> enumerate_twisted_subgraphs(const Graph& d, Surface surface,
                                                         bool strong_only);
std::vector<TwistedSubgraph> enumerate_twisted_subgraphs(const DualGraph& d, Surface surface,
                                                         bool strong_only);

}  // namespace reembed

#endif
