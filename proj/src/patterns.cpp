#include "reembed/patterns.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_set>

#include "reembed/errors.hpp"

namespace reembed {

std::string pattern_string(const PatternKind& kind) {
  switch (kind.tag) {
    case PatternTag::K2: return "K2";
    case PatternTag::K4: return "K4";
    case PatternTag::K222: return "K_{2,2,2}";
    case PatternTag::K2m: return "K_{2," + std::to_string(kind.m) + "}";
    case PatternTag::K11m: return "K_{1,1," + std::to_string(kind.m) + "}";
    case PatternTag::A1: return "A1";
    case PatternTag::A2: return "A2";
    case PatternTag::A3: return "A3";
    case PatternTag::A4: return "A4";
    case PatternTag::A5: return "A5";
    case PatternTag::A6: return "A6";
  }
  throw InternalError("unknown pattern tag");
}

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return adj;
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

class Collector {
 public:
  explicit Collector(const Graph& g) : g_(g) {}

  void add(std::uint64_t vertex_mask, const std::vector<std::pair<int, int>>& pairs,
           PatternKind kind) {
    EdgeSet es(g_.edge_count());
    for (auto [u, v] : pairs) {
      auto e = g_.edge_index(u, v);
      if (!e) throw InternalError("pattern edge missing from host graph");
      es.insert(*e);
    }
    if (!seen_.insert(es.bits()).second) return;
    out_.push_back(TwistedSubgraph{mask_to_vertices(vertex_mask), es, kind});
  }

  std::vector<TwistedSubgraph> take() {
    std::sort(out_.begin(), out_.end(),
              [](const TwistedSubgraph& a, const TwistedSubgraph& b) {
                return a.edges.bits() < b.edges.bits();
              });
    return std::move(out_);
  }

 private:
  const Graph& g_;
  std::unordered_set<std::uint64_t> seen_;
  std::vector<TwistedSubgraph> out_;
};

std::vector<std::uint64_t> k4_vertex_masks(const Graph& g) {
  auto adj = adjacency_masks(g);
  const int n = g.vertex_count();
  std::vector<std::uint64_t> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!((adj[a] >> b) & 1)) continue;
      std::uint64_t cnab = adj[a] & adj[b];
      for (int c = b + 1; c < n; ++c) {
        if (!((cnab >> c) & 1)) continue;
        std::uint64_t cn = cnab & adj[c];
        for (int d = c + 1; d < n; ++d)
          if ((cn >> d) & 1)
            out.push_back((std::uint64_t{1} << a) | (std::uint64_t{1} << b) |
                          (std::uint64_t{1} << c) | (std::uint64_t{1} << d));
      }
    }
  return out;
}

std::vector<std::pair<int, int>> clique_edges(std::uint64_t mask) {
  auto vs = mask_to_vertices(mask);
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) out.push_back({vs[i], vs[j]});
  return out;
}

bool parity_matches(int m, Parity p) {
  switch (p) {
    case Parity::even: return m % 2 == 0;
    case Parity::odd: return m % 2 == 1;
    case Parity::any: return true;
  }
  return false;
}

}  // namespace

std::vector<TwistedSubgraph> find_k2(const Graph& d) {
  Collector col(d);
  for (int e = 0; e < d.edge_count(); ++e) {
    const Edge& ed = d.edge(e);
    col.add((std::uint64_t{1} << ed.u) | (std::uint64_t{1} << ed.v), {{ed.u, ed.v}},
            PatternKind{PatternTag::K2});
  }
  return col.take();
}

std::vector<TwistedSubgraph> find_k4(const Graph& d) {
  Collector col(d);
  for (std::uint64_t mask : k4_vertex_masks(d))
    col.add(mask, clique_edges(mask), PatternKind{PatternTag::K4});
  return col.take();
}

std::vector<TwistedSubgraph> find_k2m(const Graph& d, Parity m_parity) {
  auto adj = adjacency_masks(d);
  const int n = d.vertex_count();
  Collector col(d);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      std::vector<int> cn = mask_to_vertices(adj[u] & adj[v]);
      const int c = static_cast<int>(cn.size());
      if (c == 0) continue;
      const bool uv_nonadjacent = !((adj[u] >> v) & 1);
      // Every nonempty subset of the common neighborhood is one choice
      // of the large part.
      for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << c); ++sub) {
        int m = std::popcount(sub);
        if (!parity_matches(m, m_parity)) continue;
        std::uint64_t vmask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        std::vector<std::pair<int, int>> pairs;
        std::vector<int> part;
        for (int i = 0; i < c; ++i) {
          if (!((sub >> i) & 1)) continue;
          vmask |= std::uint64_t{1} << cn[i];
          part.push_back(cn[i]);
          pairs.push_back({u, cn[i]});
          pairs.push_back({v, cn[i]});
        }
        bool flag = uv_nonadjacent;
        if (m == 2 && flag) flag = !((adj[part[0]] >> part[1]) & 1);
        col.add(vmask, pairs, PatternKind{PatternTag::K2m, m, flag});
      }
    }
  }
  return col.take();
}

std::vector<TwistedSubgraph> find_k222(const Graph& d) {
  auto adj = adjacency_masks(d);
  const int n = d.vertex_count();
  Collector col(d);
  std::vector<int> vs(6);
  // Choose six vertices, then a perfect matching of "partner" pairs;
  // the pattern consists of the twelve cross edges.
  auto try_partition = [&](const std::array<int, 6>& p) {
    // p = a1,a2,b1,b2,c1,c2
    static const int cross[12][2] = {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {0, 5},
                                     {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(12);
    for (auto& cr : cross) {
      int x = p[cr[0]], y = p[cr[1]];
      if (!((adj[x] >> y) & 1)) return;
      pairs.push_back({x, y});
    }
    std::uint64_t vmask = 0;
    for (int x : p) vmask |= std::uint64_t{1} << x;
    col.add(vmask, pairs, PatternKind{PatternTag::K222});
  };
  std::vector<int> idx;
  std::function<void(int, int)> choose = [&](int start, int left) {
    if (left == 0) {
      // All ways to split the chosen six into three unordered pairs.
      const auto& s = idx;
      for (int i = 1; i < 6; ++i) {
        std::array<int, 4> rest{};
        int r = 0;
        for (int j = 1; j < 6; ++j)
          if (j != i) rest[r++] = j;
        for (int k = 1; k < 4; ++k) {
          std::array<int, 2> last{};
          int l = 0;
          for (int j = 1; j < 4; ++j)
            if (j != k) last[l++] = rest[j];
          try_partition({s[0], s[i], s[rest[0]], s[rest[k]], s[last[0]], s[last[1]]});
        }
      }
      return;
    }
    for (int v = start; v <= n - left; ++v) {
      idx.push_back(v);
      choose(v + 1, left - 1);
      idx.pop_back();
    }
  };
  if (n >= 6) choose(0, 6);
  return col.take();
}

std::vector<TwistedSubgraph> find_k11m(const Graph& d, Parity m_parity) {
  auto adj = adjacency_masks(d);
  Collector col(d);
  for (int e = 0; e < d.edge_count(); ++e) {
    int x = d.edge(e).u, y = d.edge(e).v;
    std::vector<int> cn = mask_to_vertices(adj[x] & adj[y]);
    const int c = static_cast<int>(cn.size());
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << c); ++sub) {
      int m = std::popcount(sub);
      if (!parity_matches(m, m_parity)) continue;
      std::uint64_t vmask = (std::uint64_t{1} << x) | (std::uint64_t{1} << y);
      std::vector<std::pair<int, int>> pairs{{x, y}};
      for (int i = 0; i < c; ++i) {
        if (!((sub >> i) & 1)) continue;
        vmask |= std::uint64_t{1} << cn[i];
        pairs.push_back({x, cn[i]});
        pairs.push_back({y, cn[i]});
      }
      col.add(vmask, pairs, PatternKind{PatternTag::K11m, m});
    }
  }
  return col.take();
}

std::vector<TwistedSubgraph> find_a_pattern(const Graph& d, PatternTag which) {
  auto adj = adjacency_masks(d);
  const int n = d.vertex_count();
  Collector col(d);
  auto k4s = k4_vertex_masks(d);
  auto edge_mask = [&](int e) {
    return (std::uint64_t{1} << d.edge(e).u) | (std::uint64_t{1} << d.edge(e).v);
  };
  switch (which) {
    case PatternTag::A1:  // two vertex-disjoint edges
      for (int e1 = 0; e1 < d.edge_count(); ++e1)
        for (int e2 = e1 + 1; e2 < d.edge_count(); ++e2)
          if ((edge_mask(e1) & edge_mask(e2)) == 0)
            col.add(edge_mask(e1) | edge_mask(e2),
                    {{d.edge(e1).u, d.edge(e1).v}, {d.edge(e2).u, d.edge(e2).v}},
                    PatternKind{PatternTag::A1});
      break;
    case PatternTag::A2:  // K4 plus a vertex-disjoint edge
      for (std::uint64_t k4 : k4s)
        for (int e = 0; e < d.edge_count(); ++e)
          if ((edge_mask(e) & k4) == 0) {
            auto pairs = clique_edges(k4);
            pairs.push_back({d.edge(e).u, d.edge(e).v});
            col.add(k4 | edge_mask(e), pairs, PatternKind{PatternTag::A2});
          }
      break;
    case PatternTag::A3:  // two vertex-disjoint K4s
      for (std::size_t i = 0; i < k4s.size(); ++i)
        for (std::size_t j = i + 1; j < k4s.size(); ++j)
          if ((k4s[i] & k4s[j]) == 0) {
            auto pairs = clique_edges(k4s[i]);
            auto more = clique_edges(k4s[j]);
            pairs.insert(pairs.end(), more.begin(), more.end());
            col.add(k4s[i] | k4s[j], pairs, PatternKind{PatternTag::A3});
          }
      break;
    case PatternTag::A4:  // K4 plus a pendant edge
      for (std::uint64_t k4 : k4s)
        for (int v : mask_to_vertices(k4))
          for (int w : mask_to_vertices(adj[v] & ~k4)) {
            auto pairs = clique_edges(k4);
            pairs.push_back({v, w});
            col.add(k4 | (std::uint64_t{1} << w), pairs, PatternKind{PatternTag::A4});
          }
      break;
    case PatternTag::A5:  // two K4s sharing exactly one vertex
      for (std::size_t i = 0; i < k4s.size(); ++i)
        for (std::size_t j = i + 1; j < k4s.size(); ++j)
          if (std::popcount(k4s[i] & k4s[j]) == 1) {
            auto pairs = clique_edges(k4s[i]);
            auto more = clique_edges(k4s[j]);
            pairs.insert(pairs.end(), more.begin(), more.end());
            col.add(k4s[i] | k4s[j], pairs, PatternKind{PatternTag::A5});
          }
      break;
    case PatternTag::A6: {
      // Two K4-minus-an-edge blocks glued along the missing pair {c,d}:
      // edges {a,b} and {e,f}, disjoint, with all four endpoints
      // adjacent to both c and d. The pair {c,d} itself is not an edge
      // of the pattern.
      for (int c = 0; c < n; ++c)
        for (int dd = c + 1; dd < n; ++dd) {
          std::uint64_t both = adj[c] & adj[dd] &
                               ~((std::uint64_t{1} << c) | (std::uint64_t{1} << dd));
          std::vector<int> side_edges;
          for (int e = 0; e < d.edge_count(); ++e) {
            std::uint64_t em = edge_mask(e);
            if ((em & both) == em) side_edges.push_back(e);
          }
          for (std::size_t i = 0; i < side_edges.size(); ++i)
            for (std::size_t j = i + 1; j < side_edges.size(); ++j) {
              int e1 = side_edges[i], e2 = side_edges[j];
              if ((edge_mask(e1) & edge_mask(e2)) != 0) continue;
              std::vector<std::pair<int, int>> pairs{{d.edge(e1).u, d.edge(e1).v},
                                                     {d.edge(e2).u, d.edge(e2).v}};
              for (int x : {d.edge(e1).u, d.edge(e1).v, d.edge(e2).u, d.edge(e2).v}) {
                pairs.push_back({x, c});
                pairs.push_back({x, dd});
              }
              col.add(edge_mask(e1) | edge_mask(e2) | (std::uint64_t{1} << c) |
                          (std::uint64_t{1} << dd),
                      pairs, PatternKind{PatternTag::A6});
            }
        }
      break;
    }
    default:
      throw InternalError("find_a_pattern: not an A pattern");
  }
  return col.take();
}

std::vector<TwistedSubgraph> enumerate_twisted_subgraphs(const Graph& d, Surface surface,
                                                         bool strong_only) {
  std::vector<TwistedSubgraph> out;
  auto append = [&](std::vector<TwistedSubgraph> v) {
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  };
  switch (surface) {
    case Surface::projective:
      append(find_k4(d));
      if (!strong_only) append(find_k2(d));
      break;
    case Surface::torus: {
      append(find_k222(d));
      auto k2m = find_k2m(d, Parity::even);
      for (auto& h : k2m)
        if (!strong_only || h.kind.size2_parts_nonadjacent) out.push_back(std::move(h));
      if (!strong_only) append(find_k11m(d, Parity::odd));
      break;
    }
    case Surface::klein: {
      append(find_a_pattern(d, PatternTag::A3));
      append(find_a_pattern(d, PatternTag::A5));
      append(find_a_pattern(d, PatternTag::A6));
      auto k2m = find_k2m(d, Parity::odd);
      for (auto& h : k2m) {
        if (strong_only && (h.kind.m < 3 || !h.kind.size2_parts_nonadjacent)) continue;
        out.push_back(std::move(h));
      }
      if (!strong_only) {
        append(find_a_pattern(d, PatternTag::A1));
        append(find_a_pattern(d, PatternTag::A2));
        append(find_a_pattern(d, PatternTag::A4));
        append(find_k11m(d, Parity::even));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(), [](const TwistedSubgraph& a, const TwistedSubgraph& b) {
    return a.edges.bits() < b.edges.bits();
  });
  return out;
}

std::vector<TwistedSubgraph> find_k2(const DualGraph& d) { return find_k2(d.graph); }
std::vector<TwistedSubgraph> find_k4(const DualGraph& d) { return find_k4(d.graph); }
std::vector<TwistedSubgraph> find_k2m(const DualGraph& d, Parity p) { return find_k2m(d.graph, p); }
std::vector<TwistedSubgraph> find_k222(const DualGraph& d) { return find_k222(d.graph); }
std::vector<TwistedSubgraph> find_k11m(const DualGraph& d, Parity p) { return find_k11m(d.graph, p); }
std::vector<TwistedSubgraph> find_a_pattern(const DualGraph& d, PatternTag which) {
  return find_a_pattern(d.graph, which);
}
std::vector<TwistedSubgraph> enumerate_twisted_subgraphs(const DualGraph& d, Surface surface,
                                                         bool strong_only) {
  return enumerate_twisted_subgraphs(d.graph, surface, strong_only);
}

}  // namespace reembed
