#include "reembed/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <stdexcept>

#include "reembed/errors.hpp"

namespace reembed {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_pairs) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  edges_.reserve(edge_pairs.size());
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edge_pairs) {
    if (u == v) throw std::invalid_argument("loop edge");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("parallel edge");
    edges_.push_back(Edge{u, v});
  }
  adj_.assign(n_, {});
  for (int e = 0; e < edge_count(); ++e) {
    adj_[edges_[e].u].push_back(Incidence{edges_[e].v, e});
    adj_[edges_[e].v].push_back(Incidence{edges_[e].u, e});
  }
  for (auto& list : adj_)
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.vertex < b.vertex; });
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
  const auto& list = adj_[u];
  auto it = std::lower_bound(list.begin(), list.end(), v,
                             [](const Incidence& inc, int x) { return inc.vertex < x; });
  if (it != list.end() && it->vertex == v) return it->edge;
  return std::nullopt;
}

bool Graph::is_cubic() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != 3) return false;
  return n_ > 0;
}

EdgeSet::EdgeSet(int universe, std::uint64_t bits) : bits_(bits), universe_(universe) {
  if (universe < 0 || universe > 64)
    throw std::invalid_argument("EdgeSet universe must be in 0..64");
  if (universe < 64 && (bits >> universe) != 0)
    throw std::invalid_argument("EdgeSet bit outside universe");
}

void EdgeSet::insert(int e) {
  if (e < 0 || e >= universe_) throw std::invalid_argument("edge index outside universe");
  bits_ |= std::uint64_t{1} << e;
}

void EdgeSet::erase(int e) {
  if (e < 0 || e >= universe_) throw std::invalid_argument("edge index outside universe");
  bits_ &= ~(std::uint64_t{1} << e);
}

void EdgeSet::toggle(int e) {
  if (e < 0 || e >= universe_) throw std::invalid_argument("edge index outside universe");
  bits_ ^= std::uint64_t{1} << e;
}

int EdgeSet::count() const { return std::popcount(bits_); }

std::vector<int> EdgeSet::indices() const {
  std::vector<int> out;
  for (int e = 0; e < universe_; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

EdgeSet edge_set_of(const Graph& g, const std::vector<std::pair<int, int>>& endpoint_pairs) {
  EdgeSet s(g.edge_count());
  for (auto [u, v] : endpoint_pairs) {
    auto e = g.edge_index(u, v);
    if (!e) throw std::invalid_argument("edge_set_of: no such edge");
    s.insert(*e);
  }
  return s;
}

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  if (pos >= line.size()) throw ParseError("empty graph6 input", pos);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= line.size()) throw ParseError("truncated graph6 input", line.size());
    unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < kG6Lo || c > kG6Hi) throw ParseError("invalid graph6 byte", i);
    return c - kG6Lo;
  };

  long long n = 0;
  if (line[pos] != '~') {
    n = byte_at(pos);
    pos += 1;
  } else {
    if (pos + 1 < line.size() && line[pos + 1] == '~')
      throw ParseError("graph6 order beyond supported range", pos);
    n = (static_cast<long long>(byte_at(pos + 1)) << 12) |
        (static_cast<long long>(byte_at(pos + 2)) << 6) |
        static_cast<long long>(byte_at(pos + 3));
    pos += 4;
  }
  if (n > 100000) throw ParseError("graph6 order beyond supported range", pos);

  const long long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() - pos < nbytes) throw ParseError("truncated graph6 body", line.size());
  if (line.size() - pos > nbytes) throw ParseError("trailing data after graph6 body", pos + nbytes);

  std::vector<std::pair<int, int>> pairs;
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int b = byte_at(pos + static_cast<std::size_t>(bit / 6));
      if ((b >> (5 - bit % 6)) & 1) pairs.push_back({i, j});
    }
  }
  if (nbytes > 0) {
    int last = byte_at(pos + nbytes - 1);
    int used = static_cast<int>(nbits - 6 * (nbytes - 1));
    if (used < 6 && (last & ((1 << (6 - used)) - 1)) != 0)
      throw ParseError("nonzero graph6 padding bits", pos + nbytes - 1);
  }
  // Edge indices are assigned in lexicographic (u, v) order.
  std::sort(pairs.begin(), pairs.end());
  return Graph(static_cast<int>(n), pairs);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Lo));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kG6Lo));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kG6Lo));
    out.push_back(static_cast<char>((n & 0x3f) + kG6Lo));
  }
  long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  std::vector<bool> bits(static_cast<std::size_t>(nbits), false);
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.adjacent(i, j)) bits[static_cast<std::size_t>(bit)] = true;
  for (long long start = 0; start < nbits; start += 6) {
    int b = 0;
    for (int k = 0; k < 6; ++k) {
      b <<= 1;
      if (start + k < nbits && bits[static_cast<std::size_t>(start + k)]) b |= 1;
    }
    out.push_back(static_cast<char>(b + kG6Lo));
  }
  return out;
}

namespace {

int reachable_count(const Graph& g, const std::vector<bool>& removed_vertex,
                    const EdgeSet* removed_edges, int start,
                    std::vector<bool>& seen) {
  std::fill(seen.begin(), seen.end(), false);
  std::queue<int> q;
  q.push(start);
  seen[start] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& inc : g.neighbors(v)) {
      if (removed_vertex[inc.vertex]) continue;
      if (removed_edges && removed_edges->contains(inc.edge)) continue;
      if (!seen[inc.vertex]) {
        seen[inc.vertex] = true;
        ++count;
        q.push(inc.vertex);
      }
    }
  }
  return count;
}

}  // namespace

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> removed(n, false), seen(n);
  return reachable_count(g, removed, nullptr, 0, seen) == n;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("is_k_connected: k must be 1..3");
  const int n = g.vertex_count();
  if (n <= k) return false;
  std::vector<bool> removed(n, false), seen(n);
  // Every cut of size < k, enumerated directly.
  std::vector<int> cut;
  auto disconnects = [&](const std::vector<int>& cs) {
    std::fill(removed.begin(), removed.end(), false);
    for (int v : cs) removed[v] = true;
    int start = 0;
    while (removed[start]) ++start;
    int live = n - static_cast<int>(cs.size());
    return reachable_count(g, removed, nullptr, start, seen) != live;
  };
  if (disconnects({})) return false;
  if (k >= 2)
    for (int a = 0; a < n; ++a)
      if (disconnects({a})) return false;
  if (k >= 3)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (disconnects({a, b})) return false;
  return true;
}

bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& inc : g.neighbors(v)) {
        if (color[inc.vertex] == -1) {
          color[inc.vertex] = color[v] ^ 1;
          q.push(inc.vertex);
        } else if (color[inc.vertex] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

// Components of g minus an edge set; true if at least two of them contain a cycle.
bool two_cyclic_components(const Graph& g, const EdgeSet& removed) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = ncomp;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& inc : g.neighbors(v)) {
        if (removed.contains(inc.edge)) continue;
        if (comp[inc.vertex] == -1) {
          comp[inc.vertex] = ncomp;
          q.push(inc.vertex);
        }
      }
    }
    ++ncomp;
  }
  std::vector<int> vcount(ncomp, 0), ecount(ncomp, 0);
  for (int v = 0; v < n; ++v) ++vcount[comp[v]];
  for (int e = 0; e < g.edge_count(); ++e) {
    if (removed.contains(e)) continue;
    ++ecount[comp[g.edge(e).u]];
  }
  int cyclic = 0;
  for (int c = 0; c < ncomp; ++c)
    if (ecount[c] >= vcount[c]) ++cyclic;  // a component has a cycle iff |E| >= |V|
  return cyclic >= 2;
}

bool any_subset_separates(const Graph& g, int size, int first, EdgeSet& acc) {
  if (size == 0) return two_cyclic_components(g, acc);
  for (int e = first; e <= g.edge_count() - size; ++e) {
    acc.insert(e);
    if (any_subset_separates(g, size - 1, e + 1, acc)) {
      acc.erase(e);
      return true;
    }
    acc.erase(e);
  }
  return false;
}

}  // namespace

bool cyclically_k_edge_connected(const Graph& g, int k) {
  if (k < 2 || k > 5) throw std::invalid_argument("cyclically_k_edge_connected: k must be 2..5");
  EdgeSet acc(g.edge_count());
  for (int s = 0; s <= k - 1; ++s)
    if (any_subset_separates(g, s, 0, acc)) return false;
  return true;
}

namespace {

// Color refinement followed by individualization on the first smallest
// non-singleton cell; the canonical string is the minimum graph6
// encoding over all leaves of the search tree.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  std::string run() {
    if (n_ == 0) return emit_graph6(g_);
    std::vector<int> color(n_);
    for (int v = 0; v < n_; ++v) color[v] = g_.degree(v);
    normalize(color);
    search(color);
    return best_;
  }

 private:
  void normalize(std::vector<int>& color) {
    // Rank colors to 0..k-1 preserving order.
    std::vector<int> vals(color);
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    for (int& c : color)
      c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
  }

  void refine(std::vector<int>& color) {
    while (true) {
      std::vector<std::pair<std::vector<int>, int>> sig(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<int> nb;
        nb.reserve(g_.degree(v));
        for (const auto& inc : g_.neighbors(v)) nb.push_back(color[inc.vertex]);
        std::sort(nb.begin(), nb.end());
        nb.insert(nb.begin(), color[v]);
        sig[v] = {std::move(nb), v};
      }
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[v] = v;
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return sig[a].first < sig[b].first; });
      std::vector<int> next(n_);
      int c = 0;
      next[order[0]] = 0;
      for (int i = 1; i < n_; ++i) {
        if (sig[order[i]].first != sig[order[i - 1]].first) ++c;
        next[order[i]] = c;
      }
      if (next == color) return;
      color = std::move(next);
    }
  }

  void search(std::vector<int> color) {
    refine(color);
    std::vector<std::vector<int>> cells(n_);
    for (int v = 0; v < n_; ++v) cells[color[v]].push_back(v);
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (cells[c].size() > 1 &&
          (target == -1 || cells[c].size() < cells[target].size())) {
        target = c;
      }
    }
    if (target == -1) {
      // Discrete: color is a permutation old -> new.
      std::string cand = emit_graph6(relabeled(g_, color));
      if (best_.empty() || cand < best_) best_ = std::move(cand);
      return;
    }
    for (int v : cells[target]) {
      std::vector<int> branch(color);
      for (int w = 0; w < n_; ++w)
        if (branch[w] >= branch[v] && w != v) ++branch[w];
      search(std::move(branch));
    }
  }

  const Graph& g_;
  int n_;
  std::string best_;
};

}  // namespace

std::string canonical_form(const Graph& g) { return Canonicalizer(g).run(); }

Graph relabeled(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw std::invalid_argument("relabeled: permutation size mismatch");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) pairs.push_back({perm[e.u], perm[e.v]});
  return Graph(g.vertex_count(), pairs);
}

}  // namespace reembed
