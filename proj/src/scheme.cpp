#include "reembed/scheme.hpp"

#include <algorithm>
#include <map>

#include "reembed/errors.hpp"

namespace reembed {

FacialWalk::FacialWalk(std::vector<WalkStep> steps) : steps_(std::move(steps)) {
  canonical_ = canonical_cycle(vertex_sequence());
  std::vector<int> es = edge_sequence();
  std::sort(es.begin(), es.end());
  edge_simple_ = std::adjacent_find(es.begin(), es.end()) == es.end();
}

std::vector<int> FacialWalk::vertex_sequence() const {
  std::vector<int> out;
  out.reserve(steps_.size());
  for (const WalkStep& s : steps_) out.push_back(s.vertex);
  return out;
}

std::vector<int> FacialWalk::edge_sequence() const {
  std::vector<int> out;
  out.reserve(steps_.size());
  for (const WalkStep& s : steps_) out.push_back(s.edge);
  return out;
}

std::vector<int> canonical_cycle(std::vector<int> seq) {
  const int n = static_cast<int>(seq.size());
  if (n <= 1) return seq;
  std::vector<int> best;
  auto consider = [&](const std::vector<int>& s) {
    for (int r = 0; r < n; ++r) {
      std::vector<int> rot(n);
      for (int i = 0; i < n; ++i) rot[i] = s[(r + i) % n];
      if (best.empty() || rot < best) best = std::move(rot);
    }
  };
  consider(seq);
  std::reverse(seq.begin(), seq.end());
  consider(seq);
  return best;
}

std::string surface_string(const SurfaceClass& s) {
  switch (s.name) {
    case SurfaceName::sphere: return "sphere";
    case SurfaceName::projective_plane: return "projective-plane";
    case SurfaceName::torus: return "torus";
    case SurfaceName::klein_bottle: return "klein-bottle";
    case SurfaceName::other:
      return "other(chi=" + std::to_string(s.euler_characteristic) +
             (s.orientable ? ",orientable)" : ",nonorientable)");
  }
  throw InternalError("unknown surface name");
}

Traversal::Traversal(const Graph& g, const RotationSystem& rot) {
  const int m = g.edge_count();
  head_.assign(2 * m, -1);
  tail_.assign(2 * m, -1);
  cw_next_.assign(2 * m, -1);
  ccw_next_.assign(2 * m, -1);
  for (int e = 0; e < m; ++e) {
    tail_[2 * e] = g.edge(e).u;
    head_[2 * e] = g.edge(e).v;
    tail_[2 * e + 1] = g.edge(e).v;
    head_[2 * e + 1] = g.edge(e).u;
  }
  auto leaving = [&](int w, int e) { return g.edge(e).u == w ? 2 * e : 2 * e + 1; };
  for (int w = 0; w < g.vertex_count(); ++w) {
    const auto& list = rot.order[w];
    const int d = static_cast<int>(list.size());
    for (int i = 0; i < d; ++i) {
      int e = list[i];
      int succ = list[(i + 1) % d];
      int pred = list[(i - 1 + d) % d];
      int arriving = g.edge(e).v == w ? 2 * e : 2 * e + 1;
      cw_next_[arriving] = leaving(w, succ);
      ccw_next_[arriving] = leaving(w, pred);
    }
  }
}

int Traversal::directed_from(int vertex, int edge) const {
  if (tail_[2 * edge] == vertex) return 2 * edge;
  if (tail_[2 * edge + 1] == vertex) return 2 * edge + 1;
  throw InternalError("edge not incident to start vertex");
}

namespace {

std::vector<WalkStep> trace_orbit(const Traversal& t, const Signature& sig, int start) {
  std::vector<WalkStep> steps;
  int s = start;
  do {
    int d = Traversal::directed_of(s);
    steps.push_back(WalkStep{t.tail_of(d), d >> 1});
    s = t.step(s, sig);
  } while (s != start);
  return steps;
}

}  // namespace

FacialWalk face_traversal(const Graph& g, const EmbeddingScheme& s, int start_vertex,
                          int start_edge, int kappa0) {
  Traversal t(g, s.rotation);
  int d = t.directed_from(start_vertex, start_edge);
  return FacialWalk(trace_orbit(t, s.signature, Traversal::state_of(d, kappa0)));
}

std::vector<FacialWalk> all_facial_walks(const Graph& g, const EmbeddingScheme& s) {
  Traversal t(g, s.rotation);
  std::vector<FacialWalk> walks;
  std::vector<bool> visited(t.state_count(), false);
  for (int start = 0; start < t.state_count(); ++start) {
    if (visited[start]) continue;
    std::vector<int> orbit;
    int st = start;
    do {
      orbit.push_back(st);
      visited[st] = true;
      st = t.step(st, s.signature);
    } while (st != start);
    std::vector<WalkStep> steps;
    steps.reserve(orbit.size());
    for (int o : orbit) {
      int d = Traversal::directed_of(o);
      steps.push_back(WalkStep{t.tail_of(d), d >> 1});
    }
    // Retire the mirror orbit so each facial walk is emitted once.
    for (int o : orbit) {
      int m = t.mirror(o, s.signature);
      if (visited[m] && std::find(orbit.begin(), orbit.end(), m) != orbit.end())
        throw InternalError("self-mirrored traversal orbit");
      visited[m] = true;
    }
    walks.emplace_back(std::move(steps));
  }
  std::sort(walks.begin(), walks.end());
  return walks;
}

EmbeddingScheme local_change(EmbeddingScheme s, int v) {
  auto& order = s.rotation.order[v];
  std::reverse(order.begin(), order.end());
  for (int e : order) s.signature.twisted.toggle(e);
  return s;
}

bool is_orientable(const Graph& g, const Signature& sig) {
  const int n = g.vertex_count();
  std::vector<int> parity(n, -1);
  for (int root = 0; root < n; ++root) {
    if (parity[root] != -1) continue;
    parity[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.neighbors(v)) {
        int want = parity[v] ^ (sig.lambda(inc.edge) < 0 ? 1 : 0);
        if (parity[inc.vertex] == -1) {
          parity[inc.vertex] = want;
          stack.push_back(inc.vertex);
        } else if (parity[inc.vertex] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

SurfaceClass classify_surface(const Graph& g, const EmbeddingScheme& s) {
  const int faces = static_cast<int>(all_facial_walks(g, s).size());
  SurfaceClass out;
  out.euler_characteristic = g.vertex_count() - g.edge_count() + faces;
  out.orientable = is_orientable(g, s.signature);
  const int chi = out.euler_characteristic;
  if (out.orientable && (chi % 2 != 0 || chi > 2))
    throw InternalError("orientable surface with invalid Euler characteristic " +
                        std::to_string(chi));
  if (!out.orientable && chi > 1)
    throw InternalError("non-orientable surface with invalid Euler characteristic " +
                        std::to_string(chi));
  if (chi == 2 && out.orientable) out.name = SurfaceName::sphere;
  else if (chi == 1 && !out.orientable) out.name = SurfaceName::projective_plane;
  else if (chi == 0 && out.orientable) out.name = SurfaceName::torus;
  else if (chi == 0 && !out.orientable) out.name = SurfaceName::klein_bottle;
  else out.name = SurfaceName::other;
  return out;
}

WalkStats facial_walk_stats(const Traversal& t, const Signature& sig, SweepWorkspace& ws) {
  const int states = t.state_count();
  if (static_cast<int>(ws.state_mark.size()) < states) {
    ws.state_mark.assign(states, -1);
    ws.edge_mark.assign(states / 4, -1);
  }
  ws.epoch += 1;
  const int base = ws.epoch * (states + 1);
  WalkStats out;
  int orbits = 0;
  for (int start = 0; start < states; ++start) {
    if (ws.state_mark[start] >= base) continue;
    const int orbit_tag = base + orbits;
    int st = start;
    do {
      ws.state_mark[st] = orbit_tag;
      int e = Traversal::directed_of(st) >> 1;
      if (ws.edge_mark[e] == orbit_tag) out.all_edge_simple = false;
      ws.edge_mark[e] = orbit_tag;
      st = t.step(st, sig);
    } while (st != start);
    ++orbits;
  }
  if (orbits % 2 != 0) throw InternalError("odd traversal orbit count");
  out.face_count = orbits / 2;
  return out;
}

}  // namespace reembed
