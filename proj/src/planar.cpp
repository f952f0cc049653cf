#include "reembed/planar.hpp"

#include <algorithm>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include "reembed/errors.hpp"

namespace reembed {

namespace {

RotationSystem rotation_from_boyer_myrvold(const Graph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                            boost::property<boost::edge_index_t, int>>;
  const int n = g.vertex_count();
  BoostGraph bg(n);
  for (int e = 0; e < g.edge_count(); ++e)
    boost::add_edge(g.edge(e).u, g.edge(e).v, e, bg);

  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding(n);
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)));
  if (!planar) throw NotPlanar();

  auto index = boost::get(boost::edge_index, bg);
  RotationSystem rot;
  rot.order.resize(n);
  for (int v = 0; v < n; ++v) {
    rot.order[v].reserve(embedding[v].size());
    for (const EdgeDesc& ed : embedding[v]) rot.order[v].push_back(boost::get(index, ed));
  }
  return rot;
}

// Rotate each vertex list to start at its smallest edge, then flatten
// with separators; the smaller of the two mirror encodings is kept.
std::vector<int> rotation_encoding(const RotationSystem& rot) {
  std::vector<int> out;
  for (const auto& list : rot.order) {
    if (!list.empty()) {
      int best = 0;
      for (int i = 1; i < static_cast<int>(list.size()); ++i)
        if (list[i] < list[best]) best = i;
      for (int i = 0; i < static_cast<int>(list.size()); ++i)
        out.push_back(list[(best + i) % list.size()]);
    }
    out.push_back(-1);
  }
  return out;
}

RotationSystem mirrored(RotationSystem rot) {
  for (auto& list : rot.order) std::reverse(list.begin(), list.end());
  return rot;
}

std::vector<Face> faces_of_rotation(const Graph& g, const RotationSystem& rot) {
  Traversal t(g, rot);
  Signature untwisted{EdgeSet(g.edge_count())};
  // With an untwisted signature the kappa=+1 half of the state space is
  // closed under the successor map and traces each face exactly once.
  std::vector<Face> faces;
  std::vector<bool> visited(t.directed_count(), false);
  for (int d0 = 0; d0 < t.directed_count(); ++d0) {
    if (visited[d0]) continue;
    Face f;
    int s = Traversal::state_of(d0, +1);
    do {
      int d = Traversal::directed_of(s);
      visited[d] = true;
      f.vertices.push_back(t.tail_of(d));
      f.edges.push_back(d >> 1);
      s = t.step(s, untwisted);
    } while (Traversal::directed_of(s) != d0);
    faces.push_back(std::move(f));
  }
  return faces;
}

}  // namespace

PlanarEmbedding planar_embed(const Graph& g) {
  RotationSystem rot = rotation_from_boyer_myrvold(g);
  RotationSystem flip = mirrored(rot);
  if (rotation_encoding(flip) < rotation_encoding(rot)) rot = std::move(flip);

  PlanarEmbedding pe;
  pe.faces = faces_of_rotation(g, rot);
  pe.rotation = std::move(rot);

  const int f = static_cast<int>(pe.faces.size());
  if (g.vertex_count() - g.edge_count() + f != 2)
    throw InternalError("planar embedding violates Euler's formula");

  std::sort(pe.faces.begin(), pe.faces.end(), [](const Face& a, const Face& b) {
    auto ka = canonical_cycle(a.vertices);
    auto kb = canonical_cycle(b.vertices);
    if (ka != kb) return ka < kb;
    return canonical_cycle(a.edges) < canonical_cycle(b.edges);
  });

  pe.edge_faces.assign(g.edge_count(), {-1, -1});
  for (int fi = 0; fi < f; ++fi) {
    for (int e : pe.faces[fi].edges) {
      auto& slot = pe.edge_faces[e];
      if (slot.first == -1) slot.first = fi;
      else if (slot.second == -1) slot.second = fi;
      else throw InternalError("edge met more than twice among faces");
    }
  }
  for (const auto& slot : pe.edge_faces)
    if (slot.second == -1) throw InternalError("edge met fewer than twice among faces");
  return pe;
}

DualGraph dual(const Graph& g, const PlanarEmbedding& pe) {
  const int nf = static_cast<int>(pe.faces.size());
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [f1, f2] = pe.edge_faces[e];
    if (f1 == f2) throw DualNotSimple();
    if (!seen.insert({std::min(f1, f2), std::max(f1, f2)}).second) throw DualNotSimple();
    pairs.push_back({f1, f2});
  }
  DualGraph d;
  d.graph = Graph(nf, pairs);
  d.rotation.order.resize(nf);
  for (int fi = 0; fi < nf; ++fi) d.rotation.order[fi] = pe.faces[fi].edges;
  d.edge_to_primal.resize(g.edge_count());
  d.edge_from_primal.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    d.edge_to_primal[e] = e;
    d.edge_from_primal[e] = e;
  }
  return d;
}

std::map<int, int> face_length_histogram(const PlanarEmbedding& pe) {
  std::map<int, int> hist;
  for (const Face& f : pe.faces) hist[static_cast<int>(f.vertices.size())] += 1;
  return hist;
}

}  // namespace reembed
