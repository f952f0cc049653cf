#ifndef REEMBED_PLANAR_HPP
#define REEMBED_PLANAR_HPP

#include <map>
#include <utility>
#include <vector>

#include "reembed/graph.hpp"
#include "reembed/scheme.hpp"

namespace reembed {

// Facial cycle of a planar embedding. edges[i] joins vertices[i] and
// vertices[i+1] (cyclically).
struct Face {
  std::vector<int> vertices;
  std::vector<int> edges;
};

struct PlanarEmbedding {
  RotationSystem rotation;
  std::vector<Face> faces;                       // sorted by canonical vertex cycle
  std::vector<std::pair<int, int>> edge_faces;   // per edge, the two incident faces
};

// Spherical embedding as a rotation system; unique up to reflection for
// 3-connected input, with the reflection fixed by taking the
// lexicographically minimal encoding of the two mirror systems.
// Throws NotPlanar.
PlanarEmbedding planar_embed(const Graph& g);

// Dual graph with the edge-level bijection to the primal. Dual edge
// indices equal primal edge indices; rotation holds the dual rotation
// system induced by the primal embedding (edges around a dual vertex in
// face boundary order). Throws DualNotSimple.
struct DualGraph {
  Graph graph;
  RotationSystem rotation;
  std::vector<int> edge_to_primal;
  std::vector<int> edge_from_primal;
};

DualGraph dual(const Graph& g, const PlanarEmbedding& pe);

std::map<int, int> face_length_histogram(const PlanarEmbedding& pe);

}  // namespace reembed

#endif
