#ifndef REEMBED_SCHEME_HPP
#define REEMBED_SCHEME_HPP

#include <string>
#include <vector>

#include "reembed/graph.hpp"

namespace reembed {

// Cyclic order of incident edge indices around each vertex.
struct RotationSystem {
  std::vector<std::vector<int>> order;
};

// Twist flag per edge: lambda(e) = -1 iff e is twisted.
struct Signature {
  EdgeSet twisted;
  int lambda(int e) const { return twisted.contains(e) ? -1 : +1; }
};

// A rotation system plus a signature determines one embedding.
struct EmbeddingScheme {
  RotationSystem rotation;
  Signature signature;
};

struct WalkStep {
  int vertex = 0;  // traversal leaves this vertex ...
  int edge = 0;    // ... along this edge
};

// Closed walk produced by the face traversal procedure.
class FacialWalk {
 public:
  explicit FacialWalk(std::vector<WalkStep> steps);

  int length() const { return static_cast<int>(steps_.size()); }
  const std::vector<WalkStep>& steps() const { return steps_; }
  std::vector<int> vertex_sequence() const;
  std::vector<int> edge_sequence() const;
  // Edge-simple; for cubic graphs this makes the walk a cycle.
  bool is_cycle() const { return edge_simple_; }
  // Lexicographically minimal rotation of the vertex sequence or of its
  // reversal; equal canonical forms identify equal facial walks.
  const std::vector<int>& canonical() const { return canonical_; }

  bool operator==(const FacialWalk& o) const { return canonical_ == o.canonical_; }
  bool operator<(const FacialWalk& o) const { return canonical_ < o.canonical_; }

 private:
  std::vector<WalkStep> steps_;
  std::vector<int> canonical_;
  bool edge_simple_ = false;
};

std::vector<int> canonical_cycle(std::vector<int> seq);

enum class SurfaceName { sphere, projective_plane, torus, klein_bottle, other };

struct SurfaceClass {
  int euler_characteristic = 2;
  bool orientable = true;
  SurfaceName name = SurfaceName::sphere;
  bool operator==(const SurfaceClass&) const = default;
};

std::string surface_string(const SurfaceClass& s);

// Surface selector for enumeration requests.
enum class Surface { projective, torus, klein };

// Successor structure of the face traversal procedure for a fixed
// rotation system. A traversal state is a directed edge about to be
// traversed together with the current sign kappa; the successor map is
// a permutation of the 4|E| states, so orbit decomposition yields every
// facial walk exactly twice (once per direction).
class Traversal {
 public:
  Traversal(const Graph& g, const RotationSystem& rot);

  int directed_count() const { return static_cast<int>(head_.size()); }
  int state_count() const { return 2 * directed_count(); }

  static int state_of(int directed, int kappa) { return 2 * directed + (kappa < 0 ? 1 : 0); }
  static int kappa_of(int state) { return (state & 1) ? -1 : +1; }
  static int directed_of(int state) { return state >> 1; }
  int edge_of_state(int state) const { return (state >> 1) >> 1; }
  int tail_of(int directed) const { return tail_[directed]; }
  int head_of(int directed) const { return head_[directed]; }
  int directed_from(int vertex, int edge) const;

  int step(int state, const Signature& sig) const {
    int d = state >> 1;
    int kappa = (state & 1) ? -1 : +1;
    int after = kappa * sig.lambda(d >> 1);
    int nd = after > 0 ? cw_next_[d] : ccw_next_[d];
    return 2 * nd + (after < 0 ? 1 : 0);
  }

  // Walk and its reversal are mirror orbits; this involution maps one
  // onto the other.
  int mirror(int state, const Signature& sig) const {
    int d = state >> 1;
    int kappa = (state & 1) ? -1 : +1;
    int km = -kappa * sig.lambda(d >> 1);
    return 2 * (d ^ 1) + (km < 0 ? 1 : 0);
  }

 private:
  std::vector<int> head_, tail_;
  std::vector<int> cw_next_, ccw_next_;
};

// Runs the face traversal procedure from the given start configuration
// until the full state (directed start edge, kappa) recurs.
FacialWalk face_traversal(const Graph& g, const EmbeddingScheme& s, int start_vertex,
                          int start_edge, int kappa0 = +1);

// Complete facial walk set of the embedding: one walk per mirror-orbit
// pair of the traversal successor map, sorted by canonical form. Every
// edge is traversed exactly twice across the emitted walks.
std::vector<FacialWalk> all_facial_walks(const Graph& g, const EmbeddingScheme& s);

// Reverses the rotation at v and negates the signature of the edges
// incident to v; the walk multiset is unchanged.
EmbeddingScheme local_change(EmbeddingScheme s, int v);

// False iff some cycle carries an odd number of twisted edges.
bool is_orientable(const Graph& g, const Signature& sig);

SurfaceClass classify_surface(const Graph& g, const EmbeddingScheme& s);

// Allocation-free statistics used by exhaustive twist-set sweeps.
struct WalkStats {
  int face_count = 0;
  bool all_edge_simple = true;
};

struct SweepWorkspace {
  std::vector<int> state_mark;
  std::vector<int> edge_mark;
  int epoch = 0;
};

WalkStats facial_walk_stats(const Traversal& t, const Signature& sig, SweepWorkspace& ws);

}  // namespace reembed

#endif
