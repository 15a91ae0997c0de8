#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "genusforge/labels.hpp"
#include "genusforge/util.hpp"

namespace genusforge {

/// An orientable combinatorial embedding of a simple connected-or-not graph,
/// given by a cyclic neighbor order at every vertex. Immutable after
/// construction; all operations are pure.
///
/// Face-tracing convention (fixed globally): after traversing the directed
/// edge a->b, the next directed edge is b->c where c is the successor of a
/// in rotation(b).
class RotationSystem {
 public:
  /// Builds and validates. Rows are (vertex, cyclic neighbor list). Rejects
  /// self-loops, repeated neighbors, asymmetric adjacency, duplicate rows.
  static RotationSystem make(int n, const std::vector<char>& letters,
                             std::vector<std::pair<VertexLabel, std::vector<VertexLabel>>> rows);

  int group_order() const { return n_; }
  const std::vector<char>& letters() const { return letters_; }

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  long long edge_count() const { return edge_count_; }
  const std::vector<VertexLabel>& vertices() const { return verts_; }

  bool has_vertex(VertexLabel v) const { return index_.count(v.code()) != 0; }
  bool has_edge(VertexLabel a, VertexLabel b) const;

  /// Rotation stored with canonical starting element (least neighbor).
  const std::vector<VertexLabel>& rotation(VertexLabel v) const;

  /// Successor / predecessor of u in rotation(v).
  VertexLabel succ(VertexLabel v, VertexLabel u) const;
  VertexLabel pred(VertexLabel v, VertexLabel u) const;

  int degree(VertexLabel v) const { return static_cast<int>(rotation(v).size()); }

  /// Directed edges in canonical order (by tail, then neighbor position).
  std::vector<DirectedEdge> directed_edges() const;

  bool connected() const;
  std::vector<std::vector<VertexLabel>> components() const;

  /// Byte-stable serialization (RSF text format).
  std::string serialize_rsf() const;
  static RotationSystem parse_rsf(const std::string& text);

  uint64_t content_hash() const { return fnv1a64(serialize_rsf()); }

  // Mutating primitives used by surgery; they preserve the symmetry and
  // simplicity invariants and are the only way to edit a system.
  void insert_neighbor(VertexLabel v, VertexLabel nbr, VertexLabel after);
  void remove_neighbor(VertexLabel v, VertexLabel nbr);
  void delete_edge(VertexLabel a, VertexLabel b);
  /// Inserts edge (a,b); in rot(a) the new neighbor b lands between
  /// after_a and its successor, and vice versa.
  void insert_edge(VertexLabel a, VertexLabel after_a, VertexLabel b, VertexLabel after_b);

 private:
  int n_ = 0;
  std::vector<char> letters_;
  std::vector<VertexLabel> verts_;
  std::vector<std::vector<VertexLabel>> rot_;
  std::unordered_map<int32_t, int> index_;
  long long edge_count_ = 0;

  int idx(VertexLabel v) const;
  int pos_in_rotation(int vi, VertexLabel u) const;
  void canonicalize_row(int vi);
};

/// Faces of an embedding: each face is a cyclic sequence of directed edges.
struct FaceTrace {
  std::vector<std::vector<DirectedEdge>> faces;

  size_t face_count() const { return faces.size(); }
  bool all_triangles() const;
  /// Every directed edge appears in exactly one face exactly once.
  bool is_partition(const RotationSystem& rs) const;
};

FaceTrace trace_faces(const RotationSystem& rs);

/// One Rule R* violation: edge (i,k) whose neighborhoods disagree.
struct RStarViolation {
  VertexLabel i, k;
  std::string detail;
};

/// Rule R*: for every edge (i,k), rotation(i) = ... j k l ... implies
/// rotation(k) = ... l i j ... Passing is equivalent to every traced face
/// being a triangle.
std::vector<RStarViolation> check_rule_r_star(const RotationSystem& rs);

inline bool is_triangulation(const RotationSystem& rs) { return check_rule_r_star(rs).empty(); }

/// Genus from Euler's formula V - E + F = 2 - 2g. Requires connectivity.
int euler_genus(const RotationSystem& rs);

/// (E - 3V + 6)/6, exact. A triangulation attains the ceiling.
Rational genus_lower_bound(long long V, long long E);

struct GraphSignature {
  std::set<VertexLabel> vertices;
  std::set<std::pair<VertexLabel, VertexLabel>> edges;  // ordered pairs a<b

  bool operator==(const GraphSignature& o) const = default;
};

GraphSignature signature(const RotationSystem& rs);

/// True iff rs is the complete graph on its vertex set of size n minus
/// exactly the given missing pairs.
bool check_complete_minus(const RotationSystem& rs, int n,
                          const std::set<std::pair<VertexLabel, VertexLabel>>& missing);

std::pair<VertexLabel, VertexLabel> ordered_pair(VertexLabel a, VertexLabel b);

}  // namespace genusforge
