#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genusforge/labels.hpp"
#include "genusforge/log.hpp"

namespace genusforge {

struct CyclicGroup {
  int n = 0;

  int normalize(long long v) const {
    long long r = v % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
  }
  int negate(int v) const { return normalize(-static_cast<long long>(v)); }
  bool has_order2() const { return n % 2 == 0; }
  int order2() const { return n / 2; }
  /// Class representative in [1, n/2].
  int class_rep(int v) const {
    const int c = normalize(v);
    return std::min(c, n - c);
  }
  int class_count() const { return n % 2 == 0 ? n / 2 : (n - 1) / 2; }
};

/// One end of an arc: the tail end (where the arc leaves) or the head end.
struct ArcEnd {
  int arc = 0;  // arc id == current class representative
  bool head = false;

  bool operator==(const ArcEnd& o) const = default;
  bool operator<(const ArcEnd& o) const {
    return arc != o.arc ? arc < o.arc : head < o.head;
  }
  std::string str() const { return std::to_string(arc) + (head ? "h" : "t"); }
};

enum class CGVertexKind { Cubic, Vortex1, Vortex2, DeadEnd };

std::string kind_name(CGVertexKind k);

struct CGVertex {
  int id = 0;
  CGVertexKind kind = CGVertexKind::Cubic;
  /// Rotation: cyclic order of incident ends (clockwise after
  /// normalization; parse accepts orient=ccw and reverses).
  std::vector<ArcEnd> rotation;
  /// letters[i] sits on the corner whose arrival end is rotation[i];
  /// 0 marks an unlettered corner.
  std::vector<char> corner_letters;

  int degree() const { return static_cast<int>(rotation.size()); }
  std::vector<char> letters() const;
};

struct CGArc {
  int id = 0;       // == current (class representative)
  int current = 0;  // in [1, n/2]
  int tail_vertex = 0;
  int head_vertex = 0;
};

/// A directed arc traversal: forward = tail to head.
struct CGDart {
  int arc = 0;
  bool forward = true;

  ArcEnd departure() const { return {arc, !forward}; }
  ArcEnd arrival() const { return {arc, forward}; }
  CGDart reversed() const { return {arc, !forward}; }
  bool operator==(const CGDart& o) const = default;
};

struct CGFace {
  std::vector<CGDart> darts;
  /// corner_vertices[i] / corner_letters[i] describe the corner between
  /// darts[i] and darts[i+1 (mod size)].
  std::vector<int> corner_vertices;
  std::vector<char> corner_letters;  // 0 if unlettered
};

struct CGTrace {
  std::vector<CGFace> faces;
  int index() const { return static_cast<int>(faces.size()); }
};

/// An index-1 current graph over Z_n with vortices: an embedded directed
/// graph whose arcs carry currents, one per +/- class.
class CurrentGraph {
 public:
  /// Builds from raw parts and validates structure. Arc currents may be
  /// given as any nonzero residue; arcs are normalized so the stored
  /// current is the class representative (direction flipped as needed) and
  /// arc ids equal their currents. Vertex ids are reassigned canonically
  /// (ordered by least incident end).
  static CurrentGraph make(CyclicGroup group, std::vector<CGArc> arcs,
                           std::vector<CGVertex> vertices);

  const CyclicGroup& group() const { return group_; }
  const std::vector<CGArc>& arcs() const { return arcs_; }
  const std::vector<CGVertex>& vertices() const { return vertices_; }

  const CGArc& arc_by_id(int id) const;
  const CGVertex& vertex_of_end(ArcEnd e) const;
  int vertex_index_of_end(ArcEnd e) const;

  /// Incoming minus outgoing current sum at a vertex, in [0, n).
  int excess(const CGVertex& v) const;

  /// Reverses the rotation at one vertex (used for ladder-rung variants).
  CurrentGraph with_flipped_rotation(int vertex_id) const;

  std::string serialize_cgf() const;
  static CurrentGraph parse_cgf(const std::string& text);

 private:
  CyclicGroup group_;
  std::vector<CGArc> arcs_;        // sorted by id
  std::vector<CGVertex> vertices_; // sorted by id
};

CGTrace trace_and_index(const CurrentGraph& cg);

struct PrincipleCheck {
  bool pass = true;
  std::vector<std::string> witnesses;
};

/// Report for construction principles (C1)-(C7).
struct PrincipleReport {
  PrincipleCheck c[7];

  bool all_pass() const {
    for (const auto& p : c)
      if (!p.pass) return false;
    return true;
  }
  std::string str() const;
};

PrincipleReport validate_principles(const CurrentGraph& cg);

/// Walks the single face and records currents (negated on reverse
/// traversal) and vortex corner letters; the doubled order-2 entry is
/// condensed into one occurrence. Errors if the index is not 1.
Log extract_log(const CurrentGraph& cg);

/// Inverse of extract_log: pairs entries into arcs, recovers vertices as
/// orbits of the corner-successor permutation. The order-2 entry is
/// un-condensed by inserting its duplicate immediately after the single
/// occurrence.
CurrentGraph reconstruct_from_log(const Log& log, int n);

enum class AnchorState { Absent, Present, PresentReversed };

/// Presence of the four rotation-pattern anchors around vertex 0:
///   [x 1 y 12s-5 z], [6s+2 2 6s+3], [6s-2 6 6s-3], [6s-5 w].
struct StarPatternReport {
  AnchorState anchors[4] = {AnchorState::Absent, AnchorState::Absent, AnchorState::Absent,
                            AnchorState::Absent};

  bool all_present() const {
    for (auto a : anchors)
      if (a == AnchorState::Absent) return false;
    return true;
  }
  bool all_present_unreversed() const {
    for (auto a : anchors)
      if (a != AnchorState::Present) return false;
    return true;
  }
  std::string str() const;
};

StarPatternReport check_star_pattern(const Log& log, int s);

}  // namespace genusforge
