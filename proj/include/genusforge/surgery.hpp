#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genusforge/certificate.hpp"
#include "genusforge/rotation_system.hpp"

namespace genusforge {

/// One surgery move.
///   flip a b      - replace edge (a,b) by the opposite diagonal of its
///                   quadrilateral
///   absorb a b    - delete edge (a,b), merging its two faces into one
///                   region face; (a,b) returns to the insertable pool
///   handle f1 f2  - install the handle joining faces f1 and f2 (named by
///                   canonical corner cycles); pure bookkeeping until the
///                   first chord crosses it
///   chord f a@i b@j - insert edge (a,b) between corner occurrence i of a
///                   and occurrence j of b; the first chord after a handle
///                   crosses between the two joined faces
struct Move {
  enum class Kind { Flip, Absorb, Handle, Chord };
  Kind kind = Kind::Flip;
  VertexLabel a, b;     // flip/absorb/chord endpoints
  std::string f1, f2;   // handle faces; f1 doubles as the chord's face
  int occ_a = 0, occ_b = 0;

  std::string serialize() const;
  static Move parse(const std::string& line);
};

struct SurgeryPlan {
  std::vector<Move> moves;

  int handle_count() const;
  int net_edge_delta() const;  // chords minus absorbs; flips are neutral
  std::string serialize() const;
  static SurgeryPlan parse(const std::string& text);
};

/// Replaces edge (a,b), whose two incident faces are the triangles (a,b,c)
/// and (b,a,d), by the diagonal (c,d). Genus unchanged, Rule R* preserved.
RotationSystem flip_edge(const RotationSystem& rs, VertexLabel a, VertexLabel b);

/// A corner of a region face: rotation(v) currently runs ... in v-out ...
struct RegionCorner {
  VertexLabel v, in, out;
};
using BoundaryCycle = std::vector<RegionCorner>;

std::string face_name(const std::vector<DirectedEdge>& face);

/// An embedding mid-surgery: the rotation system plus the region being
/// retriangulated. The region holds one or two boundary cycles; two cycles
/// exist between `handle` and the first crossing chord.
class SurgeryState {
 public:
  explicit SurgeryState(RotationSystem rs) : rs_(std::move(rs)) {}

  const RotationSystem& system() const { return rs_; }
  const std::vector<BoundaryCycle>& region() const { return region_; }
  bool handle_pending() const { return handle_pending_; }
  const std::vector<Move>& applied() const { return applied_; }

  /// Faces counting every region cycle set as one face.
  long long reported_face_count() const;
  /// Genus with the region counted as zero disk faces (exact once the
  /// region is fully triangulated).
  int committed_genus() const;

  void apply(const Move& move);
  void flip(VertexLabel a, VertexLabel b);
  void absorb(VertexLabel a, VertexLabel b);
  void merge_faces_with_handle(const std::string& f1, const std::string& f2);
  void chord(VertexLabel a, int occ_a, VertexLabel b, int occ_b);

  /// Region cycle list flattened to (cycle, index) for an occurrence of v.
  std::optional<std::pair<int, int>> find_corner(VertexLabel v, int occurrence) const;

 private:
  RotationSystem rs_;
  std::vector<BoundaryCycle> region_;
  bool handle_pending_ = false;
  std::vector<Move> applied_;

  BoundaryCycle face_cycle_by_name(const std::string& name) const;
};

struct SurgeryConfig {
  int max_absorbs = 4;          // fan edges deleted around vertex 0
  int radius = 2;               // how far from vertex 0 to look for faces
  long long budget_states = 1'000'000;
  int budget_seconds = 60;
};

struct SurgeryStats {
  long long states = 0;
  int merges_tried = 0;
  bool budget_hit = false;
};

struct PlanResult {
  SurgeryPlan plan;
  RotationSystem final_system;
  Certificate certificate;
  SurgeryStats stats;
};

/// Bounded deterministic search for a one-handle plan converting a verified
/// K_{12s}-K_4 triangulation whose rotation at 0 carries the (*) anchors
/// into a K_{12s} triangulation. Throws BudgetExhausted with statistics on
/// failure.
PlanResult plan_surgery(const RotationSystem& rs, int s,
                        const SurgeryConfig& config = SurgeryConfig());

/// Deterministic replay; the result of a returned plan always verifies to
/// the same certificate hash.
RotationSystem apply_plan(const RotationSystem& rs, const SurgeryPlan& plan);

/// Backtracking chord insertion: triangulates the current region using only
/// chords drawn from allowed_edges (each insertable once). Returns the
/// chord moves applied, or nullopt (state restored by the caller keeping a
/// copy).
std::optional<std::vector<Move>> triangulate_region(
    SurgeryState& state, std::vector<std::pair<VertexLabel, VertexLabel>> allowed_edges,
    long long* state_budget);

inline Certificate verify_final(const RotationSystem& rs, int s) {
  return verify_complete_triangulation(rs, s);
}

}  // namespace genusforge
