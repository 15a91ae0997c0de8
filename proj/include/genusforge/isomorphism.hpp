#pragma once

#include <map>
#include <optional>

#include "genusforge/rotation_system.hpp"

namespace genusforge {

enum class Orientation { Preserving, Reversing };

/// A vertex bijection plus orientation flag. Applying the bijection to every
/// rotation (reversing each cyclic order when the flag is Reversing) yields
/// the target system exactly.
struct IsoMap {
  std::map<VertexLabel, VertexLabel> map;
  Orientation orientation = Orientation::Preserving;

  VertexLabel operator()(VertexLabel v) const;
  /// Full verification against the definition.
  bool is_isomorphism(const RotationSystem& from, const RotationSystem& to) const;
};

/// Propagates the seed (a->b of T1 mapped to a'->b' of T2) across shared
/// triangles, breadth-first over directed edges. Both systems must be
/// triangulations; an isomorphism of triangulations is uniquely determined
/// by the image of one directed edge and the orientation flag.
std::optional<IsoMap> try_extend_isomorphism(const RotationSystem& t1, const RotationSystem& t2,
                                             const DirectedEdge& seed_from,
                                             const DirectedEdge& seed_to, Orientation orientation);

/// True iff some seed works; seeds are scanned in canonical order with the
/// source edge pinned to the least directed edge of t1.
bool triangulations_isomorphic(const RotationSystem& t1, const RotationSystem& t2);

/// Full enumeration over all seeds and both orientations (used for
/// automorphism inspection). Stops after max_results maps.
std::vector<IsoMap> find_isomorphisms(const RotationSystem& t1, const RotationSystem& t2,
                                      size_t max_results);

/// Partitions triangulations (all on the same vertex count) into isomorphism
/// classes; returns the class count.
int count_isomorphism_classes(const std::vector<RotationSystem>& ts);

}  // namespace genusforge
