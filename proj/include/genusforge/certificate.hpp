#pragma once

#include <string>
#include <vector>

#include "genusforge/rotation_system.hpp"

namespace genusforge {

/// Self-contained verification record for an embedding: counts, genus, and
/// a hash of the canonical serialization. Failures are enumerated, never
/// thrown.
struct Certificate {
  bool pass = false;
  long long V = 0, E = 0, F = 0;
  int genus = -1;
  uint64_t hash = 0;
  std::vector<std::string> failures;

  /// key=value lines; `#`-prefixed lines are comments excluded from hashes.
  std::string serialize(const std::string& name) const;
};

/// Checks that rs is a triangulation of the complete graph K_{12s} on the
/// genus-(4s-1)(3s-1) surface.
Certificate verify_complete_triangulation(const RotationSystem& rs, int s);

/// Same check for K_{12s}-K_4 (letter pairs missing), genus one below.
Certificate verify_derived_triangulation(const RotationSystem& rs, int s);

}  // namespace genusforge
