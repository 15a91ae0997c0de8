#pragma once

#include <optional>
#include <vector>

#include "genusforge/log.hpp"
#include "genusforge/rotation_system.hpp"

namespace genusforge {

/// How a log expands into the rotation system of the derived graph.
/// Row k is the log with k added to every number; fixed letters stay put,
/// the swap pair exchanges positions on odd k.
struct DerivationSpec {
  Log log;
  int n = 0;
  std::pair<char, char> swap_pair{'x', 'z'};
  std::vector<char> fixed_letters{'y', 'w'};

  static DerivationSpec standard(const Log& log);
  void validate() const;
};

/// Full derived rotation system: n numbered rows plus manufactured rows at
/// every letter vertex. The order-2 entry of row k is the single 1-factor
/// edge (k, k+n/2).
RotationSystem derive_rotation_system(const DerivationSpec& spec);

/// Builds the rotation at a letter vertex by chaining the triangle rule
/// through the numbered rows: if row k reads ... a letter b ..., the
/// letter's rotation runs ... b k a ... The chain must close through all n
/// numbers in one cycle.
std::vector<VertexLabel> manufacture_letter_rotation(
    const std::vector<std::vector<VertexLabel>>& numbered_rows, char letter);

/// Rotation at vertex k is rows[k mod 4] with k added to every entry.
/// Rows carry n-1 numbers and no letters; n must be divisible by 4.
RotationSystem expand_index4(const std::vector<std::vector<int>>& rows, int n);

}  // namespace genusforge
