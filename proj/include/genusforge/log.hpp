#pragma once

#include <string>
#include <vector>

#include "genusforge/labels.hpp"

namespace genusforge {

/// The cyclic record of currents and vortex letters along the single face of
/// an index-1 current graph. Each nonzero group element appears exactly once
/// as a number (the order-2 element once, after condensation); each declared
/// letter appears exactly once.
struct Log {
  int n = 0;
  std::vector<VertexLabel> entries;

  std::vector<char> letters() const;
  void validate() const;

  /// Space-separated one-line form, letters as letters.
  std::string serialize() const;
  static Log parse(const std::string& line, int n);

  /// Least cyclic rotation (for byte-stable artifacts).
  Log canonical() const;

  bool cyclically_equal(const Log& other) const;
};

}  // namespace genusforge
