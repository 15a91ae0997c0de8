#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace genusforge {

/// Error raised by malformed structures (bad rotation systems, broken
/// current graphs, invalid logs).
struct StructureError : std::runtime_error {
  explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

/// Error raised by unparseable or ill-formed text input.
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Error raised when a bounded search gives up.
struct BudgetExhausted : std::runtime_error {
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// A vertex label: either a residue in [0, n) or a single lowercase letter.
/// Numbers order before letters; numbers order by value, letters
/// alphabetically. This ordering is the canonical one used everywhere
/// (serialization starts rotations at the least label).
class VertexLabel {
 public:
  VertexLabel() : code_(0) {}

  static VertexLabel number(int v) {
    if (v < 0) throw StructureError("number label must be nonnegative");
    VertexLabel l;
    l.code_ = v;
    return l;
  }
  static VertexLabel letter(char c) {
    if (c < 'a' || c > 'z') throw StructureError("letter label must be a lowercase letter");
    VertexLabel l;
    l.code_ = -static_cast<int32_t>(c);
    return l;
  }

  bool is_number() const { return code_ >= 0; }
  bool is_letter() const { return code_ < 0; }
  int value() const {
    if (!is_number()) throw StructureError("label is not a number");
    return code_;
  }
  char symbol() const {
    if (!is_letter()) throw StructureError("label is not a letter");
    return static_cast<char>(-code_);
  }

  /// Stable integer key (numbers nonnegative, letters negative).
  int32_t code() const { return code_; }

  bool operator==(const VertexLabel& o) const { return code_ == o.code_; }
  bool operator!=(const VertexLabel& o) const { return code_ != o.code_; }
  bool operator<(const VertexLabel& o) const {
    if (is_number() != o.is_number()) return is_number();
    if (is_number()) return code_ < o.code_;
    return symbol() < o.symbol();
  }
  bool operator>(const VertexLabel& o) const { return o < *this; }
  bool operator<=(const VertexLabel& o) const { return !(o < *this); }
  bool operator>=(const VertexLabel& o) const { return !(*this < o); }

  std::string str() const {
    if (is_number()) return std::to_string(code_);
    return std::string(1, symbol());
  }

  /// Parses a decimal number or a single lowercase letter.
  static VertexLabel parse(const std::string& token);

 private:
  int32_t code_;
};

using DirectedEdge = std::pair<VertexLabel, VertexLabel>;

std::string to_string(const DirectedEdge& e);

}  // namespace genusforge

template <>
struct std::hash<genusforge::VertexLabel> {
  size_t operator()(const genusforge::VertexLabel& l) const noexcept {
    return std::hash<int32_t>()(l.code());
  }
};
