#include "genusforge/labels.hpp"

#include <cctype>

namespace genusforge {

VertexLabel VertexLabel::parse(const std::string& token) {
  if (token.empty()) throw FormatError("empty label token");
  if (token.size() == 1 && std::islower(static_cast<unsigned char>(token[0])))
    return VertexLabel::letter(token[0]);
  for (char c : token)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw FormatError("bad label token '" + token + "'");
  return VertexLabel::number(std::stoi(token));
}

std::string to_string(const DirectedEdge& e) {
  return "(" + e.first.str() + "," + e.second.str() + ")";
}

}  // namespace genusforge
