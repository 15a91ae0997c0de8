#include "genusforge/log.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "genusforge/util.hpp"

namespace genusforge {

std::vector<char> Log::letters() const {
  std::vector<char> out;
  for (const auto& e : entries)
    if (e.is_letter()) out.push_back(e.symbol());
  std::sort(out.begin(), out.end());
  return out;
}

void Log::validate() const {
  if (n < 3) throw StructureError("log group order too small");
  std::set<int> nums;
  std::set<char> lets;
  for (const auto& e : entries) {
    if (e.is_number()) {
      const int v = e.value();
      if (v <= 0 || v >= n)
        throw StructureError("log entry " + e.str() + " outside (0," + std::to_string(n) + ")");
      if (!nums.insert(v).second) throw StructureError("log entry " + e.str() + " appears twice");
    } else if (!lets.insert(e.symbol()).second) {
      throw StructureError("log letter '" + e.str() + "' appears twice");
    }
  }
  if (static_cast<int>(nums.size()) != n - 1)
    throw StructureError("log must contain each nonzero element exactly once (" +
                         std::to_string(nums.size()) + " of " + std::to_string(n - 1) + ")");
  if (entries.size() != static_cast<size_t>(n - 1) + lets.size())
    throw StructureError("log length inconsistent with entry census");
}

std::string Log::serialize() const {
  std::ostringstream os;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) os << " ";
    os << entries[i].str();
  }
  return os.str();
}

Log Log::parse(const std::string& line, int n) {
  Log log;
  log.n = n;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) log.entries.push_back(VertexLabel::parse(tok));
  log.validate();
  return log;
}

Log Log::canonical() const {
  Log out = *this;
  out.entries = canonical_rotation(entries);
  return out;
}

bool Log::cyclically_equal(const Log& other) const {
  return n == other.n && cyclic_equal(entries, other.entries);
}

}  // namespace genusforge
