#include "genusforge/derivation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace genusforge {

DerivationSpec DerivationSpec::standard(const Log& log) {
  DerivationSpec spec;
  spec.log = log;
  spec.n = log.n;
  const auto letters = log.letters();
  if (letters.empty()) {
    spec.swap_pair = {0, 0};
    spec.fixed_letters.clear();
  } else {
    std::set<char> ls(letters.begin(), letters.end());
    if (ls == std::set<char>{'w', 'x', 'y', 'z'}) {
      spec.swap_pair = {'x', 'z'};
      spec.fixed_letters = {'y', 'w'};
    } else {
      // No vortex-pair information: treat every letter as fixed.
      spec.swap_pair = {0, 0};
      spec.fixed_letters.assign(letters.begin(), letters.end());
    }
  }
  spec.validate();
  return spec;
}

void DerivationSpec::validate() const {
  log.validate();
  if (n != log.n) throw StructureError("derivation order disagrees with log");
  std::set<char> declared(fixed_letters.begin(), fixed_letters.end());
  if (swap_pair.first) {
    if (!declared.insert(swap_pair.first).second || !declared.insert(swap_pair.second).second)
      throw StructureError("swap pair overlaps fixed letters");
  }
  const auto present = log.letters();
  if (declared != std::set<char>(present.begin(), present.end()))
    throw StructureError("swap pair and fixed letters must partition the log letters");
}

namespace {

VertexLabel shift_entry(const DerivationSpec& spec, const VertexLabel& e, int k) {
  if (e.is_number()) return VertexLabel::number((e.value() + k) % spec.n);
  char c = e.symbol();
  if (k % 2 == 1 && spec.swap_pair.first) {
    if (c == spec.swap_pair.first) c = spec.swap_pair.second;
    else if (c == spec.swap_pair.second) c = spec.swap_pair.first;
  }
  return VertexLabel::letter(c);
}

}  // namespace

std::vector<VertexLabel> manufacture_letter_rotation(
    const std::vector<std::vector<VertexLabel>>& rows, char letter) {
  const int n = static_cast<int>(rows.size());
  const VertexLabel lab = VertexLabel::letter(letter);
  // succ[k] = the entry before the letter in row k; rule chaining puts it
  // right after k in the letter's rotation.
  std::vector<int> succ(n, -1);
  for (int k = 0; k < n; ++k) {
    const auto& row = rows[k];
    auto it = std::find(row.begin(), row.end(), lab);
    if (it == row.end())
      throw StructureError(std::string("letter '") + letter + "' missing from row " +
                           std::to_string(k));
    const size_t pos = static_cast<size_t>(it - row.begin());
    const VertexLabel before = row[(pos + row.size() - 1) % row.size()];
    if (!before.is_number())
      throw StructureError(std::string("letters adjacent in row ") + std::to_string(k));
    succ[k] = before.value();
  }
  std::vector<VertexLabel> cycle;
  std::vector<char> seen(n, 0);
  int cur = 0;
  for (int step = 0; step < n; ++step) {
    if (seen[cur])
      throw StructureError(std::string("rotation at '") + letter +
                           "' closes after " + std::to_string(step) +
                           " of " + std::to_string(n) + " entries (multiple short cycles)");
    seen[cur] = 1;
    cycle.push_back(VertexLabel::number(cur));
    cur = succ[cur];
  }
  if (cur != 0)
    throw StructureError(std::string("rotation at '") + letter + "' fails to close");
  return cycle;
}

RotationSystem derive_rotation_system(const DerivationSpec& spec) {
  spec.validate();
  const int n = spec.n;

  std::vector<std::vector<VertexLabel>> rows(n);
  for (int k = 0; k < n; ++k) {
    rows[k].reserve(spec.log.entries.size());
    for (const auto& e : spec.log.entries) rows[k].push_back(shift_entry(spec, e, k));
  }

  std::vector<std::pair<VertexLabel, std::vector<VertexLabel>>> all;
  for (int k = 0; k < n; ++k) all.emplace_back(VertexLabel::number(k), rows[k]);
  for (char c : spec.log.letters())
    all.emplace_back(VertexLabel::letter(c), manufacture_letter_rotation(rows, c));

  RotationSystem rs = RotationSystem::make(n, spec.log.letters(), std::move(all));

  // The condensed 1-factor must appear as the edge (k, k+n/2) exactly once
  // per endpoint; this is automatic from the shifted log, so assert it.
  if (n % 2 == 0) {
    for (int k = 0; k < n; ++k) {
      const VertexLabel a = VertexLabel::number(k);
      const VertexLabel b = VertexLabel::number((k + n / 2) % n);
      if (!rs.has_edge(a, b))
        throw StructureError("1-factor edge " + a.str() + "-" + b.str() + " missing");
    }
  }
  return rs;
}

RotationSystem expand_index4(const std::vector<std::vector<int>>& rows, int n) {
  if (n % 4 != 0) throw StructureError("index-4 expansion needs n divisible by 4");
  if (rows.size() != 4) throw StructureError("index-4 expansion needs four rows");
  for (size_t r = 0; r < 4; ++r)
    if (rows[r].size() != static_cast<size_t>(n - 1))
      throw StructureError("row [" + std::to_string(r) + "] has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(n - 1));

  std::vector<std::pair<VertexLabel, std::vector<VertexLabel>>> all;
  for (int k = 0; k < n; ++k) {
    std::vector<VertexLabel> row;
    row.reserve(n - 1);
    for (int v : rows[k % 4]) row.push_back(VertexLabel::number((v + k) % n));
    all.emplace_back(VertexLabel::number(k), std::move(row));
  }
  try {
    return RotationSystem::make(n, {}, std::move(all));
  } catch (const StructureError& e) {
    throw StructureError(std::string("index-4 rows are inconsistent: ") + e.what());
  }
}

}  // namespace genusforge
