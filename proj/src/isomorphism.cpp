#include "genusforge/isomorphism.hpp"

#include <algorithm>
#include <deque>

namespace genusforge {

VertexLabel IsoMap::operator()(VertexLabel v) const {
  auto it = map.find(v);
  if (it == map.end()) throw StructureError("isomorphism undefined at " + v.str());
  return it->second;
}

bool IsoMap::is_isomorphism(const RotationSystem& from, const RotationSystem& to) const {
  if (map.size() != static_cast<size_t>(from.vertex_count())) return false;
  if (from.vertex_count() != to.vertex_count()) return false;
  for (const auto& v : from.vertices()) {
    auto it = map.find(v);
    if (it == map.end() || !to.has_vertex(it->second)) return false;
    std::vector<VertexLabel> image;
    for (const auto& u : from.rotation(v)) {
      auto ju = map.find(u);
      if (ju == map.end()) return false;
      image.push_back(ju->second);
    }
    if (orientation == Orientation::Reversing) std::reverse(image.begin(), image.end());
    if (!cyclic_equal(image, to.rotation(it->second))) return false;
  }
  return true;
}

namespace {

struct PartialMap {
  std::unordered_map<int32_t, VertexLabel> fwd;
  std::unordered_map<int32_t, VertexLabel> rev;

  // Returns false on conflict (either direction).
  bool bind(VertexLabel a, VertexLabel b) {
    auto f = fwd.find(a.code());
    if (f != fwd.end()) return f->second == b;
    auto r = rev.find(b.code());
    if (r != rev.end()) return r->second == a;
    fwd.emplace(a.code(), b);
    rev.emplace(b.code(), a);
    return true;
  }
};

}  // namespace

std::optional<IsoMap> try_extend_isomorphism(const RotationSystem& t1, const RotationSystem& t2,
                                             const DirectedEdge& seed_from,
                                             const DirectedEdge& seed_to,
                                             Orientation orientation) {
  if (!is_triangulation(t1) || !is_triangulation(t2))
    throw StructureError("isomorphism extension requires triangulations");
  if (!t1.has_edge(seed_from.first, seed_from.second) ||
      !t2.has_edge(seed_to.first, seed_to.second))
    throw StructureError("seed is not a directed edge");

  PartialMap pm;
  if (!pm.bind(seed_from.first, seed_to.first)) return std::nullopt;
  if (!pm.bind(seed_from.second, seed_to.second)) return std::nullopt;

  std::set<DirectedEdge> processed;
  std::deque<std::pair<DirectedEdge, DirectedEdge>> queue{{seed_from, seed_to}};
  while (!queue.empty()) {
    auto [e, f] = queue.front();
    queue.pop_front();
    if (!processed.insert(e).second) continue;
    const VertexLabel c = t1.succ(e.second, e.first);
    const VertexLabel c2 = orientation == Orientation::Preserving
                               ? t2.succ(f.second, f.first)
                               : t2.pred(f.second, f.first);
    if (!pm.bind(c, c2)) return std::nullopt;
    // Walk the shared triangle and the reverse edge.
    queue.push_back({{e.second, c}, {f.second, c2}});
    queue.push_back({{c, e.first}, {c2, f.first}});
    queue.push_back({{e.second, e.first}, {f.second, f.first}});
  }

  if (pm.fwd.size() != static_cast<size_t>(t1.vertex_count())) return std::nullopt;
  IsoMap iso;
  iso.orientation = orientation;
  for (const auto& v : t1.vertices()) iso.map.emplace(v, pm.fwd.at(v.code()));
  if (!iso.is_isomorphism(t1, t2)) return std::nullopt;
  return iso;
}

namespace {

bool isomorphic_impl(const RotationSystem& t1, const RotationSystem& t2) {
  if (t1.vertex_count() != t2.vertex_count() || t1.edge_count() != t2.edge_count()) return false;
  const auto edges1 = t1.directed_edges();
  if (edges1.empty()) return t2.edge_count() == 0;
  const DirectedEdge seed_from = *std::min_element(edges1.begin(), edges1.end());
  for (const auto& seed_to : t2.directed_edges())
    for (Orientation o : {Orientation::Preserving, Orientation::Reversing})
      if (try_extend_isomorphism(t1, t2, seed_from, seed_to, o)) return true;
  return false;
}

}  // namespace

bool triangulations_isomorphic(const RotationSystem& t1, const RotationSystem& t2) {
  return isomorphic_impl(t1, t2);
}

std::vector<IsoMap> find_isomorphisms(const RotationSystem& t1, const RotationSystem& t2,
                                      size_t max_results) {
  std::vector<IsoMap> out;
  const auto edges1 = t1.directed_edges();
  if (edges1.empty()) return out;
  const DirectedEdge seed_from = *std::min_element(edges1.begin(), edges1.end());
  for (const auto& seed_to : t2.directed_edges()) {
    for (Orientation o : {Orientation::Preserving, Orientation::Reversing}) {
      if (out.size() >= max_results) return out;
      if (auto iso = try_extend_isomorphism(t1, t2, seed_from, seed_to, o)) out.push_back(*iso);
    }
  }
  return out;
}

int count_isomorphism_classes(const std::vector<RotationSystem>& ts) {
  if (ts.empty()) return 0;
  const int v0 = ts.front().vertex_count();
  for (const auto& t : ts)
    if (t.vertex_count() != v0) throw StructureError("mixed vertex counts in class counting");
  std::vector<const RotationSystem*> reps;
  for (const auto& t : ts) {
    bool found = false;
    for (const auto* r : reps)
      if (isomorphic_impl(*r, t)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(&t);
  }
  const int classes = static_cast<int>(reps.size());
  // Sanity floor: a class holds at most 2 * (directed edge count) inputs.
  const long long cap = 4 * ts.front().edge_count();
  const long long floor_classes =
      cap == 0 ? 1 : (static_cast<long long>(ts.size()) + cap - 1) / cap;
  if (classes < floor_classes)
    throw StructureError("class count below the seed-counting floor; propagation is broken");
  return classes;
}

}  // namespace genusforge
