#include "genusforge/rotation_system.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace genusforge {

std::pair<VertexLabel, VertexLabel> ordered_pair(VertexLabel a, VertexLabel b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

RotationSystem RotationSystem::make(
    int n, const std::vector<char>& letters,
    std::vector<std::pair<VertexLabel, std::vector<VertexLabel>>> rows) {
  RotationSystem rs;
  rs.n_ = n;
  rs.letters_ = letters;
  std::sort(rs.letters_.begin(), rs.letters_.end());
  if (std::adjacent_find(rs.letters_.begin(), rs.letters_.end()) != rs.letters_.end())
    throw StructureError("duplicate letter in alphabet");

  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i].first == rows[i + 1].first)
      throw StructureError("duplicate rotation row for " + rows[i].first.str());

  auto check_label = [&](VertexLabel v) {
    if (v.is_number()) {
      if (v.value() >= n) throw StructureError("number label " + v.str() + " outside [0,n)");
    } else if (!std::binary_search(rs.letters_.begin(), rs.letters_.end(), v.symbol())) {
      throw StructureError("letter '" + v.str() + "' not in declared alphabet");
    }
  };

  for (auto& [v, neigh] : rows) {
    check_label(v);
    rs.index_.emplace(v.code(), static_cast<int>(rs.verts_.size()));
    rs.verts_.push_back(v);
    rs.rot_.push_back(std::move(neigh));
  }

  long long dir_edges = 0;
  for (size_t vi = 0; vi < rs.verts_.size(); ++vi) {
    const VertexLabel v = rs.verts_[vi];
    std::set<int32_t> seen;
    for (const VertexLabel& u : rs.rot_[vi]) {
      check_label(u);
      if (u == v) throw StructureError("self-loop at " + v.str());
      if (!seen.insert(u.code()).second)
        throw StructureError("repeated neighbor " + u.str() + " at " + v.str());
      if (!rs.index_.count(u.code()))
        throw StructureError("unknown neighbor " + u.str() + " in row of " + v.str());
      ++dir_edges;
    }
  }
  // Symmetry: b in rot(a) iff a in rot(b).
  for (size_t vi = 0; vi < rs.verts_.size(); ++vi) {
    const VertexLabel v = rs.verts_[vi];
    for (const VertexLabel& u : rs.rot_[vi]) {
      const auto& back = rs.rot_[rs.idx(u)];
      if (std::find(back.begin(), back.end(), v) == back.end())
        throw StructureError("asymmetric adjacency: " + u.str() + " missing from row of " +
                             v.str() + " partner (" + v.str() + "," + u.str() + ")");
    }
  }
  if (dir_edges % 2 != 0) throw StructureError("odd directed edge count");
  rs.edge_count_ = dir_edges / 2;
  for (size_t vi = 0; vi < rs.verts_.size(); ++vi) rs.canonicalize_row(static_cast<int>(vi));
  return rs;
}

int RotationSystem::idx(VertexLabel v) const {
  auto it = index_.find(v.code());
  if (it == index_.end()) throw StructureError("unknown vertex " + v.str());
  return it->second;
}

void RotationSystem::canonicalize_row(int vi) {
  auto& r = rot_[vi];
  if (r.empty()) return;
  auto least = std::min_element(r.begin(), r.end());
  std::rotate(r.begin(), least, r.end());
}

bool RotationSystem::has_edge(VertexLabel a, VertexLabel b) const {
  auto it = index_.find(a.code());
  if (it == index_.end()) return false;
  const auto& r = rot_[it->second];
  return std::find(r.begin(), r.end(), b) != r.end();
}

const std::vector<VertexLabel>& RotationSystem::rotation(VertexLabel v) const {
  return rot_[idx(v)];
}

int RotationSystem::pos_in_rotation(int vi, VertexLabel u) const {
  const auto& r = rot_[vi];
  auto it = std::find(r.begin(), r.end(), u);
  if (it == r.end())
    throw StructureError("label " + u.str() + " not adjacent to " + verts_[vi].str());
  return static_cast<int>(it - r.begin());
}

VertexLabel RotationSystem::succ(VertexLabel v, VertexLabel u) const {
  const int vi = idx(v);
  const auto& r = rot_[vi];
  return r[(pos_in_rotation(vi, u) + 1) % r.size()];
}

VertexLabel RotationSystem::pred(VertexLabel v, VertexLabel u) const {
  const int vi = idx(v);
  const auto& r = rot_[vi];
  return r[(pos_in_rotation(vi, u) + r.size() - 1) % r.size()];
}

std::vector<DirectedEdge> RotationSystem::directed_edges() const {
  std::vector<DirectedEdge> out;
  out.reserve(2 * static_cast<size_t>(edge_count_));
  for (size_t vi = 0; vi < verts_.size(); ++vi)
    for (const VertexLabel& u : rot_[vi]) out.emplace_back(verts_[vi], u);
  return out;
}

bool RotationSystem::connected() const { return components().size() <= 1; }

std::vector<std::vector<VertexLabel>> RotationSystem::components() const {
  std::vector<char> seen(verts_.size(), 0);
  std::vector<std::vector<VertexLabel>> comps;
  for (size_t start = 0; start < verts_.size(); ++start) {
    if (seen[start]) continue;
    comps.emplace_back();
    std::deque<int> q{static_cast<int>(start)};
    seen[start] = 1;
    while (!q.empty()) {
      int vi = q.front();
      q.pop_front();
      comps.back().push_back(verts_[vi]);
      for (const VertexLabel& u : rot_[vi]) {
        int ui = idx(u);
        if (!seen[ui]) {
          seen[ui] = 1;
          q.push_back(ui);
        }
      }
    }
  }
  return comps;
}

std::string RotationSystem::serialize_rsf() const {
  std::ostringstream os;
  os << "rsf n=" << n_ << " letters=";
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ",";
    os << letters_[i];
  }
  os << "\n";
  for (size_t vi = 0; vi < verts_.size(); ++vi) {
    os << verts_[vi].str() << ".";
    for (const VertexLabel& u : rot_[vi]) os << " " << u.str();
    os << "\n";
  }
  return os.str();
}

RotationSystem RotationSystem::parse_rsf(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header)) throw FormatError("empty RSF input");
  std::istringstream hs(header);
  std::string tag, ntok, ltok;
  hs >> tag >> ntok >> ltok;
  if (tag != "rsf" || ntok.rfind("n=", 0) != 0 || ltok.rfind("letters=", 0) != 0)
    throw FormatError("bad RSF header: " + header);
  int n = 0;
  try {
    n = std::stoi(ntok.substr(2));
  } catch (...) {
    throw FormatError("bad RSF order: " + ntok);
  }
  std::vector<char> letters;
  std::string ls = ltok.substr(8);
  std::string cur;
  for (char c : ls + ",") {
    if (c == ',') {
      if (!cur.empty()) {
        if (cur.size() != 1) throw FormatError("bad letter token '" + cur + "'");
        letters.push_back(cur[0]);
        cur.clear();
      }
    } else {
      cur += c;
    }
  }

  std::vector<std::pair<VertexLabel, std::vector<VertexLabel>>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream rs(line);
    std::string head;
    rs >> head;
    if (head.empty() || head.back() != '.') throw FormatError("bad RSF row: " + line);
    VertexLabel v = VertexLabel::parse(head.substr(0, head.size() - 1));
    std::vector<VertexLabel> neigh;
    std::string tok;
    while (rs >> tok) neigh.push_back(VertexLabel::parse(tok));
    rows.emplace_back(v, std::move(neigh));
  }
  try {
    return RotationSystem::make(n, letters, std::move(rows));
  } catch (const StructureError& e) {
    throw FormatError(std::string("invalid RSF: ") + e.what());
  }
}

void RotationSystem::insert_neighbor(VertexLabel v, VertexLabel nbr, VertexLabel after) {
  const int vi = idx(v);
  if (has_edge(v, nbr)) throw StructureError("neighbor " + nbr.str() + " already at " + v.str());
  auto& r = rot_[vi];
  const int p = pos_in_rotation(vi, after);
  r.insert(r.begin() + p + 1, nbr);
  canonicalize_row(vi);
}

void RotationSystem::remove_neighbor(VertexLabel v, VertexLabel nbr) {
  const int vi = idx(v);
  auto& r = rot_[vi];
  auto it = std::find(r.begin(), r.end(), nbr);
  if (it == r.end()) throw StructureError("neighbor " + nbr.str() + " missing at " + v.str());
  r.erase(it);
  canonicalize_row(vi);
}

void RotationSystem::delete_edge(VertexLabel a, VertexLabel b) {
  remove_neighbor(a, b);
  remove_neighbor(b, a);
  --edge_count_;
}

void RotationSystem::insert_edge(VertexLabel a, VertexLabel after_a, VertexLabel b,
                                 VertexLabel after_b) {
  if (has_edge(a, b) || a == b)
    throw StructureError("cannot insert edge " + a.str() + "-" + b.str());
  insert_neighbor(a, b, after_a);
  insert_neighbor(b, a, after_b);
  ++edge_count_;
}

bool FaceTrace::all_triangles() const {
  for (const auto& f : faces)
    if (f.size() != 3) return false;
  return true;
}

bool FaceTrace::is_partition(const RotationSystem& rs) const {
  std::set<DirectedEdge> seen;
  size_t total = 0;
  for (const auto& f : faces)
    for (const auto& e : f) {
      if (!seen.insert(e).second) return false;
      ++total;
    }
  return total == 2 * static_cast<size_t>(rs.edge_count());
}

FaceTrace trace_faces(const RotationSystem& rs) {
  FaceTrace out;
  std::set<DirectedEdge> visited;
  for (const auto& start : rs.directed_edges()) {
    if (visited.count(start)) continue;
    std::vector<DirectedEdge> face;
    DirectedEdge e = start;
    do {
      visited.insert(e);
      face.push_back(e);
      VertexLabel c = rs.succ(e.second, e.first);
      e = {e.second, c};
    } while (!(e == start));
    out.faces.push_back(std::move(face));
  }
  return out;
}

std::vector<RStarViolation> check_rule_r_star(const RotationSystem& rs) {
  std::vector<RStarViolation> out;
  for (const auto& [i, k] : rs.directed_edges()) {
    const VertexLabel j = rs.pred(i, k);
    const VertexLabel l = rs.succ(i, k);
    // rotation(k) must read ... l i j ...
    bool ok = rs.degree(k) >= 2 && rs.succ(k, i) == j && rs.pred(k, i) == l;
    if (!ok) {
      std::string detail = "rotation(" + i.str() + ") has " + j.str() + " " + k.str() + " " +
                           l.str() + " but rotation(" + k.str() + ") around " + i.str() +
                           " reads " + rs.pred(k, i).str() + " " + i.str() + " " +
                           rs.succ(k, i).str();
      out.push_back({i, k, std::move(detail)});
    }
  }
  return out;
}

int euler_genus(const RotationSystem& rs) {
  auto comps = rs.components();
  if (comps.size() > 1) {
    std::string msg = "disconnected input; components:";
    for (const auto& c : comps) {
      msg += " {";
      for (size_t i = 0; i < c.size() && i < 4; ++i) msg += (i ? "," : "") + c[i].str();
      if (c.size() > 4) msg += ",...";
      msg += "}";
    }
    throw StructureError(msg);
  }
  const long long V = rs.vertex_count();
  const long long E = rs.edge_count();
  const long long F = static_cast<long long>(trace_faces(rs).face_count());
  const long long chi = V - E + F;
  if (chi % 2 != 0 || chi > 2)
    throw StructureError("Euler characteristic " + std::to_string(chi) +
                         " impossible for an orientable rotation system");
  return static_cast<int>((2 - chi) / 2);
}

Rational genus_lower_bound(long long V, long long E) {
  if (V < 3) throw StructureError("genus_lower_bound needs V >= 3");
  return Rational(E - 3 * V + 6, 6);
}

GraphSignature signature(const RotationSystem& rs) {
  GraphSignature sig;
  for (const auto& v : rs.vertices()) sig.vertices.insert(v);
  for (const auto& [a, b] : rs.directed_edges()) sig.edges.insert(ordered_pair(a, b));
  return sig;
}

bool check_complete_minus(const RotationSystem& rs, int n,
                          const std::set<std::pair<VertexLabel, VertexLabel>>& missing) {
  const GraphSignature sig = signature(rs);
  if (static_cast<int>(sig.vertices.size()) != n) return false;
  std::vector<VertexLabel> vs(sig.vertices.begin(), sig.vertices.end());
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      const auto pair = ordered_pair(vs[i], vs[j]);
      const bool expect = missing.count(pair) == 0;
      if (sig.edges.count(pair) != static_cast<size_t>(expect)) return false;
    }
  return sig.edges.size() ==
         static_cast<size_t>(n) * (n - 1) / 2 - missing.size();
}

}  // namespace genusforge
