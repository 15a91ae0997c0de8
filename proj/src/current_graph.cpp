#include "genusforge/current_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace genusforge {

std::string kind_name(CGVertexKind k) {
  switch (k) {
    case CGVertexKind::Cubic: return "cubic";
    case CGVertexKind::Vortex1: return "vortex1";
    case CGVertexKind::Vortex2: return "vortex2";
    case CGVertexKind::DeadEnd: return "deadend";
  }
  return "?";
}

std::vector<char> CGVertex::letters() const {
  std::vector<char> out;
  for (char c : corner_letters)
    if (c) out.push_back(c);
  return out;
}

namespace {

int letter_count_for_kind(CGVertexKind k) {
  switch (k) {
    case CGVertexKind::Vortex1: return 1;
    case CGVertexKind::Vortex2: return 2;
    default: return 0;
  }
}

}  // namespace

CurrentGraph CurrentGraph::make(CyclicGroup group, std::vector<CGArc> arcs,
                                std::vector<CGVertex> vertices) {
  if (group.n < 3) throw StructureError("group order must be at least 3");
  if (arcs.empty()) throw StructureError("empty arc list");

  // Class uniqueness first, with raw currents, so the diagnostic can name
  // the colliding pair ((C3) is a hard structural requirement).
  std::map<int, int> class_seen;  // rep -> raw current
  for (auto& a : arcs) {
    a.current = group.normalize(a.current);
    if (a.current == 0) throw StructureError("arc with zero current");
    const int rep = group.class_rep(a.current);
    auto [it, fresh] = class_seen.emplace(rep, a.current);
    if (!fresh)
      throw StructureError("(C3) violated: currents " + std::to_string(it->second) + " and " +
                           std::to_string(a.current) + " share a class over Z_" +
                           std::to_string(group.n));
  }

  // Normalize arcs to class-representative currents; flipping reverses the
  // direction, so head/tail references in rotations swap.
  std::map<int, std::pair<int, bool>> remap;  // old id -> (new id, flipped)
  for (auto& a : arcs) {
    const int rep = group.class_rep(a.current);
    const bool flip = a.current != rep;
    remap[a.id] = {rep, flip};
    if (flip) {
      std::swap(a.tail_vertex, a.head_vertex);
      a.current = rep;
    }
    a.id = rep;
  }
  if (remap.size() != arcs.size()) throw StructureError("duplicate arc id");
  for (auto& v : vertices)
    for (auto& e : v.rotation) {
      auto it = remap.find(e.arc);
      if (it == remap.end())
        throw StructureError("rotation of vertex " + std::to_string(v.id) +
                             " references unknown arc " + std::to_string(e.arc));
      e.arc = it->second.first;
      if (it->second.second) e.head = !e.head;
    }

  std::sort(arcs.begin(), arcs.end(), [](const CGArc& a, const CGArc& b) { return a.id < b.id; });

  // Incidence: every end appears exactly once, at the arc's endpoint.
  std::map<int, int> vid_to_pos;
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (!vid_to_pos.emplace(vertices[i].id, static_cast<int>(i)).second)
      throw StructureError("duplicate vertex id " + std::to_string(vertices[i].id));
  }
  std::map<ArcEnd, int> end_at;  // end -> vertex id
  for (const auto& v : vertices) {
    for (const auto& e : v.rotation) {
      if (!end_at.emplace(e, v.id).second)
        throw StructureError("rotation/incidence mismatch: end " + e.str() +
                             " listed at two rotation slots");
    }
    if (v.corner_letters.size() > v.rotation.size())
      throw StructureError("more corner letters than corners at vertex " + std::to_string(v.id));
  }
  for (auto& v : vertices) v.corner_letters.resize(v.rotation.size(), 0);
  for (const auto& a : arcs) {
    auto t = end_at.find({a.id, false});
    auto h = end_at.find({a.id, true});
    if (t == end_at.end())
      throw StructureError("dangling arc-end " + ArcEnd{a.id, false}.str());
    if (h == end_at.end())
      throw StructureError("dangling arc-end " + ArcEnd{a.id, true}.str());
    if (!vid_to_pos.count(a.tail_vertex) || !vid_to_pos.count(a.head_vertex))
      throw StructureError("arc " + std::to_string(a.id) + " references unknown vertex");
    if (t->second != a.tail_vertex || h->second != a.head_vertex)
      throw StructureError("rotation/incidence mismatch at arc " + std::to_string(a.id));
  }
  if (end_at.size() != 2 * arcs.size())
    throw StructureError("rotation slots do not cover all arc ends");

  // Letter census must match the declared kind; degree is validated by the
  // construction principles, not here (loops and odd gadgets are legal
  // structures to trace).
  for (auto& v : vertices) {
    int letters = 0;
    for (char c : v.corner_letters)
      if (c) ++letters;
    if (letters != letter_count_for_kind(v.kind))
      throw StructureError("vertex " + std::to_string(v.id) + " kind " + kind_name(v.kind) +
                           " carries " + std::to_string(letters) + " letters");
  }

  // Canonical vertex order and ids: by least incident end, with the
  // lettered corner first for single-letter degree-2 vortices so the
  // letter-to-corner map survives serialization.
  for (auto& v : vertices) {
    if (v.rotation.empty()) throw StructureError("isolated vertex " + std::to_string(v.id));
    size_t start = 0;
    if (v.kind == CGVertexKind::Vortex1 && v.degree() == 2 && !v.corner_letters[0]) {
      start = 1;
    } else {
      start = static_cast<size_t>(
          std::min_element(v.rotation.begin(), v.rotation.end()) - v.rotation.begin());
    }
    std::rotate(v.rotation.begin(), v.rotation.begin() + start, v.rotation.end());
    std::rotate(v.corner_letters.begin(), v.corner_letters.begin() + start,
                v.corner_letters.end());
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const CGVertex& a, const CGVertex& b) { return a.rotation[0] < b.rotation[0]; });
  std::map<int, int> new_vid;
  for (size_t i = 0; i < vertices.size(); ++i) {
    new_vid[vertices[i].id] = static_cast<int>(i);
    vertices[i].id = static_cast<int>(i);
  }
  for (auto& a : arcs) {
    a.tail_vertex = new_vid.at(a.tail_vertex);
    a.head_vertex = new_vid.at(a.head_vertex);
  }

  CurrentGraph cg;
  cg.group_ = group;
  cg.arcs_ = std::move(arcs);
  cg.vertices_ = std::move(vertices);
  return cg;
}

const CGArc& CurrentGraph::arc_by_id(int id) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), id,
                             [](const CGArc& a, int v) { return a.id < v; });
  if (it == arcs_.end() || it->id != id)
    throw StructureError("unknown arc " + std::to_string(id));
  return *it;
}

int CurrentGraph::vertex_index_of_end(ArcEnd e) const {
  const CGArc& a = arc_by_id(e.arc);
  return e.head ? a.head_vertex : a.tail_vertex;
}

const CGVertex& CurrentGraph::vertex_of_end(ArcEnd e) const {
  return vertices_[vertex_index_of_end(e)];
}

int CurrentGraph::excess(const CGVertex& v) const {
  long long sum = 0;
  for (const auto& e : v.rotation) {
    const CGArc& a = arc_by_id(e.arc);
    sum += e.head ? a.current : -a.current;
  }
  return group_.normalize(sum);
}

CurrentGraph CurrentGraph::with_flipped_rotation(int vertex_id) const {
  std::vector<CGVertex> vs = vertices_;
  bool found = false;
  for (auto& v : vs) {
    if (v.id == vertex_id) {
      // Reversing a rotation re-pairs corners: the corner arriving at
      // rotation[i] becomes the corner arriving at the previous entry of
      // the reversed order. Letters follow their arrival ends.
      const int d = v.degree();
      std::vector<ArcEnd> rrot(v.rotation.rbegin(), v.rotation.rend());
      std::vector<char> rlet(d, 0);
      for (int i = 0; i < d; ++i) {
        if (!v.corner_letters[i]) continue;
        // Old corner: arrive rotation[i], depart rotation[i+1]. In the
        // reversed rotation the corner arriving at rotation[i+1] departs
        // rotation[i]; letters stay on their (arrival, departure) corner
        // read against the new order, anchored at the departure end.
        const ArcEnd dep = v.rotation[(i + 1) % d];
        for (int j = 0; j < d; ++j)
          if (rrot[j] == dep) rlet[j] = v.corner_letters[i];
      }
      v.rotation = std::move(rrot);
      v.corner_letters = std::move(rlet);
      found = true;
    }
  }
  if (!found) throw StructureError("unknown vertex " + std::to_string(vertex_id));
  return CurrentGraph::make(group_, arcs_, std::move(vs));
}

CGTrace trace_and_index(const CurrentGraph& cg) {
  // end -> (vertex index, slot)
  std::map<ArcEnd, std::pair<int, int>> where;
  const auto& vs = cg.vertices();
  for (size_t vi = 0; vi < vs.size(); ++vi)
    for (size_t p = 0; p < vs[vi].rotation.size(); ++p)
      where[vs[vi].rotation[p]] = {static_cast<int>(vi), static_cast<int>(p)};

  auto next_dart = [&](CGDart d) -> CGDart {
    const auto [vi, pos] = where.at(d.arrival());
    const auto& rot = vs[vi].rotation;
    const ArcEnd dep = rot[(pos + 1) % rot.size()];
    return {dep.arc, !dep.head};
  };

  CGTrace out;
  std::set<std::pair<int, bool>> visited;
  for (const auto& a : cg.arcs()) {
    for (bool fwd : {true, false}) {
      CGDart start{a.id, fwd};
      if (visited.count({start.arc, start.forward})) continue;
      CGFace face;
      CGDart d = start;
      do {
        visited.insert({d.arc, d.forward});
        face.darts.push_back(d);
        const auto [vi, pos] = where.at(d.arrival());
        face.corner_vertices.push_back(vs[vi].id);
        face.corner_letters.push_back(vs[vi].corner_letters[pos]);
        d = next_dart(d);
      } while (!(d == start));
      out.faces.push_back(std::move(face));
    }
  }
  return out;
}

std::string PrincipleReport::str() const {
  std::ostringstream os;
  for (int i = 0; i < 7; ++i) {
    os << "C" << (i + 1) << ": " << (c[i].pass ? "pass" : "FAIL");
    for (const auto& w : c[i].witnesses) os << " [" << w << "]";
    os << "\n";
  }
  return os.str();
}

PrincipleReport validate_principles(const CurrentGraph& cg) {
  PrincipleReport r;
  const CyclicGroup& g = cg.group();

  for (const auto& v : cg.vertices()) {
    const int d = v.degree();
    bool ok = true;
    switch (v.kind) {
      case CGVertexKind::Cubic: ok = d == 3; break;
      case CGVertexKind::Vortex1: ok = d == 1 || d == 2; break;
      case CGVertexKind::Vortex2: ok = d == 2; break;
      case CGVertexKind::DeadEnd: ok = d == 1; break;
    }
    if (!ok) {
      r.c[0].pass = false;
      r.c[0].witnesses.push_back("vertex " + std::to_string(v.id) + " kind " +
                                 kind_name(v.kind) + " degree " + std::to_string(d));
    }
  }

  const int index = trace_and_index(cg).index();
  if (index != 1) {
    r.c[1].pass = false;
    r.c[1].witnesses.push_back("index=" + std::to_string(index));
  }

  std::set<int> reps;
  for (const auto& a : cg.arcs()) reps.insert(a.current);
  for (int c = 1; c <= g.class_count(); ++c)
    if (!reps.count(c)) {
      r.c[2].pass = false;
      r.c[2].witnesses.push_back("class " + std::to_string(c) + " missing");
    }

  for (const auto& v : cg.vertices()) {
    if (v.degree() != 3) continue;
    const int e = cg.excess(v);
    if (e != 0) {
      r.c[3].pass = false;
      r.c[3].witnesses.push_back("vertex " + std::to_string(v.id) + " excess " +
                                 std::to_string(e));
    }
  }

  if (g.has_order2()) {
    bool ok = false;
    if (reps.count(g.order2())) {
      const CGArc& a = cg.arc_by_id(g.order2());
      ok = cg.vertices()[a.tail_vertex].degree() == 1 ||
           cg.vertices()[a.head_vertex].degree() == 1;
    }
    if (!ok) {
      r.c[4].pass = false;
      r.c[4].witnesses.push_back("order-2 current " + std::to_string(g.order2()) +
                                 " not on an arc with a degree-1 endpoint");
    }
  }

  for (const auto& v : cg.vertices()) {
    const bool vortex = v.kind == CGVertexKind::Vortex1 || v.kind == CGVertexKind::Vortex2;
    if (!vortex) continue;
    const int e = cg.excess(v);
    if (v.degree() == 1) {
      const int gg = std::gcd(e, g.n);
      if (gg != 1) {
        r.c[5].pass = false;
        r.c[5].witnesses.push_back("vortex " + std::to_string(v.id) + " excess " +
                                   std::to_string(e) + " gcd " + std::to_string(gg));
      }
    } else if (v.degree() == 2) {
      bool odd_ok = true;
      for (const auto& end : v.rotation)
        if (cg.arc_by_id(end.arc).current % 2 == 0) odd_ok = false;
      const int gg = std::gcd(e, g.n);
      if (!odd_ok || gg != 2) {
        r.c[6].pass = false;
        r.c[6].witnesses.push_back("vortex " + std::to_string(v.id) + " excess " +
                                   std::to_string(e) + " gcd " + std::to_string(gg) +
                                   (odd_ok ? "" : " (even incident current)"));
      }
    }
  }
  return r;
}

Log extract_log(const CurrentGraph& cg) {
  const CGTrace trace = trace_and_index(cg);
  if (trace.index() != 1)
    throw StructureError("log extraction requires index 1, traced index=" +
                         std::to_string(trace.index()));
  const CGFace& face = trace.faces.front();
  const CyclicGroup& g = cg.group();
  const int D = static_cast<int>(face.darts.size());

  // Locate the doubled order-2 traversal, which (C5) makes consecutive.
  int skip = -1;
  if (g.has_order2()) {
    for (int i = 0; i < D; ++i) {
      const CGDart& a = face.darts[i];
      const CGDart& b = face.darts[(i + 1) % D];
      if (a.arc == g.order2() && b.arc == g.order2()) {
        skip = (i + 1) % D;
        break;
      }
    }
  }

  Log log;
  log.n = g.n;
  for (int i = 0; i < D; ++i) {
    if (i != skip) {
      const CGDart& d = face.darts[i];
      const int value = d.forward ? cg.arc_by_id(d.arc).current
                                  : g.negate(cg.arc_by_id(d.arc).current);
      log.entries.push_back(VertexLabel::number(value));
    }
    if (face.corner_letters[i]) log.entries.push_back(VertexLabel::letter(face.corner_letters[i]));
  }
  log.validate();
  return log;
}

CurrentGraph reconstruct_from_log(const Log& log, int n) {
  if (log.n != n) throw StructureError("log order disagrees with requested order");
  log.validate();
  CyclicGroup g{n};

  // Un-condense the order-2 entry: it stands for two consecutive
  // traversals of the dead-end arc.
  std::vector<VertexLabel> seq;
  for (const auto& e : log.entries) {
    seq.push_back(e);
    if (g.has_order2() && e.is_number() && e.value() == g.order2())
      seq.push_back(e);
  }

  struct Pos {
    CGDart dart;
    char letter_after = 0;  // letter between this dart and the next
  };
  std::vector<Pos> walk;
  std::set<int> fwd_seen;
  for (const auto& e : seq) {
    if (e.is_letter()) {
      if (walk.empty()) throw StructureError("log cannot open with a letter");
      if (walk.back().letter_after)
        throw StructureError("two letters share a corner in the log");
      walk.back().letter_after = e.symbol();
      continue;
    }
    const int v = e.value();
    const int rep = g.class_rep(v);
    bool forward;
    if (2 * rep == n) {
      forward = !fwd_seen.count(rep);
    } else {
      forward = v == rep;
    }
    if (forward && !fwd_seen.insert(rep).second)
      throw StructureError("unpairable entry " + e.str());
    walk.push_back({{rep, forward}, 0});
  }
  // A letter between the last and first darts wraps around.
  const int D = static_cast<int>(walk.size());
  if (D == 0) throw StructureError("log has no currents");

  // Corner-successor permutation over arc ends, plus corner letters.
  std::map<ArcEnd, ArcEnd> sigma;
  std::map<ArcEnd, char> letter_at;  // keyed by the corner's arrival end
  for (int i = 0; i < D; ++i) {
    const Pos& cur = walk[i];
    const Pos& nxt = walk[(i + 1) % D];
    const ArcEnd from = cur.dart.arrival();
    if (sigma.count(from))
      throw StructureError("non-closing vertex orbits: end " + from.str() + " revisited");
    sigma[from] = nxt.dart.departure();
    if (cur.letter_after) letter_at[from] = cur.letter_after;
  }

  // Vertices are the orbits of sigma; the orbit order is the rotation.
  std::map<ArcEnd, int> orbit_of;
  std::vector<CGVertex> vertices;
  for (const auto& [start, unused] : sigma) {
    (void)unused;
    if (orbit_of.count(start)) continue;
    CGVertex v;
    v.id = static_cast<int>(vertices.size());
    ArcEnd e = start;
    do {
      orbit_of[e] = v.id;
      v.rotation.push_back(e);
      auto lit = letter_at.find(e);
      v.corner_letters.push_back(lit == letter_at.end() ? 0 : lit->second);
      e = sigma.at(e);
    } while (!(e == start));
    vertices.push_back(std::move(v));
  }

  std::vector<CGArc> arcs;
  for (int rep : fwd_seen) {
    CGArc a;
    a.id = rep;
    a.current = rep;
    a.tail_vertex = orbit_of.at({rep, false});
    a.head_vertex = orbit_of.at({rep, true});
    arcs.push_back(a);
  }

  // Assign kinds from degree and letter census, rejecting shapes outside
  // (C1)'s degree discipline.
  for (auto& v : vertices) {
    const int d = v.degree();
    const int letters = static_cast<int>(v.letters().size());
    if (d == 3 && letters == 0) {
      v.kind = CGVertexKind::Cubic;
    } else if (d == 1 && letters == 1) {
      v.kind = CGVertexKind::Vortex1;
    } else if (d == 2 && letters == 2) {
      v.kind = CGVertexKind::Vortex2;
    } else if (d == 2 && letters == 1) {
      v.kind = CGVertexKind::Vortex1;
    } else if (d == 1 && letters == 0 && g.has_order2() && v.rotation[0].arc == g.order2()) {
      v.kind = CGVertexKind::DeadEnd;
    } else {
      throw StructureError("vertex degree " + std::to_string(d) + " with " +
                           std::to_string(letters) + " letters is outside (C1)");
    }
  }

  return CurrentGraph::make(g, std::move(arcs), std::move(vertices));
}

std::string CurrentGraph::serialize_cgf() const {
  std::ostringstream os;
  os << "cgf n=" << group_.n << "\n";
  auto slot_of = [&](int vertex_idx, ArcEnd e) {
    const auto& rot = vertices_[vertex_idx].rotation;
    for (size_t i = 0; i < rot.size(); ++i)
      if (rot[i] == e) return static_cast<int>(i);
    throw StructureError("end " + e.str() + " missing from its vertex rotation");
  };
  for (const auto& a : arcs_) {
    os << "arc " << a.id << " " << a.tail_vertex << ":" << slot_of(a.tail_vertex, {a.id, false})
       << " -> " << a.head_vertex << ":" << slot_of(a.head_vertex, {a.id, true})
       << " current=" << a.current << "\n";
  }
  for (const auto& v : vertices_) {
    os << "vertex " << v.id << " kind=" << kind_name(v.kind);
    if (v.kind == CGVertexKind::Vortex1) {
      os << ":" << v.letters()[0];
    } else if (v.kind == CGVertexKind::Vortex2) {
      os << ":" << static_cast<char>(v.corner_letters[0]) << ","
         << static_cast<char>(v.corner_letters[1]);
    }
    os << " rot=";
    for (size_t i = 0; i < v.rotation.size(); ++i) {
      if (i) os << ",";
      os << v.rotation[i].str();
    }
    os << " orient=cw\n";
  }
  return os.str();
}

CurrentGraph CurrentGraph::parse_cgf(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty CGF input");
  {
    std::istringstream hs(line);
    std::string tag, ntok;
    hs >> tag >> ntok;
    if (tag != "cgf" || ntok.rfind("n=", 0) != 0) throw FormatError("bad CGF header: " + line);
  }
  const int n = std::stoi(line.substr(line.find("n=") + 2));
  CyclicGroup g{n};

  auto parse_end = [](const std::string& tok) -> ArcEnd {
    if (tok.size() < 2 || (tok.back() != 't' && tok.back() != 'h'))
      throw FormatError("bad end token '" + tok + "'");
    return {std::stoi(tok.substr(0, tok.size() - 1)), tok.back() == 'h'};
  };

  std::vector<CGArc> arcs;
  std::vector<CGVertex> vertices;
  struct SlotClaim {
    int vertex, slot;
    bool head;
    int arc;
  };
  std::vector<SlotClaim> claims;

  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "arc") {
      CGArc a;
      std::string tailtok, arrow, headtok, curtok;
      ls >> a.id >> tailtok >> arrow >> headtok >> curtok;
      if (arrow != "->" || curtok.rfind("current=", 0) != 0)
        throw FormatError("bad arc line: " + line);
      auto split = [&](const std::string& t) {
        auto c = t.find(':');
        if (c == std::string::npos) throw FormatError("bad vertex:slot token '" + t + "'");
        return std::pair<int, int>{std::stoi(t.substr(0, c)), std::stoi(t.substr(c + 1))};
      };
      auto [tv, ts] = split(tailtok);
      auto [hv, hs] = split(headtok);
      a.tail_vertex = tv;
      a.head_vertex = hv;
      a.current = std::stoi(curtok.substr(8));
      claims.push_back({tv, ts, false, a.id});
      claims.push_back({hv, hs, true, a.id});
      arcs.push_back(a);
    } else if (word == "vertex") {
      CGVertex v;
      std::string kindtok, rottok, orienttok;
      ls >> v.id >> kindtok >> rottok >> orienttok;
      if (kindtok.rfind("kind=", 0) != 0 || rottok.rfind("rot=", 0) != 0 ||
          orienttok.rfind("orient=", 0) != 0)
        throw FormatError("bad vertex line: " + line);
      std::string kind = kindtok.substr(5);
      std::vector<char> letters;
      if (auto c = kind.find(':'); c != std::string::npos) {
        std::string ls2 = kind.substr(c + 1);
        kind = kind.substr(0, c);
        for (size_t i = 0; i < ls2.size(); i += 2) letters.push_back(ls2[i]);
      }
      if (kind == "cubic") v.kind = CGVertexKind::Cubic;
      else if (kind == "vortex1") v.kind = CGVertexKind::Vortex1;
      else if (kind == "vortex2") v.kind = CGVertexKind::Vortex2;
      else if (kind == "deadend") v.kind = CGVertexKind::DeadEnd;
      else throw FormatError("unknown vertex kind '" + kind + "'");

      std::string ends = rottok.substr(4);
      std::string cur;
      for (char c : ends + ",") {
        if (c == ',') {
          if (!cur.empty()) v.rotation.push_back(parse_end(cur));
          cur.clear();
        } else {
          cur += c;
        }
      }
      const std::string orient = orienttok.substr(7);
      if (orient != "cw" && orient != "ccw") throw FormatError("bad orient '" + orient + "'");
      if (orient == "ccw") std::reverse(v.rotation.begin(), v.rotation.end());
      // Letters attach to the first corners of the normalized rotation.
      v.corner_letters.assign(v.rotation.size(), 0);
      for (size_t i = 0; i < letters.size(); ++i) {
        if (i >= v.corner_letters.size())
          throw FormatError("more letters than corners at vertex " + std::to_string(v.id));
        v.corner_letters[i] = letters[i];
      }
      vertices.push_back(std::move(v));
    } else {
      throw FormatError("unknown CGF line: " + line);
    }
  }

  // Slot cross-check against the written rotation order.
  for (const auto& c : claims) {
    bool found = false;
    for (const auto& v : vertices) {
      if (v.id != c.vertex) continue;
      found = true;
      // orient=ccw already reversed; slots refer to the stored order, so
      // only membership is checked here and exact incidence is validated
      // in make().
      bool member = false;
      for (const auto& e : v.rotation)
        if (e == ArcEnd{c.arc, c.head}) member = true;
      if (!member)
        throw FormatError("rotation/incidence mismatch: arc " + std::to_string(c.arc) +
                          (c.head ? "h" : "t") + " not in rotation of vertex " +
                          std::to_string(c.vertex));
    }
    if (!found) throw FormatError("arc references unknown vertex " + std::to_string(c.vertex));
  }

  try {
    return CurrentGraph::make(g, std::move(arcs), std::move(vertices));
  } catch (const StructureError& e) {
    throw FormatError(std::string("invalid CGF: ") + e.what());
  }
}

std::string StarPatternReport::str() const {
  static const char* names[4] = {"[x 1 y 12s-5 z]", "[6s+2 2 6s+3]", "[6s-2 6 6s-3]",
                                 "[6s-5 w]"};
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    os << "anchor " << (i + 1) << " " << names[i] << ": ";
    switch (anchors[i]) {
      case AnchorState::Absent: os << "absent"; break;
      case AnchorState::Present: os << "present"; break;
      case AnchorState::PresentReversed: os << "present reversed"; break;
    }
    os << "\n";
  }
  return os.str();
}

StarPatternReport check_star_pattern(const Log& log, int s) {
  const int n = 12 * s - 4;
  if (log.n != n)
    throw StructureError("log order " + std::to_string(log.n) + " is not 12s-4 for s=" +
                         std::to_string(s));
  auto num = [](int v) { return VertexLabel::number(v); };
  auto let = [](char c) { return VertexLabel::letter(c); };
  const std::vector<std::vector<VertexLabel>> anchors = {
      {let('x'), num(1), let('y'), num(n - 1), let('z')},
      {num(6 * s + 2), num(2), num(6 * s + 3)},
      {num(6 * s - 2), num(6), num(6 * s - 3)},
      {num(6 * s - 5), let('w')},
  };
  StarPatternReport report;
  for (size_t i = 0; i < anchors.size(); ++i) {
    if (cyclic_contains_run(log.entries, anchors[i])) {
      report.anchors[i] = AnchorState::Present;
    } else {
      std::vector<VertexLabel> rev(anchors[i].rbegin(), anchors[i].rend());
      if (cyclic_contains_run(log.entries, rev)) report.anchors[i] = AnchorState::PresentReversed;
    }
  }
  return report;
}

}  // namespace genusforge
