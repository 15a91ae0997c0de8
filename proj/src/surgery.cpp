#include "genusforge/surgery.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace genusforge {

std::string Move::serialize() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Flip: os << "flip " << a.str() << " " << b.str(); break;
    case Kind::Absorb: os << "absorb " << a.str() << " " << b.str(); break;
    case Kind::Handle: os << "handle " << f1 << " " << f2; break;
    case Kind::Chord:
      os << "chord " << f1 << " " << a.str() << "@" << occ_a << " " << b.str() << "@" << occ_b;
      break;
  }
  return os.str();
}

Move Move::parse(const std::string& line) {
  std::istringstream is(line);
  std::string word;
  is >> word;
  Move m;
  auto parse_occ = [](const std::string& tok, VertexLabel& v, int& occ) {
    auto at = tok.find('@');
    if (at == std::string::npos) {
      v = VertexLabel::parse(tok);
      occ = 0;
    } else {
      v = VertexLabel::parse(tok.substr(0, at));
      occ = std::stoi(tok.substr(at + 1));
    }
  };
  if (word == "flip" || word == "absorb") {
    m.kind = word == "flip" ? Kind::Flip : Kind::Absorb;
    std::string ta, tb;
    is >> ta >> tb;
    m.a = VertexLabel::parse(ta);
    m.b = VertexLabel::parse(tb);
  } else if (word == "handle") {
    m.kind = Kind::Handle;
    is >> m.f1 >> m.f2;
  } else if (word == "chord") {
    m.kind = Kind::Chord;
    std::string ta, tb;
    is >> m.f1 >> ta >> tb;
    parse_occ(ta, m.a, m.occ_a);
    parse_occ(tb, m.b, m.occ_b);
  } else {
    throw FormatError("unknown move line: " + line);
  }
  return m;
}

int SurgeryPlan::handle_count() const {
  int c = 0;
  for (const auto& m : moves)
    if (m.kind == Move::Kind::Handle) ++c;
  return c;
}

int SurgeryPlan::net_edge_delta() const {
  int d = 0;
  for (const auto& m : moves) {
    if (m.kind == Move::Kind::Chord) ++d;
    if (m.kind == Move::Kind::Absorb) --d;
  }
  return d;
}

std::string SurgeryPlan::serialize() const {
  std::ostringstream os;
  for (const auto& m : moves) os << m.serialize() << "\n";
  return os.str();
}

SurgeryPlan SurgeryPlan::parse(const std::string& text) {
  SurgeryPlan plan;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    plan.moves.push_back(Move::parse(line));
  }
  return plan;
}

RotationSystem flip_edge(const RotationSystem& rs, VertexLabel a, VertexLabel b) {
  if (!rs.has_edge(a, b)) throw StructureError("flip: no edge " + a.str() + "-" + b.str());
  const VertexLabel c = rs.succ(b, a);  // apex of the face through a->b
  const VertexLabel d = rs.succ(a, b);  // apex of the face through b->a
  if (rs.succ(c, b) != a || rs.pred(c, a) != b)
    throw StructureError("flip: face at " + a.str() + "->" + b.str() + " is not a triangle");
  if (rs.succ(d, a) != b || rs.pred(d, b) != a)
    throw StructureError("flip: face at " + b.str() + "->" + a.str() + " is not a triangle");
  if (c == d) throw StructureError("flip: degenerate quadrilateral at " + a.str() + "-" + b.str());
  if (rs.has_edge(c, d))
    throw StructureError("flip: diagonal " + c.str() + "-" + d.str() + " already present");

  RotationSystem out = rs;
  out.delete_edge(a, b);
  // rot(c) ran ... b a ...; insert d between. rot(d) ran ... a b ...
  out.insert_edge(c, b, d, a);
  return out;
}

std::string face_name(const std::vector<DirectedEdge>& face) {
  std::vector<VertexLabel> vs;
  vs.reserve(face.size());
  for (const auto& e : face) vs.push_back(e.first);
  vs = canonical_rotation(vs);
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += vs[i].str();
  }
  return out;
}

namespace {

std::string cycle_name(const BoundaryCycle& cyc) {
  std::vector<VertexLabel> vs;
  vs.reserve(cyc.size());
  for (const auto& c : cyc) vs.push_back(c.v);
  vs = canonical_rotation(vs);
  std::string out;
  for (size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += vs[i].str();
  }
  return out;
}

BoundaryCycle corners_of_face(const std::vector<DirectedEdge>& face) {
  BoundaryCycle cyc;
  const size_t p = face.size();
  for (size_t k = 0; k < p; ++k)
    cyc.push_back({face[k].second, face[k].first, face[(k + 1) % p].second});
  return cyc;
}

}  // namespace

long long SurgeryState::reported_face_count() const {
  const long long traced = static_cast<long long>(trace_faces(rs_).face_count());
  if (region_.empty()) return traced;
  return traced - static_cast<long long>(region_.size()) + 1;
}

int SurgeryState::committed_genus() const {
  const long long traced = static_cast<long long>(trace_faces(rs_).face_count());
  const long long disks = traced - static_cast<long long>(region_.size());
  const long long chi = rs_.vertex_count() - rs_.edge_count() + disks;
  return static_cast<int>((2 - chi) / 2);
}

BoundaryCycle SurgeryState::face_cycle_by_name(const std::string& name) const {
  for (const auto& f : trace_faces(rs_).faces)
    if (face_name(f) == name) return corners_of_face(f);
  throw StructureError("no face named " + name);
}

void SurgeryState::apply(const Move& m) {
  switch (m.kind) {
    case Move::Kind::Flip: flip(m.a, m.b); break;
    case Move::Kind::Absorb: absorb(m.a, m.b); break;
    case Move::Kind::Handle: merge_faces_with_handle(m.f1, m.f2); break;
    case Move::Kind::Chord: chord(m.a, m.occ_a, m.b, m.occ_b); break;
  }
}

void SurgeryState::flip(VertexLabel a, VertexLabel b) {
  if (!region_.empty()) throw StructureError("flip with an open region");
  rs_ = flip_edge(rs_, a, b);
  Move m;
  m.kind = Move::Kind::Flip;
  m.a = a;
  m.b = b;
  applied_.push_back(m);
}

void SurgeryState::absorb(VertexLabel a, VertexLabel b) {
  if (!region_.empty()) throw StructureError("absorb with an open region");
  if (!rs_.has_edge(a, b)) throw StructureError("absorb: no edge " + a.str() + "-" + b.str());
  // The two sides of (a,b) must be distinct faces, or deleting the edge
  // would pinch the surface.
  const auto faces = trace_faces(rs_).faces;
  const std::vector<DirectedEdge>* fab = nullptr;
  const std::vector<DirectedEdge>* fba = nullptr;
  for (const auto& f : faces)
    for (const auto& e : f) {
      if (e == DirectedEdge{a, b}) fab = &f;
      if (e == DirectedEdge{b, a}) fba = &f;
    }
  if (fab == fba) throw StructureError("absorb: both sides of the edge lie on one face");
  rs_.delete_edge(a, b);
  Move m;
  m.kind = Move::Kind::Absorb;
  m.a = a;
  m.b = b;
  applied_.push_back(m);
}

void SurgeryState::merge_faces_with_handle(const std::string& f1, const std::string& f2) {
  if (!region_.empty()) throw StructureError("handle with an open region");
  if (f1 == f2) throw StructureError("handle must join two distinct faces");
  region_.push_back(face_cycle_by_name(f1));
  region_.push_back(face_cycle_by_name(f2));
  handle_pending_ = true;
  Move m;
  m.kind = Move::Kind::Handle;
  m.f1 = f1;
  m.f2 = f2;
  applied_.push_back(m);
}

std::optional<std::pair<int, int>> SurgeryState::find_corner(VertexLabel v,
                                                             int occurrence) const {
  int seen = 0;
  for (size_t ci = 0; ci < region_.size(); ++ci)
    for (size_t k = 0; k < region_[ci].size(); ++k)
      if (region_[ci][k].v == v) {
        if (seen == occurrence) return std::make_pair(static_cast<int>(ci), static_cast<int>(k));
        ++seen;
      }
  return std::nullopt;
}

void SurgeryState::chord(VertexLabel a, int occ_a, VertexLabel b, int occ_b) {
  if (region_.empty()) throw StructureError("chord without a region");
  if (a == b) throw StructureError("chord endpoints coincide");
  if (rs_.has_edge(a, b))
    throw StructureError("chord " + a.str() + "-" + b.str() + " already an edge");
  auto ca = find_corner(a, occ_a);
  auto cb = find_corner(b, occ_b);
  if (!ca || !cb) throw StructureError("chord corner not found");
  const auto [cia, pa] = *ca;
  const auto [cib, pb] = *cb;

  const std::string named = cycle_name(region_[cia]);

  if (cia == cib) {
    if (handle_pending_)
      throw StructureError("first chord after a handle must cross between the joined faces");
    BoundaryCycle cyc = region_[cia];
    const int L = static_cast<int>(cyc.size());
    const RegionCorner A = cyc[pa];
    const RegionCorner B = cyc[pb];
    rs_.insert_edge(a, A.in, b, B.in);
    BoundaryCycle f1{{a, A.in, b}, {b, a, B.out}};
    for (int k = (pb + 1) % L; k != pa; k = (k + 1) % L) f1.push_back(cyc[k]);
    BoundaryCycle f2{{b, B.in, a}, {a, b, A.out}};
    for (int k = (pa + 1) % L; k != pb; k = (k + 1) % L) f2.push_back(cyc[k]);
    region_.erase(region_.begin() + cia);
    if (f2.size() > 3) region_.insert(region_.begin() + cia, f2);
    if (f1.size() > 3) region_.insert(region_.begin() + cia, f1);
  } else {
    if (!handle_pending_)
      throw StructureError("chord spans two faces with no pending handle");
    const BoundaryCycle A = region_[cia];
    const BoundaryCycle B = region_[cib];
    const RegionCorner CA = A[pa];
    const RegionCorner CB = B[pb];
    rs_.insert_edge(a, CA.in, b, CB.in);
    BoundaryCycle merged{{a, CA.in, b}, {b, a, CB.out}};
    const int LB = static_cast<int>(B.size());
    for (int k = (pb + 1) % LB; k != pb; k = (k + 1) % LB) merged.push_back(B[k]);
    merged.push_back({b, CB.in, a});
    merged.push_back({a, b, CA.out});
    const int LA = static_cast<int>(A.size());
    for (int k = (pa + 1) % LA; k != pa; k = (k + 1) % LA) merged.push_back(A[k]);
    region_.clear();
    if (merged.size() > 3) region_.push_back(merged);
    handle_pending_ = false;
  }

  Move m;
  m.kind = Move::Kind::Chord;
  m.f1 = named;
  m.a = a;
  m.occ_a = occ_a;
  m.b = b;
  m.occ_b = occ_b;
  applied_.push_back(m);
}

namespace {

using EdgePair = std::pair<VertexLabel, VertexLabel>;

bool take_pair(std::vector<EdgePair>& pool, VertexLabel a, VertexLabel b) {
  const EdgePair want = ordered_pair(a, b);
  auto it = std::find(pool.begin(), pool.end(), want);
  if (it == pool.end()) return false;
  pool.erase(it);
  return true;
}

int occurrence_of(const SurgeryState& st, int cycle, int pos) {
  const auto& region = st.region();
  const VertexLabel v = region[cycle][pos].v;
  int occ = 0;
  for (int ci = 0; ci <= cycle; ++ci) {
    const int limit = ci == cycle ? pos : static_cast<int>(region[ci].size());
    for (int k = 0; k < limit; ++k)
      if (region[ci][k].v == v) ++occ;
  }
  return occ;
}

bool triangulate_rec(SurgeryState& st, std::vector<EdgePair>& pool,
                     std::vector<Move>& chords, long long* budget) {
  if ((*budget)-- <= 0) return false;
  const auto& region = st.region();
  if (region.empty()) return pool.empty();

  if (st.handle_pending()) {
    // The crossing chord comes first; everything after is polygon work.
    const auto A = region[0];
    const auto B = region[1];
    for (size_t i = 0; i < A.size(); ++i) {
      for (size_t j = 0; j < B.size(); ++j) {
        const VertexLabel u = A[i].v, v = B[j].v;
        if (u == v || st.system().has_edge(u, v)) continue;
        std::vector<EdgePair> pool2 = pool;
        if (!take_pair(pool2, u, v)) continue;
        SurgeryState copy = st;
        const int occ_u = occurrence_of(copy, 0, static_cast<int>(i));
        const int occ_v = occurrence_of(copy, 1, static_cast<int>(j));
        copy.chord(u, occ_u, v, occ_v);
        std::vector<Move> sub{copy.applied().back()};
        if (triangulate_rec(copy, pool2, sub, budget)) {
          st = std::move(copy);
          pool = std::move(pool2);
          for (auto& m : sub) chords.push_back(std::move(m));
          return true;
        }
      }
    }
    return false;
  }

  // Fix the triangle over the boundary edge between corners 0 and 1 of the
  // first open cycle; its apex is some corner k. This enumerates each
  // triangulation of the polygon exactly once.
  const BoundaryCycle cyc = region[0];
  const int L = static_cast<int>(cyc.size());
  for (int k = 2; k < L; ++k) {
    const VertexLabel v0 = cyc[0].v, v1 = cyc[1].v, vk = cyc[k].v;
    const bool need_a = k != 2;      // chord (v1, vk)
    const bool need_b = k != L - 1;  // chord (vk, v0)
    if (need_a && (v1 == vk || st.system().has_edge(v1, vk))) continue;
    if (need_b && (vk == v0 || st.system().has_edge(vk, v0))) continue;
    if (need_a && need_b && ordered_pair(v1, vk) == ordered_pair(vk, v0)) continue;
    std::vector<EdgePair> pool2 = pool;
    if (need_a && !take_pair(pool2, v1, vk)) continue;
    if (need_b && !take_pair(pool2, vk, v0)) continue;

    SurgeryState copy = st;
    std::vector<Move> sub;
    bool ok = true;
    if (need_a) {
      const int occ1 = occurrence_of(copy, 0, 1);
      const int occk = occurrence_of(copy, 0, k);
      try {
        copy.chord(v1, occ1, vk, occk);
        sub.push_back(copy.applied().back());
      } catch (const StructureError&) {
        ok = false;
      }
    }
    if (ok && need_b) {
      // After the first chord the piece containing corner 0 sits first;
      // locate the two corners afresh by their (in,out) context.
      bool placed = false;
      const auto& reg = copy.region();
      for (size_t ci = 0; ci < reg.size() && !placed; ++ci)
        for (size_t pi = 0; pi < reg[ci].size() && !placed; ++pi) {
          if (!(reg[ci][pi].v == vk)) continue;
          for (size_t qi = 0; qi < reg[ci].size() && !placed; ++qi) {
            if (!(reg[ci][qi].v == v0) || qi == pi) continue;
            // Must be the corner pair forming the apex triangle: vk's
            // corner leads the piece whose boundary walks ... vk -> v0? The
            // chord is valid wherever both corners lie on one cycle and the
            // edge is new; insert at the first legal spot.
            try {
              SurgeryState trial = copy;
              trial.chord(vk, occurrence_of(copy, static_cast<int>(ci), static_cast<int>(pi)),
                          v0, occurrence_of(copy, static_cast<int>(ci), static_cast<int>(qi)));
              copy = std::move(trial);
              sub.push_back(copy.applied().back());
              placed = true;
            } catch (const StructureError&) {
            }
          }
        }
      ok = placed;
    }
    if (!ok) continue;
    if (triangulate_rec(copy, pool2, sub, budget)) {
      st = std::move(copy);
      pool = std::move(pool2);
      for (auto& m : sub) chords.push_back(std::move(m));
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<Move>> triangulate_region(SurgeryState& state,
                                                    std::vector<EdgePair> allowed_edges,
                                                    long long* state_budget) {
  std::vector<Move> chords;
  long long local = state_budget ? *state_budget : 1'000'000;
  const bool ok = triangulate_rec(state, allowed_edges, chords, &local);
  if (state_budget) *state_budget = local;
  if (!ok) return std::nullopt;
  return chords;
}

RotationSystem apply_plan(const RotationSystem& rs, const SurgeryPlan& plan) {
  SurgeryState st(rs);
  for (const auto& m : plan.moves) st.apply(m);
  if (!st.region().empty()) throw StructureError("plan leaves an open region");
  return st.system();
}

PlanResult plan_surgery(const RotationSystem& rs, int s, const SurgeryConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  SurgeryStats stats;
  const int n = 12 * s - 4;
  if (rs.group_order() != n) throw StructureError("system order is not 12s-4");
  for (char c : {'w', 'x', 'y', 'z'})
    if (!rs.has_vertex(VertexLabel::letter(c)))
      throw StructureError(std::string("missing letter vertex '") + c + "'");
  if (!is_triangulation(rs)) throw StructureError("surgery input is not a triangulation");
  const int genus_before = euler_genus(rs);

  const VertexLabel zero = VertexLabel::number(0);
  const VertexLabel w = VertexLabel::letter('w');
  const std::vector<char> letters = {'w', 'x', 'y', 'z'};

  // Chord pool: the six letter pairs plus whatever the absorbs delete.
  std::vector<EdgePair> letter_pairs;
  for (size_t i = 0; i < letters.size(); ++i)
    for (size_t j = i + 1; j < letters.size(); ++j)
      letter_pairs.push_back(
          ordered_pair(VertexLabel::letter(letters[i]), VertexLabel::letter(letters[j])));

  // Absorb sets: the fan at vertex 0 spanning the lettered anchors. The
  // primary set opens the hexagon 0,x,1,y,(n-1),z; later sets widen it.
  const std::vector<VertexLabel> fan = {VertexLabel::number(1), VertexLabel::letter('y'),
                                        VertexLabel::number(n - 1), VertexLabel::letter('x'),
                                        VertexLabel::letter('z')};
  std::vector<std::vector<VertexLabel>> absorb_sets;
  for (int extra = 0; extra <= 2 && 3 + extra <= config.max_absorbs; ++extra) {
    if (extra == 0) absorb_sets.push_back({fan[0], fan[1], fan[2]});
    if (extra == 1) {
      absorb_sets.push_back({fan[0], fan[1], fan[2], fan[3]});
      absorb_sets.push_back({fan[0], fan[1], fan[2], fan[4]});
    }
    if (extra == 2) absorb_sets.push_back({fan[0], fan[1], fan[2], fan[3], fan[4]});
  }

  // Handle partners: faces containing w, those incident to vertex 0 first.
  std::vector<std::string> w_faces;
  {
    const auto faces = trace_faces(rs).faces;
    std::vector<std::pair<int, std::string>> ranked;
    for (const auto& f : faces) {
      bool has_w = false, has_zero = false;
      for (const auto& e : f) {
        if (e.first == w) has_w = true;
        if (e.first == zero) has_zero = true;
      }
      if (has_w) ranked.emplace_back(has_zero ? 0 : 1, face_name(f));
    }
    std::sort(ranked.begin(), ranked.end());
    for (auto& [rank, name] : ranked) {
      if (rank > 0 && static_cast<int>(w_faces.size()) >= 2 + 2 * config.radius) break;
      w_faces.push_back(name);
    }
  }

  long long budget = config.budget_states;
  for (const auto& absorbs : absorb_sets) {
    for (const auto& wf : w_faces) {
      const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                               std::chrono::steady_clock::now() - t0)
                               .count();
      if (budget <= 0 || elapsed > config.budget_seconds) {
        stats.budget_hit = true;
        throw BudgetExhausted("surgery planner budget exhausted after " +
                              std::to_string(stats.merges_tried) + " merge candidates and " +
                              std::to_string(stats.states) + " states");
      }
      ++stats.merges_tried;
      try {
        SurgeryState st(rs);
        std::vector<EdgePair> pool = letter_pairs;
        for (const auto& t : absorbs) {
          st.absorb(zero, t);
          pool.push_back(ordered_pair(zero, t));
        }
        // The absorbs must have opened exactly one non-triangular face.
        std::string open_name;
        int open_faces = 0;
        for (const auto& f : trace_faces(st.system()).faces)
          if (f.size() > 3) {
            ++open_faces;
            open_name = face_name(f);
          }
        if (open_faces != 1 || open_name == wf) continue;
        st.merge_faces_with_handle(open_name, wf);

        const long long before = budget;
        auto chords = triangulate_region(st, pool, &budget);
        stats.states += before - budget;
        if (!chords) continue;

        Certificate cert = verify_final(st.system(), s);
        if (!cert.pass) continue;
        if (euler_genus(st.system()) != genus_before + 1)
          throw StructureError("genus ledger violated by a verified plan");

        PlanResult result;
        result.plan.moves = st.applied();
        if (result.plan.handle_count() != 1 || result.plan.net_edge_delta() != 6)
          throw StructureError("plan ledger violated: handles=" +
                               std::to_string(result.plan.handle_count()) +
                               " net_edges=" + std::to_string(result.plan.net_edge_delta()));
        result.final_system = st.system();
        result.certificate = cert;
        result.stats = stats;
        return result;
      } catch (const StructureError&) {
        continue;  // candidate not applicable; try the next one
      }
    }
  }
  throw BudgetExhausted("surgery planner found no plan (" + std::to_string(stats.merges_tried) +
                        " merge candidates, " + std::to_string(stats.states) + " states)");
}

}  // namespace genusforge
