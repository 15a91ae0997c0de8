#include "genusforge/certificate.hpp"

#include <sstream>

#include "genusforge/util.hpp"

namespace genusforge {

std::string Certificate::serialize(const std::string& name) const {
  std::ostringstream os;
  os << "certificate=" << name << "\n";
  os << "pass=" << (pass ? 1 : 0) << "\n";
  os << "v=" << V << "\n";
  os << "e=" << E << "\n";
  os << "f=" << F << "\n";
  os << "genus=" << genus << "\n";
  os << "hash=" << hex64(hash) << "\n";
  for (const auto& f : failures) os << "failure=" << f << "\n";
  return os.str();
}

std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

namespace {

Certificate verify_common(const RotationSystem& rs, int s, bool minus_k4) {
  Certificate cert;
  cert.V = rs.vertex_count();
  cert.E = rs.edge_count();
  cert.hash = rs.content_hash();
  const int n = 12 * s;

  const auto violations = check_rule_r_star(rs);
  if (!violations.empty())
    cert.failures.push_back("rule R* fails at " + std::to_string(violations.size()) +
                            " directed edges, first " +
                            to_string({violations[0].i, violations[0].k}));

  std::set<std::pair<VertexLabel, VertexLabel>> missing;
  if (minus_k4) {
    const std::vector<char> ls = {'w', 'x', 'y', 'z'};
    for (size_t i = 0; i < ls.size(); ++i)
      for (size_t j = i + 1; j < ls.size(); ++j)
        missing.insert(ordered_pair(VertexLabel::letter(ls[i]), VertexLabel::letter(ls[j])));
  }
  if (!check_complete_minus(rs, n, missing))
    cert.failures.push_back(minus_k4 ? "signature is not K_" + std::to_string(n) + " minus K_4"
                                     : "signature is not K_" + std::to_string(n));

  try {
    cert.F = static_cast<long long>(trace_faces(rs).face_count());
    cert.genus = euler_genus(rs);
  } catch (const StructureError& e) {
    cert.failures.push_back(e.what());
  }
  const int want = (4 * s - 1) * (3 * s - 1) - (minus_k4 ? 1 : 0);
  if (cert.genus != want)
    cert.failures.push_back("genus " + std::to_string(cert.genus) + ", expected " +
                            std::to_string(want));
  cert.pass = cert.failures.empty();
  return cert;
}

}  // namespace

Certificate verify_complete_triangulation(const RotationSystem& rs, int s) {
  return verify_common(rs, s, false);
}

Certificate verify_derived_triangulation(const RotationSystem& rs, int s) {
  return verify_common(rs, s, true);
}

}  // namespace genusforge
