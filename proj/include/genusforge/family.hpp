#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "genusforge/certificate.hpp"
#include "genusforge/current_graph.hpp"
#include "genusforge/log.hpp"
#include "genusforge/util.hpp"

namespace genusforge {

/// Built-in data: the two appendix row tables (s=1, s=2) and the s=3 log.
const std::vector<std::vector<int>>& builtin_index4_rows(int table);
Log builtin_log_s3();

/// Dispatch used by the CLI: s in {1,2,3}, errors otherwise.
struct BuiltinData {
  int s = 0;
  std::optional<Log> log;                            // s == 3
  std::vector<std::vector<int>> index4_rows;         // s in {1,2}
};
BuiltinData builtin(int s);

/// The variable-length sub-gadget of the family's current graph: rung arcs
/// whose simultaneous endpoint-rotation flips preserve one-facedness.
struct LadderShape {
  int rung_count = 0;
  std::vector<int> rung_currents;     // ascending
  int arithmetic_start = 0;           // 0 when the rungs are not arithmetic
  int arithmetic_step = 0;
  std::string rail_descriptor;
  std::vector<int> rotation_vector;   // one bit per rung; base candidate = all zero
};

struct SearchStats {
  long long log_states = 0;       // nodes explored by the log search
  long long logs_found = 0;       // closed cyclic logs
  long long census_pass = 0;      // reconstructed with principles (C1)-(C7)
  long long star_pass = 0;        // (*) anchors present
  long long derived_pass = 0;     // derived to a K_{12s}-K_4 triangulation
  long long surgery_pass = 0;     // surgered to a K_{12s} triangulation
  std::string str() const;
};

struct FamilyCandidate {
  int s = 0;
  Log log;
  CurrentGraph graph;
  LadderShape ladder;
  std::string fixed_part_cgf;  // graph minus the detected rungs
  Certificate derived_cert;    // K_{12s}-K_4 triangulation
  Certificate final_cert;      // K_{12s} triangulation after surgery
};

struct FamilyConfig {
  long long budget_states = 50'000'000;
  int budget_seconds = 600;
  int jobs = 1;
  std::string cache_dir;       // empty = no cache; GENUSFORGE_CACHE overrides
  bool use_cache = true;
  bool recheck_cache = false;
  int max_enumerated_rungs = 12;

  uint64_t structural_hash() const;
};

/// Reconstructs the index-1 family member for s >= 4 by a constrained
/// search over logs anchored at the (*) pattern, then verifies it through
/// derivation and surgery. Fails with staged statistics when the budget
/// runs out. s = 3 is refused (use builtin(3)); the generalized pattern has
/// no one-face embedding there.
FamilyCandidate search_family(int s, const FamilyConfig& config = FamilyConfig());

struct FamilySearchFailure : BudgetExhausted {
  SearchStats stats;
  FamilySearchFailure(const std::string& what, SearchStats st)
      : BudgetExhausted(what), stats(std::move(st)) {}
};

/// Splices a rung ladder into a fixed part. The fixed part's stub arcs (two
/// per rail) are reconnected through the rungs; current classes must
/// partition.
CurrentGraph assemble(const CurrentGraph& fixed_part, const LadderShape& ladder, int s);

/// All 2^m rotation-vector variants of the candidate's ladder, re-verified
/// to have one face. Identical logs are reported, never dropped.
struct VariantEnumeration {
  std::vector<Log> logs;
  std::vector<std::vector<int>> rotation_vectors;
  std::vector<std::pair<int, int>> duplicate_pairs;
};
VariantEnumeration enumerate_variants(const FamilyCandidate& candidate);

/// classes = isomorphism classes of the inputs; bound = 2^m / (2*12s*(12s-1)).
struct CountBound {
  int classes = 0;
  Rational bound;
};
CountBound count_lower_bound(int s, int rung_count,
                             const std::vector<RotationSystem>& triangulations);

}  // namespace genusforge
