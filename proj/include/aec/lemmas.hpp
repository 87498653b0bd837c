#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aec/coloring.hpp"
#include "aec/graph.hpp"

namespace aec {

enum class LemmaStatus {
  holds,           // precondition met, conclusion checked and true
  violated,        // conclusion false; witness attached
  vacuous,         // precondition met but no configuration to check
  not_applicable,  // kappa-versus-Delta gate not met
  skipped,         // too large to check exhaustively
};

const char* to_string(LemmaStatus s);

struct LemmaEntry {
  std::string id;    // "L1" .. "L11", "L3A", "L6a", "F2", ...
  std::string name;  // lemma label, e.g. "DegreeSum"
  LemmaStatus status = LemmaStatus::vacuous;
  std::vector<Vertex> witness;
  std::string detail;

  bool applicable() const { return status != LemmaStatus::not_applicable; }
  bool holds() const { return status != LemmaStatus::violated; }
};

struct LemmaReport {
  int kappa = 0;
  int max_degree = 0;
  bool assume_minimal = false;
  std::vector<LemmaEntry> entries;

  bool all_hold() const;
  const LemmaEntry& at(const std::string& id) const;
};

struct AuditOptions {
  bool assume_minimal = false;
  /// Checks that enumerate or solve colorings of G - e (Good-3-vertex (a) and
  /// Fact 2) run only when m is at most this.
  int enumeration_edge_limit = 12;
  /// Cap on colorings visited by the Good-3-vertex (a) enumeration.
  std::uint64_t enumeration_visit_limit = 2'000'000;
};

/// Evaluates the structural lemmas on deletion-minimal graphs against `g`.
/// Each lemma checks its own kappa gate. Without assume_minimal the report is
/// informational: a violation just shows `g` cannot be kappa-deletion-minimal.
/// Fact 2 entries ("F2", "F2-W(uv)", "F2-W(vu)") are included only with
/// assume_minimal.
LemmaReport lemma_audit(const Graph& g, int kappa, const AuditOptions& options = {});

/// Fact 2 evaluated on one coloring of G - uv (given as a coloring of G with
/// uv uncolored). Degrees are taken in G.
struct Fact2Check {
  EdgeId edge = 0;
  bool no_valid_extension = false;
  int shared = 0;  // s = |U(u) ∩ U(v)|
  /// deg(u) + deg(v) == kappa + 2; only meaningful when shared == 0.
  bool degree_sum_matches = true;
  long long lhs_uv = 0;  // deg(u) + deg(v) + sum of deg(w), w in W(uv)
  long long lhs_vu = 0;  // same with W(vu)
  long long rhs = 0;     // kappa + 2s + 2
  bool reading_uv_holds() const { return lhs_uv >= rhs; }
  bool reading_vu_holds() const { return lhs_vu >= rhs; }
  bool holds() const { return no_valid_extension && degree_sum_matches; }
};

Fact2Check audit_fact2(const Graph& g, int kappa, EdgeId uv, const EdgeColoring& without_uv);

}  // namespace aec
