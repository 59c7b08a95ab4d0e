#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "forkdiv/decomp.hpp"
#include "forkdiv/graph.hpp"

namespace forkdiv::lemmas {

inline constexpr std::string_view kLedgerVersion = "1";

enum class Scope { Context, Graph };
enum class GateStatus { Hold, Fail };
enum class ConclusionStatus { Holds, Violated, NotEvaluated };
enum class Resolution { NotNeeded, Certified, Unresolved };

/// Ledger row: a structural statement checked around odd-hole contexts.
/// Tier 1 statements are gated only on computable hypotheses (fork-freeness
/// and explicit nonemptiness side conditions) and must always hold. Tier 2
/// conclusions may fail on ordinary graphs; each failure must then be
/// discharged by a certificate that the graph is not a minimal candidate
/// (a perfect division, or a proper induced subgraph with no division).
struct LemmaInfo {
  std::string_view id;
  int tier;
  Scope scope;
  std::vector<std::string_view> gates;
  std::string_view statement;
};

const std::vector<LemmaInfo>& ledger();
const LemmaInfo* ledger_find(std::string_view id);

/// Per-graph gate facts, computed once and shared across contexts.
struct GraphFacts {
  bool fork_free = false;
  bool connected = false;
  bool p6k1_free = false;
  bool claw_free = false;
  int omega = 0;
};
GraphFacts compute_graph_facts(const Graph& g);

struct LemmaVerdict {
  std::string id;
  int tier = 0;
  GateStatus gate_status = GateStatus::Hold;
  std::string failed_gate;
  ConclusionStatus conclusion = ConclusionStatus::NotEvaluated;
  std::vector<int> violating;  // vertex tuple behind a violation
  std::string detail;
  int base = -1;               // context identification; hole empty for
  std::vector<int> hole;       // graph-scope lemmas
  Resolution resolution = Resolution::NotNeeded;
  std::string resolution_detail;
};

/// Evaluates one ledger entry. Context-scope entries read ctx/d; graph-scope
/// entries enumerate what they need from g and ignore ctx/d. Throws
/// DomainError for unknown ids.
LemmaVerdict check_lemma(const Graph& g, const decomp::HoleContext& ctx,
                         const decomp::Decomposition& d, std::string_view id,
                         const GraphFacts* facts = nullptr);

/// Whole-ledger sweep: context-scope entries on every enumerated context,
/// graph-scope entries once. tier 0 runs both tiers.
std::vector<LemmaVerdict> check_graph(const Graph& g, int tier = 0,
                                      int context_cap = decomp::kContextCap);

}  // namespace forkdiv::lemmas
