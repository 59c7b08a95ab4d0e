#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "forkdiv/canonical.hpp"
#include "forkdiv/graph.hpp"
#include "forkdiv/holes.hpp"

namespace forkdiv::divisibility {

/// Exact-search cap for a single perfect division.
inline constexpr int kDivisionCap = 12;
/// Full hereditary certification cap.
inline constexpr int kPdCap = 10;
/// Brute-mode audit rate for perfection checks inside the search, percent.
inline constexpr int kAuditRatePercent = 1;

/// A perfect division: V = A + B with G[A] perfect and omega(G[B]) < omega(G).
struct DivisionCertificate {
  VertexSet a;
  VertexSet b;
  patterns::PerfectionMode a_perfection_mode = patterns::PerfectionMode::Spgt;
  bool a_perfection_audited = false;  // the brute spot-audit also ran on A
  int omega_g = 0;
  int omega_b = 0;
};

/// JSON object {a, b, omega_g, omega_b, perfection_mode, witness}.
std::string certificate_to_json(const DivisionCertificate& cert);

enum class PDState { PD, NPD, Unknown };

struct PDStatus {
  PDState state = PDState::Unknown;
  /// For NPD: the minimal failing induced subgraph found (canonical form).
  std::optional<CanonicalForm> witness;
};

/// Thread-safe memo store keyed by canonical form. Values are deterministic,
/// so duplicate computation is benign and last-write-wins insertion is safe.
class MemoCache {
 public:
  std::optional<bool> lookup(const std::string& key) const;
  void insert(const std::string& key, bool pd);
  std::size_t size() const;
  /// Entries inserted since the previous drain, in insertion order.
  std::vector<std::pair<std::string, bool>> drain_new();
  std::vector<std::pair<std::string, bool>> all() const;

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, bool> map_;
  std::vector<std::pair<std::string, bool>> journal_;
};

/// Deterministic search for a perfect division:
///   0. perfect graphs take (V, empty);
///   1. fast path: the first v with G[M(v)] perfect gives ({v} + M(v), N(v));
///   2. exact search over candidate A sets hitting every maximum clique,
///      largest first.
/// Absence is returned only after the search space is exhausted.
std::optional<DivisionCertificate> find_perfect_division(const Graph& g,
                                                         int cap = kDivisionCap);

/// Fast-path certificate at a specific vertex, when G[M(v)] is perfect.
std::optional<DivisionCertificate> fast_path_division(const Graph& g, int v);

/// PD iff g and every induced subgraph admit a perfect division; hereditary
/// recursion memoised by canonical form. Throws CapabilityError above cap.
PDStatus is_perfectly_divisible(const Graph& g, MemoCache& cache,
                                int cap = kPdCap);

struct MinimalityResult {
  bool minimal_non_pd = false;
  /// For non-minimal graphs, exactly one of these certifies why.
  std::optional<DivisionCertificate> division;
  std::optional<CanonicalForm> non_pd_subgraph;
};

/// True iff g has no perfect division while every proper induced subgraph is
/// PD. The false-certificate discharges Tier-2 lemma violations.
MinimalityResult is_minimal_non_pd(const Graph& g, MemoCache& cache,
                                   int cap = kPdCap);

struct ColoringCertificate {
  std::vector<int> colors;
  std::vector<DivisionCertificate> levels;  // in graph vertex ids
  int omega = 0;
  int bound = 0;        // omega(omega+1)/2
  int colors_used = 0;
};

struct ColoringOutcome {
  std::optional<ColoringCertificate> certificate;
  /// When a level had no perfect division: the stuck induced subgraph.
  VertexSet stuck;
};

/// Recursive colouring through perfect divisions: each level colours G[A]
/// exactly and recurses on B with a fresh palette, omega strictly dropping,
/// so at most omega+(omega-1)+...+1 colours are used in total.
ColoringOutcome color_via_perfect_division(const Graph& g, int cap = kDivisionCap);

/// Re-checks a certificate from scratch: exact partition, perfection of
/// G[A] (brute mode too when within cap), exact omega values.
bool validate_certificate(const Graph& g, const DivisionCertificate& cert,
                          bool brute_check = true);

}  // namespace forkdiv::divisibility
