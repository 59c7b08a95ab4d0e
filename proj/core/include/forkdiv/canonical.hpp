#pragma once

#include <string>
#include <vector>

#include "forkdiv/graph.hpp"

namespace forkdiv {

/// Exactness cap for canonical labelling.
inline constexpr int kCanonicalCap = 16;

/// Canonical graph6 string of the relabelled-to-canonical graph. Two graphs
/// compare equal here exactly when they are isomorphic.
struct CanonicalForm {
  std::string bytes;
  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& o) const { return bytes < o.bytes; }
};

/// Isomorphism-invariant canonical form via iterated degree refinement and
/// individualisation, minimising the adjacency bit string over the explored
/// labelings. Throws CapabilityError above the cap.
CanonicalForm canonical_form(const Graph& g, int cap = kCanonicalCap);

/// The relabelling (old id -> new id) that produces the canonical form.
std::vector<int> canonical_labeling(const Graph& g, int cap = kCanonicalCap);

/// Brute-force isomorphism test for small graphs; the independent oracle for
/// canonical_form equality in tests. Quadratic-factorial, keep n small.
bool isomorphic_brute(const Graph& a, const Graph& b);

}  // namespace forkdiv
