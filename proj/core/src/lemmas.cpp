#include "forkdiv/lemmas.hpp"

#include <algorithm>

#include "forkdiv/clique.hpp"
#include "forkdiv/holes.hpp"
#include "forkdiv/patterns.hpp"

namespace forkdiv::lemmas {

namespace {

const std::vector<LemmaInfo>& ledger_rows() {
  static const std::vector<LemmaInfo> rows = {
      // Tier 1: hold on every fork-free graph, modulo the listed side gates.
      {"eq1-ui-clique", 1, Scope::Context, {"fork-free"},
       "each U_i(C) is a clique, and distinct parts U_i(C), U_j(C) are disjoint"},
      {"u-mc-clique", 1, Scope::Context, {"fork-free"},
       "for every u in U(C), N(u) intersect M(C) is a clique"},
      {"u-prime-component-pure", 1, Scope::Context, {"fork-free"},
       "every u' in U'(C) is complete or anticomplete to each component of G[M(C)]"},
      {"u-prime-complete", 1, Scope::Context, {"fork-free"},
       "U'(C) is complete to U(C) union V(C) union Y'(C) union Z(C)"},
      {"z-prime-anticomplete-u", 1, Scope::Context, {"fork-free"},
       "Z'(C) is anticomplete to U(C)"},
      {"z-prime-clique", 1, Scope::Context, {"fork-free", "u-nonempty"},
       "Z'(C) is a clique"},
      {"z-consecutive-pair", 1, Scope::Context, {"fork-free"},
       "every z in Z(C) is adjacent to two consecutive hole vertices"},
      {"t-complete-ncu", 1, Scope::Context, {"fork-free"},
       "for u in U(C) and y in N(u) intersect M(C), the off-hole neighbours of u "
       "non-adjacent to y are complete to N(u) intersect V(C)"},
      {"z-complete-ui", 1, Scope::Context, {"fork-free"},
       "every z in Z(C) with a neighbour in U_i(C) is complete to U_i(C)"},
      {"z-hole-neighborhood-shape", 1, Scope::Context, {"fork-free"},
       "for z in Z(C) meeting U_i(C): the hole neighbourhood of z is the pair of "
       "U_i(C), alone or joined with one more consecutive pair"},
      {"z-u-two-parts", 1, Scope::Context, {"fork-free"},
       "for z in Z(C) meeting U(C): N(z) intersect U(C) lies in at most two parts"},
      {"adjacent-u-same-mc-nbrs", 1, Scope::Context, {"fork-free"},
       "adjacent vertices of distinct parts U_i(C), U_j(C) have equal "
       "neighbourhoods in M(C)"},

      // Tier 2: may fail off the minimal-candidate locus; every failure must
      // be discharged by a non-minimality certificate.
      {"no-homogeneous-set", 2, Scope::Graph, {},
       "the graph has no homogeneous set"},
      {"mv-antihole-c5-only", 2, Scope::Graph, {"connected", "fork-free"},
       "for every vertex v, G[M(v)] contains no odd antihole of length 7 or more"},
      {"u-nonempty", 2, Scope::Context, {"fork-free"},
       "N(M(C)) is not complete to V(C): U(C) is nonempty"},
      {"mc-beyond-yprime-stable", 2, Scope::Context, {"fork-free"},
       "M(C) minus Y'(C) is a stable set whose members have all neighbours in U'(C)"},
      {"omega-W-drop", 2, Scope::Context, {"fork-free"},
       "for every nonempty U_i(C): omega(N(U_i(C) union M(C))) < omega(G)"},
      {"mixed-balloon-exists", 2, Scope::Graph, {"fork-free"},
       "some context has u in U(C) mixed on a component of G[M(C)]"},
      {"parachute-mc-stable", 2, Scope::Context, {"fork-free", "u-prime-nonempty"},
       "M(C) is a stable set when the hole carries an odd parachute"},
      {"odd-parachute-free", 2, Scope::Graph, {"fork-free"},
       "no odd hole C has U'(C) nonempty: there is no induced odd parachute"},
      {"nmc-consecutive-only", 2, Scope::Context, {"fork-free"},
       "every member of N(M(C)) has exactly two consecutive hole neighbours"},
      {"claw-center-mv-perfect", 2, Scope::Graph, {"fork-free"},
       "for every claw center v, G[M(v)] is perfect"},
      {"claw-free", 2, Scope::Graph, {"fork-free"},
       "the graph contains no induced claw"},
      {"mc-clique-p6k1", 2, Scope::Context, {"fork-free", "p6k1-free"},
       "M(C) is a clique"},
  };
  return rows;
}

struct ContextData {
  decomp::HoleContext ctx;
  decomp::Decomposition d;
};

std::vector<ContextData> gather_contexts(const Graph& g, int cap) {
  std::vector<ContextData> out;
  for (auto& ctx : decomp::enumerate_hole_contexts(g, cap)) {
    decomp::Decomposition d = decomp::decompose_hole_neighborhood(g, ctx);
    out.push_back({std::move(ctx), std::move(d)});
  }
  return out;
}

void conclude(LemmaVerdict& v, bool holds, std::vector<int> violating = {},
              std::string detail = {}) {
  v.conclusion = holds ? ConclusionStatus::Holds : ConclusionStatus::Violated;
  v.violating = std::move(violating);
  v.detail = std::move(detail);
  if (v.conclusion == ConclusionStatus::Violated && v.tier == 2)
    v.resolution = Resolution::Unresolved;
}

// Finds a non-adjacent pair inside s, or nullopt when s is a clique.
std::optional<std::pair<int, int>> nonadjacent_pair(const Graph& g, VertexSet s) {
  auto vs = s.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return std::make_pair(vs[i], vs[j]);
  return std::nullopt;
}

std::optional<std::pair<int, int>> adjacent_pair(const Graph& g, VertexSet s) {
  auto vs = s.to_vector();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return std::make_pair(vs[i], vs[j]);
  return std::nullopt;
}

VertexSet consecutive_pair(const decomp::HoleContext& ctx, int i) {
  const int k = ctx.length();
  return VertexSet::of({ctx.hole[i], ctx.hole[(i + 1) % k]});
}

// first stable triple inside N(v), or empty
std::vector<int> claw_at(const Graph& g, int v) {
  auto nb = g.neighbors(v).to_vector();
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      if (g.adjacent(nb[a], nb[b])) continue;
      for (std::size_t c = b + 1; c < nb.size(); ++c)
        if (!g.adjacent(nb[a], nb[c]) && !g.adjacent(nb[b], nb[c]))
          return {v, nb[a], nb[b], nb[c]};
    }
  return {};
}

void eval_context_lemma(const Graph& g, const GraphFacts& facts,
                        const decomp::HoleContext& ctx,
                        const decomp::Decomposition& d, LemmaVerdict& v) {
  const int k = ctx.length();

  if (v.id == "eq1-ui-clique") {
    for (int i = 0; i < k; ++i)
      if (auto bad = nonadjacent_pair(g, d.u_parts[static_cast<std::size_t>(i)]))
        return conclude(v, false, {bad->first, bad->second},
                        "non-adjacent pair in U_" + std::to_string(i));
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (d.u_parts[static_cast<std::size_t>(i)].intersects(
                d.u_parts[static_cast<std::size_t>(j)]))
          return conclude(v, false, {}, "overlapping parts");
    return conclude(v, true);
  }

  if (v.id == "u-mc-clique") {
    for (int u : d.u)
      if (auto bad = nonadjacent_pair(g, g.neighbors(u) & d.mc))
        return conclude(v, false, {u, bad->first, bad->second});
    return conclude(v, true);
  }

  if (v.id == "u-prime-component-pure") {
    const auto comps = g.components_within(d.mc);
    for (int up : d.u_prime)
      for (const VertexSet& comp : comps)
        if (g.mixed_on(up, comp)) {
          const int in = (g.neighbors(up) & comp).first();
          const int out = (comp - g.neighbors(up)).first();
          return conclude(v, false, {up, in, out});
        }
    return conclude(v, true);
  }

  if (v.id == "u-prime-complete") {
    const VertexSet target = d.u | d.hole | d.y_prime | d.z;
    for (int up : d.u_prime)
      if (!g.complete_to(up, target))
        return conclude(v, false, {up, (target - g.neighbors(up)).first()});
    return conclude(v, true);
  }

  if (v.id == "z-prime-anticomplete-u") {
    for (int zp : d.z_prime)
      if (g.neighbors(zp).intersects(d.u))
        return conclude(v, false, {zp, (g.neighbors(zp) & d.u).first()});
    return conclude(v, true);
  }

  if (v.id == "z-prime-clique") {
    if (auto bad = nonadjacent_pair(g, d.z_prime))
      return conclude(v, false, {bad->first, bad->second});
    return conclude(v, true);
  }

  if (v.id == "z-consecutive-pair") {
    for (int z : d.z) {
      bool ok = false;
      for (int i = 0; i < k && !ok; ++i)
        ok = g.neighbors(z).contains_all(consecutive_pair(ctx, i));
      if (!ok) return conclude(v, false, {z});
    }
    return conclude(v, true);
  }

  if (v.id == "t-complete-ncu") {
    for (int u : d.u) {
      const VertexSet ncu = g.neighbors(u) & d.hole;
      for (int y : g.neighbors(u) & d.mc) {
        const VertexSet t = (g.neighbors(u) - ncu).without(y) - g.neighbors(y);
        for (int w : t)
          if (!g.complete_to(w, ncu))
            return conclude(v, false, {u, y, w, (ncu - g.neighbors(w)).first()});
      }
    }
    return conclude(v, true);
  }

  if (v.id == "z-complete-ui") {
    for (int i = 0; i < k; ++i) {
      const VertexSet part = d.u_parts[static_cast<std::size_t>(i)];
      if (part.empty()) continue;
      for (int z : d.z)
        if (g.neighbors(z).intersects(part) && !g.complete_to(z, part))
          return conclude(v, false, {z, (part - g.neighbors(z)).first()},
                          "partial attachment to U_" + std::to_string(i));
    }
    return conclude(v, true);
  }

  if (v.id == "z-hole-neighborhood-shape") {
    for (int i = 0; i < k; ++i) {
      const VertexSet part = d.u_parts[static_cast<std::size_t>(i)];
      if (part.empty()) continue;
      const VertexSet base_pair = consecutive_pair(ctx, i);
      for (int z : d.z) {
        if (!g.neighbors(z).intersects(part)) continue;
        const VertexSet nz = g.neighbors(z) & d.hole;
        bool ok = nz == base_pair;
        for (int j = 0; j < k && !ok; ++j)
          if (j != i) ok = nz == (base_pair | consecutive_pair(ctx, j));
        if (!ok) return conclude(v, false, {z});
      }
    }
    return conclude(v, true);
  }

  if (v.id == "z-u-two-parts") {
    for (int z : d.z) {
      if (!g.neighbors(z).intersects(d.u)) continue;
      int parts_hit = 0;
      for (int i = 0; i < k; ++i)
        parts_hit +=
            g.neighbors(z).intersects(d.u_parts[static_cast<std::size_t>(i)]);
      if (parts_hit > 2)
        return conclude(v, false, {z},
                        std::to_string(parts_hit) + " parts attached");
    }
    return conclude(v, true);
  }

  if (v.id == "adjacent-u-same-mc-nbrs") {
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        for (int ui : d.u_parts[static_cast<std::size_t>(i)])
          for (int uj : d.u_parts[static_cast<std::size_t>(j)]) {
            if (!g.adjacent(ui, uj)) continue;
            const VertexSet a = g.neighbors(ui) & d.mc;
            const VertexSet b = g.neighbors(uj) & d.mc;
            if (!(a == b)) {
              const VertexSet diff = (a - b) | (b - a);
              return conclude(v, false, {ui, uj, diff.first()});
            }
          }
    return conclude(v, true);
  }

  if (v.id == "u-nonempty") {
    return conclude(v, !d.u.empty(), {},
                    d.u.empty() ? "N(M(C)) complete to the hole" : "");
  }

  if (v.id == "mc-beyond-yprime-stable") {
    const VertexSet rest = d.mc - d.y_prime;
    if (auto bad = adjacent_pair(g, rest))
      return conclude(v, false, {bad->first, bad->second}, "edge inside M(C)\\Y'");
    for (int x : rest)
      if (!d.u_prime.contains_all(g.neighbors(x)))
        return conclude(v, false, {x, (g.neighbors(x) - d.u_prime).first()},
                        "neighbour outside U'");
    return conclude(v, true);
  }

  if (v.id == "omega-W-drop") {
    for (int i = 0; i < k; ++i) {
      const VertexSet part = d.u_parts[static_cast<std::size_t>(i)];
      if (part.empty()) continue;
      const VertexSet w = g.neighborhood_of(part | d.mc);
      const int omega_w = clique_number_within(g, w);
      if (omega_w >= facts.omega)
        return conclude(v, false, {i},
                        "omega(W)=" + std::to_string(omega_w) + " for U_" +
                            std::to_string(i));
    }
    return conclude(v, true);
  }

  if (v.id == "parachute-mc-stable") {
    if (auto bad = adjacent_pair(g, d.mc))
      return conclude(v, false, {bad->first, bad->second});
    return conclude(v, true);
  }

  if (v.id == "nmc-consecutive-only") {
    const VertexSet off = d.u_prime | d.residual;
    if (!off.empty())
      return conclude(v, false, {off.first()},
                      "member of N(M(C)) outside the balloon classes");
    return conclude(v, true);
  }

  if (v.id == "mc-clique-p6k1") {
    if (auto bad = nonadjacent_pair(g, d.mc))
      return conclude(v, false, {bad->first, bad->second});
    return conclude(v, true);
  }

  throw DomainError("unknown context lemma id: " + v.id);
}

void eval_graph_lemma(const Graph& g, const GraphFacts& facts,
                      const std::vector<ContextData>* contexts, int context_cap,
                      LemmaVerdict& v) {
  if (v.id == "no-homogeneous-set") {
    if (g.size() < 3) return conclude(v, true);
    if (auto x = decomp::find_homogeneous_set(g))
      return conclude(v, false, x->to_vector());
    return conclude(v, true);
  }

  if (v.id == "mv-antihole-c5-only") {
    for (int base = 0; base < g.size(); ++base) {
      const VertexSet m = g.non_neighborhood(base);
      if (m.count() < 7) continue;
      const auto members = m.to_vector();
      std::vector<int> found;
      patterns::for_each_odd_hole(
          g.induced(m).complement(),
          [&](const std::vector<int>& cycle) {
            found = cycle;
            return true;
          },
          7);
      if (!found.empty()) {
        std::vector<int> tuple = {base};
        for (int i : found) tuple.push_back(members[static_cast<std::size_t>(i)]);
        return conclude(v, false, tuple, "odd antihole in M(v)");
      }
    }
    return conclude(v, true);
  }

  if (v.id == "mixed-balloon-exists") {
    std::vector<ContextData> local;
    if (!contexts) {
      local = gather_contexts(g, context_cap);
      contexts = &local;
    }
    for (const auto& cd : *contexts) {
      for (const VertexSet& comp : g.components_within(cd.d.mc))
        for (int u : cd.d.u)
          if (g.mixed_on(u, comp)) {
            conclude(v, true);
            v.detail = "balloon center " + std::to_string(u) + " mixed at base " +
                       std::to_string(cd.ctx.base);
            return;
          }
    }
    return conclude(v, false, {}, "no mixed balloon-center context");
  }

  if (v.id == "odd-parachute-free") {
    std::vector<ContextData> local;
    if (!contexts) {
      local = gather_contexts(g, context_cap);
      contexts = &local;
    }
    for (const auto& cd : *contexts)
      if (!cd.d.u_prime.empty()) {
        const int apex = cd.d.u_prime.first();
        const int pendant = (g.neighbors(apex) & cd.d.mc).first();
        std::vector<int> tuple = cd.ctx.hole;
        tuple.push_back(apex);
        tuple.push_back(pendant);
        return conclude(v, false, tuple, "induced odd parachute");
      }
    return conclude(v, true);
  }

  if (v.id == "claw-center-mv-perfect") {
    for (int center = 0; center < g.size(); ++center) {
      const auto claw = claw_at(g, center);
      if (claw.empty()) continue;
      const VertexSet m = g.non_neighborhood(center);
      if (m.empty()) continue;
      const auto res = patterns::is_perfect(g.induced(m),
                                            patterns::PerfectionMode::Spgt);
      if (!res.perfect) {
        const auto members = m.to_vector();
        std::vector<int> tuple = {center};
        for (int i : res.hole->cycle)
          tuple.push_back(members[static_cast<std::size_t>(i)]);
        return conclude(v, false, tuple, "imperfect M(v) at a claw center");
      }
    }
    return conclude(v, true);
  }

  if (v.id == "claw-free") {
    const auto claw = patterns::build_named_graph(
        {patterns::PatternKind::Claw, 0});
    if (auto phi = patterns::contains_induced(g, claw))
      return conclude(v, false, *phi, "induced claw");
    return conclude(v, true);
  }

  throw DomainError("unknown graph lemma id: " + v.id);
}

bool gate_holds(std::string_view gate, const GraphFacts& facts,
                const decomp::Decomposition* d) {
  if (gate == "fork-free") return facts.fork_free;
  if (gate == "connected") return facts.connected;
  if (gate == "p6k1-free") return facts.p6k1_free;
  if (gate == "u-nonempty") return d != nullptr && !d->u.empty();
  if (gate == "u-prime-nonempty") return d != nullptr && !d->u_prime.empty();
  throw DomainError("unknown gate: " + std::string(gate));
}

LemmaVerdict evaluate(const Graph& g, const GraphFacts& facts,
                      const LemmaInfo& info, const decomp::HoleContext* ctx,
                      const decomp::Decomposition* d,
                      const std::vector<ContextData>* contexts, int context_cap) {
  LemmaVerdict v;
  v.id = std::string(info.id);
  v.tier = info.tier;
  if (info.scope == Scope::Context && ctx != nullptr) {
    v.base = ctx->base;
    v.hole = ctx->hole;
  }
  for (auto gate : info.gates) {
    if (!gate_holds(gate, facts, d)) {
      v.gate_status = GateStatus::Fail;
      v.failed_gate = std::string(gate);
      v.conclusion = ConclusionStatus::NotEvaluated;
      return v;
    }
  }
  v.gate_status = GateStatus::Hold;
  if (info.scope == Scope::Context)
    eval_context_lemma(g, facts, *ctx, *d, v);
  else
    eval_graph_lemma(g, facts, contexts, context_cap, v);
  return v;
}

}  // namespace

const std::vector<LemmaInfo>& ledger() { return ledger_rows(); }

const LemmaInfo* ledger_find(std::string_view id) {
  for (const auto& info : ledger_rows())
    if (info.id == id) return &info;
  return nullptr;
}

GraphFacts compute_graph_facts(const Graph& g) {
  GraphFacts facts;
  using patterns::PatternKind;
  facts.fork_free =
      !patterns::contains_induced(g, patterns::build_named_graph({PatternKind::Fork, 0}));
  facts.claw_free =
      !patterns::contains_induced(g, patterns::build_named_graph({PatternKind::Claw, 0}));
  facts.p6k1_free =
      !patterns::contains_induced(g, patterns::build_named_graph({PatternKind::P6K1, 0}));
  facts.connected = g.connected();
  facts.omega = clique_number_within(g, g.vertices());
  return facts;
}

LemmaVerdict check_lemma(const Graph& g, const decomp::HoleContext& ctx,
                         const decomp::Decomposition& d, std::string_view id,
                         const GraphFacts* facts) {
  const LemmaInfo* info = ledger_find(id);
  if (!info) throw DomainError("unknown lemma id: " + std::string(id));
  GraphFacts local;
  if (!facts) {
    local = compute_graph_facts(g);
    facts = &local;
  }
  if (info->scope == Scope::Context && !decomp::validate_context(g, ctx))
    throw DomainError("check_lemma: invalid hole context");
  return evaluate(g, *facts, *info, &ctx, &d, nullptr, decomp::kContextCap);
}

std::vector<LemmaVerdict> check_graph(const Graph& g, int tier, int context_cap) {
  const GraphFacts facts = compute_graph_facts(g);
  const std::vector<ContextData> contexts = gather_contexts(g, context_cap);
  std::vector<LemmaVerdict> out;
  for (const auto& info : ledger_rows()) {
    if (tier != 0 && info.tier != tier) continue;
    if (info.scope == Scope::Graph) {
      out.push_back(evaluate(g, facts, info, nullptr, nullptr, &contexts,
                             context_cap));
    } else {
      for (const auto& cd : contexts)
        out.push_back(
            evaluate(g, facts, info, &cd.ctx, &cd.d, &contexts, context_cap));
    }
  }
  return out;
}

}  // namespace forkdiv::lemmas
