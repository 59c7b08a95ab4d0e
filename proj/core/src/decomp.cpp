#include "forkdiv/decomp.hpp"

#include "forkdiv/holes.hpp"

namespace forkdiv::decomp {

bool validate_context(const Graph& g, const HoleContext& ctx) {
  if (ctx.base < 0 || ctx.base >= g.size()) return false;
  const int k = ctx.length();
  if (k < 5 || k % 2 == 0) return false;
  patterns::HoleWitness w{ctx.hole, patterns::HoleKind::Hole};
  if (!patterns::validate_hole_witness(g, w)) return false;
  return g.non_neighborhood(ctx.base).contains_all(ctx.hole_set());
}

std::optional<VertexSet> find_homogeneous_set(const Graph& g) {
  const int n = g.size();
  if (n < 3) throw DomainError("find_homogeneous_set: need at least 3 vertices");
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      VertexSet x = VertexSet::of({a, b});
      // close under splitters: any outside vertex mixed on x joins x
      for (bool grew = true; grew && x.count() < n;) {
        grew = false;
        for (int w : x.complement_within(n)) {
          if (g.mixed_on(w, x)) {
            x = x.with(w);
            grew = true;
            break;
          }
        }
      }
      if (x.count() < n) return x;
    }
  }
  return std::nullopt;
}

std::vector<HoleContext> enumerate_hole_contexts(const Graph& g, int cap) {
  if (g.size() > cap)
    throw CapabilityError("enumerate_hole_contexts: order " +
                          std::to_string(g.size()) + " exceeds cap " +
                          std::to_string(cap));
  std::vector<HoleContext> out;
  for (int base = 0; base < g.size(); ++base) {
    const VertexSet m = g.non_neighborhood(base);
    if (m.count() < 5) continue;
    const auto members = m.to_vector();
    const Graph gm = g.induced(m);
    patterns::for_each_odd_hole(gm, [&](const std::vector<int>& cycle) {
      HoleContext ctx;
      ctx.base = base;
      ctx.hole.reserve(cycle.size());
      for (int v : cycle) ctx.hole.push_back(members[static_cast<std::size_t>(v)]);
      out.push_back(std::move(ctx));
      return false;
    });
  }
  return out;
}

Decomposition decompose_hole_neighborhood(const Graph& g, const HoleContext& ctx) {
  if (!validate_context(g, ctx))
    throw DomainError("decompose_hole_neighborhood: invalid hole context");

  Decomposition d;
  d.hole = ctx.hole_set();
  d.mc = g.anticomplete_set(d.hole);
  d.n_mc = g.neighborhood_of(d.mc);

  const int k = ctx.length();
  d.u_parts.assign(static_cast<std::size_t>(k), VertexSet{});
  for (int w : d.n_mc) {
    const VertexSet on_hole = g.neighbors(w) & d.hole;
    if (g.complete_to(w, d.hole)) {
      d.u_prime = d.u_prime.with(w);
      continue;
    }
    bool placed = false;
    if (on_hole.count() == 2) {
      for (int i = 0; i < k && !placed; ++i) {
        const VertexSet pair =
            VertexSet::of({ctx.hole[i], ctx.hole[(i + 1) % k]});
        if (on_hole == pair) {
          d.u_parts[static_cast<std::size_t>(i)] =
              d.u_parts[static_cast<std::size_t>(i)].with(w);
          d.u = d.u.with(w);
          placed = true;
        }
      }
    }
    if (!placed) d.residual = d.residual.with(w);
  }

  for (int m : d.mc)
    if (g.neighbors(m).intersects(d.u)) d.y = d.y.with(m);
  for (const VertexSet& comp : g.components_within(d.mc))
    if (comp.intersects(d.y)) d.y_prime = d.y_prime | comp;

  const VertexSet hole_nbrs = g.neighborhood_of(d.hole);
  for (int w : hole_nbrs - d.n_mc) {
    if (g.complete_to(w, d.hole))
      d.z_prime = d.z_prime.with(w);
    else
      d.z = d.z.with(w);
  }
  return d;
}

}  // namespace forkdiv::decomp
