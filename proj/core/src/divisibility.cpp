#include "forkdiv/divisibility.hpp"

#include <algorithm>

#include "forkdiv/clique.hpp"
#include "forkdiv/coloring.hpp"

namespace forkdiv::divisibility {

namespace {

// Deterministic pseudo-sample: audit roughly audit-rate percent of the
// perfection checks, decided by a hash of the subgraph so parallel scans
// agree.
bool audit_due(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  mix(static_cast<std::uint64_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) mix(g.neighbors(v).bits());
  return h % 100 < static_cast<std::uint64_t>(kAuditRatePercent);
}

// Perfection inside the division search: spgt with occasional brute audits.
struct PerfectionProbe {
  bool perfect = false;
  bool audited = false;
};

PerfectionProbe probe_perfect(const Graph& g) {
  PerfectionProbe out;
  const auto spgt = patterns::is_perfect(g, patterns::PerfectionMode::Spgt);
  out.perfect = spgt.perfect;
  if (g.size() <= patterns::kPerfectBruteCap && audit_due(g)) {
    out.audited = true;
    const auto brute = patterns::is_perfect(g, patterns::PerfectionMode::Brute);
    if (brute.perfect != spgt.perfect)
      throw Error("perfection oracles disagree on a " +
                  std::to_string(g.size()) + "-vertex graph");
  }
  return out;
}

// All cliques of maximum size, as vertex sets.
std::vector<VertexSet> maximum_cliques(const Graph& g, int omega) {
  std::vector<VertexSet> out;
  struct Rec {
    const Graph& g;
    int omega;
    std::vector<VertexSet>& out;
    void run(VertexSet r, VertexSet cand) {
      if (r.count() == omega) {
        out.push_back(r);
        return;
      }
      if (r.count() + cand.count() < omega) return;
      while (!cand.empty()) {
        const int v = cand.first();
        cand = cand.without(v);
        run(r.with(v), cand & g.neighbors(v));
      }
    }
  } rec{g, omega, out};
  rec.run({}, g.vertices());
  return out;
}

}  // namespace

std::optional<bool> MemoCache::lookup(const std::string& key) const {
  std::lock_guard lk(mu_);
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void MemoCache::insert(const std::string& key, bool pd) {
  std::lock_guard lk(mu_);
  auto [it, fresh] = map_.emplace(key, pd);
  if (fresh) journal_.emplace_back(key, pd);
}

std::size_t MemoCache::size() const {
  std::lock_guard lk(mu_);
  return map_.size();
}

std::vector<std::pair<std::string, bool>> MemoCache::drain_new() {
  std::lock_guard lk(mu_);
  return std::exchange(journal_, {});
}

std::vector<std::pair<std::string, bool>> MemoCache::all() const {
  std::lock_guard lk(mu_);
  std::vector<std::pair<std::string, bool>> out(map_.begin(), map_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<DivisionCertificate> fast_path_division(const Graph& g, int v) {
  const VertexSet m = g.non_neighborhood(v);
  PerfectionProbe probe{true, false};
  if (!m.empty()) probe = probe_perfect(g.induced(m));
  if (!probe.perfect) return std::nullopt;
  DivisionCertificate cert;
  cert.a = m.with(v);
  cert.b = g.neighbors(v);
  cert.a_perfection_mode = patterns::PerfectionMode::Spgt;
  cert.a_perfection_audited = probe.audited;
  cert.omega_g = clique_number_within(g, g.vertices());
  cert.omega_b = clique_number_within(g, cert.b);
  return cert;
}

std::optional<DivisionCertificate> find_perfect_division(const Graph& g, int cap) {
  if (g.size() > cap)
    throw CapabilityError("find_perfect_division: order " +
                          std::to_string(g.size()) + " exceeds cap " +
                          std::to_string(cap));
  const int omega = clique_number_within(g, g.vertices());

  {
    const auto probe = probe_perfect(g);
    if (probe.perfect) {
      DivisionCertificate cert;
      cert.a = g.vertices();
      cert.b = VertexSet{};
      cert.a_perfection_audited = probe.audited;
      cert.omega_g = omega;
      cert.omega_b = 0;
      return cert;
    }
  }

  for (int v = 0; v < g.size(); ++v)
    if (auto cert = fast_path_division(g, v)) return cert;

  // Exact search. A must meet every maximum clique, otherwise B keeps one.
  const auto cliques = maximum_cliques(g, omega);
  const std::uint64_t all = g.vertices().bits();
  for (int size = g.size() - 1; size >= 1; --size) {
    for (std::uint64_t mask = 0; mask <= all; ++mask) {
      if (std::popcount(mask) != size) continue;
      const VertexSet a = VertexSet::from_bits(mask);
      bool transversal = true;
      for (const auto& q : cliques)
        if (!q.intersects(a)) {
          transversal = false;
          break;
        }
      if (!transversal) continue;
      const auto probe = probe_perfect(g.induced(a));
      if (!probe.perfect) continue;
      DivisionCertificate cert;
      cert.a = a;
      cert.b = a.complement_within(g.size());
      cert.a_perfection_audited = probe.audited;
      cert.omega_g = omega;
      cert.omega_b = clique_number_within(g, cert.b);
      return cert;
    }
  }
  return std::nullopt;
}

namespace {

// Hereditary recursion; children first so an NPD witness is always minimal.
// Warm NPD hits re-walk their children (cheap against the memo) so the
// witness stays minimal regardless of cache temperature.
PDStatus pd_recurse(const Graph& g, MemoCache& cache, int cap) {
  const std::string key = canonical_form(g).bytes;
  const auto hit = cache.lookup(key);
  if (hit && *hit) {
    PDStatus st;
    st.state = PDState::PD;
    return st;
  }

  if (g.size() > 1) {
    for (int v = 0; v < g.size(); ++v) {
      const Graph child = g.induced(g.vertices().without(v));
      const PDStatus sub = pd_recurse(child, cache, cap);
      if (sub.state == PDState::NPD) {
        cache.insert(key, false);
        return sub;
      }
    }
  }

  if (!hit) {
    if (find_perfect_division(g, cap)) {
      cache.insert(key, true);
      PDStatus st;
      st.state = PDState::PD;
      return st;
    }
    cache.insert(key, false);
  }
  PDStatus st;
  st.state = PDState::NPD;
  st.witness = CanonicalForm{key};  // all children PD: g itself is minimal
  return st;
}

}  // namespace

PDStatus is_perfectly_divisible(const Graph& g, MemoCache& cache, int cap) {
  if (g.size() > cap)
    throw CapabilityError("is_perfectly_divisible: order " +
                          std::to_string(g.size()) + " exceeds cap " +
                          std::to_string(cap));
  return pd_recurse(g, cache, cap);
}

MinimalityResult is_minimal_non_pd(const Graph& g, MemoCache& cache, int cap) {
  if (g.size() > cap)
    throw CapabilityError("is_minimal_non_pd: order " + std::to_string(g.size()) +
                          " exceeds cap " + std::to_string(cap));
  MinimalityResult out;
  if (auto division = find_perfect_division(g, cap)) {
    out.division = std::move(division);
    return out;
  }
  if (g.size() > 1) {
    for (int v = 0; v < g.size(); ++v) {
      const Graph child = g.induced(g.vertices().without(v));
      const PDStatus sub = pd_recurse(child, cache, cap);
      if (sub.state == PDState::NPD) {
        out.non_pd_subgraph =
            sub.witness ? sub.witness : CanonicalForm{canonical_form(child).bytes};
        return out;
      }
    }
  }
  out.minimal_non_pd = true;
  return out;
}

ColoringOutcome color_via_perfect_division(const Graph& g, int cap) {
  if (g.size() > cap)
    throw CapabilityError("color_via_perfect_division: order " +
                          std::to_string(g.size()) + " exceeds cap " +
                          std::to_string(cap));
  ColoringOutcome out;
  ColoringCertificate cert;
  cert.omega = clique_number_within(g, g.vertices());
  cert.bound = cert.omega * (cert.omega + 1) / 2;
  cert.colors.assign(static_cast<std::size_t>(g.size()), -1);

  VertexSet remaining = g.vertices();
  int palette = 0;
  while (!remaining.empty()) {
    const auto members = remaining.to_vector();
    const Graph sub = g.induced(remaining);
    auto division = find_perfect_division(sub, cap);
    if (!division) {
      out.stuck = remaining;
      return out;
    }
    const Graph ga = sub.induced(division->a);
    const ColoringResult coloring = chromatic_number_exact(ga);
    const auto a_members = division->a.to_vector();
    for (std::size_t i = 0; i < a_members.size(); ++i) {
      const int original = members[static_cast<std::size_t>(a_members[i])];
      cert.colors[static_cast<std::size_t>(original)] = palette + coloring.colors[i];
    }
    palette += coloring.chi;

    // record the level certificate in original vertex ids
    DivisionCertificate level = *division;
    VertexSet a_orig, b_orig;
    for (int i : division->a) a_orig = a_orig.with(members[static_cast<std::size_t>(i)]);
    for (int i : division->b) b_orig = b_orig.with(members[static_cast<std::size_t>(i)]);
    level.a = a_orig;
    level.b = b_orig;
    cert.levels.push_back(level);

    remaining = b_orig;
  }
  cert.colors_used = palette;
  out.certificate = std::move(cert);
  return out;
}

bool validate_certificate(const Graph& g, const DivisionCertificate& cert,
                          bool brute_check) {
  if ((cert.a & cert.b) != VertexSet{}) return false;
  if ((cert.a | cert.b) != g.vertices()) return false;
  if (cert.omega_g != clique_number_within(g, g.vertices())) return false;
  if (cert.omega_b != clique_number_within(g, cert.b)) return false;
  if (cert.omega_b >= cert.omega_g) return false;
  if (!cert.a.empty()) {
    const Graph ga = g.induced(cert.a);
    if (!patterns::is_perfect(ga, patterns::PerfectionMode::Spgt).perfect)
      return false;
    if (brute_check && ga.size() <= patterns::kPerfectBruteCap &&
        !patterns::is_perfect(ga, patterns::PerfectionMode::Brute).perfect)
      return false;
  }
  return true;
}

std::string certificate_to_json(const DivisionCertificate& cert) {
  auto set_to_json = [](VertexSet s) {
    std::string out = "[";
    bool first = true;
    for (int v : s) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
    return out + "]";
  };
  std::string mode = "spgt";
  if (cert.a_perfection_audited) mode += "+brute-audit";
  return std::string("{\"a\":") + set_to_json(cert.a) +
         ",\"b\":" + set_to_json(cert.b) +
         ",\"omega_g\":" + std::to_string(cert.omega_g) +
         ",\"omega_b\":" + std::to_string(cert.omega_b) +
         ",\"perfection_mode\":\"" + mode + "\"" +
         ",\"witness\":\"division\"}";
}

}  // namespace forkdiv::divisibility
