#include "helix/topology.hpp"

#include <algorithm>

namespace helix {
namespace {

bool dominates(const CompatibilityGraph& g, const VertexSet& alive, int w, int v) {
  if (w == v || !alive.test(w) || !g.adjacent(v, w)) return false;
  VertexSet rest = g.neighbors(v) & alive;
  rest.reset(w);
  return rest.is_subset_of(g.neighbors(w));
}

std::vector<int> dominators_of(const CompatibilityGraph& g, const VertexSet& alive, int v) {
  std::vector<int> out;
  for (int w = 0; w < g.size(); ++w) {
    if (dominates(g, alive, w, v)) out.push_back(w);
  }
  return out;
}

template <typename Choose>
CollapseTrace collapse(const CompatibilityGraph& g, Choose choose) {
  VertexSet alive(g.size());
  alive.set();
  CollapseTrace trace;
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> candidates;
    for (int v = 0; v < g.size(); ++v) {
      if (!alive.test(v)) continue;
      auto doms = dominators_of(g, alive, v);
      if (!doms.empty()) candidates.emplace_back(v, std::move(doms));
    }
    if (candidates.empty()) break;
    const auto [v, w] = choose(candidates);
    trace.steps.push_back({g.id(v), g.id(w)});
    alive.reset(v);
  }
  std::vector<int> survivors;
  for (int v = 0; v < g.size(); ++v) {
    if (alive.test(v)) survivors.push_back(v);
  }
  trace.core = g.induced(survivors);
  return trace;
}

}  // namespace

std::optional<int> dominator(const CompatibilityGraph& g, int v) {
  VertexSet alive(g.size());
  alive.set();
  const auto doms = dominators_of(g, alive, v);
  if (doms.empty()) return std::nullopt;
  return doms.front();
}

CollapseTrace strong_collapse(const CompatibilityGraph& g) {
  return collapse(g, [](const auto& candidates) {
    return std::pair(candidates.front().first, candidates.front().second.front());
  });
}

CollapseTrace strong_collapse(const CompatibilityGraph& g, std::mt19937_64& rng) {
  return collapse(g, [&rng](const auto& candidates) {
    std::uniform_int_distribution<std::size_t> pick_v(0, candidates.size() - 1);
    const auto& [v, doms] = candidates[pick_v(rng)];
    std::uniform_int_distribution<std::size_t> pick_w(0, doms.size() - 1);
    return std::pair(v, doms[pick_w(rng)]);
  });
}

bool audit_collapse(const CompatibilityGraph& g, const CollapseTrace& trace) {
  auto local_of = [&g](int id) {
    const auto& ids = g.ids();
    const auto it = std::find(ids.begin(), ids.end(), id);
    return it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
  };
  VertexSet alive(g.size());
  alive.set();
  for (const auto& step : trace.steps) {
    const int v = local_of(step.removed);
    const int w = local_of(step.witness);
    if (v < 0 || w < 0 || !alive.test(v) || !dominates(g, alive, w, v)) return false;
    alive.reset(v);
  }
  std::vector<int> survivors;
  for (int v = 0; v < g.size(); ++v) {
    if (alive.test(v)) survivors.push_back(v);
  }
  const CompatibilityGraph expected = g.induced(survivors);
  if (expected.ids() != trace.core.ids()) return false;
  for (int i = 0; i < expected.size(); ++i) {
    if (expected.neighbors(i) != trace.core.neighbors(i)) return false;
  }
  // The residual core must be free of dominated vertices.
  return std::none_of(survivors.begin(), survivors.end(), [&](int v) {
    return !dominators_of(g, alive, v).empty();
  });
}

std::optional<int> recognize_cross_polytope(const CompatibilityGraph& g) {
  if (g.empty() || g.size() % 2 != 0) return std::nullopt;
  for (int v = 0; v < g.size(); ++v) {
    if (g.degree(v) != g.size() - 2) return std::nullopt;
  }
  return g.size() / 2;
}

IndexResult determine_index(const FlagComplex& c, std::size_t capacity) {
  if (c.empty()) return IndexZero{};
  CollapseTrace trace = strong_collapse(c.graph);
  if (trace.core.size() == 1) return NotMinimal{std::move(trace)};

  if (const auto n = recognize_cross_polytope(trace.core)) {
    IndexCertified out;
    out.n = *n;
    const auto& core = trace.core;
    for (int v = 0; v < core.size(); ++v) {
      for (int w = v + 1; w < core.size(); ++w) {
        if (!core.adjacent(v, w)) out.certificate.antipodes.emplace_back(core.id(v), core.id(w));
      }
    }
    out.certificate.homology = homology(core, capacity);
    out.certificate.trace = std::move(trace);
    return out;
  }

  Indeterminate out;
  out.core_homology = homology(trace.core, capacity);
  out.lowest_nonzero = out.core_homology.lowest_nonzero();
  out.trace = std::move(trace);
  return out;
}

std::string result_name(const IndexResult& r) {
  struct {
    std::string operator()(const IndexZero&) const { return "index"; }
    std::string operator()(const IndexCertified&) const { return "index"; }
    std::string operator()(const NotMinimal&) const { return "not_minimal"; }
    std::string operator()(const Indeterminate&) const { return "indeterminate"; }
  } visitor;
  return std::visit(visitor, r);
}

}  // namespace helix
