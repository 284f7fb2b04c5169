#include "unihyp/paths.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace unihyp {

std::string distance_mode_name(DistanceMode mode) {
  switch (mode) {
    case DistanceMode::ED: return "ED";
    case DistanceMode::EED: return "EED";
    case DistanceMode::IUD: return "IUD";
    case DistanceMode::UD: return "UD";
    case DistanceMode::SED: return "SED";
    case DistanceMode::SEED: return "SEED";
    case DistanceMode::SUD: return "SUD";
    case DistanceMode::ESD: return "ESD";
    case DistanceMode::EESD: return "EESD";
    case DistanceMode::IUSD: return "IUSD";
  }
  return "?";
}

DistanceMode distance_mode_from_name(const std::string& name) {
  for (DistanceMode m :
       {DistanceMode::ED, DistanceMode::EED, DistanceMode::IUD, DistanceMode::UD,
        DistanceMode::SED, DistanceMode::SEED, DistanceMode::SUD, DistanceMode::ESD,
        DistanceMode::EESD, DistanceMode::IUSD})
    if (distance_mode_name(m) == name) return m;
  fail(ErrorCode::InvalidInput, "unknown distance mode '" + name + "'");
}

namespace {

struct ConstraintSpec {
  bool plain_bfs = false;       // unconstrained shortest exact path
  bool edges_distinct = false;  // distinct edge occurrences
  bool internal_disjoint = false;
  bool all_disjoint = false;
  int min_length = 1;
};

ConstraintSpec constraints_for(DistanceMode mode) {
  ConstraintSpec cs;
  switch (mode) {
    case DistanceMode::ED:
    case DistanceMode::SED:
    case DistanceMode::ESD:
      cs.plain_bfs = true;
      break;
    case DistanceMode::EED:
    case DistanceMode::SEED:
    case DistanceMode::EESD:
      cs.edges_distinct = true;
      break;
    case DistanceMode::IUD:
    case DistanceMode::IUSD:
      cs.edges_distinct = false;
      cs.internal_disjoint = true;
      cs.min_length = 2;
      break;
    case DistanceMode::UD:
    case DistanceMode::SUD:
      cs.edges_distinct = true;
      cs.all_disjoint = true;
      cs.min_length = 2;
      break;
  }
  return cs;
}

std::vector<int> bfs_from(const AssociatedGraph& g, const std::vector<int>& starts) {
  std::vector<int> dist(g.k, kInfDistance);
  std::queue<int> q;
  for (int s : starts)
    if (dist[s] == kInfDistance) {
      dist[s] = 0;
      q.push(s);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int eid : g.adj[u]) {
      int v = g.other_end(eid, u);
      if (dist[v] == kInfDistance) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

// Depth-limited search for one constrained exact path, driven by iterative
// deepening from the unconstrained BFS lower bound.
struct Searcher {
  const AssociatedGraph& g;
  ConstraintSpec cs;
  std::vector<char> target;
  std::vector<int> lower;  // unconstrained distance to the nearest target
  std::vector<char> visited;
  std::vector<long long> used;  // per distinct hyperedge
  std::vector<Mask> parts;
  Mask mask_all = 0;
  Mask mask_internal = 0;
  long long budget = 0;

  bool dfs(int cur, int remaining) {
    if (--budget < 0)
      fail(ErrorCode::SizeCap, "distance search exceeded its node budget");
    for (int eid : g.adj[cur]) {
      const AssociatedGraph::Edge& e = g.edges[eid];
      int nxt = g.other_end(eid, cur);
      if (visited[nxt]) continue;
      if (lower[nxt] > remaining - 1) continue;
      if (cs.edges_distinct && used[e.hyperedge_id] >= e.mult) continue;
      Mask pm = parts[nxt];
      if (remaining == 1) {
        if (!target[nxt]) continue;
        bool ok = true;
        if (cs.all_disjoint)
          ok = (pm & mask_all) == 0;
        else if (cs.internal_disjoint)
          ok = (pm & mask_internal) == 0;  // terminal may meet the initial part
        if (ok) return true;
        continue;
      }
      bool ok = true;
      if (cs.all_disjoint || cs.internal_disjoint) ok = (pm & mask_all) == 0;
      if (!ok) continue;
      visited[nxt] = 1;
      if (cs.edges_distinct) ++used[e.hyperedge_id];
      Mask save_all = mask_all, save_internal = mask_internal;
      mask_all |= pm;
      mask_internal |= pm;
      if (dfs(nxt, remaining - 1)) return true;
      mask_all = save_all;
      mask_internal = save_internal;
      if (cs.edges_distinct) --used[e.hyperedge_id];
      visited[nxt] = 0;
    }
    return false;
  }
};

}  // namespace

PathContext::PathContext(const Hypergraph& h, SearchOptions opts)
    : h_(h), idx_(index_set(h)), g_(build_associated_graph(h, idx_)), opts_(opts) {}

std::vector<int> PathContext::nodes_containing(int vertex) const {
  std::vector<int> out;
  Mask bit = Mask{1} << vertex;
  for (int i = 0; i < g_.k; ++i)
    if (g_.parts[i] & bit) out.push_back(i);
  return out;
}

int PathContext::shortest(const std::vector<int>& sources, const std::vector<int>& targets,
                          DistanceMode mode) const {
  if (sources.empty() || targets.empty()) return kInfDistance;
  ConstraintSpec cs = constraints_for(mode);

  if (cs.plain_bfs) {
    // Shortest exact paths are exactly shortest G_H paths; length >= 1, so a
    // shared source/target index contributes nothing by itself.
    std::vector<char> is_target(g_.k, 0);
    for (int t : targets) is_target[t] = 1;
    int best = kInfDistance;
    for (int s : sources) {
      std::vector<int> dist = bfs_from(g_, {s});
      for (int t = 0; t < g_.k; ++t)
        if (is_target[t] && t != s && dist[t] != kInfDistance) best = std::min(best, dist[t]);
    }
    return best;
  }

  if (g_.k > opts_.k_cap)
    fail(ErrorCode::SizeCap, "constrained distance search refused: e-index " +
                                 std::to_string(g_.k) + " exceeds cap " +
                                 std::to_string(opts_.k_cap));

  Searcher sr{g_, cs, {}, {}, {}, {}, g_.parts};
  sr.target.assign(g_.k, 0);
  for (int t : targets) sr.target[t] = 1;
  sr.lower = bfs_from(g_, targets);
  sr.budget = opts_.node_budget;

  int lo = kInfDistance;
  for (int s : sources) lo = std::min(lo, sr.lower[s]);
  if (lo == kInfDistance) return kInfDistance;
  lo = std::max(lo, cs.min_length);

  int cap = g_.k - 1;  // exact paths have distinct parts
  std::vector<int> srcs = sources;
  std::sort(srcs.begin(), srcs.end());
  srcs.erase(std::unique(srcs.begin(), srcs.end()), srcs.end());
  for (int depth = lo; depth <= cap; ++depth) {
    for (int s : srcs) {
      sr.visited.assign(g_.k, 0);
      sr.used.assign(h_.distinct_edge_count(), 0);
      sr.visited[s] = 1;
      sr.mask_all = g_.parts[s];
      sr.mask_internal = 0;
      if (sr.dfs(s, depth)) return depth;
    }
  }
  return kInfDistance;
}

int PathContext::set_distance(Mask s, Mask sp, DistanceMode mode) const {
  if (!is_set_mode(mode))
    fail(ErrorCode::InvalidInput, "set_distance needs a set mode (ESD, EESD, IUSD)");
  int i = idx_.index_of(s), j = idx_.index_of(sp);
  if (i == j) return 0;
  return shortest({i}, {j}, mode);
}

int PathContext::vertex_distance(int u, int v, DistanceMode mode) const {
  if (is_set_mode(mode))
    fail(ErrorCode::InvalidInput, "vertex_distance needs a vertex mode");
  if (u < 0 || v < 0 || u >= h_.vertex_count() || v >= h_.vertex_count())
    fail(ErrorCode::InvalidVertex, "vertex index out of range");
  if (u == v) return 0;
  bool strong =
      mode == DistanceMode::SED || mode == DistanceMode::SEED || mode == DistanceMode::SUD;
  std::vector<int> sources, targets;
  if (strong) {
    sources = {idx_.index_of(Mask{1} << u)};
    targets = {idx_.index_of(Mask{1} << v)};
  } else {
    sources = nodes_containing(u);
    targets = nodes_containing(v);
  }
  return shortest(sources, targets, mode);
}

int PathContext::vertex_distance(const std::string& u, const std::string& v,
                                 DistanceMode mode) const {
  int ui = h_.find_vertex(u), vi = h_.find_vertex(v);
  if (ui < 0) fail(ErrorCode::InvalidVertex, "unknown vertex '" + u + "'");
  if (vi < 0) fail(ErrorCode::InvalidVertex, "unknown vertex '" + v + "'");
  return vertex_distance(ui, vi, mode);
}

int PathContext::diameter(DistanceMode mode) const {
  int best = 0;
  if (is_set_mode(mode)) {
    for (int i = 0; i < idx_.k; ++i)
      for (int j = i + 1; j < idx_.k; ++j) {
        int d = shortest({i}, {j}, mode);
        if (d == kInfDistance) return kInfDistance;
        best = std::max(best, d);
      }
    return best;
  }
  int n = h_.vertex_count();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int d = vertex_distance(u, v, mode);
      if (d == kInfDistance) return kInfDistance;
      best = std::max(best, d);
    }
  return best;
}

int PathContext::subset_distance(const std::vector<Mask>& xs, const std::vector<Mask>& ys) const {
  if (xs.empty() || ys.empty()) fail(ErrorCode::InvalidInput, "subset distance of empty family");
  std::vector<int> sources, targets;
  std::vector<char> is_source(g_.k, 0);
  for (Mask s : xs) {
    int i = idx_.index_of(s);
    sources.push_back(i);
    is_source[i] = 1;
  }
  for (Mask s : ys) {
    int j = idx_.index_of(s);
    if (is_source[j]) return 0;  // overlapping families
    targets.push_back(j);
  }
  std::vector<int> dist = bfs_from(g_, sources);
  int best = kInfDistance;
  for (int t : targets) best = std::min(best, dist[t]);
  return best;
}

ConnectednessProfile connectedness_profile(const Hypergraph& h, SearchOptions opts) {
  PathContext ctx(h, opts);
  ConnectednessProfile p;
  p.exactly = ctx.diameter(DistanceMode::ED) != kInfDistance;
  p.edge_exact = ctx.diameter(DistanceMode::EED) != kInfDistance;
  p.inter_uni = ctx.diameter(DistanceMode::IUD) != kInfDistance;
  p.uni = ctx.diameter(DistanceMode::UD) != kInfDistance;
  p.strong_exact = ctx.diameter(DistanceMode::SED) != kInfDistance;
  p.strong_edge_exact = ctx.diameter(DistanceMode::SEED) != kInfDistance;
  p.strong_uni = ctx.diameter(DistanceMode::SUD) != kInfDistance;
  p.deeply = ctx.diameter(DistanceMode::ESD) != kInfDistance;
  p.deeply_edge_exact = ctx.diameter(DistanceMode::EESD) != kInfDistance;
  p.deeply_inter_uni = ctx.diameter(DistanceMode::IUSD) != kInfDistance;
  return p;
}

int set_distance(const Hypergraph& h, Mask s, Mask sp, DistanceMode mode, SearchOptions opts) {
  return PathContext(h, opts).set_distance(s, sp, mode);
}

int vertex_distance(const Hypergraph& h, const std::string& u, const std::string& v,
                    DistanceMode mode, SearchOptions opts) {
  return PathContext(h, opts).vertex_distance(u, v, mode);
}

int diameter(const Hypergraph& h, DistanceMode mode, SearchOptions opts) {
  return PathContext(h, opts).diameter(mode);
}

bool has_odd_exact_cycle(const Hypergraph& h) {
  AssociatedGraph g = build_associated_graph(h);
  for (char b : g.component_bipartite)
    if (!b) return true;
  return false;
}

bool is_exact_tree(const Hypergraph& h) {
  AssociatedGraph g = build_associated_graph(h);
  return g.component_count == 1 && g.edge_occurrences() == g.k - 1;
}

}  // namespace unihyp
