#include "unihyp/assoc.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace unihyp {

long long AssociatedGraph::node_degree(int i) const {
  long long total = 0;
  for (int eid : adj[i]) total += edges[eid].mult;
  return total;
}

long long AssociatedGraph::edge_occurrences() const {
  long long total = 0;
  for (const Edge& e : edges) total += e.mult;
  return total;
}

AssociatedGraph build_associated_graph(const Hypergraph& h) {
  return build_associated_graph(h, index_set(h));
}

AssociatedGraph build_associated_graph(const Hypergraph& h, const IndexSet& idx) {
  for (const auto& [e, mult] : h.edges())
    if (mask_size(e) == 1)
      fail(ErrorCode::UnsupportedStructure,
           "associated graph undefined: loop " + h.part_string(e) + " present");

  AssociatedGraph g;
  g.k = idx.k;
  g.parts = idx.parts;
  g.adj.assign(g.k, {});

  const auto& edges = h.edges();
  for (int ei = 0; ei < static_cast<int>(edges.size()); ++ei) {
    const auto& [e, mult] = edges[ei];
    for (const auto& [a, b] : partitions2(e)) {
      AssociatedGraph::Edge ge;
      ge.a = idx.pos.at(a);
      ge.b = idx.pos.at(b);
      if (ge.a > ge.b) std::swap(ge.a, ge.b);
      ge.hyperedge = e;
      ge.hyperedge_id = ei;
      ge.mult = mult;
      int id = static_cast<int>(g.edges.size());
      g.edges.push_back(ge);
      g.adj[ge.a].push_back(id);
      g.adj[ge.b].push_back(id);
    }
  }

  // Components and 2-colorings by BFS from the least uncovered node.
  g.component.assign(g.k, -1);
  std::vector<int> color(g.k, -1);
  for (int start = 0; start < g.k; ++start) {
    if (g.component[start] != -1) continue;
    int comp = g.component_count++;
    bool bipartite = true;
    std::queue<int> q;
    g.component[start] = comp;
    color[start] = 0;
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int eid : g.adj[u]) {
        int v = g.other_end(eid, u);
        if (g.component[v] == -1) {
          g.component[v] = comp;
          color[v] = color[u] ^ 1;
          q.push(v);
        } else if (color[v] == color[u]) {
          bipartite = false;
        }
      }
    }
    g.component_bipartite.push_back(bipartite ? 1 : 0);
  }
  return g;
}

Hypergraph exact_subhypergraph(const Hypergraph& h, const std::vector<Mask>& d_parts) {
  IndexSet idx = index_set(h);
  std::set<Mask, CanonicalLess> d_set;
  for (Mask s : d_parts) {
    idx.index_of(s);  // validates membership
    d_set.insert(s);
  }

  auto in_d = [&](Mask s) { return d_set.count(s) != 0; };

  // Every edge whose 2-partition lies inside D is itself a length-1 exact
  // path between members of D, and every exact path inside D is a chain of
  // such steps; so the induced edge set is exactly these edges.
  std::vector<std::pair<Mask, long long>> kept;
  for (const auto& [e, mult] : h.edges()) {
    bool used = false;
    for (const auto& [a, b] : partitions2(e))
      if (in_d(a) && in_d(b)) {
        used = true;
        break;
      }
    if (used) kept.emplace_back(e, mult);
  }

  for (Mask s : d_set) {
    if (mask_size(s) <= 1) continue;
    bool has_neighbor = false;
    for (Mask t : d_set)
      if (t != s && (s & t) == 0 && h.multiplicity(s | t) > 0) {
        has_neighbor = true;
        break;
      }
    if (!has_neighbor)
      fail(ErrorCode::InvalidInput,
           "invalid induce set: " + h.part_string(s) + " has no neighbor in D");
  }

  Mask vertices = 0;
  for (const auto& [e, mult] : kept) vertices |= e;
  for (Mask s : d_set)
    if (mask_size(s) == 1) vertices |= s;

  std::vector<std::pair<std::vector<std::string>, long long>> token_edges;
  for (const auto& [e, mult] : kept) token_edges.emplace_back(h.part_tokens(e), mult);
  return Hypergraph::from_token_edges(token_edges, h.part_tokens(vertices));
}

DEPartition de_components(const Hypergraph& h) {
  AssociatedGraph g = build_associated_graph(h);

  DEPartition p;
  p.class_count = g.component_count;
  p.classes.assign(g.component_count, {});
  for (int i = 0; i < g.k; ++i) p.classes[g.component[i]].push_back(i);
  p.is_trivial.assign(g.component_count, 0);
  p.has_odd_exact_cycle.assign(g.component_count, 0);
  for (int c = 0; c < g.component_count; ++c) {
    const auto& members = p.classes[c];
    p.is_trivial[c] =
        members.size() == 1 && mask_size(g.parts[members[0]]) == 1 && g.adj[members[0]].empty();
    p.has_odd_exact_cycle[c] = g.component_bipartite[c] ? 0 : 1;
  }

  // Group classes by equality of the induced exact subhypergraphs.
  p.induced.reserve(g.component_count);
  for (int c = 0; c < g.component_count; ++c) {
    std::vector<Mask> d;
    for (int i : p.classes[c]) d.push_back(g.parts[i]);
    p.induced.push_back(exact_subhypergraph(h, d));
  }
  p.equality_group.assign(g.component_count, -1);
  for (int c = 0; c < g.component_count; ++c) {
    if (p.equality_group[c] != -1) continue;
    int gid = p.equality_group_count++;
    p.equality_group[c] = gid;
    for (int c2 = c + 1; c2 < g.component_count; ++c2)
      if (p.equality_group[c2] == -1 && p.induced[c2] == p.induced[c]) p.equality_group[c2] = gid;
  }
  return p;
}

}  // namespace unihyp
