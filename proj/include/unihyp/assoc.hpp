#ifndef UNIHYP_ASSOC_HPP
#define UNIHYP_ASSOC_HPP

#include <utility>
#include <vector>

#include "unihyp/core.hpp"

namespace unihyp {

// The associated graph G_H: one node per element of I(H), and an edge of
// multiplicity c between S and S' whenever they 2-partition c edge
// occurrences. Requires a loopless hypergraph.
struct AssociatedGraph {
  struct Edge {
    int a = 0, b = 0;        // node indices, a < b in canonical order
    Mask hyperedge = 0;      // the edge of H this pair partitions (= parts union)
    int hyperedge_id = -1;   // index into Hypergraph::edges()
    long long mult = 1;      // c
  };

  int k = 0;
  std::vector<Mask> parts;  // = IndexSet order
  std::vector<Edge> edges;  // deterministic order (by hyperedge, then partition)
  std::vector<std::vector<int>> adj;  // incident edge ids per node

  std::vector<int> component;     // component id per node (0-based, by least node)
  int component_count = 0;
  std::vector<char> component_bipartite;

  long long node_degree(int i) const;     // counts multiplicities, equals d*(S_i)
  long long edge_occurrences() const;     // sum of mult over edges
  int other_end(int edge_id, int node) const {
    const Edge& e = edges[edge_id];
    return e.a == node ? e.b : e.a;
  }
};

AssociatedGraph build_associated_graph(const Hypergraph& h);
AssociatedGraph build_associated_graph(const Hypergraph& h, const IndexSet& idx);

// rho-classes of I(H) = connected components of G_H, with the trivial and
// odd-exact-cycle annotations, plus the grouping of classes whose induced
// exact subhypergraphs are equal.
struct DEPartition {
  std::vector<std::vector<int>> classes;  // node indices, each sorted; classes ordered by least node
  std::vector<char> is_trivial;
  std::vector<char> has_odd_exact_cycle;
  int class_count = 0;

  std::vector<int> equality_group;  // group id per class (equal induced subhypergraph)
  int equality_group_count = 0;
  std::vector<Hypergraph> induced;  // induced exact subhypergraph per class
};

DEPartition de_components(const Hypergraph& h);

// Subhypergraph induced by all exact paths whose parts lie in D, plus the
// vertices of the singletons of D. Every non-singleton member of D must have
// a neighbor inside D.
Hypergraph exact_subhypergraph(const Hypergraph& h, const std::vector<Mask>& d_parts);

}  // namespace unihyp

#endif
