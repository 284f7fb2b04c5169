#ifndef UNIHYP_CORE_HPP
#define UNIHYP_CORE_HPP

#include <unordered_map>
#include <utility>
#include <vector>

#include "unihyp/hypergraph.hpp"

namespace unihyp {

// All 2-partitions of e as {smaller, larger} pairs in canonical order of the
// smaller part. 2^(|e|-1) - 1 entries for |e| >= 2, none for a loop.
std::vector<std::pair<Mask, Mask>> partitions2(Mask e);

inline long long tau_size(int edge_cardinality) {
  return edge_cardinality >= 2 ? (1LL << (edge_cardinality - 1)) - 1 : 0;
}

// I(H): all parts of every edge plus all vertex singletons, deduplicated, in
// canonical order. pos maps a part back to its row index.
struct IndexSet {
  std::vector<Mask> parts;
  std::unordered_map<Mask, int> pos;
  int k = 0;

  int index_of(Mask part) const;  // throws InvalidIndex when absent
  bool contains(Mask part) const { return pos.count(part) != 0; }
};

IndexSet index_set(const Hypergraph& h);

// d = unified degree, d_star = modified unified degree, aligned with the
// IndexSet order. d_star differs from d only on non-singleton included edges.
struct DegreeTable {
  std::vector<long long> d;
  std::vector<long long> d_star;
};

DegreeTable degrees(const Hypergraph& h, const IndexSet& idx);

inline DegreeTable degrees(const Hypergraph& h) { return degrees(h, index_set(h)); }

// c such that S and S' partition c edge occurrences; 0 when they partition
// none. Symmetric.
long long neighbor_multiplicity(const Hypergraph& h, const IndexSet& idx, Mask s, Mask sp);

// Sum of d_star over the given parts; the parts must be elements of I(H).
long long volume(const Hypergraph& h, const IndexSet& idx, const DegreeTable& deg,
                 const std::vector<Mask>& parts);

long long volume_total(const DegreeTable& deg);  // vol(H)

// Common hypergraph invariants used by the verification records.
long long vertex_degree(const Hypergraph& h, int vertex);   // d_H(v), multiset count
long long max_vertex_degree(const Hypergraph& h);           // Delta(H)
long long min_vertex_degree(const Hypergraph& h);           // delta(H)
long long loop_multiplicity_sum(const Hypergraph& h);       // sum of m({v}) over loops
long long included_edge_occurrences(const Hypergraph& h);   // non-singleton included edges, with multiplicity
bool has_included_edges(const Hypergraph& h);
bool is_uniform(const Hypergraph& h, int* cardinality_out = nullptr);

}  // namespace unihyp

#endif
