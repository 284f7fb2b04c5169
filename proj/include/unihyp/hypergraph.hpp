#ifndef UNIHYP_HYPERGRAPH_HPP
#define UNIHYP_HYPERGRAPH_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "unihyp/errors.hpp"

namespace unihyp {

// Vertex subsets are bitmasks over dense vertex indices. Dense indices are
// assigned by sorting the vertex tokens, so every derived object (index set,
// matrix rows, JSON output) is reproducible for a given input.
using Mask = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int mask_size(Mask m) { return std::popcount(m); }
inline int lowest_vertex(Mask m) { return std::countr_zero(m); }

// Canonical part order: cardinality ascending, then lexicographic by the
// sorted member list. This is the row/column order of every matrix.
inline bool canonical_less(Mask a, Mask b) {
  int ca = std::popcount(a), cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  while (a != 0 && b != 0) {
    int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

struct CanonicalLess {
  bool operator()(Mask a, Mask b) const { return canonical_less(a, b); }
};

// Tokens that look like positive integers sort numerically and before all
// other tokens; the rest sort lexicographically.
bool token_is_number(const std::string& s);
bool token_less(const std::string& a, const std::string& b);

// Vertex set plus edge multiset. Edges are canonical subsets with an integer
// multiplicity; repeated insertions accumulate. Immutable once built.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Builds from token lists; edges may introduce vertices not listed in
  // extra_vertices. Throws InvalidInput on empty edges or duplicate members.
  static Hypergraph from_tokens(const std::vector<std::vector<std::string>>& edges,
                                const std::vector<std::string>& extra_vertices = {});
  static Hypergraph from_token_edges(
      const std::vector<std::pair<std::vector<std::string>, long long>>& edges,
      const std::vector<std::string>& extra_vertices = {});

  // Vertices 0..n-1 with tokens "1".."n".
  static Hypergraph from_masks(int n, const std::vector<std::pair<Mask, long long>>& edges);

  int vertex_count() const { return static_cast<int>(tokens_.size()); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  Mask full_mask() const {
    return tokens_.empty() ? 0 : (~Mask{0} >> (kMaxVertices - tokens_.size()));
  }

  // Canonical order, multiplicities >= 1.
  const std::vector<std::pair<Mask, long long>>& edges() const { return edges_; }
  long long multiplicity(Mask e) const;
  int distinct_edge_count() const { return static_cast<int>(edges_.size()); }
  long long edge_occurrence_count() const;  // |E(H)| as a multiset

  bool has_loops() const;
  bool has_multi_edges() const;
  bool is_simple() const { return !has_loops() && !has_multi_edges(); }

  // -1 when the token is unknown.
  int find_vertex(const std::string& token) const;

  std::vector<std::string> part_tokens(Mask part) const;
  std::string part_string(Mask part) const;  // "{a,b}" for messages

  bool operator==(const Hypergraph& other) const {
    return tokens_ == other.tokens_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> tokens_;                // sorted by token_less
  std::vector<std::pair<Mask, long long>> edges_;  // sorted by canonical_less
  std::unordered_map<Mask, long long> edge_lookup_;

  void finish(std::vector<std::pair<Mask, long long>> raw);
};

}  // namespace unihyp

#endif
