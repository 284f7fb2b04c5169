#ifndef UNIHYP_INVARIANTS_HPP
#define UNIHYP_INVARIANTS_HPP

#include <functional>
#include <string>
#include <vector>

#include "unihyp/exact.hpp"
#include "unihyp/matrices.hpp"
#include "unihyp/paths.hpp"

namespace unihyp {

// Any cofactor of U^L; equals the number of exact spanning pairs, i.e. the
// number of spanning trees of G_H. Simple hypergraphs only.
Int exact_spanning_pairs_count(const Hypergraph& h);

struct ExactSpanningPair {
  Hypergraph subhypergraph;
  std::vector<std::pair<Mask, Mask>> partition_set;  // D, canonical order
};

// Enumerates the spanning trees of G_H and maps each through the bijection.
// Throws Truncated (message carries the exact count) when count > limit.
std::vector<ExactSpanningPair> enumerate_exact_spanning_pairs(const Hypergraph& h,
                                                              long long limit);

struct CheegerResult {
  Rat value;
  std::vector<Mask> argmin;  // a minimizing X (the side containing the first part)
};

// Exact brute-force minimum of |E^(X)| / min(vol X, vol X^c) over proper
// non-empty X subset of I(H). Requires simple, deeply connected, k <= cap.
CheegerResult cheeger_constant(const Hypergraph& h, int k_cap = 22);

struct EnumerationOptions {
  int n = 0;
  int max_edge_size = 0;
  long long max_edges = -1;  // -1 = unlimited
  bool iso_reject = false;
};

// All simple loopless hypergraphs on the labeled vertex set {1..n} with edge
// sizes in [2, max_edge_size] and at most max_edges edges, in deterministic
// order (edge count ascending, then lexicographic choice of candidate
// edges). The callback returns false to stop early. n <= 8.
void enumerate_hypergraphs(const EnumerationOptions& opts,
                           const std::function<bool(const Hypergraph&)>& callback);
std::vector<Hypergraph> enumerate_hypergraphs_vec(const EnumerationOptions& opts);

// Exact isomorphism by permutation search; both sides need <= 8 vertices.
bool isomorphic(const Hypergraph& a, const Hypergraph& b);

// Minimum edge-multiset encoding over all vertex relabelings; equal strings
// iff isomorphic. n <= 8.
std::string canonical_encoding(const Hypergraph& h);

struct CospectralCatalog {
  MatrixKind kind = MatrixKind::U;
  struct Member {
    std::string hg;     // HG text of the instance
    int iso_class = 0;  // within its group
  };
  struct Group {
    std::vector<std::string> charpoly;  // ascending coefficients, exact strings
    std::vector<Member> members;
    int iso_class_count = 0;
    bool nonisomorphic_cospectral = false;  // >= 2 iso classes
  };
  std::vector<Group> groups;  // sorted by charpoly key
};

// Groups a family by the exact characteristic polynomial of the chosen
// matrix; UNL uses the exact rational polynomial of the similar matrix
// D^-1 U^L. Within a group, members split into isomorphism classes.
CospectralCatalog cospectral_scan(const std::vector<Hypergraph>& family, MatrixKind kind);

}  // namespace unihyp

#endif
