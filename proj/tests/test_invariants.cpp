#include <doctest.h>

#include "oracles.hpp"
#include "test_helpers.hpp"
#include "unihyp/invariants.hpp"

using namespace unihyp;
using namespace unihyp::testing;

TEST_CASE("exact spanning pair counts") {
  CHECK(exact_spanning_pairs_count(edge_k2()) == 1);
  CHECK(exact_spanning_pairs_count(triangle_k3()) == 3);
  CHECK(exact_spanning_pairs_count(single_three_edge()) == 0);
  Hypergraph multi = Hypergraph::from_token_edges({{{"1", "2"}, 2}});
  CHECK_THROWS_AS(exact_spanning_pairs_count(multi), Error);
}

TEST_CASE("spanning pair enumeration matches the count") {
  auto k2_pairs = enumerate_exact_spanning_pairs(edge_k2(), 10);
  REQUIRE(k2_pairs.size() == 1);
  CHECK(k2_pairs[0].subhypergraph == edge_k2());
  REQUIRE(k2_pairs[0].partition_set.size() == 1);

  CHECK(enumerate_exact_spanning_pairs(triangle_k3(), 10).size() == 3);
  CHECK(enumerate_exact_spanning_pairs(single_three_edge(), 10).empty());
  CHECK_THROWS_AS(enumerate_exact_spanning_pairs(triangle_k3(), 2), Error);
}

TEST_CASE("spanning pairs restore the full index set") {
  Hypergraph h = deeply_edge_exact_four();
  Int count = exact_spanning_pairs_count(h);
  auto pairs = enumerate_exact_spanning_pairs(h, 100000);
  CHECK(Int(static_cast<long long>(pairs.size())) == count);
  IndexSet idx = index_set(h);
  for (const auto& p : pairs) {
    CHECK(p.partition_set.size() == static_cast<size_t>(idx.k - 1));
    CHECK(index_set(p.subhypergraph).parts == idx.parts);
  }
}

TEST_CASE("cofactor equals the deletion-contraction oracle") {
  EnumerationOptions opts;
  opts.n = 4;
  opts.max_edge_size = 4;
  opts.max_edges = 4;
  int tested = 0;
  enumerate_hypergraphs(opts, [&](const Hypergraph& h) {
    AssociatedGraph g = build_associated_graph(h);
    if (g.k > 10) return true;
    Int dc = spanning_count_dc(multigraph_of(g));
    CHECK(exact_spanning_pairs_count(h) == dc);
    ++tested;
    return tested < 250;
  });
  CHECK(tested >= 200);
}

TEST_CASE("cheeger constants of small graphs") {
  CHECK(cheeger_constant(edge_k2()).value == Rat(1));
  CHECK(cheeger_constant(triangle_k3()).value == Rat(1));
  // P3: every proper subset gives quotient 1 (exhaustive over all six)
  CHECK(cheeger_constant(path_p3()).value == Rat(1));
  // P4: X = {1,2} gives boundary 1 over min(3, 3)
  CHECK(cheeger_constant(path_p4()).value == Rat(1, 3));
  CHECK_THROWS_AS(cheeger_constant(single_three_edge()), Error);          // not deeply connected
  CHECK_THROWS_AS(cheeger_constant(uni_connected_ten(), 10), Error);      // cap
}

TEST_CASE("subset distances") {
  Hypergraph k3 = triangle_k3();
  PathContext ctx(k3);
  CHECK(ctx.subset_distance({part_of(k3, {"1"})}, {part_of(k3, {"2"}), part_of(k3, {"3"})}) == 1);
  CHECK(ctx.subset_distance({part_of(k3, {"1"})}, {part_of(k3, {"1"})}) == 0);

  Hypergraph three = single_three_edge();
  PathContext ctx3(three);
  CHECK(ctx3.subset_distance({part_of(three, {"1"})}, {part_of(three, {"2"})}) == kInfDistance);
}

TEST_CASE("enumeration counts") {
  EnumerationOptions two{.n = 2, .max_edge_size = 2, .max_edges = 1};
  CHECK(enumerate_hypergraphs_vec(two).size() == 2);

  EnumerationOptions three_one{.n = 3, .max_edge_size = 3, .max_edges = 1};
  CHECK(enumerate_hypergraphs_vec(three_one).size() == 5);

  EnumerationOptions three_all{.n = 3, .max_edge_size = 3, .max_edges = -1};
  CHECK(enumerate_hypergraphs_vec(three_all).size() == 16);

  EnumerationOptions bad{.n = 9, .max_edge_size = 3, .max_edges = 1};
  CHECK_THROWS_AS(enumerate_hypergraphs_vec(bad), Error);
}

TEST_CASE("enumeration is deterministic and respects iso rejection") {
  EnumerationOptions opts{.n = 3, .max_edge_size = 3, .max_edges = -1};
  auto a = enumerate_hypergraphs_vec(opts);
  auto b = enumerate_hypergraphs_vec(opts);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

  opts.iso_reject = true;
  auto reduced = enumerate_hypergraphs_vec(opts);
  CHECK(reduced.size() < a.size());
  // n=3: empty, one pair, two pairs, three pairs, the triple, triple+1, +2, +3
  CHECK(reduced.size() == 8);
}

TEST_CASE("isomorphism") {
  Hypergraph a = from_edges({{"1", "2"}, {"2", "3"}});
  Hypergraph b = from_edges({{"2", "3"}, {"1", "3"}});
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, triangle_k3()));
  CHECK_FALSE(isomorphic(edge_k2(), single_three_edge()));  // different vertex counts
  CHECK(canonical_encoding(a) == canonical_encoding(b));
  CHECK(canonical_encoding(a) != canonical_encoding(triangle_k3()));
}

TEST_CASE("three disjoint K2 and the single 3-edge are unified-cospectral") {
  Hypergraph three_k2 = from_edges({{"1", "2"}, {"3", "4"}, {"5", "6"}});
  Hypergraph three_edge = single_three_edge();
  CospectralCatalog catalog = cospectral_scan({three_k2, three_edge, triangle_k3()}, MatrixKind::U);
  int flagged = 0;
  for (const auto& g : catalog.groups) {
    if (g.nonisomorphic_cospectral) {
      ++flagged;
      CHECK(g.members.size() == 2);
      CHECK(g.iso_class_count == 2);
    }
  }
  CHECK(flagged == 1);
}

TEST_CASE("distinct laplacian polynomials split into singleton groups") {
  Hypergraph p4 = path_p4();
  Hypergraph k3_plus_iso = from_edges({{"1", "2"}, {"1", "3"}, {"2", "3"}}, {"4"});
  CospectralCatalog catalog = cospectral_scan({p4, k3_plus_iso}, MatrixKind::UL);
  CHECK(catalog.groups.size() == 2);
  for (const auto& g : catalog.groups) CHECK_FALSE(g.nonisomorphic_cospectral);
}

TEST_CASE("charpolys are invariant under vertex relabeling") {
  // relabeled instances are isomorphic, so every exact polynomial key agrees
  EnumerationOptions opts{.n = 4, .max_edge_size = 4, .max_edges = 3};
  int count = 0;
  enumerate_hypergraphs(opts, [&](const Hypergraph& h) {
    if (h.edges().empty()) return true;
    // relabel 1<->4, 2<->3 via tokens
    std::vector<std::pair<std::vector<std::string>, long long>> edges;
    auto swap_token = [](const std::string& t) {
      if (t == "1") return std::string("4");
      if (t == "4") return std::string("1");
      if (t == "2") return std::string("3");
      if (t == "3") return std::string("2");
      return t;
    };
    for (const auto& [e, mult] : h.edges()) {
      std::vector<std::string> toks;
      for (const auto& t : h.part_tokens(e)) toks.push_back(swap_token(t));
      edges.emplace_back(toks, mult);
    }
    Hypergraph g = Hypergraph::from_token_edges(edges, {"1", "2", "3", "4"});
    CHECK(char_poly_exact(unified_matrix(h)) == char_poly_exact(unified_matrix(g)));
    CHECK(char_poly_exact(unified_laplacian(h)) == char_poly_exact(unified_laplacian(g)));
    CHECK(isomorphic(h, g));
    return ++count < 60;
  });
  CHECK(count >= 50);
}

TEST_CASE("normalized scan uses the exact rational polynomial") {
  // 3 K2 and the 3-edge share the normalized spectrum as well
  Hypergraph three_k2 = from_edges({{"1", "2"}, {"3", "4"}, {"5", "6"}});
  CospectralCatalog catalog = cospectral_scan({three_k2, single_three_edge()}, MatrixKind::UNL);
  REQUIRE(catalog.groups.size() == 1);
  CHECK(catalog.groups[0].nonisomorphic_cospectral);
}
