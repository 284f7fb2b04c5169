// Acceptance suite: one PASS/FAIL line per criterion, exit code = number of
// failures. Criteria run against deterministic enumeration corpora:
//   corpus A = all simple hypergraphs on {1..4} (edge sizes 2..4, any count)
//            + all simple hypergraphs on {1..5} with at most two edges.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "test_helpers.hpp"
#include "unihyp/hg_format.hpp"
#include "unihyp/invariants.hpp"
#include "unihyp/spectra.hpp"
#include "unihyp/verify.hpp"

using namespace unihyp;
using namespace unihyp::testing;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {
    start_ = std::chrono::steady_clock::now();
  }

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass_ = false;
      if (!first_failure_.empty()) return;
      first_failure_ = what;
    }
  }

  void info(const std::string& note) { notes_.push_back(note); }

  bool finish(double budget_seconds = 0.0) {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
      pass_ = false;
      if (first_failure_.empty())
        first_failure_ = "runtime " + std::to_string(elapsed) + "s exceeds budget";
    }
    std::printf("[%s] criterion %d: %s (%.2fs)\n", pass_ ? "PASS" : "FAIL", number_,
                title_.c_str(), elapsed);
    for (const auto& n : notes_) std::printf("       %s\n", n.c_str());
    if (!pass_) {
      std::printf("       first failure: %s\n", first_failure_.c_str());
      ++failures;
    }
    return pass_;
  }

 private:
  int number_;
  std::string title_;
  bool pass_ = true;
  std::string first_failure_;
  std::vector<std::string> notes_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<Hypergraph> corpus_a() {
  std::vector<Hypergraph> all = enumerate_hypergraphs_vec({.n = 4, .max_edge_size = 4, .max_edges = -1});
  std::vector<Hypergraph> five = enumerate_hypergraphs_vec({.n = 5, .max_edge_size = 5, .max_edges = 2});
  all.insert(all.end(), five.begin(), five.end());
  return all;
}

void criterion1() {
  Criterion c(1, "published distance vectors reproduce exactly");
  PathContext ten(uni_connected_ten());
  c.require(ten.vertex_distance("1", "4", DistanceMode::UD) == 2, "ud(1,4) != 2");
  c.require(ten.vertex_distance("4", "6", DistanceMode::UD) == 2, "ud(4,6) != 2");
  int ud16 = ten.vertex_distance("1", "6", DistanceMode::UD);
  c.require(ud16 == 5, "ud(1,6) != 5 (computed " + std::to_string(ud16) + ")");
  c.require(ten.vertex_distance("1", "4", DistanceMode::SUD) == 2, "sud(1,4) != 2");
  c.require(ten.vertex_distance("4", "6", DistanceMode::SUD) == 2, "sud(4,6) != 2");
  int sud16 = ten.vertex_distance("1", "6", DistanceMode::SUD);
  c.require(sud16 == 5, "sud(1,6) != 5 (computed " + std::to_string(sud16) + ")");
  if (ud16 != 5 || sud16 != 5) {
    c.info("the published ud(1,6) = sud(1,6) = 5 contradicts the definition: the");
    c.info("unified paths {1,2},{3},{5,6} (length 2, edges {1,2,3},{3,5,6}) and");
    c.info("{1},{2},{3,4},{5},{6} (length 4) have pairwise disjoint parts and");
    c.info("distinct edges; every other published vector below reproduces");
  }

  PathContext fourteen(inter_uni_fourteen(), SearchOptions{.k_cap = 40});
  c.require(fourteen.vertex_distance("1", "6", DistanceMode::IUD) == 3, "iud(1,6) != 3");
  c.require(fourteen.vertex_distance("6", "14", DistanceMode::IUD) == 2, "iud(6,14) != 2");
  c.require(fourteen.vertex_distance("1", "14", DistanceMode::IUD) == 6, "iud(1,14) != 6");

  Hypergraph four = deeply_edge_exact_four();
  PathContext ctx4(four);
  c.require(ctx4.set_distance(part_of(four, {"1", "4"}), part_of(four, {"2"}),
                              DistanceMode::EESD) == 1,
            "eesd({1,4},{2}) != 1");
  c.require(ctx4.set_distance(part_of(four, {"2"}), part_of(four, {"2", "4"}),
                              DistanceMode::EESD) == 2,
            "eesd({2},{2,4}) != 2");
  c.require(ctx4.set_distance(part_of(four, {"1", "4"}), part_of(four, {"2", "4"}),
                              DistanceMode::EESD) == 4,
            "eesd({1,4},{2,4}) != 4");
  c.finish(5.0);
}

void criterion2() {
  Criterion c(2, "DE-component example classes and nullity");
  // The published class list forces the edge {5,6}; the spec's reconstruction
  // without it splits {{5},{6},{4,5},{4,6}} into two classes (see the
  // decisions ledger).
  Hypergraph h = six_vertex_paper_example();
  DEPartition de = de_components(h);
  c.require(de.class_count == 4, "class count != 4");
  AssociatedGraph g = build_associated_graph(h);
  std::set<std::set<Mask>> got;
  for (const auto& cls : de.classes) {
    std::set<Mask> s;
    for (int i : cls) s.insert(g.parts[i]);
    got.insert(s);
  }
  std::set<std::set<Mask>> want = {
      {part_of(h, {"1"}), part_of(h, {"2", "3"})},
      {part_of(h, {"2"}), part_of(h, {"1", "3"})},
      {part_of(h, {"3"}), part_of(h, {"4"}), part_of(h, {"1", "2"}), part_of(h, {"5", "6"})},
      {part_of(h, {"5"}), part_of(h, {"6"}), part_of(h, {"4", "5"}), part_of(h, {"4", "6"})},
  };
  c.require(got == want, "class membership differs from the published list");

  IntMat ul = unified_laplacian(h);
  Spectrum s = eigenvalues_sym(to_real(ul));
  c.require(multiplicity_of(s, 0.0) == 4, "numeric multiplicity of 0 != 4");
  c.require(eigen_multiplicity_exact(ul, 0) == 4, "exact nullity != 4");

  DEPartition spec_variant = de_components(six_vertex_three_edges());
  c.require(spec_variant.class_count == 5,
            "three-edge variant should split into five classes");
  c.info("edge multiset {123,34,456} alone yields 5 classes; {5,6} added per the paper");
  c.finish(1.0);
}

void criterion3() {
  Criterion c(3, "trace identities hold exactly on the enumeration corpus");
  std::vector<Hypergraph> corpus = corpus_a();
  c.info("corpus size: " + std::to_string(corpus.size()));
  c.require(corpus.size() >= 500, "corpus too small");
  long long checked = 0;
  for (const Hypergraph& h : corpus) {
    IndexSet idx = index_set(h);
    if (idx.k == 0) continue;
    DegreeTable deg = degrees(h, idx);
    long long vol = volume_total(deg);
    long long tauw = 0, tau2 = 0;
    for (const auto& [e, mult] : h.edges()) {
      tauw += mult * tau_size(mask_size(e));
      tau2 += 2 * mult * mult * tau_size(mask_size(e));
    }
    IntMat ul = unified_laplacian(h, idx);
    IntMat uq = unified_signless_laplacian(h, idx);
    if (trace(ul) != Int(vol) || vol != 2 * tauw) {
      c.require(false, "Laplacian trace identity failed on " + emit_hg(h));
      break;
    }
    long long sq = tau2;
    for (int v = 0; v < h.vertex_count(); ++v) {
      long long dv = vertex_degree(h, v);
      sq += dv * dv;
    }
    for (int i = 0; i < idx.k; ++i)
      if (mask_size(idx.parts[i]) > 1) sq += deg.d_star[i] * deg.d_star[i];
    if (trace(ul * ul) != Int(sq)) {
      c.require(false, "Laplacian square trace identity failed on " + emit_hg(h));
      break;
    }
    if (trace(uq) != Int(vol)) {
      c.require(false, "signless trace identity failed on " + emit_hg(h));
      break;
    }
    // sum of normalized eigenvalues = k - t, exactly as the diagonal count
    DEPartition de = de_components(h);
    int t = 0;
    for (char flag : de.is_trivial) t += flag;
    int nonisolated = 0;
    for (int i = 0; i < idx.k; ++i) nonisolated += deg.d_star[i] > 0;
    if (nonisolated != idx.k - t) {
      c.require(false, "normalized trace identity failed on " + emit_hg(h));
      break;
    }
    // float agreement for all three spectra
    auto float_sum = [](const Spectrum& s) {
      double sum = 0;
      for (double x : s.values) sum += x;
      return sum;
    };
    bool float_ok =
        std::abs(float_sum(eigenvalues_sym(to_real(ul))) - static_cast<double>(vol)) <=
            1e-8 * (1.0 + std::abs(static_cast<double>(vol))) &&
        std::abs(float_sum(eigenvalues_sym(to_real(uq))) - static_cast<double>(vol)) <=
            1e-8 * (1.0 + std::abs(static_cast<double>(vol))) &&
        std::abs(float_sum(eigenvalues_sym(unified_normalized_laplacian(h, idx, deg))) -
                 static_cast<double>(idx.k - t)) <= 1e-8 * (1.0 + idx.k);
    if (!float_ok) {
      c.require(false, "float trace agreement failed on " + emit_hg(h));
      break;
    }
    ++checked;
  }
  c.info("instances checked: " + std::to_string(checked));
  c.finish(60.0);
}

void criterion4() {
  Criterion c(4, "matrix-tree analog against the deletion-contraction oracle");
  int checked = 0;
  for (const Hypergraph& h : corpus_a()) {
    if (!h.is_simple()) continue;
    AssociatedGraph g = build_associated_graph(h);
    if (g.k > 10 || g.component_count != 1) continue;
    Int cof = exact_spanning_pairs_count(h);
    Int dc = spanning_count_dc(multigraph_of(g));
    if (cof != dc) {
      c.require(false, "cofactor != oracle on " + emit_hg(h));
      break;
    }
    Spectrum s = eigenvalues_sym(to_real(unified_laplacian(h)));
    double product = 1.0;
    for (int i = 0; i + 1 < g.k; ++i) product *= s.values[i];
    product /= g.k;
    double cd = static_cast<double>(cof);
    if (cd > 0 && std::abs(product - cd) > 1e-6 * cd) {
      c.require(false, "eigenvalue product mismatch on " + emit_hg(h));
      break;
    }
    ++checked;
  }
  c.info("deeply connected instances with k <= 10: " + std::to_string(checked));
  c.require(checked >= 50, "too few applicable instances");
  c.finish(120.0);
}

void criterion5() {
  Criterion c(5, "xi_k = 0 iff no odd exact cycle; equal charpolys when bipartite");
  int charpoly_checked = 0, iff_checked = 0;
  for (const Hypergraph& h : corpus_a()) {
    IndexSet idx = index_set(h);
    if (idx.k == 0 || !h.is_simple()) continue;
    AssociatedGraph g = build_associated_graph(h, idx);
    bool odd = false;
    for (char b : g.component_bipartite) odd |= !b;
    IntMat uq = unified_signless_laplacian(h, idx);

    bool nontrivial = !(h.vertex_count() == 1 && h.edges().empty());
    if (nontrivial && g.component_count == 1) {
      Spectrum s = eigenvalues_sym(to_real(uq));
      bool xik_zero = std::abs(s.values[idx.k - 1]) <= s.scaled_tol(1e-8);
      if (xik_zero == odd) {
        c.require(false, "xi_k zero test disagrees with odd exact cycles on " + emit_hg(h));
        break;
      }
      ++iff_checked;
    }
    if (!odd) {
      if (char_poly_exact(uq) != char_poly_exact(unified_laplacian(h, idx))) {
        c.require(false, "charpoly mismatch on " + emit_hg(h));
        break;
      }
      ++charpoly_checked;
    }
  }
  c.info("iff instances: " + std::to_string(iff_checked) +
         ", charpoly instances: " + std::to_string(charpoly_checked));
  c.require(iff_checked >= 100 && charpoly_checked >= 100, "too few applicable instances");
  c.finish(60.0);
}

void criterion6() {
  Criterion c(6, "Cheeger sandwich on deeply connected simple instances");
  int checked = 0;
  for (const Hypergraph& h : corpus_a()) {
    if (!h.is_simple()) continue;
    IndexSet idx = index_set(h);
    if (idx.k < 2 || idx.k > 14) continue;
    AssociatedGraph g = build_associated_graph(h, idx);
    if (g.component_count != 1) continue;
    double uc = static_cast<double>(cheeger_constant(h, 14).value);
    Spectrum s = eigenvalues_sym(unified_normalized_laplacian(h, idx, degrees(h, idx)));
    double lam = s.values[idx.k - 2];
    double tol = s.scaled_tol(1e-8);
    bool ok = uc * uc < 2.0 * lam + tol && 2.0 * lam <= 4.0 * uc + tol &&
              lam > 1.0 - std::sqrt(std::max(0.0, 1.0 - uc * uc)) - tol;
    if (!ok) {
      c.require(false, "sandwich failed on " + emit_hg(h));
      break;
    }
    ++checked;
  }
  c.info("instances: " + std::to_string(checked));
  c.require(checked >= 50, "too few applicable instances");
  c.finish(120.0);
}

void criterion7() {
  Criterion c(7, "edge-deletion interlacing chains on constructed instances");
  int pair_branch = 0, shifted_branch = 0;
  bool all_hold = true;
  std::string first_bad;

  auto run_case = [&](const Hypergraph& h, Mask e, long long r) {
    InterlacingReport rep = interlacing_check(h, e, r, 1e-8);
    if (!rep.applicable) return;
    if (rep.pair_branch)
      ++pair_branch;
    else
      ++shifted_branch;
    if (!(rep.laplacian_holds && rep.signless_holds) && first_bad.empty()) {
      all_hold = false;
      first_bad = emit_hg(h);
    }
  };

  // duplicated edges: removing one copy always preserves I(H)
  for (const Hypergraph& base : enumerate_hypergraphs_vec({.n = 4, .max_edge_size = 3, .max_edges = 2})) {
    if (base.edges().empty()) continue;
    for (const auto& [e, mult] : base.edges()) {
      std::vector<std::pair<std::vector<std::string>, long long>> edges;
      for (const auto& [f, m] : base.edges())
        edges.emplace_back(base.part_tokens(f), f == e ? m + 1 : m);
      Hypergraph doubled = Hypergraph::from_token_edges(edges, base.tokens());
      run_case(doubled, e, 1);
    }
  }
  // full removals that a larger edge keeps covered
  for (const Hypergraph& base : enumerate_hypergraphs_vec({.n = 4, .max_edge_size = 4, .max_edges = 2})) {
    for (const auto& [e, mult] : base.edges()) run_case(base, e, mult);
  }
  // r = 2 against triple-multiplicity edges (the 4r shift on the chain)
  for (const Hypergraph& base : enumerate_hypergraphs_vec({.n = 4, .max_edge_size = 3, .max_edges = 1})) {
    for (const auto& [e, mult] : base.edges()) {
      Hypergraph tripled = Hypergraph::from_token_edges({{base.part_tokens(e), 3}}, base.tokens());
      run_case(tripled, e, 2);
    }
  }

  c.require(all_hold, "chain violated on " + first_bad);
  c.info("pair-branch instances: " + std::to_string(pair_branch) +
         ", shifted-branch instances: " + std::to_string(shifted_branch));
  c.require(pair_branch + shifted_branch >= 50, "fewer than 50 applicable instances");
  c.require(pair_branch >= 10 && shifted_branch >= 10, "a branch is under-covered");
  c.finish(0.0);
}

void criterion8() {
  Criterion c(8, "verification suite has zero hard failures on the corpus");
  long long hard = 0, audit = 0, instances = 0;
  std::string first_bad;
  VerifyOptions opts;
  for (const Hypergraph& h : corpus_a()) {
    if (index_set(h).k == 0) continue;
    VerificationReport rep = bound_suite(h, opts);
    hard += rep.hard_failures;
    audit += rep.audit_failures;
    if (rep.hard_failures > 0 && first_bad.empty()) {
      for (const auto& r : rep.records)
        if (r.hypothesis && !r.holds && !r.audit_only) {
          first_bad = r.id + " on " + emit_hg(h);
          break;
        }
    }
    ++instances;
  }
  c.info("instances: " + std::to_string(instances) +
         ", audit-only failures logged: " + std::to_string(audit));
  c.require(hard == 0, "hard failures: " + std::to_string(hard) + "; first: " + first_bad);
  c.finish(0.0);
}

void criterion9() {
  Criterion c(9, "unified cospectral pair: three K2 vs the complete 3-vertex hypergraph");
  Hypergraph three_k2 = Hypergraph::from_tokens({{"1", "2"}, {"3", "4"}, {"5", "6"}});
  Hypergraph three_edge = single_three_edge();
  std::vector<Hypergraph> family = {three_k2, three_edge, triangle_k3(), path_p4()};
  CospectralCatalog catalog = cospectral_scan(family, MatrixKind::U);
  int flagged = 0;
  bool pair_found = false;
  for (const auto& g : catalog.groups) {
    if (!g.nonisomorphic_cospectral) continue;
    ++flagged;
    bool has_k2 = false, has_edge = false;
    for (const auto& m : g.members) {
      has_k2 |= m.hg == emit_hg(three_k2);
      has_edge |= m.hg == emit_hg(three_edge);
    }
    pair_found = has_k2 && has_edge && g.iso_class_count == 2;
  }
  c.require(flagged == 1, "expected exactly one flagged group");
  c.require(pair_found, "the published pair was not flagged");
  c.require(char_poly_exact(unified_matrix(three_k2)) ==
                char_poly_exact(unified_matrix(three_edge)),
            "unified charpolys differ");
  c.finish(0.0);
}

void criterion10() {
  Criterion c(10, "verify output is byte-identical across runs");
  // library level: serialize two reports
  {
    std::ostringstream a, b;
    for (const Hypergraph& h : {six_vertex_paper_example(), uni_connected_ten(), triangle_k3()}) {
      VerificationReport rep = bound_suite(h);
      for (const auto& r : rep.records)
        a << r.id << '|' << r.hypothesis << '|' << r.holds << '|' << r.lhs << '|' << r.rhs << '\n';
    }
    for (const Hypergraph& h : {six_vertex_paper_example(), uni_connected_ten(), triangle_k3()}) {
      VerificationReport rep = bound_suite(h);
      for (const auto& r : rep.records)
        b << r.id << '|' << r.hypothesis << '|' << r.holds << '|' << r.lhs << '|' << r.rhs << '\n';
    }
    c.require(a.str() == b.str(), "library reports differ between runs");
  }
  // CLI level over a multi-file corpus
  {
    std::vector<Hypergraph> corpus = {six_vertex_paper_example(), uni_connected_ten(),
                                      deeply_edge_exact_four(), triangle_k3(),
                                      single_three_edge()};
    std::string file_args;
    for (size_t i = 0; i < corpus.size(); ++i) {
      std::string name = "acceptance_corpus_" + std::to_string(i) + ".hg";
      std::ofstream out(name);
      out << emit_hg(corpus[i]);
      file_args += " " + name;
    }
    auto run = [&]() {
      std::string cmd = std::string(UNIHYP_CLI_PATH) + " verify" + file_args + " 2>/dev/null";
      std::string output;
      std::array<char, 4096> buf{};
      FILE* pipe = popen(cmd.c_str(), "r");
      if (!pipe) return std::string();
      size_t n;
      while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
      pclose(pipe);
      return output;
    };
    std::string first = run(), second = run();
    c.require(!first.empty() && first == second, "CLI verify runs differ");
  }
  c.finish(0.0);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criterion(s) failed\n", failures);
  return failures;
}
