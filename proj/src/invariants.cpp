#include "unihyp/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "unihyp/hg_format.hpp"

namespace unihyp {

namespace {

void require_simple(const Hypergraph& h, const char* what) {
  if (!h.is_simple())
    fail(ErrorCode::UnsupportedStructure, std::string(what) + " requires a simple hypergraph");
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Int exact_spanning_pairs_count(const Hypergraph& h) {
  require_simple(h, "exact spanning pair count");
  IndexSet idx = index_set(h);
  IntMat ul = unified_laplacian(h, idx);
  if (idx.k == 1) return 1;  // single part, empty product convention
  return cofactor_exact(ul, 0, 0);
}

std::vector<ExactSpanningPair> enumerate_exact_spanning_pairs(const Hypergraph& h,
                                                              long long limit) {
  require_simple(h, "exact spanning pair enumeration");
  Int count = exact_spanning_pairs_count(h);
  if (count > limit)
    fail(ErrorCode::Truncated,
         "exact spanning pair count " + count.str() + " exceeds limit " + std::to_string(limit));

  AssociatedGraph g = build_associated_graph(h);
  std::vector<ExactSpanningPair> out;
  if (g.component_count != 1) return out;  // no spanning trees
  if (g.k == 1) {
    ExactSpanningPair p;
    p.subhypergraph = h;
    out.push_back(std::move(p));
    return out;
  }

  int m = static_cast<int>(g.edges.size());
  std::vector<int> chosen;

  // connectivity still achievable with edges from `from` on?
  auto feasible = [&](int from, Dsu dsu) {
    int comps = 0;
    std::vector<char> seen(g.k, 0);
    for (int i = 0; i < g.k; ++i) {
      int r = dsu.find(i);
      if (!seen[r]) {
        seen[r] = 1;
        ++comps;
      }
    }
    for (int e = from; e < m && comps > 1; ++e)
      if (dsu.unite(g.edges[e].a, g.edges[e].b)) --comps;
    return comps == 1;
  };

  std::function<void(int, Dsu&, int)> rec = [&](int i, Dsu& dsu, int picked) {
    if (picked == g.k - 1) {
      ExactSpanningPair p;
      std::vector<std::pair<Mask, Mask>> d;
      std::set<Mask, CanonicalLess> used_edges;
      for (int e : chosen) {
        Mask a = g.parts[g.edges[e].a], b = g.parts[g.edges[e].b];
        d.emplace_back(a, b);
        used_edges.insert(g.edges[e].hyperedge);
      }
      std::vector<std::pair<std::vector<std::string>, long long>> sub_edges;
      for (Mask e : used_edges) sub_edges.emplace_back(h.part_tokens(e), 1);
      p.subhypergraph = Hypergraph::from_token_edges(sub_edges, h.tokens());
      p.partition_set = std::move(d);
      out.push_back(std::move(p));
      return;
    }
    if (i == m) return;
    // include edge i when it joins two components
    Dsu with = dsu;
    if (with.unite(g.edges[i].a, g.edges[i].b)) {
      chosen.push_back(i);
      rec(i + 1, with, picked + 1);
      chosen.pop_back();
    }
    // exclude edge i if a spanning tree is still reachable
    if (feasible(i + 1, dsu)) rec(i + 1, dsu, picked);
  };

  Dsu dsu(g.k);
  rec(0, dsu, 0);
  return out;
}

CheegerResult cheeger_constant(const Hypergraph& h, int k_cap) {
  require_simple(h, "unified Cheeger constant");
  IndexSet idx = index_set(h);
  if (idx.k < 2) fail(ErrorCode::InvalidInput, "Cheeger constant needs e-index >= 2");
  if (idx.k > k_cap)
    fail(ErrorCode::SizeCap, "Cheeger brute force refused: e-index " + std::to_string(idx.k) +
                                 " exceeds cap " + std::to_string(k_cap));
  AssociatedGraph g = build_associated_graph(h, idx);
  if (g.component_count != 1)
    fail(ErrorCode::InvalidInput, "Cheeger constant needs a deeply connected hypergraph");

  DegreeTable deg = degrees(h, idx);
  long long vol_total = volume_total(deg);

  int k = idx.k;
  std::vector<std::pair<int, int>> cuts;  // node pairs of G_H (simple, c = 1)
  cuts.reserve(g.edges.size());
  for (const auto& e : g.edges) cuts.emplace_back(e.a, e.b);

  // Fix part 0 inside X; X and X^c give the same quotient.
  std::uint64_t limit = 1ULL << (k - 1);
  long long best_num = -1, best_den = 1;
  std::uint64_t best_bits = 0;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    std::uint64_t x = (bits << 1) | 1ULL;
    if (x == ((1ULL << k) - 1)) continue;  // proper subset only
    long long volx = 0;
    for (std::uint64_t b = x; b != 0; b &= b - 1) volx += deg.d_star[std::countr_zero(b)];
    long long boundary = 0;
    for (const auto& [a, bb] : cuts)
      boundary += (((x >> a) ^ (x >> bb)) & 1ULL) != 0;
    long long den = std::min(volx, vol_total - volx);
    // deeply connected and proper => both sides have positive volume
    if (best_num < 0 || boundary * best_den < best_num * den) {
      best_num = boundary;
      best_den = den;
      best_bits = x;
    }
  }

  CheegerResult res;
  res.value = Rat(Int(best_num), Int(best_den));
  for (int i = 0; i < k; ++i)
    if ((best_bits >> i) & 1ULL) res.argmin.push_back(idx.parts[i]);
  return res;
}

void enumerate_hypergraphs(const EnumerationOptions& opts,
                           const std::function<bool(const Hypergraph&)>& callback) {
  if (opts.n < 1 || opts.n > 8)
    fail(ErrorCode::SizeCap, "enumeration supports 1 <= n <= 8");
  std::vector<Mask> candidates;
  Mask full = (opts.n == 64) ? ~Mask{0} : ((Mask{1} << opts.n) - 1);
  for (Mask m = 1; m <= full; ++m)
    if ((m & full) == m && mask_size(m) >= 2 && mask_size(m) <= opts.max_edge_size)
      candidates.push_back(m);
  std::sort(candidates.begin(), candidates.end(), canonical_less);

  long long cap = opts.max_edges < 0 ? static_cast<long long>(candidates.size())
                                     : std::min<long long>(opts.max_edges, candidates.size());

  std::set<std::string> seen;
  std::vector<std::pair<Mask, long long>> chosen;
  bool stopped = false;

  auto emit = [&]() {
    Hypergraph h = Hypergraph::from_masks(opts.n, chosen);
    if (opts.iso_reject) {
      std::string key = canonical_encoding(h);
      if (!seen.insert(key).second) return true;
    }
    return callback(h);
  };

  std::function<void(size_t, long long)> rec = [&](size_t from, long long remaining) {
    if (stopped) return;
    if (remaining == 0) return;
    for (size_t i = from; i < candidates.size() && !stopped; ++i) {
      chosen.emplace_back(candidates[i], 1);
      if (!emit()) {
        stopped = true;
      } else {
        rec(i + 1, remaining - 1);
      }
      chosen.pop_back();
    }
  };

  if (!emit()) return;  // the edgeless hypergraph
  rec(0, cap);
}

std::vector<Hypergraph> enumerate_hypergraphs_vec(const EnumerationOptions& opts) {
  std::vector<Hypergraph> out;
  enumerate_hypergraphs(opts, [&](const Hypergraph& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

namespace {

void require_small(const Hypergraph& h, const char* what) {
  if (h.vertex_count() > 8)
    fail(ErrorCode::SizeCap, std::string(what) + " supports at most 8 vertices");
}

std::vector<std::pair<Mask, long long>> permuted_edges(const Hypergraph& h,
                                                       const std::vector<int>& perm) {
  std::vector<std::pair<Mask, long long>> out;
  out.reserve(h.edges().size());
  for (const auto& [e, mult] : h.edges()) {
    Mask pm = 0;
    for (Mask b = e; b != 0; b &= b - 1) pm |= Mask{1} << perm[std::countr_zero(b)];
    out.emplace_back(pm, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return canonical_less(x.first, y.first);
    return x.second < y.second;
  });
  return out;
}

std::string encode_edges(const std::vector<std::pair<Mask, long long>>& edges, int n) {
  std::ostringstream os;
  os << n << ':';
  for (const auto& [m, mult] : edges) os << m << 'x' << mult << ';';
  return os.str();
}

}  // namespace

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edges().size() != b.edges().size()) return false;
  if (a.edge_occurrence_count() != b.edge_occurrence_count()) return false;
  auto size_profile = [](const Hypergraph& h) {
    std::vector<std::pair<int, long long>> p;
    for (const auto& [e, mult] : h.edges()) p.emplace_back(mask_size(e), mult);
    std::sort(p.begin(), p.end());
    return p;
  };
  if (size_profile(a) != size_profile(b)) return false;
  require_small(a, "isomorphism test");

  int n = a.vertex_count();
  std::vector<std::pair<Mask, long long>> target;
  {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    target = permuted_edges(b, id);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (permuted_edges(a, perm) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string canonical_encoding(const Hypergraph& h) {
  require_small(h, "canonical encoding");
  int n = h.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string enc = encode_edges(permuted_edges(h, perm), n);
    if (best.empty() || enc < best) best = enc;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) best = encode_edges({}, n);
  return best;
}

CospectralCatalog cospectral_scan(const std::vector<Hypergraph>& family, MatrixKind kind) {
  CospectralCatalog catalog;
  catalog.kind = kind;

  auto poly_key = [&](const Hypergraph& h) -> std::vector<std::string> {
    std::vector<std::string> out;
    if (kind == MatrixKind::UNL) {
      RatPoly p = normalized_char_poly_exact(h);
      for (const auto& c : p) {
        std::ostringstream os;
        os << c;
        out.push_back(os.str());
      }
      return out;
    }
    IndexSet idx = index_set(h);
    IntMat m;
    switch (kind) {
      case MatrixKind::U: m = unified_matrix(h, idx); break;
      case MatrixKind::UD: m = unified_degree_matrix(h, idx); break;
      case MatrixKind::UL: m = unified_laplacian(h, idx); break;
      case MatrixKind::UQ: m = unified_signless_laplacian(h, idx); break;
      default: fail(ErrorCode::KindError, "unsupported matrix kind for scan");
    }
    for (const auto& c : char_poly_exact(m)) out.push_back(c.str());
    return out;
  };

  std::map<std::string, CospectralCatalog::Group> groups;
  std::map<std::string, std::vector<const Hypergraph*>> group_members;
  for (const auto& h : family) {
    std::vector<std::string> key = poly_key(h);
    std::ostringstream os;
    // degree first so that keys sort by matrix order, then coefficients
    os << key.size() << '|';
    for (const auto& c : key) os << c << ',';
    std::string ks = os.str();
    auto& g = groups[ks];
    g.charpoly = key;
    group_members[ks].push_back(&h);
  }

  for (auto& [key, group] : groups) {
    const auto& members = group_members[key];
    std::vector<int> iso_class(members.size(), -1);
    int classes = 0;
    for (size_t i = 0; i < members.size(); ++i) {
      if (iso_class[i] != -1) continue;
      iso_class[i] = classes++;
      for (size_t j = i + 1; j < members.size(); ++j)
        if (iso_class[j] == -1 && isomorphic(*members[i], *members[j]))
          iso_class[j] = iso_class[i];
    }
    group.iso_class_count = classes;
    group.nonisomorphic_cospectral = members.size() >= 2 && classes >= 2;
    for (size_t i = 0; i < members.size(); ++i)
      group.members.push_back({emit_hg(*members[i]), iso_class[i]});
    catalog.groups.push_back(std::move(group));
  }
  return catalog;
}

}  // namespace unihyp
