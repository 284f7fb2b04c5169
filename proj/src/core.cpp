#include "unihyp/core.hpp"

#include <algorithm>
#include <set>

namespace unihyp {

std::vector<std::pair<Mask, Mask>> partitions2(Mask e) {
  if (e == 0) fail(ErrorCode::InvalidInput, "2-partitions of the empty set are undefined");
  int card = mask_size(e);
  std::vector<std::pair<Mask, Mask>> out;
  if (card < 2) return out;

  // Enumerate the parts containing the least vertex of e; that picks each
  // unordered partition exactly once.
  int low = lowest_vertex(e);
  Mask rest = e & ~(Mask{1} << low);
  // All subsets of rest, paired with the low bit.
  Mask sub = 0;
  do {
    Mask a = sub | (Mask{1} << low);
    if (a != e) {
      Mask b = e & ~a;
      if (canonical_less(b, a)) std::swap(a, b);
      out.emplace_back(a, b);
    }
    sub = (sub - rest) & rest;  // next subset of rest
  } while (sub != 0);

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return canonical_less(x.first, y.first);
    return canonical_less(x.second, y.second);
  });
  return out;
}

int IndexSet::index_of(Mask part) const {
  auto it = pos.find(part);
  if (it == pos.end()) fail(ErrorCode::InvalidIndex, "part is not an element of I(H)");
  return it->second;
}

IndexSet index_set(const Hypergraph& h) {
  std::set<Mask, CanonicalLess> parts;
  for (int v = 0; v < h.vertex_count(); ++v) parts.insert(Mask{1} << v);
  for (const auto& [e, mult] : h.edges())
    for (const auto& [a, b] : partitions2(e)) {
      parts.insert(a);
      parts.insert(b);
    }
  IndexSet idx;
  idx.parts.assign(parts.begin(), parts.end());
  idx.k = static_cast<int>(idx.parts.size());
  idx.pos.reserve(idx.parts.size());
  for (int i = 0; i < idx.k; ++i) idx.pos[idx.parts[i]] = i;
  return idx;
}

DegreeTable degrees(const Hypergraph& h, const IndexSet& idx) {
  DegreeTable t;
  t.d.assign(idx.k, 0);
  t.d_star.assign(idx.k, 0);
  for (int i = 0; i < idx.k; ++i) {
    Mask s = idx.parts[i];
    long long d = 0;
    for (const auto& [e, mult] : h.edges())
      if ((e & s) == s) d += mult;
    t.d[i] = d;
    long long m_s = h.multiplicity(s);
    t.d_star[i] = (mask_size(s) > 1 && m_s > 0) ? d - m_s : d;
  }
  return t;
}

long long neighbor_multiplicity(const Hypergraph& h, const IndexSet& idx, Mask s, Mask sp) {
  if (!idx.contains(s)) fail(ErrorCode::InvalidIndex, "part " + h.part_string(s) + " not in I(H)");
  if (!idx.contains(sp)) fail(ErrorCode::InvalidIndex, "part " + h.part_string(sp) + " not in I(H)");
  if ((s & sp) != 0 || s == sp) return 0;
  return h.multiplicity(s | sp);
}

long long volume(const Hypergraph& h, const IndexSet& idx, const DegreeTable& deg,
                 const std::vector<Mask>& parts) {
  if (parts.empty()) fail(ErrorCode::InvalidInput, "volume of the empty family is undefined");
  long long total = 0;
  for (Mask s : parts) total += deg.d_star[idx.index_of(s)];
  return total;
}

long long volume_total(const DegreeTable& deg) {
  long long total = 0;
  for (long long v : deg.d_star) total += v;
  return total;
}

long long vertex_degree(const Hypergraph& h, int vertex) {
  Mask bit = Mask{1} << vertex;
  long long d = 0;
  for (const auto& [e, mult] : h.edges())
    if (e & bit) d += mult;
  return d;
}

long long max_vertex_degree(const Hypergraph& h) {
  long long best = 0;
  for (int v = 0; v < h.vertex_count(); ++v) best = std::max(best, vertex_degree(h, v));
  return best;
}

long long min_vertex_degree(const Hypergraph& h) {
  if (h.vertex_count() == 0) return 0;
  long long best = vertex_degree(h, 0);
  for (int v = 1; v < h.vertex_count(); ++v) best = std::min(best, vertex_degree(h, v));
  return best;
}

long long loop_multiplicity_sum(const Hypergraph& h) {
  long long total = 0;
  for (const auto& [e, mult] : h.edges())
    if (mask_size(e) == 1) total += mult;
  return total;
}

long long included_edge_occurrences(const Hypergraph& h) {
  long long total = 0;
  for (const auto& [e, mult] : h.edges()) {
    if (mask_size(e) <= 1) continue;
    for (const auto& [f, fmult] : h.edges())
      if (f != e && (e & f) == e) {
        total += mult;
        break;
      }
  }
  return total;
}

bool has_included_edges(const Hypergraph& h) {
  for (const auto& [e, mult] : h.edges())
    for (const auto& [f, fmult] : h.edges())
      if (f != e && (e & f) == e) return true;
  return false;
}

bool is_uniform(const Hypergraph& h, int* cardinality_out) {
  if (h.edges().empty()) return false;
  int m = mask_size(h.edges().front().first);
  for (const auto& [e, mult] : h.edges())
    if (mask_size(e) != m) return false;
  if (cardinality_out) *cardinality_out = m;
  return true;
}

}  // namespace unihyp
