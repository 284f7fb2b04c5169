#include "unihyp/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace unihyp {

bool token_is_number(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

bool token_less(const std::string& a, const std::string& b) {
  bool na = token_is_number(a), nb = token_is_number(b);
  if (na != nb) return na;  // numbers first
  if (na) {
    if (a.size() != b.size()) return a.size() < b.size();  // no leading-zero tokens expected
    return a < b;
  }
  return a < b;
}

namespace {

std::vector<std::string> collect_tokens(
    const std::vector<std::pair<std::vector<std::string>, long long>>& edges,
    const std::vector<std::string>& extra) {
  std::set<std::string, decltype(&token_less)> all(&token_less);
  for (const auto& t : extra) all.insert(t);
  for (const auto& [members, mult] : edges)
    for (const auto& t : members) all.insert(t);
  return {all.begin(), all.end()};
}

}  // namespace

Hypergraph Hypergraph::from_tokens(const std::vector<std::vector<std::string>>& edges,
                                   const std::vector<std::string>& extra_vertices) {
  std::vector<std::pair<std::vector<std::string>, long long>> with_mult;
  with_mult.reserve(edges.size());
  for (const auto& e : edges) with_mult.emplace_back(e, 1);
  return from_token_edges(with_mult, extra_vertices);
}

Hypergraph Hypergraph::from_token_edges(
    const std::vector<std::pair<std::vector<std::string>, long long>>& edges,
    const std::vector<std::string>& extra_vertices) {
  Hypergraph h;
  h.tokens_ = collect_tokens(edges, extra_vertices);
  if (h.tokens_.size() > kMaxVertices)
    fail(ErrorCode::SizeCap, "hypergraph exceeds " + std::to_string(kMaxVertices) + " vertices");

  std::unordered_map<std::string, int> pos;
  for (int i = 0; i < static_cast<int>(h.tokens_.size()); ++i) pos[h.tokens_[i]] = i;

  std::vector<std::pair<Mask, long long>> raw;
  raw.reserve(edges.size());
  for (const auto& [members, mult] : edges) {
    if (members.empty()) fail(ErrorCode::InvalidInput, "empty edge");
    if (mult < 1) fail(ErrorCode::InvalidInput, "edge multiplicity must be >= 1");
    Mask m = 0;
    for (const auto& t : members) {
      Mask bit = Mask{1} << pos.at(t);
      if (m & bit) fail(ErrorCode::InvalidInput, "duplicate vertex '" + t + "' in edge");
      m |= bit;
    }
    raw.emplace_back(m, mult);
  }
  h.finish(std::move(raw));
  return h;
}

Hypergraph Hypergraph::from_masks(int n, const std::vector<std::pair<Mask, long long>>& edges) {
  if (n < 0 || n > kMaxVertices) fail(ErrorCode::SizeCap, "vertex count out of range");
  Hypergraph h;
  h.tokens_.reserve(n);
  std::vector<std::string> toks;
  for (int i = 1; i <= n; ++i) toks.push_back(std::to_string(i));
  std::sort(toks.begin(), toks.end(), &token_less);
  h.tokens_ = std::move(toks);
  Mask full = n == 0 ? 0 : (~Mask{0} >> (kMaxVertices - n));
  std::vector<std::pair<Mask, long long>> raw;
  for (auto [m, mult] : edges) {
    if (m == 0) fail(ErrorCode::InvalidInput, "empty edge");
    if ((m & ~full) != 0) fail(ErrorCode::InvalidInput, "edge uses vertex outside range");
    if (mult < 1) fail(ErrorCode::InvalidInput, "edge multiplicity must be >= 1");
    raw.emplace_back(m, mult);
  }
  h.finish(std::move(raw));
  return h;
}

void Hypergraph::finish(std::vector<std::pair<Mask, long long>> raw) {
  std::map<Mask, long long, CanonicalLess> acc;
  for (auto [m, mult] : raw) acc[m] += mult;
  edges_.assign(acc.begin(), acc.end());
  edge_lookup_.clear();
  for (const auto& [m, mult] : edges_) edge_lookup_[m] = mult;
}

long long Hypergraph::multiplicity(Mask e) const {
  auto it = edge_lookup_.find(e);
  return it == edge_lookup_.end() ? 0 : it->second;
}

long long Hypergraph::edge_occurrence_count() const {
  long long total = 0;
  for (const auto& [m, mult] : edges_) total += mult;
  return total;
}

bool Hypergraph::has_loops() const {
  for (const auto& [m, mult] : edges_)
    if (mask_size(m) == 1) return true;
  return false;
}

bool Hypergraph::has_multi_edges() const {
  for (const auto& [m, mult] : edges_)
    if (mult >= 2) return true;
  return false;
}

int Hypergraph::find_vertex(const std::string& token) const {
  auto it = std::lower_bound(tokens_.begin(), tokens_.end(), token, &token_less);
  if (it == tokens_.end() || *it != token) return -1;
  return static_cast<int>(it - tokens_.begin());
}

std::vector<std::string> Hypergraph::part_tokens(Mask part) const {
  std::vector<std::string> out;
  for (Mask m = part; m != 0; m &= m - 1) out.push_back(tokens_[std::countr_zero(m)]);
  return out;
}

std::string Hypergraph::part_string(Mask part) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Mask m = part; m != 0; m &= m - 1) {
    if (!first) os << ',';
    os << tokens_[std::countr_zero(m)];
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace unihyp
