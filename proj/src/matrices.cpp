#include "unihyp/matrices.hpp"

#include <cmath>

namespace unihyp {

std::string matrix_kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::U: return "U";
    case MatrixKind::UD: return "UD";
    case MatrixKind::UL: return "UL";
    case MatrixKind::UQ: return "UQ";
    case MatrixKind::UNL: return "UNL";
  }
  return "?";
}

MatrixKind matrix_kind_from_name(const std::string& name) {
  if (name == "U") return MatrixKind::U;
  if (name == "UD") return MatrixKind::UD;
  if (name == "UL") return MatrixKind::UL;
  if (name == "UQ") return MatrixKind::UQ;
  if (name == "UNL") return MatrixKind::UNL;
  fail(ErrorCode::InvalidInput, "unknown matrix kind '" + name + "'");
}

IntMat unified_matrix(const Hypergraph& h, const IndexSet& idx) {
  IntMat u(idx.k, idx.k);
  for (const auto& [e, mult] : h.edges()) {
    if (mask_size(e) == 1) {
      int i = idx.pos.at(e);
      u(i, i) = mult;
      continue;
    }
    for (const auto& [a, b] : partitions2(e)) {
      int i = idx.pos.at(a), j = idx.pos.at(b);
      u(i, j) += mult;
      u(j, i) += mult;
    }
  }
  return u;
}

IntMat unified_degree_matrix(const Hypergraph& h, const IndexSet& idx) {
  DegreeTable deg = degrees(h, idx);
  IntMat d(idx.k, idx.k);
  for (int i = 0; i < idx.k; ++i) d(i, i) = deg.d_star[i];
  return d;
}

IntMat unified_laplacian(const Hypergraph& h, const IndexSet& idx) {
  return unified_degree_matrix(h, idx) - unified_matrix(h, idx);
}

IntMat unified_signless_laplacian(const Hypergraph& h, const IndexSet& idx) {
  return unified_degree_matrix(h, idx) + unified_matrix(h, idx);
}

Eigen::MatrixXd unified_normalized_laplacian(const Hypergraph& h, const IndexSet& idx,
                                             const DegreeTable& deg) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(idx.k, idx.k);
  for (int i = 0; i < idx.k; ++i) {
    if (deg.d_star[i] == 0) continue;
    Mask s = idx.parts[i];
    long long loop = mask_size(s) == 1 ? h.multiplicity(s) : 0;
    m(i, i) = 1.0 - static_cast<double>(loop) / static_cast<double>(deg.d_star[i]);
  }
  for (const auto& [e, mult] : h.edges()) {
    if (mask_size(e) == 1) continue;
    for (const auto& [a, b] : partitions2(e)) {
      int i = idx.pos.at(a), j = idx.pos.at(b);
      double denom = std::sqrt(static_cast<double>(deg.d_star[i]) *
                               static_cast<double>(deg.d_star[j]));
      m(i, j) -= static_cast<double>(mult) / denom;
      m(j, i) = m(i, j);
    }
  }
  return m;
}

RationalNormalized normalized_similar_rational(const Hypergraph& h, const IndexSet& idx,
                                               const DegreeTable& deg) {
  std::vector<int> keep;
  for (int i = 0; i < idx.k; ++i)
    if (deg.d_star[i] > 0) keep.push_back(i);
  IntMat ul = unified_laplacian(h, idx);
  RationalNormalized out;
  out.stripped = idx.k - static_cast<int>(keep.size());
  out.block = RatMat(static_cast<int>(keep.size()), static_cast<int>(keep.size()));
  for (size_t r = 0; r < keep.size(); ++r)
    for (size_t c = 0; c < keep.size(); ++c)
      out.block(static_cast<int>(r), static_cast<int>(c)) =
          Rat(ul(keep[r], keep[c]), Int(deg.d_star[keep[r]]));
  return out;
}

RatPoly normalized_char_poly_exact(const Hypergraph& h) {
  IndexSet idx = index_set(h);
  DegreeTable deg = degrees(h, idx);
  RationalNormalized rn = normalized_similar_rational(h, idx, deg);
  RatPoly p = char_poly_exact(rn.block);
  // Isolated parts contribute eigenvalue 0: multiply by x^stripped.
  if (rn.stripped > 0) {
    RatPoly shifted(p.size() + rn.stripped);
    for (size_t i = 0; i < p.size(); ++i) shifted[i + rn.stripped] = p[i];
    p = std::move(shifted);
  }
  return p;
}

namespace {

void require_simple(const Hypergraph& h, const char* what) {
  if (!h.is_simple())
    fail(ErrorCode::UnsupportedStructure, std::string(what) + " requires a simple hypergraph");
}

}  // namespace

IntMat arc_incidence(const Hypergraph& h, const IndexSet& idx) {
  require_simple(h, "arc incidence matrix");
  int cols = 0;
  for (const auto& [e, mult] : h.edges()) cols += static_cast<int>(tau_size(mask_size(e)));
  IntMat r(idx.k, cols);
  int col = 0;
  for (const auto& [e, mult] : h.edges())
    for (const auto& [a, b] : partitions2(e)) {
      // canonical orientation: smaller part is the tail
      r(idx.pos.at(a), col) = -1;
      r(idx.pos.at(b), col) = 1;
      ++col;
    }
  return r;
}

IntMat edge_parts_incidence(const Hypergraph& h, const IndexSet& idx) {
  require_simple(h, "edge parts incidence matrix");
  int cols = 0;
  for (const auto& [e, mult] : h.edges()) cols += static_cast<int>(tau_size(mask_size(e)));
  IntMat b(idx.k, cols);
  int col = 0;
  for (const auto& [e, mult] : h.edges())
    for (const auto& [p, q] : partitions2(e)) {
      b(idx.pos.at(p), col) = 1;
      b(idx.pos.at(q), col) = 1;
      ++col;
    }
  return b;
}

Eigen::MatrixXd to_real(const IntMat& m) {
  Eigen::MatrixXd r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = static_cast<double>(m(i, j));
  return r;
}

IntMat unified_matrix(const Hypergraph& h) { return unified_matrix(h, index_set(h)); }
IntMat unified_degree_matrix(const Hypergraph& h) { return unified_degree_matrix(h, index_set(h)); }
IntMat unified_laplacian(const Hypergraph& h) { return unified_laplacian(h, index_set(h)); }
IntMat unified_signless_laplacian(const Hypergraph& h) {
  return unified_signless_laplacian(h, index_set(h));
}
Eigen::MatrixXd unified_normalized_laplacian(const Hypergraph& h) {
  IndexSet idx = index_set(h);
  return unified_normalized_laplacian(h, idx, degrees(h, idx));
}

}  // namespace unihyp
