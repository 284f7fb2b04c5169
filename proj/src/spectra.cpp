#include "unihyp/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "unihyp/core.hpp"
#include "unihyp/matrices.hpp"

namespace unihyp {

namespace {

void check_finite(const Eigen::MatrixXd& m) {
  if (!m.allFinite()) fail(ErrorCode::NumericInput, "matrix has non-finite entries");
}

}  // namespace

EigenPairs eigen_pairs_sym(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidInput, "eigensolver needs a square matrix");
  if (tol <= 0) fail(ErrorCode::InvalidInput, "tolerance must be positive");
  check_finite(m);

  EigenPairs out;
  out.spectrum.frobenius = m.norm();
  int k = static_cast<int>(m.rows());
  if (k == 0) return out;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) fail(ErrorCode::NumericInput, "eigensolver failed to converge");

  // Eigen returns ascending order; flip to the paper's descending convention.
  out.spectrum.values.resize(k);
  out.vectors.resize(k, k);
  for (int i = 0; i < k; ++i) {
    out.spectrum.values[i] = solver.eigenvalues()(k - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(k - 1 - i);
  }
  double residual = 0.0;
  for (int i = 0; i < k; ++i) {
    double r = (m * out.vectors.col(i) - out.spectrum.values[i] * out.vectors.col(i)).norm();
    residual = std::max(residual, r);
  }
  out.spectrum.residual = residual;
  if (residual > tol * (1.0 + out.spectrum.frobenius))
    fail(ErrorCode::NumericInput, "eigensolver residual exceeds tolerance");
  return out;
}

Spectrum eigenvalues_sym(const Eigen::MatrixXd& m, double tol) {
  return eigen_pairs_sym(m, tol).spectrum;
}

int multiplicity_of(const Spectrum& spec, double target, double cluster_tol) {
  double tol = cluster_tol > 0 ? cluster_tol : 1e-7 * (1.0 + spec.frobenius);
  int count = 0;
  for (double v : spec.values)
    if (std::abs(v - target) <= tol) ++count;
  return count;
}

int eigen_multiplicity_exact(const IntMat& m, const Int& target) {
  IntMat shifted = m;
  for (int i = 0; i < m.rows(); ++i) shifted(i, i) -= target;
  return m.rows() - rank_exact(shifted);
}

int eigen_multiplicity_exact_rat(const RatMat& m, const Rat& target) {
  RatMat shifted = m;
  for (int i = 0; i < m.rows(); ++i) shifted(i, i) -= target;
  return m.rows() - rank_exact(shifted);
}

Hypergraph delete_edge_copies(const Hypergraph& h, Mask e, long long r) {
  long long m = h.multiplicity(e);
  if (m == 0) fail(ErrorCode::InvalidInput, "edge not present");
  if (r < 1 || r > m) fail(ErrorCode::InvalidInput, "deletion count out of range");
  std::vector<std::pair<std::vector<std::string>, long long>> edges;
  for (const auto& [mask, mult] : h.edges()) {
    long long keep = mask == e ? mult - r : mult;
    if (keep > 0) edges.emplace_back(h.part_tokens(mask), keep);
  }
  std::vector<std::string> verts;
  for (const auto& t : h.tokens()) verts.push_back(t);
  return Hypergraph::from_token_edges(edges, verts);
}

namespace {

// Chains: with d = nu(H), s = nu(H - e^r), both descending, the theorem pins
//   s_i <= d_i for all i, and d_(j+1) <= s_j + shift (shift = 0 for |e| = 2,
//   2r otherwise), with nu_k(H) = nu_k(H - e^r) = 0 for the Laplacian case.
struct ChainCheck {
  bool holds = true;
  double worst = 0.0;

  void require_le(double lhs, double rhs, double tol) {
    double slack = rhs - lhs;
    worst = std::min(worst, slack);
    if (slack < -tol) holds = false;
  }
};

}  // namespace

InterlacingReport interlacing_check(const Hypergraph& h, Mask e, long long r, double tol) {
  InterlacingReport report;
  if (mask_size(e) <= 1) {
    report.reason = "edge is a loop";
    return report;
  }
  long long m = h.multiplicity(e);
  if (m == 0) {
    report.reason = "edge not present";
    return report;
  }
  if (r < 1 || r > m) {
    report.reason = "deletion count out of range";
    return report;
  }
  Hypergraph reduced = delete_edge_copies(h, e, r);
  IndexSet idx_h = index_set(h);
  IndexSet idx_r = index_set(reduced);
  if (idx_h.parts != idx_r.parts) {
    report.reason = "I(H - e^r) differs from I(H)";
    return report;
  }

  report.applicable = true;
  report.pair_branch = mask_size(e) == 2;
  double shift = report.pair_branch ? 0.0 : 2.0 * static_cast<double>(r);

  auto check = [&](const IntMat& full_m, const IntMat& red_m, bool pin_smallest_zero) {
    Spectrum full = eigenvalues_sym(to_real(full_m));
    Spectrum red = eigenvalues_sym(to_real(red_m));
    double scale = tol * (1.0 + full.frobenius);
    ChainCheck chain;
    int k = idx_h.k;
    for (int i = 0; i < k; ++i) chain.require_le(red.values[i], full.values[i], scale);
    for (int j = 0; j + 1 < k; ++j)
      chain.require_le(full.values[j + 1], red.values[j] + shift, scale);
    if (pin_smallest_zero) {
      chain.require_le(std::abs(full.values[k - 1]), 0.0, scale);
      chain.require_le(std::abs(red.values[k - 1]), 0.0, scale);
    } else {
      chain.require_le(0.0, red.values[k - 1], scale);
    }
    report.max_violation = std::min(report.max_violation, chain.worst);
    return chain.holds;
  };

  report.laplacian_holds =
      check(unified_laplacian(h, idx_h), unified_laplacian(reduced, idx_r), true);
  report.signless_holds = check(unified_signless_laplacian(h, idx_h),
                                unified_signless_laplacian(reduced, idx_r), false);
  return report;
}

}  // namespace unihyp
