#ifndef UNIHYP_SPECTRA_HPP
#define UNIHYP_SPECTRA_HPP

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "unihyp/exact.hpp"
#include "unihyp/hypergraph.hpp"

namespace unihyp {

// Eigenvalues sorted descending (nu_1 >= ... >= nu_k convention).
struct Spectrum {
  std::vector<double> values;
  double residual = 0.0;   // max over pairs of ||Mx - lambda x||_2
  double frobenius = 0.0;  // scale for tolerance decisions

  double scaled_tol(double tol) const { return tol * (1.0 + frobenius); }
};

Spectrum eigenvalues_sym(const Eigen::MatrixXd& m, double tol = 1e-10);

// Eigenvalues plus eigenvectors, columns aligned with the descending order.
struct EigenPairs {
  Spectrum spectrum;
  Eigen::MatrixXd vectors;
};
EigenPairs eigen_pairs_sym(const Eigen::MatrixXd& m, double tol = 1e-10);

// Count of eigenvalues within cluster_tol of target; cluster_tol <= 0 picks
// 1e-7 * (1 + frobenius).
int multiplicity_of(const Spectrum& spec, double target, double cluster_tol = -1.0);

// k - rank(M - t*I), the arithmetic multiplicity when t is an eigenvalue.
int eigen_multiplicity_exact(const IntMat& m, const Int& target);
int eigen_multiplicity_exact_rat(const RatMat& m, const Rat& target);

// Eigenvalue chains of the edge-deletion theorems for U^L and U^Q. The check
// is inapplicable (not an error) when I(H - e^r) != I(H) or e is a loop.
struct InterlacingReport {
  bool applicable = false;
  std::string reason;          // when inapplicable
  bool pair_branch = false;    // |e| = 2 chain vs the 2r-shifted chain
  bool laplacian_holds = false;
  bool signless_holds = false;
  double max_violation = 0.0;  // most negative slack observed
};

InterlacingReport interlacing_check(const Hypergraph& h, Mask e, long long r, double tol = 1e-8);

// Hypergraph with r occurrences of e removed.
Hypergraph delete_edge_copies(const Hypergraph& h, Mask e, long long r);

}  // namespace unihyp

#endif
