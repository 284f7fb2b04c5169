#ifndef UNIHYP_MATRICES_HPP
#define UNIHYP_MATRICES_HPP

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "unihyp/assoc.hpp"
#include "unihyp/core.hpp"
#include "unihyp/exact.hpp"

namespace unihyp {

enum class MatrixKind { U, UD, UL, UQ, UNL };

std::string matrix_kind_name(MatrixKind kind);
MatrixKind matrix_kind_from_name(const std::string& name);  // throws InvalidInput

// All builders index rows/columns by the canonical I(H) order.
IntMat unified_matrix(const Hypergraph& h, const IndexSet& idx);
IntMat unified_degree_matrix(const Hypergraph& h, const IndexSet& idx);
IntMat unified_laplacian(const Hypergraph& h, const IndexSet& idx);
IntMat unified_signless_laplacian(const Hypergraph& h, const IndexSet& idx);

// Binary64 because of the square roots. Diagonal is 1 wherever d*(S) > 0 and
// S is not a loop, 1 - m({v})/d*(v) on loops, 0 on isolated parts.
Eigen::MatrixXd unified_normalized_laplacian(const Hypergraph& h, const IndexSet& idx,
                                             const DegreeTable& deg);

// D^-1 * U^L restricted to the parts with d* > 0, preceded by the number of
// zero rows stripped. Similar to the normalized Laplacian on that block, so
// its characteristic polynomial (times x^stripped) and ranks match exactly.
struct RationalNormalized {
  RatMat block;
  int stripped = 0;  // parts with d* = 0
};
RationalNormalized normalized_similar_rational(const Hypergraph& h, const IndexSet& idx,
                                               const DegreeTable& deg);

// Exact characteristic polynomial of the unified normalized Laplacian.
RatPoly normalized_char_poly_exact(const Hypergraph& h);

// Arc incidence (entries -1/0/+1, one column per (edge, partition), tail =
// canonically smaller part) and edge-parts incidence (0/1). Simple H only.
IntMat arc_incidence(const Hypergraph& h, const IndexSet& idx);
IntMat edge_parts_incidence(const Hypergraph& h, const IndexSet& idx);

Eigen::MatrixXd to_real(const IntMat& m);

// Convenience single-H entry points.
IntMat unified_matrix(const Hypergraph& h);
IntMat unified_degree_matrix(const Hypergraph& h);
IntMat unified_laplacian(const Hypergraph& h);
IntMat unified_signless_laplacian(const Hypergraph& h);
Eigen::MatrixXd unified_normalized_laplacian(const Hypergraph& h);

}  // namespace unihyp

#endif
