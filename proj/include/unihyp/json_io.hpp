#ifndef UNIHYP_JSON_IO_HPP
#define UNIHYP_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "unihyp/invariants.hpp"
#include "unihyp/matrices.hpp"
#include "unihyp/paths.hpp"
#include "unihyp/spectra.hpp"
#include "unihyp/verify.hpp"

namespace unihyp {

using Json = nlohmann::ordered_json;

Json part_json(const Hypergraph& h, Mask part);
Json labels_json(const Hypergraph& h, const std::vector<Mask>& parts);

Json matrix_json(const Hypergraph& h, const IndexSet& idx, MatrixKind kind, const IntMat& m);
Json matrix_json(const Hypergraph& h, const IndexSet& idx, MatrixKind kind,
                 const Eigen::MatrixXd& m);
std::string matrix_csv(const IntMat& m);
std::string matrix_csv(const Eigen::MatrixXd& m);

Json spectrum_json(MatrixKind kind, const Spectrum& spec);
Json int_poly_json(const IntPoly& poly);
Json rat_poly_json(const RatPoly& poly);

Json distance_json(int d);  // number, or "inf"
Json components_json(const Hypergraph& h, const DEPartition& de, const IndexSet& idx);
Json profile_json(const ConnectednessProfile& p);
Json cheeger_json(const Hypergraph& h, const CheegerResult& res);
Json spanning_pair_json(const Hypergraph& h, const ExactSpanningPair& pair);
Json verification_report_json(const VerificationReport& report);
Json catalog_json(const CospectralCatalog& catalog);
Json interlacing_json(const InterlacingReport& report);

Json error_json(const Error& e);
int exit_code_for(const Error& e);

}  // namespace unihyp

#endif
