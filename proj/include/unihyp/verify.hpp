#ifndef UNIHYP_VERIFY_HPP
#define UNIHYP_VERIFY_HPP

#include <string>
#include <vector>

#include "unihyp/invariants.hpp"
#include "unihyp/paths.hpp"

namespace unihyp {

// One theorem instance. A record whose hypothesis is unsatisfied is
// inapplicable and never a failure. audit_only marks implications the paper
// asserts in proofs but does not prove from the definitions; their failures
// are logged, not fatal.
struct VerificationRecord {
  std::string id;
  bool hypothesis = false;
  std::string gate_note;  // why inapplicable
  double lhs = 0.0;
  double rhs = 0.0;
  std::string relation;  // "<=", "<", "==", "iff", "chain"
  bool holds = true;
  double slack = 0.0;  // most negative margin observed (0 when comfortably inside)
  bool audit_only = false;
  bool exact = false;  // decided in exact arithmetic
  std::string note;
};

struct VerificationReport {
  std::string instance_hg;
  int k = 0;
  std::vector<VerificationRecord> records;
  int hard_failures = 0;
  int audit_failures = 0;
  int inapplicable = 0;
};

struct VerifyOptions {
  double tol = 1e-8;
  SearchOptions search;
  int cheeger_cap = 22;
  int tu_k_cap = 6;       // exhaustive total-unimodularity minors
  int tu_cols_cap = 8;
  bool diameter_records = true;  // the constrained-search diameter families
};

VerificationReport bound_suite(const Hypergraph& h, const VerifyOptions& opts = {});

}  // namespace unihyp

#endif
