#include "unihyp/json_io.hpp"

#include <sstream>

#include "unihyp/hg_format.hpp"

namespace unihyp {

namespace {

Json int_json(const Int& v) {
  // keep matrix entries as numbers where safe, strings beyond 2^53
  if (v >= Int(-(1LL << 53)) && v <= Int(1LL << 53)) return static_cast<long long>(v);
  return v.str();
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

Json part_json(const Hypergraph& h, Mask part) {
  Json j = Json::array();
  for (const auto& t : h.part_tokens(part)) j.push_back(t);
  return j;
}

Json labels_json(const Hypergraph& h, const std::vector<Mask>& parts) {
  Json j = Json::array();
  for (Mask p : parts) j.push_back(part_json(h, p));
  return j;
}

Json matrix_json(const Hypergraph& h, const IndexSet& idx, MatrixKind kind, const IntMat& m) {
  Json j;
  j["kind"] = matrix_kind_name(kind);
  j["order"] = m.rows();
  j["scalar"] = "integer";
  j["index_labels"] = labels_json(h, idx.parts);
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(int_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json matrix_json(const Hypergraph& h, const IndexSet& idx, MatrixKind kind,
                 const Eigen::MatrixXd& m) {
  Json j;
  j["kind"] = matrix_kind_name(kind);
  j["order"] = static_cast<int>(m.rows());
  j["scalar"] = "binary64";
  j["index_labels"] = labels_json(h, idx.parts);
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string matrix_csv(const IntMat& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(i, c);
    }
    os << '\n';
  }
  return os.str();
}

std::string matrix_csv(const Eigen::MatrixXd& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << Json(m(i, c)).dump();
    }
    os << '\n';
  }
  return os.str();
}

Json spectrum_json(MatrixKind kind, const Spectrum& spec) {
  Json j;
  j["kind"] = matrix_kind_name(kind);
  j["order"] = spec.values.size();
  j["values"] = spec.values;
  j["residual"] = spec.residual;
  return j;
}

Json int_poly_json(const IntPoly& poly) {
  Json j = Json::array();
  for (const auto& c : poly) j.push_back(c.str());
  return j;
}

Json rat_poly_json(const RatPoly& poly) {
  Json j = Json::array();
  for (const auto& c : poly) j.push_back(rat_str(c));
  return j;
}

Json distance_json(int d) {
  if (d == kInfDistance) return "inf";
  return d;
}

Json components_json(const Hypergraph& h, const DEPartition& de, const IndexSet& idx) {
  Json j;
  j["class_count"] = de.class_count;
  j["equality_grouped_count"] = de.equality_group_count;
  Json classes = Json::array();
  for (int c = 0; c < de.class_count; ++c) {
    Json cls;
    Json members = Json::array();
    for (int i : de.classes[c]) members.push_back(part_json(h, idx.parts[i]));
    cls["members"] = std::move(members);
    cls["is_trivial"] = static_cast<bool>(de.is_trivial[c]);
    cls["has_odd_exact_cycle"] = static_cast<bool>(de.has_odd_exact_cycle[c]);
    cls["equality_group"] = de.equality_group[c];
    cls["induced_subhypergraph"] = emit_hg(de.induced[c]);
    classes.push_back(std::move(cls));
  }
  j["classes"] = std::move(classes);
  return j;
}

Json profile_json(const ConnectednessProfile& p) {
  Json j;
  j["exactly"] = p.exactly;
  j["edge_exact"] = p.edge_exact;
  j["inter_uni"] = p.inter_uni;
  j["uni"] = p.uni;
  j["strong_exact"] = p.strong_exact;
  j["strong_edge_exact"] = p.strong_edge_exact;
  j["strong_uni"] = p.strong_uni;
  j["deeply"] = p.deeply;
  j["deeply_edge_exact"] = p.deeply_edge_exact;
  j["deeply_inter_uni"] = p.deeply_inter_uni;
  return j;
}

Json cheeger_json(const Hypergraph& h, const CheegerResult& res) {
  Json j;
  j["uc"] = rat_str(res.value);
  j["uc_float"] = static_cast<double>(res.value);
  Json argmin = Json::array();
  for (Mask p : res.argmin) argmin.push_back(part_json(h, p));
  j["argmin"] = std::move(argmin);
  return j;
}

Json spanning_pair_json(const Hypergraph& h, const ExactSpanningPair& pair) {
  Json j;
  j["subhypergraph"] = emit_hg(pair.subhypergraph);
  Json d = Json::array();
  for (const auto& [a, b] : pair.partition_set) {
    Json p = Json::array();
    p.push_back(part_json(h, a));
    p.push_back(part_json(h, b));
    d.push_back(std::move(p));
  }
  j["partition_set"] = std::move(d);
  return j;
}

Json verification_report_json(const VerificationReport& report) {
  Json j;
  j["instance"] = report.instance_hg;
  j["k"] = report.k;
  j["hard_failures"] = report.hard_failures;
  j["audit_failures"] = report.audit_failures;
  j["inapplicable"] = report.inapplicable;
  Json records = Json::array();
  for (const auto& r : report.records) {
    Json rec;
    rec["id"] = r.id;
    rec["hypothesis"] = r.hypothesis;
    if (!r.hypothesis) {
      rec["gate"] = r.gate_note;
    } else {
      rec["relation"] = r.relation;
      rec["lhs"] = r.lhs;
      rec["rhs"] = r.rhs;
      rec["holds"] = r.holds;
      rec["slack"] = r.slack;
      rec["exact"] = r.exact;
      if (r.audit_only) rec["audit_only"] = true;
      if (!r.note.empty()) rec["note"] = r.note;
    }
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  return j;
}

Json catalog_json(const CospectralCatalog& catalog) {
  Json j;
  j["kind"] = matrix_kind_name(catalog.kind);
  Json groups = Json::array();
  for (const auto& g : catalog.groups) {
    Json gj;
    gj["charpoly"] = g.charpoly;
    gj["iso_class_count"] = g.iso_class_count;
    gj["nonisomorphic_cospectral"] = g.nonisomorphic_cospectral;
    Json members = Json::array();
    for (const auto& m : g.members) {
      Json mj;
      mj["hg"] = m.hg;
      mj["iso_class"] = m.iso_class;
      members.push_back(std::move(mj));
    }
    gj["members"] = std::move(members);
    groups.push_back(std::move(gj));
  }
  j["groups"] = std::move(groups);
  return j;
}

Json interlacing_json(const InterlacingReport& report) {
  Json j;
  j["applicable"] = report.applicable;
  if (!report.applicable) {
    j["reason"] = report.reason;
    return j;
  }
  j["branch"] = report.pair_branch ? "pair" : "shifted";
  j["laplacian_holds"] = report.laplacian_holds;
  j["signless_holds"] = report.signless_holds;
  j["max_violation"] = report.max_violation;
  return j;
}

Json error_json(const Error& e) {
  Json j;
  switch (e.code()) {
    case ErrorCode::InvalidInput: j["error"] = "invalid-input"; break;
    case ErrorCode::InvalidIndex: j["error"] = "invalid-index"; break;
    case ErrorCode::InvalidVertex: j["error"] = "invalid-vertex"; break;
    case ErrorCode::UnsupportedStructure: j["error"] = "unsupported-structure"; break;
    case ErrorCode::SizeCap: j["error"] = "size-cap"; break;
    case ErrorCode::KindError: j["error"] = "kind-error"; break;
    case ErrorCode::NumericInput: j["error"] = "numeric-input"; break;
    case ErrorCode::ParseError: j["error"] = "parse-error"; break;
    case ErrorCode::Truncated: j["error"] = "truncated"; break;
  }
  j["detail"] = e.what();
  return j;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::SizeCap: return 3;
    default: return 2;
  }
}

}  // namespace unihyp
