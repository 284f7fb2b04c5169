#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "unihyp/hg_format.hpp"
#include "unihyp/json_io.hpp"

namespace {

using namespace unihyp;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Hypergraph load(const std::string& path) { return parse_hg(read_input(path)); }

Mask parse_part(const Hypergraph& h, const std::string& csv) {
  Mask m = 0;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    int v = h.find_vertex(tok);
    if (v < 0) fail(ErrorCode::InvalidVertex, "unknown vertex '" + tok + "'");
    m |= Mask{1} << v;
  }
  if (m == 0) fail(ErrorCode::InvalidInput, "empty part");
  return m;
}

void emit(const Json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

void render_report_table(const VerificationReport& report) {
  for (const auto& r : report.records) {
    std::cout << (r.hypothesis ? (r.holds ? "PASS " : (r.audit_only ? "AUDIT" : "FAIL ")) : "N/A  ")
              << "  " << r.id;
    if (!r.hypothesis)
      std::cout << "  [" << r.gate_note << "]";
    else if (!r.note.empty())
      std::cout << "  (" << r.note << ")";
    std::cout << "\n";
  }
  std::cout << "hard failures: " << report.hard_failures
            << ", audit failures: " << report.audit_failures
            << ", inapplicable: " << report.inapplicable << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"unified hypergraph matrices: spectra, structures, and theorem checks"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output");

  std::string file = "-";
  std::string kind_name = "U";
  std::string mode_name = "ED";
  std::string from, to;
  double tol = 1e-10;
  double verify_tol = 1e-8;
  int cap = 24;
  int cheeger_cap = 22;
  bool do_enumerate = false;
  long long limit = 1000;
  int en_n = 3, en_max_size = 3;
  long long en_max_edges = -1;
  bool iso_reject = false;
  bool csv = false;
  std::vector<std::string> files;

  auto* cmd_matrix = app.add_subcommand("matrix", "emit a unified matrix");
  cmd_matrix->add_option("file", file, "HG input file or - for stdin");
  cmd_matrix->add_option("--kind", kind_name, "U | UD | UL | UQ | UNL")->required();
  cmd_matrix->add_flag("--csv", csv, "emit dense CSV instead of JSON");

  auto* cmd_spectrum = app.add_subcommand("spectrum", "eigenvalues and exact charpoly");
  cmd_spectrum->add_option("file", file);
  cmd_spectrum->add_option("--kind", kind_name)->required();
  cmd_spectrum->add_option("--tol", tol, "eigensolver residual tolerance");

  auto* cmd_components = app.add_subcommand("components", "DE-components");
  cmd_components->add_option("file", file);

  auto* cmd_distance = app.add_subcommand("distance", "vertex or set distance");
  cmd_distance->add_option("file", file);
  cmd_distance->add_option("--mode", mode_name)->required();
  cmd_distance->add_option("--from", from)->required();
  cmd_distance->add_option("--to", to)->required();
  cmd_distance->add_option("--cap", cap, "constrained search e-index cap");

  auto* cmd_diameter = app.add_subcommand("diameter", "diameter of a distance mode");
  cmd_diameter->add_option("file", file);
  cmd_diameter->add_option("--mode", mode_name)->required();
  cmd_diameter->add_option("--cap", cap);

  auto* cmd_cheeger = app.add_subcommand("cheeger", "unified Cheeger constant");
  cmd_cheeger->add_option("file", file);
  cmd_cheeger->add_option("--cap", cheeger_cap);

  auto* cmd_spanning = app.add_subcommand("spanning", "exact spanning pairs");
  cmd_spanning->add_option("file", file);
  cmd_spanning->add_flag("--enumerate", do_enumerate);
  cmd_spanning->add_option("--limit", limit);

  auto* cmd_verify = app.add_subcommand("verify", "run the theorem verification suite");
  cmd_verify->add_option("files", files, "HG input files")->expected(-1);
  cmd_verify->add_option("--tol", verify_tol);
  cmd_verify->add_option("--cap", cap);

  auto* cmd_profile = app.add_subcommand("profile", "connectedness profile");
  cmd_profile->add_option("file", file);
  cmd_profile->add_option("--cap", cap);

  auto* cmd_enumerate = app.add_subcommand("enumerate", "enumerate simple hypergraphs");
  cmd_enumerate->add_option("--n", en_n)->required();
  cmd_enumerate->add_option("--max-edge-size", en_max_size);
  cmd_enumerate->add_option("--max-edges", en_max_edges);
  cmd_enumerate->add_flag("--iso-reject", iso_reject);

  auto* cmd_scan = app.add_subcommand("scan", "cospectral catalog");
  cmd_scan->add_option("files", files, "HG input files (alternative to --n)")->expected(-1);
  cmd_scan->add_option("--kind", kind_name)->required();
  cmd_scan->add_option("--n", en_n);
  cmd_scan->add_option("--max-edge-size", en_max_size);
  cmd_scan->add_option("--max-edges", en_max_edges);
  cmd_scan->add_flag("--iso-reject", iso_reject);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (cmd_matrix->parsed()) {
    Hypergraph h = load(file);
    IndexSet idx = index_set(h);
    MatrixKind kind = matrix_kind_from_name(kind_name);
    if (kind == MatrixKind::UNL) {
      Eigen::MatrixXd m = unified_normalized_laplacian(h, idx, degrees(h, idx));
      if (csv)
        std::cout << matrix_csv(m);
      else
        emit(matrix_json(h, idx, kind, m), pretty);
    } else {
      IntMat m;
      switch (kind) {
        case MatrixKind::U: m = unified_matrix(h, idx); break;
        case MatrixKind::UD: m = unified_degree_matrix(h, idx); break;
        case MatrixKind::UL: m = unified_laplacian(h, idx); break;
        default: m = unified_signless_laplacian(h, idx); break;
      }
      if (csv)
        std::cout << matrix_csv(m);
      else
        emit(matrix_json(h, idx, kind, m), pretty);
    }
    return 0;
  }

  if (cmd_spectrum->parsed()) {
    Hypergraph h = load(file);
    IndexSet idx = index_set(h);
    MatrixKind kind = matrix_kind_from_name(kind_name);
    Json j;
    if (kind == MatrixKind::UNL) {
      Spectrum s = eigenvalues_sym(unified_normalized_laplacian(h, idx, degrees(h, idx)), tol);
      j = spectrum_json(kind, s);
      j["charpoly"] = rat_poly_json(normalized_char_poly_exact(h));
      j["charpoly_scalar"] = "rational";
    } else {
      IntMat m;
      switch (kind) {
        case MatrixKind::U: m = unified_matrix(h, idx); break;
        case MatrixKind::UD: m = unified_degree_matrix(h, idx); break;
        case MatrixKind::UL: m = unified_laplacian(h, idx); break;
        default: m = unified_signless_laplacian(h, idx); break;
      }
      Spectrum s = eigenvalues_sym(to_real(m), tol);
      j = spectrum_json(kind, s);
      j["charpoly"] = int_poly_json(char_poly_exact(m));
      j["charpoly_scalar"] = "integer";
    }
    emit(j, pretty);
    return 0;
  }

  if (cmd_components->parsed()) {
    Hypergraph h = load(file);
    emit(components_json(h, de_components(h), index_set(h)), pretty);
    return 0;
  }

  if (cmd_distance->parsed()) {
    Hypergraph h = load(file);
    DistanceMode mode = distance_mode_from_name(mode_name);
    SearchOptions opts;
    opts.k_cap = cap;
    PathContext ctx(h, opts);
    Json j;
    j["mode"] = mode_name;
    j["from"] = from;
    j["to"] = to;
    int d = is_set_mode(mode) ? ctx.set_distance(parse_part(h, from), parse_part(h, to), mode)
                              : ctx.vertex_distance(from, to, mode);
    j["distance"] = distance_json(d);
    emit(j, pretty);
    return 0;
  }

  if (cmd_diameter->parsed()) {
    Hypergraph h = load(file);
    DistanceMode mode = distance_mode_from_name(mode_name);
    SearchOptions opts;
    opts.k_cap = cap;
    Json j;
    j["mode"] = mode_name;
    j["diameter"] = distance_json(PathContext(h, opts).diameter(mode));
    emit(j, pretty);
    return 0;
  }

  if (cmd_cheeger->parsed()) {
    Hypergraph h = load(file);
    emit(cheeger_json(h, cheeger_constant(h, cheeger_cap)), pretty);
    return 0;
  }

  if (cmd_spanning->parsed()) {
    Hypergraph h = load(file);
    Json j;
    j["count"] = exact_spanning_pairs_count(h).str();
    if (do_enumerate) {
      Json pairs = Json::array();
      for (const auto& p : enumerate_exact_spanning_pairs(h, limit))
        pairs.push_back(spanning_pair_json(h, p));
      j["pairs"] = std::move(pairs);
    }
    emit(j, pretty);
    return 0;
  }

  if (cmd_profile->parsed()) {
    Hypergraph h = load(file);
    SearchOptions opts;
    opts.k_cap = cap;
    emit(profile_json(connectedness_profile(h, opts)), pretty);
    return 0;
  }

  if (cmd_verify->parsed()) {
    if (files.empty()) files.push_back("-");
    VerifyOptions opts;
    opts.tol = verify_tol;
    opts.search.k_cap = cap;
    Json out = Json::array();
    int hard = 0;
    for (const auto& f : files) {
      Hypergraph h = load(f);
      VerificationReport report = bound_suite(h, opts);
      hard += report.hard_failures;
      Json j = verification_report_json(report);
      j["file"] = f;
      if (pretty) render_report_table(report);
      out.push_back(std::move(j));
    }
    if (!pretty) emit(out, false);
    return hard > 0 ? 1 : 0;
  }

  if (cmd_enumerate->parsed()) {
    EnumerationOptions opts;
    opts.n = en_n;
    opts.max_edge_size = en_max_size;
    opts.max_edges = en_max_edges;
    opts.iso_reject = iso_reject;
    Json list = Json::array();
    enumerate_hypergraphs(opts, [&](const Hypergraph& h) {
      list.push_back(emit_hg(h));
      return true;
    });
    Json j;
    j["count"] = list.size();
    j["hypergraphs"] = std::move(list);
    emit(j, pretty);
    return 0;
  }

  if (cmd_scan->parsed()) {
    MatrixKind kind = matrix_kind_from_name(kind_name);
    std::vector<Hypergraph> family;
    if (!files.empty()) {
      for (const auto& f : files) family.push_back(load(f));
    } else {
      EnumerationOptions opts;
      opts.n = en_n;
      opts.max_edge_size = en_max_size;
      opts.max_edges = en_max_edges;
      opts.iso_reject = iso_reject;
      family = enumerate_hypergraphs_vec(opts);
    }
    emit(catalog_json(cospectral_scan(family, kind)), pretty);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const unihyp::Error& e) {
    std::cout << unihyp::error_json(e).dump() << "\n";
    return unihyp::exit_code_for(e);
  } catch (const std::exception& e) {
    unihyp::Json j;
    j["error"] = "internal";
    j["detail"] = e.what();
    std::cout << j.dump() << "\n";
    return 2;
  }
}
