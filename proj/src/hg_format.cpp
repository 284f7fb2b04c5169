#include "unihyp/hg_format.hpp"

#include <sstream>

namespace unihyp {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream is(line);
  std::string f;
  while (is >> f) {
    if (f[0] == '#') break;
    fields.push_back(f);
  }
  return fields;
}

}  // namespace

HGDocument parse_hypergraph(const std::string& text) {
  std::vector<std::pair<std::vector<std::string>, long long>> edges;
  std::vector<std::string> vertices;
  std::vector<int> edge_lines;

  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::vector<std::string> fields = split_fields(line);
    if (fields.empty()) continue;
    const std::string& head = fields[0];
    std::vector<std::string> rest(fields.begin() + 1, fields.end());
    if (head == "v") {
      for (const auto& t : rest) vertices.push_back(t);
      continue;
    }
    long long mult = 0;
    if (head == "e") {
      mult = 1;
    } else if (head.rfind("e*", 0) == 0) {
      std::string count = head.substr(2);
      if (count.empty() || !token_is_number(count))
        fail(ErrorCode::ParseError,
             "line " + std::to_string(lineno) + ": malformed multiplicity '" + head + "'");
      try {
        mult = std::stoll(count);
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": multiplicity overflow");
      }
      if (mult < 1)
        fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": multiplicity must be >= 1");
    } else {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(lineno) + ": unknown directive '" + head + "'");
    }
    if (rest.empty())
      fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": empty edge");
    for (size_t i = 0; i < rest.size(); ++i)
      for (size_t j = i + 1; j < rest.size(); ++j)
        if (rest[i] == rest[j])
          fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": duplicate vertex '" +
                                          rest[i] + "' in edge");
    edges.emplace_back(rest, mult);
    edge_lines.push_back(lineno);
  }

  HGDocument doc;
  try {
    doc.hypergraph = Hypergraph::from_token_edges(edges, vertices);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SizeCap) throw;
    fail(ErrorCode::ParseError, e.what());
  }
  doc.edge_lines = std::move(edge_lines);
  return doc;
}

Hypergraph parse_hg(const std::string& text) { return parse_hypergraph(text).hypergraph; }

std::string emit_hg(const Hypergraph& h) {
  std::ostringstream os;
  if (h.vertex_count() > 0) {
    os << 'v';
    for (const auto& t : h.tokens()) os << ' ' << t;
    os << '\n';
  }
  for (const auto& [e, mult] : h.edges()) {
    if (mult == 1)
      os << 'e';
    else
      os << "e*" << mult;
    for (const auto& t : h.part_tokens(e)) os << ' ' << t;
    os << '\n';
  }
  return os.str();
}

}  // namespace unihyp
