#ifndef UNIHYP_HG_FORMAT_HPP
#define UNIHYP_HG_FORMAT_HPP

#include <string>
#include <vector>

#include "unihyp/hypergraph.hpp"

namespace unihyp {

// HG text format:
//   # comment (also allowed after fields)
//   v <token> ...        optional vertex declarations
//   e <token> <token>... one edge occurrence; repeats accumulate multiplicity
//   e*<K> <token> ...    K occurrences at once
struct HGDocument {
  Hypergraph hypergraph;
  std::vector<int> edge_lines;  // source line per edge occurrence group, for messages
};

HGDocument parse_hypergraph(const std::string& text);
Hypergraph parse_hg(const std::string& text);

std::string emit_hg(const Hypergraph& h);

}  // namespace unihyp

#endif
