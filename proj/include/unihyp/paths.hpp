#ifndef UNIHYP_PATHS_HPP
#define UNIHYP_PATHS_HPP

#include <limits>
#include <string>
#include <vector>

#include "unihyp/assoc.hpp"

namespace unihyp {

// Vertex distances: ED, EED, IUD, UD and their strong variants (endpoints
// forced to singletons). Set distances over I(H): ESD, EESD, IUSD.
enum class DistanceMode { ED, EED, IUD, UD, SED, SEED, SUD, ESD, EESD, IUSD };

std::string distance_mode_name(DistanceMode mode);
DistanceMode distance_mode_from_name(const std::string& name);

constexpr int kInfDistance = std::numeric_limits<int>::max();

inline bool is_set_mode(DistanceMode m) {
  return m == DistanceMode::ESD || m == DistanceMode::EESD || m == DistanceMode::IUSD;
}

struct SearchOptions {
  int k_cap = 24;                       // constrained searches refuse above this e-index
  long long node_budget = 50'000'000;   // DFS expansions per distance call
};

// Builds G_H once and answers distance queries against it.
class PathContext {
 public:
  explicit PathContext(const Hypergraph& h, SearchOptions opts = {});

  const Hypergraph& hypergraph() const { return h_; }
  const AssociatedGraph& graph() const { return g_; }
  const IndexSet& index() const { return idx_; }

  int set_distance(Mask s, Mask sp, DistanceMode mode) const;
  int vertex_distance(int u, int v, DistanceMode mode) const;
  int vertex_distance(const std::string& u, const std::string& v, DistanceMode mode) const;
  int diameter(DistanceMode mode) const;

  // min over S in xs, S' in ys of esd(S, S')
  int subset_distance(const std::vector<Mask>& xs, const std::vector<Mask>& ys) const;

 private:
  Hypergraph h_;
  IndexSet idx_;
  AssociatedGraph g_;
  SearchOptions opts_;

  std::vector<int> nodes_containing(int vertex) const;
  int shortest(const std::vector<int>& sources, const std::vector<int>& targets,
               DistanceMode mode) const;
};

struct ConnectednessProfile {
  bool exactly = false;
  bool edge_exact = false;
  bool inter_uni = false;
  bool uni = false;
  bool strong_exact = false;
  bool strong_edge_exact = false;
  bool strong_uni = false;
  bool deeply = false;
  bool deeply_edge_exact = false;
  bool deeply_inter_uni = false;
};

ConnectednessProfile connectedness_profile(const Hypergraph& h, SearchOptions opts = {});

int set_distance(const Hypergraph& h, Mask s, Mask sp, DistanceMode mode, SearchOptions opts = {});
int vertex_distance(const Hypergraph& h, const std::string& u, const std::string& v,
                    DistanceMode mode, SearchOptions opts = {});
int diameter(const Hypergraph& h, DistanceMode mode, SearchOptions opts = {});

bool has_odd_exact_cycle(const Hypergraph& h);
bool is_exact_tree(const Hypergraph& h);

}  // namespace unihyp

#endif
