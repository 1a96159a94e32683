#pragma once

#include <array>
#include <optional>
#include <vector>

namespace forge::graphs {

struct Graph {
  int n = 0;
  bool directed = false;
  std::vector<std::array<int, 2>> edges;
  std::vector<int> weights;     // parallel to edges when present
  std::vector<int> capacities;  // parallel to edges when present

  bool has_edge(int u, int v) const;
  std::vector<int> degrees() const;
  bool connected() const;  // ignoring direction
};

// Hierholzer; cycle iff all degrees even, path iff 0 or 2 odd vertices.
std::optional<std::vector<int>> eulerian_walk(const Graph& g, bool cycle);

// Backtracking with degree/connectivity pruning; start < 0 means free start.
std::optional<std::vector<int>> hamiltonian(const Graph& g, bool cycle, int start = -1);

long long shortest_distance(const Graph& g, int s, int t);  // -1 when unreachable

long long max_flow(const Graph& g, int s, int t);  // shortest-augmenting-path

std::vector<int> topo_order(const Graph& g);  // Kahn, smallest-id tiebreak

// Exact decision via refinement-guided backtracking; invariants only prune.
bool isomorphic(const Graph& a, const Graph& b);

// Independent walk/sequence re-checkers (used by verifiers and tests).
bool check_eulerian_walk(const Graph& g, const std::vector<int>& walk, bool cycle);
bool check_hamiltonian_seq(const Graph& g, const std::vector<int>& seq, bool cycle, int start);
bool check_topo_order(const Graph& g, const std::vector<int>& order);

}  // namespace forge::graphs
