#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "taskforge/graphs.hpp"
#include "taskforge/rng.hpp"
#include "taskforge/task.hpp"

using namespace forge;
using graphs::Graph;

namespace {

Graph make(int n, std::vector<std::array<int, 2>> edges) {
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

// oracle: DFS over edge usage orders; pure existence of an eulerian trail
bool euler_oracle(const Graph& g, bool cycle) {
  if (g.edges.empty()) return true;
  int m = static_cast<int>(g.edges.size());
  std::vector<char> used(m, 0);
  std::function<bool(int, int, int)> rec = [&](int at, int start, int left) -> bool {
    if (left == 0) return !cycle || at == start;
    for (int i = 0; i < m; ++i) {
      if (used[i]) continue;
      int to = -1;
      if (g.edges[i][0] == at) to = g.edges[i][1];
      if (g.edges[i][1] == at) to = g.edges[i][0];
      if (to < 0) continue;
      used[i] = 1;
      if (rec(to, start, left - 1)) {
        used[i] = 0;
        return true;
      }
      used[i] = 0;
    }
    return false;
  };
  for (int s = 0; s < g.n; ++s) {
    if (rec(s, s, m)) return true;
  }
  return false;
}

// oracle: all vertex permutations
bool ham_oracle(const Graph& g, bool cycle, int start) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (start >= 0 && perm[0] != start) continue;
    bool ok = true;
    for (int i = 0; i + 1 < g.n && ok; ++i)
      if (!g.has_edge(perm[i], perm[i + 1])) ok = false;
    if (ok && cycle && !g.has_edge(perm[g.n - 1], perm[0])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// oracle: minimum cut over all source-side subsets
long long min_cut_oracle(const Graph& g, int s, int t) {
  long long best = -1;
  int n = g.n;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (!(mask & (1 << s)) || (mask & (1 << t))) continue;
    long long cut = 0;
    for (size_t i = 0; i < g.edges.size(); ++i) {
      int u = g.edges[i][0], v = g.edges[i][1];
      if ((mask & (1 << u)) && !(mask & (1 << v))) cut += g.capacities[i];
    }
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

// oracle: enumerate all simple paths
long long all_paths_oracle(const Graph& g, int s, int t) {
  long long best = -1;
  std::vector<char> vis(g.n, 0);
  std::function<void(int, long long)> rec = [&](int at, long long d) {
    if (at == t) {
      if (best < 0 || d < best) best = d;
      return;
    }
    for (size_t i = 0; i < g.edges.size(); ++i) {
      int to = -1;
      if (g.edges[i][0] == at) to = g.edges[i][1];
      if (g.edges[i][1] == at) to = g.edges[i][0];
      if (to < 0 || vis[to]) continue;
      vis[to] = 1;
      rec(to, d + (g.weights.empty() ? 1 : g.weights[i]));
      vis[to] = 0;
    }
  };
  vis[s] = 1;
  rec(s, 0);
  return best;
}

// oracle: all bijections
bool iso_oracle(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.n && ok; ++u)
      for (int v = u + 1; v < a.n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph random_graph(int n, double p, Stream& s) {
  Graph g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (s.chance(p)) g.edges.push_back({u, v});
  return g;
}

}  // namespace

TEST_CASE("triangle has an eulerian cycle") {
  Graph g = make(3, {{0, 1}, {1, 2}, {0, 2}});
  auto walk = graphs::eulerian_walk(g, true);
  REQUIRE(walk.has_value());
  CHECK(graphs::check_eulerian_walk(g, *walk, true));
}

TEST_CASE("two-edge path has an eulerian path") {
  Graph g = make(3, {{0, 1}, {1, 2}});
  auto walk = graphs::eulerian_walk(g, false);
  REQUIRE(walk.has_value());
  CHECK(*walk == std::vector<int>{0, 1, 2});
}

TEST_CASE("eulerian existence matches brute force on random graphs") {
  Stream s = seeded_stream(31, "euler-oracle");
  for (int iter = 0; iter < 150; ++iter) {
    int n = s.range(3, 6);
    Graph g = random_graph(n, 0.55, s);
    if (g.edges.size() > 9) continue;
    for (bool cycle : {true, false}) {
      bool ours = graphs::eulerian_walk(g, cycle).has_value();
      // the spec's construction requires connectivity; brute force explores
      // trails regardless, so compare on connected graphs only
      if (!g.connected()) continue;
      CHECK(ours == euler_oracle(g, cycle));
      if (ours) CHECK(graphs::check_eulerian_walk(g, *graphs::eulerian_walk(g, cycle), cycle));
    }
  }
}

TEST_CASE("K4 has a hamiltonian cycle; a star does not") {
  Graph k4 = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(graphs::hamiltonian(k4, true).has_value());
  Graph star = make(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(graphs::hamiltonian(star, true).has_value());
}

TEST_CASE("hamiltonian existence matches the permutation oracle") {
  Stream s = seeded_stream(32, "ham-oracle");
  for (int iter = 0; iter < 120; ++iter) {
    int n = s.range(4, 7);
    Graph g = random_graph(n, 0.45, s);
    for (bool cycle : {true, false}) {
      int start = cycle ? -1 : s.range(0, n - 1);
      auto ours = graphs::hamiltonian(g, cycle, start);
      CHECK(ours.has_value() == ham_oracle(g, cycle, start));
      if (ours) CHECK(graphs::check_hamiltonian_seq(g, *ours, cycle, start));
    }
  }
}

TEST_CASE("single edge distances and the identity case") {
  Graph g = make(2, {{0, 1}});
  g.weights = {7};
  CHECK(graphs::shortest_distance(g, 0, 1) == 7);
  CHECK(graphs::shortest_distance(g, 0, 0) == 0);
}

TEST_CASE("dijkstra equals all-paths enumeration on random graphs") {
  Stream s = seeded_stream(33, "dij-oracle");
  for (int iter = 0; iter < 120; ++iter) {
    int n = s.range(3, 8);
    Graph g = random_graph(n, 0.5, s);
    for (auto& e : g.edges) (void)e, g.weights.push_back(s.range(1, 9));
    int t = n - 1;
    CHECK(graphs::shortest_distance(g, 0, t) == all_paths_oracle(g, 0, t));
  }
}

TEST_CASE("flow basics: single edge and disjoint unit paths") {
  Graph g1 = make(2, {{0, 1}});
  g1.directed = true;
  g1.capacities = {5};
  CHECK(graphs::max_flow(g1, 0, 1) == 5);

  Graph g2 = make(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
  g2.directed = true;
  g2.capacities = {1, 1, 1, 1};
  CHECK(graphs::max_flow(g2, 0, 3) == 2);
}

TEST_CASE("max flow equals brute-force min cut on random layered dags") {
  Stream s = seeded_stream(34, "flow-oracle");
  int done = 0;
  for (int iter = 0; iter < 200 && done < 100; ++iter) {
    // 3 layers, up to 8 nodes
    int mid1 = s.range(1, 3), mid2 = s.range(1, 3);
    int n = 2 + mid1 + mid2;
    Graph g;
    g.n = n;
    g.directed = true;
    auto add = [&](int u, int v) {
      g.edges.push_back({u, v});
      g.capacities.push_back(s.range(1, 9));
    };
    for (int i = 0; i < mid1; ++i) add(0, 1 + i);
    for (int i = 0; i < mid1; ++i)
      for (int j = 0; j < mid2; ++j)
        if (s.chance(0.7)) add(1 + i, 1 + mid1 + j);
    for (int j = 0; j < mid2; ++j) add(1 + mid1 + j, n - 1);
    long long f = graphs::max_flow(g, 0, n - 1);
    CHECK(f == min_cut_oracle(g, 0, n - 1));
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("kahn order is valid and matches the forward-edge oracle") {
  Graph chain = make(3, {{0, 1}, {1, 2}});
  chain.directed = true;
  CHECK(graphs::topo_order(chain) == std::vector<int>{0, 1, 2});

  Graph loose = make(3, {});
  loose.directed = true;
  // with no edges every permutation passes the checker
  CHECK(graphs::check_topo_order(loose, {2, 0, 1}));

  Stream s = seeded_stream(35, "topo-oracle");
  for (int iter = 0; iter < 60; ++iter) {
    int n = s.range(3, 7);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    s.shuffle(perm);
    Graph g;
    g.n = n;
    g.directed = true;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (s.chance(0.4)) g.edges.push_back({perm[i], perm[j]});
    auto order = graphs::topo_order(g);
    CHECK(graphs::check_topo_order(g, order));
    // our checker agrees with a direct position comparison on random perms
    for (int k = 0; k < 20; ++k) {
      std::vector<int> cand(n);
      std::iota(cand.begin(), cand.end(), 0);
      s.shuffle(cand);
      std::vector<int> pos(n);
      for (int i = 0; i < n; ++i) pos[cand[i]] = i;
      bool expect = true;
      for (auto& e : g.edges)
        if (pos[e[0]] >= pos[e[1]]) expect = false;
      CHECK(graphs::check_topo_order(g, cand) == expect);
    }
  }
}

TEST_CASE("isomorphism matches the n! oracle on random pairs") {
  Stream s = seeded_stream(36, "iso-oracle");
  for (int iter = 0; iter < 80; ++iter) {
    int n = s.range(3, 6);
    Graph a = random_graph(n, 0.5, s);
    Graph b;
    if (s.chance(0.5)) {
      // random relabeling: must be isomorphic
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      s.shuffle(perm);
      b.n = n;
      for (auto& e : a.edges) {
        int u = perm[e[0]], v = perm[e[1]];
        b.edges.push_back({std::min(u, v), std::max(u, v)});
      }
      CHECK(graphs::isomorphic(a, b));
    } else {
      b = random_graph(n, 0.5, s);
      CHECK(graphs::isomorphic(a, b) == iso_oracle(a, b));
    }
  }
}

TEST_CASE("isomorphism detects differing degree sequences fast") {
  Graph a = make(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph b = make(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_FALSE(graphs::isomorphic(a, b));
}

TEST_CASE("graph task instances verify their own ground truth") {
  Stream s = seeded_stream(99, "graph-gen");
  for (const char* task : {"euler_cycle", "euler_path", "hamiltonian_cycle", "hamiltonian_path",
                           "max_flow", "shortest_distance", "topological_sort",
                           "graph_isomorphism"}) {
    for (int level = 1; level <= 5; ++level) {
      for (int k = 0; k < 3; ++k) {
        auto inst = generate_instance(task, level, s.next());
        auto v = verify_answer(inst, inst.ground_truth);
        CHECK(v.accepted);
      }
    }
  }
}

TEST_CASE("existence task pools contain both yes and no at every level") {
  for (const char* task : {"euler_cycle", "euler_path", "hamiltonian_cycle", "hamiltonian_path"}) {
    for (int level = 1; level <= 5; ++level) {
      int yes = 0, no = 0;
      for (int k = 0; k < 50; ++k) {
        auto inst = generate_instance(task, level, instance_seed(task, level, k, 77));
        (inst.ground_truth == "No" ? no : yes)++;
      }
      CHECK(yes > 0);
      CHECK(no > 0);
      CHECK(yes > no);  // 70/30 mix favors constructive answers
    }
  }
}

TEST_CASE("rotated eulerian cycles are accepted, not just the stored one") {
  // build an instance and rotate its ground-truth walk
  auto inst = [] {
    Stream s = seeded_stream(5, "euler-rot");
    for (int k = 0; k < 200; ++k) {
      auto i = generate_instance("euler_cycle", 1, s.next());
      if (i.ground_truth != "No") return i;
    }
    throw std::runtime_error("no yes-instance found");
  }();
  Grammar g;
  g.kind = AnswerKind::Decision;
  auto parsed = parse_answer(g, inst.ground_truth);
  REQUIRE(parsed.ok());
  auto d = std::get<Decision>(*parsed.value);
  std::vector<int> walk;
  for (auto& tok : d.list) walk.push_back(std::stoi(tok));
  REQUIRE(walk.front() == walk.back());
  walk.pop_back();
  std::rotate(walk.begin(), walk.begin() + 1, walk.end());
  walk.push_back(walk.front());
  std::string rotated = "[";
  for (size_t i = 0; i < walk.size(); ++i)
    rotated += (i ? ", " : "") + std::to_string(walk[i]);
  rotated += "]";
  CHECK(verify_answer(inst, rotated).accepted);
}

TEST_CASE("hamiltonian path answers must honor the start vertex") {
  Stream s = seeded_stream(6, "ham-start");
  for (int k = 0; k < 100; ++k) {
    auto inst = generate_instance("hamiltonian_path", 1, s.next());
    if (inst.ground_truth == "No") continue;
    // reversed path starts at the wrong vertex unless palindromic start
    Grammar g;
    g.kind = AnswerKind::Decision;
    auto parsed = parse_answer(g, inst.ground_truth);
    auto d = std::get<Decision>(*parsed.value);
    std::vector<int> seq;
    for (auto& tok : d.list) seq.push_back(std::stoi(tok));
    std::reverse(seq.begin(), seq.end());
    int start = inst.initial_state.at("start").get<int>();
    if (seq.front() == start) continue;
    std::string rev = "[";
    for (size_t i = 0; i < seq.size(); ++i) rev += (i ? ", " : "") + std::to_string(seq[i]);
    rev += "]";
    auto v = verify_answer(inst, rev);
    CHECK_FALSE(v.accepted);
    break;
  }
}
