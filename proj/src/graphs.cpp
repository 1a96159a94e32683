#include "taskforge/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace forge::graphs {

bool Graph::has_edge(int u, int v) const {
  for (auto& e : edges) {
    if (e[0] == u && e[1] == v) return true;
    if (!directed && e[0] == v && e[1] == u) return true;
  }
  return false;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n, 0);
  for (auto& e : edges) {
    ++deg[e[0]];
    ++deg[e[1]];
  }
  return deg;
}

bool Graph::connected() const {
  if (n == 0) return true;
  std::vector<std::vector<int>> adj(n);
  for (auto& e : edges) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++visited;
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return visited == n;
}

std::optional<std::vector<int>> eulerian_walk(const Graph& g, bool cycle) {
  if (!g.connected()) return std::nullopt;
  auto deg = g.degrees();
  std::vector<int> odd;
  for (int v = 0; v < g.n; ++v)
    if (deg[v] % 2) odd.push_back(v);
  if (cycle && !odd.empty()) return std::nullopt;
  if (!cycle && odd.size() != 0 && odd.size() != 2) return std::nullopt;

  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (to, edge id)
  for (size_t i = 0; i < g.edges.size(); ++i) {
    adj[g.edges[i][0]].push_back({g.edges[i][1], static_cast<int>(i)});
    adj[g.edges[i][1]].push_back({g.edges[i][0], static_cast<int>(i)});
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<char> used(g.edges.size(), 0);
  std::vector<size_t> it(g.n, 0);
  int start = odd.empty() ? 0 : odd[0];
  std::vector<int> stack{start}, walk;
  while (!stack.empty()) {
    int v = stack.back();
    bool advanced = false;
    while (it[v] < adj[v].size()) {
      auto [to, id] = adj[v][it[v]];
      ++it[v];
      if (used[id]) continue;
      used[id] = 1;
      stack.push_back(to);
      advanced = true;
      break;
    }
    if (!advanced) {
      walk.push_back(v);
      stack.pop_back();
    }
  }
  if (walk.size() != g.edges.size() + 1) return std::nullopt;
  std::reverse(walk.begin(), walk.end());
  return walk;
}

namespace {

std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (auto& e : g.edges) {
    adj[e[0]].push_back(e[1]);
    if (!g.directed) adj[e[1]].push_back(e[0]);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return adj;
}

// remaining unvisited vertices must stay reachable from the path head
bool remainder_connected(const std::vector<std::vector<int>>& adj, const std::vector<char>& visited,
                         int cur, int n) {
  int target = 0;
  for (int v = 0; v < n; ++v) target += !visited[v];
  if (target == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack;
  for (int v : adj[cur]) {
    if (!visited[v]) {
      stack.push_back(v);
      seen[v] = 1;
    }
  }
  if (stack.empty()) return false;
  int reached = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++reached;
    for (int v : adj[u]) {
      if (!visited[v] && !seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return reached == target;
}

}  // namespace

std::optional<std::vector<int>> hamiltonian(const Graph& g, bool cycle, int start) {
  if (g.n == 0) return std::nullopt;
  auto adj = adjacency(g);
  std::vector<int> anchors;
  if (cycle) {
    anchors.push_back(0);  // rotation-invariant
  } else if (start >= 0) {
    anchors.push_back(start);
  } else {
    for (int v = 0; v < g.n; ++v) anchors.push_back(v);
  }
  for (int anchor : anchors) {
    std::vector<int> path{anchor};
    std::vector<char> visited(g.n, 0);
    visited[anchor] = 1;
    std::function<bool()> rec = [&]() -> bool {
      if (static_cast<int>(path.size()) == g.n) {
        if (!cycle) return true;
        for (int v : adj[path.back()])
          if (v == anchor) return true;
        return false;
      }
      int cur = path.back();
      if (!remainder_connected(adj, visited, cur, g.n)) return false;
      for (int v : adj[cur]) {
        if (visited[v]) continue;
        visited[v] = 1;
        path.push_back(v);
        if (rec()) return true;
        path.pop_back();
        visited[v] = 0;
      }
      return false;
    };
    if (rec()) return path;
  }
  return std::nullopt;
}

long long shortest_distance(const Graph& g, int s, int t) {
  std::vector<std::vector<std::pair<int, long long>>> adj(g.n);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    long long w = g.weights.empty() ? 1 : g.weights[i];
    adj[g.edges[i][0]].push_back({g.edges[i][1], w});
    if (!g.directed) adj[g.edges[i][1]].push_back({g.edges[i][0], w});
  }
  std::vector<long long> dist(g.n, -1);
  std::priority_queue<std::pair<long long, int>, std::vector<std::pair<long long, int>>,
                      std::greater<>>
      pq;
  pq.push({0, s});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (dist[u] != -1) continue;
    dist[u] = d;
    for (auto [v, w] : adj[u]) {
      if (dist[v] == -1) pq.push({d + w, v});
    }
  }
  return dist[t];
}

long long max_flow(const Graph& g, int s, int t) {
  int n = g.n;
  std::vector<std::vector<long long>> cap(n, std::vector<long long>(n, 0));
  for (size_t i = 0; i < g.edges.size(); ++i) {
    cap[g.edges[i][0]][g.edges[i][1]] += g.capacities.empty() ? 1 : g.capacities[i];
  }
  long long flow = 0;
  while (true) {
    std::vector<int> parent(n, -1);
    parent[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && parent[t] == -1) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (parent[v] == -1 && cap[u][v] > 0) {
          parent[v] = u;
          q.push(v);
        }
      }
    }
    if (parent[t] == -1) break;
    long long aug = -1;
    for (int v = t; v != s; v = parent[v]) {
      long long c = cap[parent[v]][v];
      aug = aug < 0 ? c : std::min(aug, c);
    }
    for (int v = t; v != s; v = parent[v]) {
      cap[parent[v]][v] -= aug;
      cap[v][parent[v]] += aug;
    }
    flow += aug;
  }
  return flow;
}

std::vector<int> topo_order(const Graph& g) {
  std::vector<int> indeg(g.n, 0);
  std::vector<std::vector<int>> adj(g.n);
  for (auto& e : g.edges) {
    adj[e[0]].push_back(e[1]);
    ++indeg[e[1]];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < g.n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int v : adj[u]) {
      if (--indeg[v] == 0) ready.push(v);
    }
  }
  if (static_cast<int>(order.size()) != g.n) throw std::runtime_error("cycle_detected");
  return order;
}

namespace {

// joint 1-WL refinement: one signature->id map shared by both graphs per
// round, so color ids are comparable across graphs; pruning only, never
// acceptance
void refine_colors_joint(const Graph& a, const Graph& b, std::vector<int>& ca,
                         std::vector<int>& cb) {
  auto adj_a = adjacency(a), adj_b = adjacency(b);
  ca.assign(a.n, 0);
  cb.assign(b.n, 0);
  for (int round = 0; round < a.n + 1; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto sig_of = [&](const std::vector<std::vector<int>>& adj, const std::vector<int>& col,
                      int v) {
      std::vector<int> sig;
      for (int u : adj[v]) sig.push_back(col[u]);
      std::sort(sig.begin(), sig.end());
      return std::make_pair(col[v], sig);
    };
    auto id_of = [&](std::pair<int, std::vector<int>> key) {
      auto it = ids.find(key);
      if (it == ids.end()) it = ids.emplace(std::move(key), static_cast<int>(ids.size())).first;
      return it->second;
    };
    std::vector<int> na(a.n), nb(b.n);
    for (int v = 0; v < a.n; ++v) na[v] = id_of(sig_of(adj_a, ca, v));
    for (int v = 0; v < b.n; ++v) nb[v] = id_of(sig_of(adj_b, cb, v));
    if (na == ca && nb == cb) break;
    ca = na;
    cb = nb;
  }
}

// canonical color histograms must match for the refinement screen to pass
bool same_color_profile(std::vector<int> a, std::vector<int> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  {
    auto da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
  }
  std::vector<int> ca, cb;
  refine_colors_joint(a, b, ca, cb);
  if (!same_color_profile(ca, cb)) return false;

  auto adj_a = adjacency(a);
  std::vector<int> map_ab(a.n, -1), map_ba(b.n, -1);
  std::vector<int> order(a.n);
  for (int i = 0; i < a.n; ++i) order[i] = i;
  std::map<int, int> color_count;
  for (int c : ca) ++color_count[c];
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (color_count[ca[x]] != color_count[ca[y]]) return color_count[ca[x]] < color_count[ca[y]];
    return x < y;
  });
  std::function<bool(int)> rec = [&](int idx) -> bool {
    if (idx == a.n) return true;
    int u = order[idx];
    for (int v = 0; v < b.n; ++v) {
      if (map_ba[v] != -1 || cb[v] != ca[u]) continue;
      bool ok = true;
      for (int w = 0; w < a.n && ok; ++w) {
        if (map_ab[w] == -1) continue;
        if (a.has_edge(u, w) != b.has_edge(v, map_ab[w])) ok = false;
      }
      if (!ok) continue;
      map_ab[u] = v;
      map_ba[v] = u;
      if (rec(idx + 1)) return true;
      map_ab[u] = -1;
      map_ba[v] = -1;
    }
    return false;
  };
  return rec(0);
}

bool check_eulerian_walk(const Graph& g, const std::vector<int>& walk, bool cycle) {
  if (walk.size() < 2) return g.edges.empty();
  for (int v : walk)
    if (v < 0 || v >= g.n) return false;
  std::vector<int> seq = walk;
  if (cycle && seq.front() != seq.back()) seq.push_back(seq.front());  // implicit closure
  std::multiset<std::pair<int, int>> pool;
  for (auto& e : g.edges) pool.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    std::pair<int, int> key{std::min(seq[i], seq[i + 1]), std::max(seq[i], seq[i + 1])};
    auto it = pool.find(key);
    if (it == pool.end()) return false;  // nonexistent or reused edge
    pool.erase(it);
  }
  return pool.empty();
}

bool check_hamiltonian_seq(const Graph& g, const std::vector<int>& seq, bool cycle, int start) {
  std::vector<int> s = seq;
  if (cycle && s.size() == static_cast<size_t>(g.n) + 1 && s.front() == s.back()) s.pop_back();
  if (static_cast<int>(s.size()) != g.n) return false;
  std::vector<char> seen(g.n, 0);
  for (int v : s) {
    if (v < 0 || v >= g.n || seen[v]) return false;
    seen[v] = 1;
  }
  if (start >= 0 && s.front() != start) return false;
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (!g.has_edge(s[i], s[i + 1])) return false;
  if (cycle && !g.has_edge(s.back(), s.front())) return false;
  return true;
}

bool check_topo_order(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n) return false;
  std::vector<int> pos(g.n, -1);
  for (size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    if (v < 0 || v >= g.n || pos[v] != -1) return false;
    pos[v] = static_cast<int>(i);
  }
  for (auto& e : g.edges)
    if (pos[e[0]] >= pos[e[1]]) return false;
  return true;
}

}  // namespace forge::graphs
