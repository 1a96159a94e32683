#include <algorithm>
#include <functional>
#include <queue>
#include <set>

#include "taskforge/graphs.hpp"
#include "taskforge/svg.hpp"
#include "taskforge/task.hpp"

namespace forge {
namespace {

using graphs::Graph;

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n;
  Json edges = Json::array();
  for (auto& e : g.edges) edges.push_back(Json::array({e[0], e[1]}));
  j["edges"] = edges;
  if (!g.weights.empty()) j["weights"] = g.weights;
  if (!g.capacities.empty()) j["capacities"] = g.capacities;
  return j;
}

Graph graph_from_json(const Json& j, bool directed) {
  Graph g;
  g.directed = directed;
  g.n = j.at("n").get<int>();
  for (auto& e : j.at("edges")) g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
  if (j.contains("weights")) g.weights = j.at("weights").get<std::vector<int>>();
  if (j.contains("capacities")) g.capacities = j.at("capacities").get<std::vector<int>>();
  return g;
}

Graph random_connected(int n, int extra, Stream& s) {
  Graph g;
  g.n = n;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  s.shuffle(order);
  std::set<std::pair<int, int>> seen;
  auto add = [&](int u, int v) {
    if (u == v) return false;
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second) return false;
    g.edges.push_back({key.first, key.second});
    return true;
  };
  for (int i = 1; i < n; ++i) add(order[i], order[s.below(i)]);
  for (int tries = 0; tries < extra * 4 && static_cast<int>(g.edges.size()) < n - 1 + extra;
       ++tries) {
    add(s.range(0, n - 1), s.range(0, n - 1));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<int> odd_vertices(const Graph& g) {
  auto deg = g.degrees();
  std::vector<int> odd;
  for (int v = 0; v < g.n; ++v)
    if (deg[v] % 2) odd.push_back(v);
  return odd;
}

bool add_edge_if_absent(Graph& g, int u, int v) {
  if (u == v || g.has_edge(u, v)) return false;
  g.edges.push_back({std::min(u, v), std::max(u, v)});
  std::sort(g.edges.begin(), g.edges.end());
  return true;
}

std::string node_list_text(const std::vector<int>& seq) {
  std::string out = "[";
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(seq[i]);
  }
  return out + "]";
}

std::vector<int> decision_ints(const Decision& d, bool& ok) {
  std::vector<int> out;
  ok = true;
  for (const auto& tok : d.list) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) {
        ok = false;
        return out;
      }
      out.push_back(v);
    } catch (...) {
      ok = false;
      return out;
    }
  }
  return out;
}

// ------------------------------------------------------------- rendering

struct Layout {
  std::vector<std::pair<int, int>> pos;
  int w = 0, h = 0;
};

Layout circle_layout(int n, int cx_off = 0) {
  Layout out;
  int radius = kCell * (n <= 8 ? 3 : 4);
  int cx = radius + kCell + cx_off, cy = radius + kCell;
  for (int v = 0; v < n; ++v) {
    double ang = -1.5707963 + 2 * 3.14159265 * v / n;
    out.pos.push_back({cx + static_cast<int>(radius * std::cos(ang)),
                       cy + static_cast<int>(radius * std::sin(ang))});
  }
  out.w = 2 * (radius + kCell) + cx_off;
  out.h = 2 * (radius + kCell);
  return out;
}

void draw_graph(SvgCanvas& svg, const Graph& g, const Layout& ly, bool directed,
                const std::vector<int>* edge_labels, int highlight = -1) {
  for (size_t i = 0; i < g.edges.size(); ++i) {
    auto [x1, y1] = ly.pos[g.edges[i][0]];
    auto [x2, y2] = ly.pos[g.edges[i][1]];
    svg.line(x1, y1, x2, y2, "#444444", 2);
    if (directed) {
      // arrowhead at 75% along the edge
      double t = 0.75;
      int ax = static_cast<int>(x1 + (x2 - x1) * t), ay = static_cast<int>(y1 + (y2 - y1) * t);
      double dx = x2 - x1, dy = y2 - y1;
      double len = std::max(1.0, std::sqrt(dx * dx + dy * dy));
      dx /= len;
      dy /= len;
      int px = static_cast<int>(-dy * 6), py = static_cast<int>(dx * 6);
      svg.polygon({{ax + static_cast<int>(dx * 10), ay + static_cast<int>(dy * 10)},
                   {ax + px, ay + py},
                   {ax - px, ay - py}},
                  "#444444");
    }
    if (edge_labels) {
      int mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
      svg.circle(mx, my, 11, "#ffffff", "#bbbbbb", 1);
      svg.text(mx, my + 5, std::to_string((*edge_labels)[i]), 13, "#b03030");
    }
  }
  for (int v = 0; v < g.n; ++v) {
    auto [x, y] = ly.pos[v];
    svg.circle(x, y, 16, v == highlight ? "#e06060" : "#dce8f8", "#223355", 2);
    svg.text(x, y + 5, std::to_string(v), 15, "#000000", "middle", true);
  }
}

std::string edges_text(const Graph& g) {
  std::string s;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(g.edges[i][0]) + ", " + std::to_string(g.edges[i][1]) + ")";
  }
  return s;
}

std::string weighted_edges_text(const Graph& g, const std::vector<int>& vals) {
  std::string s;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (i) s += ", ";
    s += "(" + std::to_string(g.edges[i][0]) + ", " + std::to_string(g.edges[i][1]) + ", " +
         std::to_string(vals[i]) + ")";
  }
  return s;
}

// -------------------------------------------------------- eulerian tasks

void register_euler(Registry& reg, bool cycle) {
  TaskSpec spec;
  spec.name = cycle ? "euler_cycle" : "euler_path";
  spec.category = Category::Graph;
  spec.mode = VerifyMode::Simulate;
  spec.grammar.id = spec.name;
  spec.grammar.kind = AnswerKind::Decision;
  for (int lv = 1; lv <= 5; ++lv)
    spec.level_params[lv - 1] = std::to_string(4 + 2 * lv) + " vertices, 70% yes";
  bool is_cycle = cycle;
  spec.generate = [is_cycle](int level, Stream& s) -> std::optional<GenResult> {
    int n = 4 + 2 * level;
    // one coin per attempt, then an inner loop realizes the drawn side so the
    // emitted mix tracks 70/30 instead of each side's construction yield
    bool want_yes = s.chance(0.7);
    std::string question =
        std::string("Given the undirected, connected graph below, determine if there is an "
                    "Eulerian ") +
        (is_cycle ? "cycle. If it exists, output the cycle as a list (e.g., [0,1,2,3,0])."
                  : "path. If it exists, output the path as a list (e.g., [0,1,2,3]).") +
        " If not, output 'No'.";
    for (int inner = 0; inner < 40; ++inner) {
      Graph g = random_connected(n, n / 2 + level, s);
      if (want_yes) {
        auto odd = odd_vertices(g);
        s.shuffle(odd);
        size_t keep_open = is_cycle ? 0 : 2;
        bool fixed = true;
        while (odd.size() > keep_open) {
          int u = odd[odd.size() - 1], v = odd[odd.size() - 2];
          odd.pop_back();
          odd.pop_back();
          if (add_edge_if_absent(g, u, v)) continue;
          // adjacent pair: route parity through a fresh intermediate vertex
          bool routed = false;
          for (int w = 0; w < n && !routed; ++w) {
            if (w == u || w == v) continue;
            if (!g.has_edge(u, w) && !g.has_edge(w, v)) {
              add_edge_if_absent(g, u, w);
              add_edge_if_absent(g, w, v);
              routed = true;
            }
          }
          if (!routed) {
            fixed = false;
            break;
          }
        }
        if (!fixed) continue;
        if (!is_cycle && odd_vertices(g).empty()) {
          // a fully even graph also has an eulerian path; keep it
        }
        auto walk = graphs::eulerian_walk(g, is_cycle);
        if (!walk) continue;
        GenResult r;
        r.state = graph_to_json(g);
        r.ground_truth = node_list_text(*walk);
        r.question = question;
        return r;
      }
      // forced-no: break the parity condition, keep connectivity
      for (int tries = 0; tries < 20; ++tries) {
        auto odd = odd_vertices(g);
        size_t need = is_cycle ? 2 : 4;
        if (odd.size() >= need) break;
        add_edge_if_absent(g, s.range(0, n - 1), s.range(0, n - 1));
      }
      if (graphs::eulerian_walk(g, is_cycle)) continue;
      GenResult r;
      r.state = graph_to_json(g);
      r.ground_truth = "No";
      r.question = question;
      return r;
    }
    return std::nullopt;
  };
  spec.solve = [is_cycle](const Json& state) {
    Graph g = graph_from_json(state, false);
    auto walk = graphs::eulerian_walk(g, is_cycle);
    return walk ? node_list_text(*walk) : std::string("No");
  };
  spec.check = [is_cycle](const TaskInstance& t, const ParsedAnswer& a) {
    Graph g = graph_from_json(t.initial_state, false);
    const auto& d = std::get<Decision>(a);
    bool exists = graphs::eulerian_walk(g, is_cycle).has_value();
    if (d.kind == Decision::No)
      return exists ? Verdict::reject(FailReason::WrongValue, "No") : Verdict::accept("No");
    if (d.kind == Decision::Yes) return Verdict::reject(FailReason::Incomplete, "Yes");
    bool ok = false;
    auto walk = decision_ints(d, ok);
    if (!ok) return Verdict::reject(FailReason::ParseError);
    std::string norm = node_list_text(walk);
    if (!graphs::check_eulerian_walk(g, walk, is_cycle))
      return Verdict::reject(FailReason::RuleViolation, norm);
    return Verdict::accept(norm);
  };
  spec.state_text = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, false);
    return "Vertices: 0.." + std::to_string(g.n - 1) + ". Edges: " + edges_text(g);
  };
  spec.image_svg = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, false);
    Layout ly = circle_layout(g.n);
    SvgCanvas svg(ly.w, ly.h);
    draw_graph(svg, g, ly, false, nullptr);
    return svg.finish();
  };
  spec.trace = [is_cycle](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, false);
    std::vector<TraceStep> steps;
    auto deg = g.degrees();
    std::string degtxt;
    for (int v = 0; v < g.n; ++v) {
      if (v) degtxt += ", ";
      degtxt += std::to_string(v) + ":" + std::to_string(deg[v]);
    }
    steps.push_back({"Reading the graph, the vertex degrees are " + degtxt + ".",
                     {{0, AnchorKind::StateReading, degtxt}}});
    auto odd = odd_vertices(g);
    steps.push_back({"There are " + std::to_string(odd.size()) + " odd-degree vertices" +
                         (odd.empty() ? "" : " (" + node_list_text(odd) + ")") + ".",
                     {{0, AnchorKind::KeyCalculation,
                       std::to_string(odd.size()) + " odd vertices"}}});
    auto walk = graphs::eulerian_walk(g, is_cycle);
    if (!walk) {
      steps.push_back({std::string("An Eulerian ") + (is_cycle ? "cycle" : "path") +
                           " requires " + (is_cycle ? "every degree even" : "0 or 2 odd degrees") +
                           ", which fails here, so the answer is No.",
                       {{0, AnchorKind::DecisionPoint, "No"}}});
      return steps;
    }
    for (size_t i = 0; i + 1 < walk->size(); ++i) {
      TraceStep st{"Traverse edge " + std::to_string(i + 1) + " of " +
                       std::to_string(g.edges.size()) + ": " + std::to_string((*walk)[i]) +
                       " -> " + std::to_string((*walk)[i + 1]) + ".",
                   {}};
      if ((i + 1) % 3 == 0 || i + 2 == walk->size()) {
        std::vector<int> prefix(walk->begin(), walk->begin() + i + 2);
        st.anchors.push_back({0, AnchorKind::IntermediateState, node_list_text(prefix)});
      }
      steps.push_back(std::move(st));
    }
    steps.push_back({"Every edge is used exactly once, so the walk is valid.",
                     {{0, AnchorKind::DecisionPoint, "walk covers all edges"}}});
    return steps;
  };
  reg.add(std::move(spec));
}

// ------------------------------------------------------ hamiltonian tasks

void register_hamiltonian(Registry& reg, bool cycle) {
  TaskSpec spec;
  spec.name = cycle ? "hamiltonian_cycle" : "hamiltonian_path";
  spec.category = Category::Graph;
  spec.mode = VerifyMode::Simulate;
  spec.grammar.id = spec.name;
  spec.grammar.kind = AnswerKind::Decision;
  for (int lv = 1; lv <= 5; ++lv)
    spec.level_params[lv - 1] = std::to_string(4 + 2 * lv) + " vertices, 70% yes";
  bool is_cycle = cycle;
  spec.generate = [is_cycle](int level, Stream& s) -> std::optional<GenResult> {
    int n = 4 + 2 * level;
    bool want_yes = s.chance(0.7);
    Graph g;
    int start = -1;
    if (want_yes) {
      g.n = n;
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      s.shuffle(perm);
      std::set<std::pair<int, int>> seen;
      auto add = [&](int u, int v) {
        auto key = std::minmax(u, v);
        if (seen.insert({key.first, key.second}).second)
          g.edges.push_back({key.first, key.second});
      };
      for (int i = 0; i + 1 < n; ++i) add(perm[i], perm[i + 1]);
      if (is_cycle) add(perm[n - 1], perm[0]);
      int extra = n / 2;
      for (int k = 0; k < extra * 3 && static_cast<int>(g.edges.size()) < n + extra; ++k)
        add(s.range(0, n - 1), s.range(0, n - 1));
      std::sort(g.edges.begin(), g.edges.end());
      if (!is_cycle) start = perm[0];
    } else {
      g = random_connected(n, 1, s);
      if (!is_cycle) start = s.range(0, n - 1);
      if (graphs::hamiltonian(g, is_cycle, start)) return std::nullopt;
    }
    auto found = graphs::hamiltonian(g, is_cycle, start);
    if (want_yes && !found) return std::nullopt;
    GenResult r;
    Json st = graph_to_json(g);
    if (!is_cycle) st["start"] = start;
    r.state = st;
    r.ground_truth = found ? node_list_text(*found) : std::string("No");
    if (is_cycle) {
      r.question =
          "Given the undirected, connected graph below, determine if there is a Hamiltonian "
          "cycle. If it exists, output the cycle as a list (e.g., [0,1,2,3]). If not, output "
          "'No'.";
    } else {
      r.question = "Given an undirected graph below, determine whether a Hamiltonian path "
                   "starting from vertex " +
                   std::to_string(start) +
                   " (marked in red) exists. If it exists, output the path as a list (e.g., "
                   "[0,1,2,3]). If not, output 'No'.";
    }
    return r;
  };
  spec.solve = [is_cycle](const Json& state) {
    Graph g = graph_from_json(state, false);
    int start = state.contains("start") ? state.at("start").get<int>() : -1;
    auto found = graphs::hamiltonian(g, is_cycle, start);
    return found ? node_list_text(*found) : std::string("No");
  };
  spec.check = [is_cycle](const TaskInstance& t, const ParsedAnswer& a) {
    Graph g = graph_from_json(t.initial_state, false);
    int start =
        t.initial_state.contains("start") ? t.initial_state.at("start").get<int>() : -1;
    const auto& d = std::get<Decision>(a);
    if (d.kind == Decision::No) {
      bool exists = graphs::hamiltonian(g, is_cycle, start).has_value();
      return exists ? Verdict::reject(FailReason::WrongValue, "No") : Verdict::accept("No");
    }
    if (d.kind == Decision::Yes) return Verdict::reject(FailReason::Incomplete, "Yes");
    bool ok = false;
    auto seq = decision_ints(d, ok);
    if (!ok) return Verdict::reject(FailReason::ParseError);
    std::string norm = node_list_text(seq);
    if (!graphs::check_hamiltonian_seq(g, seq, is_cycle, start))
      return Verdict::reject(FailReason::RuleViolation, norm);
    return Verdict::accept(norm);
  };
  spec.state_text = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, false);
    std::string s = "Vertices: 0.." + std::to_string(g.n - 1) + ". Edges: " + edges_text(g);
    if (t.initial_state.contains("start"))
      s += ". Start vertex: " + std::to_string(t.initial_state.at("start").get<int>());
    return s;
  };
  spec.image_svg = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, false);
    int start =
        t.initial_state.contains("start") ? t.initial_state.at("start").get<int>() : -1;
    Layout ly = circle_layout(g.n);
    SvgCanvas svg(ly.w, ly.h);
    draw_graph(svg, g, ly, false, nullptr, start);
    return svg.finish();
  };
  spec.trace = [is_cycle](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, false);
    int start =
        t.initial_state.contains("start") ? t.initial_state.at("start").get<int>() : -1;
    std::vector<TraceStep> steps;
    steps.push_back({"The graph has " + std::to_string(g.n) + " vertices and " +
                         std::to_string(g.edges.size()) + " edges: " + edges_text(g) + ".",
                     {{0, AnchorKind::StateReading, edges_text(g)}}});
    auto found = graphs::hamiltonian(g, is_cycle, start);
    if (!found) {
      steps.push_back(
          {"Systematic backtracking over every extension order exhausts all branches without "
           "visiting every vertex once, so the answer is No.",
           {{0, AnchorKind::DecisionPoint, "No"}}});
      return steps;
    }
    for (size_t i = 0; i < found->size(); ++i) {
      std::vector<int> prefix(found->begin(), found->begin() + i + 1);
      TraceStep st{(i == 0 ? "Start at vertex " + std::to_string((*found)[0])
                           : "Extend the path to vertex " + std::to_string((*found)[i])) +
                       " (" + std::to_string(i + 1) + "/" + std::to_string(g.n) + " visited).",
                   {}};
      if (i % 2 == 1 || i + 1 == found->size())
        st.anchors.push_back({0, AnchorKind::IntermediateState, node_list_text(prefix)});
      steps.push_back(std::move(st));
    }
    if (is_cycle)
      steps.push_back({"The last vertex connects back to the start, closing the cycle.",
                       {{0, AnchorKind::DecisionPoint, "cycle closes"}}});
    return steps;
  };
  reg.add(std::move(spec));
}

// ------------------------------------------------------------- max flow

void register_max_flow(Registry& reg) {
  TaskSpec spec;
  spec.name = "max_flow";
  spec.category = Category::Graph;
  spec.mode = VerifyMode::ExactMatch;
  spec.grammar.id = "max_flow";
  spec.grammar.kind = AnswerKind::Scalar;
  for (int lv = 1; lv <= 5; ++lv)
    spec.level_params[lv - 1] = std::to_string(2 + lv) + " layers";
  spec.generate = [](int level, Stream& s) -> std::optional<GenResult> {
    int layers = 2 + level;
    std::vector<std::vector<int>> layer_nodes;
    int next_id = 0;
    for (int l = 0; l < layers; ++l) {
      int count = (l == 0 || l == layers - 1) ? 1 : s.range(2, 3);
      std::vector<int> ids;
      for (int k = 0; k < count; ++k) ids.push_back(next_id++);
      layer_nodes.push_back(ids);
    }
    Graph g;
    g.n = next_id;
    g.directed = true;
    std::set<std::pair<int, int>> seen;
    auto add = [&](int u, int v, int c) {
      if (!seen.insert({u, v}).second) return;
      g.edges.push_back({u, v});
      g.capacities.push_back(c);
    };
    int cap_hi = 7 + 2 * level;
    for (int l = 0; l + 1 < layers; ++l) {
      for (int v : layer_nodes[l + 1]) add(layer_nodes[l][s.below(layer_nodes[l].size())], v,
                                           s.range(2, cap_hi));
      for (int u : layer_nodes[l]) add(u, layer_nodes[l + 1][s.below(layer_nodes[l + 1].size())],
                                       s.range(2, cap_hi));
      // one extra cross edge for width
      add(layer_nodes[l][s.below(layer_nodes[l].size())],
          layer_nodes[l + 1][s.below(layer_nodes[l + 1].size())], s.range(2, cap_hi));
    }
    long long flow = graphs::max_flow(g, 0, g.n - 1);
    if (flow <= 0) return std::nullopt;
    GenResult r;
    Json st = graph_to_json(g);
    st["source"] = 0;
    st["sink"] = g.n - 1;
    Json jl = Json::array();
    for (auto& ln : layer_nodes) jl.push_back(ln);
    st["layers"] = jl;
    r.state = st;
    r.ground_truth = std::to_string(flow);
    r.question = "Below is a layered directed acyclic graph (DAG) with capacities on each "
                 "edge. Compute the maximum flow from node 0 to node " +
                 std::to_string(g.n - 1) + ". Answer with the maximum flow value (an integer).";
    return r;
  };
  spec.solve = [](const Json& state) {
    Graph g = graph_from_json(state, true);
    return std::to_string(graphs::max_flow(g, state.at("source").get<int>(),
                                           state.at("sink").get<int>()));
  };
  spec.state_text = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, true);
    return "Directed edges (u, v, capacity): " + weighted_edges_text(g, g.capacities) +
           ". Source: 0. Sink: " + std::to_string(g.n - 1);
  };
  spec.image_svg = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, true);
    auto layers = t.initial_state.at("layers").get<std::vector<std::vector<int>>>();
    Layout ly;
    ly.pos.resize(g.n);
    int max_rows = 1;
    for (auto& l : layers) max_rows = std::max(max_rows, static_cast<int>(l.size()));
    ly.w = static_cast<int>(layers.size()) * 3 * kCell + kCell;
    ly.h = max_rows * 3 * kCell + kCell;
    for (size_t l = 0; l < layers.size(); ++l) {
      for (size_t k = 0; k < layers[l].size(); ++k) {
        int x = kCell + static_cast<int>(l) * 3 * kCell;
        int y = kCell + static_cast<int>(k) * 3 * kCell +
                (max_rows - static_cast<int>(layers[l].size())) * 3 * kCell / 2;
        ly.pos[layers[l][k]] = {x, y};
      }
    }
    SvgCanvas svg(ly.w, ly.h);
    draw_graph(svg, g, ly, true, &g.capacities);
    return svg.finish();
  };
  spec.trace = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, true);
    int s0 = t.initial_state.at("source").get<int>();
    int t0 = t.initial_state.at("sink").get<int>();
    std::vector<TraceStep> steps;
    steps.push_back({"The network edges with capacities are: " +
                         weighted_edges_text(g, g.capacities) + ".",
                     {{0, AnchorKind::StateReading, weighted_edges_text(g, g.capacities)}}});
    // narrate shortest augmenting paths on a residual copy
    std::vector<std::vector<long long>> cap(g.n, std::vector<long long>(g.n, 0));
    for (size_t i = 0; i < g.edges.size(); ++i) cap[g.edges[i][0]][g.edges[i][1]] +=
        g.capacities[i];
    long long flow = 0;
    while (true) {
      std::vector<int> parent(g.n, -1);
      parent[s0] = s0;
      std::queue<int> q;
      q.push(s0);
      while (!q.empty() && parent[t0] == -1) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < g.n; ++v)
          if (parent[v] == -1 && cap[u][v] > 0) {
            parent[v] = u;
            q.push(v);
          }
      }
      if (parent[t0] == -1) break;
      std::vector<int> path;
      long long aug = -1;
      for (int v = t0; v != s0; v = parent[v]) {
        path.push_back(v);
        long long c = cap[parent[v]][v];
        aug = aug < 0 ? c : std::min(aug, c);
      }
      path.push_back(s0);
      std::reverse(path.begin(), path.end());
      for (int v = t0; v != s0; v = parent[v]) {
        cap[parent[v]][v] -= aug;
        cap[v][parent[v]] += aug;
      }
      flow += aug;
      std::string calc = "augment " + node_list_text(path) + " by " + std::to_string(aug) +
                         "; total " + std::to_string(flow);
      steps.push_back({"Shortest augmenting path " + node_list_text(path) + " has bottleneck " +
                           std::to_string(aug) + "; the running flow becomes " +
                           std::to_string(flow) + ".",
                       {{0, AnchorKind::KeyCalculation, calc}}});
    }
    steps.push_back({"No augmenting path remains, so the maximum flow is " +
                         std::to_string(flow) + ".",
                     {{0, AnchorKind::KeyCalculation, std::to_string(flow)}}});
    return steps;
  };
  reg.add(std::move(spec));
}

// ------------------------------------------------------ shortest distance

void register_shortest(Registry& reg) {
  TaskSpec spec;
  spec.name = "shortest_distance";
  spec.category = Category::Graph;
  spec.mode = VerifyMode::ExactMatch;
  spec.grammar.id = "shortest_distance";
  spec.grammar.kind = AnswerKind::Scalar;
  for (int lv = 1; lv <= 5; ++lv)
    spec.level_params[lv - 1] = std::to_string(4 + 2 * lv) + " vertices, weights 1..9";
  spec.generate = [](int level, Stream& s) -> std::optional<GenResult> {
    int n = 4 + 2 * level;
    Graph g = random_connected(n, n, s);
    for (size_t i = 0; i < g.edges.size(); ++i) g.weights.push_back(s.range(1, 9));
    int target = n - 1;
    long long d = graphs::shortest_distance(g, 0, target);
    if (d <= 0) return std::nullopt;
    GenResult r;
    Json st = graph_to_json(g);
    st["source"] = 0;
    st["target"] = target;
    r.state = st;
    r.ground_truth = std::to_string(d);
    r.question = "Given a weighted undirected graph below, what is the shortest distance from "
                 "node 0 to node " +
                 std::to_string(target) + "? Answer with a number (can be integer or decimal).";
    return r;
  };
  spec.solve = [](const Json& state) {
    Graph g = graph_from_json(state, false);
    return std::to_string(graphs::shortest_distance(g, state.at("source").get<int>(),
                                                    state.at("target").get<int>()));
  };
  spec.state_text = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, false);
    return "Edges (u, v, weight): " + weighted_edges_text(g, g.weights) +
           ". Find the shortest distance from node 0 to node " +
           std::to_string(t.initial_state.at("target").get<int>()) + ".";
  };
  spec.image_svg = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, false);
    Layout ly = circle_layout(g.n);
    SvgCanvas svg(ly.w, ly.h);
    draw_graph(svg, g, ly, false, &g.weights);
    return svg.finish();
  };
  spec.trace = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, false);
    int s0 = t.initial_state.at("source").get<int>();
    int t0 = t.initial_state.at("target").get<int>();
    std::vector<TraceStep> steps;
    steps.push_back({"The weighted edges are: " + weighted_edges_text(g, g.weights) + ".",
                     {{0, AnchorKind::StateReading, weighted_edges_text(g, g.weights)}}});
    // narrated dijkstra
    std::vector<std::vector<std::pair<int, long long>>> adj(g.n);
    for (size_t i = 0; i < g.edges.size(); ++i) {
      adj[g.edges[i][0]].push_back({g.edges[i][1], g.weights[i]});
      adj[g.edges[i][1]].push_back({g.edges[i][0], g.weights[i]});
    }
    std::vector<long long> dist(g.n, -1);
    std::priority_queue<std::pair<long long, int>, std::vector<std::pair<long long, int>>,
                        std::greater<>>
        pq;
    pq.push({0, s0});
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (dist[u] != -1) continue;
      dist[u] = d;
      std::string calc = "settle node " + std::to_string(u) + " at distance " + std::to_string(d);
      steps.push_back({"Settle node " + std::to_string(u) + " at distance " + std::to_string(d) +
                           "; relax its neighbors.",
                       {{0, AnchorKind::KeyCalculation, calc}}});
      for (auto [v, w] : adj[u])
        if (dist[v] == -1) pq.push({d + w, v});
    }
    steps.push_back({"Node " + std::to_string(t0) + " settles at distance " +
                         std::to_string(dist[t0]) + ", which is the answer.",
                     {{0, AnchorKind::KeyCalculation, std::to_string(dist[t0])}}});
    return steps;
  };
  reg.add(std::move(spec));
}

// -------------------------------------------------------- topological sort

void register_topo(Registry& reg) {
  TaskSpec spec;
  spec.name = "topological_sort";
  spec.category = Category::Graph;
  spec.mode = VerifyMode::ConstraintCheck;
  spec.grammar.id = "topological_sort";
  spec.grammar.kind = AnswerKind::NodeList;
  spec.grammar.node_style = NodeStyle::IntList;
  for (int lv = 1; lv <= 5; ++lv)
    spec.level_params[lv - 1] = std::to_string(4 + 2 * lv) + " vertices";
  spec.generate = [](int level, Stream& s) -> std::optional<GenResult> {
    int n = 4 + 2 * level;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    s.shuffle(perm);
    Graph g;
    g.n = n;
    g.directed = true;
    std::set<std::pair<int, int>> seen;
    int target_edges = n + n / 2;
    for (int tries = 0; tries < target_edges * 5 &&
                        static_cast<int>(g.edges.size()) < target_edges;
         ++tries) {
      int i = s.range(0, n - 2);
      int j = s.range(i + 1, n - 1);
      if (seen.insert({perm[i], perm[j]}).second) g.edges.push_back({perm[i], perm[j]});
    }
    std::sort(g.edges.begin(), g.edges.end());
    GenResult r;
    r.state = graph_to_json(g);
    r.ground_truth = node_list_text(graphs::topo_order(g));
    r.question = "Given the directed acyclic graph (DAG) shown in the image below, please "
                 "list ONE possible valid topological orders. Answer with a list of numbers. "
                 "For example: [0, 1, 2, 3].";
    return r;
  };
  spec.solve = [](const Json& state) {
    return node_list_text(graphs::topo_order(graph_from_json(state, true)));
  };
  spec.check = [](const TaskInstance& t, const ParsedAnswer& a) {
    Graph g = graph_from_json(t.initial_state, true);
    const auto& nodes = std::get<NodeList>(a);
    Decision d;
    d.kind = Decision::List;
    d.list = nodes;
    bool ok = false;
    auto order = decision_ints(d, ok);
    if (!ok) return Verdict::reject(FailReason::ParseError);
    std::string norm = node_list_text(order);
    if (!graphs::check_topo_order(g, order))
      return Verdict::reject(FailReason::RuleViolation, norm);
    return Verdict::accept(norm);
  };
  spec.state_text = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, true);
    return "Directed edges (u -> v): " + edges_text(g);
  };
  spec.image_svg = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, true);
    Layout ly = circle_layout(g.n);
    SvgCanvas svg(ly.w, ly.h);
    draw_graph(svg, g, ly, true, nullptr);
    return svg.finish();
  };
  spec.trace = [](const TaskInstance& t) {
    Graph g = graph_from_json(t.initial_state, true);
    std::vector<TraceStep> steps;
    steps.push_back({"The DAG's directed edges are: " + edges_text(g) + ".",
                     {{0, AnchorKind::StateReading, edges_text(g)}}});
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
      for (int v : adj[u])
        if (--indeg[v] == 0) ready.push(v);
      steps.push_back({"Vertex " + std::to_string(u) +
                           " has no remaining incoming edges; append it (order so far " +
                           node_list_text(order) + ").",
                       {{0, AnchorKind::IntermediateState, node_list_text(order)}}});
    }
    steps.push_back({"All vertices are placed; every edge points forward in " +
                         node_list_text(order) + ".",
                     {{0, AnchorKind::DecisionPoint, "order complete"}}});
    return steps;
  };
  reg.add(std::move(spec));
}

// ------------------------------------------------------- graph isomorphism

Graph outerplanar_graph(int n, Stream& s) {
  Graph g;
  g.n = n;
  for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n});
  // non-crossing chords keep the graph planar
  std::vector<std::pair<int, int>> chords;
  int want = n / 2;
  for (int tries = 0; tries < want * 8 && static_cast<int>(chords.size()) < want; ++tries) {
    int a = s.range(0, n - 1), b = s.range(0, n - 1);
    if (a > b) std::swap(a, b);
    if (b - a < 2 || (a == 0 && b == n - 1)) continue;
    bool crosses = false;
    for (auto [c, d] : chords) {
      bool inside = c > a && c < b, inside2 = d > a && d < b;
      if (inside != inside2) crosses = true;
      if (c == a && d == b) crosses = true;
    }
    if (crosses) continue;
    chords.push_back({a, b});
    g.edges.push_back({a, b});
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

Graph relabel(const Graph& g, Stream& s) {
  std::vector<int> perm(g.n);
  for (int i = 0; i < g.n; ++i) perm[i] = i;
  s.shuffle(perm);
  Graph h;
  h.n = g.n;
  for (auto& e : g.edges) {
    int u = perm[e[0]], v = perm[e[1]];
    h.edges.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

void register_iso(Registry& reg) {
  TaskSpec spec;
  spec.name = "graph_isomorphism";
  spec.category = Category::Graph;
  spec.mode = VerifyMode::ExactMatch;
  spec.grammar.id = "graph_isomorphism";
  spec.grammar.kind = AnswerKind::Decision;
  spec.grammar.decision_list_allowed = false;
  for (int lv = 1; lv <= 5; ++lv)
    spec.level_params[lv - 1] = std::to_string(std::min(4 + 2 * lv, 12)) + " vertices, 50% yes";
  spec.generate = [](int level, Stream& s) -> std::optional<GenResult> {
    int n = std::min(4 + 2 * level, 12);
    Graph g1 = outerplanar_graph(n, s);
    bool want_yes = s.chance(0.5);
    Graph g2;
    if (want_yes) {
      g2 = relabel(g1, s);
    } else {
      // degree-preserving double edge swap, then prove non-isomorphism
      g2 = g1;
      for (int swaps = 0; swaps < 3; ++swaps) {
        for (int tries = 0; tries < 50; ++tries) {
          size_t i = s.below(g2.edges.size()), j = s.below(g2.edges.size());
          auto [a, b] = std::pair{g2.edges[i][0], g2.edges[i][1]};
          auto [c, d] = std::pair{g2.edges[j][0], g2.edges[j][1]};
          if (a == c || a == d || b == c || b == d) continue;
          if (g2.has_edge(a, d) || g2.has_edge(c, b)) continue;
          g2.edges[i] = {std::min(a, d), std::max(a, d)};
          g2.edges[j] = {std::min(c, b), std::max(c, b)};
          break;
        }
      }
      std::sort(g2.edges.begin(), g2.edges.end());
      if (!g2.connected()) return std::nullopt;
      g2 = relabel(g2, s);
      if (graphs::isomorphic(g1, g2)) return std::nullopt;
    }
    GenResult r;
    Json st;
    st["n"] = n;
    Json e1 = Json::array(), e2 = Json::array();
    for (auto& e : g1.edges) e1.push_back(Json::array({e[0], e[1]}));
    for (auto& e : g2.edges) e2.push_back(Json::array({e[0], e[1]}));
    st["edges_g1"] = e1;
    st["edges_g2"] = e2;
    r.state = st;
    r.ground_truth = want_yes ? "Yes" : "No";
    r.question = "Given two connected undirected planar graphs G1 and G2 shown below, "
                 "determine if they are isomorphic by analyzing their planar structure. Answer "
                 "with 'Yes' or 'No'.";
    return r;
  };
  spec.solve = [](const Json& state) {
    Graph g1, g2;
    g1.n = g2.n = state.at("n").get<int>();
    for (auto& e : state.at("edges_g1")) g1.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    for (auto& e : state.at("edges_g2")) g2.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    return graphs::isomorphic(g1, g2) ? std::string("Yes") : std::string("No");
  };
  spec.state_text = [](const TaskInstance& t) {
    Graph g1, g2;
    g1.n = g2.n = t.initial_state.at("n").get<int>();
    for (auto& e : t.initial_state.at("edges_g1"))
      g1.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    for (auto& e : t.initial_state.at("edges_g2"))
      g2.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    return "G1 edges: " + edges_text(g1) + ". G2 edges: " + edges_text(g2);
  };
  spec.image_svg = [](const TaskInstance& t) {
    Graph g1, g2;
    g1.n = g2.n = t.initial_state.at("n").get<int>();
    for (auto& e : t.initial_state.at("edges_g1"))
      g1.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    for (auto& e : t.initial_state.at("edges_g2"))
      g2.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    Layout l1 = circle_layout(g1.n);
    Layout l2 = circle_layout(g2.n);
    SvgCanvas svg(l1.w + l2.w, std::max(l1.h, l2.h) + kCell);
    svg.text(l1.w / 2, 20, "G1", 18, "#000000", "middle", true);
    svg.text(l1.w + l2.w / 2, 20, "G2", 18, "#000000", "middle", true);
    draw_graph(svg, g1, l1, false, nullptr);
    Layout shifted = l2;
    for (auto& p : shifted.pos) p.first += l1.w;
    draw_graph(svg, g2, shifted, false, nullptr);
    return svg.finish();
  };
  spec.trace = [](const TaskInstance& t) {
    Graph g1, g2;
    g1.n = g2.n = t.initial_state.at("n").get<int>();
    for (auto& e : t.initial_state.at("edges_g1"))
      g1.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    for (auto& e : t.initial_state.at("edges_g2"))
      g2.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    std::vector<TraceStep> steps;
    auto degtxt = [](const Graph& g) {
      auto d = g.degrees();
      std::sort(d.begin(), d.end());
      std::string s;
      for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d[i]);
      }
      return s;
    };
    steps.push_back({"G1 has " + std::to_string(g1.edges.size()) + " edges and G2 has " +
                         std::to_string(g2.edges.size()) + ".",
                     {{0, AnchorKind::StateReading,
                       std::to_string(g1.edges.size()) + " vs " +
                           std::to_string(g2.edges.size()) + " edges"}}});
    steps.push_back({"Sorted degree sequences: G1 = [" + degtxt(g1) + "], G2 = [" + degtxt(g2) +
                         "].",
                     {{0, AnchorKind::KeyCalculation, degtxt(g1) + " | " + degtxt(g2)}}});
    bool iso = graphs::isomorphic(g1, g2);
    if (degtxt(g1) != degtxt(g2)) {
      steps.push_back({"The degree sequences differ, so the graphs cannot be isomorphic.",
                       {{0, AnchorKind::DecisionPoint, "No"}}});
    } else if (iso) {
      steps.push_back(
          {"Matching vertices by refined neighborhood structure yields a complete bijection "
           "that preserves every adjacency, so the graphs are isomorphic.",
           {{0, AnchorKind::DecisionPoint, "Yes"}}});
    } else {
      steps.push_back(
          {"Every candidate bijection consistent with the degree structure fails on at least "
           "one adjacency, so the graphs are not isomorphic.",
           {{0, AnchorKind::DecisionPoint, "No"}}});
    }
    return steps;
  };
  reg.add(std::move(spec));
}

}  // namespace

void register_graph_tasks(Registry& reg) {
  register_euler(reg, true);
  register_euler(reg, false);
  register_iso(reg);
  register_hamiltonian(reg, true);
  register_hamiltonian(reg, false);
  register_max_flow(reg);
  register_shortest(reg);
  register_topo(reg);
}

}  // namespace forge
