#include "taskforge/csp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace forge::csp {

namespace {


std::vector<int> scoped_values(const std::vector<Domain>& dom, const std::vector<int>& scope) {
  std::vector<int> vals(scope.size());
  for (size_t i = 0; i < scope.size(); ++i) vals[i] = dom_value(dom[scope[i]]);
  return vals;
}

}  // namespace

bool Constraint::forward_check(std::vector<Domain>& dom) const {
  int open = -1;
  for (size_t i = 0; i < scope_.size(); ++i) {
    if (!is_singleton(dom[scope_[i]])) {
      if (open >= 0) return true;  // two open vars: nothing to do
      open = static_cast<int>(i);
    }
  }
  std::vector<int> vals = scope_.empty() ? std::vector<int>{} : std::vector<int>(scope_.size());
  for (size_t i = 0; i < scope_.size(); ++i)
    vals[i] = is_singleton(dom[scope_[i]]) ? dom_value(dom[scope_[i]]) : 0;
  if (open < 0) return feasible(vals);
  Domain d = dom[scope_[open]];
  Domain kept = 0;
  for (int v = 0; v < 64; ++v) {
    if (!dom_has(d, v)) continue;
    vals[open] = v;
    if (feasible(vals)) kept |= dom_single(v);
  }
  dom[scope_[open]] = kept;
  return kept != 0;
}

bool Constraint::prune(std::vector<Domain>& dom) const { return forward_check(dom); }

// --------------------------------------------------------------- solver

namespace {

bool propagate(const Model& m, std::vector<Domain>& dom, SearchStats* stats) {
  while (true) {
    long long before = 0;
    for (Domain d : dom) before += dom_size(d);
    for (const auto& c : m.constraints()) {
      if (stats) ++stats->propagations;
      if (!c->prune(dom)) return false;
    }
    long long after = 0;
    for (Domain d : dom) after += dom_size(d);
    if (after == before) return true;
  }
}

int pick_var(const std::vector<Domain>& dom) {
  int best = -1, best_size = 65;
  for (size_t i = 0; i < dom.size(); ++i) {
    int s = dom_size(dom[i]);
    if (s > 1 && s < best_size) {
      best = static_cast<int>(i);
      best_size = s;
    }
  }
  return best;
}

bool full_check(const Model& m, const std::vector<Domain>& dom) {
  for (const auto& c : m.constraints()) {
    if (!c->feasible(scoped_values(dom, c->scope()))) return false;
  }
  return true;
}

// Shared DFS for solve/count; returns true to stop the search.
bool search(const Model& m, std::vector<Domain>& dom, SearchStats* stats, int limit, int& found,
            std::optional<std::vector<int>>& first) {
  int var = pick_var(dom);
  if (var < 0) {
    if (!full_check(m, dom)) return false;
    if (!first) {
      std::vector<int> vals(dom.size());
      for (size_t i = 0; i < dom.size(); ++i) vals[i] = dom_value(dom[i]);
      first = std::move(vals);
    }
    ++found;
    return found >= limit;
  }
  Domain d = dom[var];
  for (int v = 0; v < 64; ++v) {
    if (!dom_has(d, v)) continue;
    if (stats) ++stats->nodes;
    std::vector<Domain> saved = dom;
    dom[var] = dom_single(v);
    if (propagate(m, dom, stats)) {
      if (search(m, dom, stats, limit, found, first)) return true;
    } else if (stats) {
      ++stats->backtracks;
    }
    dom = std::move(saved);
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> solve(const Model& m, SearchStats* stats) {
  std::vector<Domain> dom = m.domains();
  for (Domain d : dom)
    if (d == 0) return std::nullopt;
  if (!propagate(m, dom, stats)) return std::nullopt;
  int found = 0;
  std::optional<std::vector<int>> first;
  search(m, dom, stats, 1, found, first);
  return first;
}

int count_solutions(const Model& m, int limit, SearchStats* stats) {
  std::vector<Domain> dom = m.domains();
  for (Domain d : dom)
    if (d == 0) return 0;
  if (!propagate(m, dom, stats)) return 0;
  int found = 0;
  std::optional<std::vector<int>> first;
  search(m, dom, stats, limit, found, first);
  return found;
}

bool check_assignment(const Model& m, const std::vector<int>& values) {
  if (static_cast<int>(values.size()) != m.num_vars()) return false;
  for (int i = 0; i < m.num_vars(); ++i) {
    if (!dom_has(m.domains()[i], values[i])) return false;
  }
  for (const auto& c : m.constraints()) {
    std::vector<int> vals(c->scope().size());
    for (size_t i = 0; i < c->scope().size(); ++i) vals[i] = values[c->scope()[i]];
    if (!c->feasible(vals)) return false;
  }
  return true;
}

// ------------------------------------------------------------ AllDifferent

bool AllDifferent::feasible(const std::vector<int>& values) const {
  uint64_t seen = 0;
  for (int v : values) {
    if (seen & (uint64_t{1} << v)) return false;
    seen |= uint64_t{1} << v;
  }
  return true;
}

bool AllDifferent::prune(std::vector<Domain>& dom) const {
  Domain taken = 0;
  for (int var : scope_) {
    if (is_singleton(dom[var])) {
      if (taken & dom[var]) return false;  // duplicate singleton
      taken |= dom[var];
    }
  }
  if (!taken) return true;
  for (int var : scope_) {
    if (!is_singleton(dom[var])) {
      dom[var] &= ~taken;
      if (!dom[var]) return false;
    }
  }
  return true;
}

// --------------------------------------------------------- CageArithmetic

bool CageArithmetic::feasible(const std::vector<int>& values) const {
  switch (op_) {
    case '+': {
      long long s = std::accumulate(values.begin(), values.end(), 0LL);
      return s == target_;
    }
    case '*': {
      long long p = 1;
      for (int v : values) p *= v;
      return p == target_;
    }
    case '-': {
      long long d = std::abs(values[0] - values[1]);
      return values.size() == 2 && d == target_;
    }
    case '/': {
      if (values.size() != 2 || values[0] == 0 || values[1] == 0) return false;
      int a = std::max(values[0], values[1]), b = std::min(values[0], values[1]);
      return a % b == 0 && a / b == target_;
    }
    case '=':
      return values.size() == 1 && values[0] == target_;
  }
  return false;
}

// ----------------------------------------------------------------- SumRun

bool SumRun::feasible(const std::vector<int>& values) const {
  uint64_t seen = 0;
  long long s = 0;
  for (int v : values) {
    if (v < 1 || v > 9) return false;
    if (seen & (uint64_t{1} << v)) return false;
    seen |= uint64_t{1} << v;
    s += v;
  }
  return s == target_;
}

bool SumRun::prune(std::vector<Domain>& dom) const {
  // distinctness
  Domain taken = 0;
  long long assigned_sum = 0;
  int open = 0;
  for (int var : scope_) {
    if (is_singleton(dom[var])) {
      if (taken & dom[var]) return false;
      taken |= dom[var];
      assigned_sum += dom_value(dom[var]);
    } else {
      ++open;
    }
  }
  for (int var : scope_) {
    if (!is_singleton(dom[var])) {
      dom[var] &= ~taken;
      if (!dom[var]) return false;
    }
  }
  if (open == 0) return assigned_sum == target_;
  // sum bounds over open cells
  long long lo = 0, hi = 0;
  for (int var : scope_) {
    if (!is_singleton(dom[var])) {
      lo += dom_value(dom[var]);  // min set bit
      hi += 63 - std::countl_zero(dom[var]);
    }
  }
  return assigned_sum + lo <= target_ && assigned_sum + hi >= target_;
}

// -------------------------------------------------------------- RunLengths

std::vector<int> RunLengths::runs_of(const std::vector<int>& line) {
  std::vector<int> runs;
  int cur = 0;
  for (int v : line) {
    if (v == 1) {
      ++cur;
    } else if (cur) {
      runs.push_back(cur);
      cur = 0;
    }
  }
  if (cur) runs.push_back(cur);
  return runs;
}

bool RunLengths::feasible(const std::vector<int>& values) const {
  return runs_of(values) == clues_;
}

// Line-sweep: enumerate clue placements compatible with current domains and
// intersect per-cell possibilities.
bool RunLengths::prune(std::vector<Domain>& dom) const {
  int n = static_cast<int>(scope_.size());
  int k = static_cast<int>(clues_.size());
  std::vector<Domain> cell(n);
  for (int i = 0; i < n; ++i) cell[i] = dom[scope_[i]];

  // memoized feasibility: can clues[j..] fill cells[i..]?
  std::vector<std::vector<int>> memo(n + 1, std::vector<int>(k + 1, -1));
  std::function<bool(int, int)> fits = [&](int i, int j) -> bool {
    if (memo[i][j] >= 0) return memo[i][j];
    bool ok = false;
    if (j == k) {
      ok = true;
      for (int p = i; p < n; ++p)
        if (!dom_has(cell[p], 0)) ok = false;
    } else if (i < n) {
      // place a blank at i
      if (dom_has(cell[i], 0) && fits(i + 1, j)) ok = true;
      // or start clue j at i
      if (!ok) {
        int len = clues_[j];
        if (i + len <= n) {
          bool can = true;
          for (int p = i; p < i + len; ++p)
            if (!dom_has(cell[p], 1)) can = false;
          if (can) {
            if (i + len == n) {
              can = j + 1 == k;
              ok = can;
            } else if (dom_has(cell[i + len], 0)) {
              ok = fits(i + len + 1, j + 1);
            }
          }
        }
      }
    }
    memo[i][j] = ok;
    return ok;
  };
  if (!fits(0, 0)) return false;

  // per-cell support: value survives iff some full placement uses it there
  // (re-run fits with the cell pinned; n is small so the quadratic pass is fine)
  for (int i = 0; i < n; ++i) {
    Domain kept = 0;
    Domain orig = cell[i];
    for (int v = 0; v <= 1; ++v) {
      if (!dom_has(orig, v)) continue;
      cell[i] = dom_single(v);
      for (auto& row : memo) std::fill(row.begin(), row.end(), -1);
      if (fits(0, 0)) kept |= dom_single(v);
    }
    cell[i] = orig;
    if (!kept) return false;
    dom[scope_[i]] &= kept;
    if (!dom[scope_[i]]) return false;
  }
  for (auto& row : memo) std::fill(row.begin(), row.end(), -1);
  return true;
}

// --------------------------------------------------------- WeightedLineSum

bool WeightedLineSum::feasible(const std::vector<int>& values) const {
  int s = 0;
  for (size_t i = 0; i < values.size(); ++i)
    if (values[i] == 1) s += static_cast<int>(i) + 1;
  return s == target_;
}

bool WeightedLineSum::prune(std::vector<Domain>& dom) const {
  int lo = 0, hi = 0;
  for (size_t i = 0; i < scope_.size(); ++i) {
    int w = static_cast<int>(i) + 1;
    Domain d = dom[scope_[i]];
    if (is_singleton(d)) {
      if (dom_value(d) == 1) {
        lo += w;
        hi += w;
      }
    } else {
      hi += w;
    }
  }
  if (lo > target_ || hi < target_) return false;
  // force cells whose weight decides the bound
  for (size_t i = 0; i < scope_.size(); ++i) {
    int w = static_cast<int>(i) + 1;
    Domain d = dom[scope_[i]];
    if (is_singleton(d)) continue;
    if (lo + w > target_) dom[scope_[i]] = dom_single(0);
    else if (hi - w < target_) dom[scope_[i]] = dom_single(1), lo += w;
  }
  return true;
}

// --------------------------------------------------------- VisibilityCount

int VisibilityCount::visible(const std::vector<int>& line) {
  int count = 0, best = 0;
  for (int v : line) {
    if (v > best) {
      ++count;
      best = v;
    }
  }
  return count;
}

bool VisibilityCount::feasible(const std::vector<int>& values) const {
  return visible(values) == target_;
}

// ------------------------------------------------------------ CountPerLine

bool CountPerLine::feasible(const std::vector<int>& values) const {
  int c = 0;
  for (int v : values) c += v == value_;
  return c == target_;
}

bool CountPerLine::prune(std::vector<Domain>& dom) const {
  int fixed = 0, possible = 0;
  for (int var : scope_) {
    Domain d = dom[var];
    if (is_singleton(d)) {
      if (dom_value(d) == value_) ++fixed;
    } else if (dom_has(d, value_)) {
      ++possible;
    }
  }
  if (fixed > target_ || fixed + possible < target_) return false;
  if (fixed == target_) {
    for (int var : scope_) {
      if (!is_singleton(dom[var])) {
        dom[var] &= ~dom_single(value_);
        if (!dom[var]) return false;
      }
    }
  } else if (fixed + possible == target_) {
    for (int var : scope_) {
      if (!is_singleton(dom[var]) && dom_has(dom[var], value_)) {
        dom[var] = dom_single(value_);
      }
    }
  }
  return true;
}

// ------------------------------------------------------------- NoTripleRun

bool NoTripleRun::feasible(const std::vector<int>& values) const {
  for (size_t i = 0; i + 2 < values.size(); ++i) {
    if (values[i] == values[i + 1] && values[i] == values[i + 2]) return false;
  }
  return true;
}

bool NoTripleRun::prune(std::vector<Domain>& dom) const {
  // two equal neighbors force the third different (binary domains)
  for (size_t i = 0; i + 2 < scope_.size(); ++i) {
    int a = scope_[i], b = scope_[i + 1], c = scope_[i + 2];
    auto forbid = [&](int var, int v) {
      if (!is_singleton(dom[var])) dom[var] &= ~dom_single(v);
      else if (dom_value(dom[var]) == v) dom[var] = 0;
      return dom[var] != 0;
    };
    if (is_singleton(dom[a]) && dom[a] == dom[b]) {
      if (!forbid(c, dom_value(dom[a]))) return false;
    }
    if (is_singleton(dom[a]) && dom[a] == dom[c]) {
      if (!forbid(b, dom_value(dom[a]))) return false;
    }
    if (is_singleton(dom[b]) && dom[b] == dom[c]) {
      if (!forbid(a, dom_value(dom[b]))) return false;
    }
  }
  return true;
}

// ------------------------------------------------------------- UniqueLines

UniqueLines::UniqueLines(std::vector<std::vector<int>> lines) : Constraint({}) {
  line_len_ = lines.empty() ? 0 : lines[0].size();
  for (auto& line : lines) {
    std::vector<int> idx;
    for (int var : line) {
      idx.push_back(static_cast<int>(scope_.size()));
      scope_.push_back(var);
    }
    lines_.push_back(idx);
  }
}

bool UniqueLines::feasible(const std::vector<int>& values) const {
  for (size_t i = 0; i < lines_.size(); ++i) {
    for (size_t j = i + 1; j < lines_.size(); ++j) {
      bool equal = true;
      for (size_t p = 0; p < line_len_; ++p) {
        if (values[lines_[i][p]] != values[lines_[j][p]]) {
          equal = false;
          break;
        }
      }
      if (equal) return false;
    }
  }
  return true;
}

bool UniqueLines::prune(std::vector<Domain>& dom) const {
  // when one line is complete and another differs only at one open cell,
  // that cell must differ from the complete line's value
  for (size_t i = 0; i < lines_.size(); ++i) {
    for (size_t j = 0; j < lines_.size(); ++j) {
      if (i == j) continue;
      bool i_complete = true;
      for (size_t p = 0; p < line_len_; ++p)
        if (!is_singleton(dom[scope_[lines_[i][p]]])) i_complete = false;
      if (!i_complete) continue;
      int open = -1;
      bool mismatch = false;
      for (size_t p = 0; p < line_len_; ++p) {
        Domain dj = dom[scope_[lines_[j][p]]];
        Domain di = dom[scope_[lines_[i][p]]];
        if (!is_singleton(dj)) {
          if (open >= 0) {
            open = -2;
            break;
          }
          open = static_cast<int>(p);
        } else if (dj != di) {
          mismatch = true;
          break;
        }
      }
      if (mismatch || open == -2) continue;
      if (open == -1) return false;  // identical complete lines
      Domain forbidden = dom[scope_[lines_[i][open]]];
      dom[scope_[lines_[j][open]]] &= ~forbidden;
      if (!dom[scope_[lines_[j][open]]]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------- InequalityEdge

bool InequalityEdge::feasible(const std::vector<int>& values) const {
  return values[0] < values[1];
}

bool InequalityEdge::prune(std::vector<Domain>& dom) const {
  Domain& a = dom[scope_[0]];
  Domain& b = dom[scope_[1]];
  if (!a || !b) return false;
  int bmax = 63 - std::countl_zero(b);
  int amin = std::countr_zero(a);
  a &= dom_range(0, bmax - 1);
  if (!a) return false;
  b &= ~dom_range(0, amin);
  return b != 0;
}

// -------------------------------------------------------------- ForbidPair

bool ForbidPair::feasible(const std::vector<int>& values) const {
  return !(values[0] == value_ && values[1] == value_);
}

bool ForbidPair::prune(std::vector<Domain>& dom) const {
  Domain& a = dom[scope_[0]];
  Domain& b = dom[scope_[1]];
  if (is_singleton(a) && dom_value(a) == value_) {
    b &= ~dom_single(value_);
    if (!b) return false;
  }
  if (is_singleton(b) && dom_value(b) == value_) {
    a &= ~dom_single(value_);
    if (!a) return false;
  }
  return true;
}

// ------------------------------------------------------------- NotAllEqual

bool NotAllEqual::feasible(const std::vector<int>& values) const {
  for (int v : values)
    if (v != value_) return true;
  return false;
}

// ------------------------------------------------------- NeighborhoodGroup

bool NeighborhoodGroup::feasible(const std::vector<int>& values) const {
  int n = static_cast<int>(values.size());
  int black = 0;
  for (int v : values) black += v == 1;
  if (black != target_) return false;
  if (black == 0) return true;
  // count maximal runs (cyclic rings wrap)
  int runs = 0;
  if (black == n) {
    runs = 1;
  } else {
    for (int i = 0; i < n; ++i) {
      int prev = (i + n - 1) % n;
      bool prev_black = cyclic_ ? values[prev] == 1 : (i > 0 && values[i - 1] == 1);
      if (values[i] == 1 && !prev_black) ++runs;
    }
  }
  return runs == 1;
}

// --------------------------------------------------------- ConnectedRegion

bool ConnectedRegion::feasible(const std::vector<int>& values) const {
  int n = static_cast<int>(values.size());
  int height = n / width_;
  int start = -1, total = 0;
  for (int i = 0; i < n; ++i) {
    if (matches(values[i])) {
      ++total;
      start = i;
    }
  }
  if (total == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int visited = 0;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    ++visited;
    int r = cur / width_, c = cur % width_;
    const int dr[] = {-1, 1, 0, 0}, dc[] = {0, 0, -1, 1};
    for (int k = 0; k < 4; ++k) {
      int nr = r + dr[k], nc = c + dc[k];
      if (nr < 0 || nr >= height || nc < 0 || nc >= width_) continue;
      int idx = nr * width_ + nc;
      if (!seen[idx] && matches(values[idx])) {
        seen[idx] = 1;
        stack.push_back(idx);
      }
    }
  }
  return visited == total;
}

bool ConnectedRegion::prune(std::vector<Domain>& dom) const {
  for (int var : scope_)
    if (!is_singleton(dom[var])) return true;
  std::vector<int> vals(scope_.size());
  for (size_t i = 0; i < scope_.size(); ++i) vals[i] = dom_value(dom[scope_[i]]);
  return feasible(vals);
}

// --------------------------------------------------------- PathConsecutive

bool PathConsecutive::feasible(const std::vector<int>& values) const {
  int n = static_cast<int>(values.size());
  int height = n / width_;
  std::vector<int> pos(max_value_ + 1, -1);
  for (int i = 0; i < n; ++i) {
    int v = values[i];
    if (v < 0 || v > max_value_) return false;
    if (v > 0) {
      if (pos[v] != -1) return false;
      pos[v] = i;
    }
  }
  for (int v = 1; v <= max_value_; ++v)
    if (pos[v] == -1) return false;
  for (int v = 1; v < max_value_; ++v) {
    int a = pos[v], b = pos[v + 1];
    int dr = std::abs(a / width_ - b / width_);
    int dc = std::abs(a % width_ - b % width_);
    if (dr + dc != 1) return false;
  }
  (void)height;
  return true;
}

bool PathConsecutive::prune(std::vector<Domain>& dom) const {
  for (int var : scope_)
    if (!is_singleton(dom[var])) return true;
  std::vector<int> vals(scope_.size());
  for (size_t i = 0; i < scope_.size(); ++i) vals[i] = dom_value(dom[scope_[i]]);
  return feasible(vals);
}

}  // namespace forge::csp
