#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace forge::csp {

// Bitmask domain over values 0..63.
using Domain = uint64_t;

inline Domain dom_range(int lo, int hi) {
  Domain d = 0;
  for (int v = lo; v <= hi; ++v) d |= Domain{1} << v;
  return d;
}
inline Domain dom_single(int v) { return Domain{1} << v; }
inline int dom_size(Domain d) { return std::popcount(d); }
inline bool dom_has(Domain d, int v) { return (d >> v) & 1; }
inline bool is_singleton(Domain d) { return d != 0 && (d & (d - 1)) == 0; }
inline int dom_value(Domain d) { return std::countr_zero(d); }

class Model;

class Constraint {
 public:
  explicit Constraint(std::vector<int> scope) : scope_(std::move(scope)) {}
  virtual ~Constraint() = default;

  const std::vector<int>& scope() const { return scope_; }

  // Rule check over scope values (same order as scope()).
  virtual bool feasible(const std::vector<int>& values) const = 0;

  // Domain pruning on a partial assignment; false on wipeout. The default
  // forward-checks once at most one scope variable is still open.
  virtual bool prune(std::vector<Domain>& dom) const;

 protected:
  bool forward_check(std::vector<Domain>& dom) const;
  std::vector<int> scope_;
};

class Model {
 public:
  int add_var(Domain dom) {
    domains_.push_back(dom);
    return static_cast<int>(domains_.size()) - 1;
  }
  void fix(int var, int value) { domains_[var] = dom_single(value); }

  template <typename C, typename... Args>
  C* add(Args&&... args) {
    auto c = std::make_unique<C>(std::forward<Args>(args)...);
    C* p = c.get();
    constraints_.push_back(std::move(c));
    return p;
  }

  const std::vector<Domain>& domains() const { return domains_; }
  const std::vector<std::unique_ptr<Constraint>>& constraints() const { return constraints_; }
  int num_vars() const { return static_cast<int>(domains_.size()); }

 private:
  std::vector<Domain> domains_;
  std::vector<std::unique_ptr<Constraint>> constraints_;
};

struct SearchStats {
  long long nodes = 0;
  long long backtracks = 0;
  long long propagations = 0;
};

// Deterministic: most-constrained-first variable order (index tiebreak),
// ascending value order.
std::optional<std::vector<int>> solve(const Model& m, SearchStats* stats = nullptr);

// Exact count below limit, saturating at limit.
int count_solutions(const Model& m, int limit, SearchStats* stats = nullptr);

// Full-assignment rule check across all constraints (no search machinery).
bool check_assignment(const Model& m, const std::vector<int>& values);

// ----------------------------------------------------------- constraints

class AllDifferent : public Constraint {
 public:
  using Constraint::Constraint;
  bool feasible(const std::vector<int>& values) const override;
  bool prune(std::vector<Domain>& dom) const override;
};

// Calcudoku cage: values combine under op to target. '-' and '/' are
// two-cell cages evaluated in either order.
class CageArithmetic : public Constraint {
 public:
  CageArithmetic(std::vector<int> scope, char op, long long target)
      : Constraint(std::move(scope)), op_(op), target_(target) {}
  bool feasible(const std::vector<int>& values) const override;

 private:
  char op_;
  long long target_;
};

// Kakuro run: distinct digits 1..9 summing to target.
class SumRun : public Constraint {
 public:
  SumRun(std::vector<int> scope, int target) : Constraint(std::move(scope)), target_(target) {}
  bool feasible(const std::vector<int>& values) const override;
  bool prune(std::vector<Domain>& dom) const override;

 private:
  int target_;
};

// Nonogram line over 0/1 cells.
class RunLengths : public Constraint {
 public:
  RunLengths(std::vector<int> scope, std::vector<int> clues)
      : Constraint(std::move(scope)), clues_(std::move(clues)) {}
  bool feasible(const std::vector<int>& values) const override;
  bool prune(std::vector<Domain>& dom) const override;

  static std::vector<int> runs_of(const std::vector<int>& line);

 private:
  std::vector<int> clues_;
};

// Kukurasu line: sum of 1-based positions of filled cells equals target.
class WeightedLineSum : public Constraint {
 public:
  WeightedLineSum(std::vector<int> scope, int target)
      : Constraint(std::move(scope)), target_(target) {}
  bool feasible(const std::vector<int>& values) const override;
  bool prune(std::vector<Domain>& dom) const override;

 private:
  int target_;
};

// Skyscrapers: prefix-maxima count along scope order equals target.
class VisibilityCount : public Constraint {
 public:
  VisibilityCount(std::vector<int> scope, int target)
      : Constraint(std::move(scope)), target_(target) {}
  bool feasible(const std::vector<int>& values) const override;

  static int visible(const std::vector<int>& line);

 private:
  int target_;
};

class CountPerLine : public Constraint {
 public:
  CountPerLine(std::vector<int> scope, int value, int target)
      : Constraint(std::move(scope)), value_(value), target_(target) {}
  bool feasible(const std::vector<int>& values) const override;
  bool prune(std::vector<Domain>& dom) const override;

 private:
  int value_;
  int target_;
};

class NoTripleRun : public Constraint {
 public:
  using Constraint::Constraint;
  bool feasible(const std::vector<int>& values) const override;
  bool prune(std::vector<Domain>& dom) const override;
};

// All listed lines pairwise distinct; scope = concatenation of equal-length lines.
class UniqueLines : public Constraint {
 public:
  UniqueLines(std::vector<std::vector<int>> lines);
  bool feasible(const std::vector<int>& values) const override;
  bool prune(std::vector<Domain>& dom) const override;

 private:
  std::vector<std::vector<int>> lines_;  // indices into scope order
  size_t line_len_;
};

// x_a < x_b (futoshiki inequality edge).
class InequalityEdge : public Constraint {
 public:
  InequalityEdge(int a, int b) : Constraint({a, b}) {}
  bool feasible(const std::vector<int>& values) const override;
  bool prune(std::vector<Domain>& dom) const override;
};

// Not both cells equal to value (adjacency bans).
class ForbidPair : public Constraint {
 public:
  ForbidPair(int a, int b, int value) : Constraint({a, b}), value_(value) {}
  bool feasible(const std::vector<int>& values) const override;
  bool prune(std::vector<Domain>& dom) const override;

 private:
  int value_;
};

// Not all scope cells equal to value (tapa 2x2 ban).
class NotAllEqual : public Constraint {
 public:
  NotAllEqual(std::vector<int> scope, int value)
      : Constraint(std::move(scope)), value_(value) {}
  bool feasible(const std::vector<int>& values) const override;

 private:
  int value_;
};

// Tapa clue neighborhood: black cells in the (cyclic or open) ring around a
// clue must form exactly one contiguous run of length target (target 0 = no
// black cells).
class NeighborhoodGroup : public Constraint {
 public:
  NeighborhoodGroup(std::vector<int> ring, bool cyclic, int target)
      : Constraint(std::move(ring)), cyclic_(cyclic), target_(target) {}
  bool feasible(const std::vector<int>& values) const override;

 private:
  bool cyclic_;
  int target_;
};

// Cells holding `value` form one orthogonally-connected component on the
// given grid (or the cells NOT holding it, when complement). Checked on
// complete assignments; empty sets count as connected.
class ConnectedRegion : public Constraint {
 public:
  ConnectedRegion(std::vector<int> grid_scope, int width, int value, bool complement)
      : Constraint(std::move(grid_scope)), width_(width), value_(value),
        complement_(complement) {}
  bool feasible(const std::vector<int>& values) const override;
  bool prune(std::vector<Domain>& dom) const override;  // complete-only check

 private:
  bool matches(int v) const { return complement_ ? v != value_ : v == value_; }
  int width_;
  int value_;
  bool complement_;
};

// Numbrix adjacency: consecutive numbers sit in orthogonally adjacent cells;
// full-grid check used for rule verification.
class PathConsecutive : public Constraint {
 public:
  PathConsecutive(std::vector<int> grid_scope, int width, int max_value)
      : Constraint(std::move(grid_scope)), width_(width), max_value_(max_value) {}
  bool feasible(const std::vector<int>& values) const override;
  bool prune(std::vector<Domain>& dom) const override;  // complete-only check

 private:
  int width_;
  int max_value_;
};

}  // namespace forge::csp
