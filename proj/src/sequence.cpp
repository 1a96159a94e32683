#include "taskforge/sequence.hpp"

#include <algorithm>
#include <set>

#include "taskforge/svg.hpp"
#include "taskforge/task.hpp"

namespace forge::seq {

long long trapping_rain_water(const std::vector<int>& h) {
  if (h.size() < 3) return 0;
  int l = 0, r = static_cast<int>(h.size()) - 1;
  int lmax = 0, rmax = 0;
  long long water = 0;
  while (l < r) {
    if (h[l] < h[r]) {
      lmax = std::max(lmax, h[l]);
      water += lmax - h[l];
      ++l;
    } else {
      rmax = std::max(rmax, h[r]);
      water += rmax - h[r];
      --r;
    }
  }
  return water;
}

long long buy_sell_stock(const std::vector<int>& prices) {
  long long profit = 0;
  for (size_t i = 1; i < prices.size(); ++i) {
    if (prices[i] > prices[i - 1]) profit += prices[i] - prices[i - 1];
  }
  return profit;
}

long long container_most_water(const std::vector<int>& h) {
  int l = 0, r = static_cast<int>(h.size()) - 1;
  long long best = 0;
  while (l < r) {
    best = std::max(best, static_cast<long long>(r - l) * std::min(h[l], h[r]));
    if (h[l] < h[r]) {
      ++l;
    } else {
      --r;
    }
  }
  return best;
}

long long h_index(const std::vector<int>& citations) {
  std::vector<int> c = citations;
  std::sort(c.begin(), c.end(), std::greater<int>());
  long long h = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= static_cast<int>(i) + 1) h = static_cast<long long>(i) + 1;
  }
  return h;
}

long long largest_rectangle(const std::vector<int>& h) {
  std::vector<int> stack;
  long long best = 0;
  for (int i = 0; i <= static_cast<int>(h.size()); ++i) {
    int cur = i < static_cast<int>(h.size()) ? h[i] : 0;
    while (!stack.empty() && h[stack.back()] >= cur) {
      int height = h[stack.back()];
      stack.pop_back();
      int left = stack.empty() ? -1 : stack.back();
      best = std::max(best, static_cast<long long>(height) * (i - left - 1));
    }
    stack.push_back(i);
  }
  return best;
}

long long longest_increasing_subsequence(const std::vector<int>& v) {
  std::vector<int> dp(v.size(), 1);
  long long best = v.empty() ? 0 : 1;
  for (size_t i = 0; i < v.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (v[j] < v[i]) dp[i] = std::max(dp[i], dp[j] + 1);
    }
    best = std::max(best, static_cast<long long>(dp[i]));
  }
  return best;
}

long long hills_and_valleys(const std::vector<int>& v) {
  // plateau-collapsed scan; endpoints have no land on one side and never count
  std::vector<int> c;
  for (int x : v) {
    if (c.empty() || c.back() != x) c.push_back(x);
  }
  long long n = 0;
  for (size_t i = 1; i + 1 < c.size(); ++i) {
    if (c[i] > c[i - 1] && c[i] > c[i + 1]) ++n;
    if (c[i] < c[i - 1] && c[i] < c[i + 1]) ++n;
  }
  return n;
}

namespace {

// All binary trees over the 4 leaves in order; ops from the given set.
template <typename Fn>
bool enumerate_exprs(const std::array<int, 4>& nums, const std::vector<char>& ops, Fn&& fn) {
  std::array<int, 4> perm = nums;
  std::sort(perm.begin(), perm.end());
  std::set<std::array<int, 4>> seen;
  do {
    if (!seen.insert(perm).second) continue;
    // five shapes over leaves a b c d:
    // ((a.b).c).d  (a.(b.c)).d  (a.b).(c.d)  a.((b.c).d)  a.(b.(c.d))
    for (char o1 : ops)
      for (char o2 : ops)
        for (char o3 : ops) {
          auto leaf = [](long long v) { return Expr{0, v, {}}; };
          auto node = [](char op, Expr l, Expr r) {
            return Expr{op, 0, {std::move(l), std::move(r)}};
          };
          Expr a = leaf(perm[0]), b = leaf(perm[1]), c = leaf(perm[2]), d = leaf(perm[3]);
          Expr shapes[5] = {
              node(o3, node(o2, node(o1, a, b), c), d),
              node(o3, node(o1, a, node(o2, b, c)), d),
              node(o2, node(o1, a, b), node(o3, c, d)),
              node(o1, a, node(o3, node(o2, b, c), d)),
              node(o1, a, node(o2, b, node(o3, c, d))),
          };
          for (auto& e : shapes) {
            if (fn(e)) return true;
          }
        }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool evals_to_24(const Expr& e) {
  EvalOutcome r = eval_expression(e);
  return r.ok && r.value == Rat(24);
}

}  // namespace

std::optional<Expr> solve_24(const std::array<int, 4>& nums) {
  std::optional<Expr> found;
  enumerate_exprs(nums, {'+', '-', '*', '/'}, [&](const Expr& e) {
    if (evals_to_24(e)) {
      found = e;
      return true;
    }
    return false;
  });
  return found;
}

int count_24_witnesses(const std::array<int, 4>& nums, int limit) {
  int n = 0;
  enumerate_exprs(nums, {'+', '-', '*', '/'}, [&](const Expr& e) {
    if (evals_to_24(e)) ++n;
    return n >= limit;
  });
  return n;
}

bool solvable_24_plus_minus_only(const std::array<int, 4>& nums) {
  bool found = false;
  enumerate_exprs(nums, {'+', '-'}, [&](const Expr& e) {
    if (evals_to_24(e)) {
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

namespace {

long long word_value(const std::string& w, const std::map<char, int>& assign) {
  long long v = 0;
  for (char c : w) v = v * 10 + assign.at(c);
  return v;
}

bool crypto_consistent(const CryptoPuzzle& p, const std::map<char, int>& assign) {
  for (const auto& w : p.operands) {
    if (w.size() > 1 && assign.at(w[0]) == 0) return false;
  }
  if (p.result.size() > 1 && assign.at(p.result[0]) == 0) return false;
  long long lhs;
  if (p.op == '+') {
    lhs = 0;
    for (const auto& w : p.operands) lhs += word_value(w, assign);
  } else if (p.op == '-') {
    lhs = word_value(p.operands[0], assign);
    for (size_t i = 1; i < p.operands.size(); ++i) lhs -= word_value(p.operands[i], assign);
  } else {
    lhs = 1;
    for (const auto& w : p.operands) lhs *= word_value(w, assign);
  }
  return lhs == word_value(p.result, assign);
}

}  // namespace

int count_cryptomath(const CryptoPuzzle& p, int limit, std::map<char, int>* solution) {
  std::vector<char> letters;
  {
    std::set<char> s;
    for (const auto& w : p.operands) s.insert(w.begin(), w.end());
    s.insert(p.result.begin(), p.result.end());
    letters.assign(s.begin(), s.end());
  }
  if (letters.size() > 10) return 0;
  int count = 0;
  std::map<char, int> assign;
  std::array<bool, 10> used{};

  // right-to-left column pruning for +/-; multiplication falls back to the
  // full check on complete assignments
  size_t max_len = p.result.size();
  for (const auto& w : p.operands) max_len = std::max(max_len, w.size());

  auto column_ok = [&](int assigned_count) {
    if (p.op == '*') return true;
    // verify all columns whose letters are fully assigned, low digits first
    long long carry = 0;
    for (size_t col = 0; col < max_len; ++col) {
      long long sum = carry;
      bool complete = true;
      auto digit_at = [&](const std::string& w) -> std::optional<int> {
        if (col >= w.size()) return 0;
        char c = w[w.size() - 1 - col];
        auto it = assign.find(c);
        if (it == assign.end()) return std::nullopt;
        return it->second;
      };
      if (p.op == '+') {
        for (const auto& w : p.operands) {
          auto d = digit_at(w);
          if (!d) {
            complete = false;
            break;
          }
          sum += *d;
        }
      } else {
        auto d0 = digit_at(p.operands[0]);
        if (!d0) complete = false;
        sum += d0.value_or(0);
        for (size_t i = 1; complete && i < p.operands.size(); ++i) {
          auto d = digit_at(p.operands[i]);
          if (!d) {
            complete = false;
            break;
          }
          sum -= *d;
        }
      }
      if (!complete) return true;  // cannot check further columns yet
      auto rd = digit_at(p.result);
      if (!rd) return true;
      long long digit = ((sum % 10) + 10) % 10;
      if (digit != *rd) return false;
      carry = (sum - digit) / 10;
    }
    (void)assigned_count;
    return true;
  };

  std::function<void(size_t)> rec = [&](size_t idx) {
    if (count >= limit) return;
    if (idx == letters.size()) {
      if (crypto_consistent(p, assign)) {
        if (count == 0 && solution) *solution = assign;
        ++count;
      }
      return;
    }
    char L = letters[idx];
    for (int d = 0; d <= 9 && count < limit; ++d) {
      if (used[d]) continue;
      assign[L] = d;
      used[d] = true;
      if (column_ok(static_cast<int>(idx) + 1)) rec(idx + 1);
      used[d] = false;
      assign.erase(L);
    }
  };
  rec(0);
  return count;
}

// ------------------------------------------------------------ registration

namespace {

std::vector<int> state_values(const Json& state) {
  return state.at("values").get<std::vector<int>>();
}

struct ArrayTaskDef {
  const char* name;
  const char* question;
  long long (*solve)(const std::vector<int>&);
  int min_height;  // generated bar heights live in [min_height, 4+2*level]
};

std::string join_values(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s;
}

std::string bar_chart_svg(const std::vector<int>& values) {
  int n = static_cast<int>(values.size());
  int vmax = 1;
  for (int v : values) vmax = std::max(vmax, v);
  int bar_w = kCell / 2;
  int chart_h = vmax * (kCell / 2);
  SvgCanvas svg(2 * kMargin + n * (bar_w + 8), 2 * kMargin + chart_h + 40);
  int base_y = kMargin + chart_h;
  svg.line(kMargin - 8, base_y, kMargin + n * (bar_w + 8), base_y, "#000000", 2);
  for (int i = 0; i < n; ++i) {
    int x = kMargin + i * (bar_w + 8);
    int h = values[i] * (kCell / 2);
    svg.rect(x, base_y - h, bar_w, h, "#4a90d9", "#1f3a5f", 1);
    svg.text(x + bar_w / 2, base_y - h - 6, std::to_string(values[i]), 14);
    svg.text(x + bar_w / 2, base_y + 18, std::to_string(i), 12, "#555555");
  }
  return svg.finish();
}

std::vector<TraceStep> array_trace(const ArrayTaskDef& def, const std::vector<int>& values,
                                   long long answer) {
  std::vector<TraceStep> steps;
  steps.push_back({"Reading the chart bar by bar, the heights from left to right are: " +
                       join_values(values) + ".",
                   {{0, AnchorKind::StateReading, join_values(values)}}});
  // running prefix summary keeps one concrete intermediate value per step
  long long running = 0;
  for (size_t i = 0; i < values.size(); ++i) {
    std::vector<int> prefix(values.begin(), values.begin() + i + 1);
    long long partial = def.solve(prefix);
    std::string txt = "After bar " + std::to_string(i) + " (height " +
                      std::to_string(values[i]) + "), the best value over the prefix is " +
                      std::to_string(partial) + ".";
    TraceStep st{txt, {}};
    if (partial != running || i + 1 == values.size()) {
      st.anchors.push_back({0, AnchorKind::KeyCalculation,
                            "prefix[0.." + std::to_string(i) + "] -> " + std::to_string(partial)});
    }
    running = partial;
    steps.push_back(std::move(st));
  }
  steps.push_back({"The scan is complete; the final value is " + std::to_string(answer) + ".",
                   {{0, AnchorKind::KeyCalculation, std::to_string(answer)}}});
  return steps;
}

void register_array_task(Registry& reg, const ArrayTaskDef& def) {
  TaskSpec spec;
  spec.name = def.name;
  spec.category = Category::Algorithm;
  spec.mode = VerifyMode::ExactMatch;
  spec.grammar.id = def.name;
  spec.grammar.kind = AnswerKind::Scalar;
  for (int lv = 1; lv <= 5; ++lv) {
    spec.level_params[lv - 1] = "length " + std::to_string(6 + 3 * lv) + ", heights " +
                                std::to_string(def.min_height) + ".." + std::to_string(4 + 2 * lv);
  }
  ArrayTaskDef d = def;
  spec.generate = [d](int level, Stream& s) -> std::optional<GenResult> {
    int n = 6 + 3 * level;
    int hi = 4 + 2 * level;
    std::vector<int> values(n);
    for (int& v : values) v = s.range(d.min_height, hi);
    GenResult r;
    r.state = Json{{"values", values}};
    r.question = std::string(d.question);
    r.ground_truth = std::to_string(d.solve(values));
    return r;
  };
  spec.solve = [d](const Json& state) { return std::to_string(d.solve(state_values(state))); };
  spec.state_text = [](const TaskInstance& t) {
    return "Bar heights (left to right): " + join_values(state_values(t.initial_state));
  };
  spec.image_svg = [](const TaskInstance& t) {
    return bar_chart_svg(state_values(t.initial_state));
  };
  spec.trace = [d](const TaskInstance& t) {
    auto values = state_values(t.initial_state);
    return array_trace(d, values, d.solve(values));
  };
  reg.add(std::move(spec));
}

constexpr const char* kQ24 =
    "Use these numbers exactly once, and combine them with +, -, ×, ÷, and "
    "parentheses to make 24. Please provide your answer as an expression that includes only "
    "numbers, operators, and parentheses. Example answer format: (9 - 3) × 8 ÷ 2.";

constexpr const char* kQCrypto =
    "Solve this CryptoMath puzzle, where each letter represents a unique digit (0-9). "
    "Different letters must correspond to different values, and no leading letter can be "
    "zero. Please provide your answer as a list of comma-separated \"letter\"=number pairs. "
    "Example answer format: [\"A\"=5, \"B\"=3, ... , \"Z\"=9].";

std::array<int, 4> state_numbers(const Json& state) {
  auto v = state.at("numbers").get<std::vector<int>>();
  return {v[0], v[1], v[2], v[3]};
}

void register_24(Registry& reg) {
  TaskSpec spec;
  spec.name = "twenty_four";
  spec.category = Category::Algorithm;
  spec.mode = VerifyMode::ConstraintCheck;
  spec.grammar.id = "twenty_four";
  spec.grammar.kind = AnswerKind::Expression;
  spec.level_params = {"values 1..7", "values 1..9", "values 1..11",
                       "values 1..13, +/- alone insufficient",
                       "values 1..13, +/- alone insufficient, at most 6 witnesses"};
  spec.generate = [](int level, Stream& s) -> std::optional<GenResult> {
    int hi = std::min(13, 5 + 2 * level);
    std::array<int, 4> nums;
    for (int& v : nums) v = s.range(1, hi);
    auto witness = solve_24(nums);
    if (!witness) return std::nullopt;
    if (level >= 4 && solvable_24_plus_minus_only(nums)) return std::nullopt;
    if (level == 5 && count_24_witnesses(nums, 7) > 6) return std::nullopt;
    GenResult r;
    r.state = Json{{"numbers", std::vector<int>(nums.begin(), nums.end())}};
    r.question = kQ24;
    r.ground_truth = render_expression(*witness);
    return r;
  };
  spec.solve = [](const Json& state) {
    auto w = solve_24(state_numbers(state));
    return w ? render_expression(*w) : std::string("No");
  };
  spec.check = [](const TaskInstance& t, const ParsedAnswer& a) {
    const Expr& e = std::get<Expr>(a);
    EvalOutcome r = eval_expression(e);
    std::string norm = render_expression(e);
    auto nums = state_numbers(t.initial_state);
    if (!uses_exactly(r, {nums[0], nums[1], nums[2], nums[3]}))
      return Verdict::reject(FailReason::RuleViolation, norm);
    if (!r.ok) return Verdict::reject(FailReason::RuleViolation, norm);
    if (r.value != Rat(24)) return Verdict::reject(FailReason::WrongValue, norm);
    return Verdict::accept(norm);
  };
  spec.state_text = [](const TaskInstance& t) {
    auto nums = state_numbers(t.initial_state);
    return "Numbers: " + std::to_string(nums[0]) + ", " + std::to_string(nums[1]) + ", " +
           std::to_string(nums[2]) + ", " + std::to_string(nums[3]);
  };
  spec.image_svg = [](const TaskInstance& t) {
    auto nums = state_numbers(t.initial_state);
    SvgCanvas svg(4 * (kCell * 2) + kMargin * 2, kCell * 2 + kMargin * 2);
    for (int i = 0; i < 4; ++i) {
      int x = kMargin + i * kCell * 2;
      svg.rect(x, kMargin, kCell * 2 - 12, kCell * 2, "#fdf6e3", "#333333", 2);
      svg.text(x + kCell - 6, kMargin + kCell + 10, std::to_string(nums[i]), 30, "#000000",
               "middle", true);
    }
    return svg.finish();
  };
  spec.trace = [](const TaskInstance& t) {
    auto nums = state_numbers(t.initial_state);
    std::vector<TraceStep> steps;
    std::string numtxt = std::to_string(nums[0]) + ", " + std::to_string(nums[1]) + ", " +
                         std::to_string(nums[2]) + ", " + std::to_string(nums[3]);
    steps.push_back({"The four card values are " + numtxt + ".",
                     {{0, AnchorKind::StateReading, numtxt}}});
    auto w = solve_24(nums);
    if (w) {
      // narrate the witness bottom-up
      std::function<Rat(const Expr&, std::vector<TraceStep>&)> walk =
          [&](const Expr& e, std::vector<TraceStep>& out) -> Rat {
        if (e.op == 0) return Rat(e.value);
        Rat a = walk(e.kids[0], out);
        Rat b = walk(e.kids[1], out);
        Rat v = e.op == '+'   ? a + b
                : e.op == '-' ? a - b
                : e.op == '*' ? a * b
                              : *rat_div(a, b);
        std::string calc = render_expression(e) + " = " +
                           (v.is_integer() ? std::to_string(v.num)
                                           : std::to_string(v.num) + "/" + std::to_string(v.den));
        out.push_back({"Try combining: " + calc + ".", {{0, AnchorKind::KeyCalculation, calc}}});
        return v;
      };
      walk(*w, steps);
      steps.push_back({"That uses each of the four numbers exactly once and reaches 24.",
                       {{0, AnchorKind::DecisionPoint, "reached 24"}}});
    }
    return steps;
  };
  reg.add(std::move(spec));
}

void register_cryptomath(Registry& reg) {
  TaskSpec spec;
  spec.name = "cryptomath";
  spec.category = Category::Algorithm;
  spec.mode = VerifyMode::ExactMatch;
  spec.grammar.id = "cryptomath";
  spec.grammar.kind = AnswerKind::KeyValueList;
  spec.grammar.kv_style = KvStyle::LetterDigit;
  spec.level_params = {"2-digit addition", "3-digit addition", "3-digit addition or subtraction",
                       "4-digit addition or subtraction", "5-digit addition or subtraction"};
  spec.generate = [](int level, Stream& s) -> std::optional<GenResult> {
    int len = level <= 1 ? 2 : level <= 3 ? 3 : level == 4 ? 4 : 5;
    bool allow_minus = level >= 3;
    char op = allow_minus && s.chance(0.4) ? '-' : '+';
    long long lo = 1, hi = 1;
    for (int i = 1; i < len; ++i) lo *= 10;
    hi = lo * 10 - 1;
    long long a = lo + static_cast<long long>(s.below(hi - lo + 1));
    long long b = lo + static_cast<long long>(s.below(hi - lo + 1));
    long long c;
    if (op == '+') {
      c = a + b;
    } else {
      if (a < b) std::swap(a, b);
      c = a - b;
      if (c < lo) return std::nullopt;  // keep the result full-length
    }
    std::string sa = std::to_string(a), sb = std::to_string(b), sc = std::to_string(c);
    std::set<char> digits(sa.begin(), sa.end());
    digits.insert(sb.begin(), sb.end());
    digits.insert(sc.begin(), sc.end());
    std::vector<char> alphabet;
    for (char L = 'A'; L <= 'Z'; ++L) alphabet.push_back(L);
    s.shuffle(alphabet);
    std::map<char, char> to_letter;
    size_t next = 0;
    for (char d : digits) to_letter[d] = alphabet[next++];
    auto encode = [&](const std::string& w) {
      std::string out;
      for (char d : w) out += to_letter[d];
      return out;
    };
    CryptoPuzzle p{{encode(sa), encode(sb)}, op, encode(sc)};
    std::map<char, int> sol;
    if (count_cryptomath(p, 2, &sol) != 1) return std::nullopt;
    KeyValues kv;
    for (auto& [L, d] : sol) kv.push_back({std::string(1, L), d});
    Grammar g;
    g.kind = AnswerKind::KeyValueList;
    g.kv_style = KvStyle::LetterDigit;
    GenResult r;
    r.state = Json{{"operands", p.operands}, {"operator", std::string(1, p.op)},
                   {"result", p.result}};
    r.question = kQCrypto;
    r.ground_truth = normalize_answer(g, ParsedAnswer(kv));
    return r;
  };
  spec.solve = [](const Json& state) {
    CryptoPuzzle p;
    p.operands = state.at("operands").get<std::vector<std::string>>();
    p.op = state.at("operator").get<std::string>()[0];
    p.result = state.at("result").get<std::string>();
    std::map<char, int> sol;
    count_cryptomath(p, 1, &sol);
    KeyValues kv;
    for (auto& [L, d] : sol) kv.push_back({std::string(1, L), d});
    Grammar g;
    g.kind = AnswerKind::KeyValueList;
    g.kv_style = KvStyle::LetterDigit;
    return normalize_answer(g, ParsedAnswer(kv));
  };
  spec.state_text = [](const TaskInstance& t) {
    auto ops = t.initial_state.at("operands").get<std::vector<std::string>>();
    std::string op = t.initial_state.at("operator").get<std::string>();
    return "Puzzle: " + ops[0] + " " + op + " " + ops[1] + " = " +
           t.initial_state.at("result").get<std::string>();
  };
  spec.image_svg = [](const TaskInstance& t) {
    auto ops = t.initial_state.at("operands").get<std::vector<std::string>>();
    std::string op = t.initial_state.at("operator").get<std::string>();
    std::string res = t.initial_state.at("result").get<std::string>();
    int w = static_cast<int>(std::max(res.size(), ops[0].size()) + 2) * 28 + 2 * kMargin;
    SvgCanvas svg(w, 4 * 40 + 2 * kMargin);
    auto put = [&](const std::string& word, int row, const std::string& prefix) {
      std::string line = prefix + word;
      svg.text(w - kMargin, kMargin + row * 40 + 28, line, 28, "#000000", "end", true);
    };
    put(ops[0], 0, "");
    put(ops[1], 1, op + " ");
    svg.line(kMargin, kMargin + 2 * 40 + 8, w - kMargin, kMargin + 2 * 40 + 8, "#000000", 3);
    put(res, 2, "");
    return svg.finish();
  };
  spec.trace = [](const TaskInstance& t) {
    auto ops = t.initial_state.at("operands").get<std::vector<std::string>>();
    std::string op = t.initial_state.at("operator").get<std::string>();
    std::string res = t.initial_state.at("result").get<std::string>();
    CryptoPuzzle p{ops, op[0], res};
    std::map<char, int> sol;
    count_cryptomath(p, 1, &sol);
    std::vector<TraceStep> steps;
    steps.push_back({"The puzzle reads " + ops[0] + " " + op + " " + ops[1] + " = " + res + ".",
                     {{0, AnchorKind::StateReading, ops[0] + op + ops[1] + "=" + res}}});
    size_t max_len = std::max(res.size(), std::max(ops[0].size(), ops[1].size()));
    long long carry = 0;
    for (size_t col = 0; col < max_len; ++col) {
      auto digit = [&](const std::string& w) -> long long {
        if (col >= w.size()) return 0;
        return sol.at(w[w.size() - 1 - col]);
      };
      long long sum = op == "+" ? digit(ops[0]) + digit(ops[1]) + carry
                                : digit(ops[0]) - digit(ops[1]) + carry;
      long long d = ((sum % 10) + 10) % 10;
      std::string calc = "column " + std::to_string(col) + ": result digit " + std::to_string(d) +
                         ", carry " + std::to_string((sum - d) / 10);
      steps.push_back({"Working column " + std::to_string(col) +
                           " (from the right): the digits combine to " + std::to_string(sum) +
                           ", so the result digit is " + std::to_string(d) + ".",
                       {{0, AnchorKind::KeyCalculation, calc}}});
      carry = (sum - d) / 10;
    }
    std::string assign;
    for (auto& [L, d] : sol) {
      if (!assign.empty()) assign += ", ";
      assign += std::string(1, L) + "=" + std::to_string(d);
    }
    steps.push_back({"Collecting the forced assignments gives " + assign + ".",
                     {{0, AnchorKind::KeyCalculation, assign}}});
    return steps;
  };
  reg.add(std::move(spec));
}

}  // namespace

}  // namespace forge::seq

namespace forge {

void register_sequence_tasks(Registry& reg) {
  using namespace seq;
  register_array_task(reg, {"trapping_rain_water",
                            "Here is a bunch of bars lined up side by side, where the width of "
                            "each bar is 1 and consecutive bars are adjacent with no gaps "
                            "between them. Compute how much water it can trap after raining. "
                            "Please provide your answer as an integer.",
                            trapping_rain_water, 0});
  register_array_task(reg, {"buy_sell_stock",
                            "Given a bar chart of stock prices over time and each bar's height "
                            "is the price on that day. You can buy and sell as much as you "
                            "want, but can only hold one stock at a time. Calculate the maximum "
                            "profit you can get from this transaction. If you cannot get any "
                            "profit, answer 0. Please provide your answer as an integer.",
                            buy_sell_stock, 1});
  register_array_task(reg, {"container_most_water",
                            "Given a row of vertical bars where consecutive bars are adjacent "
                            "with no gaps between them. Pick any two bars and form the sides of "
                            "a water container, with the x-axis as the base. How much water can "
                            "the biggest possible container hold? Please provide your answer as "
                            "an integer.",
                            container_most_water, 1});
  register_array_task(reg, {"h_index",
                            "Here is a bar chart showing how many times each of a researcher's "
                            "papers was cited. Determine the researcher's h-index: the largest "
                            "value h such that at least h papers have at least h citations "
                            "each. Please provide your answer as an integer.",
                            h_index, 0});
  register_array_task(reg, {"largest_rectangle",
                            "Here is a histogram made of bars where each 1 unit wide and packed "
                            "tightly together. What's the biggest rectangle you can fit "
                            "entirely inside the histogram? Please provide your answer as an "
                            "integer.",
                            largest_rectangle, 0});
  register_array_task(reg, {"lis",
                            "Here is a row of bars each with some height. Pick a subset of "
                            "these bars where each one is strictly taller than the last and "
                            "they appear in order from left to right. What's the longest such "
                            "sequence you can find? Please provide your answer as an integer.",
                            longest_increasing_subsequence, 0});
  register_array_task(reg, {"hills_valleys",
                            "Here is a terrain made of bars. Hill: A flat or raised area where "
                            "the land right before it is lower, and the land right after it is "
                            "lower too. Valley: A flat or dipped area where the land right "
                            "before is higher, and the land right after is higher too. "
                            "Neighboring bars with the same height count as part of the same "
                            "hill/valley. Calculate the number of hills and valleys. Please "
                            "provide your answer as an integer.",
                            hills_and_valleys, 0});
  register_24(reg);
  register_cryptomath(reg);
}

}  // namespace forge
