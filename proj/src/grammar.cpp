#include "taskforge/grammar.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace forge {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

// Folds the typographic operators the prompts use (U+00D7, U+00F7, U+2212)
// to ASCII so every downstream scanner sees one operator set. Offsets into
// the folded text are close enough for error reporting.
std::string fold_text(std::string_view in) {
  std::string out;
  out.reserve(in.size());
  for (size_t i = 0; i < in.size();) {
    unsigned char c0 = in[i];
    if (c0 == 0xC3 && i + 1 < in.size()) {
      unsigned char c1 = in[i + 1];
      if (c1 == 0x97) {  // ×
        out += '*';
        i += 2;
        continue;
      }
      if (c1 == 0xB7) {  // ÷
        out += '/';
        i += 2;
        continue;
      }
    }
    if (c0 == 0xE2 && i + 2 < in.size()) {
      unsigned char c1 = in[i + 1], c2 = in[i + 2];
      if (c1 == 0x88 && c2 == 0x92) {  // −
        out += '-';
        i += 3;
        continue;
      }
    }
    out += static_cast<char>(c0);
    ++i;
  }
  return out;
}

struct Span {
  size_t begin = 0;
  size_t end = 0;
};

// Integer token at position i (optional sign); returns value and end.
bool scan_int(std::string_view s, size_t i, long long& out, size_t& end) {
  size_t j = i;
  bool neg = false;
  if (j < s.size() && (s[j] == '-' || s[j] == '+')) {
    neg = s[j] == '-';
    ++j;
  }
  if (j >= s.size() || !is_digit(s[j])) return false;
  long long v = 0;
  while (j < s.size() && is_digit(s[j])) {
    v = v * 10 + (s[j] - '0');
    if (v > 1'000'000'000'000LL) return false;
    ++j;
  }
  out = neg ? -v : v;
  end = j;
  return true;
}

size_t skip_ws(std::string_view s, size_t i) {
  while (i < s.size() && is_space(s[i])) ++i;
  return i;
}

// "(a,b)" or "[a,b]" with arbitrary interior spacing.
bool scan_pair(std::string_view s, size_t i, Coord& c, size_t& end) {
  if (i >= s.size() || (s[i] != '(' && s[i] != '[')) return false;
  char close = s[i] == '(' ? ')' : ']';
  size_t j = skip_ws(s, i + 1);
  long long a, b;
  if (!scan_int(s, j, a, j)) return false;
  j = skip_ws(s, j);
  if (j >= s.size() || s[j] != ',') return false;
  j = skip_ws(s, j + 1);
  if (!scan_int(s, j, b, j)) return false;
  j = skip_ws(s, j);
  if (j >= s.size() || s[j] != close) return false;
  c = {static_cast<int>(a), static_cast<int>(b)};
  end = j + 1;
  return true;
}

// Groups adjacent tokens into runs: the gap between members may contain only
// separator characters. Returns the last run.
template <typename Tok>
std::vector<Tok> last_run(const std::vector<Tok>& toks, const std::vector<Span>& spans,
                          std::string_view text, std::string_view extra_seps = "") {
  if (toks.empty()) return {};
  auto sep_ok = [&](size_t from, size_t to) {
    for (size_t k = from; k < to; ++k) {
      char c = text[k];
      if (is_space(c) || c == ',' || c == ';') continue;
      if (extra_seps.find(c) != std::string_view::npos) continue;
      return false;
    }
    return true;
  };
  size_t run_start = 0;
  std::vector<std::pair<size_t, size_t>> runs;  // [first, last] token index
  for (size_t i = 1; i < toks.size(); ++i) {
    if (!sep_ok(spans[i - 1].end, spans[i].begin)) {
      runs.push_back({run_start, i - 1});
      run_start = i;
    }
  }
  runs.push_back({run_start, toks.size() - 1});
  auto [a, b] = runs.back();
  return std::vector<Tok>(toks.begin() + a, toks.begin() + b + 1);
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  lines.push_back(cur);
  return lines;
}

std::string strip(std::string s) {
  size_t a = 0, b = s.size();
  while (a < b && is_space(s[a])) ++a;
  while (b > a && is_space(s[b - 1])) --b;
  return s.substr(a, b - a);
}

// Longest suffix of rows sharing the width of the final row.
template <typename Row>
std::vector<Row> rect_suffix(const std::vector<Row>& rows) {
  if (rows.empty()) return {};
  size_t w = rows.back().size();
  size_t a = rows.size();
  while (a > 0 && rows[a - 1].size() == w) --a;
  return std::vector<Row>(rows.begin() + a, rows.end());
}

ParseResult fail(std::string_view text, std::string msg) {
  ParseResult r;
  r.error_offset = text.size();
  r.error = std::move(msg);
  return r;
}

ParseResult ok(ParsedAnswer v) {
  ParseResult r;
  r.value = std::move(v);
  return r;
}

// ---------------------------------------------------------------- MoveSeq

ParseResult parse_moves(std::string_view text) {
  struct Tok {
    Move m;
  };
  std::vector<Tok> toks;
  std::vector<Span> spans;
  std::vector<std::pair<std::string, Span>> words;
  for (size_t i = 0; i < text.size();) {
    if (is_alpha(text[i])) {
      size_t j = i;
      std::string w;
      while (j < text.size() && is_alpha(text[j])) w += lower(text[j++]);
      words.push_back({w, {i, j}});
      i = j;
    } else {
      ++i;
    }
  }
  // A run of move words breaks when any non-move word sits between them.
  std::vector<Move> best;
  std::vector<Move> cur;
  for (auto& [w, sp] : words) {
    if (auto m = move_from(w)) {
      cur.push_back(*m);
    } else if (!cur.empty()) {
      best = cur;
      cur.clear();
    }
  }
  if (!cur.empty()) best = cur;
  if (best.empty()) return fail(text, "no move sequence found");
  return ok(best);
}

// -------------------------------------------------------------- CoordList

ParseResult parse_coords(std::string_view text) {
  std::vector<Coord> toks;
  std::vector<Span> spans;
  for (size_t i = 0; i < text.size();) {
    Coord c;
    size_t end;
    if ((text[i] == '(' || text[i] == '[') && scan_pair(text, i, c, end)) {
      toks.push_back(c);
      spans.push_back({i, end});
      i = end;
    } else {
      ++i;
    }
  }
  if (toks.empty()) return fail(text, "no coordinate pairs found");
  auto run = last_run(toks, std::vector<Span>(spans.end() - toks.size(), spans.end()), text,
                      "[]{}.");
  if (run.empty()) return fail(text, "no coordinate pairs found");
  return ok(run);
}

// ----------------------------------------------------------- GridOfDigits

bool parse_int_line(const std::string& line, std::vector<int>& out) {
  out.clear();
  size_t i = 0;
  std::string_view s = line;
  while (true) {
    i = skip_ws(s, i);
    if (i >= s.size()) break;
    long long v;
    size_t end;
    if (!scan_int(s, i, v, end)) return false;
    out.push_back(static_cast<int>(v));
    i = end;
    // tolerate commas between numbers
    i = skip_ws(s, i);
    if (i < s.size() && s[i] == ',') ++i;
  }
  return !out.empty();
}

ParseResult parse_grid_space_rows(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<std::vector<int>> cur, best;
  for (auto& raw : lines) {
    std::string line = strip(raw);
    std::vector<int> row;
    if (!line.empty() && parse_int_line(line, row)) {
      cur.push_back(row);
    } else if (!line.empty()) {
      if (!cur.empty()) best = cur;
      cur.clear();
    }
    // blank lines do not break a grid block
  }
  if (!cur.empty()) best = cur;
  if (best.empty()) return fail(text, "no digit grid found");
  auto rect = rect_suffix(best);
  return ok(rect);
}

ParseResult parse_grid_pipes(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<std::vector<int>> cur, best;
  for (auto& raw : lines) {
    std::string line = strip(raw);
    std::vector<int> row;
    bool is_row = false;
    if (!line.empty() && line.front() == '|') {
      is_row = true;
      size_t i = 1;
      std::string_view s = line;
      while (i < s.size()) {
        i = skip_ws(s, i);
        if (i >= s.size()) break;
        long long v;
        size_t end;
        if (!scan_int(s, i, v, end)) {
          is_row = false;
          break;
        }
        row.push_back(static_cast<int>(v));
        i = skip_ws(s, end);
        if (i >= s.size() || s[i] != '|') {
          is_row = false;
          break;
        }
        ++i;
      }
      if (row.empty()) is_row = false;
    }
    if (is_row) {
      cur.push_back(row);
    } else if (!line.empty()) {
      if (!cur.empty()) best = cur;
      cur.clear();
    }
  }
  if (!cur.empty()) best = cur;
  if (best.empty()) return fail(text, "no pipe-delimited grid found");
  return ok(rect_suffix(best));
}

// Letter-number cells ("B3"), 1-based letter index packed as 10*letter+digit.
int eulero_pack(char letter, int digit) { return (letter - 'A' + 1) * 10 + digit; }

ParseResult parse_grid_eulero(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<std::vector<int>> cur, best;
  for (auto& raw : lines) {
    std::string line = strip(raw);
    std::vector<int> row;
    bool is_row = !line.empty();
    size_t i = 0;
    while (is_row && i < line.size()) {
      i = skip_ws(line, i);
      if (i >= line.size()) break;
      char L = static_cast<char>(std::toupper(static_cast<unsigned char>(line[i])));
      if (L < 'A' || L > 'Z' || i + 1 >= line.size() || !is_digit(line[i + 1])) {
        is_row = false;
        break;
      }
      row.push_back(eulero_pack(L, line[i + 1] - '0'));
      i = skip_ws(line, i + 2);
      if (i < line.size()) {
        if (line[i] != '|') {
          is_row = false;
          break;
        }
        ++i;  // trailing separator tolerated
      }
    }
    if (is_row && !row.empty()) {
      cur.push_back(row);
    } else if (!line.empty()) {
      if (!cur.empty()) best = cur;
      cur.clear();
    }
  }
  if (!cur.empty()) best = cur;
  if (best.empty()) return fail(text, "no letter-number grid found");
  return ok(rect_suffix(best));
}

// [[1, 2], [3, 4]] blocks; the last parseable block wins.
bool parse_list2d_at(std::string_view s, size_t i, std::vector<std::vector<int>>& out,
                     size_t& end) {
  out.clear();
  if (i >= s.size() || s[i] != '[') return false;
  size_t j = skip_ws(s, i + 1);
  while (true) {
    if (j >= s.size() || s[j] != '[') return false;
    std::vector<int> row;
    j = skip_ws(s, j + 1);
    while (true) {
      long long v;
      if (!scan_int(s, j, v, j)) return false;
      row.push_back(static_cast<int>(v));
      j = skip_ws(s, j);
      if (j < s.size() && s[j] == ',') {
        j = skip_ws(s, j + 1);
        continue;
      }
      break;
    }
    if (j >= s.size() || s[j] != ']') return false;
    out.push_back(row);
    j = skip_ws(s, j + 1);
    if (j < s.size() && s[j] == ',') {
      j = skip_ws(s, j + 1);
      continue;
    }
    break;
  }
  if (j >= s.size() || s[j] != ']') return false;
  end = j + 1;
  return !out.empty();
}

ParseResult parse_grid_list2d(std::string_view text) {
  std::vector<std::vector<int>> best;
  bool found = false;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '[') continue;
    std::vector<std::vector<int>> g;
    size_t end;
    if (parse_list2d_at(text, i, g, end)) {
      best = g;
      found = true;
      i = end - 1;
    }
  }
  if (!found) return fail(text, "no 2-d list found");
  return ok(best);
}

// ------------------------------------------------------------ GridOfMarks

ParseResult parse_marks(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<std::vector<bool>> cur, best;
  for (auto& raw : lines) {
    std::string line = strip(raw);
    std::string compact;
    for (char c : line)
      if (!is_space(c)) compact += c;
    bool is_row = !compact.empty();
    std::vector<bool> row;
    for (char c : compact) {
      if (c == 'X' || c == 'x') {
        row.push_back(true);
      } else if (c == '.') {
        row.push_back(false);
      } else {
        is_row = false;
        break;
      }
    }
    if (is_row) {
      cur.push_back(row);
    } else if (!compact.empty()) {
      if (!cur.empty()) best = cur;
      cur.clear();
    }
  }
  if (!cur.empty()) best = cur;
  if (best.empty()) return fail(text, "no mark grid found");
  return ok(rect_suffix(best));
}

// ------------------------------------------------------------- Expression

struct ExprParser {
  std::string_view s;
  size_t i = 0;
  int ops = 0;

  void ws() { i = skip_ws(s, i); }

  bool factor(Expr& out) {
    ws();
    if (i < s.size() && s[i] == '(') {
      ++i;
      if (!expr(out)) return false;
      ws();
      if (i >= s.size() || s[i] != ')') return false;
      ++i;
      return true;
    }
    bool neg = false;
    if (i < s.size() && s[i] == '-') {
      neg = true;
      ++i;
      ws();
    }
    if (i >= s.size() || !is_digit(s[i])) return false;
    long long v = 0;
    while (i < s.size() && is_digit(s[i])) v = v * 10 + (s[i++] - '0');
    out = Expr{0, neg ? -v : v, {}};
    return true;
  }

  bool term(Expr& out) {
    if (!factor(out)) return false;
    while (true) {
      ws();
      if (i < s.size() && (s[i] == '*' || s[i] == '/')) {
        char op = s[i++];
        Expr rhs;
        if (!factor(rhs)) return false;
        Expr node{op, 0, {std::move(out), std::move(rhs)}};
        out = std::move(node);
        ++ops;
      } else {
        break;
      }
    }
    return true;
  }

  bool expr(Expr& out) {
    if (!term(out)) return false;
    while (true) {
      ws();
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        char op = s[i++];
        Expr rhs;
        if (!term(rhs)) return false;
        Expr node{op, 0, {std::move(out), std::move(rhs)}};
        out = std::move(node);
        ++ops;
      } else {
        break;
      }
    }
    return true;
  }
};

bool parse_expr_span(std::string_view span, Expr& out, int& ops) {
  std::string t(span);
  for (char& c : t)
    if (c == 'x' || c == 'X') c = '*';
  // trim trailing punctuation a sentence may append
  std::string_view v = t;
  while (!v.empty() && (is_space(v.back()) || v.back() == '.' || v.back() == '=')) {
    v.remove_suffix(1);
  }
  ExprParser p{v};
  Expr e;
  if (!p.expr(e)) return false;
  p.ws();
  if (p.i != v.size()) return false;
  out = std::move(e);
  ops = p.ops;
  return true;
}

ParseResult parse_expression(std::string_view text) {
  static const std::string charset = "0123456789+-*/()xX \t";
  std::vector<Span> spans;
  size_t i = 0;
  while (i < text.size()) {
    if (charset.find(text[i]) != std::string::npos) {
      size_t j = i;
      while (j < text.size() && charset.find(text[j]) != std::string::npos) ++j;
      spans.push_back({i, j});
      i = j;
    } else {
      ++i;
    }
  }
  Expr with_ops, bare;
  bool has_ops = false, has_bare = false;
  for (auto& sp : spans) {
    Expr e;
    int ops;
    if (parse_expr_span(text.substr(sp.begin, sp.end - sp.begin), e, ops)) {
      if (ops > 0) {
        with_ops = e;
        has_ops = true;
      } else {
        bare = e;
        has_bare = true;
      }
    }
  }
  if (has_ops) return ok(with_ops);
  if (has_bare) return ok(bare);
  return fail(text, "no arithmetic expression found");
}

// ------------------------------------------------------------ KeyValueList

ParseResult parse_kv_letter(std::string_view text) {
  struct Tok {
    std::string key;
    long long val;
  };
  std::vector<Tok> toks;
  std::vector<Span> spans;
  for (size_t i = 0; i < text.size(); ++i) {
    size_t j = i;
    char quote = 0;
    if (text[j] == '"' || text[j] == '\'') quote = text[j++];
    if (j >= text.size() || !is_alpha(text[j])) continue;
    char L = static_cast<char>(std::toupper(static_cast<unsigned char>(text[j])));
    ++j;
    if (quote) {
      if (j >= text.size() || text[j] != quote) continue;
      ++j;
    }
    j = skip_ws(text, j);
    if (j >= text.size() || text[j] != '=') continue;
    j = skip_ws(text, j + 1);
    long long v;
    size_t end;
    if (!scan_int(text, j, v, end)) continue;
    toks.push_back({std::string(1, L), v});
    spans.push_back({i, end});
    i = end - 1;
  }
  if (toks.empty()) return fail(text, "no letter=digit pairs found");
  auto run = last_run(toks, spans, text, "[]");
  KeyValues kv;
  for (auto& t : run) kv.push_back({t.key, t.val});
  return ok(kv);
}

std::string coord_key(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

ParseResult parse_kv_coord(std::string_view text) {
  struct Tok {
    std::string key;
    long long val;
  };
  std::vector<Tok> toks;
  std::vector<Span> spans;
  for (size_t i = 0; i < text.size(); ++i) {
    Coord c;
    size_t j;
    if (text[i] != '(' || !scan_pair(text, i, c, j)) continue;
    size_t k = skip_ws(text, j);
    if (k >= text.size() || text[k] != ':') continue;
    k = skip_ws(text, k + 1);
    long long v;
    size_t end;
    if (!scan_int(text, k, v, end)) continue;
    toks.push_back({coord_key(c.a, c.b), v});
    spans.push_back({i, end});
    i = end - 1;
  }
  if (toks.empty()) return fail(text, "no (row,col):value pairs found");
  auto run = last_run(toks, spans, text);
  KeyValues kv;
  for (auto& t : run) kv.push_back({t.key, t.val});
  return ok(kv);
}

ParseResult parse_kv_bridge(std::string_view text) {
  struct Tok {
    std::string key;
    long long val;
  };
  std::vector<Tok> toks;
  std::vector<Span> spans;
  for (size_t i = 0; i < text.size(); ++i) {
    Coord p, q;
    size_t j;
    if (text[i] != '(' || !scan_pair(text, i, p, j)) continue;
    size_t k = skip_ws(text, j);
    if (k >= text.size() || text[k] != '-') continue;
    k = skip_ws(text, k + 1);
    size_t j2;
    if (k >= text.size() || text[k] != '(' || !scan_pair(text, k, q, j2)) continue;
    k = skip_ws(text, j2);
    if (k >= text.size() || text[k] != ':') continue;
    k = skip_ws(text, k + 1);
    long long v;
    size_t end;
    if (!scan_int(text, k, v, end)) continue;
    if (std::pair{q.a, q.b} < std::pair{p.a, p.b}) std::swap(p, q);
    toks.push_back({coord_key(p.a, p.b) + "-" + coord_key(q.a, q.b), v});
    spans.push_back({i, end});
    i = end - 1;
  }
  if (toks.empty()) return fail(text, "no bridge connections found");
  auto run = last_run(toks, spans, text);
  KeyValues kv;
  for (auto& t : run) kv.push_back({t.key, t.val});
  return ok(kv);
}

// ------------------------------------------------------------- SegmentList

ParseResult parse_segments(std::string_view text) {
  std::vector<Segment> toks;
  std::vector<Span> spans;
  for (size_t i = 0; i < text.size(); ++i) {
    Coord p, q;
    size_t j;
    if (text[i] != '(' || !scan_pair(text, i, p, j)) continue;
    size_t k = skip_ws(text, j);
    if (k >= text.size() || text[k] != '-') continue;
    k = skip_ws(text, k + 1);
    size_t end;
    if (k >= text.size() || text[k] != '(' || !scan_pair(text, k, q, end)) continue;
    int dr = std::abs(p.a - q.a), dc = std::abs(p.b - q.b);
    if (dr + dc != 1) return fail(text, "segment endpoints are not adjacent lattice points");
    Segment seg{p, q};
    if (seg.q < seg.p) std::swap(seg.p, seg.q);
    toks.push_back(seg);
    spans.push_back({i, end});
    i = end - 1;
  }
  if (toks.empty()) return fail(text, "no segments found");
  auto run = last_run(toks, spans, text);
  return ok(run);
}

// --------------------------------------------------------------- NodeList

bool parse_int_list_at(std::string_view s, size_t i, std::vector<std::string>& out, size_t& end) {
  out.clear();
  if (i >= s.size() || s[i] != '[') return false;
  size_t j = skip_ws(s, i + 1);
  while (true) {
    long long v;
    if (!scan_int(s, j, v, j)) return false;
    out.push_back(std::to_string(v));
    j = skip_ws(s, j);
    if (j < s.size() && s[j] == ',') {
      j = skip_ws(s, j + 1);
      continue;
    }
    break;
  }
  if (j >= s.size() || s[j] != ']') return false;
  end = j + 1;
  return !out.empty();
}

ParseResult parse_nodes_int(std::string_view text) {
  std::vector<std::string> best;
  bool found = false;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '[') continue;
    std::vector<std::string> v;
    size_t end;
    if (parse_int_list_at(text, i, v, end)) {
      best = v;
      found = true;
      i = end - 1;
    }
  }
  if (found) return ok(best);
  return fail(text, "no vertex list found");
}

ParseResult parse_nodes_words(std::string_view text) {
  struct Tok {
    std::string w;
  };
  std::vector<Tok> toks;
  std::vector<Span> spans;
  for (size_t i = 0; i < text.size(); ++i) {
    char quote = text[i];
    if (quote != '"' && quote != '\'') continue;
    size_t j = i + 1;
    std::string w;
    while (j < text.size() && is_alpha(text[j])) w += lower(text[j++]);
    if (w.empty() || j >= text.size() || text[j] != quote) continue;
    toks.push_back({w});
    spans.push_back({i, j + 1});
    i = j;
  }
  if (!toks.empty()) {
    auto run = last_run(toks, spans, text, "[]");
    NodeList words;
    for (auto& t : run) words.push_back(t.w);
    return ok(words);
  }
  // fallback: bare words inside the last bracket block
  size_t close = text.rfind(']');
  size_t open = close == std::string_view::npos ? std::string_view::npos
                                                : text.rfind('[', close);
  if (open != std::string_view::npos && close != std::string_view::npos && open < close) {
    NodeList words;
    std::string w;
    for (size_t i = open + 1; i < close; ++i) {
      if (is_alpha(text[i])) {
        w += lower(text[i]);
      } else {
        if (!w.empty()) words.push_back(w);
        w.clear();
      }
    }
    if (!w.empty()) words.push_back(w);
    if (!words.empty()) return ok(words);
  }
  return fail(text, "no word list found");
}

// ---------------------------------------------------------- WordPlacements

const char* kDirs[] = {"NE", "NW", "SE", "SW", "N", "S", "E", "W"};

ParseResult parse_placements(std::string_view text) {
  std::vector<WordPlacement> out;
  for (size_t i = 0; i < text.size(); ++i) {
    if (!is_alpha(text[i])) continue;
    if (i > 0 && is_alpha(text[i - 1])) continue;
    size_t j = i;
    std::string word;
    while (j < text.size() && is_alpha(text[j]))
      word += static_cast<char>(std::toupper(static_cast<unsigned char>(text[j++])));
    if (word.size() < 2) continue;
    size_t k = skip_ws(text, j);
    std::string dir;
    for (const char* d : kDirs) {
      size_t n = std::string(d).size();
      if (text.compare(k, n, d) == 0 &&
          (k + n >= text.size() || !is_alpha(text[k + n]))) {
        dir = d;
        break;
      }
    }
    if (dir.empty()) continue;
    k = skip_ws(text, k + dir.size());
    if (k >= text.size() || text[k] != '@') continue;
    k = skip_ws(text, k + 1);
    Coord c;
    size_t end;
    if (k >= text.size() || text[k] != '(' || !scan_pair(text, k, c, end)) continue;
    WordPlacement p{word, dir, c.a, c.b};
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    i = end - 1;
  }
  if (out.empty()) return fail(text, "no word placements found");
  return ok(out);
}

// ------------------------------------------------------------------ Scalar

ParseResult parse_scalar(std::string_view text) {
  std::optional<Rat> best;
  for (size_t i = 0; i < text.size(); ++i) {
    if (!is_digit(text[i])) continue;
    if (i > 0 && (is_alpha(text[i - 1]) || text[i - 1] == '_')) {
      while (i < text.size() && is_digit(text[i])) ++i;
      continue;
    }
    size_t start = i;
    bool neg = false;
    if (start > 0 && text[start - 1] == '-') {
      // a minus bound to the number (not preceded by a digit, e.g. "3-4")
      size_t p = start - 1;
      if (p == 0 || (!is_digit(text[p - 1]) && text[p - 1] != ')')) neg = true;
    }
    long long ip = 0;
    size_t j = i;
    while (j < text.size() && is_digit(text[j])) ip = ip * 10 + (text[j++] - '0');
    long long num = ip, den = 1;
    if (j + 1 < text.size() && text[j] == '.' && is_digit(text[j + 1])) {
      ++j;
      while (j < text.size() && is_digit(text[j]) && den < 1'000'000'000LL) {
        num = num * 10 + (text[j++] - '0');
        den *= 10;
      }
      while (j < text.size() && is_digit(text[j])) ++j;  // excess precision dropped
    }
    if (j < text.size() && is_alpha(text[j])) {
      i = j;
      continue;
    }
    best = Rat(neg ? -num : num, den);
    i = j - 1;
  }
  if (!best) return fail(text, "no numeric answer found");
  return ok(*best);
}

// ---------------------------------------------------------------- Decision

ParseResult parse_decision(const Grammar& g, std::string_view text) {
  // last standalone yes/no
  ptrdiff_t yn_end = -1;
  bool yn_yes = false;
  for (size_t i = 0; i < text.size(); ++i) {
    if (!is_alpha(text[i])) continue;
    if (i > 0 && is_alpha(text[i - 1])) continue;
    size_t j = i;
    std::string w;
    while (j < text.size() && is_alpha(text[j])) w += lower(text[j++]);
    if (w == "yes") {
      yn_end = static_cast<ptrdiff_t>(j);
      yn_yes = true;
    } else if (w == "no") {
      yn_end = static_cast<ptrdiff_t>(j);
      yn_yes = false;
    }
    i = j;
  }
  ptrdiff_t list_end = -1;
  NodeList list;
  if (g.decision_list_allowed) {
    for (size_t i = 0; i < text.size(); ++i) {
      if (text[i] != '[') continue;
      std::vector<std::string> v;
      size_t end;
      if (parse_int_list_at(text, i, v, end)) {
        list = v;
        list_end = static_cast<ptrdiff_t>(end);
        i = end - 1;
      }
    }
  }
  if (yn_end < 0 && list_end < 0) return fail(text, "no yes/no or list answer found");
  Decision d;
  if (list_end > yn_end) {
    d.kind = Decision::List;
    d.list = list;
  } else {
    d.kind = yn_yes ? Decision::Yes : Decision::No;
  }
  return ok(d);
}

}  // namespace

const char* move_name(Move m) {
  switch (m) {
    case Move::Up: return "up";
    case Move::Down: return "down";
    case Move::Left: return "left";
    case Move::Right: return "right";
  }
  return "?";
}

std::optional<Move> move_from(std::string_view token) {
  if (token == "up" || token == "u") return Move::Up;
  if (token == "down" || token == "d") return Move::Down;
  if (token == "left" || token == "l") return Move::Left;
  if (token == "right" || token == "r") return Move::Right;
  return std::nullopt;
}

Rat::Rat(long long n, long long d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  num = n / g;
  den = d / g;
}

Rat operator+(Rat a, Rat b) {
  __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
  __int128 d = static_cast<__int128>(a.den) * b.den;
  __int128 g = std::gcd(static_cast<long long>(n < 0 ? -n : n), static_cast<long long>(d));
  if (g == 0) g = 1;
  return Rat(static_cast<long long>(n / g), static_cast<long long>(d / g));
}

Rat operator-(Rat a, Rat b) { return a + Rat(-b.num, b.den); }

Rat operator*(Rat a, Rat b) {
  __int128 n = static_cast<__int128>(a.num) * b.num;
  __int128 d = static_cast<__int128>(a.den) * b.den;
  __int128 g = std::gcd(static_cast<long long>(n < 0 ? -n : n), static_cast<long long>(d));
  if (g == 0) g = 1;
  return Rat(static_cast<long long>(n / g), static_cast<long long>(d / g));
}

std::optional<Rat> rat_div(Rat a, Rat b) {
  if (b.num == 0) return std::nullopt;
  return a * Rat(b.den, b.num);
}

ParseResult parse_answer(const Grammar& g, std::string_view raw) {
  std::string text = fold_text(raw);
  switch (g.kind) {
    case AnswerKind::MoveSeq: return parse_moves(text);
    case AnswerKind::CoordList: return parse_coords(text);
    case AnswerKind::GridOfDigits:
      switch (g.grid_style) {
        case GridStyle::SpaceRows: return parse_grid_space_rows(text);
        case GridStyle::List2D: return parse_grid_list2d(text);
        case GridStyle::Pipes: return parse_grid_pipes(text);
        case GridStyle::EuleroPairs: return parse_grid_eulero(text);
      }
      break;
    case AnswerKind::GridOfMarks: return parse_marks(text);
    case AnswerKind::Expression: return parse_expression(text);
    case AnswerKind::KeyValueList:
      switch (g.kv_style) {
        case KvStyle::LetterDigit: return parse_kv_letter(text);
        case KvStyle::CoordValue: return parse_kv_coord(text);
        case KvStyle::Bridge: return parse_kv_bridge(text);
      }
      break;
    case AnswerKind::SegmentList: return parse_segments(text);
    case AnswerKind::NodeList:
      return g.node_style == NodeStyle::IntList ? parse_nodes_int(text)
                                                : parse_nodes_words(text);
    case AnswerKind::WordPlacements: return parse_placements(text);
    case AnswerKind::Scalar: return parse_scalar(text);
    case AnswerKind::Decision: return parse_decision(g, text);
  }
  return fail(raw, "unsupported grammar");
}

ParsedAnswer canonicalize(const Grammar& g, const ParsedAnswer& a) {
  ParsedAnswer out = a;
  if (auto* coords = std::get_if<std::vector<Coord>>(&out)) {
    if (g.coord.sorted) std::sort(coords->begin(), coords->end());
  } else if (auto* kv = std::get_if<KeyValues>(&out)) {
    std::sort(kv->begin(), kv->end());
  } else if (auto* segs = std::get_if<std::vector<Segment>>(&out)) {
    std::sort(segs->begin(), segs->end());
  } else if (auto* wp = std::get_if<std::vector<WordPlacement>>(&out)) {
    std::sort(wp->begin(), wp->end());
  }
  return out;
}

std::string render_expression(const Expr& e) {
  if (e.op == 0) return std::to_string(e.value);
  std::string lhs = render_expression(e.kids[0]);
  std::string rhs = render_expression(e.kids[1]);
  return "(" + lhs + " " + std::string(1, e.op) + " " + rhs + ")";
}

namespace {

std::string pair_text(const Grammar& g, const Coord& c) {
  const auto& st = g.coord;
  char open = st.pair_open, close = st.pair_open == '(' ? ')' : ']';
  std::string sep = st.pair_space ? ", " : ",";
  return std::string(1, open) + std::to_string(c.a) + sep + std::to_string(c.b) +
         std::string(1, close);
}

std::string scalar_text(const Rat& r) {
  if (r.is_integer()) return std::to_string(r.num);
  // decimal with trailing zeros trimmed; exact for the power-of-ten
  // denominators the parser produces
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(9);
  os << r.to_double();
  std::string s = os.str();
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string normalize_answer(const Grammar& g, const ParsedAnswer& raw) {
  ParsedAnswer a = canonicalize(g, raw);
  std::string out;
  switch (g.kind) {
    case AnswerKind::MoveSeq: {
      const auto& mv = std::get<std::vector<Move>>(a);
      for (size_t i = 0; i < mv.size(); ++i) {
        if (i) out += ' ';
        out += move_name(mv[i]);
      }
      return out;
    }
    case AnswerKind::CoordList: {
      const auto& cs = std::get<std::vector<Coord>>(a);
      out = g.coord.wrap_open;
      for (size_t i = 0; i < cs.size(); ++i) {
        if (i) out += g.coord.joiner;
        out += pair_text(g, cs[i]);
      }
      out += g.coord.wrap_close;
      return out;
    }
    case AnswerKind::GridOfDigits: {
      const auto& grid = std::get<DigitGrid>(a);
      switch (g.grid_style) {
        case GridStyle::SpaceRows:
          for (size_t r = 0; r < grid.size(); ++r) {
            if (r) out += '\n';
            for (size_t c = 0; c < grid[r].size(); ++c) {
              if (c) out += ' ';
              out += std::to_string(grid[r][c]);
            }
          }
          return out;
        case GridStyle::Pipes:
          for (size_t r = 0; r < grid.size(); ++r) {
            if (r) out += '\n';
            out += '|';
            for (int v : grid[r]) {
              out += std::to_string(v);
              out += '|';
            }
          }
          return out;
        case GridStyle::EuleroPairs:
          for (size_t r = 0; r < grid.size(); ++r) {
            if (r) out += '\n';
            for (size_t c = 0; c < grid[r].size(); ++c) {
              if (c) out += '|';
              int v = grid[r][c];
              out += static_cast<char>('A' + v / 10 - 1);
              out += static_cast<char>('0' + v % 10);
            }
          }
          return out;
        case GridStyle::List2D:
          out = "[";
          for (size_t r = 0; r < grid.size(); ++r) {
            if (r) out += ", ";
            out += "[";
            for (size_t c = 0; c < grid[r].size(); ++c) {
              if (c) out += ", ";
              out += std::to_string(grid[r][c]);
            }
            out += "]";
          }
          out += "]";
          return out;
      }
      return out;
    }
    case AnswerKind::GridOfMarks: {
      const auto& grid = std::get<MarkGrid>(a);
      for (size_t r = 0; r < grid.size(); ++r) {
        if (r) out += '\n';
        for (bool v : grid[r]) out += v ? 'X' : '.';
      }
      return out;
    }
    case AnswerKind::Expression:
      return render_expression(std::get<Expr>(a));
    case AnswerKind::KeyValueList: {
      const auto& kv = std::get<KeyValues>(a);
      switch (g.kv_style) {
        case KvStyle::LetterDigit:
          out = "[";
          for (size_t i = 0; i < kv.size(); ++i) {
            if (i) out += ", ";
            out += "\"" + kv[i].first + "\"=" + std::to_string(kv[i].second);
          }
          out += "]";
          return out;
        case KvStyle::CoordValue:
        case KvStyle::Bridge:
          for (size_t i = 0; i < kv.size(); ++i) {
            if (i) out += ' ';
            out += kv[i].first + ":" + std::to_string(kv[i].second);
          }
          return out;
      }
      return out;
    }
    case AnswerKind::SegmentList: {
      const auto& segs = std::get<std::vector<Segment>>(a);
      for (size_t i = 0; i < segs.size(); ++i) {
        if (i) out += ' ';
        out += coord_key(segs[i].p.a, segs[i].p.b) + "-" + coord_key(segs[i].q.a, segs[i].q.b);
      }
      return out;
    }
    case AnswerKind::NodeList: {
      const auto& ns = std::get<NodeList>(a);
      if (g.node_style == NodeStyle::IntList) {
        out = "[";
        for (size_t i = 0; i < ns.size(); ++i) {
          if (i) out += ", ";
          out += ns[i];
        }
        out += "]";
      } else {
        out = "[";
        for (size_t i = 0; i < ns.size(); ++i) {
          if (i) out += ", ";
          out += "\"" + ns[i] + "\"";
        }
        out += "]";
      }
      return out;
    }
    case AnswerKind::WordPlacements: {
      const auto& ps = std::get<std::vector<WordPlacement>>(a);
      for (size_t i = 0; i < ps.size(); ++i) {
        if (i) out += '\n';
        out += ps[i].word + " " + ps[i].dir + " @ (" + std::to_string(ps[i].x) + ", " +
               std::to_string(ps[i].y) + ")";
      }
      return out;
    }
    case AnswerKind::Scalar:
      return scalar_text(std::get<Rat>(a));
    case AnswerKind::Decision: {
      const auto& d = std::get<Decision>(a);
      if (d.kind == Decision::Yes) return "Yes";
      if (d.kind == Decision::No) return "No";
      out = "[";
      for (size_t i = 0; i < d.list.size(); ++i) {
        if (i) out += ", ";
        out += d.list[i];
      }
      out += "]";
      return out;
    }
  }
  return out;
}

EvalOutcome eval_expression(const Expr& e) {
  EvalOutcome r;
  if (e.op == 0) {
    r.ok = true;
    r.value = Rat(e.value);
    r.leaves = {e.value};
    return r;
  }
  EvalOutcome a = eval_expression(e.kids[0]);
  EvalOutcome b = eval_expression(e.kids[1]);
  r.leaves = a.leaves;
  r.leaves.insert(r.leaves.end(), b.leaves.begin(), b.leaves.end());
  std::sort(r.leaves.begin(), r.leaves.end());
  if (!a.ok || !b.ok) return r;
  switch (e.op) {
    case '+': r.value = a.value + b.value; r.ok = true; break;
    case '-': r.value = a.value - b.value; r.ok = true; break;
    case '*': r.value = a.value * b.value; r.ok = true; break;
    case '/': {
      auto q = rat_div(a.value, b.value);
      if (!q) return r;  // division by zero: rejecting, not aborting
      r.value = *q;
      r.ok = true;
      break;
    }
    default: return r;
  }
  return r;
}

bool uses_exactly(const EvalOutcome& r, std::vector<long long> allowed) {
  std::sort(allowed.begin(), allowed.end());
  return r.leaves == allowed;
}

}  // namespace forge
