#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace forge {

enum class Move : uint8_t { Up, Down, Left, Right };

const char* move_name(Move m);
std::optional<Move> move_from(std::string_view token);

struct Coord {
  int a = 0;  // first written component; meaning (x or row) is per-task
  int b = 0;
  auto operator<=>(const Coord&) const = default;
};

struct Segment {
  Coord p, q;  // endpoint-sorted on construction
  auto operator<=>(const Segment&) const = default;
};

struct WordPlacement {
  std::string word;
  std::string dir;  // one of N,S,E,W,NE,NW,SE,SW
  int x = 0, y = 0;
  auto operator<=>(const WordPlacement&) const = default;
};

// Exact rational value, normalized with den > 0.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(long long n, long long d);

  bool is_integer() const { return den == 1; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  auto operator<=>(const Rat&) const = default;
};

Rat operator+(Rat a, Rat b);
Rat operator-(Rat a, Rat b);
Rat operator*(Rat a, Rat b);
std::optional<Rat> rat_div(Rat a, Rat b);  // nullopt on zero divisor

// Arithmetic tree over +,-,*,/ and integer leaves. op == 0 marks a leaf.
struct Expr {
  char op = 0;
  long long value = 0;
  std::vector<Expr> kids;

  bool operator==(const Expr&) const = default;
};

struct Decision {
  enum Kind { Yes, No, List } kind = Yes;
  std::vector<std::string> list;

  bool operator==(const Decision&) const = default;
};

using DigitGrid = std::vector<std::vector<int>>;
using MarkGrid = std::vector<std::vector<bool>>;
using KeyValues = std::vector<std::pair<std::string, long long>>;
using NodeList = std::vector<std::string>;

using ParsedAnswer = std::variant<std::vector<Move>, std::vector<Coord>, DigitGrid, MarkGrid,
                                  Expr, KeyValues, std::vector<Segment>, NodeList,
                                  std::vector<WordPlacement>, Rat, Decision>;

enum class AnswerKind {
  MoveSeq,
  CoordList,
  GridOfDigits,
  GridOfMarks,
  Expression,
  KeyValueList,
  SegmentList,
  NodeList,
  WordPlacements,
  Scalar,
  Decision,
};

enum class GridStyle { SpaceRows, List2D, Pipes, EuleroPairs };
enum class KvStyle { LetterDigit, CoordValue, Bridge };
enum class NodeStyle { IntList, WordList };

// Canonical-rendering style for coordinate lists, mirroring each task's
// prompt ("(x, y)" vs "[r, c]", separators, wrapping brackets).
struct CoordStyle {
  char pair_open = '(';
  bool pair_space = true;     // "(2, 1)" vs "(2,1)"
  std::string joiner = ", ";  // between pairs
  std::string wrap_open;      // "[", "{" or empty
  std::string wrap_close;
  bool sorted = false;  // set-valued answers canonicalize sorted
};

struct Grammar {
  std::string id;
  AnswerKind kind = AnswerKind::Scalar;
  CoordStyle coord;
  GridStyle grid_style = GridStyle::SpaceRows;
  KvStyle kv_style = KvStyle::LetterDigit;
  NodeStyle node_style = NodeStyle::IntList;
  bool decision_list_allowed = true;  // iso answers are Yes/No only
};

struct ParseResult {
  std::optional<ParsedAnswer> value;
  size_t error_offset = 0;
  std::string error;

  bool ok() const { return value.has_value(); }
};

// Parses the LAST well-formed answer block in text; leading chain-of-thought
// prose never changes the result.
ParseResult parse_answer(const Grammar& g, std::string_view text);

std::string normalize_answer(const Grammar& g, const ParsedAnswer& a);

// Canonical value equality: re-sorts set-valued answers per grammar.
ParsedAnswer canonicalize(const Grammar& g, const ParsedAnswer& a);

struct EvalOutcome {
  bool ok = false;  // false: division by zero somewhere
  Rat value;
  std::vector<long long> leaves;  // leaf multiset, sorted
};

EvalOutcome eval_expression(const Expr& e);
bool uses_exactly(const EvalOutcome& r, std::vector<long long> allowed);

std::string render_expression(const Expr& e);

}  // namespace forge
