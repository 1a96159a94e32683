#include "taskforge/task.hpp"

#include <cmath>

namespace forge {

const char* category_name(Category c) {
  switch (c) {
    case Category::Algorithm: return "Algorithm";
    case Category::Graph: return "Graph";
    case Category::Puzzle: return "Puzzle";
    case Category::Game: return "Game";
  }
  return "?";
}

const char* verify_mode_name(VerifyMode m) {
  switch (m) {
    case VerifyMode::ExactMatch: return "exact_match";
    case VerifyMode::Simulate: return "simulate";
    case VerifyMode::ConstraintCheck: return "constraint_check";
  }
  return "?";
}

const char* fail_reason_name(FailReason r) {
  switch (r) {
    case FailReason::ParseError: return "parse_error";
    case FailReason::RuleViolation: return "rule_violation";
    case FailReason::WrongValue: return "wrong_value";
    case FailReason::Incomplete: return "incomplete";
  }
  return "?";
}

const char* anchor_kind_name(AnchorKind k) {
  switch (k) {
    case AnchorKind::StateReading: return "state_reading";
    case AnchorKind::IntermediateState: return "intermediate_state";
    case AnchorKind::KeyCalculation: return "key_calculation";
    case AnchorKind::DecisionPoint: return "decision_point";
    case AnchorKind::FinalAnswer: return "final_answer";
  }
  return "?";
}

Verdict Verdict::accept(std::string normalized_text) {
  Verdict v;
  v.accepted = true;
  v.normalized = std::move(normalized_text);
  return v;
}

Verdict Verdict::reject(FailReason r) {
  Verdict v;
  v.reason = r;
  return v;
}

Verdict Verdict::reject(FailReason r, std::string normalized_text) {
  Verdict v;
  v.reason = r;
  v.normalized = std::move(normalized_text);
  return v;
}

Json TaskInstance::to_json() const {
  Json j;
  j["id"] = id;
  j["task"] = task;
  j["category"] = category_name(category);
  j["level"] = level;
  j["seed"] = seed;
  j["question"] = question;
  j["initial_state"] = initial_state;
  j["ground_truth"] = ground_truth;
  j["grammar"] = grammar;
  return j;
}

TaskInstance TaskInstance::from_json(const Json& j) {
  TaskInstance t;
  t.id = j.at("id").get<std::string>();
  t.task = j.at("task").get<std::string>();
  std::string cat = j.at("category").get<std::string>();
  for (Category c : {Category::Algorithm, Category::Graph, Category::Puzzle, Category::Game}) {
    if (cat == category_name(c)) t.category = c;
  }
  t.level = j.at("level").get<int>();
  t.seed = j.at("seed").get<uint64_t>();
  t.question = j.at("question").get<std::string>();
  t.initial_state = j.at("initial_state");
  t.ground_truth = j.at("ground_truth").get<std::string>();
  t.grammar = j.at("grammar").get<std::string>();
  return t;
}

void Registry::add(TaskSpec spec) { specs_.push_back(std::move(spec)); }

const TaskSpec* Registry::find(std::string_view name) const {
  for (const auto& s : specs_)
    if (s.name == name) return &s;
  return nullptr;
}

const TaskSpec& Registry::get(std::string_view name) const {
  const TaskSpec* s = find(name);
  if (!s) throw std::out_of_range("unknown task: " + std::string(name));
  return *s;
}

void register_sequence_tasks(Registry&);
void register_graph_tasks(Registry&);
void register_puzzle_tasks(Registry&);
void register_word_tasks(Registry&);
void register_game_tasks(Registry&);

const Registry& registry() {
  static const Registry reg = [] {
    Registry r;
    register_sequence_tasks(r);
    register_graph_tasks(r);
    register_puzzle_tasks(r);
    register_word_tasks(r);
    register_game_tasks(r);
    return r;
  }();
  return reg;
}

std::string default_instance_id(std::string_view task, int level, uint64_t seed) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(seed));
  return std::string(task) + "-" + std::to_string(level) + "-s" + buf;
}

std::string benchmark_instance_id(std::string_view task, int level, int index) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%03d", index);
  return std::string(task) + "-" + std::to_string(level) + "-" + buf;
}

TaskInstance generate_instance(std::string_view task, int level, uint64_t seed, int budget) {
  const TaskSpec& spec = registry().get(task);
  if (level < 1 || level > 5) throw std::invalid_argument("level out of [1,5]");
  for (int attempt = 0; attempt < budget; ++attempt) {
    Stream stream = seeded_stream(seed, "gen").fork(static_cast<uint64_t>(attempt));
    std::optional<GenResult> r;
    r = spec.generate(level, stream);
    if (!r) continue;
    TaskInstance inst;
    inst.id = default_instance_id(task, level, seed);
    inst.task = spec.name;
    inst.category = spec.category;
    inst.level = level;
    inst.seed = seed;
    inst.question = std::move(r->question);
    inst.initial_state = std::move(r->state);
    inst.ground_truth = std::move(r->ground_truth);
    inst.grammar = spec.grammar.id;
    if (!verify_answer(inst, inst.ground_truth).accepted) continue;
    return inst;
  }
  throw GenerationExhausted(std::string(task), level);
}

namespace {

bool scalar_matches(const Rat& got, const Rat& want) {
  if (got == want) return true;
  return std::fabs(got.to_double() - want.to_double()) <= 1e-9;
}

Verdict verify_exact(const TaskSpec& spec, const TaskInstance& inst, ParsedAnswer parsed) {
  if (spec.exact_adjust) spec.exact_adjust(inst, parsed);
  std::string got = normalize_answer(spec.grammar, parsed);

  auto truth = parse_answer(spec.grammar, inst.ground_truth);
  if (!truth.ok()) return Verdict::reject(FailReason::RuleViolation);
  std::string want = normalize_answer(spec.grammar, *truth.value);

  if (spec.grammar.kind == AnswerKind::Scalar) {
    if (scalar_matches(std::get<Rat>(parsed), std::get<Rat>(*truth.value)))
      return Verdict::accept(got);
    return Verdict::reject(FailReason::WrongValue, got);
  }
  if (got == want) return Verdict::accept(got);
  return Verdict::reject(FailReason::WrongValue, got);
}

}  // namespace

Verdict verify_answer(const TaskInstance& instance, std::string_view answer_text) {
  const TaskSpec* spec = registry().find(instance.task);
  if (!spec) return Verdict::reject(FailReason::RuleViolation);
  try {
    ParseResult parsed = parse_answer(spec->grammar, answer_text);
    if (!parsed.ok()) return Verdict::reject(FailReason::ParseError);
    if (spec->mode == VerifyMode::ExactMatch) {
      return verify_exact(*spec, instance, std::move(*parsed.value));
    }
    return spec->check(instance, *parsed.value);
  } catch (const std::exception&) {
    return Verdict::reject(FailReason::RuleViolation);
  }
}

}  // namespace forge
