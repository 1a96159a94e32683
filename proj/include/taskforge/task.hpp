#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "taskforge/grammar.hpp"
#include "taskforge/json.hpp"
#include "taskforge/rng.hpp"

namespace forge {

enum class Category { Algorithm, Graph, Puzzle, Game };

const char* category_name(Category c);

enum class VerifyMode { ExactMatch, Simulate, ConstraintCheck };

const char* verify_mode_name(VerifyMode m);

struct TaskInstance {
  std::string id;
  std::string task;
  Category category = Category::Algorithm;
  int level = 1;
  uint64_t seed = 0;
  std::string question;
  Json initial_state;
  std::string ground_truth;  // canonical answer text
  std::string grammar;

  Json to_json() const;
  static TaskInstance from_json(const Json& j);
};

enum class FailReason { ParseError, RuleViolation, WrongValue, Incomplete };

const char* fail_reason_name(FailReason r);

struct Verdict {
  bool accepted = false;
  std::optional<FailReason> reason;
  std::optional<std::string> normalized;

  static Verdict accept(std::string normalized_text);
  static Verdict reject(FailReason r);
  static Verdict reject(FailReason r, std::string normalized_text);
};

// SERG phase-3 trace material produced by each task.
enum class AnchorKind { StateReading, IntermediateState, KeyCalculation, DecisionPoint, FinalAnswer };

const char* anchor_kind_name(AnchorKind k);

struct Anchor {
  int position = 0;  // step index, assigned by the scaffold builder
  AnchorKind kind = AnchorKind::KeyCalculation;
  std::string payload;
};

struct TraceStep {
  std::string text;
  std::vector<Anchor> anchors;  // positions filled in later
};

struct GenResult {
  Json state;
  std::string question;
  std::string ground_truth;
};

struct TaskSpec {
  std::string name;
  Category category = Category::Algorithm;
  VerifyMode mode = VerifyMode::ExactMatch;
  Grammar grammar;
  std::array<std::string, 5> level_params;  // difficulty table, human-readable

  // Returns nullopt to reject the attempt (unsolvable / non-unique draw).
  std::function<std::optional<GenResult>(int level, Stream&)> generate;
  // Canonical answer text recomputed from a state (exact-match oracle input).
  std::function<std::string(const Json& state)> solve;
  // Simulate / constraint-check verification against the parsed answer.
  std::function<Verdict(const TaskInstance&, const ParsedAnswer&)> check;
  // Shape fixups applied before exact-match comparison (e.g. flat 81-int
  // sudoku rows reshaped to 9x9). Optional.
  std::function<void(const TaskInstance&, ParsedAnswer&)> exact_adjust;
  std::function<std::string(const TaskInstance&)> state_text;
  std::function<std::string(const TaskInstance&)> image_svg;
  std::function<std::vector<TraceStep>(const TaskInstance&)> trace;
};

class GenerationExhausted : public std::runtime_error {
 public:
  GenerationExhausted(std::string task, int level)
      : std::runtime_error("generation exhausted for " + task + " level " +
                           std::to_string(level)),
        task(std::move(task)),
        level(level) {}
  std::string task;
  int level;
};

class Registry {
 public:
  void add(TaskSpec spec);
  const TaskSpec& get(std::string_view name) const;
  const TaskSpec* find(std::string_view name) const;
  const std::vector<TaskSpec>& all() const { return specs_; }

 private:
  std::vector<TaskSpec> specs_;
};

// The fixed 42-task catalog, registration order = catalog order.
const Registry& registry();

constexpr int kGenerationBudget = 10000;

TaskInstance generate_instance(std::string_view task, int level, uint64_t seed,
                               int budget = kGenerationBudget);

// Total over arbitrary text; never throws.
Verdict verify_answer(const TaskInstance& instance, std::string_view answer_text);

std::string default_instance_id(std::string_view task, int level, uint64_t seed);
std::string benchmark_instance_id(std::string_view task, int level, int index);

}  // namespace forge
