#pragma once

#include "prover/hints.hpp"
#include "prover/sexpr.hpp"
#include "prover/term.hpp"
#include "prover/world.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prover {

enum class EventKind { Simplify, Split, Hint, Checkpoint, Proved };

const char* event_kind_name(EventKind k);

struct TraceEvent {
  std::string goal;
  EventKind kind;
  SExpr payload;
};

// "EVENT <subgoal-name> <KIND> <canonical-sexpr>"
std::string format_event(const TraceEvent& e);

struct Checkpoint {
  std::string goal;
  Clause clause;
  // Arguments of (MARK-CLAUSE ...) hypotheses, in clause order.
  std::vector<SExpr> labels;
};

struct ProofLimits {
  std::size_t max_steps = 10'000;
  std::size_t rewrite_fuel = 2'000'000;
};

struct ProofResult {
  bool proved = false;
  std::vector<Checkpoint> checkpoints;
  std::vector<TraceEvent> trace;
  std::vector<std::string> warnings;
  // Set when the proof was abandoned (hint error, resource limit).
  std::optional<std::string> error;
  std::size_t steps = 0;
};

// Child names: a goal with one successor gets a prime ("Goal'"); a split
// numbers its children "Subgoal k" under Goal and "Subgoal n.k" below.
std::string single_child_name(const std::string& name);
std::string split_child_name(const std::string& name, std::size_t k);

// Drives one conjecture: per goal, fire the first applicable pending hint on
// a fresh goal, else simplify; a changed goal continues in its children; a
// stable goal gets one more chance at the pending hints (now with
// STABLE-UNDER-SIMPLIFICATIONP true) and otherwise becomes a checkpoint.
ProofResult waterfall(const Clause& goal, std::vector<ComputedHint> hints, const World& world,
                      const ProofLimits& limits = {});

}  // namespace prover
