#include "prover/waterfall.hpp"

#include "prover/error.hpp"
#include "prover/rewrite.hpp"
#include "prover/termhint.hpp"

namespace prover {

const char* event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::Simplify: return "SIMPLIFY";
    case EventKind::Split: return "SPLIT";
    case EventKind::Hint: return "HINT";
    case EventKind::Checkpoint: return "CHECKPOINT";
    case EventKind::Proved: return "PROVED";
  }
  return "?";
}

std::string format_event(const TraceEvent& e) {
  return "EVENT " + e.goal + " " + event_kind_name(e.kind) + " " + print(e.payload);
}

std::string single_child_name(const std::string& name) { return name + "'"; }

std::string split_child_name(const std::string& name, std::size_t k) {
  std::string base = name;
  while (!base.empty() && base.back() == '\'') base.pop_back();
  if (base == "Goal") return "Subgoal " + std::to_string(k);
  return base + "." + std::to_string(k);
}

namespace {

class Waterfall {
 public:
  Waterfall(const World& world, const ProofLimits& limits)
      : world_(world), limits_(limits), fuel_(limits.rewrite_fuel) {}

  ProofResult run(const Clause& clause, std::vector<ComputedHint> hints) {
    std::vector<Goal> stack;
    stack.push_back(Goal{"Goal", clause, world_.theory(), std::move(hints)});
    try {
      while (!stack.empty()) {
        Goal goal = std::move(stack.back());
        stack.pop_back();
        if (++result_.steps > limits_.max_steps)
          throw ResourceError("step limit of " + std::to_string(limits_.max_steps) + " exceeded");
        current_ = goal.name;
        step(goal, stack);
      }
      result_.proved = result_.checkpoints.empty();
    } catch (const Error& e) {
      result_.proved = false;
      result_.error = current_ + ": " + e.what();
    }
    return std::move(result_);
  }

 private:
  void emit(const std::string& goal, EventKind kind, SExpr payload) {
    result_.trace.push_back(TraceEvent{goal, kind, std::move(payload)});
  }

  // Fires the first pending hint that yields one; returns false if none did.
  bool try_hints(const Goal& goal, bool stable, std::vector<Goal>& stack) {
    HintContext ctx{unparse_clause(goal.clause), goal.name, stable};
    for (std::size_t i = 0; i < goal.pending.size(); ++i) {
      std::optional<Hint> h = eval_computed_hint(goal.pending[i], ctx, world_);
      if (!h) continue;
      emit(goal.name, EventKind::Hint, h->source);
      Goal child = apply_hint(*h, goal, world_, i, &result_.warnings);
      child.name = single_child_name(goal.name);
      stack.push_back(std::move(child));
      return true;
    }
    return false;
  }

  void step(const Goal& goal, std::vector<Goal>& stack) {
    if (try_hints(goal, false, stack)) return;

    SimplifyResult r = simplify_clause(goal.clause, goal.theory, world_, fuel_);
    if (r.changed) {
      if (r.rewritten != goal.clause) emit(goal.name, EventKind::Simplify, unparse_clause(r.rewritten));
      if (r.split_test) emit(goal.name, EventKind::Split, unparse(*r.split_test));
      if (r.clauses.empty()) {
        emit(goal.name, EventKind::Proved, unparse_clause(r.rewritten));
        return;
      }
      std::vector<Goal> children;
      for (std::size_t k = 0; k < r.clauses.size(); ++k) {
        Goal child{"", r.clauses[k], goal.theory, goal.pending};
        if (r.split_test) {
          // Number by position in the split even when a sibling was proved.
          std::size_t index = (r.clauses.size() == 2) ? k + 1 : split_position(r, k);
          child.name = split_child_name(goal.name, index);
        } else {
          child.name = single_child_name(goal.name);
        }
        children.push_back(std::move(child));
      }
      for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
      return;
    }

    if (try_hints(goal, true, stack)) return;
    emit(goal.name, EventKind::Checkpoint, unparse_clause(goal.clause));
    result_.checkpoints.push_back(Checkpoint{goal.name, goal.clause, mark_clause_labels(goal.clause)});
  }

  static std::size_t split_position(const SimplifyResult& r, std::size_t k) {
    std::vector<Clause> parts = split_ifs(r.rewritten);
    std::size_t seen = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (clause_proved(parts[i])) continue;
      if (seen++ == k) return i + 1;
    }
    return k + 1;
  }

  const World& world_;
  ProofLimits limits_;
  Fuel fuel_;
  ProofResult result_;
  std::string current_;
};

}  // namespace

ProofResult waterfall(const Clause& goal, std::vector<ComputedHint> hints, const World& world,
                      const ProofLimits& limits) {
  return Waterfall(world, limits).run(goal, std::move(hints));
}

}  // namespace prover
