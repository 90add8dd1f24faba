#pragma once

#include "prover/hints.hpp"
#include "prover/sexpr.hpp"
#include "prover/waterfall.hpp"
#include "prover/world.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace prover {

struct DefstubEvent {
  std::string name;
  std::size_t arity = 0;
};

struct DefunEvent {
  std::string name;
  std::vector<std::string> formals;
  SExpr body;
  bool normalize = true;
  // DEFUND
  bool disabled = false;
};

struct DefthmEvent {
  std::string name;
  SExpr body;
  std::vector<SExpr> hints;
  bool rewrite = true;
};

struct InTheoryEvent {
  SExpr theory;
};

struct RegisterHintFnEvent {
  std::string name;
  SExpr expr;
};

using Event = std::variant<DefstubEvent, DefunEvent, DefthmEvent, InTheoryEvent, RegisterHintFnEvent>;

// Throws ParseError on a form that is not a recognized event.
Event parse_event(const SExpr& form);
std::vector<Event> parse_events(std::string_view text);

// Hint-list entries of a DEFTHM: (USE-TERMHINT form), ("Goal" . kwlist), a
// bare keyword list (meaning "Goal"), the name of a registered hint function,
// or any computed-hint expression.
ComputedHint parse_hint_entry(const SExpr& entry, const World& world);

// Rewrite rule from a theorem's statement: IMPLIES hypotheses (AND-flattened)
// become rule hypotheses; an EQUAL or IFF conclusion gives lhs/rhs; (NOT p)
// rewrites p to NIL and any other p rewrites to T in a propositional context.
RewriteRule rule_from_theorem(const std::string& name, const SExpr& body, const World& world);

// Extends the world by one event. Returns the proof result for a DEFTHM.
// On error the world is left unchanged.
std::optional<ProofResult> apply_event(const Event& e, World& world, const ProofLimits& limits);

struct RunOptions {
  bool trace = false;
  bool checkpoints = false;
  bool stop_on_failure = false;
  ProofLimits limits;
};

struct TheoremReport {
  std::string name;
  bool proved = false;
  ProofResult result;
};

struct FileReport {
  std::string path;
  std::vector<TheoremReport> theorems;
};

struct RunReport {
  std::vector<FileReport> files;
  // Parse errors, event errors, proof diagnostics and warnings.
  std::vector<std::string> diagnostics;
  int exit_code = 0;

  std::size_t proved_count() const;
  std::size_t theorem_count() const;
};

// Runs one script against a fresh world (built-ins plus prelude) and appends
// its results to `into`. Returns false when --stop-on-failure says to stop.
bool run_text(std::string_view text, const std::string& path, const RunOptions& opts,
              RunReport& into);
RunReport run_files(const std::vector<std::string>& paths, const RunOptions& opts);

// Standard-output text. EVENT lines with --trace, CHECKPOINT headers and
// clauses with --checkpoints, one status line per theorem, and a final
// "PROVED n/m".
std::string report(const RunReport& r, const RunOptions& opts);

}  // namespace prover
