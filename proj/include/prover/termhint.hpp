#pragma once

#include "prover/hints.hpp"
#include "prover/sexpr.hpp"
#include "prover/term.hpp"
#include "prover/world.hpp"

#include <optional>
#include <vector>

namespace prover {

// Term hints: a hint term rides along in the goal as an always-true
// hypothesis (USE-TERMHINT-HYP term), gets simplified with everything else,
// and once the goal is stable it is read back as a hint.

inline constexpr const char* kHypFn = "USE-TERMHINT-HYP";
inline constexpr const char* kHypTheorem = "USE-TERMHINT-HYP-IS-TRUE";
inline constexpr const char* kQuoteFn = "HQ";
inline constexpr const char* kMarkFn = "MARK-CLAUSE";
inline constexpr const char* kMarkTheorem = "MARK-CLAUSE-IS-TRUE";
inline constexpr const char* kSeqFn = "TERMHINT-SEQ";
inline constexpr const char* kDropProcessor = "DROP-TERMHINT-HYP";
inline constexpr const char* kFindHintFn = "USE-TERMHINT-FIND-HINT";

// Stubs, always-true theorems, the hyp-dropping clause processor, and the
// find-hint function. No rewrite rule mentions any of the stubs.
void install_prelude(World& world);
// Built-ins plus the prelude.
World make_world();

// The keyword list that (use-termhint form) stands for:
//   (:COMPUTED-HINT-REPLACEMENT
//      ((AND STABLE-UNDER-SIMPLIFICATIONP (USE-TERMHINT-FIND-HINT CLAUSE)))
//    :USE ((:INSTANCE USE-TERMHINT-HYP-IS-TRUE (X form))))
SExpr use_termhint_form(const SExpr& hint_form);
Hint use_termhint(const SExpr& hint_form, const World& world);
// An unconditional computed hint that yields use_termhint_form(hint_form).
ComputedHint use_termhint_computed_hint(const SExpr& hint_form, const World& world);

// Reads a simplified hint term back as data. Understands quoted constants,
// CONS, BINARY-APPEND, and HQ (whose argument passes through as surface
// syntax). Throws HintError naming the residual term otherwise.
SExpr process_termhint(const Term& t);

// A proper list headed by a keyword gets quoted, so that evaluating it once
// more yields the list itself.
SExpr keyword_fixup(const SExpr& v);

// Hint keyword list for a stable clause, or NIL when the clause carries no
// USE-TERMHINT-HYP hypothesis. The extracted hint is handed on as a computed
// hint for the child goal, after the hypothesis is dropped.
SExpr find_hint_value(const Clause& clause, const World& world);
std::optional<Hint> find_hint(const Clause& clause, const World& world);

// Removes every (NOT (USE-TERMHINT-HYP _)) literal.
Clause drop_termhint_hyp(const Clause& c);

// :use of MARK-CLAUSE-IS-TRUE with X bound to 'label.
SExpr mark_clause_form(const SExpr& label);
Hint mark_clause_hint(const SExpr& label, const World& world);
// Labels of the (MARK-CLAUSE x) hypotheses in a clause.
std::vector<SExpr> mark_clause_labels(const Clause& c);

}  // namespace prover
