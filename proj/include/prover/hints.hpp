#pragma once

#include "prover/sexpr.hpp"
#include "prover/term.hpp"
#include "prover/world.hpp"

#include <optional>
#include <string>
#include <vector>

namespace prover {

// Reserved variables of computed-hint expressions.
inline constexpr const char* kClauseVar = "CLAUSE";
inline constexpr const char* kIdVar = "ID";
inline constexpr const char* kStableVar = "STABLE-UNDER-SIMPLIFICATIONP";

// An expression over CLAUSE, ID and STABLE-UNDER-SIMPLIFICATIONP that yields
// NIL (no hint) or a hint keyword list. Removed from the pending list once it
// fires.
struct ComputedHint {
  Term expr;
  SExpr source;
};

struct UseInstance {
  std::string theorem;
  Substitution bindings;
};

// One keyword/value list. All of its keys act on the same goal transition.
struct Hint {
  std::vector<std::string> clause_processors;
  std::vector<UseInstance> uses;
  std::vector<Term> expands;
  bool has_in_theory = false;
  std::vector<std::string> enables;
  std::vector<std::string> disables;
  // Computed hints that take the place of the hint that fired.
  std::optional<std::vector<ComputedHint>> replacement;
  SExpr source;
};

// Translates a computed-hint form; hint functions are callable in it.
ComputedHint make_computed_hint(const SExpr& form, const World& world);

// Throws HintError on an unknown or repeated keyword, an odd-length list, an
// unknown theorem / rule / clause processor, or a malformed :instance.
Hint parse_hint(const SExpr& kwlist, const World& world);

struct HintContext {
  SExpr clause;
  std::string id;
  bool stable = false;
};

// Restricted evaluation: IF, QUOTE, CONS, MEMBER-EQUAL, EQUAL, NOT and the
// registered hint functions.
SExpr eval_hint_expr(const Term& expr, const HintContext& ctx, const World& world);

// NIL => none; a keyword list => its parsed hint; anything else is an error.
std::optional<Hint> hint_from_value(const SExpr& value, const World& world);

std::optional<Hint> eval_computed_hint(const ComputedHint& ch, const HintContext& ctx,
                                       const World& world);

struct Goal {
  std::string name;
  Clause clause;
  Theory theory;
  std::vector<ComputedHint> pending;
};

// Applies clause processors, then :use, then :expand, then :in-theory, and
// builds the single child goal. `fired` is the index in goal.pending of the
// computed hint that produced `h`; it is removed, and a replacement list (if
// any) is spliced in at its position. Non-fatal notes go to `warnings`.
Goal apply_hint(const Hint& h, const Goal& goal, const World& world,
                std::optional<std::size_t> fired, std::vector<std::string>* warnings = nullptr);

}  // namespace prover
