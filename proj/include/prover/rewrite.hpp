#pragma once

#include "prover/term.hpp"
#include "prover/world.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace prover {

// Facts known while rewriting, matched syntactically. Assuming (NOT x) also
// records x with the opposite value.
class Assumptions {
 public:
  void assume(const Term& t, bool value);
  std::optional<bool> lookup(const Term& t) const;
  bool empty() const { return facts_.empty(); }

 private:
  std::vector<std::pair<Term, bool>> facts_;
};

// Rewrite fuel: one unit per visited subterm.
class Fuel {
 public:
  explicit Fuel(std::size_t units) : units_(units) {}
  void spend();
  std::size_t remaining() const { return units_; }

 private:
  std::size_t units_;
};

// Inside-out rewriting of a beta-reduced term. `iff` marks a propositional
// context (clause literal or IF test), where only truthiness matters.
// Throws ResourceError when fuel runs out.
Term rewrite_term(const Term& t, const Theory& theory, const Assumptions& assumptions,
                  const World& world, Fuel& fuel, bool iff = false);

// True if some literal is a non-NIL constant or some literal occurs together
// with its negation.
bool clause_proved(const Clause& c);

// The leftmost-innermost IF, outside HIDE, whose test is not a constant.
std::optional<Term> find_split_if(const Clause& c);

// Case split on the first IF found; returns {c} when there is none.
std::vector<Clause> split_ifs(const Clause& c);

struct SimplifyResult {
  // Unproved clauses left after this pass.
  std::vector<Clause> clauses;
  bool changed = false;
  // The clause after literal rewriting, before any split.
  Clause rewritten;
  // Test of the IF that was split on, if any.
  std::optional<Term> split_test;
};

SimplifyResult simplify_clause(const Clause& c, const Theory& theory, const World& world,
                               Fuel& fuel);

// Replaces every occurrence matching a target by the instantiated definition
// body, whatever the theory says. Targets of the form (HIDE x) strip HIDE.
Clause expand_calls(const Clause& c, std::span<const Term> targets, const World& world);

// Lifts IF tests out of argument positions of every non-IF call (HIDE
// included) when the definition asks for normalization.
Definition normalize_definition(Definition d);
Term normalize_ifs(const Term& t);

}  // namespace prover
