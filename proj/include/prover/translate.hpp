#pragma once

#include "prover/sexpr.hpp"
#include "prover/term.hpp"
#include "prover/world.hpp"

namespace prover {

// Body of a depth-1 (QUASIQUOTE body) rewritten into CONS / BINARY-APPEND /
// QUOTE forms with unquoted sub-forms left verbatim. Throws TranslateError on
// nested quasiquote or on splicing in a dotted-tail position.
SExpr expand_quasiquote(const SExpr& body);

// (TERMHINT-SEQ h1 h2) => (TERMHINT-SEQ h1 (HIDE h2)); an h2 that is already
// a HIDE form is left alone, so re-translating a printed term is stable.
SExpr termhint_seq_macro(const SExpr& h1, const SExpr& h2);

enum class TranslateMode {
  // Terms of the logic: registered hint functions are not callable.
  Logic,
  // Computed-hint expressions: hint functions are callable as well.
  Hint,
};

// Expands the built-in macros (LET, LET*, B*, AND, OR, COND, QUASIQUOTE, plus
// LIST, APPEND, MEMBER, IMPLIES, IFF, TERMHINT-SEQ) and checks every call
// against the arities recorded in `world`. Lambdas come out closed.
Term translate(const SExpr& form, const World& world, TranslateMode mode = TranslateMode::Logic);

}  // namespace prover
