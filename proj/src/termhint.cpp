#include "prover/termhint.hpp"

#include "prover/error.hpp"
#include "prover/translate.hpp"

namespace prover {

namespace {

SExpr sym(std::string_view n) { return SExpr::symbol(n); }
SExpr kw(std::string_view n) { return SExpr::keyword(n); }
SExpr quoted(const SExpr& e) { return SExpr::list({sym("QUOTE"), e}); }

const Term* hyp_argument(const Term& lit) {
  if (lit.is_app("NOT") && lit.arg(0).is_app(kHypFn)) return &lit.arg(0).arg(0);
  return nullptr;
}

SExpr find_hint_gate() {
  return SExpr::list({sym("AND"), sym(kStableVar), SExpr::list({sym(kFindHintFn), sym(kClauseVar)})});
}

// The value handed to the second evaluation must itself be a term.
void check_reevaluable(const SExpr& v, const World& world) {
  try {
    make_computed_hint(v, world);
  } catch (const Error& e) {
    throw HintError("hint value " + print(v) + " is not a valid term for re-evaluation (" +
                    e.what() + ")");
  }
}

SExpr drop_only() { return SExpr::list({kw("CLAUSE-PROCESSOR"), sym(kDropProcessor)}); }

SExpr replace_and_drop(std::vector<SExpr> pending) {
  return SExpr::list({kw("COMPUTED-HINT-REPLACEMENT"), SExpr::list(pending),
                      kw("CLAUSE-PROCESSOR"), sym(kDropProcessor)});
}

}  // namespace

void install_prelude(World& world) {
  world.add_stub(kHypFn, 1);
  world.add_stub(kQuoteFn, 1);
  world.add_stub(kMarkFn, 1);
  world.add_stub(kSeqFn, 2);
  world.add_theorem(Theorem{kHypTheorem, Term::app(kHypFn, {Term::var("X")})});
  world.add_theorem(Theorem{kMarkTheorem, Term::app(kMarkFn, {Term::var("X")})});
  world.add_clause_processor(kDropProcessor, drop_termhint_hyp);
  world.add_native_hint_function(kFindHintFn, 1, [](std::span<const SExpr> args, const World& w) {
    if (!args[0].is_proper_list()) throw HintError("USE-TERMHINT-FIND-HINT expects a clause");
    Clause c;
    for (const SExpr& lit : args[0].to_vector()) c.push_back(translate(lit, w));
    return find_hint_value(c, w);
  });
}

World make_world() {
  World w;
  install_prelude(w);
  return w;
}

SExpr use_termhint_form(const SExpr& hint_form) {
  SExpr instance = SExpr::list({kw("INSTANCE"), sym(kHypTheorem), SExpr::list({sym("X"), hint_form})});
  return SExpr::list({kw("COMPUTED-HINT-REPLACEMENT"), SExpr::list({find_hint_gate()}), kw("USE"),
                      SExpr::list({instance})});
}

Hint use_termhint(const SExpr& hint_form, const World& world) {
  return parse_hint(use_termhint_form(hint_form), world);
}

ComputedHint use_termhint_computed_hint(const SExpr& hint_form, const World& world) {
  SExpr kwlist = use_termhint_form(hint_form);
  // Translation errors in the hint term surface now rather than mid-proof.
  parse_hint(kwlist, world);
  return ComputedHint{quote(kwlist), SExpr::list({sym("USE-TERMHINT"), hint_form})};
}

SExpr process_termhint(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Const: return t.value();
    case Term::Kind::Var:
      throw HintError("cannot interpret hint term: free variable " + t.name());
    case Term::Kind::Lambda:
      throw HintError("cannot interpret hint term: lambda in " + print_term(t));
    case Term::Kind::App: break;
  }
  const std::string& fn = t.name();
  if (fn == kQuoteFn) return unparse(t.arg(0));
  if (fn == "CONS") return SExpr::cons(process_termhint(t.arg(0)), process_termhint(t.arg(1)));
  if (fn == "BINARY-APPEND") {
    SExpr front = process_termhint(t.arg(0));
    if (!front.is_proper_list())
      throw HintError("cannot interpret hint term: BINARY-APPEND of a non-list " + print(front));
    return SExpr::list(front.to_vector(), process_termhint(t.arg(1)));
  }
  throw HintError("cannot interpret hint term: function " + fn + " in residual term " +
                  print_term(t));
}

SExpr keyword_fixup(const SExpr& v) {
  if (v.is_pair() && v.car().is_keyword() && v.is_proper_list()) return quoted(v);
  return v;
}

SExpr find_hint_value(const Clause& clause, const World& world) {
  const Term* arg = nullptr;
  for (const Term& lit : clause) {
    if ((arg = hyp_argument(lit))) break;
  }
  if (!arg) return SExpr();

  if (arg->is_app(kSeqFn)) {
    std::vector<SExpr> pending;
    SExpr first = keyword_fixup(process_termhint(arg->arg(0)));
    if (!first.is_nil()) {
      check_reevaluable(first, world);
      pending.push_back(first);
    }
    const Term& later = arg->arg(1);
    const Term& unhidden = later.is_app("HIDE") ? later.arg(0) : later;
    pending.push_back(quoted(use_termhint_form(unparse(unhidden))));
    return replace_and_drop(std::move(pending));
  }

  SExpr v = keyword_fixup(process_termhint(*arg));
  if (v.is_nil()) return drop_only();
  check_reevaluable(v, world);
  return replace_and_drop({v});
}

std::optional<Hint> find_hint(const Clause& clause, const World& world) {
  return hint_from_value(find_hint_value(clause, world), world);
}

Clause drop_termhint_hyp(const Clause& c) {
  Clause out;
  for (const Term& lit : c)
    if (!hyp_argument(lit)) out.push_back(lit);
  return out;
}

SExpr mark_clause_form(const SExpr& label) {
  SExpr instance = SExpr::list({kw("INSTANCE"), sym(kMarkTheorem), SExpr::list({sym("X"), quoted(label)})});
  return SExpr::list({kw("USE"), SExpr::list({instance})});
}

Hint mark_clause_hint(const SExpr& label, const World& world) {
  return parse_hint(mark_clause_form(label), world);
}

std::vector<SExpr> mark_clause_labels(const Clause& c) {
  std::vector<SExpr> out;
  for (const Term& lit : c) {
    if (!lit.is_app("NOT") || !lit.arg(0).is_app(kMarkFn)) continue;
    const Term& x = lit.arg(0).arg(0);
    out.push_back(x.is_const() ? x.value() : unparse(x));
  }
  return out;
}

}  // namespace prover
