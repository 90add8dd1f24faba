#include "prover/hints.hpp"

#include "prover/error.hpp"
#include "prover/eval.hpp"
#include "prover/rewrite.hpp"
#include "prover/translate.hpp"

#include <algorithm>
#include <set>

namespace prover {

namespace {

constexpr std::size_t kHintEvalFuel = 100'000;

[[noreturn]] void fail(const std::string& msg, const SExpr& form) {
  throw HintError(msg + ": " + print(form));
}

std::vector<SExpr> as_list(const SExpr& value, const char* what) {
  if (!value.is_proper_list()) fail(std::string(what) + " expects a list", value);
  return value.to_vector();
}

std::vector<UseInstance> parse_use(const SExpr& value, const World& world) {
  std::vector<SExpr> items;
  if (value.is_symbol() || (value.is_pair() && value.car().is_keyword()))
    items.push_back(value);
  else
    items = as_list(value, ":USE");

  std::vector<UseInstance> out;
  for (const SExpr& item : items) {
    UseInstance inst;
    if (item.is_symbol()) {
      inst.theorem = item.name();
    } else {
      if (!item.is_pair() || !item.car().is_keyword() || item.car().name() != "INSTANCE" ||
          !item.is_proper_list() || item.length() < 2 || !item.cdr().car().is_symbol())
        fail("malformed :use item", item);
      std::vector<SExpr> parts = item.to_vector();
      inst.theorem = parts[1].name();
      for (std::size_t i = 2; i < parts.size(); ++i) {
        const SExpr& b = parts[i];
        if (!b.is_proper_list() || b.length() != 2 || !b.car().is_symbol())
          fail("malformed :instance binding", b);
        inst.bindings.insert_or_assign(b.car().name(),
                                       beta_reduce(translate(b.cdr().car(), world)));
      }
    }
    if (!world.theorem(inst.theorem)) fail("unknown theorem " + inst.theorem, item);
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<Term> parse_expand(const SExpr& value, const World& world) {
  std::vector<SExpr> items;
  if (value.is_pair() && value.car().is_symbol())
    items.push_back(value);
  else
    items = as_list(value, ":EXPAND");
  std::vector<Term> out;
  for (const SExpr& item : items) {
    Term t = beta_reduce(translate(item, world));
    if (!t.is_app()) fail(":expand target is not a function call", item);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::string> rune_names(const SExpr& names, const World& world) {
  std::vector<std::string> out;
  for (const SExpr& n : as_list(names, "theory expression")) {
    if (!n.is_symbol()) fail("expected a rule name", n);
    if (!world.is_rune(n.name())) fail("unknown rule or definition " + n.name(), n);
    out.push_back(n.name());
  }
  return out;
}

void parse_theory(const SExpr& value, const World& world, Hint& h) {
  if (!value.is_pair() || !value.car().is_symbol() || !value.is_proper_list())
    fail("malformed :in-theory", value);
  const std::string& op = value.car().name();
  if (op == "ENABLE") {
    h.enables = rune_names(value.cdr(), world);
  } else if (op == "DISABLE") {
    h.disables = rune_names(value.cdr(), world);
  } else if (op == "E/D") {
    std::vector<SExpr> parts = value.cdr().to_vector();
    if (parts.empty() || parts.size() > 2) fail("malformed E/D", value);
    h.enables = rune_names(parts[0], world);
    if (parts.size() == 2) h.disables = rune_names(parts[1], world);
  } else {
    fail("unsupported theory expression", value);
  }
  h.has_in_theory = true;
}

std::string parse_clause_processor(const SExpr& value, const World& world) {
  std::string name;
  if (value.is_symbol())
    name = value.name();
  else if (value.is_pair() && value.car().is_symbol())
    name = value.car().name();
  else
    fail("malformed :clause-processor", value);
  if (!world.clause_processor(name)) fail("unknown clause processor " + name, value);
  return name;
}

}  // namespace

ComputedHint make_computed_hint(const SExpr& form, const World& world) {
  Term expr = beta_reduce(translate(form, world, TranslateMode::Hint));
  for (const auto& v : free_vars(expr)) {
    if (v != kClauseVar && v != kIdVar && v != kStableVar)
      throw HintError("computed hint mentions variable " + v + ": " + print(form));
  }
  return ComputedHint{std::move(expr), form};
}

Hint parse_hint(const SExpr& kwlist, const World& world) {
  if (!kwlist.is_proper_list()) fail("hint is not a proper list", kwlist);
  std::vector<SExpr> items = kwlist.to_vector();
  if (items.size() % 2 != 0) fail("hint keyword list has odd length", kwlist);
  Hint h;
  h.source = kwlist;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < items.size(); i += 2) {
    const SExpr& key = items[i];
    const SExpr& value = items[i + 1];
    if (!key.is_keyword()) fail("expected a hint keyword", key);
    const std::string& k = key.name();
    if (!seen.insert(k).second) fail("duplicate hint keyword", key);
    if (k == "USE") {
      h.uses = parse_use(value, world);
    } else if (k == "EXPAND") {
      h.expands = parse_expand(value, world);
    } else if (k == "IN-THEORY") {
      parse_theory(value, world, h);
    } else if (k == "CLAUSE-PROCESSOR") {
      h.clause_processors.push_back(parse_clause_processor(value, world));
    } else if (k == "COMPUTED-HINT-REPLACEMENT") {
      std::vector<ComputedHint> repl;
      for (const SExpr& f : as_list(value, ":COMPUTED-HINT-REPLACEMENT"))
        repl.push_back(make_computed_hint(f, world));
      h.replacement = std::move(repl);
    } else {
      fail("unknown hint keyword", key);
    }
  }
  return h;
}

SExpr eval_hint_expr(const Term& expr, const HintContext& ctx, const World& world) {
  Evaluator ev(world, kHintEvalFuel);
  ev.set_allow_definitions(false);
  ev.set_allowed([&world](const std::string& fn) {
    static const std::set<std::string> builtins = {"CONS", "MEMBER-EQUAL", "EQUAL", "NOT"};
    return builtins.count(fn) || world.hint_function(fn) || world.native_hint_function(fn);
  });
  ev.set_extension([&world](const std::string& fn, std::span<const SExpr> args,
                            Evaluator& self) -> std::optional<SExpr> {
    if (const HintFunction* hf = world.hint_function(fn)) {
      Environment env;
      for (std::size_t i = 0; i < hf->formals.size(); ++i) env[hf->formals[i]] = args[i];
      return self.eval(hf->body, env);
    }
    if (const NativeHintFn* nf = world.native_hint_function(fn)) return (*nf)(args, world);
    return std::nullopt;
  });
  Environment env{{kClauseVar, ctx.clause},
                  {kIdVar, SExpr::string(ctx.id)},
                  {kStableVar, ctx.stable ? sym_t() : SExpr()}};
  return ev.eval(expr, env);
}

std::optional<Hint> hint_from_value(const SExpr& value, const World& world) {
  if (value.is_nil()) return std::nullopt;
  if (value.is_pair() && value.car().is_keyword()) return parse_hint(value, world);
  if (value.is_form("QUOTE") && value.length() == 2) return hint_from_value(value.cdr().car(), world);
  fail("computed hint produced a value that is not a hint", value);
}

std::optional<Hint> eval_computed_hint(const ComputedHint& ch, const HintContext& ctx,
                                       const World& world) {
  return hint_from_value(eval_hint_expr(ch.expr, ctx, world), world);
}

Goal apply_hint(const Hint& h, const Goal& goal, const World& world,
                std::optional<std::size_t> fired, std::vector<std::string>* warnings) {
  Goal child;
  child.clause = goal.clause;
  child.theory = goal.theory;

  for (const std::string& cp : h.clause_processors) child.clause = (*world.clause_processor(cp))(child.clause);

  for (const UseInstance& inst : h.uses) {
    const Theorem* thm = world.theorem(inst.theorem);
    std::vector<std::string> vars = free_vars(thm->body);
    Substitution s;
    for (const auto& [var, term] : inst.bindings) {
      if (std::find(vars.begin(), vars.end(), var) == vars.end()) {
        if (warnings)
          warnings->push_back("binding of " + var + " ignored: not free in " + inst.theorem);
        continue;
      }
      s.insert_or_assign(var, term);
    }
    for (const auto& v : vars) {
      if (!s.count(v) && warnings && !inst.bindings.empty())
        warnings->push_back("variable " + v + " of " + inst.theorem + " left uninstantiated");
    }
    child.clause.push_back(beta_reduce(make_not(substitute(thm->body, s))));
  }

  if (!h.expands.empty()) child.clause = expand_calls(child.clause, h.expands, world);

  if (h.has_in_theory) child.theory = child.theory.with(h.enables, h.disables);

  child.pending = goal.pending;
  std::size_t at = 0;
  if (fired) {
    at = *fired;
    child.pending.erase(child.pending.begin() + static_cast<std::ptrdiff_t>(at));
  }
  if (h.replacement)
    child.pending.insert(child.pending.begin() + static_cast<std::ptrdiff_t>(at),
                         h.replacement->begin(), h.replacement->end());
  return child;
}

}  // namespace prover
