#include "prover/rewrite.hpp"

#include "prover/error.hpp"
#include "prover/eval.hpp"

#include <algorithm>

namespace prover {

void Assumptions::assume(const Term& t, bool value) {
  if (t.is_const()) return;
  facts_.emplace_back(t, value);
  if (t.is_app("NOT")) assume(t.arg(0), !value);
}

std::optional<bool> Assumptions::lookup(const Term& t) const {
  for (auto it = facts_.rbegin(); it != facts_.rend(); ++it)
    if (it->first == t) return it->second;
  return std::nullopt;
}

void Fuel::spend() {
  if (units_ == 0) throw ResourceError("rewrite fuel exhausted");
  --units_;
}

namespace {

bool is_true_const(const Term& t) { return t.is_const() && !t.value().is_nil(); }

bool boolean_valued(const Term& t) {
  if (t.is_const()) return t.value().is_nil() || t.value().is_symbol("T");
  if (!t.is_app()) return false;
  const std::string& fn = t.name();
  if (fn == "EQUAL" || fn == "CONSP" || fn == "ATOM" || fn == "NOT") return true;
  if (fn == "IF") return boolean_valued(t.arg(1)) && boolean_valued(t.arg(2));
  return false;
}

Term negate(const Term& t) { return t.is_app("NOT") ? t.arg(0) : make_not(t); }

class Rewriter {
 public:
  Rewriter(const Theory& theory, const World& world, Fuel& fuel)
      : theory_(theory), world_(world), fuel_(fuel) {}

  Term rw(const Term& t, const Assumptions& a, bool iff) {
    fuel_.spend();
    switch (t.kind()) {
      case Term::Kind::Const: return t;
      case Term::Kind::Var: return known(t, a, iff).value_or(t);
      case Term::Kind::Lambda: return rw(beta_reduce(t), a, iff);
      case Term::Kind::App: break;
    }
    const std::string& fn = t.name();
    if (fn == "HIDE") return t;
    if (fn == "IF") return rw_if(t, a, iff);
    std::vector<Term> args;
    args.reserve(t.args().size());
    bool arg_iff = fn == "NOT";
    for (const Term& x : t.args()) args.push_back(rw(x, a, arg_iff));
    return rw_app(fn, std::move(args), a, iff);
  }

 private:
  // What the assumptions say about t, if anything usable in this context.
  std::optional<Term> known(const Term& t, const Assumptions& a, bool iff) {
    auto v = a.lookup(t);
    if (!v) return std::nullopt;
    if (!*v) return nil_term();
    if (iff || boolean_valued(t)) return t_term();
    return std::nullopt;
  }

  Term rw_if(const Term& t, const Assumptions& a, bool iff) {
    Term test = rw(t.arg(0), a, true);
    if (test.is_const()) return rw(t.arg(test.is_nil() ? 2 : 1), a, iff);
    if (auto v = a.lookup(test)) return rw(t.arg(*v ? 1 : 2), a, iff);
    Assumptions then_a = a;
    then_a.assume(test, true);
    Assumptions else_a = a;
    else_a.assume(test, false);
    Term b = rw(t.arg(1), then_a, iff);
    Term c = rw(t.arg(2), else_a, iff);
    if (b == c) return b;
    if (b == t_term() && c.is_nil() && (iff || boolean_valued(test))) return test;
    if (b.is_nil() && c == t_term() && (iff || boolean_valued(test))) return negate(test);
    return make_if(test, b, c);
  }

  Term rw_app(const std::string& fn, std::vector<Term> args, const Assumptions& a, bool iff) {
    if (world_.is_builtin(fn) &&
        std::all_of(args.begin(), args.end(), [](const Term& x) { return x.is_const(); })) {
      std::vector<SExpr> vals;
      for (const Term& x : args) vals.push_back(x.value());
      if (auto v = apply_builtin(fn, vals)) return quote(*v);
    }
    if (fn == "EQUAL" && args[0] == args[1]) return t_term();
    if (fn == "NOT" && args[0].is_app("NOT") && (iff || boolean_valued(args[0].arg(0))))
      return args[0].arg(0);
    if ((fn == "CAR" || fn == "CDR" || fn == "CONSP" || fn == "ATOM") && args[0].is_app("CONS")) {
      if (fn == "CAR") return args[0].arg(0);
      if (fn == "CDR") return args[0].arg(1);
      return fn == "CONSP" ? t_term() : nil_term();
    }
    Term t = Term::app(fn, std::move(args));
    if (auto k = known(t, a, iff)) return *k;

    for (const RewriteRule& rule : world_.rules()) {
      if (!theory_.enabled(rule.name)) continue;
      if (rule.equiv == Equivalence::Iff && !iff) continue;
      Substitution s;
      if (!match(rule.lhs, t, s)) continue;
      if (!relieve(rule.hyps, s, a)) continue;
      return rw(substitute(rule.rhs, s), a, iff);
    }

    if (const Definition* def = world_.definition(fn);
        def && !def->recursive && theory_.enabled(fn)) {
      Substitution s;
      for (std::size_t i = 0; i < def->formals.size(); ++i) s.insert_or_assign(def->formals[i], t.arg(i));
      return rw(beta_reduce(substitute(def->body, s)), a, iff);
    }
    return t;
  }

  bool relieve(const std::vector<Term>& hyps, const Substitution& s, const Assumptions& a) {
    for (const Term& h : hyps)
      if (!is_true_const(rw(substitute(h, s), a, true))) return false;
    return true;
  }

  const Theory& theory_;
  const World& world_;
  Fuel& fuel_;
};

// Leftmost-innermost IF with a non-constant test, not under HIDE.
std::optional<Term> innermost_if(const Term& t) {
  if (!t.is_app() || t.is_app("HIDE")) {
    if (t.is_lambda())
      for (const Term& x : t.args())
        if (auto r = innermost_if(x)) return r;
    return std::nullopt;
  }
  for (const Term& x : t.args())
    if (auto r = innermost_if(x)) return r;
  if (t.is_app("IF") && !t.arg(0).is_const()) return t;
  return std::nullopt;
}

Term replace_outside_hide(const Term& t, const Term& from, const Term& to) {
  if (t == from) return to;
  if (!t.is_app() || t.is_app("HIDE")) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool changed = false;
  for (const Term& x : t.args()) {
    args.push_back(replace_outside_hide(x, from, to));
    changed = changed || !(args.back() == x);
  }
  return changed ? Term::app(t.name(), std::move(args)) : t;
}

}  // namespace

Term rewrite_term(const Term& t, const Theory& theory, const Assumptions& assumptions,
                  const World& world, Fuel& fuel, bool iff) {
  return Rewriter(theory, world, fuel).rw(t, assumptions, iff);
}

bool clause_proved(const Clause& c) {
  for (const Term& lit : c) {
    if (is_true_const(lit)) return true;
    if (lit.is_app("NOT") && std::find(c.begin(), c.end(), lit.arg(0)) != c.end()) return true;
  }
  return false;
}

std::optional<Term> find_split_if(const Clause& c) {
  for (const Term& lit : c)
    if (auto r = innermost_if(lit)) return r;
  return std::nullopt;
}

std::vector<Clause> split_ifs(const Clause& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto found = innermost_if(c[i]);
    if (!found) continue;
    const Term& test = found->arg(0);
    Clause then_c(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i));
    Clause else_c = then_c;
    then_c.push_back(negate(test));
    then_c.push_back(replace_outside_hide(c[i], *found, found->arg(1)));
    else_c.push_back(test);
    else_c.push_back(replace_outside_hide(c[i], *found, found->arg(2)));
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      then_c.push_back(c[j]);
      else_c.push_back(c[j]);
    }
    return {then_c, else_c};
  }
  return {c};
}

SimplifyResult simplify_clause(const Clause& c, const Theory& theory, const World& world,
                               Fuel& fuel) {
  Rewriter rewriter(theory, world, fuel);
  Clause out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    // Every other literal may be assumed false; earlier ones in their
    // rewritten form.
    Assumptions a;
    for (const Term& l : out) a.assume(l, false);
    for (std::size_t j = i + 1; j < c.size(); ++j) a.assume(c[j], false);
    out.push_back(rewriter.rw(c[i], a, true));
  }

  Clause lits;
  for (const Term& l : out) {
    if (l.is_nil()) continue;
    if (std::find(lits.begin(), lits.end(), l) != lits.end()) continue;
    lits.push_back(l);
  }

  SimplifyResult result;
  result.rewritten = lits;
  result.changed = lits != c;
  if (clause_proved(lits)) {
    result.changed = true;
    return result;
  }
  std::vector<Clause> parts = split_ifs(lits);
  if (parts.size() > 1) {
    result.changed = true;
    result.split_test = find_split_if(lits)->arg(0);
  }
  for (auto& p : parts)
    if (!clause_proved(p)) result.clauses.push_back(std::move(p));
  return result;
}

// ---------------------------------------------------------------------------

namespace {

class Expander {
 public:
  Expander(std::span<const Term> targets, const World& world) : targets_(targets), world_(world) {
    for (const Term& target : targets_) {
      if (!target.is_app()) throw HintError(":expand target is not a function call: " + print_term(target));
      if (target.is_app("HIDE")) continue;
      if (!world_.definition(target.name()))
        throw HintError(":expand target " + target.name() + " has no definition");
    }
  }

  Term expand(const Term& t) {
    if (!t.is_app()) return t;
    for (const Term& target : targets_) {
      Substitution s;
      if (!match(target, t, s)) continue;
      if (target.is_app("HIDE")) return t.arg(0);
      const Definition* def = world_.definition(t.name());
      Substitution actuals;
      for (std::size_t i = 0; i < def->formals.size(); ++i)
        actuals.insert_or_assign(def->formals[i], t.arg(i));
      return beta_reduce(substitute(def->body, actuals));
    }
    if (t.is_app("HIDE")) return t;
    std::vector<Term> args;
    for (const Term& x : t.args()) args.push_back(expand(x));
    return Term::app(t.name(), std::move(args));
  }

 private:
  std::span<const Term> targets_;
  const World& world_;
};

Term lift_app(const std::string& fn, const std::vector<Term>& args) {
  if (fn != "IF") {
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (!args[i].is_app("IF")) continue;
      std::vector<Term> then_args = args;
      std::vector<Term> else_args = args;
      then_args[i] = args[i].arg(1);
      else_args[i] = args[i].arg(2);
      return make_if(args[i].arg(0), lift_app(fn, then_args), lift_app(fn, else_args));
    }
  }
  return Term::app(fn, args);
}

}  // namespace

Clause expand_calls(const Clause& c, std::span<const Term> targets, const World& world) {
  Expander ex(targets, world);
  Clause out;
  out.reserve(c.size());
  for (const Term& lit : c) out.push_back(ex.expand(lit));
  return out;
}

Term normalize_ifs(const Term& t) {
  if (t.is_lambda()) return normalize_ifs(beta_reduce(t));
  if (!t.is_app()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& x : t.args()) args.push_back(normalize_ifs(x));
  return lift_app(t.name(), args);
}

Definition normalize_definition(Definition d) {
  if (!d.normalized) return d;
  d.body = normalize_ifs(beta_reduce(d.body));
  return d;
}

}  // namespace prover
