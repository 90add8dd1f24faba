#include "prover/eval.hpp"

#include "prover/error.hpp"

namespace prover {

namespace {

SExpr boolean(bool b) { return b ? sym_t() : SExpr(); }

}  // namespace

std::optional<SExpr> apply_builtin(const std::string& fn, std::span<const SExpr> args) {
  if (fn == "CONS") return SExpr::cons(args[0], args[1]);
  if (fn == "CAR") return args[0].is_pair() ? args[0].car() : SExpr();
  if (fn == "CDR") return args[0].is_pair() ? args[0].cdr() : SExpr();
  if (fn == "CONSP") return boolean(args[0].is_pair());
  if (fn == "ATOM") return boolean(args[0].is_atom());
  if (fn == "EQUAL") return boolean(args[0] == args[1]);
  if (fn == "NOT") return boolean(args[0].is_nil());
  if (fn == "HIDE") return args[0];
  if (fn == "LEN") return SExpr::integer(Integer(args[0].length()));
  if (fn == "MEMBER-EQUAL") {
    for (const SExpr* p = &args[1]; p->is_pair(); p = &p->cdr())
      if (p->car() == args[0]) return *p;
    return SExpr();
  }
  if (fn == "BINARY-APPEND") {
    std::vector<SExpr> items;
    for (const SExpr* p = &args[0]; p->is_pair(); p = &p->cdr()) items.push_back(p->car());
    return SExpr::list(items, args[1]);
  }
  return std::nullopt;
}

void Evaluator::spend() {
  if (fuel_ == 0) throw ResourceError("evaluation fuel exhausted");
  --fuel_;
}

SExpr Evaluator::eval(const Term& t, const Environment& env) {
  switch (t.kind()) {
    case Term::Kind::Const: return t.value();
    case Term::Kind::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw EvalError("unbound variable " + t.name());
      return it->second;
    }
    case Term::Kind::Lambda: {
      spend();
      Environment inner;
      for (std::size_t i = 0; i < t.formals().size(); ++i)
        inner[t.formals()[i]] = eval(t.args()[i], env);
      // Open lambdas see the enclosing bindings.
      for (const auto& [k, v] : env) inner.emplace(k, v);
      return eval(t.body(), inner);
    }
    case Term::Kind::App: break;
  }
  spend();
  const std::string& fn = t.name();
  if (fn == "IF") {
    SExpr test = eval(t.arg(0), env);
    return eval(t.arg(test.is_nil() ? 2 : 1), env);
  }
  if (allowed_ && !allowed_(fn))
    throw EvalError("function " + fn + " is not allowed here");
  std::vector<SExpr> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(eval(a, env));
  if (extension_) {
    if (auto v = extension_(fn, args, *this)) return *v;
  }
  if (auto v = apply_builtin(fn, args)) return *v;
  if (const Definition* def = world_.definition(fn); def && allow_definitions_) {
    Environment inner;
    for (std::size_t i = 0; i < def->formals.size(); ++i) inner[def->formals[i]] = args[i];
    return eval(def->body, inner);
  }
  if (world_.is_stub(fn)) throw EvalError("stub function " + fn + " has no evaluation rule");
  throw EvalError("cannot evaluate " + fn);
}

SExpr ground_eval(const Term& t, const World& world, std::size_t fuel) {
  return Evaluator(world, fuel).eval(t, {});
}

}  // namespace prover
