#include "prover/translate.hpp"

#include "prover/error.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace prover {

namespace {

SExpr sym(std::string_view name) { return SExpr::symbol(name); }

SExpr quoted(const SExpr& e) { return SExpr::list({sym("QUOTE"), e}); }

[[noreturn]] void fail(const std::string& msg, const SExpr& form) {
  throw TranslateError(msg + ": " + print(form, {.sugar = true}));
}

bool is_marker(const SExpr& e, std::string_view head) {
  return e.is_form(head) && e.cdr().is_pair() && e.cdr().cdr().is_nil();
}

bool has_quasiquote_marker(const SExpr& e) {
  if (!e.is_pair() || e.is_form("QUOTE")) return false;
  if (e.is_form("QUASIQUOTE") || e.is_form("UNQUOTE") || e.is_form("UNQUOTE-SPLICING")) return true;
  for (SExpr p = e; p.is_pair(); p = p.cdr())
    if (has_quasiquote_marker(p.car())) return true;
  return false;
}

SExpr qq(const SExpr& form) {
  if (form.is_atom()) return quoted(form);
  if (form.is_form("QUASIQUOTE")) fail("nested quasiquote is not supported", form);
  if (form.is_form("UNQUOTE")) {
    if (!is_marker(form, "UNQUOTE")) fail("malformed unquote", form);
    return form.cdr().car();
  }
  if (form.is_form("UNQUOTE-SPLICING")) fail("unquote-splicing in a non-list position", form);
  const SExpr& head = form.car();
  if (head.is_form("UNQUOTE-SPLICING")) {
    if (!is_marker(head, "UNQUOTE-SPLICING")) fail("malformed unquote-splicing", head);
    return SExpr::list({sym("BINARY-APPEND"), head.cdr().car(), qq(form.cdr())});
  }
  return SExpr::list({sym("CONS"), qq(head), qq(form.cdr())});
}

class Translator {
 public:
  Translator(const World& world, TranslateMode mode) : world_(world), mode_(mode) {}

  Term tr(const SExpr& form) {
    switch (form.kind()) {
      case SExpr::Kind::Nil: return nil_term();
      case SExpr::Kind::Keyword:
      case SExpr::Kind::Integer:
      case SExpr::Kind::String: return quote(form);
      case SExpr::Kind::Symbol:
        if (form.is_symbol("T")) return t_term();
        return Term::var(form.name());
      case SExpr::Kind::Pair: break;
    }
    if (!form.is_proper_list()) fail("improper list in term position", form);
    const SExpr& head = form.car();
    std::vector<SExpr> args = form.cdr().to_vector();

    if (head.is_form("LAMBDA")) return lambda_app(head, args, form);
    if (!head.is_symbol()) fail("not a function symbol", form);
    const std::string& fn = head.name();

    if (fn == "QUOTE") {
      if (args.size() != 1) fail("QUOTE takes one argument", form);
      return quote(args[0]);
    }
    if (fn == "QUASIQUOTE") {
      if (args.size() != 1) fail("QUASIQUOTE takes one argument", form);
      return tr(expand_quasiquote(args[0]));
    }
    if (fn == "UNQUOTE" || fn == "UNQUOTE-SPLICING") fail("unquote outside quasiquote", form);
    if (fn == "LET") return let(args, form);
    if (fn == "LET*") return let_star(args, form);
    if (fn == "B*") return tr(b_star(args, form));
    if (fn == "AND") return and_(args);
    if (fn == "OR") return or_(args);
    if (fn == "COND") return cond(args, form);
    if (fn == "LIST") {
      Term out = nil_term();
      for (auto it = args.rbegin(); it != args.rend(); ++it) out = Term::app("CONS", {tr(*it), out});
      return out;
    }
    if (fn == "APPEND") {
      if (args.empty()) return nil_term();
      Term out = tr(args.back());
      for (auto it = args.rbegin() + 1; it != args.rend(); ++it)
        out = Term::app("BINARY-APPEND", {tr(*it), out});
      return out;
    }
    if (fn == "MEMBER") {
      if (args.size() != 2) fail("MEMBER takes two arguments", form);
      return Term::app("MEMBER-EQUAL", {tr(args[0]), tr(args[1])});
    }
    if (fn == "IMPLIES") {
      if (args.size() != 2) fail("IMPLIES takes two arguments", form);
      return make_if(tr(args[0]), make_if(tr(args[1]), t_term(), nil_term()), t_term());
    }
    if (fn == "IFF") {
      if (args.size() != 2) fail("IFF takes two arguments", form);
      Term b = tr(args[1]);
      return make_if(tr(args[0]), make_if(b, t_term(), nil_term()), make_if(b, nil_term(), t_term()));
    }
    if (fn == "TERMHINT-SEQ" && world_.arity("TERMHINT-SEQ")) {
      if (args.size() != 2) fail("TERMHINT-SEQ takes two arguments", form);
      SExpr expanded = termhint_seq_macro(args[0], args[1]);
      std::vector<SExpr> parts = expanded.cdr().to_vector();
      return Term::app("TERMHINT-SEQ", {tr(parts[0]), tr(parts[1])});
    }
    return call(fn, args, form);
  }

 private:
  Term call(const std::string& fn, const std::vector<SExpr>& args, const SExpr& form) {
    auto arity = world_.arity(fn);
    if (!arity) fail("unknown function " + fn, form);
    if (fn == "HQ" && args.size() == 1 && args[0].is_symbol() && templated_.count(args[0].name()))
      fail("HQ of " + args[0].name() + ", which is bound to a quasiquote template", form);
    if (mode_ == TranslateMode::Logic &&
        (world_.hint_function(fn) || world_.native_hint_function(fn)))
      fail("hint function " + fn + " used in a logical term", form);
    if (*arity != args.size())
      fail(fn + " expects " + std::to_string(*arity) + " arguments, got " +
               std::to_string(args.size()),
           form);
    std::vector<Term> targs;
    targs.reserve(args.size());
    for (const auto& a : args) targs.push_back(tr(a));
    return Term::app(fn, std::move(targs));
  }

  std::string variable_name(const SExpr& v, const SExpr& form) {
    if (!v.is_symbol() || v.is_symbol("T")) fail("expected a variable name", form);
    return v.name();
  }

  // Closes the lambda over any free variables of the body that are not
  // already formals, passing them through unchanged.
  Term closed_lambda(std::vector<std::string> formals, Term body, std::vector<Term> actuals) {
    for (const auto& v : free_vars(body)) {
      if (std::find(formals.begin(), formals.end(), v) != formals.end()) continue;
      formals.push_back(v);
      actuals.push_back(Term::var(v));
    }
    return Term::lambda(std::move(formals), std::move(body), std::move(actuals));
  }

  Term lambda_app(const SExpr& head, const std::vector<SExpr>& args, const SExpr& form) {
    std::vector<SExpr> parts = head.cdr().to_vector();
    if (parts.size() != 2 || !parts[0].is_proper_list()) fail("malformed LAMBDA", form);
    std::vector<std::string> formals;
    for (const auto& f : parts[0].to_vector()) formals.push_back(variable_name(f, form));
    if (formals.size() != args.size()) fail("lambda arity mismatch", form);
    std::vector<Term> actuals;
    for (const auto& a : args) actuals.push_back(tr(a));
    std::set<std::string> saved = templated_;
    for (const auto& f : formals) templated_.erase(f);
    Term body = tr(parts[1]);
    templated_ = std::move(saved);
    return closed_lambda(std::move(formals), std::move(body), std::move(actuals));
  }

  // Drops leading (DECLARE ...) forms and returns the single body form.
  SExpr body_form(const std::vector<SExpr>& rest, const SExpr& form) {
    std::vector<SExpr> body;
    for (const auto& b : rest)
      if (!b.is_form("DECLARE")) body.push_back(b);
    if (body.size() != 1) fail("expected exactly one body form", form);
    return body[0];
  }

  Term let(const std::vector<SExpr>& args, const SExpr& form) {
    if (args.empty() || !args[0].is_proper_list()) fail("malformed LET", form);
    std::vector<std::string> formals;
    std::vector<Term> actuals;
    std::set<std::string> scope = templated_;
    for (const auto& b : args[0].to_vector()) {
      if (!b.is_proper_list() || b.length() != 2) fail("malformed LET binding", form);
      std::string v = variable_name(b.car(), form);
      if (std::find(formals.begin(), formals.end(), v) != formals.end())
        fail("duplicate LET variable " + v, form);
      formals.push_back(v);
      actuals.push_back(tr(b.cdr().car()));
      if (has_quasiquote_marker(b.cdr().car()))
        scope.insert(v);
      else
        scope.erase(v);
    }
    std::set<std::string> saved = std::exchange(templated_, std::move(scope));
    Term body = tr(body_form({args.begin() + 1, args.end()}, form));
    templated_ = std::move(saved);
    if (formals.empty()) return body;
    return closed_lambda(std::move(formals), std::move(body), std::move(actuals));
  }

  Term let_star(const std::vector<SExpr>& args, const SExpr& form) {
    if (args.empty() || !args[0].is_proper_list()) fail("malformed LET*", form);
    std::vector<SExpr> bindings = args[0].to_vector();
    SExpr body = body_form({args.begin() + 1, args.end()}, form);
    for (auto it = bindings.rbegin(); it != bindings.rend(); ++it)
      body = SExpr::list({sym("LET"), SExpr::list({*it}), body});
    return tr(body);
  }

  SExpr b_star(const std::vector<SExpr>& args, const SExpr& form) {
    if (args.empty() || !args[0].is_proper_list()) fail("malformed B*", form);
    std::vector<SExpr> binders = args[0].to_vector();
    std::vector<SExpr> results(args.begin() + 1, args.end());
    SExpr out = results.empty() ? SExpr() : results.back();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
      const SExpr& b = *it;
      if (!b.is_pair() || !b.is_proper_list()) fail("unsupported B* binder", b);
      if (b.car().is_symbol() && b.length() == 2) {
        out = SExpr::list({sym("LET"), SExpr::list({b}), out});
        continue;
      }
      const SExpr& pat = b.car();
      bool when = pat.is_form("WHEN");
      bool unless = pat.is_form("UNLESS");
      if ((!when && !unless) || pat.length() != 2 || !pat.is_proper_list())
        fail("unsupported B* binder", b);
      SExpr test = pat.cdr().car();
      std::vector<SExpr> forms = b.cdr().to_vector();
      SExpr early = forms.empty() ? SExpr() : forms.back();
      out = when ? SExpr::list({sym("IF"), test, early, out})
                 : SExpr::list({sym("IF"), test, out, early});
    }
    return out;
  }

  Term and_(const std::vector<SExpr>& args) {
    if (args.empty()) return t_term();
    Term out = tr(args.back());
    for (auto it = args.rbegin() + 1; it != args.rend(); ++it) out = make_if(tr(*it), out, nil_term());
    return out;
  }

  Term or_(const std::vector<SExpr>& args) {
    if (args.empty()) return nil_term();
    Term out = tr(args.back());
    for (auto it = args.rbegin() + 1; it != args.rend(); ++it) {
      Term a = tr(*it);
      out = make_if(a, a, out);
    }
    return out;
  }

  Term cond(const std::vector<SExpr>& clauses, const SExpr& form) {
    Term out = nil_term();
    for (auto it = clauses.rbegin(); it != clauses.rend(); ++it) {
      if (!it->is_pair() || !it->is_proper_list() || it->length() > 2)
        fail("malformed COND clause", form);
      Term test = tr(it->car());
      if (it->length() == 1) {
        out = make_if(test, test, out);
      } else {
        out = make_if(test, tr(it->cdr().car()), out);
      }
    }
    return out;
  }

  const World& world_;
  // Variables in scope whose binding form contains quasiquote markers.
  std::set<std::string> templated_;
  TranslateMode mode_;
};

}  // namespace

SExpr expand_quasiquote(const SExpr& body) { return qq(body); }

SExpr termhint_seq_macro(const SExpr& h1, const SExpr& h2) {
  SExpr hidden = is_marker(h2, "HIDE") ? h2 : SExpr::list({sym("HIDE"), h2});
  return SExpr::list({sym("TERMHINT-SEQ"), h1, hidden});
}

Term translate(const SExpr& form, const World& world, TranslateMode mode) {
  return Translator(world, mode).tr(form);
}

}  // namespace prover
