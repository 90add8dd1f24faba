#include "prover/term.hpp"

#include "prover/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace prover {

struct Term::Node {
  Kind kind;
  std::string name;
  SExpr value;
  std::vector<std::string> formals;
  std::optional<Term> body;
  std::vector<Term> args;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::size_t hash_sexpr(const SExpr& e) {
  // Printing is the cheapest total canonical form available; constants in
  // terms are small.
  return std::hash<std::string>{}(print(e));
}

}  // namespace

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->hash = mix(1, std::hash<std::string>{}(name));
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::constant(SExpr value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->hash = mix(2, hash_sexpr(value));
  n->value = std::move(value);
  return Term(std::move(n));
}

Term Term::app(std::string fn, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  std::size_t h = mix(3, std::hash<std::string>{}(fn));
  for (const Term& a : args) h = mix(h, a.hash());
  n->hash = h;
  n->name = std::move(fn);
  n->args = std::move(args);
  return Term(std::move(n));
}

Term Term::lambda(std::vector<std::string> formals, Term body, std::vector<Term> actuals) {
  if (formals.size() != actuals.size())
    throw TranslateError("lambda application with " + std::to_string(formals.size()) +
                         " formals but " + std::to_string(actuals.size()) + " actuals");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lambda;
  std::size_t h = mix(4, body.hash());
  for (const auto& f : formals) h = mix(h, std::hash<std::string>{}(f));
  for (const Term& a : actuals) h = mix(h, a.hash());
  n->hash = h;
  n->formals = std::move(formals);
  n->body = std::move(body);
  n->args = std::move(actuals);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }

bool Term::is_app(std::string_view fn) const { return is_app() && node_->name == fn; }

bool Term::is_nil() const { return is_const() && node_->value.is_nil(); }

const std::string& Term::name() const {
  if (kind() != Kind::Var && kind() != Kind::App) throw Error("name() of a constant or lambda");
  return node_->name;
}

const SExpr& Term::value() const {
  if (!is_const()) throw Error("value() of a non-constant term");
  return node_->value;
}

std::span<const Term> Term::args() const { return node_->args; }

const std::vector<std::string>& Term::formals() const { return node_->formals; }

const Term& Term::body() const {
  if (!is_lambda()) throw Error("body() of a non-lambda term");
  return *node_->body;
}

std::size_t Term::hash() const { return node_->hash; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind) return false;
  switch (a.kind()) {
    case Term::Kind::Var: return a.node_->name == b.node_->name;
    case Term::Kind::Const: return a.node_->value == b.node_->value;
    case Term::Kind::App:
      return a.node_->name == b.node_->name && a.node_->args == b.node_->args;
    case Term::Kind::Lambda:
      return a.node_->formals == b.node_->formals && *a.node_->body == *b.node_->body &&
             a.node_->args == b.node_->args;
  }
  return false;
}

Term nil_term() {
  static const Term t = Term::constant(SExpr());
  return t;
}

Term t_term() {
  static const Term t = Term::constant(sym_t());
  return t;
}

Term quote(SExpr v) { return Term::constant(std::move(v)); }

Term make_not(Term t) { return Term::app("NOT", {std::move(t)}); }

Term make_if(Term test, Term then_branch, Term else_branch) {
  return Term::app("IF", {std::move(test), std::move(then_branch), std::move(else_branch)});
}

// ---------------------------------------------------------------------------

namespace {

void collect_free(const Term& t, std::vector<std::string>& out, std::set<std::string>& seen) {
  switch (t.kind()) {
    case Term::Kind::Var:
      if (seen.insert(t.name()).second) out.push_back(t.name());
      return;
    case Term::Kind::Const: return;
    case Term::Kind::App:
      for (const Term& a : t.args()) collect_free(a, out, seen);
      return;
    case Term::Kind::Lambda: {
      for (const Term& a : t.args()) collect_free(a, out, seen);
      std::vector<std::string> inner;
      std::set<std::string> inner_seen;
      collect_free(t.body(), inner, inner_seen);
      for (const auto& v : inner) {
        if (std::find(t.formals().begin(), t.formals().end(), v) != t.formals().end()) continue;
        if (seen.insert(v).second) out.push_back(v);
      }
      return;
    }
  }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (int i = 1;; ++i) {
    std::string candidate = base + "$" + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

}  // namespace

std::vector<std::string> free_vars(const Term& t) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_free(t, out, seen);
  return out;
}

bool occurs_free(const std::string& var, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return t.name() == var;
    case Term::Kind::Const: return false;
    case Term::Kind::App:
      return std::any_of(t.args().begin(), t.args().end(),
                         [&](const Term& a) { return occurs_free(var, a); });
    case Term::Kind::Lambda:
      if (std::any_of(t.args().begin(), t.args().end(),
                      [&](const Term& a) { return occurs_free(var, a); }))
        return true;
      if (std::find(t.formals().begin(), t.formals().end(), var) != t.formals().end())
        return false;
      return occurs_free(var, t.body());
  }
  return false;
}

Term substitute(const Term& t, const Substitution& s) {
  if (s.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = s.find(t.name());
      return it == s.end() ? t : it->second;
    }
    case Term::Kind::Const: return t;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(substitute(a, s));
      return Term::app(t.name(), std::move(args));
    }
    case Term::Kind::Lambda: {
      std::vector<Term> actuals;
      for (const Term& a : t.args()) actuals.push_back(substitute(a, s));
      // Bindings shadowed by a formal do not reach the body.
      Substitution inner;
      for (const auto& [k, v] : s) {
        if (std::find(t.formals().begin(), t.formals().end(), k) == t.formals().end() &&
            occurs_free(k, t.body()))
          inner.emplace(k, v);
      }
      std::vector<std::string> formals = t.formals();
      Term body = t.body();
      if (!inner.empty()) {
        std::set<std::string> incoming;
        for (const auto& [k, v] : inner)
          for (const auto& fv : free_vars(v)) incoming.insert(fv);
        std::set<std::string> avoid(incoming);
        for (const auto& fv : free_vars(body)) avoid.insert(fv);
        for (const auto& f : formals) avoid.insert(f);
        Substitution rename;
        for (auto& f : formals) {
          if (incoming.count(f)) {
            std::string fresh = fresh_name(f, avoid);
            avoid.insert(fresh);
            rename.emplace(f, Term::var(fresh));
            f = fresh;
          }
        }
        if (!rename.empty()) body = substitute(body, rename);
        body = substitute(body, inner);
      }
      return Term::lambda(std::move(formals), std::move(body), std::move(actuals));
    }
  }
  return t;
}

Term beta_reduce(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const: return t;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(beta_reduce(a));
      return Term::app(t.name(), std::move(args));
    }
    case Term::Kind::Lambda: {
      Substitution s;
      for (std::size_t i = 0; i < t.formals().size(); ++i)
        s.insert_or_assign(t.formals()[i], beta_reduce(t.args()[i]));
      // Substituting lambda-free actuals into a lambda-free body cannot
      // create a new redex in a first-order term language.
      return substitute(beta_reduce(t.body()), s);
    }
  }
  return t;
}

bool contains_lambda(const Term& t) {
  if (t.is_lambda()) return true;
  if (!t.is_app()) return false;
  return std::any_of(t.args().begin(), t.args().end(), contains_lambda);
}

bool match(const Term& pattern, const Term& t, Substitution& bindings) {
  switch (pattern.kind()) {
    case Term::Kind::Var: {
      auto [it, inserted] = bindings.emplace(pattern.name(), t);
      return inserted || it->second == t;
    }
    case Term::Kind::Const: return t == pattern;
    case Term::Kind::App: {
      if (!t.is_app(pattern.name()) || t.args().size() != pattern.args().size()) return false;
      for (std::size_t i = 0; i < pattern.args().size(); ++i)
        if (!match(pattern.args()[i], t.args()[i], bindings)) return false;
      return true;
    }
    case Term::Kind::Lambda: return t == pattern;
  }
  return false;
}

SExpr unparse(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: return SExpr::symbol(t.name());
    case Term::Kind::Const:
      if (self_evaluating(t.value())) return t.value();
      return SExpr::list({SExpr::symbol("QUOTE"), t.value()});
    case Term::Kind::App: {
      std::vector<SExpr> items{SExpr::symbol(t.name())};
      for (const Term& a : t.args()) items.push_back(unparse(a));
      return SExpr::list(items);
    }
    case Term::Kind::Lambda: {
      std::vector<SExpr> formals;
      for (const auto& f : t.formals()) formals.push_back(SExpr::symbol(f));
      std::vector<SExpr> items{
          SExpr::list({SExpr::symbol("LAMBDA"), SExpr::list(formals), unparse(t.body())})};
      for (const Term& a : t.args()) items.push_back(unparse(a));
      return SExpr::list(items);
    }
  }
  return SExpr();
}

SExpr unparse_clause(const Clause& c) {
  std::vector<SExpr> lits;
  lits.reserve(c.size());
  for (const Term& l : c) lits.push_back(unparse(l));
  return SExpr::list(lits);
}

std::string print_term(const Term& t) { return print(unparse(t)); }

bool calls_function(const Term& t, const std::string& fn) {
  switch (t.kind()) {
    case Term::Kind::Var:
    case Term::Kind::Const: return false;
    case Term::Kind::Lambda:
      if (calls_function(t.body(), fn)) return true;
      break;
    case Term::Kind::App:
      if (t.name() == fn) return true;
      break;
  }
  for (const Term& a : t.args())
    if (calls_function(a, fn)) return true;
  return false;
}

}  // namespace prover
