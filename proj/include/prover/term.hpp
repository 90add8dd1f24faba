#pragma once

#include "prover/sexpr.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prover {

// Translated internal term: variable, quoted constant, function application,
// or lambda application. Immutable; structural equality with a cached hash.
class Term {
 public:
  enum class Kind { Var, Const, App, Lambda };

  static Term var(std::string name);
  static Term constant(SExpr value);
  static Term app(std::string fn, std::vector<Term> args);
  static Term lambda(std::vector<std::string> formals, Term body, std::vector<Term> actuals);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_lambda() const { return kind() == Kind::Lambda; }
  bool is_app(std::string_view fn) const;
  bool is_nil() const;

  // Variable name or function symbol.
  const std::string& name() const;
  const SExpr& value() const;
  // App arguments, or the actuals of a lambda application.
  std::span<const Term> args() const;
  const Term& arg(std::size_t i) const { return args()[i]; }
  const std::vector<std::string>& formals() const;
  const Term& body() const;

  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// A disjunction of literals. A hypothesis H appears as the literal (NOT H).
using Clause = std::vector<Term>;
using Substitution = std::map<std::string, Term>;

Term nil_term();
Term t_term();
Term quote(SExpr v);
Term make_not(Term t);
Term make_if(Term test, Term then_branch, Term else_branch);

// Free variables in order of first occurrence.
std::vector<std::string> free_vars(const Term& t);
bool occurs_free(const std::string& var, const Term& t);
bool calls_function(const Term& t, const std::string& fn);

// Capture-avoiding replacement of free variables. Descends into every
// application, HIDE included.
Term substitute(const Term& t, const Substitution& s);

// Replaces every lambda application by its instantiated body.
Term beta_reduce(const Term& t);
bool contains_lambda(const Term& t);

// One-way matching: variables in `pattern` bind to subterms of `t`.
bool match(const Term& pattern, const Term& t, Substitution& bindings);

// Back to surface syntax. Constants that are not self-evaluating come back
// as (QUOTE v); lambda applications as ((LAMBDA formals body) . actuals).
SExpr unparse(const Term& t);
SExpr unparse_clause(const Clause& c);
std::string print_term(const Term& t);

}  // namespace prover
