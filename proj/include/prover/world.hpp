#pragma once

#include "prover/sexpr.hpp"
#include "prover/term.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace prover {

struct Definition {
  std::string name;
  std::vector<std::string> formals;
  Term body;
  // Whether IF tests were lifted out of argument positions when defined.
  bool normalized = true;
  bool recursive = false;
};

enum class Equivalence { Equal, Iff };

struct RewriteRule {
  std::string name;
  std::vector<Term> hyps;
  Equivalence equiv = Equivalence::Equal;
  Term lhs;
  Term rhs;
};

struct Theorem {
  std::string name;
  Term body;
};

// The set of enabled rule and definition names.
class Theory {
 public:
  Theory() = default;
  explicit Theory(std::set<std::string> enabled) : enabled_(std::move(enabled)) {}

  bool enabled(const std::string& name) const { return enabled_.count(name) != 0; }
  Theory with(std::span<const std::string> enables, std::span<const std::string> disables) const;
  const std::set<std::string>& names() const { return enabled_; }

  friend bool operator==(const Theory&, const Theory&) = default;

 private:
  std::set<std::string> enabled_;
};

// A computed-hint helper callable from hint expressions.
struct HintFunction {
  std::string name;
  std::vector<std::string> formals;
  Term body;
};

class World;
using NativeHintFn = std::function<SExpr(std::span<const SExpr> args, const World& world)>;
using ClauseProcessor = std::function<Clause(const Clause&)>;

// The logical world: function signatures, definitions, rules, theorems, hint
// functions, clause processors, and the current global theory. Events extend
// it by value; a proof only ever reads it.
class World {
 public:
  // Built-in functions only. See make_world() for the full prelude.
  World();

  std::optional<std::size_t> arity(const std::string& fn) const;
  bool is_builtin(const std::string& fn) const;
  bool is_stub(const std::string& fn) const { return stubs_.count(fn) != 0; }
  const Definition* definition(const std::string& fn) const;
  const Theorem* theorem(const std::string& name) const;
  const HintFunction* hint_function(const std::string& name) const;
  const NativeHintFn* native_hint_function(const std::string& name) const;
  const ClauseProcessor* clause_processor(const std::string& name) const;
  const std::vector<RewriteRule>& rules() const { return rules_; }
  // A rule or definition name that a theory may mention.
  bool is_rune(const std::string& name) const;

  const Theory& theory() const { return theory_; }
  void set_theory(Theory t) { theory_ = std::move(t); }

  void add_stub(const std::string& name, std::size_t arity);
  // Declares the signature before the body is translated (recursion).
  void declare_function(const std::string& name, std::size_t arity);
  void add_definition(Definition def, bool enabled);
  void add_theorem(Theorem thm);
  void add_rule(RewriteRule rule, bool enabled);
  void add_hint_function(HintFunction fn);
  void add_native_hint_function(const std::string& name, std::size_t arity, NativeHintFn fn);
  void add_clause_processor(const std::string& name, ClauseProcessor fn);

 private:
  void claim_function_name(const std::string& name);

  std::map<std::string, std::size_t> arities_;
  std::set<std::string> stubs_;
  std::map<std::string, Definition> definitions_;
  std::map<std::string, Theorem> theorems_;
  std::vector<RewriteRule> rules_;
  std::map<std::string, HintFunction> hint_functions_;
  std::map<std::string, NativeHintFn> native_hint_functions_;
  std::map<std::string, ClauseProcessor> clause_processors_;
  Theory theory_;
};

// Built-ins with an evaluation rule (HIDE evaluates as identity).
const std::map<std::string, std::size_t>& builtin_arities();

}  // namespace prover
