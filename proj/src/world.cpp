#include "prover/world.hpp"

#include "prover/error.hpp"

namespace prover {

const std::map<std::string, std::size_t>& builtin_arities() {
  static const std::map<std::string, std::size_t> table = {
      {"CONS", 2}, {"CAR", 1},    {"CDR", 1},          {"CONSP", 1},
      {"ATOM", 1}, {"EQUAL", 2},  {"IF", 3},           {"NOT", 1},
      {"LEN", 1},  {"MEMBER-EQUAL", 2}, {"BINARY-APPEND", 2}, {"HIDE", 1},
  };
  return table;
}

Theory Theory::with(std::span<const std::string> enables,
                    std::span<const std::string> disables) const {
  std::set<std::string> out = enabled_;
  for (const auto& n : enables) out.insert(n);
  for (const auto& n : disables) out.erase(n);
  return Theory(std::move(out));
}

World::World() : arities_(builtin_arities()) {}

std::optional<std::size_t> World::arity(const std::string& fn) const {
  auto it = arities_.find(fn);
  if (it == arities_.end()) return std::nullopt;
  return it->second;
}

bool World::is_builtin(const std::string& fn) const { return builtin_arities().count(fn) != 0; }

const Definition* World::definition(const std::string& fn) const {
  auto it = definitions_.find(fn);
  return it == definitions_.end() ? nullptr : &it->second;
}

const Theorem* World::theorem(const std::string& name) const {
  auto it = theorems_.find(name);
  return it == theorems_.end() ? nullptr : &it->second;
}

const HintFunction* World::hint_function(const std::string& name) const {
  auto it = hint_functions_.find(name);
  return it == hint_functions_.end() ? nullptr : &it->second;
}

const NativeHintFn* World::native_hint_function(const std::string& name) const {
  auto it = native_hint_functions_.find(name);
  return it == native_hint_functions_.end() ? nullptr : &it->second;
}

const ClauseProcessor* World::clause_processor(const std::string& name) const {
  auto it = clause_processors_.find(name);
  return it == clause_processors_.end() ? nullptr : &it->second;
}

bool World::is_rune(const std::string& name) const {
  if (definitions_.count(name)) return true;
  for (const auto& r : rules_)
    if (r.name == name) return true;
  return false;
}

void World::claim_function_name(const std::string& name) {
  if (arities_.count(name)) throw Error("function name already in use: " + name);
}

void World::add_stub(const std::string& name, std::size_t arity) {
  claim_function_name(name);
  arities_[name] = arity;
  stubs_.insert(name);
}

void World::declare_function(const std::string& name, std::size_t arity) {
  claim_function_name(name);
  arities_[name] = arity;
}

void World::add_definition(Definition def, bool enabled) {
  auto it = arities_.find(def.name);
  if (it == arities_.end()) {
    arities_[def.name] = def.formals.size();
  } else if (it->second != def.formals.size() || definitions_.count(def.name) ||
             stubs_.count(def.name) || is_builtin(def.name)) {
    throw Error("function name already in use: " + def.name);
  }
  std::string name = def.name;
  definitions_.insert_or_assign(name, std::move(def));
  if (enabled) theory_ = theory_.with(std::vector<std::string>{name}, {});
}

void World::add_theorem(Theorem thm) {
  if (theorems_.count(thm.name)) throw Error("theorem name already in use: " + thm.name);
  std::string name = thm.name;
  theorems_.emplace(std::move(name), std::move(thm));
}

void World::add_rule(RewriteRule rule, bool enabled) {
  for (const auto& r : rules_)
    if (r.name == rule.name) throw Error("rule name already in use: " + rule.name);
  if (enabled) theory_ = theory_.with(std::vector<std::string>{rule.name}, {});
  rules_.push_back(std::move(rule));
}

void World::add_hint_function(HintFunction fn) {
  claim_function_name(fn.name);
  arities_[fn.name] = fn.formals.size();
  std::string name = fn.name;
  hint_functions_.emplace(std::move(name), std::move(fn));
}

void World::add_native_hint_function(const std::string& name, std::size_t arity,
                                     NativeHintFn fn) {
  claim_function_name(name);
  arities_[name] = arity;
  native_hint_functions_.emplace(name, std::move(fn));
}

void World::add_clause_processor(const std::string& name, ClauseProcessor fn) {
  if (clause_processors_.count(name)) throw Error("clause processor already registered: " + name);
  clause_processors_.emplace(name, std::move(fn));
}

}  // namespace prover
