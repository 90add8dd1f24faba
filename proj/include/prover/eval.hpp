#pragma once

#include "prover/sexpr.hpp"
#include "prover/term.hpp"
#include "prover/world.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>

namespace prover {

// Applies a built-in other than IF to evaluated arguments. Returns nullopt
// for names that are not evaluable built-ins.
std::optional<SExpr> apply_builtin(const std::string& fn, std::span<const SExpr> args);

using Environment = std::map<std::string, SExpr>;

// Call-by-value evaluator over built-ins and World definitions. Stubs have no
// evaluation rule. Each function application spends one unit of fuel.
class Evaluator {
 public:
  // Hook for functions outside the built-in set (hint functions). Returns
  // nullopt to fall through to the default handling.
  using Extension =
      std::function<std::optional<SExpr>(const std::string& fn, std::span<const SExpr> args,
                                         Evaluator& self)>;

  Evaluator(const World& world, std::size_t fuel) : world_(world), fuel_(fuel) {}

  void set_extension(Extension ext) { extension_ = std::move(ext); }
  // Restricts callable functions (IF is always allowed). Unset = no limit.
  void set_allowed(std::function<bool(const std::string&)> allowed) { allowed_ = std::move(allowed); }
  void set_allow_definitions(bool allow) { allow_definitions_ = allow; }

  SExpr eval(const Term& t, const Environment& env);
  std::size_t fuel() const { return fuel_; }

 private:
  void spend();

  const World& world_;
  std::size_t fuel_;
  Extension extension_;
  std::function<bool(const std::string&)> allowed_;
  bool allow_definitions_ = true;
};

// Evaluates a closed term. Used as a test oracle.
SExpr ground_eval(const Term& t, const World& world, std::size_t fuel = 1'000'000);

}  // namespace prover
