#pragma once

#include "prover/events.hpp"
#include "prover/sexpr.hpp"
#include "prover/term.hpp"
#include "prover/termhint.hpp"
#include "prover/translate.hpp"
#include "prover/world.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace support {

using namespace prover;

inline std::string corpus_path(const std::string& name) {
  return std::string(PROVER_CORPUS_DIR) + "/" + name;
}

inline std::vector<std::string> corpus_files() {
  return {"trivial.lisp",        "pipeline.lisp",       "robust_termhint.lisp",
          "robust_member_baseline.lisp", "robust_member.lisp", "seq_inline.lisp",
          "seq_normalized.lisp", "seq_no_normalize.lisp", "nil_hint.lisp",
          "nil_hint_reduced.lisp", "mark_clause.lisp"};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline SExpr sx(std::string_view text) { return parse_one(text); }
inline Term tm(std::string_view text, const World& w) { return beta_reduce(translate(parse_one(text), w)); }

// World after running every event of a script, ignoring DEFTHM outcomes.
inline World world_of(const std::string& text) {
  World w = make_world();
  for (const Event& e : parse_events(text)) apply_event(e, w, {});
  return w;
}

inline RunReport run_one(const std::string& file, RunOptions opts = {}) {
  RunReport r;
  run_text(read_file(corpus_path(file)), file, opts, r);
  return r;
}

inline const TheoremReport* find_theorem(const RunReport& r, const std::string& name) {
  for (const FileReport& f : r.files)
    for (const TheoremReport& t : f.theorems)
      if (t.name == name) return &t;
  return nullptr;
}

class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool coin() { return below(2) == 0; }

  std::string symbol_name() {
    static const std::string first = "ABCDEFGHIJKLMNOPQRSTUVWXYZ*";
    static const std::string rest = "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-*/<>=!?";
    std::string s(1, first[below(first.size())]);
    for (std::size_t n = below(6); n > 0; --n) s += rest[below(rest.size())];
    return s;
  }

  SExpr atom() {
    switch (below(6)) {
      case 0: return SExpr();
      case 1: return SExpr::keyword(symbol_name());
      case 2: {
        Integer v = below(1000);
        if (coin()) v *= Integer("123456789012345678901234567890");
        return SExpr::integer(coin() ? v : Integer(-v));
      }
      case 3: {
        static const std::string chars = "ab c\"\\;()'`,x";
        std::string s;
        for (std::size_t n = below(6); n > 0; --n) s += chars[below(chars.size())];
        return SExpr::string(s);
      }
      default: return SExpr::symbol(symbol_name());
    }
  }

  SExpr sexpr(int depth) {
    if (depth <= 0 || below(3) == 0) return atom();
    std::vector<SExpr> items;
    for (std::size_t n = below(4); n > 0; --n) items.push_back(sexpr(depth - 1));
    SExpr tail = below(5) == 0 ? atom() : SExpr();
    if (below(6) == 0) {
      static const char* marks[] = {"QUOTE", "QUASIQUOTE", "UNQUOTE", "UNQUOTE-SPLICING"};
      return SExpr::list({SExpr::symbol(marks[below(4)]), sexpr(depth - 1)});
    }
    return SExpr::list(items, tail);
  }

  // Data built from symbols, keywords, integers and NIL only.
  SExpr datum(int depth) {
    if (depth <= 0 || below(3) == 0) {
      switch (below(4)) {
        case 0: return SExpr();
        case 1: return SExpr::keyword(symbol_name());
        case 2: return SExpr::integer(below(50));
        default: return SExpr::symbol(symbol_name());
      }
    }
    std::vector<SExpr> items;
    for (std::size_t n = below(4); n > 0; --n) items.push_back(datum(depth - 1));
    return SExpr::list(items);
  }

  SExpr proper_list(int depth) {
    std::vector<SExpr> items;
    for (std::size_t n = below(4); n > 0; --n) items.push_back(datum(depth));
    return SExpr::list(items);
  }

  // Terms over the variables X, Y, Z and the built-ins.
  Term term(int depth, const std::vector<std::string>& vars = {"X", "Y", "Z"}) {
    if (depth <= 0 || below(4) == 0) {
      if (!vars.empty() && coin()) return Term::var(vars[below(vars.size())]);
      return quote(datum(1));
    }
    switch (below(8)) {
      case 0: return Term::app("CONS", {term(depth - 1, vars), term(depth - 1, vars)});
      case 1: return Term::app("CAR", {term(depth - 1, vars)});
      case 2: return Term::app("IF", {term(depth - 1, vars), term(depth - 1, vars), term(depth - 1, vars)});
      case 3: return Term::app("EQUAL", {term(depth - 1, vars), term(depth - 1, vars)});
      case 4: return Term::app("NOT", {term(depth - 1, vars)});
      case 5: return Term::app("HIDE", {term(depth - 1, vars)});
      case 6: return Term::app("CONSP", {term(depth - 1, vars)});
      default: {
        std::vector<std::string> formals;
        std::vector<Term> actuals;
        std::size_t n = 1 + below(2);
        for (std::size_t i = 0; i < n; ++i) {
          formals.push_back(i == 0 ? "X" : "W" + std::to_string(i));
          actuals.push_back(term(depth - 1, vars));
        }
        return Term::lambda(formals, term(depth - 1, formals), actuals);
      }
    }
  }

  // Hint terms in the interpreter's signature. `as_list` forces a value that
  // is a proper list, as the first argument of BINARY-APPEND needs.
  Term hint_term(int depth, bool as_list = false) {
    if (depth <= 0 || below(3) == 0) {
      if (as_list) return quote(proper_list(1));
      if (coin()) return quote(datum(2));
      return Term::app("HQ", {term(1)});
    }
    if (as_list) {
      if (coin()) return Term::app("CONS", {hint_term(depth - 1), hint_term(depth - 1, true)});
      return Term::app("BINARY-APPEND", {hint_term(depth - 1, true), hint_term(depth - 1, true)});
    }
    switch (below(3)) {
      case 0: return Term::app("CONS", {hint_term(depth - 1), hint_term(depth - 1)});
      case 1: return Term::app("BINARY-APPEND", {hint_term(depth - 1, true), hint_term(depth - 1)});
      default: return Term::app("HQ", {term(depth - 1)});
    }
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace support
