#include "support.hpp"

#include "prover/eval.hpp"
#include "prover/rewrite.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>

using namespace prover;
using support::sx;
using support::tm;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

RunOptions traced() {
  RunOptions o;
  o.trace = true;
  o.checkpoints = true;
  return o;
}

const TraceEvent* first_event(const ProofResult& r, EventKind kind, const std::string& payload_prefix,
                              std::size_t* index = nullptr) {
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const TraceEvent& e = r.trace[i];
    if (e.kind == kind && print(e.payload).rfind(payload_prefix, 0) == 0) {
      if (index) *index = i;
      return &e;
    }
  }
  return nullptr;
}

// The literals of the SIMPLIFY event that opened a branch.
std::string branch_clause(const ProofResult& r, const std::string& goal) {
  for (const TraceEvent& e : r.trace)
    if (e.goal == goal && e.kind == EventKind::Simplify) return print(e.payload);
  return "";
}

Outcome criterion1() {
  Outcome out;
  RunReport rep = support::run_one("pipeline.lisp", traced());
  const TheoremReport* t = support::find_theorem(rep, "FA-OF-BAR-BAZ");
  out.expect(t && t->proved, "FA-OF-BAR-BAZ not proved");
  if (!t) return out;
  const std::string expand = "(:EXPAND ((FA (BAR (FOO A B) C) (BAZ (FOO A B) D))))";
  const TraceEvent* e = first_event(t->result, EventKind::Hint, "(:EXPAND");
  out.expect(e && print(e->payload) == expand, "expand hint missing or different");
  const TraceEvent* u = first_event(t->result, EventKind::Hint, "(:USE ((:INSTANCE MY-LEMMA");
  out.expect(u != nullptr, ":USE hint missing");
  if (!e || !u) return out;
  // Each hint fired below the branch whose case it names.
  std::string else_branch = e->goal.substr(0, e->goal.find('\''));
  std::string then_branch = u->goal.substr(0, u->goal.find('\''));
  out.expect(else_branch != then_branch, "both hints on the same branch");
  out.expect(branch_clause(t->result, else_branch).find("((CONSP (BAR (FOO A B) C))") == 0,
             "expand hint not on the (NOT (CONSP G)) branch");
  out.expect(branch_clause(t->result, then_branch).find("((NOT (CONSP (BAR (FOO A B) C)))") == 0,
             "use hint not on the (CONSP G) branch");
  out.detail = out.ok ? else_branch + " " + expand : out.detail;
  return out;
}

Outcome criterion2() {
  Outcome out;
  int termhint = support::run_one("robust_termhint.lisp").exit_code;
  int baseline = support::run_one("robust_member_baseline.lisp").exit_code;
  int member = support::run_one("robust_member.lisp").exit_code;
  out.expect(baseline == 0, "membership hints fail even without the rule");
  out.expect(termhint == 0, "use-termhint proof broken by the rule");
  out.expect(member == 1, "membership hints survive the rule");
  out.detail = "exits termhint=" + std::to_string(termhint) + " member=" + std::to_string(member) +
               " member-baseline=" + std::to_string(baseline);
  return out;
}

Outcome criterion3() {
  Outcome out;
  auto order = [&](const std::string& file) -> int {
    RunReport rep = support::run_one(file, traced());
    const TheoremReport* t = support::find_theorem(rep, "TOP-IS-ALT");
    if (!t || !t->proved) return 0;
    std::size_t hint = 0;
    std::size_t split = 0;
    if (!first_event(t->result, EventKind::Hint, "(:IN-THEORY (ENABLE MY-THEORY1))", &hint)) return 0;
    if (!first_event(t->result, EventKind::Split, "(FOO (BAR F C) B)", &split)) return 0;
    return hint < split ? 1 : -1;
  };
  int inline_order = order("seq_inline.lisp");
  int normalized = order("seq_normalized.lisp");
  int kept = order("seq_no_normalize.lisp");
  out.expect(inline_order == 1, "inline: stage-one hint does not precede the split");
  out.expect(normalized == -1, "normalized: split does not come first");
  out.expect(kept == 1, ":normalize nil: stage-one hint does not precede the split");
  out.detail = "hint-before-split inline=" + std::to_string(inline_order) +
               " normalized=" + std::to_string(normalized) + " no-normalize=" + std::to_string(kept);
  return out;
}

Outcome criterion4() {
  Outcome out;
  for (const char* file : {"nil_hint.lisp", "nil_hint_reduced.lisp"}) {
    RunReport rep = support::run_one(file, traced());
    out.expect(rep.files.size() == 1 && rep.files[0].theorems.size() == 1, std::string(file) + ": no theorem");
    if (!out.ok) return out;
    const ProofResult& r = rep.files[0].theorems[0].result;
    const TraceEvent* drop = first_event(r, EventKind::Hint, "(:CLAUSE-PROCESSOR");
    out.expect(drop && print(drop->payload) == "(:CLAUSE-PROCESSOR DROP-TERMHINT-HYP)",
               std::string(file) + ": extracted hint carries keywords");
    bool later_hint = false;
    for (const TraceEvent& e : r.trace)
      if (drop && e.kind == EventKind::Hint && &e > drop) later_hint = true;
    out.expect(!later_hint, std::string(file) + ": a hint fired after extraction");
    out.expect(r.checkpoints.size() == 1, std::string(file) + ": expected one checkpoint");
    for (const Checkpoint& c : r.checkpoints)
      for (const Term& lit : c.clause)
        out.expect(!calls_function(lit, kHypFn), std::string(file) + ": USE-TERMHINT-HYP left in stable clause");
  }
  out.detail = "extracted (:CLAUSE-PROCESSOR DROP-TERMHINT-HYP); checkpoint free of USE-TERMHINT-HYP";
  return out;
}

Outcome criterion5() {
  Outcome out;
  RunReport rep = support::run_one("mark_clause.lisp", traced());
  const TheoremReport* t = support::find_theorem(rep, "Q-IS-R");
  out.expect(t && !t->proved, "Q-IS-R should fail");
  if (!t) return out;
  const auto& cps = t->result.checkpoints;
  out.expect(cps.size() == 2, "expected two checkpoints, got " + std::to_string(cps.size()));
  std::set<std::string> labels;
  for (const Checkpoint& c : cps) {
    out.expect(c.labels.size() == 1, c.goal + ": expected exactly one label");
    if (!c.labels.empty()) labels.insert(print(c.labels[0]));
  }
  out.expect(labels == std::set<std::string>{"BRANCH-ONE", "BRANCH-TWO"}, "labels not distinct per branch");
  out.expect(rep.exit_code == 1, "exit code not 1");
  if (out.ok) out.detail = cps[0].goal + " [" + print(cps[0].labels[0]) + "], " + cps[1].goal + " [" + print(cps[1].labels[0]) + "]";
  return out;
}

Outcome criterion6() {
  Outcome out;
  World w = make_world();
  support::Gen gen(60606);
  const int n = 1000;
  for (int i = 0; i < n && out.ok; ++i) {
    Term t = gen.hint_term(5);
    SExpr v = process_termhint(t);
    SExpr want;
    if (t.is_const()) want = t.value();
    else if (t.is_app("HQ")) want = unparse(t.arg(0));
    else if (t.is_app("CONS")) want = SExpr::cons(process_termhint(t.arg(0)), process_termhint(t.arg(1)));
    else want = SExpr::list(process_termhint(t.arg(0)).to_vector(), process_termhint(t.arg(1)));
    out.expect(v == want, "homomorphism law fails on " + print_term(t));
    bool keyword_list = v.is_pair() && v.car().is_keyword() && v.is_proper_list();
    SExpr fixed = keyword_fixup(v);
    out.expect(keyword_list ? fixed == SExpr::list({SExpr::symbol("QUOTE"), v}) : fixed == v,
               "keyword_fixup law fails on " + print(v));
    // Fixing up a keyword list and evaluating once gives the list back.
    if (keyword_list)
      out.expect(ground_eval(translate(fixed, w), w) == v, "fixup is not undone by one evaluation");
  }

  for (int i = 0; i < n && out.ok; ++i) {
    std::vector<SExpr> items;
    std::vector<SExpr> expected;
    for (std::size_t k = gen.below(5); k > 0; --k) {
      switch (gen.below(3)) {
        case 0: {
          SExpr d = gen.datum(2);
          items.push_back(d);
          expected.push_back(d);
          break;
        }
        case 1: {
          SExpr d = gen.datum(2);
          items.push_back(SExpr::list({SExpr::symbol("UNQUOTE"), SExpr::list({SExpr::symbol("QUOTE"), d})}));
          expected.push_back(d);
          break;
        }
        default: {
          SExpr l = gen.proper_list(1);
          items.push_back(SExpr::list({SExpr::symbol("UNQUOTE-SPLICING"), SExpr::list({SExpr::symbol("QUOTE"), l})}));
          for (const SExpr& e : l.to_vector()) expected.push_back(e);
        }
      }
    }
    SExpr form = SExpr::list({SExpr::symbol("QUASIQUOTE"), SExpr::list(items)});
    Term t = beta_reduce(translate(form, w));
    SExpr want = SExpr::list(expected);
    out.expect(ground_eval(t, w) == want, "quasiquote oracle mismatch on " + print(form));
    out.expect(process_termhint(t) == want, "interpreter disagrees with quasiquote on " + print(form));
  }
  out.detail = std::to_string(n) + " hint terms, " + std::to_string(n) + " depth-1 templates";
  return out;
}

// Boolean terms over the atoms A..D. The oracle evaluates a term under all
// 16 assignments at once: bit k of the result is its value under assignment k.
using Table = std::uint16_t;

Table truth(const Term& t) {
  static const Table atoms[4] = {0xAAAA, 0xCCCC, 0xF0F0, 0xFF00};
  if (t.is_const()) return t.value().is_nil() ? 0 : 0xFFFF;
  if (t.is_var()) return atoms[t.name()[0] - 'A'];
  if (t.is_app("NOT")) return static_cast<Table>(~truth(t.arg(0)));
  if (t.is_app("EQUAL")) return static_cast<Table>(~(truth(t.arg(0)) ^ truth(t.arg(1))));
  Table c = truth(t.arg(0));
  return static_cast<Table>((c & truth(t.arg(1))) | (~c & truth(t.arg(2))));
}

Table clause_truth(const Clause& c) {
  Table any = 0;
  for (const Term& l : c) any |= truth(l);
  return any;
}

bool split_agrees(const Clause& c) {
  Table all = 0xFFFF;
  for (const Clause& p : split_ifs(c)) all &= clause_truth(p);
  return all == clause_truth(c);
}

// IF trees with atom tests, all of them up to the given depth.
std::vector<Term> if_trees(int depth) {
  std::vector<Term> leaves{Term::var("A"), Term::var("B"), Term::var("C"), Term::var("D"), t_term(), nil_term()};
  if (depth == 0) return leaves;
  std::vector<Term> sub = if_trees(depth - 1);
  std::vector<Term> out = leaves;
  for (int a = 0; a < 4; ++a)
    for (const Term& x : sub)
      for (const Term& y : sub) out.push_back(make_if(leaves[a], x, y));
  return out;
}

Term random_bool(support::Gen& gen, int depth) {
  if (depth <= 0 || gen.below(4) == 0) {
    std::size_t k = gen.below(6);
    if (k < 4) return Term::var(std::string(1, static_cast<char>('A' + k)));
    return k == 4 ? t_term() : nil_term();
  }
  switch (gen.below(4)) {
    case 0: return make_not(random_bool(gen, depth - 1));
    case 1: return Term::app("EQUAL", {random_bool(gen, depth - 1), random_bool(gen, depth - 1)});
    default: return make_if(random_bool(gen, depth - 1), random_bool(gen, depth - 1), random_bool(gen, depth - 1));
  }
}

Outcome fail_split(Outcome out, const Clause& c) {
  out.expect(false, "split_ifs changes the truth table of " + print(unparse_clause(c)));
  return out;
}

Outcome criterion7() {
  Outcome out;
  std::size_t checked = 0;
  std::vector<Term> d2 = if_trees(2);
  for (const Term& t : d2) {
    ++checked;
    if (!split_agrees({t})) return fail_split(out, {t});
  }
  std::vector<Term> d1 = if_trees(1);
  for (const Term& a : d1)
    for (const Term& b : d1) {
      ++checked;
      if (!split_agrees({a, b})) return fail_split(out, {a, b});
    }
  support::Gen gen(7777);
  for (int i = 0; i < 20000; ++i) {
    Clause c;
    for (std::size_t n = 1 + gen.below(3); n > 0; --n) c.push_back(random_bool(gen, 3));
    ++checked;
    if (!split_agrees(c)) return fail_split(out, c);
  }

  // Fixpoint: simplifying a stable clause changes nothing.
  std::size_t stable = 0;
  for (const std::string& file : support::corpus_files()) {
    std::string text = support::read_file(support::corpus_path(file));
    World w = make_world();
    for (const Event& e : parse_events(text)) {
      if (const DefthmEvent* d = std::get_if<DefthmEvent>(&e)) {
        std::vector<Clause> todo{{beta_reduce(translate(d->body, w))}};
        for (int guard = 0; !todo.empty() && guard < 1000; ++guard) {
          Clause cur = todo.back();
          todo.pop_back();
          Fuel fuel(1'000'000);
          SimplifyResult r = simplify_clause(cur, w.theory(), w, fuel);
          if (r.changed) {
            for (const Clause& c : r.clauses) todo.push_back(c);
            continue;
          }
          Fuel fuel2(1'000'000);
          SimplifyResult again = simplify_clause(r.clauses.at(0), w.theory(), w, fuel2);
          out.expect(!again.changed && again.clauses == r.clauses, file + ": fixpoint not idempotent");
          ++stable;
        }
        out.expect(todo.empty(), file + ": simplification did not settle");
      }
      apply_event(e, w, {});
    }
  }

  // HIDE opacity under random theories.
  for (int i = 0; i < 100; ++i) {
    World w = make_world();
    for (int k = 0; k < 4; ++k) w.add_stub("F" + std::to_string(k), 1);
    std::vector<std::string> names;
    for (int k = 0; k < 3; ++k) {
      std::string name = "R" + std::to_string(k);
      w.add_rule(RewriteRule{name, {}, Equivalence::Equal, tm("(f" + std::to_string(k) + " x)", w),
                             tm("(f" + std::to_string(k + 1) + " (car (cons x x)))", w)},
                 false);
      names.push_back(name);
    }
    std::set<std::string> enabled;
    for (const std::string& n : names)
      if (gen.coin()) enabled.insert(n);
    Theory theory(enabled);
    Term inner = substitute(beta_reduce(gen.term(4)), Substitution{{"X", tm("(f0 (car (cons y z)))", w)}});
    Term hidden = Term::app("HIDE", {inner});
    Term outer = Term::app("CONS", {hidden, tm("(f0 (car (cons y z)))", w)});
    Fuel fuel(1'000'000);
    Term r = rewrite_term(outer, theory, Assumptions{}, w, fuel);
    out.expect(r.is_app("CONS") && r.arg(0) == hidden, "HIDE was entered: " + print_term(outer));
    Fuel fuel2(1'000'000);
    out.expect(rewrite_term(hidden, theory, Assumptions{}, w, fuel2, true) == hidden, "HIDE rewritten in iff context");
  }
  out.detail = std::to_string(checked) + " clauses truth-table checked, " + std::to_string(stable) +
               " corpus fixpoints, 100 HIDE terms";
  return out;
}

Outcome criterion8() {
  Outcome out;
  auto run_all = [] {
    RunOptions opts = traced();
    RunReport r;
    for (const std::string& f : support::corpus_files())
      run_text(support::read_file(support::corpus_path(f)), f, opts, r);
    std::string text = report(r, opts);
    for (const std::string& d : r.diagnostics) text += d + "\n";
    return text;
  };
  std::string a = run_all();
  std::string b = run_all();
  out.expect(a == b, "reports differ between runs");
  out.detail = std::to_string(a.size()) + " bytes identical";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"pipeline hint extraction", criterion1}, {"robustness under rule change", criterion2},
      {"termhint-seq ordering", criterion3},    {"NIL hint", criterion4},
      {"mark-clause labels", criterion5},       {"interpreter properties", criterion6},
      {"simplifier properties", criterion7},    {"determinism", criterion8}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << " [" << ms << " ms]\n";
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
