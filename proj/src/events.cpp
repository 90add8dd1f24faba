#include "prover/events.hpp"

#include "prover/error.hpp"
#include "prover/rewrite.hpp"
#include "prover/termhint.hpp"
#include "prover/translate.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace prover {

namespace {

[[noreturn]] void bad_event(const std::string& msg, const SExpr& form) {
  throw ParseError(msg + ": " + print(form));
}

std::string symbol_name(const SExpr& e, const SExpr& form, const char* what) {
  if (!e.is_symbol()) bad_event(std::string("expected ") + what, form);
  return e.name();
}

std::vector<std::string> parse_formals(const SExpr& e, const SExpr& form) {
  if (!e.is_proper_list()) bad_event("formals must be a list", form);
  std::vector<std::string> out;
  for (const SExpr& f : e.to_vector()) {
    std::string n = symbol_name(f, form, "a formal parameter");
    if (n == "T") bad_event("T cannot be a formal parameter", form);
    if (std::find(out.begin(), out.end(), n) != out.end())
      bad_event("duplicate formal " + n, form);
    out.push_back(std::move(n));
  }
  return out;
}

bool declares_no_normalize(const SExpr& decl) {
  for (const SExpr& item : decl.cdr().to_vector()) {
    if (!item.is_form("XARGS") || !item.is_proper_list()) continue;
    std::vector<SExpr> kv = item.cdr().to_vector();
    for (std::size_t i = 0; i + 1 < kv.size(); i += 2) {
      if (kv[i].is_keyword() && kv[i].name() == "NORMALIZE" && kv[i + 1].is_nil()) return true;
    }
  }
  return false;
}

Event parse_defun(const std::vector<SExpr>& parts, const SExpr& form, bool disabled) {
  if (parts.size() < 4) bad_event("malformed definition", form);
  DefunEvent d;
  d.name = symbol_name(parts[1], form, "a function name");
  d.formals = parse_formals(parts[2], form);
  d.disabled = disabled;
  for (std::size_t i = 3; i + 1 < parts.size(); ++i) {
    if (parts[i].is_string()) continue;
    if (!parts[i].is_form("DECLARE") || !parts[i].is_proper_list())
      bad_event("unexpected form before the body", form);
    if (declares_no_normalize(parts[i])) d.normalize = false;
  }
  d.body = parts.back();
  return d;
}

Event parse_defthm(const std::vector<SExpr>& parts, const SExpr& form) {
  if (parts.size() < 3 || parts.size() % 2 == 0) bad_event("malformed DEFTHM", form);
  DefthmEvent t;
  t.name = symbol_name(parts[1], form, "a theorem name");
  t.body = parts[2];
  std::set<std::string> seen;
  for (std::size_t i = 3; i < parts.size(); i += 2) {
    if (!parts[i].is_keyword()) bad_event("expected a keyword option", form);
    const std::string& k = parts[i].name();
    if (!seen.insert(k).second) bad_event("duplicate option :" + k, form);
    const SExpr& v = parts[i + 1];
    if (k == "HINTS") {
      if (!v.is_proper_list()) bad_event(":HINTS must be a list", form);
      t.hints = v.to_vector();
    } else if (k == "RULE-CLASSES") {
      if (v.is_nil()) {
        t.rewrite = false;
      } else if ((v.is_keyword() && v.name() == "REWRITE") ||
                 (v.is_proper_list() && v.length() == 1 && v.car().is_keyword() &&
                  v.car().name() == "REWRITE")) {
        t.rewrite = true;
      } else {
        bad_event("unsupported :RULE-CLASSES", form);
      }
    } else {
      bad_event("unknown DEFTHM option :" + k, form);
    }
  }
  return t;
}

std::vector<SExpr> and_conjuncts(const SExpr& e) {
  if (e.is_form("AND") && e.is_proper_list()) {
    std::vector<SExpr> out;
    for (const SExpr& c : e.cdr().to_vector()) {
      std::vector<SExpr> sub = and_conjuncts(c);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  return {e};
}

Term logic_term(const SExpr& e, const World& world) { return beta_reduce(translate(e, world)); }

void check_vars_within(const Term& t, const std::vector<std::string>& allowed, const std::string& what) {
  for (const std::string& v : free_vars(t)) {
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
      throw TranslateError(what + " mentions variable " + v + " not bound by it");
  }
}

ProofResult prove(const DefthmEvent& t, const World& world, const ProofLimits& limits) {
  Term goal = logic_term(t.body, world);
  std::vector<ComputedHint> hints;
  for (const SExpr& h : t.hints) hints.push_back(parse_hint_entry(h, world));
  return waterfall(Clause{goal}, std::move(hints), world, limits);
}

}  // namespace

Event parse_event(const SExpr& form) {
  if (!form.is_pair() || !form.car().is_symbol() || !form.is_proper_list())
    bad_event("not an event", form);
  std::vector<SExpr> parts = form.to_vector();
  const std::string& head = parts[0].name();
  if (head == "DEFSTUB") {
    if (parts.size() < 3) bad_event("malformed DEFSTUB", form);
    DefstubEvent s;
    s.name = symbol_name(parts[1], form, "a function name");
    if (parts[2].is_integer()) {
      if (parts[2].integer_value() < 0) bad_event("negative arity", form);
      s.arity = static_cast<std::size_t>(parts[2].integer_value());
    } else {
      s.arity = parse_formals(parts[2], form).size();
    }
    return s;
  }
  if (head == "DEFUN") return parse_defun(parts, form, false);
  if (head == "DEFUND") return parse_defun(parts, form, true);
  if (head == "DEFTHM") return parse_defthm(parts, form);
  if (head == "IN-THEORY") {
    if (parts.size() != 2) bad_event("malformed IN-THEORY", form);
    return InTheoryEvent{parts[1]};
  }
  if (head == "REGISTER-HINT-FN") {
    if (parts.size() != 3) bad_event("malformed REGISTER-HINT-FN", form);
    return RegisterHintFnEvent{symbol_name(parts[1], form, "a hint function name"), parts[2]};
  }
  bad_event("unknown event " + head, form);
}

std::vector<Event> parse_events(std::string_view text) {
  std::vector<Event> out;
  for (const SExpr& form : parse(text)) out.push_back(parse_event(form));
  return out;
}

ComputedHint parse_hint_entry(const SExpr& entry, const World& world) {
  if (entry.is_form("USE-TERMHINT")) {
    if (!entry.is_proper_list() || entry.length() != 2) throw HintError("malformed " + print(entry));
    return use_termhint_computed_hint(entry.cdr().car(), world);
  }
  if (entry.is_symbol()) {
    const HintFunction* hf = world.hint_function(entry.name());
    if (!hf || hf->formals.size() != 3) throw HintError("no hint function named " + entry.name());
    Term call = Term::app(entry.name(), {Term::var(kClauseVar), Term::var(kIdVar), Term::var(kStableVar)});
    return ComputedHint{call, entry};
  }
  SExpr kwlist;
  if (entry.is_pair() && entry.car().is_string()) {
    std::string target = entry.car().string_value();
    std::transform(target.begin(), target.end(), target.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (target != "GOAL") throw HintError("only \"Goal\" hints are supported: " + print(entry));
    kwlist = entry.cdr();
  } else if (entry.is_pair() && entry.car().is_keyword()) {
    kwlist = entry;
  } else {
    return make_computed_hint(entry, world);
  }
  parse_hint(kwlist, world);
  Term on_goal = Term::app("EQUAL", {Term::var(kIdVar), quote(SExpr::string("Goal"))});
  return ComputedHint{make_if(on_goal, quote(kwlist), nil_term()), entry};
}

RewriteRule rule_from_theorem(const std::string& name, const SExpr& body, const World& world) {
  RewriteRule rule{name, {}, Equivalence::Equal, nil_term(), nil_term()};
  SExpr concl = body;
  std::vector<SExpr> hyps;
  while (concl.is_form("IMPLIES") && concl.is_proper_list() && concl.length() == 3) {
    std::vector<SExpr> more = and_conjuncts(concl.cdr().car());
    hyps.insert(hyps.end(), more.begin(), more.end());
    concl = concl.cdr().cdr().car();
  }
  for (const SExpr& h : hyps) rule.hyps.push_back(logic_term(h, world));

  bool binary = concl.is_proper_list() && concl.length() == 3;
  if (binary && concl.is_form("EQUAL")) {
    rule.lhs = logic_term(concl.cdr().car(), world);
    rule.rhs = logic_term(concl.cdr().cdr().car(), world);
  } else if (binary && concl.is_form("IFF")) {
    rule.equiv = Equivalence::Iff;
    rule.lhs = logic_term(concl.cdr().car(), world);
    rule.rhs = logic_term(concl.cdr().cdr().car(), world);
  } else if (concl.is_form("NOT") && concl.is_proper_list() && concl.length() == 2) {
    rule.equiv = Equivalence::Iff;
    rule.lhs = logic_term(concl.cdr().car(), world);
    rule.rhs = nil_term();
  } else {
    rule.equiv = Equivalence::Iff;
    rule.lhs = logic_term(concl, world);
    rule.rhs = t_term();
  }

  if (!rule.lhs.is_app() || rule.lhs.is_app("IF"))
    throw TranslateError("cannot make a rewrite rule of " + name + ": left-hand side " +
                         print_term(rule.lhs) + " is not a function call");
  std::vector<std::string> lhs_vars = free_vars(rule.lhs);
  check_vars_within(rule.rhs, lhs_vars, "right-hand side of " + name);
  for (const Term& h : rule.hyps) check_vars_within(h, lhs_vars, "hypothesis of " + name);
  return rule;
}

std::optional<ProofResult> apply_event(const Event& e, World& world, const ProofLimits& limits) {
  World next = world;
  std::optional<ProofResult> result;
  std::visit(
      [&](const auto& ev) {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, DefstubEvent>) {
          next.add_stub(ev.name, ev.arity);
        } else if constexpr (std::is_same_v<T, DefunEvent>) {
          next.declare_function(ev.name, ev.formals.size());
          Term body = logic_term(ev.body, next);
          check_vars_within(body, ev.formals, "body of " + ev.name);
          Definition d{ev.name, ev.formals, body, ev.normalize, calls_function(body, ev.name)};
          if (d.normalized) d = normalize_definition(std::move(d));
          next.add_definition(std::move(d), !ev.disabled);
        } else if constexpr (std::is_same_v<T, DefthmEvent>) {
          std::optional<RewriteRule> rule;
          if (ev.rewrite) rule = rule_from_theorem(ev.name, ev.body, next);
          Term stmt = logic_term(ev.body, next);
          result = prove(ev, next, limits);
          if (result->proved) {
            next.add_theorem(Theorem{ev.name, stmt});
            if (rule) next.add_rule(std::move(*rule), true);
          }
        } else if constexpr (std::is_same_v<T, InTheoryEvent>) {
          Hint h = parse_hint(SExpr::list({SExpr::keyword("IN-THEORY"), ev.theory}), next);
          next.set_theory(next.theory().with(h.enables, h.disables));
        } else if constexpr (std::is_same_v<T, RegisterHintFnEvent>) {
          ComputedHint ch = make_computed_hint(ev.expr, next);
          next.add_hint_function(HintFunction{ev.name, {kClauseVar, kIdVar, kStableVar}, ch.expr});
        }
      },
      e);
  if (!result || result->proved) world = std::move(next);
  return result;
}

std::size_t RunReport::proved_count() const {
  std::size_t n = 0;
  for (const FileReport& f : files)
    for (const TheoremReport& t : f.theorems) n += t.proved ? 1 : 0;
  return n;
}

std::size_t RunReport::theorem_count() const {
  std::size_t n = 0;
  for (const FileReport& f : files) n += f.theorems.size();
  return n;
}

bool run_text(std::string_view text, const std::string& path, const RunOptions& opts,
              RunReport& into) {
  into.files.push_back(FileReport{path, {}});
  FileReport& file = into.files.back();
  std::vector<Event> events;
  try {
    events = parse_events(text);
  } catch (const Error& e) {
    into.diagnostics.push_back(path + ": " + e.what());
    into.exit_code = 2;
    return !opts.stop_on_failure;
  }

  World world = make_world();
  for (const Event& ev : events) {
    const DefthmEvent* thm = std::get_if<DefthmEvent>(&ev);
    try {
      std::optional<ProofResult> r = apply_event(ev, world, opts.limits);
      if (!r) continue;
      for (const std::string& w : r->warnings) into.diagnostics.push_back(path + ": " + thm->name + ": warning: " + w);
      if (r->error) into.diagnostics.push_back(path + ": " + thm->name + ": " + *r->error);
      bool ok = r->proved;
      file.theorems.push_back(TheoremReport{thm->name, ok, std::move(*r)});
      if (!ok) {
        into.exit_code = std::max(into.exit_code, 1);
        if (opts.stop_on_failure) return false;
      }
    } catch (const Error& e) {
      into.diagnostics.push_back(path + ": " + e.what());
      into.exit_code = 2;
      if (thm) file.theorems.push_back(TheoremReport{thm->name, false, {}});
      if (opts.stop_on_failure) return false;
    }
  }
  return true;
}

RunReport run_files(const std::vector<std::string>& paths, const RunOptions& opts) {
  RunReport report;
  for (const std::string& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      report.diagnostics.push_back(path + ": cannot open file");
      report.exit_code = 2;
      if (opts.stop_on_failure) break;
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!run_text(buf.str(), path, opts, report)) break;
  }
  return report;
}

std::string report(const RunReport& r, const RunOptions& opts) {
  std::ostringstream out;
  for (const FileReport& f : r.files) {
    if (r.files.size() > 1) out << "FILE " << f.path << "\n";
    for (const TheoremReport& t : f.theorems) {
      if (opts.trace)
        for (const TraceEvent& e : t.result.trace) out << format_event(e) << "\n";
      out << "DEFTHM " << t.name << (t.proved ? " PROVED" : " FAILED") << "\n";
      if (!opts.checkpoints) continue;
      for (const Checkpoint& c : t.result.checkpoints) {
        out << "CHECKPOINT " << c.goal;
        if (!c.labels.empty()) {
          out << " [";
          for (std::size_t i = 0; i < c.labels.size(); ++i) out << (i ? " " : "") << print(c.labels[i]);
          out << "]";
        }
        out << "\n" << print(unparse_clause(c.clause)) << "\n";
      }
    }
  }
  out << "PROVED " << r.proved_count() << "/" << r.theorem_count() << "\n";
  return out.str();
}

}  // namespace prover
