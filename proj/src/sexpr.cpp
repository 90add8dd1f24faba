#include "prover/sexpr.hpp"

#include "prover/error.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <variant>

namespace prover {

namespace {

struct SymbolData {
  std::string name;
};
struct KeywordData {
  std::string name;
};
struct StringData {
  std::string value;
};
struct PairData {
  SExpr car;
  SExpr cdr;
};

std::string upcase(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

struct SExpr::Node {
  std::variant<SymbolData, KeywordData, Integer, StringData, PairData> data;
};

SExpr SExpr::symbol(std::string_view name) {
  std::string n = upcase(name);
  if (n == "NIL") return SExpr();
  return SExpr(std::make_shared<const Node>(Node{SymbolData{std::move(n)}}));
}

SExpr SExpr::keyword(std::string_view name) {
  return SExpr(std::make_shared<const Node>(Node{KeywordData{upcase(name)}}));
}

SExpr SExpr::integer(Integer value) {
  return SExpr(std::make_shared<const Node>(Node{std::move(value)}));
}

SExpr SExpr::string(std::string value) {
  return SExpr(std::make_shared<const Node>(Node{StringData{std::move(value)}}));
}

SExpr SExpr::cons(SExpr car, SExpr cdr) {
  return SExpr(std::make_shared<const Node>(Node{PairData{std::move(car), std::move(cdr)}}));
}

SExpr SExpr::list(std::initializer_list<SExpr> items) {
  return list(std::span<const SExpr>(items.begin(), items.size()));
}

SExpr SExpr::list(std::span<const SExpr> items, SExpr tail) {
  SExpr out = std::move(tail);
  for (auto it = items.rbegin(); it != items.rend(); ++it) out = cons(*it, std::move(out));
  return out;
}

SExpr::Kind SExpr::kind() const {
  if (!node_) return Kind::Nil;
  switch (node_->data.index()) {
    case 0: return Kind::Symbol;
    case 1: return Kind::Keyword;
    case 2: return Kind::Integer;
    case 3: return Kind::String;
    default: return Kind::Pair;
  }
}

bool SExpr::is_symbol(std::string_view name) const {
  return is_symbol() && std::get<SymbolData>(node_->data).name == name;
}

const std::string& SExpr::name() const {
  if (is_symbol()) return std::get<SymbolData>(node_->data).name;
  if (is_keyword()) return std::get<KeywordData>(node_->data).name;
  throw Error("name() of a non-symbol: " + print(*this));
}

const Integer& SExpr::integer_value() const {
  if (!is_integer()) throw Error("not an integer: " + print(*this));
  return std::get<Integer>(node_->data);
}

const std::string& SExpr::string_value() const {
  if (!is_string()) throw Error("not a string: " + print(*this));
  return std::get<StringData>(node_->data).value;
}

const SExpr& SExpr::car() const {
  if (!is_pair()) throw Error("car of a non-pair: " + print(*this));
  return std::get<PairData>(node_->data).car;
}

const SExpr& SExpr::cdr() const {
  if (!is_pair()) throw Error("cdr of a non-pair: " + print(*this));
  return std::get<PairData>(node_->data).cdr;
}

bool SExpr::is_proper_list() const {
  const SExpr* p = this;
  while (p->is_pair()) p = &p->cdr();
  return p->is_nil();
}

std::size_t SExpr::length() const {
  std::size_t n = 0;
  for (const SExpr* p = this; p->is_pair(); p = &p->cdr()) ++n;
  return n;
}

std::vector<SExpr> SExpr::to_vector() const {
  std::vector<SExpr> out;
  const SExpr* p = this;
  for (; p->is_pair(); p = &p->cdr()) out.push_back(p->car());
  if (!p->is_nil()) throw Error("expected a proper list: " + print(*this));
  return out;
}

bool SExpr::is_form(std::string_view head) const {
  return is_pair() && car().is_symbol(head);
}

bool operator==(const SExpr& a, const SExpr& b) {
  const SExpr* x = &a;
  const SExpr* y = &b;
  while (true) {
    if (x->node_ == y->node_) return true;
    if (x->kind() != y->kind()) return false;
    switch (x->kind()) {
      case SExpr::Kind::Nil: return true;
      case SExpr::Kind::Symbol:
      case SExpr::Kind::Keyword: return x->name() == y->name();
      case SExpr::Kind::Integer: return x->integer_value() == y->integer_value();
      case SExpr::Kind::String: return x->string_value() == y->string_value();
      case SExpr::Kind::Pair:
        if (!(x->car() == y->car())) return false;
        x = &x->cdr();
        y = &y->cdr();
        break;
    }
  }
}

SExpr sym_t() {
  static const SExpr t = SExpr::symbol("T");
  return t;
}

bool self_evaluating(const SExpr& e) {
  return e.is_nil() || e.is_symbol("T") || e.is_integer() || e.is_keyword() || e.is_string();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

const char* sugar_prefix(const SExpr& e) {
  if (!e.is_pair() || !e.car().is_symbol()) return nullptr;
  const SExpr& rest = e.cdr();
  if (!rest.is_pair() || !rest.cdr().is_nil()) return nullptr;
  const std::string& h = e.car().name();
  if (h == "QUOTE") return "'";
  if (h == "QUASIQUOTE") return "`";
  if (h == "UNQUOTE") return ",";
  if (h == "UNQUOTE-SPLICING") return ",@";
  return nullptr;
}

void print_to(std::string& out, const SExpr& e, const PrintOptions& opts) {
  switch (e.kind()) {
    case SExpr::Kind::Nil: out += "NIL"; return;
    case SExpr::Kind::Symbol: out += e.name(); return;
    case SExpr::Kind::Keyword:
      out += ':';
      out += e.name();
      return;
    case SExpr::Kind::Integer: out += e.integer_value().str(); return;
    case SExpr::Kind::String:
      out += '"';
      for (char c : e.string_value()) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += '"';
      return;
    case SExpr::Kind::Pair: break;
  }
  if (opts.sugar) {
    if (const char* prefix = sugar_prefix(e)) {
      out += prefix;
      print_to(out, e.cdr().car(), opts);
      return;
    }
  }
  out += '(';
  const SExpr* p = &e;
  bool first = true;
  for (; p->is_pair(); p = &p->cdr()) {
    if (!first) out += ' ';
    first = false;
    print_to(out, p->car(), opts);
  }
  if (!p->is_nil()) {
    out += " . ";
    print_to(out, *p, opts);
  }
  out += ')';
}

}  // namespace

std::string print(const SExpr& e, PrintOptions opts) {
  std::string out;
  print_to(out, e, opts);
  return out;
}

std::ostream& operator<<(std::ostream& os, const SExpr& e) { return os << print(e); }

// ---------------------------------------------------------------------------
// Reader

namespace {

bool is_delimiter(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '\'' ||
         c == '`' || c == ',' || c == '"' || c == ';';
}

bool is_integer_token(std::string_view tok) {
  std::size_t i = 0;
  if (!tok.empty() && (tok[0] == '+' || tok[0] == '-')) i = 1;
  if (i >= tok.size()) return false;
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
  return true;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> forms;
    while (true) {
      skip_space();
      if (at_end()) break;
      if (peek() == ')') fail("unbalanced ')'");
      forms.push_back(read_form());
    }
    return forms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line_) + ": " + msg);
  }

  void advance() {
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  SExpr wrap(const char* head) {
    skip_space();
    if (at_end()) fail(std::string("end of input after ") + head + " marker");
    SExpr inner = read_form();
    return SExpr::list({SExpr::symbol(head), inner});
  }

  SExpr read_form() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    switch (c) {
      case '(':
        advance();
        return read_list_tail();
      case ')': fail("unexpected ')'");
      case '\'': advance(); return wrap("QUOTE");
      case '`': advance(); return wrap("QUASIQUOTE");
      case ',':
        advance();
        if (!at_end() && peek() == '@') {
          advance();
          return wrap("UNQUOTE-SPLICING");
        }
        return wrap("UNQUOTE");
      case '"': return read_string();
      case '#':
      case '|': fail(std::string("unsupported reader syntax '") + c + "'");
      default: return read_atom();
    }
  }

  SExpr read_list_tail() {
    std::vector<SExpr> items;
    SExpr tail;
    while (true) {
      skip_space();
      if (at_end()) fail("unterminated list");
      if (peek() == ')') {
        advance();
        break;
      }
      if (peek() == '.' && pos_ + 1 < text_.size() && is_delimiter(text_[pos_ + 1])) {
        if (items.empty()) fail("dotted pair with no car");
        advance();
        tail = read_form();
        skip_space();
        if (at_end() || peek() != ')') fail("bad dotted pair: expected ')' after the tail");
        advance();
        break;
      }
      items.push_back(read_form());
    }
    return SExpr::list(items, tail);
  }

  SExpr read_string() {
    advance();
    std::string value;
    while (true) {
      if (at_end()) fail("unterminated string");
      char c = peek();
      advance();
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail("unterminated string");
        c = peek();
        advance();
      }
      value += c;
    }
    return SExpr::string(std::move(value));
  }

  SExpr read_atom() {
    std::size_t start = pos_;
    while (!at_end() && !is_delimiter(peek())) {
      if (peek() == '#' || peek() == '|') fail("unsupported character in symbol");
      advance();
    }
    std::string_view tok = text_.substr(start, pos_ - start);
    if (tok == ".") fail("unexpected '.'");
    if (is_integer_token(tok)) {
      if (tok[0] == '+') tok.remove_prefix(1);
      return SExpr::integer(Integer(std::string(tok)));
    }
    if (tok[0] == ':') {
      if (tok.size() == 1) fail("empty keyword");
      return SExpr::keyword(tok.substr(1));
    }
    return SExpr::symbol(tok);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

std::vector<SExpr> parse(std::string_view text) { return Reader(text).read_all(); }

SExpr parse_one(std::string_view text) {
  auto forms = parse(text);
  if (forms.size() != 1)
    throw ParseError("expected exactly one form, got " + std::to_string(forms.size()));
  return forms.front();
}

}  // namespace prover
