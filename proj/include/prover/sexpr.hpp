#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prover {

using Integer = boost::multiprecision::cpp_int;

// Immutable s-expression value. Nil is the default-constructed value; every
// other variant lives in a shared node, so copies are cheap.
class SExpr {
 public:
  enum class Kind { Nil, Symbol, Keyword, Integer, String, Pair };

  SExpr() = default;

  // Symbol names are uppercased; "NIL" yields Nil.
  static SExpr symbol(std::string_view name);
  // Name without the leading colon; uppercased.
  static SExpr keyword(std::string_view name);
  static SExpr integer(Integer value);
  static SExpr string(std::string value);
  static SExpr cons(SExpr car, SExpr cdr);
  static SExpr list(std::initializer_list<SExpr> items);
  static SExpr list(std::span<const SExpr> items, SExpr tail = SExpr());

  Kind kind() const;
  bool is_nil() const { return node_ == nullptr; }
  bool is_symbol() const { return kind() == Kind::Symbol; }
  bool is_symbol(std::string_view name) const;
  bool is_keyword() const { return kind() == Kind::Keyword; }
  bool is_integer() const { return kind() == Kind::Integer; }
  bool is_string() const { return kind() == Kind::String; }
  bool is_pair() const { return kind() == Kind::Pair; }
  bool is_atom() const { return !is_pair(); }

  // Symbol or keyword name.
  const std::string& name() const;
  const Integer& integer_value() const;
  const std::string& string_value() const;
  const SExpr& car() const;
  const SExpr& cdr() const;

  bool is_proper_list() const;
  // Number of leading pairs.
  std::size_t length() const;
  // Throws Error when the list is improper.
  std::vector<SExpr> to_vector() const;
  // (HEAD ...) with a symbol head.
  bool is_form(std::string_view head) const;

  friend bool operator==(const SExpr& a, const SExpr& b);

 private:
  struct Node;
  explicit SExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline const SExpr kNil{};
SExpr sym_t();

struct PrintOptions {
  // Print (QUOTE x) as 'x and the quasiquote family with their reader sugar.
  bool sugar = false;
};

std::string print(const SExpr& e, PrintOptions opts = {});
std::ostream& operator<<(std::ostream& os, const SExpr& e);

// Reads every form in `text`. Throws ParseError.
std::vector<SExpr> parse(std::string_view text);
// Reads exactly one form.
SExpr parse_one(std::string_view text);

// True for NIL, T, integers, keywords, and strings.
bool self_evaluating(const SExpr& e);

}  // namespace prover
