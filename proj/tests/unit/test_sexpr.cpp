#include "support.hpp"

#include "prover/error.hpp"

#include <doctest.h>

using namespace prover;
using support::sx;

TEST_CASE("reading plain lists") {
  SExpr e = sx("(foo a b)");
  CHECK(e == SExpr::list({SExpr::symbol("FOO"), SExpr::symbol("A"), SExpr::symbol("B")}));
  CHECK(print(e) == "(FOO A B)");
}

TEST_CASE("reader macros") {
  CHECK(print(sx("`'(:expand ((f ,(hq g))))")) ==
        "(QUASIQUOTE (QUOTE (:EXPAND ((F (UNQUOTE (HQ G)))))))");
  CHECK(print(sx("'nil")) == "(QUOTE NIL)");
  CHECK(print(sx("(a ,@xs)")) == "(A (UNQUOTE-SPLICING XS))");
  CHECK(print(sx("''x")) == "(QUOTE (QUOTE X))");
}

TEST_CASE("atoms") {
  CHECK(sx("nil").is_nil());
  CHECK(sx("()").is_nil());
  CHECK(sx(":Expand").is_keyword());
  CHECK(sx(":Expand").name() == "EXPAND");
  CHECK(print(sx(":expand")) == ":EXPAND");
  CHECK(sx("-17").integer_value() == -17);
  CHECK(sx("+5").integer_value() == 5);
  CHECK(sx("123456789012345678901234567890").integer_value() ==
        Integer("123456789012345678901234567890"));
  CHECK(sx("1+").is_symbol());
  CHECK(sx("-").is_symbol());
  CHECK(sx("\"a \\\"b\\\" c\"").string_value() == "a \"b\" c");
  CHECK(sx("foo") == sx("FOO"));
  CHECK(sx("t") == sym_t());
}

TEST_CASE("dotted pairs and comments") {
  SExpr e = sx("(a . b)");
  CHECK(e.car() == SExpr::symbol("A"));
  CHECK(e.cdr() == SExpr::symbol("B"));
  CHECK(print(e) == "(A . B)");
  CHECK(print(sx("(a b . c)")) == "(A B . C)");
  CHECK(sx("(a . (b c))") == sx("(a b c)"));
  std::vector<SExpr> forms = parse("; leading\n(a) ; trailing\n b ;; end");
  REQUIRE(forms.size() == 2);
  CHECK(forms[1] == SExpr::symbol("B"));
}

TEST_CASE("sugared printing") {
  PrintOptions sugar{true};
  CHECK(print(sx("'nil"), sugar) == "'NIL");
  CHECK(print(sx("`(a ,b ,@c)"), sugar) == "`(A ,B ,@C)");
  CHECK(print(sx("(quote a b)"), sugar) == "(QUOTE A B)");
  CHECK(print(sx("'(:EXPAND ((FA (BAR (FOO A B) C) (BAZ (FOO A B) D))))").cdr().car()) ==
        "(:EXPAND ((FA (BAR (FOO A B) C) (BAZ (FOO A B) D))))");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse("(a b"), ParseError);
  CHECK_THROWS_AS(parse(")"), ParseError);
  CHECK_THROWS_AS(parse("(a . )"), ParseError);
  CHECK_THROWS_AS(parse("( . a)"), ParseError);
  CHECK_THROWS_AS(parse("(a . b c)"), ParseError);
  CHECK_THROWS_AS(parse("'"), ParseError);
  CHECK_THROWS_AS(parse("\"open"), ParseError);
  CHECK_THROWS_AS(parse("#(1 2)"), ParseError);
  CHECK_THROWS_AS(parse_one("a b"), ParseError);
  // A stray comma is read structurally; translation rejects it later.
  CHECK(print(sx(",x")) == "(UNQUOTE X)");
}

TEST_CASE("round trip on random values") {
  support::Gen gen(20240611);
  for (int i = 0; i < 1000; ++i) {
    SExpr e = gen.sexpr(5);
    std::string plain = print(e);
    std::vector<SExpr> back = parse(plain);
    REQUIRE(back.size() == 1);
    CHECK_MESSAGE(back[0] == e, plain);
    std::string sugared = print(e, PrintOptions{true});
    CHECK_MESSAGE(parse_one(sugared) == e, sugared);
  }
}

TEST_CASE("equality is structural") {
  support::Gen gen(7);
  for (int i = 0; i < 200; ++i) {
    SExpr e = gen.sexpr(4);
    CHECK(parse_one(print(e)) == e);
    CHECK_FALSE(SExpr::cons(e, SExpr()) == SExpr::cons(SExpr(), SExpr::cons(e, SExpr())));
  }
  CHECK_FALSE(SExpr::keyword("A") == SExpr::symbol("A"));
  CHECK_FALSE(SExpr::string("A") == SExpr::symbol("A"));
}

TEST_CASE("deep lists do not overflow") {
  std::string text;
  for (int i = 0; i < 20000; ++i) text += "a ";
  SExpr e = parse_one("(" + text + ")");
  CHECK(e.length() == 20000);
  CHECK(parse_one(print(e)) == e);
}
