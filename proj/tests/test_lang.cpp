#include "doctest.h"

#include <random>

#include "exegete/lang.hpp"
#include "exegete/transformers.hpp"
#include "oracle.hpp"

using namespace exegete;
using namespace exegete::lang;

namespace {

SpacePtr counter() { return StateSpace::create({{"x", Domain::integers(0, 2)}}); }

SpacePtr two_vars() { return StateSpace::create({{"x", Domain::integers(0, 2)}, {"y", Domain::integers(0, 2)}}); }

Relation run(std::string_view text, const SpacePtr& s) { return denote(*parse_program(text), s); }

// Random programs over two_vars(); assignments stay inside 0..2.
struct Gen {
    std::mt19937_64 rng;
    bool deterministic = false;

    std::string pick(std::initializer_list<const char*> xs) {
        auto it = xs.begin();
        std::advance(it, rng() % xs.size());
        return *it;
    }
    std::string expr() { return pick({"0", "1", "2", "x", "y", "(x + 1) % 3", "(x + y) % 3", "2 - y", "x * y % 3"}); }
    std::string cond() {
        return pick({"x < y", "x = 1", "!(y = 2) && x != 0", "x >= y || y = 0", "true", "false", "x + y > 2"});
    }
    std::string prog(int depth) {
        const int choices = deterministic ? 4 : 8;
        const int k = depth <= 0 ? static_cast<int>(rng() % 2) : static_cast<int>(rng() % choices);
        switch (k) {
            case 0: return pick({"x", "y"}) + " := " + expr();
            case 1: return rng() % 4 == 0 ? "skip" : pick({"x", "y"}) + " := " + expr();
            case 2: return "(" + prog(depth - 1) + "; " + prog(depth - 1) + ")";
            case 3: return "if " + cond() + " then " + prog(depth - 1) + " else " + prog(depth - 1) + " fi";
            case 4: return "(" + prog(depth - 1) + " [] " + prog(depth - 1) + ")";
            case 5: return "(" + prog(depth - 1) + ")*";
            case 6: return "assume(" + cond() + ")";
            default: return "while " + cond() + " do " + prog(depth - 1) + " od";
        }
    }
};

}  // namespace

TEST_CASE("parse shapes and precedence") {
    CHECK(parse_program("skip")->kind == Program::Kind::Skip);
    CHECK(parse_program("diverge")->kind == Program::Kind::Diverge);

    auto p = parse_program("assume(x=1); @p []  @q");
    REQUIRE(p->kind == Program::Kind::Choice);
    REQUIRE(p->first->kind == Program::Kind::Seq);
    CHECK(p->first->first->kind == Program::Kind::Assume);
    CHECK(p->first->second->kind == Program::Kind::Ref);
    CHECK(p->second->name == "q");

    auto w = parse_program("while x<2 do x := x+1 od");
    REQUIRE(w->kind == Program::Kind::While);
    CHECK(w->first->kind == Program::Kind::Assign);
    CHECK(to_string(*w) == "while x < 2 do x := x + 1 od");

    auto s = parse_program("skip; skip*");
    REQUIRE(s->kind == Program::Kind::Seq);
    CHECK(s->second->kind == Program::Kind::Star);

    CHECK(parse_program("x := 2 * 3")->expr->kind == Expr::Kind::Mul);
    CHECK(parse_program("(x := 2)*")->kind == Program::Kind::Star);
    CHECK(parse_program("skip**")->first->kind == Program::Kind::Star);
    CHECK(to_string(*parse_program("(x := 1 [] skip); skip")) == "(x := 1 [] skip); skip");
    CHECK(to_string(*parse_program("x := 1 - (2 - 3)")) == "x := 1 - (2 - 3)");
    CHECK(to_string(*parse_program("x := -x * 2")) == "x := -x * 2");
}

TEST_CASE("boolean expression parsing") {
    auto b = parse_bexpr("not x = 1 or y < 2 and true");
    REQUIRE(b->kind == BExpr::Kind::Or);
    CHECK(b->lhs->kind == BExpr::Kind::Not);
    CHECK(b->rhs->kind == BExpr::Kind::And);
    CHECK(to_string(*parse_bexpr("(x = 1 || y = 1) && !(x < y)")) == "(x = 1 || y = 1) && !(x < y)");
    // a parenthesised arithmetic operand, not a parenthesised condition
    CHECK(parse_bexpr("(x + 1) % 3 = 0")->kind == BExpr::Kind::Cmp);
}

TEST_CASE("syntax errors carry line and column") {
    try {
        parse_program("skip;\n  x := ");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.location().line == 2);
        CHECK(e.location().column == 8);  // end of input
    }
    CHECK_THROWS_AS(parse_program("if x = 1 then skip fi"), ParseError);
    CHECK_THROWS_AS(parse_program("while true do skip"), ParseError);
    CHECK_THROWS_AS(parse_program("skip skip"), ParseError);
    CHECK_THROWS_AS(parse_program("x = 1"), ParseError);
    CHECK_THROWS_AS(parse_program(""), ParseError);
    CHECK_THROWS_AS(parse_bexpr("x <"), ParseError);
    CHECK_THROWS_AS(parse_program("x := 99999999999999999999999"), ParseError);
}

TEST_CASE("eval_pred") {
    auto s = counter();
    CHECK(eval_pred(*parse_bexpr("true"), s) == Predicate(s, true));
    CHECK(eval_pred(*parse_bexpr("false"), s).empty());
    CHECK(eval_pred(*parse_bexpr("x < 2"), s) == Predicate(s, {0, 1}));
    CHECK(eval_pred(*parse_bexpr("!(x < 2) || x = 0"), s) == Predicate(s, {0, 2}));
    CHECK_THROWS_AS(eval_pred(*parse_bexpr("z < 2"), s), SemanticError);

    auto e = StateSpace::create({{"pw", Domain::values({std::string("correct"), std::string("wrong")})},
                                 {"n", Domain::integers(0, 1)}});
    CHECK(eval_pred(*parse_bexpr("pw = wrong"), e) == Predicate(e, {2, 3}));
    CHECK(eval_pred(*parse_bexpr("pw != wrong && n = 1"), e) == Predicate(e, {1}));
    CHECK_THROWS_AS(eval_pred(*parse_bexpr("pw = 1"), e), SemanticError);
    CHECK_THROWS_AS(eval_pred(*parse_bexpr("pw < wrong"), e), SemanticError);
    CHECK_THROWS_AS(eval_pred(*parse_bexpr("pw + 1 = 2"), e), SemanticError);
}

TEST_CASE("denotation examples") {
    auto s = counter();
    CHECK(run("skip", s) == identity(s));
    CHECK(run("diverge", s).empty());
    CHECK(run("while x < 2 do x := x + 1 od", s) == Relation(s, {{0, 2}, {1, 2}, {2, 2}}));
    CHECK(run("while true do skip od", s).empty());
    CHECK(run("x := 0", s) == Relation(s, {{0, 0}, {1, 0}, {2, 0}}));

    auto bit = StateSpace::create({{"x", Domain::integers(0, 1)}});
    CHECK(run("x := 0 [] x := 1", bit) == top(bit));

    CHECK(run("if x = 0 then x := 1 else diverge fi", s) == Relation(s, {{0, 1}}));
    CHECK(run("(x := (x + 1) % 3)*", s) == top(s));
    CHECK(run("assume(x > 0); x := x - 1", s) == Relation(s, {{1, 0}, {2, 1}}));
}

TEST_CASE("while is star of the guarded body followed by the exit test") {
    auto s = two_vars();
    Gen gen{std::mt19937_64(3)};
    for (int i = 0; i < 200; ++i) {
        const auto g = parse_bexpr(gen.cond());
        const auto body = parse_program(gen.prog(2));
        const Predicate gp = eval_pred(*g, s);
        const Relation expected = compose(star(compose(test(gp), denote(*body, s))), test(complement(gp)));
        CHECK(denote(*Program::while_(g, body), s) == expected);
    }
}

TEST_CASE("assignments outside the domain") {
    auto s = counter();
    CHECK_THROWS_AS(run("x := x + 1", s), DomainError);
    CHECK_THROWS_AS(run("x := 3 / (x - x)", s), DomainError);
    CHECK_THROWS_AS(run("x := 9223372036854775807 + x + 1", s), DomainError);
    // only reachable states are checked
    CHECK_NOTHROW(run("assume(x < 2); x := x + 1", s));
    CHECK_NOTHROW(run("if x < 2 then x := x + 1 else skip fi", s));
    // the loop can iterate from x = 2, so the increment is reachable there
    CHECK_THROWS_AS(run("x := 0; (x := x + 1)*", s), DomainError);
    CHECK(run("x := 0; (assume(x < 2); x := x + 1)*", s) == Relation(s, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1},
                                                                          {1, 2}, {2, 0}, {2, 1}, {2, 2}}));
    try {
        run("x := x + 1", s);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("x=2") != std::string::npos);
    }
    CHECK_THROWS_AS(run("z := 1", s), SemanticError);
}

TEST_CASE("named program references") {
    ProgramTable t;
    t["inc"] = parse_program("x := x + 1");
    t["twice"] = parse_program("@inc; @inc");
    auto s = counter();
    CHECK(denote(*resolve(parse_program("assume(x = 0); @twice"), t), s) == Relation(s, {{0, 2}}));
    CHECK_THROWS_AS(resolve(parse_program("@nope"), t), SemanticError);
    t["a"] = parse_program("@b");
    t["b"] = parse_program("skip; @a");
    CHECK_THROWS_AS(resolve(parse_program("@a"), t), SemanticError);
    CHECK_THROWS_AS(denote(*parse_program("@inc"), s), SemanticError);
}

TEST_CASE("printing round-trips through the parser") {
    Gen gen{std::mt19937_64(17)};
    for (int i = 0; i < 300; ++i) {
        const std::string text = gen.prog(4);
        const auto p = parse_program(text);
        const std::string printed = to_string(*p);
        CAPTURE(text);
        CHECK(to_string(*parse_program(printed)) == printed);
    }
}

TEST_CASE("denotation laws on random programs") {
    auto s = two_vars();
    Gen gen{std::mt19937_64(23)};
    const auto one = identity(s);
    for (int i = 0; i < 300; ++i) {
        const auto p = parse_program(gen.prog(3));
        const auto q = parse_program(gen.prog(3));
        const auto rp = denote(*p, s);
        const auto rq = denote(*q, s);
        CHECK(denote(*Program::seq(p, Program::skip()), s) == rp);
        CHECK(denote(*Program::seq(Program::skip(), p), s) == rp);
        CHECK(denote(*Program::choice(p, q), s) == denote(*Program::choice(q, p), s));
        CHECK(denote(*Program::choice(p, q), s) == unite(rp, rq));
        CHECK(denote(*Program::seq(p, q), s) == compose(rp, rq));
        const auto ps = denote(*Program::star(p), s);
        CHECK(ps == unite(one, denote(*Program::seq(p, Program::star(p)), s)));
        CHECK(oracle::from(ps) == oracle::star(oracle::from(rp)));

        const auto b = parse_bexpr(gen.cond());
        const auto c = parse_bexpr(gen.cond());
        CHECK(denote(*Program::seq(Program::assume(b), Program::assume(c)), s) ==
              test(intersect(eval_pred(*b, s), eval_pred(*c, s))));
    }
}

TEST_CASE("deterministic programs have exactly one successor per state") {
    auto s = two_vars();
    Gen gen{std::mt19937_64(29), true};
    for (int i = 0; i < 300; ++i) {
        const auto r = denote(*parse_program(gen.prog(4)), s);
        for (std::size_t st = 0; st < s->size(); ++st) {
            std::size_t successors = 0;
            for (std::size_t t = 0; t < s->size(); ++t) successors += r.contains(st, t);
            CHECK(successors == 1);
        }
    }
}
