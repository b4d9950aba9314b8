#include "doctest.h"

#include <random>

#include "exegete/error.hpp"
#include "exegete/topkat.hpp"
#include "exegete/transformers.hpp"
#include "oracle.hpp"

using namespace exegete;
using namespace exegete::kat;

namespace {

// Term semantics computed with the naive oracle only.
oracle::Rel oracle_eval(const Term& t, const Interpretation& i) {
    const std::size_t n = i.space->size();
    switch (t.kind) {
        case Term::Kind::Zero: return oracle::empty(n);
        case Term::Kind::One: return oracle::id(n);
        case Term::Kind::Top: {
            oracle::Rel r = oracle::empty(n);
            for (auto& row : r) row.assign(n, true);
            return r;
        }
        case Term::Kind::Test: return oracle::test(oracle::from(i.tests.at(t.symbol)));
        case Term::Kind::NegTest: return oracle::test(oracle::neg(oracle::from(i.tests.at(t.symbol))));
        case Term::Kind::Prog: return oracle::from(i.progs.at(t.symbol));
        case Term::Kind::Plus: return oracle::unite(oracle_eval(*t.lhs, i), oracle_eval(*t.rhs, i));
        case Term::Kind::Dot: return oracle::compose(oracle_eval(*t.lhs, i), oracle_eval(*t.rhs, i));
        case Term::Kind::Star: return oracle::star(oracle_eval(*t.lhs, i));
    }
    return {};
}

TermPtr random_term(std::mt19937_64& rng, int depth) {
    const int k = depth <= 0 ? static_cast<int>(rng() % 6) : static_cast<int>(rng() % 9);
    switch (k) {
        case 0: return Term::test("b");
        case 1: return Term::neg_test("c");
        case 2: return Term::prog(rng() % 2 ? "p" : "q");
        case 3: return rng() % 2 ? Term::one() : Term::zero();
        case 4: return Term::top();
        case 5: return Term::prog("p");
        case 6: return Term::plus(random_term(rng, depth - 1), random_term(rng, depth - 1));
        case 7: return Term::dot(random_term(rng, depth - 1), random_term(rng, depth - 1));
        default: return Term::star(random_term(rng, depth - 1));
    }
}

Interpretation model(const Relation& r, const Predicate& b, const Predicate& c) {
    Interpretation i(r.space());
    i.progs.emplace("p", r);
    i.tests.emplace("b", b);
    i.tests.emplace("c", c);
    return i;
}

// The transformer side of each encoding, computed with the oracle.
bool oracle_verdict(Encoding e, const oracle::Rel& r, const oracle::Pred& b, const oracle::Pred& c) {
    using namespace oracle;
    switch (e) {
        case Encoding::PartialCorrectness: return sub(asp(r, b), c);
        case Encoding::Incorrectness: return sub(c, asp(r, b));
        case Encoding::AngelicTotalCorrectness: return sub(b, awp(r, c));
        case Encoding::PartialIncorrectness: return sub(awp(r, c), b);
        case Encoding::TopBpcTopPc: return sub(c, aslp(r, b));
        case Encoding::BpcTopBpTop: return sub(b, awlp(r, c));
    }
    return false;
}

}  // namespace

TEST_CASE("eval on hand-written terms") {
    auto s = StateSpace::anonymous(2);
    auto i = model(Relation(s, {{0, 1}}), Predicate(s, {0}), Predicate(s, {1}));
    i.tests.emplace("f", Predicate(s));
    CHECK(eval(*Term::dot(Term::one(), Term::prog("p")), i) == i.progs.at("p"));
    CHECK(eval(*Term::test("f"), i).empty());
    CHECK(eval(*seq({Term::test("b"), Term::prog("p"), Term::test("c")}), i) == Relation(s, {{0, 1}}));
    CHECK(eval(*Term::neg_test("b"), i) == Relation(s, {{1, 1}}));
    CHECK(eval(*Term::dot(Term::top(), Term::top()), i) == top(s));
    CHECK_THROWS_AS(eval(*Term::prog("nope"), i), SemanticError);
    CHECK_THROWS_AS(eval(*Term::test("nope"), i), SemanticError);
}

TEST_CASE("term parsing") {
    const std::set<std::string> tests{"b", "c"};
    auto t = parse_term("top;b;p;c + p*;!c", tests);
    REQUIRE(t->kind == Term::Kind::Plus);
    CHECK(to_string(*t) == "top;b;p;c + p*;!c");
    CHECK(parse_term("b", tests)->kind == Term::Kind::Test);
    CHECK(parse_term("p", tests)->kind == Term::Kind::Prog);
    CHECK(parse_term("(p + 1)*", tests)->kind == Term::Kind::Star);
    CHECK(to_string(*parse_term("(p;q)*;(b + c)", tests)) == "(p;q)*;(b + c)");
    CHECK_THROWS_AS(parse_term("!p", tests), ParseError);
    CHECK_THROWS_AS(parse_term("p;", tests), ParseError);
    CHECK_THROWS_AS(parse_term("p q", tests), ParseError);
}

TEST_CASE("encodings have the documented shape") {
    CHECK(to_string(*encode(Encoding::PartialCorrectness, "b", "p", "c").lhs) == "top;b;p;c");
    CHECK(to_string(*encode(Encoding::PartialCorrectness, "b", "p", "c").rhs) == "top;b;p");
    CHECK(to_string(*encode(Encoding::Incorrectness, "b", "p", "c").rhs) == "top;c");
    CHECK(to_string(*encode(Encoding::AngelicTotalCorrectness, "b", "p", "c").lhs) == "b;p;c;top");
    CHECK(to_string(*encode(Encoding::AngelicTotalCorrectness, "b", "p", "c").rhs) == "b;top");
    CHECK(to_string(*encode(Encoding::PartialIncorrectness, "b", "p", "c").rhs) == "p;c;top");
    CHECK(to_string(*encode(Encoding::TopBpcTopPc, "b", "p", "c").rhs) == "top;p;c");
    CHECK(to_string(*encode(Encoding::BpcTopBpTop, "b", "p", "c").rhs) == "b;p;top");
    for (auto e : kAllEncodings) {
        CHECK(encoding_from_label(label(e)) == e);
        CHECK(encode(label(e), "b", "p", "c").name == label(e));
    }
    CHECK_THROWS_AS(encode("total-correctness", "b", "p", "c"), SemanticError);
}

TEST_CASE("equation_holds on boundary models") {
    auto s = StateSpace::anonymous(3);
    const Predicate b(s, {0, 2});
    auto i = model(identity(s), b, b);
    CHECK(equation_holds(encode(Encoding::PartialCorrectness, "b", "p", "c"), i));
    auto j = model(Relation(s, {{0, 1}, {2, 0}}), b, Predicate(s));
    CHECK(equation_holds(encode(Encoding::Incorrectness, "b", "p", "c"), j));
}

TEST_CASE("the demonic gap model") {
    auto s = StateSpace::anonymous(2);
    const Relation r(s, {{0, 0}, {0, 1}});
    const Predicate b(s, {0});
    const Predicate c(s, {1});
    auto i = model(r, b, c);
    CHECK(equation_holds(encode(Encoding::AngelicTotalCorrectness, "b", "p", "c"), i));
    CHECK_FALSE(subset(b, dwp(r, c)));
    CHECK(subset(b, awp(r, c)));
    const auto rep = correspondence(Encoding::AngelicTotalCorrectness, i, "b", "p", "c");
    CHECK(rep.equation);
    CHECK(rep.transformer);
    CHECK(rep.agrees());
}

TEST_CASE("eval is a homomorphism onto the naive semantics") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 400; ++trial) {
        auto s = StateSpace::anonymous(1 + rng() % 7);
        Interpretation i(s);
        i.progs.emplace("p", oracle::random_relation(s, rng));
        i.progs.emplace("q", oracle::random_relation(s, rng));
        i.tests.emplace("b", oracle::random_predicate(s, rng));
        i.tests.emplace("c", oracle::random_predicate(s, rng));
        const auto t = random_term(rng, 5);
        const auto u = random_term(rng, 3);
        CAPTURE(to_string(*t));
        const auto et = eval(*t, i);
        CHECK(oracle::from(et) == oracle_eval(*t, i));
        CHECK(eval(*Term::plus(t, u), i) == unite(et, eval(*u, i)));
        CHECK(eval(*Term::dot(t, u), i) == compose(et, eval(*u, i)));
        CHECK(eval(*Term::star(t), i) == star(et));
        CHECK(subset(et, top(s)));
        CHECK(eval(*Term::dot(Term::test("b"), Term::test("b")), i) == eval(*Term::test("b"), i));
        CHECK(eval(*Term::dot(Term::test("b"), Term::neg_test("b")), i).empty());
        // parse(print(t)) denotes the same relation
        CHECK(eval(*parse_term(to_string(*t), {"b", "c"}), i) == et);
    }
}

TEST_CASE("the six correspondences, exhaustive |S| <= 3") {
    std::uint64_t bad = 0;
    std::uint64_t disagree_with_oracle = 0;
    std::uint64_t one_state = 0;
    oracle::for_each_model(3, [&](const oracle::Model& m) {
        const auto i = model(m.r, m.b, m.c);
        const auto r = oracle::from(m.r);
        const auto b = oracle::from(m.b);
        const auto c = oracle::from(m.c);
        for (auto e : kAllEncodings) {
            const auto rep = correspondence(e, i, "b", "p", "c");
            bad += !rep.agrees();
            disagree_with_oracle += rep.transformer != oracle_verdict(e, r, b, c);
            disagree_with_oracle += rep.transformer != transformer_verdict(e, m.r, m.b, m.c);
        }
        one_state += m.r.size() == 1;
    });
    CHECK(bad == 0);
    CHECK(disagree_with_oracle == 0);
    CHECK(one_state == 8);  // 2 relations x 2 x 2 predicates
}

TEST_CASE("the six correspondences on random |S| = 6 models") {
    std::mt19937_64 rng(2024);
    auto s = StateSpace::anonymous(6);
    std::uint64_t bad = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const auto i = model(oracle::random_relation(s, rng), oracle::random_predicate(s, rng),
                             oracle::random_predicate(s, rng));
        for (auto e : kAllEncodings) bad += !correspondence(e, i, "b", "p", "c").agrees();
    }
    CHECK(bad == 0);
}
