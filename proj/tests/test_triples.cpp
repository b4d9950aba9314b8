#include "doctest.h"

#include "exegete/error.hpp"
#include "exegete/transformers.hpp"
#include "exegete/triples.hpp"
#include "oracle.hpp"

using namespace exegete;

namespace {

// Each reading written directly against the naive oracle.
bool oracle_holds(Exegesis e, const oracle::Rel& r, const oracle::Pred& b, const oracle::Pred& c) {
    using namespace oracle;
    switch (e) {
        case Exegesis::TotalCorrectness: return sub(b, awp(r, c));
        case Exegesis::ExegesisV: return sub(dwlp(r, c), b);
        case Exegesis::PartialCorrectness: return sub(b, dwlp(r, c));
        case Exegesis::PartialIncorrectness: return sub(awp(r, c), b);
        case Exegesis::ExegesisVI: return sub(dslp(r, b), c);
        case Exegesis::Incorrectness: return sub(c, asp(r, b));
        case Exegesis::AngelicLiberalLhs: return sub(b, awlp(r, c));
        case Exegesis::AngelicLiberalRhs: return sub(c, aslp(r, b));
        case Exegesis::BugWitness: {
            for (std::size_t s = 0; s < r.size(); ++s)
                for (std::size_t t = 0; t < r.size(); ++t)
                    if (b[s] && c[t] && r[s][t]) return true;
            return false;
        }
        case Exegesis::DemonicTotalCorrectness: return sub(b, dwp(r, c));
    }
    return false;
}

}  // namespace

TEST_CASE("labels round-trip and catalogue order") {
    CHECK(kExegeses.size() == 10);
    for (std::size_t i = 0; i < kExegeses.size(); ++i) {
        CHECK(static_cast<std::size_t>(kExegeses[i].id) == i);
        CHECK(exegesis_from_label(kExegeses[i].label) == kExegeses[i].id);
        CHECK(&info(kExegeses[i].id) == &kExegeses[i]);
        if (auto partner = kExegeses[i].contrapositive) CHECK(info(*partner).contrapositive == kExegeses[i].id);
    }
    CHECK_FALSE(exegesis_from_label("total"));
    CHECK(info(Exegesis::PartialCorrectness).galois_formula == "asp(b) <= c");
    CHECK(info(Exegesis::PartialIncorrectness).galois_formula == "c <= dslp(b)");
}

TEST_CASE("triple construction validates spaces") {
    auto a = StateSpace::anonymous(2);
    auto b = StateSpace::anonymous(3);
    CHECK_THROWS_AS(Triple(Predicate(a), identity(b), Predicate(b)), SpaceMismatch);
    CHECK_THROWS_AS(Triple(Predicate(b), identity(b), Predicate(a)), SpaceMismatch);
}

TEST_CASE("simple verdicts") {
    auto s = StateSpace::anonymous(3);
    const Predicate b(s, {0, 1});
    const Predicate c(s, {2});
    CHECK(holds(Exegesis::PartialCorrectness, Triple(b, identity(s), b)));
    CHECK_FALSE(holds(Exegesis::TotalCorrectness, Triple(b, empty_relation(s), c)));
    CHECK(holds(Exegesis::PartialCorrectness, Triple(b, empty_relation(s), c)));

    const Predicate full(s, true);
    for (auto e : {Exegesis::TotalCorrectness, Exegesis::PartialCorrectness, Exegesis::Incorrectness,
                   Exegesis::PartialIncorrectness, Exegesis::ExegesisV, Exegesis::ExegesisVI})
        CHECK(holds(e, Triple(full, identity(s), full)));

    const Predicate none(s);
    const Relation some(s, {{0, 1}, {2, 2}});
    CHECK(holds(Exegesis::PartialCorrectness, Triple(none, some, none)));
    CHECK(holds(Exegesis::TotalCorrectness, Triple(none, some, none)));
    CHECK_FALSE(holds(Exegesis::BugWitness, Triple(none, some, none)));
}

TEST_CASE("two-state branching model") {
    auto s = StateSpace::anonymous(2);
    const Triple t(Predicate(s, {0}), Relation(s, {{0, 0}, {0, 1}}), Predicate(s, {1}));
    CHECK(holds(Exegesis::TotalCorrectness, t));
    CHECK_FALSE(holds(Exegesis::PartialCorrectness, t));
    CHECK(holds_galois_form(Exegesis::PartialCorrectness, t) == false);
    // demonic/angelic gap
    CHECK_FALSE(holds(Exegesis::DemonicTotalCorrectness, t));
    CHECK(bug_witness(t) == StatePair{0, 1});

    const Matrix m = matrix(t);
    REQUIRE(m.entries.size() == 10);
    for (std::size_t i = 0; i < m.entries.size(); ++i) {
        CHECK(m.entries[i].exegesis == kExegeses[i].id);
        CHECK(m.entries[i].verdict == holds(kExegeses[i].id, t));
        if (m.entries[i].contrapositive_verdict) CHECK(*m.entries[i].contrapositive_verdict == m.entries[i].verdict);
        if (m.entries[i].galois_verdict) CHECK(*m.entries[i].galois_verdict == m.entries[i].verdict);
    }
    CHECK(m.witness == StatePair{0, 1});
}

TEST_CASE("bug witness picks the lexicographically smallest pair") {
    auto s = StateSpace::anonymous(2);
    const Predicate full(s, true);
    CHECK(bug_witness(Triple(full, identity(s), full)) == StatePair{0, 0});
    CHECK_FALSE(bug_witness(Triple(full, empty_relation(s), full)));
    auto s4 = StateSpace::anonymous(4);
    const Relation r(s4, {{3, 0}, {1, 3}, {1, 2}, {2, 1}});
    CHECK(bug_witness(Triple(Predicate(s4, {1, 2, 3}), r, Predicate(s4, {1, 2, 3}))) == StatePair{1, 2});
}

TEST_CASE("every reading matches its oracle definition, exhaustive |S| <= 3") {
    std::uint64_t bad = 0;
    oracle::for_each_model(3, [&](const oracle::Model& m) {
        const auto r = oracle::from(m.r);
        const auto b = oracle::from(m.b);
        const auto c = oracle::from(m.c);
        const Triple t(m.b, m.r, m.c);
        for (const auto& e : kExegeses) bad += holds(e.id, t) != oracle_holds(e.id, r, b, c);
        bad += holds_galois_form(Exegesis::PartialCorrectness, t) != holds(Exegesis::PartialCorrectness, t);
        bad += holds_galois_form(Exegesis::PartialIncorrectness, t) != holds(Exegesis::PartialIncorrectness, t);
        bad += holds_galois_form(Exegesis::TotalCorrectness, t).has_value();
        // witness present iff the bug reading holds, and it really is a witness
        const auto w = bug_witness(t);
        bad += w.has_value() != holds(Exegesis::BugWitness, t);
        if (w) bad += !(m.b.contains(w->first) && m.c.contains(w->second) && m.r.contains(w->first, w->second));
        // the bug reading is the negation of partial correctness against !c
        bad += holds(Exegesis::BugWitness, t) == subset(asp(m.r, m.b), complement(m.c));
        // demonic total correctness implies the angelic one
        bad += holds(Exegesis::DemonicTotalCorrectness, t) && !holds(Exegesis::TotalCorrectness, t);
    });
    CHECK(bad == 0);
}

TEST_CASE("Galois and contrapositive law reports, exhaustive |S| <= 3") {
    std::uint64_t bad = 0;
    oracle::for_each_model(3, [&](const oracle::Model& m) {
        const auto g = check_galois(m.r, m.b, m.c);
        const auto c = check_contrapositive(m.r, m.b, m.c);
        bad += g.edges.size() != 2 || c.edges.size() != 4;
        bad += !g.ok() || !c.ok();
        // independent restatement of the contrapositive edges
        const auto r = oracle::from(m.r);
        const auto b = oracle::from(m.b);
        const auto cc = oracle::from(m.c);
        using namespace oracle;
        bad += sub(b, dwlp(r, cc)) != sub(awp(r, neg(cc)), neg(b));
        bad += sub(b, awp(r, cc)) != sub(dwlp(r, neg(cc)), neg(b));
        bad += sub(asp(r, b), cc) != sub(neg(cc), dslp(r, neg(b)));
        bad += sub(cc, asp(r, b)) != sub(dslp(r, neg(b)), neg(cc));
    });
    CHECK(bad == 0);
}

TEST_CASE("law edges on trivial inputs") {
    auto s = StateSpace::anonymous(3);
    const Predicate none(s);
    const Predicate full(s, true);
    const Predicate b(s, {1});
    auto g = check_galois(empty_relation(s), b, none);
    CHECK(g.edges[0].lhs);
    CHECK(g.edges[0].rhs);
    g = check_galois(identity(s), b, b);
    CHECK(g.edges[0].lhs);
    CHECK(g.edges[0].rhs);
    const Relation r(s, {{0, 1}, {1, 2}});
    auto c = check_contrapositive(r, none, b);
    CHECK(c.edges[0].lhs);
    CHECK(c.edges[0].rhs);
    c = check_contrapositive(r, b, full);
    CHECK(c.edges[0].lhs);
    CHECK(c.edges[0].rhs);
}
