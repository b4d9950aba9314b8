#include "exegete/topkat.hpp"

#include "exegete/error.hpp"
#include "exegete/transformers.hpp"
#include "lexer.hpp"

namespace exegete::kat {

using detail::Token;
using detail::TokenStream;

TermPtr Term::zero() { return std::make_shared<Term>(Term{Kind::Zero, {}, nullptr, nullptr}); }
TermPtr Term::one() { return std::make_shared<Term>(Term{Kind::One, {}, nullptr, nullptr}); }
TermPtr Term::top() { return std::make_shared<Term>(Term{Kind::Top, {}, nullptr, nullptr}); }
TermPtr Term::test(std::string name) {
    return std::make_shared<Term>(Term{Kind::Test, std::move(name), nullptr, nullptr});
}
TermPtr Term::neg_test(std::string name) {
    return std::make_shared<Term>(Term{Kind::NegTest, std::move(name), nullptr, nullptr});
}
TermPtr Term::prog(std::string name) {
    return std::make_shared<Term>(Term{Kind::Prog, std::move(name), nullptr, nullptr});
}
TermPtr Term::plus(TermPtr a, TermPtr b) {
    return std::make_shared<Term>(Term{Kind::Plus, {}, std::move(a), std::move(b)});
}
TermPtr Term::dot(TermPtr a, TermPtr b) {
    return std::make_shared<Term>(Term{Kind::Dot, {}, std::move(a), std::move(b)});
}
TermPtr Term::star(TermPtr a) { return std::make_shared<Term>(Term{Kind::Star, {}, std::move(a), nullptr}); }

TermPtr seq(std::initializer_list<TermPtr> parts) {
    TermPtr out;
    for (const auto& p : parts) out = out ? Term::dot(out, p) : p;
    if (!out) return Term::one();
    return out;
}

namespace {

int precedence(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Plus: return 0;
        case Term::Kind::Dot: return 1;
        case Term::Kind::Star: return 2;
        default: return 3;
    }
}

std::string print(const Term& t, int ctx) {
    std::string s;
    switch (t.kind) {
        case Term::Kind::Zero: s = "0"; break;
        case Term::Kind::One: s = "1"; break;
        case Term::Kind::Top: s = "top"; break;
        case Term::Kind::Test:
        case Term::Kind::Prog: s = t.symbol; break;
        case Term::Kind::NegTest: s = "!" + t.symbol; break;
        case Term::Kind::Plus: s = print(*t.lhs, 0) + " + " + print(*t.rhs, 1); break;
        case Term::Kind::Dot: s = print(*t.lhs, 1) + ";" + print(*t.rhs, 2); break;
        case Term::Kind::Star: s = print(*t.lhs, 3) + "*"; break;
    }
    return precedence(t) < ctx ? "(" + s + ")" : s;
}

class TermParser {
public:
    TermParser(std::string_view text, const std::set<std::string>& tests) : ts_(text), tests_(tests) {}

    TermPtr parse() {
        TermPtr t = plus();
        ts_.expect_end();
        return t;
    }

private:
    TermPtr plus() {
        TermPtr t = dot();
        while (ts_.accept_punct("+")) t = Term::plus(t, dot());
        return t;
    }
    TermPtr dot() {
        TermPtr t = post();
        while (ts_.accept_punct(";")) t = Term::dot(t, post());
        return t;
    }
    TermPtr post() {
        TermPtr t = atom();
        while (ts_.accept_punct("*")) t = Term::star(t);
        return t;
    }
    TermPtr atom() {
        const Token& tok = ts_.peek();
        if (tok.kind == Token::Kind::Int) {
            if (tok.text == "0") return ts_.next(), Term::zero();
            if (tok.text == "1") return ts_.next(), Term::one();
            ts_.fail("only the constants 0 and 1 are terms");
        }
        if (ts_.accept_word("top")) return Term::top();
        if (ts_.accept_punct("!")) {
            const Token& id = ts_.peek();
            if (id.kind != Token::Kind::Ident) ts_.fail("expected a test symbol after '!'");
            if (!tests_.count(id.text))
                throw ParseError(id.loc, "'" + id.text + "' is not a test; only tests can be negated");
            return Term::neg_test(ts_.next().text);
        }
        if (tok.kind == Token::Kind::Ident) {
            std::string name = ts_.next().text;
            return tests_.count(name) ? Term::test(std::move(name)) : Term::prog(std::move(name));
        }
        if (ts_.accept_punct("(")) {
            TermPtr t = plus();
            ts_.expect_punct(")");
            return t;
        }
        ts_.fail("expected a term");
    }

    TokenStream ts_;
    const std::set<std::string>& tests_;
};

const Predicate& lookup_test(const Interpretation& i, const std::string& name) {
    auto it = i.tests.find(name);
    if (it == i.tests.end()) throw SemanticError("unmapped test symbol '" + name + "'");
    return it->second;
}

}  // namespace

std::string to_string(const Term& t) { return print(t, 0); }

TermPtr parse_term(std::string_view text, const std::set<std::string>& test_symbols) {
    return TermParser(text, test_symbols).parse();
}

Relation eval(const Term& t, const Interpretation& i) {
    switch (t.kind) {
        case Term::Kind::Zero: return empty_relation(i.space);
        case Term::Kind::One: return identity(i.space);
        case Term::Kind::Top: return top(i.space);
        case Term::Kind::Test: return test(lookup_test(i, t.symbol));
        case Term::Kind::NegTest: return test(complement(lookup_test(i, t.symbol)));
        case Term::Kind::Prog: {
            auto it = i.progs.find(t.symbol);
            if (it == i.progs.end()) throw SemanticError("unmapped program symbol '" + t.symbol + "'");
            require_same_space(*it->second.space(), *i.space);
            return it->second;
        }
        case Term::Kind::Plus: return unite(eval(*t.lhs, i), eval(*t.rhs, i));
        case Term::Kind::Dot: return compose(eval(*t.lhs, i), eval(*t.rhs, i));
        case Term::Kind::Star: return star(eval(*t.lhs, i));
    }
    throw Error("unknown term kind");
}

std::string_view label(Encoding e) {
    switch (e) {
        case Encoding::PartialCorrectness: return "partial-correctness";
        case Encoding::Incorrectness: return "incorrectness";
        case Encoding::AngelicTotalCorrectness: return "angelic-total-correctness";
        case Encoding::PartialIncorrectness: return "partial-incorrectness";
        case Encoding::TopBpcTopPc: return "topbpc-toppc";
        case Encoding::BpcTopBpTop: return "bpctop-bptop";
    }
    return "?";
}

std::optional<Encoding> encoding_from_label(std::string_view l) {
    for (auto e : kAllEncodings)
        if (label(e) == l) return e;
    return std::nullopt;
}

std::string_view transformer_statement(Encoding e) {
    switch (e) {
        case Encoding::PartialCorrectness: return "asp(b) <= c";
        case Encoding::Incorrectness: return "c <= asp(b)";
        case Encoding::AngelicTotalCorrectness: return "b <= awp(c)";
        case Encoding::PartialIncorrectness: return "awp(c) <= b";
        case Encoding::TopBpcTopPc: return "c <= aslp(b)";
        case Encoding::BpcTopBpTop: return "b <= awlp(c)";
    }
    return "?";
}

EncodedEquation encode(Encoding e, const std::string& b, const std::string& p, const std::string& c) {
    const auto T = Term::top();
    const auto B = Term::test(b);
    const auto P = Term::prog(p);
    const auto C = Term::test(c);
    const std::string name(label(e));
    switch (e) {
        case Encoding::PartialCorrectness: return {name, seq({T, B, P, C}), seq({T, B, P})};
        case Encoding::Incorrectness: return {name, seq({T, B, P, C}), seq({T, C})};
        case Encoding::AngelicTotalCorrectness: return {name, seq({B, P, C, T}), seq({B, T})};
        case Encoding::PartialIncorrectness: return {name, seq({B, P, C, T}), seq({P, C, T})};
        case Encoding::TopBpcTopPc: return {name, seq({T, B, P, C}), seq({T, P, C})};
        case Encoding::BpcTopBpTop: return {name, seq({B, P, C, T}), seq({B, P, T})};
    }
    throw Error("unknown encoding");
}

EncodedEquation encode(std::string_view l, const std::string& b, const std::string& p, const std::string& c) {
    auto e = encoding_from_label(l);
    if (!e) throw SemanticError("unknown encoding '" + std::string(l) + "'");
    return encode(*e, b, p, c);
}

bool equation_holds(const EncodedEquation& eq, const Interpretation& i) {
    return equals(eval(*eq.lhs, i), eval(*eq.rhs, i));
}

bool transformer_verdict(Encoding e, const Relation& r, const Predicate& b, const Predicate& c) {
    switch (e) {
        case Encoding::PartialCorrectness: return subset(asp(r, b), c);
        case Encoding::Incorrectness: return subset(c, asp(r, b));
        case Encoding::AngelicTotalCorrectness: return subset(b, awp(r, c));
        case Encoding::PartialIncorrectness: return subset(awp(r, c), b);
        case Encoding::TopBpcTopPc: return subset(c, aslp(r, b));
        case Encoding::BpcTopBpTop: return subset(b, awlp(r, c));
    }
    throw Error("unknown encoding");
}

CorrespondenceReport correspondence(Encoding e, const Interpretation& i, const std::string& b,
                                    const std::string& p, const std::string& c) {
    const bool eq = equation_holds(encode(e, b, p, c), i);
    auto pit = i.progs.find(p);
    if (pit == i.progs.end()) throw SemanticError("unmapped program symbol '" + p + "'");
    const bool tr = transformer_verdict(e, pit->second, lookup_test(i, b), lookup_test(i, c));
    return {e, eq, tr};
}

}  // namespace exegete::kat
