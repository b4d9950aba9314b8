#pragma once

// Kleene algebra with top and tests, interpreted over relations.
//
// Tests denote sub-identities (filters), programs denote arbitrary
// relations, `top` is the universal relation. Prefixing top to a term
// compares codomains; suffixing it compares domains. Every triple reading
// that only quantifies over the relation's graph becomes an equation:
//
//   partial-correctness        top;b;p;c = top;b;p
//   incorrectness              top;b;p;c = top;c
//   angelic-total-correctness  b;p;c;top = b;top
//   partial-incorrectness      b;p;c;top = p;c;top
//   topbpc-toppc               top;b;p;c = top;p;c
//   bpctop-bptop               b;p;c;top = b;p;top
//
// Demonic total correctness has no such equation: divergence leaves no
// trace in the relation.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "exegete/relalg.hpp"

namespace exegete::kat {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Zero, One, Top, Test, NegTest, Prog, Plus, Dot, Star };

    Kind kind;
    std::string symbol;  // Test, NegTest, Prog
    TermPtr lhs;         // Plus, Dot, Star
    TermPtr rhs;         // Plus, Dot

    static TermPtr zero();
    static TermPtr one();
    static TermPtr top();
    static TermPtr test(std::string name);
    static TermPtr neg_test(std::string name);
    static TermPtr prog(std::string name);
    static TermPtr plus(TermPtr a, TermPtr b);
    static TermPtr dot(TermPtr a, TermPtr b);
    static TermPtr star(TermPtr a);
};

// Left-assoc sequence a;b;c;...
TermPtr seq(std::initializer_list<TermPtr> parts);

std::string to_string(const Term& t);

// ASCII grammar, `*` binding tightest, then `;`, then `+`:
//   term := term "+" term | term ";" term | term "*" | "0" | "1" | "top"
//         | IDENT | "!" IDENT | "(" term ")"
// Identifiers listed in `test_symbols` parse as tests, all others as
// programs. Negating a program symbol is a parse error.
TermPtr parse_term(std::string_view text, const std::set<std::string>& test_symbols);

struct Interpretation {
    explicit Interpretation(SpacePtr s) : space(std::move(s)) {}

    SpacePtr space;
    std::map<std::string, Relation, std::less<>> progs;
    std::map<std::string, Predicate, std::less<>> tests;
};

Relation eval(const Term& t, const Interpretation& i);

enum class Encoding {
    PartialCorrectness,
    Incorrectness,
    AngelicTotalCorrectness,
    PartialIncorrectness,
    TopBpcTopPc,
    BpcTopBpTop,
};

inline constexpr std::array kAllEncodings = {
    Encoding::PartialCorrectness,   Encoding::Incorrectness, Encoding::AngelicTotalCorrectness,
    Encoding::PartialIncorrectness, Encoding::TopBpcTopPc,   Encoding::BpcTopBpTop,
};

std::string_view label(Encoding e);
std::optional<Encoding> encoding_from_label(std::string_view label);
// The transformer-side statement an encoding is checked against, e.g. "c <= aslp(b)".
std::string_view transformer_statement(Encoding e);

struct EncodedEquation {
    std::string name;
    TermPtr lhs;
    TermPtr rhs;
};

EncodedEquation encode(Encoding e, const std::string& b, const std::string& p, const std::string& c);
// Throws SemanticError for an unknown label.
EncodedEquation encode(std::string_view label, const std::string& b, const std::string& p, const std::string& c);

bool equation_holds(const EncodedEquation& eq, const Interpretation& i);

// The transformer implication an encoding corresponds to, evaluated directly.
bool transformer_verdict(Encoding e, const Relation& r, const Predicate& b, const Predicate& c);

struct CorrespondenceReport {
    Encoding encoding;
    bool equation;
    bool transformer;
    bool agrees() const { return equation == transformer; }
};

CorrespondenceReport correspondence(Encoding e, const Interpretation& i, const std::string& b,
                                    const std::string& p, const std::string& c);

}  // namespace exegete::kat
