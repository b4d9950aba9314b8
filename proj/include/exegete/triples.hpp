#pragma once

// Readings ("exegeses") of a triple {b} p {c} and their validity.
//
// Six readings come from combining wp/wlp/sp/slp with both implication
// directions. Two pairs of them are linked by Galois connections and every
// correctness-side reading has an incorrectness-side contrapositive:
//
//   total correctness     b <= awp(c)      contrapositive of  exegesis-v  (on !b, !c)
//   partial correctness   b <= dwlp(c)     contrapositive of  partial incorrectness
//   incorrectness         c <= asp(b)      contrapositive of  exegesis-vi
//
// Beyond those, the catalogue holds the two angelic-liberal readings, the
// existential bug witness, and demonic total correctness (b <= dwp(c)), which
// is not expressible as a TopKAT equation and is kept separate so the gap to
// the angelic reading is visible.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exegete/relalg.hpp"

namespace exegete {

enum class Exegesis {
    TotalCorrectness,
    ExegesisV,
    PartialCorrectness,
    PartialIncorrectness,
    ExegesisVI,
    Incorrectness,
    AngelicLiberalLhs,
    AngelicLiberalRhs,
    BugWitness,
    DemonicTotalCorrectness,
};

struct ExegesisInfo {
    Exegesis id;
    std::string_view label;
    std::string_view formula;
    // Equivalent formulation through a Galois connection, if any.
    std::string_view galois_formula;
    // Reading that is equivalent after negating pre and post, if any.
    std::optional<Exegesis> contrapositive;
};

// In report order: the six figure readings left-to-right, top-to-bottom,
// then the extras.
inline constexpr std::array<ExegesisInfo, 10> kExegeses = {{
    {Exegesis::TotalCorrectness, "total-correctness", "b <= awp(c)", "", Exegesis::ExegesisV},
    {Exegesis::ExegesisV, "exegesis-v", "dwlp(c) <= b", "", Exegesis::TotalCorrectness},
    {Exegesis::PartialCorrectness, "partial-correctness", "b <= dwlp(c)", "asp(b) <= c",
     Exegesis::PartialIncorrectness},
    {Exegesis::PartialIncorrectness, "partial-incorrectness", "awp(c) <= b", "c <= dslp(b)",
     Exegesis::PartialCorrectness},
    {Exegesis::ExegesisVI, "exegesis-vi", "dslp(b) <= c", "", Exegesis::Incorrectness},
    {Exegesis::Incorrectness, "incorrectness", "c <= asp(b)", "", Exegesis::ExegesisVI},
    {Exegesis::AngelicLiberalLhs, "angelic-liberal-lhs", "b <= awlp(c)", "", std::nullopt},
    {Exegesis::AngelicLiberalRhs, "angelic-liberal-rhs", "c <= aslp(b)", "", std::nullopt},
    {Exegesis::BugWitness, "bug-witness", "b & awp(c) != {}", "", std::nullopt},
    {Exegesis::DemonicTotalCorrectness, "demonic-total-correctness", "b <= dwp(c)", "", std::nullopt},
}};

const ExegesisInfo& info(Exegesis e);
std::optional<Exegesis> exegesis_from_label(std::string_view label);

struct Triple {
    Triple(Predicate pre, Relation prog, Predicate post);

    Predicate pre;
    Relation prog;
    Predicate post;
};

bool holds(Exegesis e, const Triple& t);

// The Galois-equivalent formulation; only PartialCorrectness and
// PartialIncorrectness have one.
std::optional<bool> holds_galois_form(Exegesis e, const Triple& t);

using StatePair = std::pair<std::size_t, std::size_t>;

// Lexicographically smallest (s, s') with s in b, s' in c and r(s, s').
std::optional<StatePair> bug_witness(const Triple& t);

struct MatrixEntry {
    Exegesis exegesis;
    bool verdict;
    std::optional<bool> galois_verdict;
    std::optional<Exegesis> contrapositive;
    // Verdict of the contrapositive partner on {!b} p {!c}; equals `verdict`.
    std::optional<bool> contrapositive_verdict;
};

struct Matrix {
    std::vector<MatrixEntry> entries;  // kExegeses order
    std::optional<StatePair> witness;
};

Matrix matrix(const Triple& t);

struct LawEdge {
    std::string name;
    bool lhs;
    bool rhs;
    bool ok() const { return lhs == rhs; }
};

struct LawReport {
    std::vector<LawEdge> edges;
    bool ok() const;
};

// (dagger) b <= dwlp(c) <=> asp(b) <= c
// (ddagger) awp(c) <= b <=> c <= dslp(b)
LawReport check_galois(const Relation& r, const Predicate& b, const Predicate& c);

// The four contrapositive edges between the correctness and incorrectness
// sides.
LawReport check_contrapositive(const Relation& r, const Predicate& b, const Predicate& c);

}  // namespace exegete
