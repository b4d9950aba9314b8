#include "exegete/triples.hpp"

#include <algorithm>

#include "exegete/error.hpp"
#include "exegete/transformers.hpp"

namespace exegete {

const ExegesisInfo& info(Exegesis e) {
    for (const auto& i : kExegeses)
        if (i.id == e) return i;
    throw Error("unknown exegesis");
}

std::optional<Exegesis> exegesis_from_label(std::string_view label) {
    for (const auto& i : kExegeses)
        if (i.label == label) return i.id;
    return std::nullopt;
}

Triple::Triple(Predicate b, Relation p, Predicate c) : pre(std::move(b)), prog(std::move(p)), post(std::move(c)) {
    require_same_space(*pre.space(), *prog.space());
    require_same_space(*post.space(), *prog.space());
}

bool holds(Exegesis e, const Triple& t) {
    const auto& [b, r, c] = t;
    switch (e) {
        case Exegesis::TotalCorrectness: return subset(b, awp(r, c));
        case Exegesis::ExegesisV: return subset(dwlp(r, c), b);
        case Exegesis::PartialCorrectness: return subset(b, dwlp(r, c));
        case Exegesis::PartialIncorrectness: return subset(awp(r, c), b);
        case Exegesis::ExegesisVI: return subset(dslp(r, b), c);
        case Exegesis::Incorrectness: return subset(c, asp(r, b));
        case Exegesis::AngelicLiberalLhs: return subset(b, awlp(r, c));
        case Exegesis::AngelicLiberalRhs: return subset(c, aslp(r, b));
        case Exegesis::BugWitness: return !intersect(b, awp(r, c)).empty();
        case Exegesis::DemonicTotalCorrectness: return subset(b, dwp(r, c));
    }
    throw Error("unknown exegesis");
}

std::optional<bool> holds_galois_form(Exegesis e, const Triple& t) {
    const auto& [b, r, c] = t;
    switch (e) {
        case Exegesis::PartialCorrectness: return subset(asp(r, b), c);
        case Exegesis::PartialIncorrectness: return subset(c, dslp(r, b));
        default: return std::nullopt;
    }
}

std::optional<StatePair> bug_witness(const Triple& t) {
    for (std::size_t s = 0; s < t.pre.size(); ++s) {
        if (!t.pre.contains(s)) continue;
        for (std::size_t s2 = 0; s2 < t.post.size(); ++s2)
            if (t.post.contains(s2) && t.prog.contains(s, s2)) return StatePair{s, s2};
    }
    return std::nullopt;
}

Matrix matrix(const Triple& t) {
    const Triple negated(complement(t.pre), t.prog, complement(t.post));
    Matrix m;
    for (const auto& i : kExegeses) {
        MatrixEntry e{i.id, holds(i.id, t), holds_galois_form(i.id, t), i.contrapositive, std::nullopt};
        if (i.contrapositive) e.contrapositive_verdict = holds(*i.contrapositive, negated);
        m.entries.push_back(e);
    }
    m.witness = bug_witness(t);
    return m;
}

bool LawReport::ok() const {
    return std::all_of(edges.begin(), edges.end(), [](const LawEdge& e) { return e.ok(); });
}

LawReport check_galois(const Relation& r, const Predicate& b, const Predicate& c) {
    LawReport rep;
    rep.edges.push_back({"galois-wlp-sp", subset(b, dwlp(r, c)), subset(asp(r, b), c)});
    rep.edges.push_back({"galois-wp-slp", subset(awp(r, c), b), subset(c, dslp(r, b))});
    return rep;
}

LawReport check_contrapositive(const Relation& r, const Predicate& b, const Predicate& c) {
    const Predicate nb = complement(b);
    const Predicate nc = complement(c);
    LawReport rep;
    rep.edges.push_back({"contra-dwlp-awp", subset(b, dwlp(r, c)), subset(awp(r, nc), nb)});
    rep.edges.push_back({"contra-awp-dwlp", subset(b, awp(r, c)), subset(dwlp(r, nc), nb)});
    rep.edges.push_back({"contra-asp-dslp", subset(asp(r, b), c), subset(nc, dslp(r, nb))});
    rep.edges.push_back({"contra-dslp-asp", subset(c, asp(r, b)), subset(dslp(r, nb), nc)});
    return rep;
}

}  // namespace exegete
