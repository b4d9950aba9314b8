#pragma once

// The eight predicate transformers of a relation: {angelic, demonic} x
// {wp, wlp, sp, slp}. Backward transformers (wp, wlp) take a postcondition;
// forward ones (sp, slp) take a precondition.
//
// Default convention: non-liberal transformers are angelic, liberal ones are
// demonic (wp = awp, wlp = dwlp, sp = asp, slp = dslp). Under this
// convention the Galois connections
//     b <= wlp(c)  <=>  sp(b) <= c
//     wp(c) <= b   <=>  c <= slp(b)
// hold for every relation.

#include <array>
#include <optional>
#include <string_view>

#include "exegete/relalg.hpp"

namespace exegete {

enum class TransformerKind { Awp, Dwp, Awlp, Dwlp, Asp, Dsp, Aslp, Dslp };

inline constexpr std::array kAllTransformers = {
    TransformerKind::Awp, TransformerKind::Dwp, TransformerKind::Awlp, TransformerKind::Dwlp,
    TransformerKind::Asp, TransformerKind::Dsp, TransformerKind::Aslp, TransformerKind::Dslp,
};

std::string_view name(TransformerKind k);
// Accepts the eight explicit names plus the aliases wp, wlp, sp, slp.
std::optional<TransformerKind> transformer_from_name(std::string_view name);
bool is_backward(TransformerKind k);

// {s | exists s'. r(s,s') and s' in c}
Predicate awp(const Relation& r, const Predicate& c);
// {s | forall s'. r(s,s') implies s' in c}; diverging states included
Predicate dwlp(const Relation& r, const Predicate& c);
// {s' | exists s in b. r(s,s')}
Predicate asp(const Relation& r, const Predicate& b);
// {s' | forall s. r(s,s') implies s in b}; unreachable states included
Predicate dslp(const Relation& r, const Predicate& b);

// dwlp(c) restricted to terminating states
Predicate dwp(const Relation& r, const Predicate& c);
// awp(c) plus diverging states
Predicate awlp(const Relation& r, const Predicate& c);
// dslp(b) restricted to reachable states
Predicate dsp(const Relation& r, const Predicate& b);
// asp(b) plus unreachable states
Predicate aslp(const Relation& r, const Predicate& b);

Predicate apply(TransformerKind k, const Relation& r, const Predicate& arg);

}  // namespace exegete
