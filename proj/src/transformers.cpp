#include "exegete/transformers.hpp"

#include "exegete/error.hpp"

namespace exegete {

std::string_view name(TransformerKind k) {
    switch (k) {
        case TransformerKind::Awp: return "awp";
        case TransformerKind::Dwp: return "dwp";
        case TransformerKind::Awlp: return "awlp";
        case TransformerKind::Dwlp: return "dwlp";
        case TransformerKind::Asp: return "asp";
        case TransformerKind::Dsp: return "dsp";
        case TransformerKind::Aslp: return "aslp";
        case TransformerKind::Dslp: return "dslp";
    }
    return "?";
}

std::optional<TransformerKind> transformer_from_name(std::string_view n) {
    if (n == "wp") return TransformerKind::Awp;
    if (n == "wlp") return TransformerKind::Dwlp;
    if (n == "sp") return TransformerKind::Asp;
    if (n == "slp") return TransformerKind::Dslp;
    for (auto k : kAllTransformers)
        if (name(k) == n) return k;
    return std::nullopt;
}

bool is_backward(TransformerKind k) {
    switch (k) {
        case TransformerKind::Awp:
        case TransformerKind::Dwp:
        case TransformerKind::Awlp:
        case TransformerKind::Dwlp: return true;
        default: return false;
    }
}

Predicate awp(const Relation& r, const Predicate& c) {
    require_same_space(*r.space(), *c.space());
    Predicate out(r.space());
    for (std::size_t s = 0; s < r.size(); ++s)
        if (simd::intersects(r.row(s), c.words())) out.insert(s);
    return out;
}

Predicate dwlp(const Relation& r, const Predicate& c) {
    require_same_space(*r.space(), *c.space());
    Predicate out(r.space());
    for (std::size_t s = 0; s < r.size(); ++s)
        if (simd::is_subset(r.row(s), c.words())) out.insert(s);
    return out;
}

Predicate asp(const Relation& r, const Predicate& b) {
    require_same_space(*r.space(), *b.space());
    Predicate out(r.space());
    simd::active_kernels().or_selected_rows(out.words().data(), r.bits().data(), r.stride(), b.words().data(),
                                            r.size());
    return out;
}

Predicate dslp(const Relation& r, const Predicate& b) {
    require_same_space(*r.space(), *b.space());
    // Start from everything and strike out each state reached from outside b.
    Predicate out(r.space(), true);
    for (std::size_t s = 0; s < r.size(); ++s)
        if (!b.contains(s)) simd::andnot_into(out.words(), r.row(s));
    return out;
}

Predicate dwp(const Relation& r, const Predicate& c) { return intersect(dwlp(r, c), domain(r)); }

Predicate awlp(const Relation& r, const Predicate& c) { return unite(awp(r, c), complement(domain(r))); }

Predicate dsp(const Relation& r, const Predicate& b) { return intersect(dslp(r, b), codomain(r)); }

Predicate aslp(const Relation& r, const Predicate& b) { return unite(asp(r, b), complement(codomain(r))); }

Predicate apply(TransformerKind k, const Relation& r, const Predicate& arg) {
    switch (k) {
        case TransformerKind::Awp: return awp(r, arg);
        case TransformerKind::Dwp: return dwp(r, arg);
        case TransformerKind::Awlp: return awlp(r, arg);
        case TransformerKind::Dwlp: return dwlp(r, arg);
        case TransformerKind::Asp: return asp(r, arg);
        case TransformerKind::Dsp: return dsp(r, arg);
        case TransformerKind::Aslp: return aslp(r, arg);
        case TransformerKind::Dslp: return dslp(r, arg);
    }
    throw Error("unknown transformer");
}

}  // namespace exegete
