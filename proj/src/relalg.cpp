#include "exegete/relalg.hpp"

#include <bit>

#include "exegete/error.hpp"

namespace exegete {

using simd::kWordBits;
using simd::words_for;

namespace {

Word tail_mask(std::size_t bits) {
    const std::size_t rem = bits % kWordBits;
    return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

void fill(std::span<Word> words, std::size_t bits) {
    for (auto& w : words) w = ~Word{0};
    if (!words.empty()) words.back() &= tail_mask(bits);
}

std::size_t popcount(std::span<const Word> words) {
    std::size_t n = 0;
    for (Word w : words) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

}  // namespace

void require_same_space(const StateSpace& a, const StateSpace& b) {
    if (!a.same_as(b)) throw SpaceMismatch();
}

// ---------------------------------------------------------------- Predicate

Predicate::Predicate(SpacePtr space, bool full) : space_(std::move(space)), words_(words_for(space_->size())) {
    if (full) fill(words_, space_->size());
}

Predicate::Predicate(SpacePtr space, std::initializer_list<std::size_t> states) : Predicate(std::move(space)) {
    for (std::size_t s : states) {
        if (s >= size()) throw Error("state " + std::to_string(s) + " out of range");
        insert(s);
    }
}

std::size_t Predicate::count() const { return popcount(words_); }

std::vector<std::size_t> Predicate::states() const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < size(); ++s)
        if (contains(s)) out.push_back(s);
    return out;
}

bool Predicate::operator==(const Predicate& other) const {
    require_same_space(*space_, *other.space_);
    return simd::equal(words_, other.words_);
}

Predicate complement(const Predicate& p) {
    Predicate out(p.space(), true);
    simd::andnot_into(out.words(), p.words());
    return out;
}

Predicate intersect(const Predicate& p, const Predicate& q) {
    require_same_space(*p.space(), *q.space());
    Predicate out = p;
    simd::and_into(out.words(), q.words());
    return out;
}

Predicate unite(const Predicate& p, const Predicate& q) {
    require_same_space(*p.space(), *q.space());
    Predicate out = p;
    simd::or_into(out.words(), q.words());
    return out;
}

bool subset(const Predicate& p, const Predicate& q) {
    require_same_space(*p.space(), *q.space());
    return simd::is_subset(p.words(), q.words());
}

std::string to_string(const Predicate& p) {
    std::string out = "{";
    bool first = true;
    for (std::size_t s : p.states()) {
        if (!first) out += ",";
        out += std::to_string(s);
        first = false;
    }
    return out + "}";
}

// ----------------------------------------------------------------- Relation

Relation::Relation(SpacePtr space)
    : space_(std::move(space)), stride_(words_for(space_->size())), bits_(stride_ * space_->size()) {}

Relation::Relation(SpacePtr space, std::initializer_list<std::pair<std::size_t, std::size_t>> pairs)
    : Relation(std::move(space)) {
    for (auto [a, b] : pairs) {
        if (a >= size() || b >= size()) throw Error("state pair out of range");
        insert(a, b);
    }
}

std::size_t Relation::count() const { return popcount(bits_); }

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b)
            if (contains(a, b)) out.emplace_back(a, b);
    return out;
}

bool Relation::operator==(const Relation& other) const { return equals(*this, other); }

Relation empty_relation(const SpacePtr& space) { return Relation(space); }

Relation identity(const SpacePtr& space) {
    Relation r(space);
    for (std::size_t s = 0; s < space->size(); ++s) r.insert(s, s);
    return r;
}

Relation top(const SpacePtr& space) {
    Relation r(space);
    for (std::size_t s = 0; s < space->size(); ++s) fill(r.row(s), space->size());
    return r;
}

Relation test(const Predicate& b) {
    Relation r(b.space());
    for (std::size_t s = 0; s < b.size(); ++s)
        if (b.contains(s)) r.insert(s, s);
    return r;
}

Relation unite(const Relation& r, const Relation& s) {
    require_same_space(*r.space(), *s.space());
    Relation out = r;
    for (std::size_t a = 0; a < r.size(); ++a) simd::or_into(out.row(a), s.row(a));
    return out;
}

Relation compose(const Relation& r, const Relation& s) {
    require_same_space(*r.space(), *s.space());
    Relation out(r.space());
    const auto& k = simd::active_kernels();
    for (std::size_t a = 0; a < r.size(); ++a)
        k.or_selected_rows(out.row(a).data(), s.bits().data(), s.stride(), r.row(a).data(), r.size());
    return out;
}

Relation star(const Relation& r) {
    // Square (1 + r) until it stops growing; after k rounds it covers paths of
    // length <= 2^k, so ceil(log2 n) + 1 rounds always suffice.
    Relation cur = unite(identity(r.space()), r);
    for (;;) {
        Relation next = compose(cur, cur);
        if (equals(next, cur)) return cur;
        cur = std::move(next);
    }
}

Relation converse(const Relation& r) {
    Relation out(r.space());
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
            if (r.contains(a, b)) out.insert(b, a);
    return out;
}

Predicate domain(const Relation& r) {
    Predicate out(r.space());
    for (std::size_t a = 0; a < r.size(); ++a)
        if (!simd::is_zero(r.row(a))) out.insert(a);
    return out;
}

Predicate codomain(const Relation& r) {
    Predicate out(r.space());
    const Predicate all(r.space(), true);
    simd::active_kernels().or_selected_rows(out.words().data(), r.bits().data(), r.stride(),
                                            all.words().data(), r.size());
    return out;
}

bool equals(const Relation& r, const Relation& s) {
    require_same_space(*r.space(), *s.space());
    return simd::equal(r.bits(), s.bits());
}

bool subset(const Relation& r, const Relation& s) {
    require_same_space(*r.space(), *s.space());
    return simd::is_subset(r.bits(), s.bits());
}

std::string to_string(const Relation& r) {
    std::string out = "{";
    bool first = true;
    for (auto [a, b] : r.pairs()) {
        if (!first) out += ",";
        out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        first = false;
    }
    return out + "}";
}

}  // namespace exegete
