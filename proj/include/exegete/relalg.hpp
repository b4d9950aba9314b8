#pragma once

// Predicates (sets of states) and relations (sets of state pairs) over a
// finite StateSpace, with the relational algebra that interprets KAT terms
// and guarded commands.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "exegete/bitops.hpp"
#include "exegete/state_space.hpp"

namespace exegete {

using simd::Word;

class Predicate {
public:
    explicit Predicate(SpacePtr space, bool full = false);
    Predicate(SpacePtr space, std::initializer_list<std::size_t> states);

    const SpacePtr& space() const { return space_; }
    std::size_t size() const { return space_->size(); }

    bool contains(std::size_t s) const { return simd::test_bit(words_, s); }
    void insert(std::size_t s) { simd::set_bit(words_, s); }

    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    bool empty() const { return simd::is_zero(words_); }
    std::size_t count() const;
    std::vector<std::size_t> states() const;

    bool operator==(const Predicate& other) const;

private:
    SpacePtr space_;
    std::vector<Word> words_;  // bits past size() stay zero
};

Predicate complement(const Predicate& p);
Predicate intersect(const Predicate& p, const Predicate& q);
Predicate unite(const Predicate& p, const Predicate& q);
bool subset(const Predicate& p, const Predicate& q);
std::string to_string(const Predicate& p);  // "{0,2}"

// Dense bit matrix; row s holds the successors of state s.
class Relation {
public:
    explicit Relation(SpacePtr space);
    Relation(SpacePtr space, std::initializer_list<std::pair<std::size_t, std::size_t>> pairs);

    const SpacePtr& space() const { return space_; }
    std::size_t size() const { return space_->size(); }
    std::size_t stride() const { return stride_; }

    bool contains(std::size_t from, std::size_t to) const { return simd::test_bit(row(from), to); }
    void insert(std::size_t from, std::size_t to) { simd::set_bit(row(from), to); }

    std::span<const Word> row(std::size_t s) const { return {bits_.data() + s * stride_, stride_}; }
    std::span<Word> row(std::size_t s) { return {bits_.data() + s * stride_, stride_}; }
    std::span<const Word> bits() const { return bits_; }

    bool empty() const { return simd::is_zero(bits_); }
    std::size_t count() const;
    std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

    bool operator==(const Relation& other) const;

private:
    SpacePtr space_;
    std::size_t stride_;
    std::vector<Word> bits_;
};

Relation empty_relation(const SpacePtr& space);
Relation identity(const SpacePtr& space);
Relation top(const SpacePtr& space);
Relation test(const Predicate& b);

Relation unite(const Relation& r, const Relation& s);
Relation compose(const Relation& r, const Relation& s);
Relation star(const Relation& r);
Relation converse(const Relation& r);
Predicate domain(const Relation& r);
Predicate codomain(const Relation& r);
bool equals(const Relation& r, const Relation& s);
bool subset(const Relation& r, const Relation& s);
std::string to_string(const Relation& r);  // "{(0,1),(1,1)}"

void require_same_space(const StateSpace& a, const StateSpace& b);

}  // namespace exegete
