#pragma once

// Model-checking sweeps of the transformer laws over small relational models:
// Galois connections, contrapositive edges, De Morgan dualities, the six
// TopKAT correspondences, the bug-witness equivalence and the
// demonic/angelic total-correctness relationship.
//
// Exhaustive mode visits every relation over |S| = 1..max_size together with
// every (b, c) pair: sum over k of 2^(k*k) * 4^k models. Random mode draws
// `samples` models of size `random_size` from std::mt19937_64 seeded with
// `seed`. Only raw generator words are consumed (no std distributions), so a
// seed reproduces the same models on every platform:
//   per model: one word w; density t = w >> 56
//              n*n words, pair bit i set iff (word >> 56) < t (row-major)
//              one word, b = word & (2^n - 1); one word, c = word & (2^n - 1)

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "exegete/relalg.hpp"

namespace exegete {

enum class SweepMode { Exhaustive, Random };

inline constexpr std::size_t kMaxExhaustiveSize = 4;

struct LawOptions {
    SweepMode mode = SweepMode::Exhaustive;
    std::size_t max_size = 3;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    std::size_t random_size = 6;
    unsigned threads = 0;  // 0: hardware concurrency
    // Test-only: evaluate demonic total correctness with dwlp in place of
    // dwp, which must make the demonic-implies-angelic law fail.
    bool inject_dwp_fault = false;
};

struct Counterexample {
    std::size_t size = 0;
    std::uint64_t ordinal = 0;  // enumeration / sample order, for minimality
    std::string relation;
    std::string pre;
    std::string post;
    std::string detail;
};

struct LawResult {
    std::string name;
    std::string statement;
    std::uint64_t models = 0;
    std::uint64_t violations = 0;
    std::optional<Counterexample> counterexample;  // the first in sweep order
    bool ok() const { return violations == 0; }
};

struct LawSweepReport {
    LawOptions options;
    std::uint64_t models = 0;
    std::vector<LawResult> laws;
    // First model where the angelic total-correctness equation holds but
    // b <= dwp(c) fails. Informational: none exists below two states.
    std::optional<Counterexample> demonic_gap;
    bool ok() const;
};

struct LawInfo {
    std::string_view name;
    std::string_view statement;
};

const std::vector<LawInfo>& law_catalogue();

// Throws Error when exhaustive max_size exceeds kMaxExhaustiveSize or a size
// is zero.
LawSweepReport run_laws(const LawOptions& options);

// Number of exhaustive models for |S| = 1..max_size.
std::uint64_t exhaustive_model_count(std::size_t max_size);

}  // namespace exegete
