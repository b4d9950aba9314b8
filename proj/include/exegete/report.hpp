#pragma once

// Running spec-file checks and rendering the results as text or JSON.
// Both renderings are byte-deterministic for a given input.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "exegete/laws.hpp"
#include "exegete/specfile.hpp"

namespace exegete {

struct ExegesisResult {
    Exegesis exegesis;
    bool verdict;
    std::optional<bool> expected;
    std::optional<bool> galois_verdict;
    std::optional<Exegesis> contrapositive;
    std::optional<bool> contrapositive_verdict;
    bool ok() const;
};

struct WitnessInfo {
    std::size_t from;
    std::size_t to;
    std::string from_state;
    std::string to_state;
};

struct TripleResult {
    std::string name;
    std::string pre;
    std::string prog;
    std::string post;
    std::vector<ExegesisResult> results;
    bool show_witness = false;
    std::optional<WitnessInfo> witness;
    bool ok() const;
};

struct KatResult {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool holds;
    std::optional<bool> expected;
    std::optional<kat::CorrespondenceReport> correspondence;
    bool ok() const;
};

struct LawsResult {
    std::string name;
    LawSweepReport sweep;
    bool ok() const { return sweep.ok(); }
};

using CheckResult = std::variant<TripleResult, KatResult, LawsResult>;

struct RunReport {
    std::string source;
    std::vector<CheckResult> checks;
    bool ok() const;
};

RunReport run_check(const SpecFile& spec);
// Full exegesis matrix (with bug witness) for the named triple check.
RunReport run_matrix(const SpecFile& spec, std::string_view triple);
RunReport run_kat(const SpecFile& spec, std::string_view equation);

std::string render_text(const RunReport& report);
nlohmann::ordered_json to_json(const RunReport& report);

std::string render_text(const LawSweepReport& report);
nlohmann::ordered_json to_json(const LawSweepReport& report);

}  // namespace exegete
