#pragma once

// Line-oriented spec files. The format is documented in docs/spec-format.md.
//
//   # comment
//   [space]
//   pw: correct, wrong
//   n: 0..3
//   [predicates]
//   wrong_pw = pw = wrong
//   [programs]
//   login = if pw = correct then ok := 1 else ok := 0 fi
//   [checks]
//   triple t1 pre=wrong_pw prog=login post="ok = 0" exegeses=partial-correctness expect=valid
//   kat k1 encoding=incorrectness b=wrong_pw p=login c=failed expect=holds
//   laws l1 mode=exhaustive max-size=2
//
// Lines starting with whitespace continue the previous entry.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "exegete/lang.hpp"
#include "exegete/laws.hpp"
#include "exegete/relalg.hpp"
#include "exegete/topkat.hpp"
#include "exegete/triples.hpp"

namespace exegete {

struct TripleCheck {
    std::string name;
    std::size_t line = 0;
    std::string pre_label;
    std::string prog_label;
    std::string post_label;
    Triple triple;
    std::vector<Exegesis> exegeses;  // kExegeses order
    bool all = false;
    std::map<Exegesis, bool> expect;
    bool witness = false;
};

struct KatCheck {
    std::string name;
    std::size_t line = 0;
    std::optional<kat::Encoding> encoding;
    kat::EncodedEquation equation;
    kat::Interpretation interpretation;
    std::vector<std::pair<std::string, std::string>> bindings;  // symbol -> definition name
    std::optional<bool> expect;
};

struct LawsCheck {
    std::string name;
    std::size_t line = 0;
    LawOptions options;
};

using Check = std::variant<TripleCheck, KatCheck, LawsCheck>;

const std::string& check_name(const Check& c);

struct SpecFile {
    std::string source;
    SpacePtr space;
    std::vector<std::pair<std::string, Predicate>> predicates;
    lang::ProgramTable programs;  // references resolved
    std::vector<Check> checks;

    const Check* find_check(std::string_view name) const;
};

// Throws ParseError (with file line/column) or SemanticError (prefixed with
// the line number), or CapExceeded.
SpecFile load_spec(std::string_view text, std::string source = "<input>", std::size_t cap = kDefaultStateCap);
SpecFile load_spec_file(const std::filesystem::path& path, std::size_t cap = kDefaultStateCap);

}  // namespace exegete
