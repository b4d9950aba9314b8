#include "exegete/specfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "exegete/error.hpp"
#include "lexer.hpp"

namespace exegete {

namespace {

using detail::Token;

struct Entry {
    std::string section;
    std::string text;  // first line from the entry start, continuation lines verbatim
    std::size_t line;
    std::size_t column;
};

// A sub-range of an entry holding embedded source (a program, expression or
// domain) together with its position in the file.
struct Span {
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Loader {
public:
    Loader(std::string source, std::size_t cap) : source_(std::move(source)), cap_(cap) {}

    SpecFile load(std::string_view text) {
        split(text);
        SpecFile spec;
        spec.source = source_;
        declare_space(spec);
        declare_predicates(spec);
        declare_programs(spec);
        for (const auto& e : entries_)
            if (e.section == "checks") spec.checks.push_back(parse_check(spec, e));
        std::set<std::string> seen;
        for (const auto& c : spec.checks)
            if (!seen.insert(check_name(c)).second) fail(0, "duplicate check name '" + check_name(c) + "'");
        return spec;
    }

private:
    [[noreturn]] void fail(std::size_t line, const std::string& msg) const {
        throw SemanticError(source_ + ":" + (line ? std::to_string(line) + ": " : std::string(" ")) + msg);
    }

    template <typename F>
    auto embedded(const Span& s, F&& parse) const {
        try {
            return parse(std::string_view(s.text));
        } catch (const ParseError& e) {
            Location loc = e.location();
            if (loc.line == 1) loc.column += s.column - 1;
            loc.line += s.line - 1;
            throw ParseError(source_, loc, e.message());
        } catch (const CapExceeded&) {
            throw;
        } catch (const SemanticError& e) {
            fail(s.line, e.what());
        }
    }

    // ------------------------------------------------------------ splitting

    static std::string strip_comment(const std::string& line) {
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) return line.substr(0, i);
        }
        return line;
    }

    static bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

    void split(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string raw;
        std::string section;
        std::size_t lineno = 0;
        while (std::getline(in, raw)) {
            ++lineno;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            const std::string line = strip_comment(raw);
            if (blank(line)) continue;
            if (line[0] == ' ' || line[0] == '\t') {
                if (entries_.empty() || entries_.back().section != section)
                    fail(lineno, "continuation line without an entry to continue");
                // Pad with newlines so embedded line numbers stay aligned.
                auto& last = entries_.back();
                const std::size_t have = last.line + static_cast<std::size_t>(
                                                         std::count(last.text.begin(), last.text.end(), '\n'));
                last.text += std::string(lineno - have, '\n') + line;
                continue;
            }
            if (line[0] == '[') {
                const auto close = line.find(']');
                if (close == std::string::npos || !blank(line.substr(close + 1)))
                    throw ParseError(source_, {lineno, 1}, "malformed section header");
                section = line.substr(1, close - 1);
                if (section != "space" && section != "predicates" && section != "programs" && section != "checks")
                    fail(lineno, "unknown section [" + section + "]");
                continue;
            }
            if (section.empty()) fail(lineno, "entry before any section header");
            entries_.push_back({section, line, lineno, 1});
        }
    }

    // Splits "name <sep> rest" and returns the name plus the rest as a Span.
    std::pair<std::string, Span> definition(const Entry& e, char sep) const {
        const auto pos = e.text.find(sep);
        if (pos == std::string::npos)
            throw ParseError(source_, {e.line, 1}, "expected '" + std::string(1, sep) + "' in definition");
        std::string name = e.text.substr(0, pos);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        if (!valid_identifier(name)) throw ParseError(source_, {e.line, 1}, "invalid name '" + name + "'");
        return {name, Span{e.text.substr(pos + 1), e.line, pos + 2}};
    }

    static bool valid_identifier(std::string_view s) {
        if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
        for (char c : s)
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
        return true;
    }

    // ---------------------------------------------------------------- space

    Domain parse_domain(const Span& s) const {
        return embedded(s, [](std::string_view text) {
            detail::TokenStream ts(text);
            auto integer = [&]() -> std::int64_t {
                const bool neg = ts.accept_punct("-");
                const Token& t = ts.peek();
                if (t.kind != Token::Kind::Int) ts.fail("expected an integer");
                const std::int64_t v = std::stoll(ts.next().text);
                return neg ? -v : v;
            };
            if (ts.peek().kind == Token::Kind::Int || ts.is_punct("-")) {
                const auto m = ts.mark();
                const std::int64_t lo = integer();
                if (ts.accept_punct("..")) {
                    const std::int64_t hi = integer();
                    ts.expect_end();
                    return Domain::integers(lo, hi);
                }
                ts.reset(m);
            }
            std::vector<Value> vals;
            do {
                if (ts.peek().kind == Token::Kind::Ident) {
                    vals.emplace_back(ts.next().text);
                } else {
                    vals.emplace_back(integer());
                }
            } while (ts.accept_punct(","));
            ts.expect_end();
            return Domain::values(std::move(vals));
        });
    }

    void declare_space(SpecFile& spec) {
        std::vector<Variable> vars;
        std::size_t first_line = 0;
        for (const auto& e : entries_) {
            if (e.section != "space") continue;
            if (!first_line) first_line = e.line;
            auto [name, rest] = definition(e, ':');
            if (reserved(name)) fail(e.line, "'" + name + "' is a reserved word");
            vars.push_back({name, parse_domain(rest)});
        }
        if (vars.empty()) fail(0, "missing [space] section");
        try {
            spec.space = StateSpace::create(std::move(vars), cap_);
        } catch (const CapExceeded&) {
            throw;
        } catch (const SemanticError& err) {
            fail(first_line, err.what());
        }
    }

    static bool reserved(std::string_view s) {
        static const std::set<std::string, std::less<>> words = {
            "skip", "diverge", "assume", "if", "then", "else", "fi", "while",
            "do",   "od",      "true",   "false", "and", "or", "not", "top",
        };
        return words.count(s) > 0;
    }

    // ----------------------------------------------------------- predicates

    void declare_predicates(SpecFile& spec) {
        for (const auto& e : entries_) {
            if (e.section != "predicates") continue;
            auto [name, rest] = definition(e, '=');
            if (predicate_index_.count(name)) fail(e.line, "duplicate predicate '" + name + "'");
            auto b = embedded(rest, [](std::string_view t) { return lang::parse_bexpr(t); });
            Predicate p = embedded(rest, [&](std::string_view) { return lang::eval_pred(*b, spec.space); });
            predicate_index_[name] = spec.predicates.size();
            spec.predicates.emplace_back(name, std::move(p));
        }
    }

    // ------------------------------------------------------------- programs

    void declare_programs(SpecFile& spec) {
        lang::ProgramTable raw;
        std::map<std::string, std::size_t> lines;
        for (const auto& e : entries_) {
            if (e.section != "programs") continue;
            auto [name, rest] = definition(e, '=');
            if (raw.count(name)) fail(e.line, "duplicate program '" + name + "'");
            if (predicate_index_.count(name)) fail(e.line, "'" + name + "' is defined as both a predicate and a program");
            raw[name] = embedded(rest, [](std::string_view t) { return lang::parse_program(t); });
            lines[name] = e.line;
        }
        for (const auto& [name, prog] : raw) {
            try {
                spec.programs[name] = lang::resolve(prog, raw);
            } catch (const SemanticError& err) {
                fail(lines[name], err.what());
            }
        }
    }

    const Relation& relation_of(const SpecFile& spec, const std::string& name, std::size_t line) {
        auto cached = relations_.find(name);
        if (cached != relations_.end()) return cached->second;
        auto it = spec.programs.find(name);
        if (it == spec.programs.end()) fail(line, "unknown program '" + name + "'");
        try {
            return relations_.emplace(name, lang::denote(*it->second, spec.space)).first->second;
        } catch (const SemanticError& err) {
            fail(line, "in program '" + name + "': " + err.what());
        }
    }

    // --------------------------------------------------------------- checks

    struct Field {
        std::string key;
        std::string value;
        bool quoted;
        std::size_t offset;  // of the value within the entry text
    };

    std::vector<Field> fields(const Entry& e, std::vector<std::string>& head) const {
        std::vector<Field> out;
        const std::string& t = e.text;
        std::size_t i = 0;
        while (i < t.size()) {
            if (std::isspace(static_cast<unsigned char>(t[i]))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            std::string key;
            std::string value;
            bool quoted = false;
            std::size_t voff = 0;
            while (i < t.size() && !std::isspace(static_cast<unsigned char>(t[i])) && t[i] != '=') key += t[i++];
            if (i < t.size() && t[i] == '=') {
                ++i;
                voff = i;
                if (i < t.size() && t[i] == '"') {
                    quoted = true;
                    const auto close = t.find('"', i + 1);
                    if (close == std::string::npos)
                        throw ParseError(source_, {e.line, i + 1}, "unterminated string");
                    value = t.substr(i + 1, close - i - 1);
                    voff = i + 1;
                    i = close + 1;
                } else {
                    while (i < t.size() && !std::isspace(static_cast<unsigned char>(t[i]))) value += t[i++];
                }
                if (key.empty()) throw ParseError(source_, {e.line, start + 1}, "missing key before '='");
                out.push_back({key, value, quoted, voff});
            } else {
                if (!out.empty()) throw ParseError(source_, {e.line, start + 1}, "expected key=value, found '" + key + "'");
                head.push_back(key);
            }
        }
        return out;
    }

    static Span field_span(const Entry& e, const Field& f) {
        const std::string_view before = std::string_view(e.text).substr(0, f.offset);
        const auto newlines = static_cast<std::size_t>(std::count(before.begin(), before.end(), '\n'));
        const auto last_nl = before.rfind('\n');
        const std::size_t column = last_nl == std::string_view::npos ? f.offset + 1 : f.offset - last_nl;
        return Span{f.value, e.line + newlines, column};
    }

    const Predicate& predicate_of(const SpecFile& spec, const std::string& name, std::size_t line) const {
        auto it = predicate_index_.find(name);
        if (it == predicate_index_.end()) fail(line, "unknown predicate '" + name + "'");
        return spec.predicates[it->second].second;
    }

    Predicate predicate_field(const SpecFile& spec, const Entry& e, const Field& f) {
        if (!f.quoted) return predicate_of(spec, f.value, e.line);
        const Span s = field_span(e, f);
        auto b = embedded(s, [](std::string_view t) { return lang::parse_bexpr(t); });
        return embedded(s, [&](std::string_view) { return lang::eval_pred(*b, spec.space); });
    }

    Relation program_field(const SpecFile& spec, const Entry& e, const Field& f) {
        if (!f.quoted) return relation_of(spec, f.value, e.line);
        const Span s = field_span(e, f);
        auto p = embedded(s, [](std::string_view t) { return lang::parse_program(t); });
        p = embedded(s, [&](std::string_view) { return lang::resolve(p, spec.programs); });
        return embedded(s, [&](std::string_view) { return lang::denote(*p, spec.space); });
    }

    static std::string label_of(const Field& f) { return f.quoted ? "\"" + f.value + "\"" : f.value; }

    static std::vector<std::string> comma_list(const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                out.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        out.push_back(cur);
        return out;
    }

    std::uint64_t number(const Entry& e, const Field& f) const {
        if (f.value.empty() || f.value.find_first_not_of("0123456789") != std::string::npos)
            fail(e.line, "'" + f.key + "' expects a non-negative integer, got '" + f.value + "'");
        try {
            return std::stoull(f.value);
        } catch (const std::out_of_range&) {
            fail(e.line, "'" + f.key + "' is out of range");
        }
    }

    Check parse_check(const SpecFile& spec, const Entry& e) {
        std::vector<std::string> head;
        auto fs = fields(e, head);
        if (head.size() != 2) fail(e.line, "a check starts with its kind and name, e.g. 'triple t1 ...'");
        const std::string& kind = head[0];
        const std::string& name = head[1];
        if (!valid_identifier(name)) fail(e.line, "invalid check name '" + name + "'");
        std::map<std::string, Field> by_key;
        for (auto& f : fs)
            if (!by_key.emplace(f.key, f).second) fail(e.line, "duplicate key '" + f.key + "'");
        if (kind == "triple") return triple_check(spec, e, name, by_key);
        if (kind == "kat") return kat_check(spec, e, name, by_key);
        if (kind == "laws") return laws_check(e, name, by_key);
        fail(e.line, "unknown check kind '" + kind + "' (expected triple, kat or laws)");
    }

    const Field& require(const Entry& e, const std::map<std::string, Field>& f, const std::string& key) const {
        auto it = f.find(key);
        if (it == f.end()) fail(e.line, "missing '" + key + "'");
        return it->second;
    }

    void only_keys(const Entry& e, const std::map<std::string, Field>& f, std::set<std::string> allowed) const {
        for (const auto& [k, v] : f)
            if (!allowed.count(k)) fail(e.line, "unknown key '" + k + "'");
    }

    Check triple_check(const SpecFile& spec, const Entry& e, const std::string& name,
                       const std::map<std::string, Field>& f) {
        only_keys(e, f, {"pre", "prog", "post", "exegeses", "expect", "witness"});
        const Field& pre = require(e, f, "pre");
        const Field& prog = require(e, f, "prog");
        const Field& post = require(e, f, "post");
        TripleCheck c{name,
                      e.line,
                      label_of(pre),
                      label_of(prog),
                      label_of(post),
                      Triple(predicate_field(spec, e, pre), program_field(spec, e, prog), predicate_field(spec, e, post)),
                      {},
                      false,
                      {},
                      false};

        std::set<Exegesis> chosen;
        const std::string list = f.count("exegeses") ? f.at("exegeses").value : "all";
        if (list == "all") {
            c.all = true;
            for (const auto& i : kExegeses) chosen.insert(i.id);
        } else {
            for (const auto& l : comma_list(list)) {
                auto ex = exegesis_from_label(l);
                if (!ex) fail(e.line, "unknown exegesis '" + l + "'");
                chosen.insert(*ex);
            }
        }
        for (const auto& i : kExegeses)
            if (chosen.count(i.id)) c.exegeses.push_back(i.id);

        if (auto it = f.find("expect"); it != f.end()) {
            auto verdict = [&](const std::string& v) {
                if (v == "valid") return true;
                if (v == "invalid") return false;
                fail(e.line, "expectation must be 'valid' or 'invalid', got '" + v + "'");
            };
            const std::string& v = it->second.value;
            if (v.find(':') == std::string::npos) {
                if (c.exegeses.size() != 1)
                    fail(e.line, "a bare expectation needs exactly one exegesis; use label:verdict pairs");
                c.expect[c.exegeses.front()] = verdict(v);
            } else {
                for (const auto& item : comma_list(v)) {
                    const auto colon = item.find(':');
                    if (colon == std::string::npos) fail(e.line, "expected label:verdict, got '" + item + "'");
                    auto ex = exegesis_from_label(item.substr(0, colon));
                    if (!ex) fail(e.line, "unknown exegesis '" + item.substr(0, colon) + "'");
                    if (!chosen.count(*ex)) fail(e.line, "expectation for unrequested exegesis '" + item.substr(0, colon) + "'");
                    c.expect[*ex] = verdict(item.substr(colon + 1));
                }
            }
        }
        if (auto it = f.find("witness"); it != f.end()) {
            if (it->second.value != "yes" && it->second.value != "no") fail(e.line, "witness must be yes or no");
            c.witness = it->second.value == "yes";
        }
        return c;
    }

    Check kat_check(const SpecFile& spec, const Entry& e, const std::string& name,
                    const std::map<std::string, Field>& f) {
        kat::Interpretation interp(spec.space);
        std::vector<std::pair<std::string, std::string>> bindings;
        std::set<std::string> tests;
        for (const auto& [key, field] : f) {
            if (key == "lhs" || key == "rhs" || key == "encoding" || key == "expect") continue;
            if (!valid_identifier(key) || key == "top") fail(e.line, "invalid symbol '" + key + "'");
            if (field.quoted) fail(e.line, "symbol '" + key + "' must be bound to a predicate or program name");
            if (predicate_index_.count(field.value)) {
                interp.tests.emplace(key, predicate_of(spec, field.value, e.line));
                tests.insert(key);
            } else if (spec.programs.count(field.value)) {
                interp.progs.emplace(key, relation_of(spec, field.value, e.line));
            } else {
                fail(e.line, "'" + field.value + "' is neither a predicate nor a program");
            }
            bindings.emplace_back(key, field.value);
        }

        std::optional<kat::Encoding> encoding;
        kat::EncodedEquation eq;
        if (auto it = f.find("encoding"); it != f.end()) {
            if (f.count("lhs") || f.count("rhs")) fail(e.line, "give either encoding= or lhs=/rhs=, not both");
            encoding = kat::encoding_from_label(it->second.value);
            if (!encoding) fail(e.line, "unknown encoding '" + it->second.value + "'");
            for (const char* sym : {"b", "c"})
                if (!interp.tests.count(sym)) fail(e.line, std::string("encoding needs test symbol '") + sym + "' bound to a predicate");
            if (!interp.progs.count("p")) fail(e.line, "encoding needs program symbol 'p' bound to a program");
            eq = kat::encode(*encoding, "b", "p", "c");
        } else {
            const Field& lhs = require(e, f, "lhs");
            const Field& rhs = require(e, f, "rhs");
            auto parse = [&](const Field& fl) {
                return embedded(field_span(e, fl), [&](std::string_view t) { return kat::parse_term(t, tests); });
            };
            eq = {name, parse(lhs), parse(rhs)};
            // Surface unmapped symbols at load time.
            try {
                (void)kat::eval(*eq.lhs, interp);
                (void)kat::eval(*eq.rhs, interp);
            } catch (const SemanticError& err) {
                fail(e.line, err.what());
            }
        }

        std::optional<bool> expect;
        if (auto it = f.find("expect"); it != f.end()) {
            if (it->second.value == "holds") expect = true;
            else if (it->second.value == "fails") expect = false;
            else fail(e.line, "expectation must be 'holds' or 'fails'");
        }
        return KatCheck{name, e.line, encoding, std::move(eq), std::move(interp), std::move(bindings), expect};
    }

    Check laws_check(const Entry& e, const std::string& name, const std::map<std::string, Field>& f) {
        only_keys(e, f, {"mode", "max-size", "samples", "seed", "size"});
        LawOptions o;
        const std::string mode = require(e, f, "mode").value;
        if (mode == "exhaustive") {
            o.mode = SweepMode::Exhaustive;
            if (f.count("samples") || f.count("seed") || f.count("size"))
                fail(e.line, "samples/seed/size apply to mode=random only");
            if (f.count("max-size")) o.max_size = number(e, f.at("max-size"));
            if (o.max_size == 0 || o.max_size > kMaxExhaustiveSize)
                fail(e.line, "max-size must be between 1 and " + std::to_string(kMaxExhaustiveSize));
        } else if (mode == "random") {
            o.mode = SweepMode::Random;
            if (f.count("max-size")) fail(e.line, "max-size applies to mode=exhaustive only");
            if (f.count("samples")) o.samples = number(e, f.at("samples"));
            if (f.count("seed")) o.seed = number(e, f.at("seed"));
            if (f.count("size")) o.random_size = number(e, f.at("size"));
            if (o.random_size == 0 || o.random_size > 64) fail(e.line, "size must be between 1 and 64");
        } else {
            fail(e.line, "mode must be exhaustive or random");
        }
        return LawsCheck{name, e.line, o};
    }

    std::string source_;
    std::size_t cap_;
    std::vector<Entry> entries_;
    std::map<std::string, std::size_t> predicate_index_;
    std::map<std::string, Relation> relations_;
};

}  // namespace

const std::string& check_name(const Check& c) {
    return std::visit([](const auto& x) -> const std::string& { return x.name; }, c);
}

const Check* SpecFile::find_check(std::string_view name) const {
    for (const auto& c : checks)
        if (check_name(c) == name) return &c;
    return nullptr;
}

SpecFile load_spec(std::string_view text, std::string source, std::size_t cap) {
    return Loader(std::move(source), cap).load(text);
}

SpecFile load_spec_file(const std::filesystem::path& path, std::size_t cap) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_spec(buf.str(), path.filename().string(), cap);
}

}  // namespace exegete
