#include "lexer.hpp"

#include <array>
#include <cctype>

namespace exegete::detail {

namespace {

// Longest first.
constexpr std::array<std::string_view, 25> kPuncts = {
    ":=", "[]", "!=", "<=", ">=", "&&", "||", "..",
    ";",  "*",  "(",  ")",  "@",  "=",  "<",  ">",
    "!",  "+",  "-",  "/",  "%",  ",",  ":",  "{", "}",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    Location loc;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++loc.line;
                loc.column = 1;
            } else {
                ++loc.column;
            }
        }
    };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        const Location start = loc;
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < text.size() && ident_char(text[j])) ++j;
            out.push_back({Token::Kind::Ident, std::string(text.substr(i, j - i)), start});
            advance(j - i);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Kind::Int, std::string(text.substr(i, j - i)), start});
            advance(j - i);
            continue;
        }
        bool matched = false;
        for (auto p : kPuncts) {
            if (text.substr(i, p.size()) == p) {
                out.push_back({Token::Kind::Punct, std::string(p), start});
                advance(p.size());
                matched = true;
                break;
            }
        }
        if (!matched) throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::Kind::End, "", loc});
    return out;
}

}  // namespace exegete::detail
