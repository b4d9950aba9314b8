#pragma once

// Tokenizer shared by the program, boolean-expression and term parsers.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exegete/error.hpp"

namespace exegete::detail {

struct Token {
    enum class Kind { Ident, Int, Punct, End };
    Kind kind;
    std::string text;
    Location loc;
};

std::vector<Token> tokenize(std::string_view text);

class TokenStream {
public:
    explicit TokenStream(std::string_view text) : toks_(tokenize(text)) {}

    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& next() {
        const Token& t = peek();
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool at_end() const { return peek().kind == Token::Kind::End; }

    bool is_punct(std::string_view p, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Token::Kind::Punct && t.text == p;
    }
    bool is_word(std::string_view w, std::size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Token::Kind::Ident && t.text == w;
    }
    bool accept_punct(std::string_view p) {
        if (!is_punct(p)) return false;
        next();
        return true;
    }
    bool accept_word(std::string_view w) {
        if (!is_word(w)) return false;
        next();
        return true;
    }
    void expect_punct(std::string_view p) {
        if (!accept_punct(p)) fail("expected '" + std::string(p) + "'");
    }
    void expect_word(std::string_view w) {
        if (!accept_word(w)) fail("expected '" + std::string(w) + "'");
    }
    void expect_end() {
        if (!at_end()) fail("unexpected trailing input");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        const std::string found = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.loc, msg + ", found " + found);
    }

    std::size_t mark() const { return pos_; }
    void reset(std::size_t m) { pos_ = m; }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace exegete::detail
