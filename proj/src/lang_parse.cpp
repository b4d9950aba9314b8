#include <set>

#include "exegete/lang.hpp"
#include "lexer.hpp"

namespace exegete::lang {

using detail::Token;
using detail::TokenStream;

namespace {

const std::set<std::string, std::less<>> kKeywords = {
    "skip", "diverge", "assume", "if", "then", "else", "fi", "while", "do",
    "od",   "true",    "false",  "and", "or", "not",
};

ProgramPtr make(Program p) { return std::make_shared<const Program>(std::move(p)); }

ExprPtr make_expr(Expr::Kind k, ExprPtr l, ExprPtr r, Location loc) {
    return std::make_shared<const Expr>(Expr{k, 0, {}, std::move(l), std::move(r), loc});
}

BExprPtr make_bool(BExpr::Kind k, BExprPtr l, BExprPtr r, Location loc) {
    return std::make_shared<const BExpr>(BExpr{k, CmpOp::Eq, nullptr, nullptr, std::move(l), std::move(r), loc});
}

class Parser {
public:
    explicit Parser(std::string_view text) : ts_(text) {}

    ProgramPtr program_only() {
        auto p = prog();
        ts_.expect_end();
        return p;
    }
    BExprPtr bexpr_only() {
        auto b = bexpr();
        ts_.expect_end();
        return b;
    }
    ExprPtr expr_only() {
        auto e = expr();
        ts_.expect_end();
        return e;
    }

private:
    // ---- programs

    ProgramPtr prog() {
        auto p = seq();
        while (ts_.is_punct("[]")) {
            const Location loc = ts_.next().loc;
            auto q = seq();
            p = make({Program::Kind::Choice, {}, nullptr, nullptr, p, q, loc});
        }
        return p;
    }

    ProgramPtr seq() {
        auto p = post();
        while (ts_.is_punct(";")) {
            const Location loc = ts_.next().loc;
            auto q = post();
            p = make({Program::Kind::Seq, {}, nullptr, nullptr, p, q, loc});
        }
        return p;
    }

    ProgramPtr post() {
        auto p = atom();
        while (ts_.is_punct("*")) {
            const Location loc = ts_.next().loc;
            p = make({Program::Kind::Star, {}, nullptr, nullptr, p, nullptr, loc});
        }
        return p;
    }

    ProgramPtr atom() {
        const Token tok = ts_.peek();
        const Location loc = tok.loc;
        if (ts_.accept_word("skip")) return make({Program::Kind::Skip, {}, nullptr, nullptr, nullptr, nullptr, loc});
        if (ts_.accept_word("diverge"))
            return make({Program::Kind::Diverge, {}, nullptr, nullptr, nullptr, nullptr, loc});
        if (ts_.accept_word("assume")) {
            ts_.expect_punct("(");
            auto b = bexpr();
            ts_.expect_punct(")");
            return make({Program::Kind::Assume, {}, nullptr, b, nullptr, nullptr, loc});
        }
        if (ts_.accept_word("if")) {
            auto g = bexpr();
            ts_.expect_word("then");
            auto a = prog();
            ts_.expect_word("else");
            auto b = prog();
            ts_.expect_word("fi");
            return make({Program::Kind::If, {}, nullptr, g, a, b, loc});
        }
        if (ts_.accept_word("while")) {
            auto g = bexpr();
            ts_.expect_word("do");
            auto body = prog();
            ts_.expect_word("od");
            return make({Program::Kind::While, {}, nullptr, g, body, nullptr, loc});
        }
        if (ts_.accept_punct("(")) {
            auto p = prog();
            ts_.expect_punct(")");
            return p;
        }
        if (ts_.accept_punct("@")) {
            const Token& id = ts_.peek();
            if (id.kind != Token::Kind::Ident) ts_.fail("expected a program name after '@'");
            return make({Program::Kind::Ref, ts_.next().text, nullptr, nullptr, nullptr, nullptr, loc});
        }
        if (tok.kind == Token::Kind::Ident && !kKeywords.count(tok.text) && ts_.is_punct(":=", 1)) {
            ts_.next();
            ts_.next();
            auto e = expr();
            return make({Program::Kind::Assign, tok.text, e, nullptr, nullptr, nullptr, loc});
        }
        ts_.fail("expected a statement");
    }

    // ---- boolean expressions

    BExprPtr bexpr() {
        auto b = conj();
        while (ts_.is_punct("||") || ts_.is_word("or")) {
            const Location loc = ts_.next().loc;
            b = make_bool(BExpr::Kind::Or, b, conj(), loc);
        }
        return b;
    }

    BExprPtr conj() {
        auto b = neg();
        while (ts_.is_punct("&&") || ts_.is_word("and")) {
            const Location loc = ts_.next().loc;
            b = make_bool(BExpr::Kind::And, b, neg(), loc);
        }
        return b;
    }

    BExprPtr neg() {
        if (ts_.is_punct("!") || ts_.is_word("not")) {
            const Location loc = ts_.next().loc;
            return make_bool(BExpr::Kind::Not, neg(), nullptr, loc);
        }
        return bprimary();
    }

    bool at_cmp() const {
        for (auto op : {"=", "!=", "<", "<=", ">", ">="})
            if (ts_.is_punct(op)) return true;
        return false;
    }

    bool at_arith() const {
        for (auto op : {"+", "-", "*", "/", "%"})
            if (ts_.is_punct(op)) return true;
        return false;
    }

    BExprPtr bprimary() {
        const Location loc = ts_.peek().loc;
        if (ts_.accept_word("true")) return make_bool(BExpr::Kind::True, nullptr, nullptr, loc);
        if (ts_.accept_word("false")) return make_bool(BExpr::Kind::False, nullptr, nullptr, loc);
        if (ts_.is_punct("(")) {
            // "(" may open a nested boolean or an arithmetic operand of a
            // comparison; try the boolean reading first.
            const auto m = ts_.mark();
            try {
                ts_.next();
                auto b = bexpr();
                ts_.expect_punct(")");
                if (!at_cmp() && !at_arith()) return b;
            } catch (const ParseError&) {
            }
            ts_.reset(m);
        }
        auto a = expr();
        CmpOp op;
        if (ts_.accept_punct("=")) op = CmpOp::Eq;
        else if (ts_.accept_punct("!=")) op = CmpOp::Ne;
        else if (ts_.accept_punct("<=")) op = CmpOp::Le;
        else if (ts_.accept_punct(">=")) op = CmpOp::Ge;
        else if (ts_.accept_punct("<")) op = CmpOp::Lt;
        else if (ts_.accept_punct(">")) op = CmpOp::Gt;
        else ts_.fail("expected a comparison operator");
        auto b = expr();
        return std::make_shared<const BExpr>(BExpr{BExpr::Kind::Cmp, op, a, b, nullptr, nullptr, loc});
    }

    // ---- value expressions

    ExprPtr expr() {
        auto e = term();
        for (;;) {
            if (ts_.is_punct("+")) {
                const Location loc = ts_.next().loc;
                e = make_expr(Expr::Kind::Add, e, term(), loc);
            } else if (ts_.is_punct("-")) {
                const Location loc = ts_.next().loc;
                e = make_expr(Expr::Kind::Sub, e, term(), loc);
            } else {
                return e;
            }
        }
    }

    bool starts_operand(std::size_t ahead) const {
        const Token& t = ts_.peek(ahead);
        if (t.kind == Token::Kind::Int) return true;
        if (t.kind == Token::Kind::Ident) return !kKeywords.count(t.text);
        return t.kind == Token::Kind::Punct && (t.text == "(" || t.text == "-");
    }

    ExprPtr term() {
        auto e = unary();
        for (;;) {
            Expr::Kind k;
            if (ts_.is_punct("*") && starts_operand(1)) k = Expr::Kind::Mul;
            else if (ts_.is_punct("/")) k = Expr::Kind::Div;
            else if (ts_.is_punct("%")) k = Expr::Kind::Mod;
            else return e;
            const Location loc = ts_.next().loc;
            e = make_expr(k, e, unary(), loc);
        }
    }

    ExprPtr unary() {
        if (ts_.is_punct("-")) {
            const Location loc = ts_.next().loc;
            return make_expr(Expr::Kind::Neg, unary(), nullptr, loc);
        }
        const Token tok = ts_.peek();
        if (tok.kind == Token::Kind::Int) {
            ts_.next();
            std::int64_t v = 0;
            try {
                v = std::stoll(tok.text);
            } catch (const std::out_of_range&) {
                throw ParseError(tok.loc, "integer literal out of range");
            }
            return std::make_shared<const Expr>(Expr{Expr::Kind::Int, v, {}, nullptr, nullptr, tok.loc});
        }
        if (tok.kind == Token::Kind::Ident && !kKeywords.count(tok.text)) {
            ts_.next();
            return std::make_shared<const Expr>(Expr{Expr::Kind::Name, 0, tok.text, nullptr, nullptr, tok.loc});
        }
        if (ts_.accept_punct("(")) {
            auto e = expr();
            ts_.expect_punct(")");
            return e;
        }
        ts_.fail("expected an expression");
    }

    TokenStream ts_;
};

// ---- printing

int expr_prec(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub: return 0;
        case Expr::Kind::Mul:
        case Expr::Kind::Div:
        case Expr::Kind::Mod: return 1;
        case Expr::Kind::Neg: return 2;
        default: return 3;
    }
}

std::string print_expr(const Expr& e, int ctx) {
    std::string s;
    switch (e.kind) {
        case Expr::Kind::Int: s = std::to_string(e.value); break;
        case Expr::Kind::Name: s = e.name; break;
        case Expr::Kind::Neg: s = "-" + print_expr(*e.lhs, 2); break;
        case Expr::Kind::Add: s = print_expr(*e.lhs, 0) + " + " + print_expr(*e.rhs, 1); break;
        case Expr::Kind::Sub: s = print_expr(*e.lhs, 0) + " - " + print_expr(*e.rhs, 1); break;
        case Expr::Kind::Mul: s = print_expr(*e.lhs, 1) + " * " + print_expr(*e.rhs, 2); break;
        case Expr::Kind::Div: s = print_expr(*e.lhs, 1) + " / " + print_expr(*e.rhs, 2); break;
        case Expr::Kind::Mod: s = print_expr(*e.lhs, 1) + " % " + print_expr(*e.rhs, 2); break;
    }
    return expr_prec(e) < ctx ? "(" + s + ")" : s;
}

std::string_view cmp_text(CmpOp op) {
    switch (op) {
        case CmpOp::Eq: return "=";
        case CmpOp::Ne: return "!=";
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
    }
    return "?";
}

int bool_prec(const BExpr& b) {
    switch (b.kind) {
        case BExpr::Kind::Or: return 0;
        case BExpr::Kind::And: return 1;
        case BExpr::Kind::Not: return 2;
        default: return 3;
    }
}

std::string print_bool(const BExpr& b, int ctx) {
    std::string s;
    switch (b.kind) {
        case BExpr::Kind::True: s = "true"; break;
        case BExpr::Kind::False: s = "false"; break;
        case BExpr::Kind::Not:
            s = b.lhs->kind == BExpr::Kind::Cmp ? "!(" + print_bool(*b.lhs, 0) + ")" : "!" + print_bool(*b.lhs, 2);
            break;
        case BExpr::Kind::And: s = print_bool(*b.lhs, 1) + " && " + print_bool(*b.rhs, 2); break;
        case BExpr::Kind::Or: s = print_bool(*b.lhs, 0) + " || " + print_bool(*b.rhs, 1); break;
        case BExpr::Kind::Cmp:
            s = print_expr(*b.a, 0) + " " + std::string(cmp_text(b.op)) + " " + print_expr(*b.b, 0);
            break;
    }
    return bool_prec(b) < ctx ? "(" + s + ")" : s;
}

int prog_prec(const Program& p) {
    switch (p.kind) {
        case Program::Kind::Choice: return 0;
        case Program::Kind::Seq: return 1;
        case Program::Kind::Star: return 2;
        default: return 3;
    }
}

std::string print_prog(const Program& p, int ctx) {
    std::string s;
    switch (p.kind) {
        case Program::Kind::Skip: s = "skip"; break;
        case Program::Kind::Diverge: s = "diverge"; break;
        // An assignment under `*` or `;` needs parentheses to stay unambiguous.
        case Program::Kind::Assign: s = p.name + " := " + print_expr(*p.expr, 0); break;
        case Program::Kind::Assume: s = "assume(" + print_bool(*p.cond, 0) + ")"; break;
        case Program::Kind::Seq: s = print_prog(*p.first, 1) + "; " + print_prog(*p.second, 2); break;
        case Program::Kind::Choice: s = print_prog(*p.first, 0) + " [] " + print_prog(*p.second, 1); break;
        case Program::Kind::Star: s = print_prog(*p.first, 3) + "*"; break;
        case Program::Kind::If:
            s = "if " + print_bool(*p.cond, 0) + " then " + print_prog(*p.first, 0) + " else " +
                print_prog(*p.second, 0) + " fi";
            break;
        case Program::Kind::While:
            s = "while " + print_bool(*p.cond, 0) + " do " + print_prog(*p.first, 0) + " od";
            break;
        case Program::Kind::Ref: s = "@" + p.name; break;
    }
    const int prec = p.kind == Program::Kind::Assign && ctx >= 3 ? -1 : prog_prec(p);
    return prec < ctx ? "(" + s + ")" : s;
}

}  // namespace

ProgramPtr Program::skip() { return make({Kind::Skip, {}, nullptr, nullptr, nullptr, nullptr, {}}); }
ProgramPtr Program::diverge() { return make({Kind::Diverge, {}, nullptr, nullptr, nullptr, nullptr, {}}); }
ProgramPtr Program::assign(std::string var, ExprPtr e) {
    return make({Kind::Assign, std::move(var), std::move(e), nullptr, nullptr, nullptr, {}});
}
ProgramPtr Program::assume(BExprPtr b) { return make({Kind::Assume, {}, nullptr, std::move(b), nullptr, nullptr, {}}); }
ProgramPtr Program::seq(ProgramPtr a, ProgramPtr b) {
    return make({Kind::Seq, {}, nullptr, nullptr, std::move(a), std::move(b), {}});
}
ProgramPtr Program::choice(ProgramPtr a, ProgramPtr b) {
    return make({Kind::Choice, {}, nullptr, nullptr, std::move(a), std::move(b), {}});
}
ProgramPtr Program::star(ProgramPtr a) { return make({Kind::Star, {}, nullptr, nullptr, std::move(a), nullptr, {}}); }
ProgramPtr Program::if_(BExprPtr g, ProgramPtr a, ProgramPtr b) {
    return make({Kind::If, {}, nullptr, std::move(g), std::move(a), std::move(b), {}});
}
ProgramPtr Program::while_(BExprPtr g, ProgramPtr body) {
    return make({Kind::While, {}, nullptr, std::move(g), std::move(body), nullptr, {}});
}
ProgramPtr Program::ref(std::string name) {
    return make({Kind::Ref, std::move(name), nullptr, nullptr, nullptr, nullptr, {}});
}

ProgramPtr parse_program(std::string_view text) { return Parser(text).program_only(); }
BExprPtr parse_bexpr(std::string_view text) { return Parser(text).bexpr_only(); }
ExprPtr parse_expr(std::string_view text) { return Parser(text).expr_only(); }

std::string to_string(const Expr& e) { return print_expr(e, 0); }
std::string to_string(const BExpr& b) { return print_bool(b, 0); }
std::string to_string(const Program& p) { return print_prog(p, 0); }

}  // namespace exegete::lang
