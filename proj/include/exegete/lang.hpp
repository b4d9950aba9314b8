#pragma once

// A small guarded-command language and its relational semantics.
//
//   prog  := seq ("[]" seq)*
//   seq   := post (";" post)*
//   post  := atom "*"*
//   atom  := "skip" | "diverge" | IDENT ":=" expr | "assume" "(" bexpr ")"
//          | "if" bexpr "then" prog "else" prog "fi"
//          | "while" bexpr "do" prog "od" | "(" prog ")" | "@" IDENT
//
// Boolean expressions use `!`/`not`, `&&`/`and`, `||`/`or` (in decreasing
// precedence), comparisons = != < <= > >=, and the literals true/false.
// Value expressions are integers, variables, enumeration symbols and
// + - * / % over integers. A `*` directly after an operand that can start
// another operand is multiplication; write `(x := e)*` to iterate an
// assignment.
//
// A diverging execution contributes no pair to a program's relation.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "exegete/error.hpp"
#include "exegete/relalg.hpp"

namespace exegete::lang {

struct Expr;
struct BExpr;
struct Program;
using ExprPtr = std::shared_ptr<const Expr>;
using BExprPtr = std::shared_ptr<const BExpr>;
using ProgramPtr = std::shared_ptr<const Program>;

struct Expr {
    enum class Kind { Int, Name, Neg, Add, Sub, Mul, Div, Mod };
    Kind kind;
    std::int64_t value = 0;
    std::string name;
    ExprPtr lhs;
    ExprPtr rhs;
    Location loc;
};

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

struct BExpr {
    enum class Kind { True, False, Not, And, Or, Cmp };
    Kind kind;
    CmpOp op = CmpOp::Eq;
    ExprPtr a;
    ExprPtr b;
    BExprPtr lhs;
    BExprPtr rhs;
    Location loc;
};

struct Program {
    enum class Kind { Skip, Diverge, Assign, Assume, Seq, Choice, Star, If, While, Ref };
    Kind kind;
    std::string name;  // Assign target or Ref name
    ExprPtr expr;      // Assign
    BExprPtr cond;     // Assume, If, While
    ProgramPtr first;  // Seq, Choice, Star, If (then), While (body)
    ProgramPtr second; // Seq, Choice, If (else)
    Location loc;

    static ProgramPtr skip();
    static ProgramPtr diverge();
    static ProgramPtr assign(std::string var, ExprPtr e);
    static ProgramPtr assume(BExprPtr b);
    static ProgramPtr seq(ProgramPtr a, ProgramPtr b);
    static ProgramPtr choice(ProgramPtr a, ProgramPtr b);
    static ProgramPtr star(ProgramPtr a);
    static ProgramPtr if_(BExprPtr g, ProgramPtr a, ProgramPtr b);
    static ProgramPtr while_(BExprPtr g, ProgramPtr body);
    static ProgramPtr ref(std::string name);
};

ProgramPtr parse_program(std::string_view text);
BExprPtr parse_bexpr(std::string_view text);
ExprPtr parse_expr(std::string_view text);

std::string to_string(const Expr& e);
std::string to_string(const BExpr& b);
std::string to_string(const Program& p);

using ProgramTable = std::map<std::string, ProgramPtr, std::less<>>;

// Substitutes every `@name` by its definition. Unknown names and cyclic
// references are SemanticErrors.
ProgramPtr resolve(const ProgramPtr& p, const ProgramTable& table);

// Satisfaction set of `b`. Unknown identifiers and comparisons between an
// integer and a symbol are SemanticErrors.
Predicate eval_pred(const BExpr& b, const SpacePtr& space);

// Input/output relation of `p`. Assignments are evaluated only on states
// that can reach them; a value outside the target's domain there is a
// DomainError. `p` must not contain unresolved references.
Relation denote(const Program& p, const SpacePtr& space);

}  // namespace exegete::lang
