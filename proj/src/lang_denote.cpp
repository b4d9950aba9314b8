#include <set>
#include <variant>

#include "exegete/lang.hpp"
#include "exegete/transformers.hpp"

namespace exegete::lang {

namespace {

std::string where(Location loc) { return std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": "; }

bool is_symbol_of(const StateSpace& space, const std::string& name) {
    for (const auto& v : space.variables())
        if (v.domain.is_symbolic() && v.domain.index_of(Value{name})) return true;
    return false;
}

std::int64_t as_int(const Value& v, const Expr& at) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    throw SemanticError(where(at.loc) + "arithmetic on symbol '" + std::get<std::string>(v) + "'");
}

Value eval_expr(const Expr& e, const StateSpace& space, std::size_t state) {
    auto arith = [&](auto op) -> Value {
        const std::int64_t a = as_int(eval_expr(*e.lhs, space, state), *e.lhs);
        const std::int64_t b = as_int(eval_expr(*e.rhs, space, state), *e.rhs);
        std::int64_t out = 0;
        if (!op(a, b, out))
            throw DomainError(where(e.loc) + "arithmetic error in '" + to_string(e) + "' in state " +
                              space.describe(state));
        return out;
    };
    switch (e.kind) {
        case Expr::Kind::Int: return e.value;
        case Expr::Kind::Name: {
            if (auto var = space.find_variable(e.name)) return space.value(state, *var);
            if (is_symbol_of(space, e.name)) return e.name;
            throw SemanticError(where(e.loc) + "unknown identifier '" + e.name + "'");
        }
        case Expr::Kind::Neg: {
            const std::int64_t a = as_int(eval_expr(*e.lhs, space, state), *e.lhs);
            std::int64_t out = 0;
            if (__builtin_sub_overflow(std::int64_t{0}, a, &out))
                throw DomainError(where(e.loc) + "arithmetic overflow");
            return out;
        }
        case Expr::Kind::Add:
            return arith([](std::int64_t a, std::int64_t b, std::int64_t& o) { return !__builtin_add_overflow(a, b, &o); });
        case Expr::Kind::Sub:
            return arith([](std::int64_t a, std::int64_t b, std::int64_t& o) { return !__builtin_sub_overflow(a, b, &o); });
        case Expr::Kind::Mul:
            return arith([](std::int64_t a, std::int64_t b, std::int64_t& o) { return !__builtin_mul_overflow(a, b, &o); });
        case Expr::Kind::Div:
            return arith([](std::int64_t a, std::int64_t b, std::int64_t& o) {
                if (b == 0 || (b == -1 && a == INT64_MIN)) return false;
                o = a / b;
                return true;
            });
        case Expr::Kind::Mod:
            return arith([](std::int64_t a, std::int64_t b, std::int64_t& o) {
                if (b == 0 || (b == -1 && a == INT64_MIN)) return false;
                o = a % b;
                return true;
            });
    }
    throw Error("unknown expression kind");
}

bool compare(const BExpr& b, const StateSpace& space, std::size_t state) {
    const Value x = eval_expr(*b.a, space, state);
    const Value y = eval_expr(*b.b, space, state);
    if (x.index() != y.index())
        throw SemanticError(where(b.loc) + "comparison between an integer and a symbol in '" + to_string(b) + "'");
    if (std::holds_alternative<std::string>(x) && b.op != CmpOp::Eq && b.op != CmpOp::Ne)
        throw SemanticError(where(b.loc) + "symbols support only = and != in '" + to_string(b) + "'");
    switch (b.op) {
        case CmpOp::Eq: return x == y;
        case CmpOp::Ne: return x != y;
        case CmpOp::Lt: return x < y;
        case CmpOp::Le: return x <= y;
        case CmpOp::Gt: return x > y;
        case CmpOp::Ge: return x >= y;
    }
    return false;
}

bool eval_bool(const BExpr& b, const StateSpace& space, std::size_t state) {
    switch (b.kind) {
        case BExpr::Kind::True: return true;
        case BExpr::Kind::False: return false;
        case BExpr::Kind::Not: return !eval_bool(*b.lhs, space, state);
        case BExpr::Kind::And: return eval_bool(*b.lhs, space, state) && eval_bool(*b.rhs, space, state);
        case BExpr::Kind::Or: return eval_bool(*b.lhs, space, state) || eval_bool(*b.rhs, space, state);
        case BExpr::Kind::Cmp: return compare(b, space, state);
    }
    return false;
}

// Relation of `p` on the rows in `reach`; other rows are left unspecified
// and are never consulted by the caller.
Relation denote_from(const Program& p, const SpacePtr& space, const Predicate& reach) {
    switch (p.kind) {
        case Program::Kind::Skip: return identity(space);
        case Program::Kind::Diverge: return empty_relation(space);
        case Program::Kind::Assign: {
            const auto var = space->find_variable(p.name);
            if (!var) throw SemanticError(where(p.loc) + "assignment to unknown variable '" + p.name + "'");
            const Domain& dom = space->variables()[*var].domain;
            Relation r(space);
            for (std::size_t s = 0; s < space->size(); ++s) {
                if (!reach.contains(s)) continue;
                const Value v = eval_expr(*p.expr, *space, s);
                const auto idx = dom.index_of(v);
                if (!idx)
                    throw DomainError(where(p.loc) + "'" + to_string(p) + "' yields " + exegete::to_string(v) +
                                      ", outside the domain of " + p.name + ", in state " + space->describe(s));
                r.insert(s, space->with_digit(s, *var, *idx));
            }
            return r;
        }
        case Program::Kind::Assume: return test(eval_pred(*p.cond, space));
        case Program::Kind::Seq: {
            Relation a = denote_from(*p.first, space, reach);
            Relation b = denote_from(*p.second, space, asp(a, reach));
            return compose(a, b);
        }
        case Program::Kind::Choice:
            return unite(denote_from(*p.first, space, reach), denote_from(*p.second, space, reach));
        case Program::Kind::Star: {
            Predicate at = reach;
            for (;;) {
                Relation body = denote_from(*p.first, space, at);
                Predicate grown = unite(at, asp(body, at));
                if (grown == at) return star(body);
                at = std::move(grown);
            }
        }
        case Program::Kind::If: {
            const Predicate g = eval_pred(*p.cond, space);
            const Predicate ng = complement(g);
            Relation a = denote_from(*p.first, space, intersect(reach, g));
            Relation b = denote_from(*p.second, space, intersect(reach, ng));
            return unite(compose(test(g), a), compose(test(ng), b));
        }
        case Program::Kind::While: {
            const Predicate g = eval_pred(*p.cond, space);
            const Relation exit = test(complement(g));
            Predicate at = reach;
            for (;;) {
                const Predicate entering = intersect(at, g);
                Relation body = compose(test(g), denote_from(*p.first, space, entering));
                Predicate grown = unite(at, asp(body, at));
                if (grown == at) return compose(star(body), exit);
                at = std::move(grown);
            }
        }
        case Program::Kind::Ref:
            throw SemanticError(where(p.loc) + "unresolved program reference '@" + p.name + "'");
    }
    throw Error("unknown program kind");
}

ProgramPtr substitute(const ProgramPtr& p, const ProgramTable& table, std::set<std::string, std::less<>>& active) {
    using K = Program::Kind;
    switch (p->kind) {
        case K::Ref: {
            auto it = table.find(p->name);
            if (it == table.end()) throw SemanticError(where(p->loc) + "unknown program '" + p->name + "'");
            if (active.count(p->name)) throw SemanticError("cyclic program reference through '" + p->name + "'");
            active.insert(p->name);
            auto out = substitute(it->second, table, active);
            active.erase(p->name);
            return out;
        }
        case K::Seq:
        case K::Choice:
        case K::If: {
            auto a = substitute(p->first, table, active);
            auto b = substitute(p->second, table, active);
            if (a == p->first && b == p->second) return p;
            Program copy = *p;
            copy.first = a;
            copy.second = b;
            return std::make_shared<const Program>(std::move(copy));
        }
        case K::Star:
        case K::While: {
            auto a = substitute(p->first, table, active);
            if (a == p->first) return p;
            Program copy = *p;
            copy.first = a;
            return std::make_shared<const Program>(std::move(copy));
        }
        default: return p;
    }
}

}  // namespace

ProgramPtr resolve(const ProgramPtr& p, const ProgramTable& table) {
    std::set<std::string, std::less<>> active;
    return substitute(p, table, active);
}

Predicate eval_pred(const BExpr& b, const SpacePtr& space) {
    Predicate out(space);
    for (std::size_t s = 0; s < space->size(); ++s)
        if (eval_bool(b, *space, s)) out.insert(s);
    return out;
}

Relation denote(const Program& p, const SpacePtr& space) { return denote_from(p, space, Predicate(space, true)); }

}  // namespace exegete::lang
