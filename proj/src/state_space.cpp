#include "exegete/state_space.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "exegete/error.hpp"

namespace exegete {

std::string to_string(const Value& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
    return std::get<std::string>(v);
}

Domain Domain::integers(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw SemanticError("empty integer range " + std::to_string(lo) + ".." + std::to_string(hi));
    std::vector<Value> vals;
    for (std::int64_t i = lo; i <= hi; ++i) vals.emplace_back(i);
    return values(std::move(vals));
}

Domain Domain::values(std::vector<Value> vals) {
    if (vals.empty()) throw SemanticError("empty domain");
    Domain d;
    d.symbolic_ = std::holds_alternative<std::string>(vals.front());
    for (const auto& v : vals)
        if (std::holds_alternative<std::string>(v) != d.symbolic_)
            throw SemanticError("domain mixes integers and symbols");
    std::set<Value> seen;
    for (const auto& v : vals)
        if (!seen.insert(v).second) throw SemanticError("duplicate domain value '" + to_string(v) + "'");
    d.values_ = std::move(vals);
    return d;
}

std::optional<std::size_t> Domain::index_of(const Value& v) const {
    auto it = std::find(values_.begin(), values_.end(), v);
    if (it == values_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - values_.begin());
}

SpacePtr StateSpace::create(std::vector<Variable> vars, std::size_t cap) {
    if (vars.empty()) throw SemanticError("state space declares no variables");
    std::set<std::string> names;
    for (const auto& v : vars)
        if (!names.insert(v.name).second) throw SemanticError("duplicate variable '" + v.name + "'");
    for (const auto& v : vars)
        for (const auto& val : v.domain.values())
            if (const auto* s = std::get_if<std::string>(&val); s && names.count(*s))
                throw SemanticError("symbol '" + *s + "' clashes with a variable name");

    std::size_t size = 1;
    for (const auto& v : vars) {
        size *= v.domain.size();
        if (size > cap) throw CapExceeded(size, cap);
    }

    auto space = std::shared_ptr<StateSpace>(new StateSpace());
    space->vars_ = std::move(vars);
    space->size_ = size;
    space->strides_.resize(space->vars_.size());
    std::size_t stride = 1;
    for (std::size_t i = space->vars_.size(); i-- > 0;) {
        space->strides_[i] = stride;
        stride *= space->vars_[i].domain.size();
    }
    return space;
}

SpacePtr StateSpace::anonymous(std::size_t size) {
    if (size == 0) throw SemanticError("state space must have at least one state");
    return create({{"s", Domain::integers(0, static_cast<std::int64_t>(size) - 1)}}, size);
}

std::optional<std::size_t> StateSpace::find_variable(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return i;
    return std::nullopt;
}

std::size_t StateSpace::with_digit(std::size_t state, std::size_t var, std::size_t d) const {
    const std::size_t old = digit(state, var);
    return state - old * strides_[var] + d * strides_[var];
}

std::size_t StateSpace::index_of(const std::vector<std::size_t>& digits) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) idx += digits.at(i) * strides_[i];
    return idx;
}

std::string StateSpace::describe(std::size_t state) const {
    std::string out;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) out += ", ";
        out += vars_[i].name + "=" + to_string(value(state, i));
    }
    return out;
}

std::size_t state_cap_from_env() {
    const char* env = std::getenv("EXEGETE_MAX_STATES");
    if (env == nullptr || *env == '\0') return kDefaultStateCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw Error(std::string("invalid EXEGETE_MAX_STATES value '") + env + "'");
    return static_cast<std::size_t>(v);
}

}  // namespace exegete
