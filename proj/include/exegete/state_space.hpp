#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace exegete {

inline constexpr std::size_t kDefaultStateCap = 4096;

// A variable value: an integer or an enumeration symbol.
using Value = std::variant<std::int64_t, std::string>;

std::string to_string(const Value& v);

class Domain {
public:
    static Domain integers(std::int64_t lo, std::int64_t hi);
    static Domain values(std::vector<Value> values);

    std::size_t size() const { return values_.size(); }
    const Value& at(std::size_t i) const { return values_[i]; }
    const std::vector<Value>& values() const { return values_; }
    std::optional<std::size_t> index_of(const Value& v) const;
    bool is_symbolic() const { return symbolic_; }

    bool operator==(const Domain&) const = default;

private:
    std::vector<Value> values_;
    bool symbolic_ = false;
};

struct Variable {
    std::string name;
    Domain domain;
    bool operator==(const Variable&) const = default;
};

class StateSpace;
using SpacePtr = std::shared_ptr<const StateSpace>;

// The product of finitely many variable domains. State indices use a
// mixed-radix encoding with the first-declared variable most significant.
class StateSpace {
public:
    static SpacePtr create(std::vector<Variable> vars, std::size_t cap = kDefaultStateCap);

    // One variable "s" ranging over 0..size-1; used by the law sweeps.
    static SpacePtr anonymous(std::size_t size);

    std::size_t size() const { return size_; }
    const std::vector<Variable>& variables() const { return vars_; }
    std::optional<std::size_t> find_variable(std::string_view name) const;

    // Domain index of variable `var` in state `state`.
    std::size_t digit(std::size_t state, std::size_t var) const {
        return (state / strides_[var]) % vars_[var].domain.size();
    }
    const Value& value(std::size_t state, std::size_t var) const {
        return vars_[var].domain.at(digit(state, var));
    }
    // State obtained from `state` by setting variable `var` to domain index `digit`.
    std::size_t with_digit(std::size_t state, std::size_t var, std::size_t digit) const;
    std::size_t index_of(const std::vector<std::size_t>& digits) const;

    // "pw=correct, outcome=pending"
    std::string describe(std::size_t state) const;

    bool same_as(const StateSpace& other) const { return this == &other || vars_ == other.vars_; }

private:
    StateSpace() = default;

    std::vector<Variable> vars_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 1;
};

// Reads EXEGETE_MAX_STATES, falling back to kDefaultStateCap.
std::size_t state_cap_from_env();

}  // namespace exegete
