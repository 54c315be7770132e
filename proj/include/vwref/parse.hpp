#pragma once

#include "vwref/ratfunc.hpp"

#include <map>
#include <memory>
#include <string>

namespace vw {

/// Expression AST shared by the canonical RatFunc parser, cohomology-class
/// expressions and the integer (binding) expressions of scenario files.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Op { Num, Sym, Add, Sub, Mul, Div, Neg, Pow };
    Op op = Op::Num;
    Rat value;         // Num
    std::string name;  // Sym
    ExprPtr lhs, rhs;  // binary ops; Neg uses lhs only
};

/// Recursive-descent parser for +, -, *, /, ^, unary minus, parentheses,
/// integer literals and identifiers. '^' is right-associative and binds
/// tightest. Throws ParseError.
ExprPtr parse_expression(const std::string& src);

using Bindings = std::map<std::string, long>;

/// Evaluates in the rational-function field: "s" is the formal variable,
/// binding names become integer constants, declared parameter symbols stay
/// symbolic. Exponents must evaluate to integers.
RatFunc eval_ratfunc(const ExprPtr& e, const Bindings& binds);

inline RatFunc parse_ratfunc(const std::string& src, const Bindings& binds = {}) {
    return eval_ratfunc(parse_expression(src), binds);
}

/// Evaluates an integer expression over binding names (used for atom
/// weights and copy counts). Division must be exact.
long eval_integer(const ExprPtr& e, const Bindings& binds);

} // namespace vw
