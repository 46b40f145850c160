#pragma once

#include <memory>
#include <string>

namespace tfcdr {

struct ExprNode;

/// Compiled arithmetic expression in the variables x and t.
///
/// Grammar: numbers, x, t, pi, lambda; + − * / ^ (right associative, binding
/// tighter than unary minus); parentheses; sin, cos, exp, log, sqrt, gamma.
/// `lambda` is bound to a value at compile time.
class Expr {
public:
    /// Throws ConfigError with the column of the offending token.
    static Expr compile(const std::string& text, double lambda);

    double operator()(double x, double t) const;

    const std::string& text() const { return text_; }
    bool uses_x() const { return uses_x_; }

private:
    std::shared_ptr<const ExprNode> root_;
    std::string text_;
    bool uses_x_ = false;
};

} // namespace tfcdr
