#include "tfcdr/expr.hpp"

#include "tfcdr/error.hpp"
#include "tfcdr/weights.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

namespace tfcdr {

enum class Op { constant, var_x, var_t, add, sub, mul, div, pow, neg, sin, cos, exp, log, sqrt, gamma };

struct ExprNode {
    Op op = Op::constant;
    double value = 0.0;
    std::shared_ptr<const ExprNode> a;
    std::shared_ptr<const ExprNode> b;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr leaf(Op op, double v = 0.0) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->value = v;
    return n;
}

NodePtr node(Op op, NodePtr a, NodePtr b = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

double eval(const ExprNode& n, double x, double t) {
    switch (n.op) {
    case Op::constant: return n.value;
    case Op::var_x: return x;
    case Op::var_t: return t;
    case Op::add: return eval(*n.a, x, t) + eval(*n.b, x, t);
    case Op::sub: return eval(*n.a, x, t) - eval(*n.b, x, t);
    case Op::mul: return eval(*n.a, x, t) * eval(*n.b, x, t);
    case Op::div: return eval(*n.a, x, t) / eval(*n.b, x, t);
    case Op::pow: return std::pow(eval(*n.a, x, t), eval(*n.b, x, t));
    case Op::neg: return -eval(*n.a, x, t);
    case Op::sin: return std::sin(eval(*n.a, x, t));
    case Op::cos: return std::cos(eval(*n.a, x, t));
    case Op::exp: return std::exp(eval(*n.a, x, t));
    case Op::log: return std::log(eval(*n.a, x, t));
    case Op::sqrt: return std::sqrt(eval(*n.a, x, t));
    case Op::gamma: return gamma_fn(eval(*n.a, x, t));
    }
    return 0.0;
}

// Recursive descent:
//   sum     := product (('+'|'-') product)*
//   product := unary (('*'|'/') unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := atom ('^' unary)?
//   atom    := number | name | name '(' sum ')' | '(' sum ')'
class Parser {
public:
    Parser(const std::string& text, double lambda) : s_(text), lambda_(lambda) {}

    NodePtr parse() {
        NodePtr n = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return n;
    }

    bool uses_x() const { return uses_x_; }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError("expression '" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr sum() {
        NodePtr n = product();
        for (;;) {
            if (accept('+')) n = node(Op::add, n, product());
            else if (accept('-')) n = node(Op::sub, n, product());
            else return n;
        }
    }

    NodePtr product() {
        NodePtr n = unary();
        for (;;) {
            if (accept('*')) n = node(Op::mul, n, unary());
            else if (accept('/')) n = node(Op::div, n, unary());
            else return n;
        }
    }

    NodePtr unary() {
        if (accept('-')) return node(Op::neg, unary());
        if (accept('+')) return unary();
        return power();
    }

    NodePtr power() {
        NodePtr n = atom();
        if (accept('^')) return node(Op::pow, n, unary());
        return n;
    }

    NodePtr atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr n = sum();
            if (!accept(')')) fail("expected ')'");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = s_.c_str() + pos_;
            char* end = nullptr;
            const double v = std::strtod(begin, &end);
            if (end == begin) fail("bad number");
            pos_ += static_cast<std::size_t>(end - begin);
            return leaf(Op::constant, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (name == "x") {
                uses_x_ = true;
                return leaf(Op::var_x);
            }
            if (name == "t") return leaf(Op::var_t);
            if (name == "pi") return leaf(Op::constant, std::numbers::pi);
            if (name == "lambda") return leaf(Op::constant, lambda_);
            static const std::vector<std::pair<std::string, Op>> functions{
                {"sin", Op::sin}, {"cos", Op::cos}, {"exp", Op::exp},
                {"log", Op::log}, {"sqrt", Op::sqrt}, {"gamma", Op::gamma}};
            for (const auto& [fname, op] : functions) {
                if (name != fname) continue;
                if (!accept('(')) fail("expected '(' after " + name);
                NodePtr arg = sum();
                if (!accept(')')) fail("expected ')'");
                return node(op, arg);
            }
            pos_ = start;
            fail("unknown name '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    double lambda_;
    std::size_t pos_ = 0;
    bool uses_x_ = false;
};

} // namespace

Expr Expr::compile(const std::string& text, double lambda) {
    Parser parser(text, lambda);
    Expr e;
    e.root_ = parser.parse();
    e.text_ = text;
    e.uses_x_ = parser.uses_x();
    return e;
}

double Expr::operator()(double x, double t) const {
    return eval(*root_, x, t);
}

} // namespace tfcdr
