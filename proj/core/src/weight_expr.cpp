#include "plurizero/weight_expr.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace plurizero {

namespace {

enum class VarId { r2, re1, im1, re2, im2 };

double read_var(VarId id, const Point& z) {
    switch (id) {
        case VarId::r2: {
            double s = 0.0;
            for (const Complex& c : z) s += std::norm(c);
            return s;
        }
        case VarId::re1: return z[0].real();
        case VarId::im1: return z[0].imag();
        case VarId::re2: return z[1].real();
        case VarId::im2: return z[1].imag();
    }
    return 0.0;
}

}  // namespace

struct Weight::Node {
    enum class Kind { constant, variable, add, sub, mul, pow, neg } kind;
    double value = 0.0;
    VarId var = VarId::r2;
    int exponent = 1;
    std::shared_ptr<const Node> lhs, rhs;

    double eval(const Point& z) const {
        switch (kind) {
            case Kind::constant: return value;
            case Kind::variable: return read_var(var, z);
            case Kind::add: return lhs->eval(z) + rhs->eval(z);
            case Kind::sub: return lhs->eval(z) - rhs->eval(z);
            case Kind::mul: return lhs->eval(z) * rhs->eval(z);
            case Kind::pow: {
                double base = lhs->eval(z), acc = 1.0;
                for (int i = 0; i < exponent; ++i) acc *= base;
                return acc;
            }
            case Kind::neg: return -lhs->eval(z);
        }
        return 0.0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const Weight::Node>;
using Node = Weight::Node;

class Parser {
  public:
    Parser(const std::string& text, int num_vars) : text_(text), num_vars_(num_vars) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input at position " + std::to_string(pos_));
        return e;
    }

  private:
    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            skip_ws();
            if (match('+')) {
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::add;
                n->lhs = lhs;
                n->rhs = term();
                lhs = n;
            } else if (match('-')) {
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::sub;
                n->lhs = lhs;
                n->rhs = term();
                lhs = n;
            } else {
                return lhs;
            }
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        for (;;) {
            skip_ws();
            if (match('*')) {
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::mul;
                n->lhs = lhs;
                n->rhs = factor();
                lhs = n;
            } else {
                return lhs;
            }
        }
    }

    NodePtr factor() {
        NodePtr base = atom();
        skip_ws();
        if (match('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_) fail("expected integer exponent after '^'");
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::pow;
            n->lhs = base;
            n->exponent = std::stoi(text_.substr(start, pos_ - start));
            return n;
        }
        return base;
    }

    NodePtr atom() {
        skip_ws();
        if (match('-')) {
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::neg;
            n->lhs = atom();
            return n;
        }
        if (match('(')) {
            NodePtr e = expr();
            skip_ws();
            if (!match(')')) fail("missing ')'");
            return e;
        }
        if (pos_ < text_.size() &&
            (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            std::size_t consumed = 0;
            double v = std::stod(text_.substr(pos_), &consumed);
            pos_ += consumed;
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::constant;
            n->value = v;
            return n;
        }
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return variable(text_.substr(start, pos_ - start));
        }
        fail("expected a number, variable, or '(' at position " + std::to_string(pos_));
        return nullptr;
    }

    NodePtr variable(const std::string& name) {
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::variable;
        if (name == "r2") {
            n->var = VarId::r2;
        } else if (name == "re" || name == "re1") {
            n->var = VarId::re1;
        } else if (name == "im" || name == "im1") {
            n->var = VarId::im1;
        } else if (name == "re2" || name == "im2") {
            if (num_vars_ < 2) fail("variable '" + name + "' requires m = 2");
            n->var = (name == "re2") ? VarId::re2 : VarId::im2;
        } else {
            fail("unknown variable '" + name + "' (allowed: r2, re1, im1" +
                 std::string(num_vars_ >= 2 ? ", re2, im2" : "") + ")");
        }
        return n;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool match(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("weight expression '" + text_ + "': " + msg);
    }

    const std::string& text_;
    int num_vars_;
    std::size_t pos_ = 0;
};

bool node_is_zero(const NodePtr& n) {
    return n->kind == Node::Kind::constant && n->value == 0.0;
}

}  // namespace

Weight::Weight() = default;

Weight Weight::parse(const std::string& expression, int num_vars) {
    Weight w;
    w.text_ = expression;
    w.root_ = Parser(expression, num_vars).parse();
    w.zero_ = node_is_zero(w.root_);
    return w;
}

double Weight::operator()(const Point& z) const {
    if (zero_ || !root_) return 0.0;
    return root_->eval(z);
}

}  // namespace plurizero
