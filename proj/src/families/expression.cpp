#include "reglab/families/expression.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "reglab/core/parse.hpp"

namespace reglab {

struct GrowthExpr::Node {
    enum Kind { Num, Var, Add, Sub, Mul, Div, Pow, Neg, Sqrt } kind;
    long long value = 0;
    std::shared_ptr<const Node> a, b;
};

namespace {

using NodePtr = std::shared_ptr<const GrowthExpr::Node>;
using Node = GrowthExpr::Node;

NodePtr make(Node::Kind k, NodePtr a = nullptr, NodePtr b = nullptr, long long v = 0) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    n->value = v;
    return n;
}

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    NodePtr parse() {
        auto e = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return e;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    NodePtr expr() {
        auto l = term();
        for (;;) {
            if (eat('+')) l = make(Node::Add, l, term());
            else if (eat('-')) l = make(Node::Sub, l, term());
            else return l;
        }
    }
    NodePtr term() {
        auto l = unary();
        for (;;) {
            if (eat('*')) l = make(Node::Mul, l, unary());
            else if (eat('/')) l = make(Node::Div, l, unary());
            else return l;
        }
    }
    NodePtr unary() {
        if (eat('-')) return make(Node::Neg, unary());
        auto base = atom();
        if (eat('^')) return make(Node::Pow, base, unary());
        return base;
    }
    NodePtr atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
        if (eat('(')) {
            auto e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        unsigned char c = s_[pos_];
        if (std::isdigit(c)) {
            long long v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                v = v * 10 + (s_[pos_++] - '0');
                if (v > (1ll << 40)) throw ParseError("literal too large", pos_);
            }
            return make(Node::Num, nullptr, nullptr, v);
        }
        if (std::isalpha(c)) {
            std::size_t at = pos_;
            std::string name;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
            if (name == "n") return make(Node::Var);
            if (name == "sqrt" || name == "isqrt") {
                if (!eat('(')) throw ParseError("expected '(' after " + name, pos_);
                auto e = expr();
                if (!eat(')')) throw ParseError("expected ')'", pos_);
                return make(Node::Sqrt, e);
            }
            throw ParseError("unknown name '" + name + "'", at);
        }
        throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

long long checked(long double v) {
    if (v > static_cast<long double>(std::numeric_limits<long long>::max()) ||
        v < static_cast<long double>(std::numeric_limits<long long>::min()))
        throw std::overflow_error("growth expression overflow");
    return static_cast<long long>(v);
}

long long floor_div(long long a, long long b) {
    if (b == 0) throw std::domain_error("division by zero in growth expression");
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long eval(const Node& e, long long n) {
    switch (e.kind) {
        case Node::Num: return e.value;
        case Node::Var: return n;
        case Node::Add: return checked(static_cast<long double>(eval(*e.a, n)) + eval(*e.b, n));
        case Node::Sub: return checked(static_cast<long double>(eval(*e.a, n)) - eval(*e.b, n));
        case Node::Mul: return checked(static_cast<long double>(eval(*e.a, n)) * eval(*e.b, n));
        case Node::Div: return floor_div(eval(*e.a, n), eval(*e.b, n));
        case Node::Neg: return -eval(*e.a, n);
        case Node::Pow: {
            long long b = eval(*e.a, n), x = eval(*e.b, n), r = 1;
            if (x < 0) throw std::domain_error("negative exponent in growth expression");
            for (long long i = 0; i < x; ++i) r = checked(static_cast<long double>(r) * b);
            return r;
        }
        case Node::Sqrt: {
            long long v = eval(*e.a, n);
            if (v < 0) throw std::domain_error("square root of a negative value");
            long long r = static_cast<long long>(std::sqrt(static_cast<long double>(v)));
            while (r * r > v) --r;
            while ((r + 1) * (r + 1) <= v) ++r;
            return r;
        }
    }
    return 0;
}

}  // namespace

GrowthExpr GrowthExpr::parse(const std::string& text) {
    GrowthExpr g;
    g.text_ = text;
    g.root_ = ExprParser(text).parse();
    return g;
}

long long GrowthExpr::operator()(long long n) const {
    if (!root_) throw std::logic_error("empty growth expression");
    return eval(*root_, n);
}

}  // namespace reglab
