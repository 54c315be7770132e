#include "vwref/parse.hpp"

#include "vwref/errors.hpp"

#include <cctype>
#include <vector>

namespace vw {

namespace {

struct Token {
    enum class Kind { Num, Ident, Op, End };
    Kind kind;
    std::string text;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ >= src_.size()) {
            tok_ = {Token::Kind::End, ""};
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            tok_ = {Token::Kind::Num, src_.substr(start, pos_ - start)};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            tok_ = {Token::Kind::Ident, src_.substr(start, pos_ - start)};
            return;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            tok_ = {Token::Kind::Op, std::string(1, c)};
            ++pos_;
            return;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "' in expression");
    }

    std::string src_;
    size_t pos_ = 0;
    Token tok_{Token::Kind::End, ""};
};

ExprPtr mk(Expr::Op op, ExprPtr l = nullptr, ExprPtr r = nullptr) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& src) : lex_(src) {}

    ExprPtr parse() {
        ExprPtr e = sum();
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError("trailing input at '" + lex_.peek().text + "'");
        return e;
    }

private:
    bool eat_op(const std::string& s) {
        if (lex_.peek().kind == Token::Kind::Op && lex_.peek().text == s) {
            lex_.take();
            return true;
        }
        return false;
    }

    ExprPtr sum() {
        ExprPtr e = product();
        while (true) {
            if (eat_op("+"))
                e = mk(Expr::Op::Add, e, product());
            else if (eat_op("-"))
                e = mk(Expr::Op::Sub, e, product());
            else
                return e;
        }
    }

    ExprPtr product() {
        ExprPtr e = unary();
        while (true) {
            if (eat_op("*"))
                e = mk(Expr::Op::Mul, e, unary());
            else if (eat_op("/"))
                e = mk(Expr::Op::Div, e, unary());
            else
                return e;
        }
    }

    ExprPtr unary() {
        if (eat_op("-")) return mk(Expr::Op::Neg, unary());
        if (eat_op("+")) return unary();
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (eat_op("^")) {
            // exponents may be negated: s^-2
            ExprPtr e;
            if (eat_op("-"))
                e = mk(Expr::Op::Neg, power());
            else
                e = power();
            return mk(Expr::Op::Pow, base, e);
        }
        return base;
    }

    ExprPtr atom() {
        Token t = lex_.take();
        switch (t.kind) {
        case Token::Kind::Num: {
            auto e = std::make_shared<Expr>();
            e->op = Expr::Op::Num;
            e->value = rat_parse(t.text);
            return e;
        }
        case Token::Kind::Ident: {
            auto e = std::make_shared<Expr>();
            e->op = Expr::Op::Sym;
            e->name = t.text;
            return e;
        }
        case Token::Kind::Op:
            if (t.text == "(") {
                ExprPtr e = sum();
                if (!eat_op(")")) throw ParseError("missing ')'");
                return e;
            }
            throw ParseError("unexpected operator '" + t.text + "'");
        default:
            throw ParseError("unexpected end of expression");
        }
    }

    Lexer lex_;
};

} // namespace

ExprPtr parse_expression(const std::string& src) { return Parser(src).parse(); }

RatFunc eval_ratfunc(const ExprPtr& e, const Bindings& binds) {
    switch (e->op) {
    case Expr::Op::Num:
        return RatFunc(e->value);
    case Expr::Op::Sym: {
        if (e->name == "s") return RatFunc::s_power(1);
        auto it = binds.find(e->name);
        if (it != binds.end()) return RatFunc(Rat(it->second));
        if (ParamRegistry::instance().find(e->name)) return RatFunc::symbol(e->name);
        throw ParseError("unknown symbol '" + e->name + "' in rational-function expression");
    }
    case Expr::Op::Add:
        return eval_ratfunc(e->lhs, binds) + eval_ratfunc(e->rhs, binds);
    case Expr::Op::Sub:
        return eval_ratfunc(e->lhs, binds) - eval_ratfunc(e->rhs, binds);
    case Expr::Op::Mul:
        return eval_ratfunc(e->lhs, binds) * eval_ratfunc(e->rhs, binds);
    case Expr::Op::Div:
        return eval_ratfunc(e->lhs, binds) / eval_ratfunc(e->rhs, binds);
    case Expr::Op::Neg:
        return -eval_ratfunc(e->lhs, binds);
    case Expr::Op::Pow: {
        long exp = eval_integer(e->rhs, binds);
        // s^e stays a monomial for any sign of e
        if (e->lhs->op == Expr::Op::Sym && e->lhs->name == "s")
            return RatFunc::s_power(static_cast<int>(exp));
        return eval_ratfunc(e->lhs, binds).pow(exp);
    }
    }
    throw ParseError("corrupt expression");
}

long eval_integer(const ExprPtr& e, const Bindings& binds) {
    switch (e->op) {
    case Expr::Op::Num: {
        if (!is_integer(e->value)) throw ParseError("expected integer, got " + rat_str(e->value));
        return e->value.get_num().get_si();
    }
    case Expr::Op::Sym: {
        auto it = binds.find(e->name);
        if (it == binds.end()) throw MissingBinding("missing integer binding '" + e->name + "'");
        return it->second;
    }
    case Expr::Op::Add:
        return eval_integer(e->lhs, binds) + eval_integer(e->rhs, binds);
    case Expr::Op::Sub:
        return eval_integer(e->lhs, binds) - eval_integer(e->rhs, binds);
    case Expr::Op::Mul:
        return eval_integer(e->lhs, binds) * eval_integer(e->rhs, binds);
    case Expr::Op::Div: {
        long a = eval_integer(e->lhs, binds), b = eval_integer(e->rhs, binds);
        if (b == 0 || a % b != 0) throw ParseError("non-exact integer division");
        return a / b;
    }
    case Expr::Op::Neg:
        return -eval_integer(e->lhs, binds);
    case Expr::Op::Pow: {
        long b = eval_integer(e->lhs, binds), x = eval_integer(e->rhs, binds);
        if (x < 0) throw ParseError("negative exponent in integer expression");
        long out = 1;
        while (x-- > 0) out *= b;
        return out;
    }
    }
    throw ParseError("corrupt expression");
}

} // namespace vw
