#include "regulous/parser.hpp"

#include "regulous/ratfun.hpp"

#include <cctype>

namespace regulous {

namespace {

struct Token {
    enum class Kind { Integer, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    Int value;
    std::string name;
    std::size_t pos;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ >= s_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_.kind = Token::Kind::Integer;
            tok_.value = Int(s_.substr(i_, j - i_));
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_.kind = Token::Kind::Name;
            tok_.name = s_.substr(i_, j - i_);
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
        case '+': tok_.kind = Token::Kind::Plus; return;
        case '-': tok_.kind = Token::Kind::Minus; return;
        case '*': tok_.kind = Token::Kind::Star; return;
        case '/': tok_.kind = Token::Kind::Slash; return;
        case '^': tok_.kind = Token::Kind::Caret; return;
        case '(': tok_.kind = Token::Kind::LParen; return;
        case ')': tok_.kind = Token::Kind::RParen; return;
        default: throw ParseError(tok_.pos, std::string("unexpected character '") + c + "'");
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(const std::string& s) : lex_(s) {}

    AstPtr parse() {
        AstPtr e = expr();
        if (lex_.peek().kind != Token::Kind::End)
            throw ParseError(lex_.peek().pos, "trailing input");
        return e;
    }

  private:
    AstPtr expr() {
        AstPtr e = term();
        while (true) {
            auto k = lex_.peek().kind;
            if (k != Token::Kind::Plus && k != Token::Kind::Minus) return e;
            lex_.next();
            AstPtr rhs = term();
            auto n = std::make_shared<Ast>();
            n->kind = (k == Token::Kind::Plus) ? Ast::Kind::Add : Ast::Kind::Sub;
            n->lhs = e;
            n->rhs = rhs;
            e = n;
        }
    }

    AstPtr term() {
        AstPtr e = factor();
        while (true) {
            auto k = lex_.peek().kind;
            if (k != Token::Kind::Star && k != Token::Kind::Slash) return e;
            lex_.next();
            AstPtr rhs = factor();
            auto n = std::make_shared<Ast>();
            n->kind = (k == Token::Kind::Star) ? Ast::Kind::Mul : Ast::Kind::Div;
            n->lhs = e;
            n->rhs = rhs;
            e = n;
        }
    }

    AstPtr factor() {
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.next();
            auto n = std::make_shared<Ast>();
            n->kind = Ast::Kind::Neg;
            n->lhs = factor();
            return n;
        }
        AstPtr e = base();
        while (lex_.peek().kind == Token::Kind::Caret) {
            lex_.next();
            Token t = lex_.peek();
            if (t.kind != Token::Kind::Integer)
                throw ParseError(t.pos, "exponent must be a nonnegative integer");
            lex_.next();
            auto n = std::make_shared<Ast>();
            n->kind = Ast::Kind::Pow;
            n->lhs = e;
            if (t.value > Int(std::uint64_t(1) << 62))
                throw ParseError(t.pos, "exponent too large");
            n->exponent = static_cast<std::uint64_t>(t.value);
            e = n;
        }
        return e;
    }

    AstPtr base() {
        Token t = lex_.next();
        switch (t.kind) {
        case Token::Kind::Integer: {
            auto n = std::make_shared<Ast>();
            n->kind = Ast::Kind::Integer;
            n->value = t.value;
            return n;
        }
        case Token::Kind::Name: {
            auto n = std::make_shared<Ast>();
            n->kind = Ast::Kind::Var;
            n->name = t.name;
            return n;
        }
        case Token::Kind::LParen: {
            AstPtr e = expr();
            Token close = lex_.next();
            if (close.kind != Token::Kind::RParen)
                throw ParseError(close.pos, "expected ')'");
            return e;
        }
        default: throw ParseError(t.pos, "expected a number, variable or '('");
        }
    }

    Lexer lex_;
};

std::size_t var_index(const std::string& name, const std::vector<std::string>& vars) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    throw ParseError(0, "unknown variable '" + name + "'");
}

} // namespace

AstPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

Poly ast_to_poly(const Ast& ast, const std::vector<std::string>& vars, const ParseOptions& opts) {
    switch (ast.kind) {
    case Ast::Kind::Integer: return Poly::constant(vars, Rational(ast.value));
    case Ast::Kind::Var: return Poly::variable(vars, var_index(ast.name, vars));
    case Ast::Kind::Add: return ast_to_poly(*ast.lhs, vars, opts) + ast_to_poly(*ast.rhs, vars, opts);
    case Ast::Kind::Sub: return ast_to_poly(*ast.lhs, vars, opts) - ast_to_poly(*ast.rhs, vars, opts);
    case Ast::Kind::Mul: return ast_to_poly(*ast.lhs, vars, opts) * ast_to_poly(*ast.rhs, vars, opts);
    case Ast::Kind::Neg: return -ast_to_poly(*ast.lhs, vars, opts);
    case Ast::Kind::Pow: {
        if (ast.exponent > opts.exponent_cap) throw ParseError(0, "exponent exceeds cap");
        return ast_to_poly(*ast.lhs, vars, opts).pow(ast.exponent);
    }
    case Ast::Kind::Div: {
        Poly a = ast_to_poly(*ast.lhs, vars, opts);
        Poly b = ast_to_poly(*ast.rhs, vars, opts);
        if (!b.is_constant() || b.is_zero())
            throw ParseError(0, "division allowed only by nonzero constants here");
        return a * (Rational(1) / b.constant_value());
    }
    }
    throw Error("unreachable");
}

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                const ParseOptions& opts) {
    return ast_to_poly(*parse_expression(text), vars, opts);
}

RatFun ast_to_ratfun(const Ast& ast, const std::vector<std::string>& vars,
                     const ParseOptions& opts) {
    switch (ast.kind) {
    case Ast::Kind::Integer:
        return RatFun(Poly::constant(vars, Rational(ast.value)), Poly::constant(vars, 1));
    case Ast::Kind::Var:
        return RatFun(Poly::variable(vars, var_index(ast.name, vars)), Poly::constant(vars, 1));
    case Ast::Kind::Add: return ast_to_ratfun(*ast.lhs, vars, opts) + ast_to_ratfun(*ast.rhs, vars, opts);
    case Ast::Kind::Sub: return ast_to_ratfun(*ast.lhs, vars, opts) - ast_to_ratfun(*ast.rhs, vars, opts);
    case Ast::Kind::Mul: return ast_to_ratfun(*ast.lhs, vars, opts) * ast_to_ratfun(*ast.rhs, vars, opts);
    case Ast::Kind::Div: return ast_to_ratfun(*ast.lhs, vars, opts) / ast_to_ratfun(*ast.rhs, vars, opts);
    case Ast::Kind::Neg: return -ast_to_ratfun(*ast.lhs, vars, opts);
    case Ast::Kind::Pow: {
        if (ast.exponent > opts.exponent_cap) throw ParseError(0, "exponent exceeds cap");
        return ast_to_ratfun(*ast.lhs, vars, opts).pow(ast.exponent);
    }
    }
    throw Error("unreachable");
}

RatFun parse_ratfun(const std::string& text, const std::vector<std::string>& vars,
                    const ParseOptions& opts) {
    return ast_to_ratfun(*parse_expression(text), vars, opts);
}

std::vector<std::string> split_vars(const std::string& comma_separated) {
    std::vector<std::string> vars;
    std::string cur;
    for (char c : comma_separated) {
        if (c == ',') {
            if (!cur.empty()) vars.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) vars.push_back(cur);
    return vars;
}

} // namespace regulous
