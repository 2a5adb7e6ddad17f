#include "ctrans/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <vector>

namespace ctrans {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
    Tok kind = Tok::end;
    double value = 0.0;   // number
    bool imaginary = false; // number carried an 'i' suffix
    std::string text;     // ident
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { tokenize(); }
    const std::vector<Token>& tokens() const { return tokens_; }

private:
    void tokenize() {
        std::size_t pos = 0;
        int line = 1, col = 1;
        auto advance = [&](std::size_t n) {
            for (std::size_t k = 0; k < n; ++k, ++pos) {
                if (src_[pos] == '\n') {
                    ++line;
                    col = 1;
                } else {
                    ++col;
                }
            }
        };
        while (pos < src_.size()) {
            const char c = src_[pos];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
                continue;
            }
            Token t;
            t.line = line;
            t.column = col;
            if (std::isdigit(static_cast<unsigned char>(c)) ||
                (c == '.' && pos + 1 < src_.size() &&
                 std::isdigit(static_cast<unsigned char>(src_[pos + 1])))) {
                const char* begin = src_.data() + pos;
                const char* end = src_.data() + src_.size();
                double v = 0.0;
                auto res = std::from_chars(begin, end, v);
                if (res.ec != std::errc{})
                    throw ParseError("malformed number", line, col);
                std::size_t len = static_cast<std::size_t>(res.ptr - begin);
                t.kind = Tok::number;
                t.value = v;
                advance(len);
                if (pos < src_.size() && src_[pos] == 'i' &&
                    !(pos + 1 < src_.size() &&
                      (std::isalnum(static_cast<unsigned char>(src_[pos + 1])) ||
                       src_[pos + 1] == '_'))) {
                    t.imaginary = true;
                    advance(1);
                }
                tokens_.push_back(t);
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t len = 1;
                while (pos + len < src_.size() &&
                       (std::isalnum(static_cast<unsigned char>(src_[pos + len])) ||
                        src_[pos + len] == '_'))
                    ++len;
                t.kind = Tok::ident;
                t.text = std::string(src_.substr(pos, len));
                advance(len);
                tokens_.push_back(t);
                continue;
            }
            switch (c) {
                case '+': t.kind = Tok::plus; break;
                case '-': t.kind = Tok::minus; break;
                case '*': t.kind = Tok::star; break;
                case '/': t.kind = Tok::slash; break;
                case '^': t.kind = Tok::caret; break;
                case '(': t.kind = Tok::lparen; break;
                case ')': t.kind = Tok::rparen; break;
                case ',': t.kind = Tok::comma; break;
                default:
                    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
            }
            advance(1);
            tokens_.push_back(t);
        }
        Token eof;
        eof.kind = Tok::end;
        // Report end-of-input errors at the last real token, not past it.
        if (!tokens_.empty()) {
            eof.line = tokens_.back().line;
            eof.column = tokens_.back().column;
        }
        tokens_.push_back(eof);
    }

    std::string_view src_;
    std::vector<Token> tokens_;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    Expr run() {
        Expr e = parse_expr();
        if (peek().kind != Tok::end)
            fail("trailing input after expression");
        return e;
    }

private:
    const Token& peek() const { return lex_.tokens()[idx_]; }
    const Token& take() { return lex_.tokens()[idx_++]; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(msg, t.line, t.column);
    }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) fail(std::string("expected ") + what);
        ++idx_;
    }

    Expr parse_expr() {
        Expr e = parse_term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const bool plus = take().kind == Tok::plus;
            Expr rhs = parse_term();
            e = plus ? e + rhs : e - rhs;
        }
        return e;
    }

    Expr parse_term() {
        Expr e = parse_unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const bool mul = take().kind == Tok::star;
            Expr rhs = parse_unary();
            e = mul ? e * rhs : e / rhs;
        }
        return e;
    }

    Expr parse_unary() {
        if (peek().kind == Tok::minus) {
            take();
            return -parse_unary();
        }
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (peek().kind != Tok::caret) return base;
        take();
        return base.pow(parse_exponent());
    }

    int parse_exponent() {
        bool neg = false;
        bool parens = false;
        if (peek().kind == Tok::lparen) {
            parens = true;
            take();
        }
        if (peek().kind == Tok::minus) {
            neg = true;
            take();
        }
        if (peek().kind != Tok::number || peek().imaginary)
            fail("expected integer exponent");
        const double v = take().value;
        if (v != std::floor(v) || v > 1e9)
            throw ParseError("exponent must be an integer", peek().line, peek().column);
        if (parens) expect(Tok::rparen, "')'");
        const int k = static_cast<int>(v);
        return neg ? -k : k;
    }

    double parse_signed_number() {
        bool neg = false;
        if (peek().kind == Tok::minus) {
            neg = true;
            take();
        } else if (peek().kind == Tok::plus) {
            take();
        }
        if (peek().kind != Tok::number || peek().imaginary)
            fail("expected a real number");
        const double v = take().value;
        return neg ? -v : v;
    }

    Expr parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::number: {
                take();
                return t.imaginary ? Expr::literal(Complex{0.0, t.value})
                                   : Expr::literal(Complex{t.value, 0.0});
            }
            case Tok::lparen: {
                take();
                Expr e = parse_expr();
                expect(Tok::rparen, "')'");
                return e;
            }
            case Tok::ident: {
                take();
                if (t.text == "z") return Expr::var();
                if (t.text == "i") return Expr::literal(Complex{0.0, 1.0});
                if (t.text == "pi") return Expr::literal(Complex{kPi, 0.0});
                if (t.text == "complex") {
                    expect(Tok::lparen, "'('");
                    const double re = parse_signed_number();
                    expect(Tok::comma, "','");
                    const double im = parse_signed_number();
                    expect(Tok::rparen, "')'");
                    return Expr::literal(Complex{re, im});
                }
                if (t.text == "cauchy_of") {
                    expect(Tok::lparen, "'('");
                    if (peek().kind != Tok::ident) fail("expected measure name");
                    std::string name = take().text;
                    expect(Tok::rparen, "')'");
                    return Expr::cauchy_of(std::move(name));
                }
                if (t.text == "moebius") {
                    expect(Tok::lparen, "'('");
                    Expr arg = parse_expr();
                    expect(Tok::rparen, "')'");
                    if (!arg.is_constant())
                        throw ParseError("moebius argument must be constant", t.line, t.column);
                    return Expr::moebius(arg.eval(Complex{0.0, 0.0}));
                }
                throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
            }
            default:
                fail("expected an operand");
        }
    }

    Lexer lex_;
    std::size_t idx_ = 0;
};

} // namespace

Expr parse_density(std::string_view text) { return Parser(text).run(); }

} // namespace ctrans
