#include "gca/expr.hpp"

#include <cctype>

namespace gca {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const { throw ExprError(msg, line, col); }

    void advance() {
        if (pos < s.size()) {
            if (s[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    void skipSpace() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) advance();
    }

    bool eof() {
        skipSpace();
        return pos >= s.size();
    }

    char peek() {
        skipSpace();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string integer() {
        skipSpace();
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            digits += s[pos];
            advance();
        }
        if (digits.empty()) fail("expected an integer");
        return digits;
    }

    std::string identifier() {
        skipSpace();
        std::string id;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            id += s[pos];
            advance();
        }
        return id;
    }
};

struct Parser {
    Lexer lex;
    int nCoords;
    const std::vector<std::string>* names;

    Parser(const std::string& text, int n, const std::vector<std::string>* coordNames)
        : lex(text), nCoords(n), names(coordNames) {}

    RingElem parse() {
        RingElem e = expr();
        if (!lex.eof()) lex.fail("trailing input");
        return e;
    }

    RingElem expr() {
        RingElem e = term();
        for (;;) {
            if (lex.accept('+')) {
                e += term();
            } else if (lex.accept('-')) {
                e -= term();
            } else {
                return e;
            }
        }
    }

    RingElem term() {
        RingElem e = factor();
        while (lex.accept('*')) e = e * factor();
        return e;
    }

    RingElem factor() {
        if (lex.accept('-')) return -factor();
        return atomWithPower();
    }

    int exponent(bool allowNegative) {
        bool neg = false;
        if (lex.accept('(')) {
            if (lex.accept('-')) neg = true;
            std::string d = lex.integer();
            lex.expect(')');
            return applySign(d, neg, allowNegative);
        }
        if (lex.accept('-')) neg = true;
        return applySign(lex.integer(), neg, allowNegative);
    }

    int applySign(const std::string& digits, bool neg, bool allowNegative) {
        long v = std::stol(digits);
        if (neg && !allowNegative) lex.fail("negative exponent only allowed on exp(t)");
        if (v > 64) lex.fail("exponent too large");
        return static_cast<int>(neg ? -v : v);
    }

    RingElem atomWithPower() {
        char c = lex.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string numPart = lex.integer();
            std::string ratText = numPart;
            if (lex.peek() == '/') {
                lex.advance();
                ratText += "/" + lex.integer();
            }
            Rational q = ratFromString(ratText);
            if (lex.peek() == '^') {
                lex.advance();
                int e = exponent(false);
                q = ratPow(q, e);
            }
            return RingElem(q);
        }
        if (c == '(') {
            lex.advance();
            RingElem e = expr();
            lex.expect(')');
            if (lex.peek() == '^') {
                lex.advance();
                int p = exponent(false);
                return e.pow(p);
            }
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int atLine = lex.line, atCol = lex.col;
            std::string id = lex.identifier();
            if (id == "exp") return expAtom();
            RingElem base = symbol(id, atLine, atCol);
            if (lex.peek() == '^') {
                lex.advance();
                int e = exponent(false);
                return base.pow(e);
            }
            return base;
        }
        lex.fail(c == '\0' ? "unexpected end of expression" : std::string("unexpected '") + c + "'");
    }

    RingElem expAtom() {
        lex.expect('(');
        int sign = 1;
        if (lex.accept('-')) sign = -1;
        std::string arg = lex.identifier();
        if (arg != "t") lex.fail("exp takes t or -t");
        lex.expect(')');
        int k = sign;
        if (lex.peek() == '^') {
            lex.advance();
            int e = exponent(true);
            k = sign * e;
        }
        return RingElem::expT(k);
    }

    RingElem symbol(const std::string& id, int atLine, int atCol) {
        if (id == "t") return RingElem::tVar();
        if (names) {
            for (std::size_t i = 0; i < names->size(); ++i)
                if ((*names)[i] == id) return RingElem::coordinate(static_cast<int>(i));
        }
        if (id.size() >= 2 && id[0] == 'x') {
            bool digitsOnly = true;
            for (std::size_t i = 1; i < id.size(); ++i)
                if (!std::isdigit(static_cast<unsigned char>(id[i]))) digitsOnly = false;
            if (digitsOnly) {
                long k = std::stol(id.substr(1));
                if (k < 1 || k > nCoords)
                    throw ExprError("coordinate index out of range: " + id, atLine, atCol);
                return RingElem::coordinate(static_cast<int>(k - 1));
            }
        }
        throw ExprError("unknown symbol: " + id, atLine, atCol);
    }
};

} // namespace

RingElem parseExpr(const std::string& text, int nCoords,
                   const std::vector<std::string>* coordNames) {
    Parser p(text, nCoords, coordNames);
    return p.parse();
}

} // namespace gca
