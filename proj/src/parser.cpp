#include "tropcanon/parser.hpp"

#include <cctype>
#include <cstdlib>

namespace tropcanon {

namespace {

struct Lexer {
    const std::string& text;
    int line;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw ParseError(msg, line, static_cast<int>(at + 1));
    }

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    char peek2() const {
        std::size_t p = pos;
        while (p < text.size() && (text[p] == ' ' || text[p] == '\t')) ++p;
        ++p;
        return p < text.size() ? text[p] : '\0';
    }

    char get() {
        skip_ws();
        return text[pos++];
    }

    long long read_int() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer", start);
        if (pos - start > 18) fail("integer literal too large", start);
        return std::atoll(text.substr(start, pos - start).c_str());
    }
};

struct Parser {
    Lexer lx;

    DiffPoly parse_expr() {
        DiffPoly acc = parse_term();
        for (;;) {
            const char c = lx.peek();
            if (c == '+') {
                lx.get();
                acc = acc + parse_term();
            } else if (c == '-') {
                lx.get();
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    DiffPoly parse_term() {
        DiffPoly acc = parse_factor();
        while (lx.peek() == '*') {
            lx.get();
            acc = acc * parse_factor();
        }
        return acc;
    }

    DiffPoly parse_factor() {
        bool neg = false;
        while (lx.peek() == '-') {
            lx.get();
            neg = !neg;
        }
        DiffPoly p = parse_primary();
        if (lx.peek() == '^') {
            const std::size_t at = lx.pos;
            lx.get();
            if (lx.peek() == '(')
                lx.fail("exponent must be an integer literal (derivative markers attach "
                        "directly to a variable)",
                        at);
            const long long e = lx.read_int();
            if (e > 64) lx.fail("exponent too large", at);
            p = p.pow(static_cast<int>(e));
        }
        return neg ? -p : p;
    }

    DiffPoly parse_primary() {
        const char c = lx.peek();
        if (c == '(') {
            lx.get();
            DiffPoly p = parse_expr();
            if (lx.peek() != ')') lx.fail("expected ')'", lx.pos);
            lx.get();
            return p;
        }
        if (c == 'x') return parse_var();
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        lx.fail(std::string("unexpected character '") + c + "'", lx.pos);
    }

    DiffPoly parse_var() {
        lx.get(); // 'x'
        if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
            lx.fail("variable index expected after 'x'", lx.pos);
        const long long j = lx.read_int();
        if (j < 1 || j > 1000000) lx.fail("variable index out of range", lx.pos);
        int order = 0;
        // Primes: no whitespace between them and the variable.
        while (lx.pos < lx.text.size() && lx.text[lx.pos] == '\'') {
            ++order;
            ++lx.pos;
        }
        if (order == 0 && lx.peek() == '^' && lx.peek2() == '(') {
            lx.get(); // '^'
            lx.get(); // '('
            const long long k = lx.read_int();
            if (k < 0 || k > 1000000) lx.fail("derivative order out of range", lx.pos);
            if (lx.peek() != ')') lx.fail("expected ')' after derivative order", lx.pos);
            lx.get();
            order = static_cast<int>(k);
        }
        return DiffPoly::variable({static_cast<int>(j), order});
    }

    DiffPoly parse_number() {
        const long long num = lx.read_int();
        if (lx.peek() == '/') {
            lx.get();
            if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
                lx.fail("denominator expected after '/'", lx.pos);
            const long long den = lx.read_int();
            if (den == 0) lx.fail("zero denominator", lx.pos);
            return DiffPoly::constant(Rational(num) / den);
        }
        return DiffPoly::constant(Rational(num));
    }
};

} // namespace

DiffPoly parse_poly_line(const std::string& text, int line) {
    Parser p{Lexer{text, line}};
    DiffPoly poly = p.parse_expr();
    if (!p.lx.eof()) p.lx.fail("trailing input", p.lx.pos);
    return poly;
}

DiffPoly parse_poly(const std::string& text) { return parse_poly_line(text, 1); }

std::vector<DiffPoly> parse_system(const std::string& text) {
    std::vector<DiffPoly> out;
    std::size_t start = 0;
    int line = 1;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string l = text.substr(start, end - start);
        if (const auto hash = l.find('#'); hash != std::string::npos) l = l.substr(0, hash);
        bool blank = true;
        for (char c : l)
            if (c != ' ' && c != '\t' && c != '\r') blank = false;
        if (!blank) {
            if (const auto cr = l.find('\r'); cr != std::string::npos) l = l.substr(0, cr);
            out.push_back(parse_poly_line(l, line));
        }
        start = end + 1;
        ++line;
    }
    return out;
}

} // namespace tropcanon
