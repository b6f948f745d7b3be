#include "hyperdelta/expr.hpp"

namespace hyperdelta {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& src) : s(src) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n' || s[pos] == '\r')) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    RatFunc parse() {
        RatFunc e = expr();
        skip_ws();
        if (pos != s.size()) fail("unexpected trailing input");
        return e;
    }

    RatFunc expr() {
        RatFunc acc = term();
        while (true) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                break;
        }
        return acc;
    }

    RatFunc term() {
        RatFunc acc = unary();
        while (true) {
            if (accept('*'))
                acc *= unary();
            else if (accept('/')) {
                RatFunc d = unary();
                if (d.is_zero()) fail("division by zero");
                acc /= d;
            } else
                break;
        }
        return acc;
    }

    RatFunc unary() {
        if (accept('-')) return -power();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        if (accept('^')) {
            unsigned long e = uint_lit();
            RatFunc acc(1);
            for (unsigned long i = 0; i < e; ++i) acc *= base;
            return acc;
        }
        return base;
    }

    unsigned long uint_lit() {
        skip_ws();
        if (pos >= s.size() || !isdigit(static_cast<unsigned char>(s[pos]))) fail("expected a number");
        unsigned long v = 0;
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<unsigned long>(s[pos] - '0');
            if (pos - start > 18) fail("exponent too large");
            ++pos;
        }
        return v;
    }

    RatFunc atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        unsigned char ch = static_cast<unsigned char>(s[pos]);
        if (ch >= 0x80) fail("non-ASCII character");
        if (ch == 'x') {
            ++pos;
            return RatFunc(UPoly::x());
        }
        if (isdigit(ch)) {
            size_t start = pos;
            while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return RatFunc(BigRat(s.substr(start, pos - start)));
        }
        if (ch == '(') {
            ++pos;
            RatFunc e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        fail("unexpected character");
    }
};

void append_rat(std::string& out, const BigRat& q, bool leading) {
    if (q < 0) {
        out += '-';
    } else if (!leading) {
        out += '+';
    }
    BigRat a = abs(q);
    out += a.get_str();
}

}  // namespace

RatFunc parse_expr(const std::string& src) {
    for (unsigned char c : src)
        if (c >= 0x80) throw parse_error("non-ASCII character (use ASCII '-')", 0);
    return Parser(src).parse();
}

std::string to_string(const UPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (int i = p.deg(); i >= 0; --i) {
        const BigRat c = p.coeff(i);
        if (c == 0) continue;
        if (i == 0) {
            append_rat(out, c, leading);
        } else {
            BigRat a = abs(c);
            if (a == 1) {
                if (c < 0)
                    out += '-';
                else if (!leading)
                    out += '+';
            } else {
                append_rat(out, c, leading);
                out += '*';
            }
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
        leading = false;
    }
    return out;
}

std::string to_string(const RatFunc& f, const std::string& var) {
    if (f.is_polynomial()) return to_string(f.num(), var);
    std::string n = to_string(f.num(), var);
    std::string d = to_string(f.den(), var);
    const bool n_atom = f.num().coeffs().size() - 1 == static_cast<size_t>(0) ||
                        (!n.empty() && n.find('+') == std::string::npos &&
                         n.find('-', 1) == std::string::npos && n.find('/') == std::string::npos);
    const bool d_atom = f.den().is_constant() ||
                        (d.find('+') == std::string::npos && d.find('-', 1) == std::string::npos &&
                         d.find('*') == std::string::npos && d.find('/') == std::string::npos);
    std::string out = n_atom ? n : "(" + n + ")";
    out += "/";
    out += d_atom ? d : "(" + d + ")";
    return out;
}

}  // namespace hyperdelta
