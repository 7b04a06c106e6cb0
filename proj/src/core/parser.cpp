#include "core/parser.hpp"

#include <cctype>

namespace jps {

namespace {

struct Parser {
    const std::string& s;
    const std::map<std::string, Rat>& params;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos); }

    Rat integer_literal() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        if (pos < s.size() && s[pos] == '.') fail("non-rational literal");
        Rat q;
        q.set_str(s.substr(start, pos - start), 10);
        q.canonicalize();
        return q;
    }

    Poly atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(integer_literal());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '4')
                return Poly::variable(name[1] - '0');
            auto it = params.find(name);
            if (it != params.end()) return Poly::constant(it->second);
            pos = start;
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Poly power() {
        Poly base = atom();
        if (eat('^')) {
            skip_ws();
            if (peek() == '-') fail("negative exponent");
            Rat e = integer_literal();
            if (e.get_den() != 1) fail("exponent must be an integer");
            long n = e.get_num().get_si();
            if (n > 64) fail("exponent too large");
            return base.pow(static_cast<int>(n));
        }
        return base;
    }

    Poly factor() {
        skip_ws();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        return power();
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            if (eat('*')) {
                p = p * factor();
            } else if (eat('/')) {
                std::size_t at = pos;
                Poly d = factor();
                if (d.term_count() != 1 || d.terms().begin()->first != Mono::one())
                    throw parse_error("division by a non-constant", at);
                Rat c = d.terms().begin()->second;
                if (c == 0) throw parse_error("division by zero", at);
                p = p.scaled(Rat(1) / c);
            } else {
                break;
            }
        }
        return p;
    }

    Poly expr() {
        Poly p = term();
        for (;;) {
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else break;
        }
        return p;
    }

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input");
        return p;
    }
};

} // namespace

Poly parse_poly(const std::string& text, const std::map<std::string, Rat>& params) {
    Parser p{text, params};
    return p.run();
}

} // namespace jps
