#include "pk/parser.hpp"

#include <cctype>
#include <optional>

namespace pk {
namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) { ++pos; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in \"" + text + "\"");
    }

    mpz_class natural() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return mpz_class(text.substr(start, pos - start));
    }

    // Generator token: alphabetic stem followed by a 1-based index.
    Gen generator(const Space& sp) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string stem = text.substr(start, pos - start);
        if (stem.empty()) fail("expected a generator");
        std::size_t digit_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digit_start) fail("generator \"" + stem + "\" is missing an index");
        int index = std::stoi(text.substr(digit_start, pos - digit_start));

        Role role = Role::Var;
        if (stem.size() > 1 && stem[0] == 'D') { role = Role::Partial; stem = stem.substr(1); }
        else if (stem.size() > 1 && stem[0] == 'd') { role = Role::Form; stem = stem.substr(1); }
        if (stem.size() > 1 && stem.back() == 's') {
            if (role != Role::Var) fail("star suffix cannot combine with D/d prefix");
            role = Role::Star;
            stem.pop_back();
        }

        Kind kind;
        if (stem == "x") kind = Kind::X;
        else if (stem == "y") kind = Kind::Y;
        else if (stem == "xi") kind = Kind::Xi;
        else if (stem == "eta") kind = Kind::Eta;
        else fail("unknown generator stem \"" + stem + "\"");

        Gen g{role, kind, index};
        if (!valid_gen(sp, g)) fail("generator " + name(g) + " is not defined on " + sp.str());
        return g;
    }
};

struct Parser {
    Lexer lex;
    const Space& sp;

    Parser(const std::string& t, const Space& s) : lex(t), sp(s) {}

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (lex.accept('+')) acc += term();
            else if (lex.accept('-')) acc -= term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (lex.accept('*')) {
                acc = acc * factor();
            } else if (lex.accept('/')) {
                Poly d = factor();
                std::optional<mpq_class> c = constant_of(d);
                if (!c || *c == 0) lex.fail("divisor must be a nonzero constant");
                acc *= mpq_class(1) / *c;
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        if (lex.accept('-')) return -factor();
        Poly base = atom();
        if (lex.accept('^')) {
            mpz_class e = lex.natural();
            if (e < 0 || e > 64) lex.fail("exponent out of range");
            base = base.pow(static_cast<int>(e.get_si()));
        }
        return base;
    }

    Poly atom() {
        char c = lex.peek();
        if (c == '(') {
            lex.accept('(');
            Poly inner = expr();
            if (!lex.accept(')')) lex.fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly(mpq_class(lex.natural()));
        if (std::isalpha(static_cast<unsigned char>(c))) return Poly::var(lex.generator(sp));
        lex.fail("unexpected character");
    }

    static std::optional<mpq_class> constant_of(const Poly& p) {
        if (p.is_zero()) return mpq_class(0);
        if (p.size() == 1 && p.terms().begin()->first.is_one()) return p.terms().begin()->second;
        return std::nullopt;
    }
};

} // namespace

Poly parse(const std::string& text, const Space& sp) {
    Parser p(text, sp);
    Poly out = p.expr();
    if (!p.lex.eof()) p.lex.fail("trailing input");
    return out;
}

Gen parse_gen(const std::string& token, const Space& sp) {
    Lexer lex(token);
    Gen g = lex.generator(sp);
    if (!lex.eof()) lex.fail("trailing input after generator");
    return g;
}

} // namespace pk
