#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "essgraph/ring.hpp"

namespace essgraph {

Poly Poly::constant(long c) {
    Poly p;
    if (c != 0) p.terms[{}] = c;
    return p;
}

Poly Poly::var(const std::string& v) {
    Poly p;
    p.terms[{{v, 1}}] = 1;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms) {
        r.terms[m] += c;
        if (r.terms[m] == 0) r.terms.erase(m);
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly neg;
    for (const auto& [m, c] : o.terms) neg.terms[m] = -c;
    return *this + neg;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) {
            auto m = m1;
            for (const auto& [v, e] : m2) m[v] += e;
            r.terms[m] += c1 * c2;
            if (r.terms[m] == 0) r.terms.erase(m);
        }
    return r;
}

int Poly::degree_in(const std::string& v) const {
    int d = 0;
    for (const auto& [m, c] : terms) {
        auto it = m.find(v);
        if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
}

Poly Poly::coeff_of(const std::string& v, int k) const {
    Poly r;
    for (const auto& [m, c] : terms) {
        auto it = m.find(v);
        int e = it == m.end() ? 0 : it->second;
        if (e != k) continue;
        auto rest = m;
        rest.erase(v);
        r.terms[rest] = c;
    }
    return r;
}

bool Poly::uses_only(const std::vector<std::string>& vars) const {
    for (const auto& [m, c] : terms)
        for (const auto& [v, e] : m)
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) return false;
    return true;
}

std::string Poly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        if (!out.empty()) out += c < 0 ? "-" : "+";
        else if (c < 0) out += "-";
        long a = c < 0 ? -c : c;
        std::string mono;
        for (const auto& [v, e] : m) {
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty() || a != 1) out += std::to_string(a);
        out += mono;
    }
    return out;
}

namespace {

[[noreturn]] void fail(size_t pos, const std::string& what) {
    throw std::runtime_error("ring spec error at position " + std::to_string(pos) +
                             ": " + what);
}

struct Token {
    enum Kind { End, Num, Ident, Sym } kind = End;
    long num = 0;
    std::string ident;
    char sym = 0;
    size_t pos = 0;
};

struct Lexer {
    std::string s;
    size_t i = 0;
    Token tok;

    explicit Lexer(std::string text) : s(std::move(text)) { next(); }

    void next() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        tok = Token{};
        tok.pos = i;
        if (i == s.size()) return;
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok.kind = Token::Num;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                tok.num = tok.num * 10 + (s[i++] - '0');
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            tok.kind = Token::Ident;
            while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])))
                tok.ident += s[i++];
        } else {
            tok.kind = Token::Sym;
            tok.sym = c;
            ++i;
        }
    }

    bool sym(char c) const { return tok.kind == Token::Sym && tok.sym == c; }
    void expect_sym(char c, const std::string& what) {
        if (!sym(c)) fail(tok.pos, "expected '" + std::string(1, c) + "' " + what);
        next();
    }
};

// fixed irreducible polynomials for the prime-power shorthands
Poly gf_modulus(long n, int& p) {
    auto x = Poly::var("a");  // field generator; distinct from any quotient variable
    auto c = [](long v) { return Poly::constant(v); };
    switch (n) {
        case 4:  p = 2; return x * x + x + c(1);
        case 8:  p = 2; return x * x * x + x + c(1);
        case 9:  p = 3; return x * x + c(1);
        case 16: p = 2; return x * x * x * x + x + c(1);
        case 25: p = 5; return x * x + c(2);
        case 27: p = 3; return x * x * x + c(2) * x + c(1);
        case 32: p = 2; return x * x * x * x * x + x * x + c(1);
        case 49: p = 7; return x * x + x + c(3);
        case 81: p = 3; return x * x * x * x + x + c(2);
        default: p = 0; return {};
    }
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct Parser {
    Lexer lx;

    explicit Parser(const std::string& text) : lx(text) {}

    RingSpec parse() {
        RingSpec s = prod();
        if (lx.tok.kind != Token::End) fail(lx.tok.pos, "trailing input");
        return s;
    }

    RingSpec prod() {
        std::vector<RingSpec> factors{atom()};
        while (lx.tok.kind == Token::Ident && lx.tok.ident == "x") {
            lx.next();
            factors.push_back(atom());
        }
        if (factors.size() == 1) return factors[0];
        RingSpec s;
        s.kind = RingSpec::Kind::Product;
        s.factors = std::move(factors);
        return s;
    }

    RingSpec atom() {
        RingSpec s;
        if (lx.sym('(')) {
            lx.next();
            s = prod();
            lx.expect_sym(')', "to close group");
        } else if (lx.tok.kind == Token::Ident && lx.tok.ident == "Z") {
            lx.next();
            if (lx.tok.kind != Token::Num) fail(lx.tok.pos, "expected modulus after Z");
            if (lx.tok.num < 2) fail(lx.tok.pos, "modulus must be >= 2");
            s.kind = RingSpec::Kind::Zn;
            s.modulus = static_cast<int>(lx.tok.num);
            lx.next();
        } else if (lx.tok.kind == Token::Ident &&
                   (lx.tok.ident == "GF" || lx.tok.ident == "F")) {
            // "F4" and "GF(4)" both mean the field of that order
            bool paren = lx.tok.ident == "GF";
            lx.next();
            if (paren) lx.expect_sym('(', "after GF");
            if (lx.tok.kind != Token::Num) fail(lx.tok.pos, "expected field order");
            long n = lx.tok.num;
            size_t pos = lx.tok.pos;
            lx.next();
            if (paren) lx.expect_sym(')', "to close GF");
            int p = 0;
            Poly mod = gf_modulus(n, p);
            if (p != 0) {
                auto base = std::make_shared<RingSpec>();
                base->kind = RingSpec::Kind::Zn;
                base->modulus = p;
                s.kind = RingSpec::Kind::MonicQuotient;
                s.base = base;
                s.variable = "a";
                s.monic = mod;
            } else if (is_prime(n)) {
                s.kind = RingSpec::Kind::Zn;
                s.modulus = static_cast<int>(n);
            } else {
                fail(pos, "unsupported field order " + std::to_string(n));
            }
        } else {
            fail(lx.tok.pos, "expected ring atom");
        }
        while (lx.sym('[')) s = quotient(std::move(s));
        return s;
    }

    // atom "[" vars "]" "/(" polys ")" lowered to a monic tower plus an
    // ideal quotient of the leftover generators
    RingSpec quotient(RingSpec base) {
        lx.expect_sym('[', "");
        std::vector<std::string> vars;
        while (true) {
            if (lx.tok.kind != Token::Ident || lx.tok.ident.size() != 1)
                fail(lx.tok.pos, "expected single-letter variable");
            vars.push_back(lx.tok.ident);
            lx.next();
            if (lx.sym(',')) {
                lx.next();
                continue;
            }
            break;
        }
        lx.expect_sym(']', "after variables");
        lx.expect_sym('/', "before quotient generators");
        lx.expect_sym('(', "before quotient generators");
        std::vector<Poly> polys;
        std::vector<size_t> positions;
        while (true) {
            positions.push_back(lx.tok.pos);
            polys.push_back(poly_expr(vars));
            if (lx.sym(',')) {
                lx.next();
                continue;
            }
            break;
        }
        lx.expect_sym(')', "to close quotient");

        auto cur = std::make_shared<RingSpec>(std::move(base));
        std::vector<char> used(polys.size(), 0);
        std::vector<std::string> scope;
        for (const auto& v : vars) {
            scope.push_back(v);
            int pick = -1;
            for (size_t i = 0; i < polys.size(); ++i) {
                if (used[i] || polys[i].degree_in(v) < 1 || !polys[i].uses_only(scope))
                    continue;
                Poly lead = polys[i].coeff_of(v, polys[i].degree_in(v));
                if (lead.terms.size() != 1 || !lead.terms.begin()->first.empty())
                    continue;  // leading coefficient must be a constant
                long lc = lead.terms.begin()->second;
                if (lc != 1 && lc != -1) continue;  // tower steps must be monic
                if (pick < 0) pick = static_cast<int>(i);
            }
            if (pick < 0)
                fail(positions.empty() ? 0 : positions[0],
                     "no generator monic in variable " + v);
            used[pick] = 1;
            auto next = std::make_shared<RingSpec>();
            next->kind = RingSpec::Kind::MonicQuotient;
            next->base = cur;
            next->variable = v;
            next->monic = polys[pick];
            cur = next;
        }
        std::vector<Poly> rest;
        for (size_t i = 0; i < polys.size(); ++i)
            if (!used[i]) rest.push_back(polys[i]);
        if (rest.empty()) return *cur;
        RingSpec q;
        q.kind = RingSpec::Kind::IdealQuotient;
        q.base = cur;
        q.gens = std::move(rest);
        return q;
    }

    Poly poly_expr(const std::vector<std::string>& vars) {
        bool neg = false;
        if (lx.sym('-')) {
            neg = true;
            lx.next();
        } else if (lx.sym('+')) {
            lx.next();
        }
        Poly p = poly_term(vars);
        if (neg) p = Poly::constant(0) - p;
        while (lx.sym('+') || lx.sym('-')) {
            bool minus = lx.tok.sym == '-';
            lx.next();
            Poly t = poly_term(vars);
            p = minus ? p - t : p + t;
        }
        return p;
    }

    Poly poly_term(const std::vector<std::string>& vars) {
        Poly p = poly_factor(vars);
        while (true) {
            if (lx.sym('*')) {
                lx.next();
                p = p * poly_factor(vars);
            } else if (lx.tok.kind == Token::Ident || lx.sym('(')) {
                p = p * poly_factor(vars);  // juxtaposition
            } else {
                break;
            }
        }
        return p;
    }

    Poly poly_factor(const std::vector<std::string>& vars) {
        if (lx.tok.kind == Token::Num) {
            Poly p = Poly::constant(lx.tok.num);
            lx.next();
            return p;
        }
        if (lx.sym('(')) {
            lx.next();
            Poly p = poly_expr(vars);
            lx.expect_sym(')', "to close subexpression");
            return p;
        }
        if (lx.tok.kind != Token::Ident) fail(lx.tok.pos, "expected polynomial factor");
        // a letter run is a juxtaposed variable product; '^' binds to the last
        std::string run = lx.tok.ident;
        size_t pos = lx.tok.pos;
        lx.next();
        Poly p = Poly::constant(1);
        for (size_t k = 0; k < run.size(); ++k) {
            std::string v(1, run[k]);
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                fail(pos + k, "unknown variable " + v);
            int e = 1;
            if (k + 1 == run.size() && lx.sym('^')) {
                lx.next();
                if (lx.tok.kind != Token::Num || lx.tok.num < 1)
                    fail(lx.tok.pos, "expected positive exponent");
                e = static_cast<int>(lx.tok.num);
                lx.next();
            }
            Poly f = Poly::var(v);
            for (int j = 1; j < e; ++j) f = f * Poly::var(v);
            p = p * f;
        }
        return p;
    }
};

}  // namespace

RingSpec parse_spec(const std::string& text) { return Parser(text).parse(); }

}  // namespace essgraph
