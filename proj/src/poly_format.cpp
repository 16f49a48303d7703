#include "dualvar/poly_format.hpp"

#include <cctype>
#include <sstream>

namespace dualvar {

namespace {

std::string monomial_string(const Exponents& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << i;
        if (e[i] > 1) os << "^" << e[i];
        first = false;
    }
    return os.str();
}

// magnitude string of a coefficient plus a flag telling whether it is negative
std::pair<std::string, bool> coeff_parts(const Scalar& c) {
    if (!c.is_rational()) return {c.to_string(), false}; // residues print as-is
    mpq_class q = c.rat();
    bool neg = q < 0;
    if (neg) q = -q;
    return {q.get_str(), neg};
}

} // namespace

std::string format_poly(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // decreasing graded-lex: leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [mag, neg] = coeff_parts(it->second);
        std::string mono = monomial_string(it->first);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mono.empty()) {
            os << mag;
        } else if (mag == "1") {
            os << mono;
        } else {
            os << mag << "*" << mono;
        }
    }
    return os.str();
}

namespace {

enum class Tok { number, var, plus, minus, star, slash, caret, end };

struct Token {
    Tok kind;
    std::string text; // digits for number, index digits for var
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip_ws();
        int ln = line_, co = col_;
        if (pos_ >= s_.size()) return {Tok::end, "", ln, co};
        char c = s_[pos_];
        if (c == '+') { advance(); return {Tok::plus, "+", ln, co}; }
        if (c == '-') { advance(); return {Tok::minus, "-", ln, co}; }
        if (c == '*') { advance(); return {Tok::star, "*", ln, co}; }
        if (c == '/') { advance(); return {Tok::slash, "/", ln, co}; }
        if (c == '^') { advance(); return {Tok::caret, "^", ln, co}; }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                num += s_[pos_];
                advance();
            }
            return {Tok::number, num, ln, co};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                name += s_[pos_];
                advance();
            }
            if (name.size() < 2 || name[0] != 'x' ||
                name.find_first_not_of("0123456789", 1) != std::string::npos)
                throw parse_error("unknown variable name '" + name + "'", ln, co);
            return {Tok::var, name.substr(1), ln, co};
        }
        throw parse_error(std::string("unexpected character '") + c + "'", ln, co);
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            advance();
    }
    void advance() {
        if (s_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
        ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

struct RawTerm {
    mpq_class coeff;
    std::map<int, int> exps; // var index -> exponent
};

class Parser {
public:
    Parser(const std::string& text, int nvars) : lex_(text), nvars_(nvars) {
        cur_ = lex_.next();
    }

    MultiPoly run() {
        if (cur_.kind == Tok::end)
            throw parse_error("empty polynomial", cur_.line, cur_.col);
        std::vector<RawTerm> terms;
        bool neg = false;
        if (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
            neg = cur_.kind == Tok::minus;
            bump();
        }
        terms.push_back(term(neg));
        while (cur_.kind != Tok::end) {
            if (cur_.kind != Tok::plus && cur_.kind != Tok::minus)
                throw parse_error("expected '+' or '-' between terms", cur_.line, cur_.col);
            bool tneg = cur_.kind == Tok::minus;
            bump();
            terms.push_back(term(tneg));
        }

        int n = nvars_;
        if (n < 0) {
            n = 0;
            for (const RawTerm& t : terms)
                for (const auto& [v, e] : t.exps) n = std::max(n, v + 1);
        }
        MultiPoly p(n, Field::rationals());
        for (const RawTerm& t : terms) {
            Exponents e(n, 0);
            for (const auto& [v, k] : t.exps) e[v] += k;
            p.add_term(e, Scalar::rational(t.coeff));
        }
        return p;
    }

private:
    void bump() { cur_ = lex_.next(); }

    mpz_class integer() {
        if (cur_.kind != Tok::number)
            throw parse_error("expected integer", cur_.line, cur_.col);
        mpz_class z(cur_.text);
        bump();
        return z;
    }

    RawTerm term(bool negated) {
        RawTerm t;
        t.coeff = negated ? -1 : 1;
        factor(t);
        for (;;) {
            if (cur_.kind == Tok::star) {
                bump();
                factor(t);
            } else if (cur_.kind == Tok::var) {
                factor(t); // implicit product as in "3x0^2"
            } else {
                break;
            }
        }
        return t;
    }

    void factor(RawTerm& t) {
        if (cur_.kind == Tok::number) {
            Token at = cur_;
            mpz_class num = integer();
            if (cur_.kind == Tok::slash) {
                bump();
                Token dt = cur_;
                mpz_class den = integer();
                if (den == 0)
                    throw parse_error("zero denominator", dt.line, dt.col);
                t.coeff *= mpq_class(num, den);
            } else {
                t.coeff *= mpq_class(num);
            }
            t.coeff.canonicalize();
            (void)at;
        } else if (cur_.kind == Tok::var) {
            int idx = std::stoi(cur_.text);
            if (nvars_ >= 0 && idx >= nvars_)
                throw parse_error("unknown variable name 'x" + cur_.text + "' (expected x0..x" +
                                      std::to_string(nvars_ - 1) + ")",
                                  cur_.line, cur_.col);
            bump();
            int exp = 1;
            if (cur_.kind == Tok::caret) {
                bump();
                Token et = cur_;
                mpz_class e = integer();
                if (e < 0 || e > 1000000)
                    throw parse_error("exponent out of range", et.line, et.col);
                exp = static_cast<int>(e.get_si());
            }
            t.exps[idx] += exp;
        } else {
            throw parse_error("expected coefficient or variable", cur_.line, cur_.col);
        }
    }

    Lexer lex_;
    Token cur_;
    int nvars_;
};

} // namespace

MultiPoly parse_poly(const std::string& text, int nvars) {
    return Parser(text, nvars).run();
}

} // namespace dualvar
