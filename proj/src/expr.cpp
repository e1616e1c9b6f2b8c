#include "polyzeta/expr.hpp"

#include <cctype>
#include <sstream>

#include "polyzeta/json_io.hpp"
#include "polyzeta/zeta.hpp"

namespace polyzeta {
namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }

    bool starts_number() {
        skip_ws();
        if (pos >= text.size()) return false;
        char c = text[pos];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.';
    }

    double number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.' ||
                text[pos] == 'e' || text[pos] == 'E' ||
                ((text[pos] == '+' || text[pos] == '-') && pos > start &&
                 (text[pos - 1] == 'e' || text[pos - 1] == 'E'))))
            ++pos;
        if (pos == start) throw ParseError("expected a number", pos);
        try {
            return std::stod(text.substr(start, pos - start));
        } catch (const std::exception&) {
            throw ParseError("malformed number", start);
        }
    }

    int uint_literal() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an integer", pos);
        return std::stoi(text.substr(start, pos - start));
    }

    bool accept_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) == 0) {
            std::size_t after = pos + w.size();
            if (after >= text.size() ||
                !std::isalnum(static_cast<unsigned char>(text[after]))) {
                pos = after;
                return true;
            }
        }
        return false;
    }

    DirichletPolynomial expr() {
        bool lead_minus = accept('-');
        DirichletPolynomial acc = term();
        if (lead_minus)
            acc = poly_scale(acc, GeneralDirichletSeries::constant(Cx(-1.0, 0.0)));
        for (;;) {
            if (accept('+')) acc = poly_add(acc, term());
            else if (accept('-')) {
                DirichletPolynomial t = term();
                acc = poly_add(acc, poly_scale(t, GeneralDirichletSeries::constant(Cx(-1.0, 0.0))));
            } else {
                return acc;
            }
        }
    }

    DirichletPolynomial term() {
        DirichletPolynomial acc = factor();
        while (accept('*')) acc = poly_mul(acc, factor());
        return acc;
    }

    DirichletPolynomial factor() {
        DirichletPolynomial base = atom();
        if (accept('^')) {
            int k = uint_literal();
            if (k > kMaxTotalDegree)
                throw DegreeCapExceeded("expression: exponent exceeds the degree cap");
            return poly_pow(base, k);
        }
        return base;
    }

    DirichletPolynomial atom() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
        if (accept('(')) {
            DirichletPolynomial p = expr();
            expect(')');
            return p;
        }
        if (accept_word("zeta")) return DirichletPolynomial::variable(0, 1);
        if (accept_word("series")) {
            expect('{');
            std::size_t depth = 1, start = pos;
            while (pos < text.size() && depth > 0) {
                if (text[pos] == '{') ++depth;
                if (text[pos] == '}') --depth;
                ++pos;
            }
            if (depth != 0) throw ParseError("unterminated series{...}", start);
            std::string body = "{" + text.substr(start, pos - 1 - start) + "}";
            try {
                return DirichletPolynomial::constant(series_from_json(json::parse(body)), 1);
            } catch (const json::exception& e) {
                throw ParseError(std::string("series JSON: ") + e.what(), start);
            }
        }
        if (text[pos] == 'D') {
            ++pos;
            int k = uint_literal();
            if (k >= kMaxVariables)
                throw DegreeCapExceeded("expression: derivative order exceeds the variable cap");
            return DirichletPolynomial::variable(k, k + 1);
        }
        if (text[pos] == 'i' &&
            (pos + 1 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 1])))) {
            ++pos;
            return DirichletPolynomial::constant(GeneralDirichletSeries::constant(Cx(0.0, 1.0)), 1);
        }
        if (starts_number()) {
            double v = number();
            if (pos < text.size() && text[pos] == 'i') {
                ++pos;
                return DirichletPolynomial::constant(GeneralDirichletSeries::constant(Cx(0.0, v)),
                                                     1);
            }
            return DirichletPolynomial::constant(GeneralDirichletSeries::constant(Cx(v, 0.0)), 1);
        }
        throw ParseError("unexpected character", pos);
    }
};

void print_double(std::ostream& os, double v) {
    std::ostringstream tmp;
    tmp.precision(17);
    tmp << v;
    os << tmp.str();
}

}  // namespace

DirichletPolynomial parse_polynomial(const std::string& text) {
    Parser p(text);
    DirichletPolynomial poly = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return poly;
}

ComposedFunction parse_expression(const std::string& text, double tau,
                                  const ZetaParams& params) {
    return ComposedFunction{parse_polynomial(text), make_zeta_function(params), tau};
}

std::string print_polynomial(const DirichletPolynomial& P) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [deg, coeff] : P.terms()) {
        if (!first) os << " + ";
        first = false;
        // constant single-term coefficients print as complex literals
        if (coeff.term_count() == 1 && coeff.terms()[0].lambda == 0.0 &&
            coeff.tail_bound(1.0) == 0.0) {
            Cx a = coeff.terms()[0].a;
            os << '(';
            print_double(os, a.real());
            os << (a.imag() < 0 ? "-" : "+");
            print_double(os, std::abs(a.imag()));
            os << "i)";
        } else {
            os << "series" << series_to_json(coeff).dump();
        }
        for (std::size_t j = 0; j < deg.size(); ++j) {
            if (deg[j] == 0) continue;
            os << "*D" << j;
            if (deg[j] > 1) os << '^' << deg[j];
        }
    }
    return os.str();
}

}  // namespace polyzeta
