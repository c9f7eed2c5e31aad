#include "qda/expr.hpp"

#include <cctype>
#include <sstream>

namespace qda {

namespace {

// Recursive-descent parser producing polynomials; scalars are polynomials
// supported on the empty word.
class Parser {
  public:
    Parser(const std::string& text, const ParamSpec& params)
        : s_(text), params_(params) {}

    FreePoly parse() {
        FreePoly p = expression();
        skip();
        if (pos_ < s_.size()) throw ParseError("unexpected input", pos_);
        return p;
    }

  private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long integer() {
        skip();
        size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            throw ParseError("expected integer", start);
        return std::stol(s_.substr(start, pos_ - start));
    }

    FreePoly expression() {
        FreePoly acc = eat('-') ? -term() : (eat('+'), term());
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    FreePoly term() {
        FreePoly acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                size_t at = pos_;
                FreePoly d = factor();
                // Division is scalar-only.
                if (d.support_size() != 1 || !d.terms().begin()->first.empty())
                    throw ParseError("division by a non-scalar", at);
                acc = acc * d.terms().begin()->second.inverse();
            } else {
                return acc;
            }
        }
    }

    FreePoly factor() {
        FreePoly base = atom();
        if (eat('^')) {
            bool paren = eat('(');
            long e = integer();
            if (paren && !eat(')')) throw ParseError("expected ')'", pos_);
            if (e >= 0) {
                FreePoly r = FreePoly::unit(params_.backend());
                for (long k = 0; k < e; ++k) r = r * base;
                return r;
            }
            if (base.support_size() != 1 || !base.terms().begin()->first.empty())
                throw ParseError("negative power of a non-scalar", pos_);
            Scalar inv = base.terms().begin()->second.inverse();
            FreePoly r = FreePoly::unit(params_.backend());
            for (long k = 0; k < -e; ++k) r = r * inv;
            return r;
        }
        return base;
    }

    FreePoly scalar_poly(const Scalar& c) {
        return FreePoly::unit(params_.backend()) * c;
    }

    FreePoly atom() {
        skip();
        size_t at = pos_;
        char c = peek();
        if (c == '(') {
            eat('(');
            FreePoly p = expression();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            if (eat('/')) {
                long den = integer();
                if (den == 0) throw ParseError("division by zero", at);
                return scalar_poly(
                    Scalar::from_rational(Rational(num) / Rational(den), params_.backend()));
            }
            return scalar_poly(Scalar::from_int(num, params_.backend()));
        }
        if (c == 'x') {
            ++pos_;
            long i = integer();
            if (i < 1 || i > params_.n_generators())
                throw ParseError("unknown generator index", at);
            return FreePoly::generator(static_cast<int>(i), params_.backend());
        }
        if (c == 'q') {
            ++pos_;
            if (!eat('[')) throw ParseError("expected '[' after q", pos_);
            long i = integer();
            if (!eat(',')) throw ParseError("expected ','", pos_);
            long j = integer();
            if (!eat(']')) throw ParseError("expected ']'", pos_);
            if (i < 1 || j < 1 || i > params_.n_generators() || j > params_.n_generators())
                throw ParseError("parameter index out of range", at);
            return scalar_poly(params_.q(static_cast<int>(i), static_cast<int>(j)));
        }
        if (c == 't') {
            if (params_.backend().kind != Backend::symbolic)
                throw ParseError("'t' needs the symbolic backend", at);
            ++pos_;
            return scalar_poly(Scalar(RationalFunction::variable()));
        }
        if (c == 'z') {
            if (params_.backend().kind != Backend::cyclotomic)
                throw ParseError("'z' needs the cyclotomic backend", at);
            ++pos_;
            return scalar_poly(Scalar(Cyclotomic::zeta(params_.backend().cyclotomic_order)));
        }
        throw ParseError("unexpected character", at);
    }

    const std::string& s_;
    const ParamSpec& params_;
    size_t pos_ = 0;
};

bool scalar_prints_negative(const Scalar& s) {
    switch (s.backend()) {
        case Backend::rational: return s.as_rational() < 0;
        case Backend::symbolic: return s.as_ratfunc().num().leading() < 0;
        case Backend::cyclotomic: {
            const auto& c = s.as_cyclotomic().coeffs();
            for (size_t i = c.size(); i-- > 0;)
                if (c[i] != 0) return c[i] < 0;
            return false;
        }
    }
    return false;
}

bool needs_parens(const std::string& s) {
    for (char c : s)
        if (c == '+' || c == '-' || c == '/' || c == '*' || c == ' ') return true;
    return false;
}

}  // namespace

FreePoly parse_expression(const std::string& text, const ParamSpec& params) {
    return Parser(text, params).parse();
}

Scalar parse_scalar(const std::string& text, const ParamSpec& params) {
    FreePoly p = parse_expression(text, params);
    if (p.is_zero()) return params.zero();
    if (p.support_size() != 1 || !p.terms().begin()->first.empty())
        throw Error("expected a scalar expression: " + text);
    return p.terms().begin()->second;
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    size_t k = 0;
    bool first = true;
    while (k < w.size()) {
        size_t run = k;
        while (run < w.size() && w[run] == w[k]) ++run;
        if (!first) os << "*";
        os << "x" << w[k];
        if (run - k > 1) os << "^" << (run - k);
        first = false;
        k = run;
    }
    return os.str();
}

std::string poly_to_string(const FreePoly& p, const ParamSpec& params) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Scalar coeff = c;
        bool neg = scalar_prints_negative(coeff);
        if (neg) coeff = -coeff;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string cs = params.render_scalar(coeff);
        if (w.empty()) {
            os << (needs_parens(cs) ? "(" + cs + ")" : cs);
            continue;
        }
        if (!coeff.is_one()) {
            os << (needs_parens(cs) || cs[0] == '-' ? "(" + cs + ")" : cs) << "*";
        }
        os << word_to_string(w);
    }
    return os.str();
}

}  // namespace qda
