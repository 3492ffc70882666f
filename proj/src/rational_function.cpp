#include "fpt/rational_function.hpp"

#include <algorithm>

#include "fpt/errors.hpp"

namespace fpt {

std::string render_quotient(const Polynomial& numerator, const Polynomial& denominator, OutputMode mode) {
    return "(" + numerator.to_string(mode) + ") / (" + denominator.to_string(mode) + ")";
}

PolynomialQuotient parse_quotient(std::string_view text) {
    // Split on the '/' that sits outside any parentheses and is followed by
    // '('; fraction coefficients such as 2/5 never are.
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (c == '/' && depth == 0) {
            auto rest = text.substr(i + 1);
            const auto open = rest.find_first_not_of(" \t");
            if (open != std::string_view::npos && rest[open] == '(') {
                auto strip_parens = [](std::string_view s) {
                    const auto b = s.find('(');
                    const auto e = s.rfind(')');
                    if (b == std::string_view::npos || e == std::string_view::npos || e < b) {
                        throw ParseError("unbalanced parentheses in '" + std::string(s) + "'");
                    }
                    if (s.find_first_not_of(" \t") != b || s.find_last_not_of(" \t") != e) {
                        throw ParseError("unexpected text around '" + std::string(s) + "'");
                    }
                    return s.substr(b + 1, e - b - 1);
                };
                return {Polynomial::parse(strip_parens(text.substr(0, i))),
                        Polynomial::parse(strip_parens(rest))};
            }
        }
    }
    std::string_view body = text;
    const auto b = body.find_first_not_of(" \t");
    const auto e = body.find_last_not_of(" \t");
    if (b != std::string_view::npos && body[b] == '(' && body[e] == ')') body = body.substr(b + 1, e - b - 1);
    return {Polynomial::parse(body), Polynomial::constant(ExactRational(1))};
}

RationalFunction::RationalFunction() : m_den(Polynomial::constant(ExactRational(1))) {}

RationalFunction::RationalFunction(Polynomial p)
    : m_num(std::move(p)), m_den(Polynomial::constant(ExactRational(1))) {}

RationalFunction RationalFunction::normalize(Polynomial numerator, Polynomial denominator) {
    if (denominator.is_zero()) throw MathError("division by zero polynomial");
    if (numerator.is_zero()) return RationalFunction();
    const Polynomial g = gcd(numerator, denominator);
    if (g.degree() > 0) {
        numerator = exact_divide(numerator, g);
        denominator = exact_divide(denominator, g);
    }
    const ExactRational c0 = denominator.constant_term();
    if (c0.is_zero()) throw MathError("non-expandable at z=0");
    if (!c0.is_one()) {
        const ExactRational inv = ExactRational(1) / c0;
        numerator *= inv;
        denominator *= inv;
    }
    return RationalFunction(std::move(numerator), std::move(denominator));
}

ExactRational RationalFunction::evaluate(const ExactRational& at) const {
    const ExactRational d = m_den.evaluate(at);
    if (d.is_zero()) throw MathError("pole at evaluation point");
    return m_num.evaluate(at) / d;
}

RationalFunction RationalFunction::derivative() const {
    return normalize(m_num.derivative() * m_den - m_num * m_den.derivative(), m_den * m_den);
}

std::vector<ExactRational> RationalFunction::series(std::size_t terms) const {
    std::vector<ExactRational> c(terms);
    const auto n = m_num.coefficients();
    const auto d = m_den.coefficients();
    for (std::size_t k = 0; k < terms; ++k) {
        ExactRational v = k < n.size() ? n[k] : ExactRational();
        const std::size_t top = std::min(k, d.size() - 1);
        for (std::size_t m = 1; m <= top; ++m) {
            if (!d[m].is_zero()) v -= d[m] * c[k - m];
        }
        c[k] = std::move(v);
    }
    return c;
}

RationalFunction RationalFunction::pow(unsigned exponent) const {
    // coprime parts stay coprime under powers
    return RationalFunction(m_num.pow(exponent), m_den.pow(exponent));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::normalize(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::normalize(a.m_num * b.m_den - b.m_num * a.m_den, a.m_den * b.m_den);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::normalize(a.m_num * b.m_num, a.m_den * b.m_den);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw MathError("division by zero rational function");
    return RationalFunction::normalize(a.m_num * b.m_den, a.m_den * b.m_num);
}

} // namespace fpt
