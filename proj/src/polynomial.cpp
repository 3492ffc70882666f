#include "fpt/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "fpt/errors.hpp"

namespace fpt {

Polynomial::Polynomial(std::vector<ExactRational> coefficients) : m_coeffs(std::move(coefficients)) {
    trim();
}

Polynomial Polynomial::constant(ExactRational c) {
    return Polynomial(std::vector<ExactRational>{std::move(c)});
}

Polynomial Polynomial::monomial(ExactRational c, std::size_t power) {
    std::vector<ExactRational> coeffs(power + 1);
    coeffs[power] = std::move(c);
    return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) m_coeffs.pop_back();
}

ExactRational Polynomial::coefficient(std::size_t k) const {
    return k < m_coeffs.size() ? m_coeffs[k] : ExactRational();
}

const ExactRational& Polynomial::leading() const {
    if (is_zero()) throw MathError("leading coefficient of the zero polynomial");
    return m_coeffs.back();
}

int Polynomial::lowest_degree() const noexcept {
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        if (!m_coeffs[k].is_zero()) return static_cast<int>(k);
    }
    return -1;
}

ExactRational Polynomial::evaluate(const ExactRational& at) const {
    ExactRational acc;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (m_coeffs.size() <= 1) return {};
    std::vector<ExactRational> out(m_coeffs.size() - 1);
    for (std::size_t k = 1; k < m_coeffs.size(); ++k) {
        out[k - 1] = m_coeffs[k] * ExactRational(static_cast<long>(k));
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) throw MathError("monic scaling of the zero polynomial");
    const ExactRational inv = ExactRational(1) / leading();
    return *this * inv;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(ExactRational(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.m_coeffs.size() > m_coeffs.size()) m_coeffs.resize(rhs.m_coeffs.size());
    for (std::size_t k = 0; k < rhs.m_coeffs.size(); ++k) m_coeffs[k] += rhs.m_coeffs[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.m_coeffs.size() > m_coeffs.size()) m_coeffs.resize(rhs.m_coeffs.size());
    for (std::size_t k = 0; k < rhs.m_coeffs.size(); ++k) m_coeffs[k] -= rhs.m_coeffs[k];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExactRational> out(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        if (a.m_coeffs[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
            out[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const ExactRational& scalar) {
    if (scalar.is_zero()) {
        m_coeffs.clear();
        return *this;
    }
    for (auto& c : m_coeffs) c *= scalar;
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& c : a.m_coeffs) c = -c;
    return a;
}

DivisionResult divmod(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) throw MathError("division by zero polynomial");
    const int dd = divisor.degree();
    if (dividend.degree() < dd) return {Polynomial(), dividend};

    std::vector<ExactRational> rem(dividend.coefficients().begin(), dividend.coefficients().end());
    std::vector<ExactRational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
    const auto d = divisor.coefficients();
    const ExactRational lead_inv = ExactRational(1) / divisor.leading();
    for (int k = dividend.degree() - dd; k >= 0; --k) {
        const auto top = static_cast<std::size_t>(k + dd);
        if (rem[top].is_zero()) continue;
        const ExactRational q = rem[top] * lead_inv;
        quot[static_cast<std::size_t>(k)] = q;
        for (std::size_t m = 0; m < d.size(); ++m) {
            rem[static_cast<std::size_t>(k) + m] -= q * d[m];
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor) {
    auto [q, r] = divmod(dividend, divisor);
    if (!r.is_zero()) throw MathError("inexact polynomial division");
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw MathError("gcd undefined");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    Polynomial x = a.monic();
    Polynomial y = b.monic();
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).remainder;
        x = std::move(y);
        y = r.is_zero() ? Polynomial() : r.monic();
    }
    return x;
}

namespace {

std::string term_text(const ExactRational& magnitude, std::size_t power, OutputMode mode) {
    std::string var;
    if (power == 1) var = "z";
    else if (power > 1) var = "z^" + std::to_string(power);

    if (power == 0) {
        return mode == OutputMode::decimal && magnitude.has_terminating_decimal()
                   ? magnitude.to_decimal_string()
                   : magnitude.to_fraction_string();
    }
    if (magnitude.is_one()) return var;
    if (mode == OutputMode::decimal && magnitude.has_terminating_decimal()) {
        return magnitude.to_decimal_string() + var;
    }
    return magnitude.to_fraction_string() + "*" + var;
}

} // namespace

std::string Polynomial::to_string(OutputMode mode) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        const ExactRational& c = m_coeffs[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const std::string body = term_text(negative ? -c : c, k, mode);
        if (first) {
            out += negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

namespace {

class PolynomialScanner {
public:
    explicit PolynomialScanner(std::string_view text) : m_text(text) {}

    Polynomial parse() {
        std::vector<ExactRational> coeffs;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip_ws();
            if (at_end()) break;
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++m_pos;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [coef, power] = term();
            if (negative) coef = -coef;
            if (coeffs.size() <= power) coeffs.resize(power + 1);
            coeffs[power] += coef;
            first = false;
        }
        return Polynomial(std::move(coeffs));
    }

private:
    std::pair<ExactRational, std::size_t> term() {
        ExactRational coef(1);
        bool have_number = false;
        if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
            coef = ExactRational::parse(number_token());
            have_number = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++m_pos;
                skip_ws();
                if (at_end() || peek() != 'z') fail("expected 'z' after '*'");
            }
        }
        if (!at_end() && peek() == 'z') {
            ++m_pos;
            std::size_t power = 1;
            if (!at_end() && peek() == '^') {
                ++m_pos;
                const std::size_t start = m_pos;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++m_pos;
                if (start == m_pos || m_pos - start > 6) fail("bad exponent");
                power = std::stoul(std::string(m_text.substr(start, m_pos - start)));
            }
            return {coef, power};
        }
        if (!have_number) fail("expected a term");
        return {coef, 0};
    }

    std::string_view number_token() {
        const std::size_t start = m_pos;
        auto digits = [&] {
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++m_pos;
        };
        digits();
        if (!at_end() && peek() == '.') {
            ++m_pos;
            digits();
        }
        if (!at_end() && (peek() == 'e' || peek() == 'E')) {
            ++m_pos;
            if (!at_end() && (peek() == '+' || peek() == '-')) ++m_pos;
            digits();
        }
        if (!at_end() && peek() == '/') {
            ++m_pos;
            digits();
        }
        return m_text.substr(start, m_pos - start);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial '" + std::string(m_text) + "': " + what + " at offset " +
                         std::to_string(m_pos));
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++m_pos;
    }
    [[nodiscard]] bool at_end() const { return m_pos >= m_text.size(); }
    [[nodiscard]] char peek() const { return m_text[m_pos]; }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

} // namespace

Polynomial Polynomial::parse(std::string_view text) {
    return PolynomialScanner(text).parse();
}

} // namespace fpt
