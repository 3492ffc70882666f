#ifndef FPT_RATIONAL_FUNCTION_HPP
#define FPT_RATIONAL_FUNCTION_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fpt/exact_rational.hpp"
#include "fpt/polynomial.hpp"

namespace fpt {

/// A numerator/denominator pair kept exactly as produced, with no reduction.
struct PolynomialQuotient {
    Polynomial numerator;
    Polynomial denominator;

    friend bool operator==(const PolynomialQuotient&, const PolynomialQuotient&) = default;
};

/// "(num) / (den)" using Polynomial::to_string for both halves.
std::string render_quotient(const Polynomial& numerator, const Polynomial& denominator, OutputMode mode);

/// Inverse of render_quotient.  A bare polynomial parses as p / 1.
PolynomialQuotient parse_quotient(std::string_view text);

/*
 * RationalFunction
 *
 * Canonical quotient of two polynomials in z: numerator and denominator are
 * coprime and the denominator has constant term 1.  The canonical form is
 * unique, so operator== is structural equality.  Every function here is
 * analytic at z = 0 by construction, which is what makes the Maclaurin
 * coefficients in series() well defined.
 */
class RationalFunction {
public:
    /// The zero function 0 / 1.
    RationalFunction();
    /// p / 1.
    explicit RationalFunction(Polynomial p);

    /// Reduces num/den and scales the denominator to constant term 1.
    /// Throws MathError("division by zero polynomial") for den = 0 and
    /// MathError("non-expandable at z=0") when the reduced denominator
    /// vanishes at z = 0.
    static RationalFunction normalize(Polynomial numerator, Polynomial denominator);
    static RationalFunction normalize(const PolynomialQuotient& q) {
        return normalize(q.numerator, q.denominator);
    }

    [[nodiscard]] const Polynomial& numerator() const noexcept { return m_num; }
    [[nodiscard]] const Polynomial& denominator() const noexcept { return m_den; }
    [[nodiscard]] bool is_zero() const noexcept { return m_num.is_zero(); }

    /// Throws MathError("pole at evaluation point").
    [[nodiscard]] ExactRational evaluate(const ExactRational& at) const;
    /// Quotient rule, re-normalized.
    [[nodiscard]] RationalFunction derivative() const;
    /// Maclaurin coefficients c_0 .. c_{terms-1}.
    [[nodiscard]] std::vector<ExactRational> series(std::size_t terms) const;
    [[nodiscard]] RationalFunction pow(unsigned exponent) const;

    [[nodiscard]] std::string to_string(OutputMode mode) const {
        return render_quotient(m_num, m_den, mode);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    /// Throws MathError when b is zero.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    RationalFunction(Polynomial num, Polynomial den) : m_num(std::move(num)), m_den(std::move(den)) {}

    Polynomial m_num;
    Polynomial m_den;
};

/// Free-function spelling of RationalFunction::series.
inline std::vector<ExactRational> series_coefficients(const RationalFunction& rf, std::size_t terms) {
    return rf.series(terms);
}

} // namespace fpt

#endif // FPT_RATIONAL_FUNCTION_HPP
