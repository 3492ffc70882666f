#ifndef FPT_POLYNOMIAL_HPP
#define FPT_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpt/exact_rational.hpp"

namespace fpt {

/*
 * Polynomial
 *
 * Dense univariate polynomial in z over exact rationals.  Coefficient k is
 * the coefficient of z^k.  The list is always trimmed: the highest stored
 * coefficient is nonzero, and the zero polynomial stores nothing.
 */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<ExactRational> coefficients);
    Polynomial(std::initializer_list<ExactRational> coefficients)
        : Polynomial(std::vector<ExactRational>(coefficients)) {}

    static Polynomial constant(ExactRational c);
    static Polynomial monomial(ExactRational c, std::size_t power);
    /// The indeterminate z itself.
    static Polynomial z() { return monomial(ExactRational(1), 1); }

    [[nodiscard]] bool is_zero() const noexcept { return m_coeffs.empty(); }
    [[nodiscard]] bool is_constant() const noexcept { return m_coeffs.size() <= 1; }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(m_coeffs.size()) - 1; }
    [[nodiscard]] std::span<const ExactRational> coefficients() const noexcept { return m_coeffs; }
    /// Coefficient of z^k; zero past the degree.
    [[nodiscard]] ExactRational coefficient(std::size_t k) const;
    [[nodiscard]] ExactRational constant_term() const { return coefficient(0); }
    /// Throws MathError on the zero polynomial.
    [[nodiscard]] const ExactRational& leading() const;
    /// Index of the lowest nonzero coefficient; -1 for zero.
    [[nodiscard]] int lowest_degree() const noexcept;

    [[nodiscard]] ExactRational evaluate(const ExactRational& at) const;
    [[nodiscard]] Polynomial derivative() const;
    /// Scaled so the leading coefficient is 1.  Throws MathError on zero.
    [[nodiscard]] Polynomial monic() const;
    [[nodiscard]] Polynomial pow(unsigned exponent) const;

    /// Text form "c0 + c1*z + c2*z^2" (exact) or "0.4z + 0.04z^2" (decimal).
    [[nodiscard]] std::string to_string(OutputMode mode) const;
    /// Accepts both rendering styles; throws ParseError.
    static Polynomial parse(std::string_view text);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const ExactRational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const ExactRational& s) { return a *= s; }
    friend Polynomial operator*(const ExactRational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator-(Polynomial a);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim();

    std::vector<ExactRational> m_coeffs;
};

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division over the rationals.  Throws MathError on a zero divisor.
DivisionResult divmod(const Polynomial& dividend, const Polynomial& divisor);

/// Quotient of a division known to be exact.  Throws MathError when the
/// remainder is nonzero.
Polynomial exact_divide(const Polynomial& dividend, const Polynomial& divisor);

/// Monic gcd by the Euclidean algorithm.  gcd(p, 0) is monic(p).
/// Throws MathError("gcd undefined") when both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

} // namespace fpt

#endif // FPT_POLYNOMIAL_HPP
