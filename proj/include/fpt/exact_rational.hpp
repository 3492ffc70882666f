#ifndef FPT_EXACT_RATIONAL_HPP
#define FPT_EXACT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fpt {

/// How scalar values are rendered as text.
enum class OutputMode {
    exact,   ///< reduced fraction "p/q" (or integer "p")
    decimal, ///< terminating decimal when one exists, else "p/q (≈d)"
};

/*
 * ExactRational
 *
 * Arbitrary-precision signed rational kept in lowest terms with a positive
 * denominator; zero is 0/1.  Backed by GMP's mpq_class, which canonicalizes
 * after every operation.
 */
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : m_value(value) {} // NOLINT(google-explicit-constructor)
    ExactRational(long numerator, long denominator);
    explicit ExactRational(mpq_class value);

    /// Parses an integer ("-3"), a fraction ("2/5", "-10/4") or a decimal
    /// (".4", "0.04", "1.5e-3") exactly.  Surrounding whitespace is ignored.
    /// Throws ParseError on anything else or on a zero denominator.
    static ExactRational parse(std::string_view text);

    [[nodiscard]] const mpq_class& value() const noexcept { return m_value; }
    [[nodiscard]] mpz_class numerator() const { return m_value.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return m_value.get_den(); }

    [[nodiscard]] bool is_zero() const noexcept { return sgn(m_value) == 0; }
    [[nodiscard]] bool is_one() const noexcept { return m_value == 1; }
    [[nodiscard]] int sign() const noexcept { return sgn(m_value); }
    [[nodiscard]] double to_double() const { return m_value.get_d(); }

    /// True when the reduced denominator has no prime factors other than 2 and 5.
    [[nodiscard]] bool has_terminating_decimal() const;

    /// "p/q" or "p".
    [[nodiscard]] std::string to_fraction_string() const;
    /// Exact terminating decimal ("0.0186624", "-2.5", "3"); requires
    /// has_terminating_decimal().
    [[nodiscard]] std::string to_decimal_string() const;
    /// Decimal rounded half-away-from-zero to `digits` fractional places,
    /// trailing zeros stripped.
    [[nodiscard]] std::string to_rounded_string(unsigned digits) const;
    /// Scalar rendering per mode.  Decimal mode never prints a rounded
    /// number bare: non-terminating values print as "p/q (≈d)".
    [[nodiscard]] std::string to_string(OutputMode mode) const;

    ExactRational& operator+=(const ExactRational& rhs) { m_value += rhs.m_value; return *this; }
    ExactRational& operator-=(const ExactRational& rhs) { m_value -= rhs.m_value; return *this; }
    ExactRational& operator*=(const ExactRational& rhs) { m_value *= rhs.m_value; return *this; }
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(const ExactRational& a) { return ExactRational(mpq_class(-a.m_value)); }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class m_value;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

} // namespace fpt

#endif // FPT_EXACT_RATIONAL_HPP
