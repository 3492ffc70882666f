#include "fpt/exact_rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "fpt/errors.hpp"

namespace fpt {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

[[noreturn]] void bad_number(std::string_view text) {
    throw ParseError("invalid number '" + std::string(text) + "'");
}

} // namespace

ExactRational::ExactRational(long numerator, long denominator) {
    if (denominator == 0) throw MathError("zero denominator");
    m_value = mpq_class(numerator, 1) / mpq_class(denominator, 1);
}

ExactRational::ExactRational(mpq_class value) : m_value(std::move(value)) {
    m_value.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    const std::string_view original = text;
    text = trim(text);
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) bad_number(original);

    mpq_class result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = trim(text.substr(0, slash));
        const auto den = trim(text.substr(slash + 1));
        if (!all_digits(num) || !all_digits(den)) bad_number(original);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator in '" + std::string(original) + "'");
        result = mpq_class(mpz_class(std::string(num), 10), d);
        result.canonicalize();
    } else {
        std::string_view mantissa = text;
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            mantissa = text.substr(0, e);
            std::string_view exp_text = text.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(original);
            exponent = std::stol(std::string(exp_text));
            if (exp_negative) exponent = -exponent;
        }
        std::string_view int_part = mantissa;
        std::string_view frac_part;
        if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
            int_part = mantissa.substr(0, dot);
            frac_part = mantissa.substr(dot + 1);
        }
        if (int_part.empty() && frac_part.empty()) bad_number(original);
        if (!int_part.empty() && !all_digits(int_part)) bad_number(original);
        if (!frac_part.empty() && !all_digits(frac_part)) bad_number(original);

        const std::string digits = std::string(int_part) + std::string(frac_part);
        mpz_class num(digits, 10);
        exponent -= static_cast<long>(frac_part.size());
        if (exponent >= 0) {
            result = mpq_class(num * pow10(static_cast<unsigned long>(exponent)));
        } else {
            result = mpq_class(num, pow10(static_cast<unsigned long>(-exponent)));
            result.canonicalize();
        }
    }
    if (negative) result = -result;
    return ExactRational(std::move(result));
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.is_zero()) throw MathError("division by zero");
    m_value /= rhs.m_value;
    return *this;
}

bool ExactRational::has_terminating_decimal() const {
    mpz_class d = m_value.get_den();
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) d /= 2;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) d /= 5;
    return d == 1;
}

std::string ExactRational::to_fraction_string() const {
    return m_value.get_str(10);
}

namespace {

// Renders |scaled| / 10^places as a decimal with the given sign.
std::string scaled_to_decimal(mpz_class scaled, unsigned long places, bool negative) {
    std::string digits = scaled.get_str(10);
    if (places > 0) {
        if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
        digits.insert(digits.size() - places, 1, '.');
        while (digits.back() == '0') digits.pop_back();
        if (digits.back() == '.') digits.pop_back();
    }
    if (negative && digits != "0") digits.insert(0, 1, '-');
    return digits;
}

} // namespace

std::string ExactRational::to_decimal_string() const {
    if (!has_terminating_decimal()) {
        throw MathError(to_fraction_string() + " has no terminating decimal expansion");
    }
    mpz_class d = m_value.get_den();
    unsigned long twos = 0;
    unsigned long fives = 0;
    while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) { d /= 2; ++twos; }
    while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { d /= 5; ++fives; }
    const unsigned long places = std::max(twos, fives);
    mpz_class scaled = abs(m_value.get_num()) * pow10(places) / m_value.get_den();
    return scaled_to_decimal(std::move(scaled), places, sign() < 0);
}

std::string ExactRational::to_rounded_string(unsigned digits) const {
    const mpz_class scale = pow10(digits);
    mpz_class num = abs(m_value.get_num()) * scale;
    const mpz_class& den = m_value.get_den();
    // round half away from zero: floor((2*num + den) / (2*den))
    mpz_class scaled = (2 * num + den) / (2 * den);
    return scaled_to_decimal(std::move(scaled), digits, sign() < 0);
}

std::string ExactRational::to_string(OutputMode mode) const {
    if (mode == OutputMode::exact) return to_fraction_string();
    if (has_terminating_decimal()) return to_decimal_string();
    return to_fraction_string() + " (≈" + to_rounded_string(12) + ")";
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
    return os << r.to_fraction_string();
}

} // namespace fpt
