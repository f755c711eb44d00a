#include "kfl/rational.hpp"

#include "kfl/errors.hpp"

#include <cctype>
#include <limits>

namespace kfl {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw InputError("invalid number: '" + std::string(whole) + "'");
    Integer value(std::string(s), 10);
    return negative ? Integer(-value) : value;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    int exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        Integer exp = parse_integer(s.substr(e + 1), whole);
        if (!exp.fits_sint_p() || abs(exp) > 10000)
            throw InputError("exponent out of range: '" + std::string(whole) + "'");
        exponent = static_cast<int>(exp.get_si());
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto dot = s.find('.');
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty())
        throw InputError("invalid number: '" + std::string(whole) + "'");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
        throw InputError("invalid number: '" + std::string(whole) + "'");
    std::string digits = std::string(int_part) + std::string(frac_part);
    Integer numerator(digits.empty() ? std::string("0") : digits, 10);
    int scale = static_cast<int>(frac_part.size()) - exponent;
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational result = scale >= 0 ? Rational(numerator, ten_pow) : Rational(numerator * ten_pow);
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InputError("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        Integer den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text, text);
    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_str();
}

Rational power(const Rational& base, unsigned exponent) {
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return result;
}

std::int64_t to_int64(const Integer& value) {
    if (!value.fits_slong_p()) throw InputError("integer does not fit in 64 bits: " + value.get_str());
    return static_cast<std::int64_t>(value.get_si());
}

std::int64_t ceil_to_int64(const Rational& value) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return to_int64(q);
}

Rational primitive_scale_factor(const std::vector<Rational>& values) {
    Integer den_lcm = 1;
    for (const auto& v : values) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& v : values) {
        Integer scaled = v.get_num() * (den_lcm / v.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    if (num_gcd == 0) return Rational(1);
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    return factor;
}

std::vector<Rational> primitive_integer_scaling(const std::vector<Rational>& values) {
    Rational factor = primitive_scale_factor(values);
    std::vector<Rational> out;
    out.reserve(values.size());
    for (const auto& v : values) out.emplace_back(v * factor);
    return out;
}

}  // namespace kfl
