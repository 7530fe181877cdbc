#include "indexforge/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace indexforge {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole)
{
    if (text.empty()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    std::size_t start = 0;
    if (text[0] == '-' || text[0] == '+') {
        start = 1;
    }
    if (start == text.size()) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        }
    }
    Integer value(std::string(text.substr(start)));
    return text[0] == '-' ? Integer(-value) : value;
}

}  // namespace

std::string to_string(const Rational& q)
{
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const Integer num = parse_integer(text.substr(0, slash), text);
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    const Integer den = parse_integer(den_text, text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

bool is_integer(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

Integer to_integer(const Rational& q)
{
    if (!is_integer(q)) {
        throw std::domain_error("expected an integer, got " + to_string(q));
    }
    return boost::multiprecision::numerator(q);
}

Rational binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return Rational(0);
    }
    Rational result(1);
    for (long i = 1; i <= k; ++i) {
        result *= Rational(n - k + i, i);
    }
    return result;
}

Rational factorial(long n)
{
    Rational result(1);
    for (long i = 2; i <= n; ++i) {
        result *= i;
    }
    return result;
}

double to_double(const Rational& q)
{
    return q.convert_to<double>();
}

}  // namespace indexforge
