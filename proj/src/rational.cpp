#include "onedep/rational.hpp"

#include <cctype>

#include "onedep/errors.hpp"

namespace onedep {

std::string to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw UsageError("not an integer: '" + std::string(s) + "'");
    Integer v{std::string(s)};
    return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const Integer num = parse_integer(text.substr(0, slash));
        const std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
            throw UsageError("denominator must be unsigned: '" + std::string(text) + "'");
        const Integer den = parse_integer(den_text);
        if (den == 0) throw UsageError("zero denominator: '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (!all_digits(frac)) throw UsageError("malformed decimal: '" + std::string(text) + "'");
        bool neg = false;
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
            neg = whole.front() == '-';
            whole.remove_prefix(1);
        }
        const Integer w = whole.empty() ? Integer(0) : parse_integer(whole);
        Integer scale(1);
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Rational r = Rational(w) + Rational(Integer(std::string(frac)), scale);
        return neg ? Rational(-r) : r;
    }
    return Rational(parse_integer(text));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational power(const Rational& base, unsigned exponent) {
    Rational acc(1);
    for (unsigned i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

Integer factorial(unsigned n) {
    Integer f(1);
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer b(1);
    for (long i = 1; i <= k; ++i) {
        b *= n - k + i;
        b /= i;
    }
    return b;
}

}  // namespace onedep
