#include "discrimina/rational.hpp"

#include <cmath>
#include <sstream>

#include "discrimina/errors.hpp"

namespace discrimina {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    constexpr std::string_view unicode_minus = "\xE2\x88\x92";
    if (s.starts_with('-')) {
        negative = true;
        s.remove_prefix(1);
    } else if (s.starts_with(unicode_minus)) {
        negative = true;
        s.remove_prefix(unicode_minus.size());
    }
    const auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("invalid rational literal '" + std::string(text) + "' (expected p or p/q)");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(negative ? Integer(-n) : n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Rational from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("cannot convert a non-finite double to a rational");
    Rational q(x);
    return q;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer denominator_lcm(std::span<const Rational> values) {
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

// Continued-fraction walk: the simplest rational in [lo, hi] shares the
// common prefix of both expansions.
Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
    Rational lo = lo_in, hi = hi_in;
    if (lo > hi) std::swap(lo, hi);
    if (lo <= 0 && hi >= 0) return Rational(0);
    if (hi < 0) return Rational(-simplest_between(Rational(-hi), Rational(-lo)));

    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (Rational(fl) == lo) return lo;
    if (Rational(fl + 1) <= hi) return Rational(fl + 1);
    // lo and hi share the integer part fl; recurse on reciprocals of the fractional parts.
    Rational lo_frac = lo - fl, hi_frac = hi - fl;
    Rational inner = simplest_between(Rational(1 / hi_frac), Rational(1 / lo_frac));
    Rational result = fl + 1 / inner;
    return result;
}

Rational power(const Rational& base, unsigned long exponent) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    r.canonicalize();
    return r;
}

std::string to_decimal(const Rational& q, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << q.get_d();
    return os.str();
}

}  // namespace discrimina
