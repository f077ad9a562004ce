#include "discrimina/polynomial.hpp"

#include <algorithm>

#include "discrimina/errors.hpp"

namespace discrimina {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

Polynomial Polynomial::from_descending(std::span<const Rational> descending) {
    return Polynomial(std::vector<Rational>(descending.rbegin(), descending.rend()));
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

std::vector<Rational> Polynomial::descending() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

Rational Polynomial::operator()(const Rational& x) const { return eval(*this, x); }

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
    auto c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * static_cast<unsigned long>(k);
    return Polynomial(std::move(out));
}

Rational eval(const Polynomial& p, const Rational& x) {
    Rational acc = 0;
    auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> quo(a.degree() - b.degree() + 1);
    auto bc = b.coeffs();
    const Rational lead_inv = 1 / b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const Rational q = rem[k + b.degree()] * lead_inv;
        quo[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= q * bc[j];
    }
    rem.resize(b.degree());
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * Rational(1 / p.leading());
}

Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    const Integer l = denominator_lcm(p.coeffs());
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        const Integer num = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    Rational scale(l, g);
    scale.canonicalize();
    if (p.leading() < 0) scale = -scale;
    return p * scale;
}

// Remainder sequence with content normalization at every step keeps the
// coefficient sizes bounded by those of the inputs' primitive parts.
Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = primitive_part(a), y = primitive_part(b);
    while (!y.is_zero()) {
        Polynomial r = divmod(x, y).second;
        x = std::move(y);
        y = primitive_part(r);
    }
    return monic(x);
}

Polynomial square_free_part(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
    if (p.degree() == 0) return Polynomial::constant(1);
    const Polynomial g = gcd(p, derivative(p));
    return monic(divmod(p, g).first);
}

Polynomial reflect(const Polynomial& p) {
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return Polynomial(std::move(c));
}

Polynomial compose_square(const Polynomial& p) {
    if (p.is_zero()) return p;
    std::vector<Rational> c(2 * p.coeffs().size() - 1);
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[2 * k] = p.coeffs()[k];
    return Polynomial(std::move(c));
}

Polynomial taylor_shift(const Polynomial& p, const Rational& shift) {
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
    const std::size_t n = c.size();
    // Repeated synthetic division by (x - shift).
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t k = n - 1; k > i; --k) c[k - 1] += shift * c[k];
    return Polynomial(std::move(c));
}

Polynomial scale_argument(const Polynomial& p, const Rational& scale) {
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
    Rational f = 1;
    for (auto& a : c) {
        a *= f;
        f *= scale;
    }
    return Polynomial(std::move(c));
}

Polynomial power(const Polynomial& p, unsigned exponent) {
    Polynomial result = Polynomial::constant(1), base = p;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return result;
}

std::size_t zero_root_multiplicity(const Polynomial& p) {
    std::size_t k = 0;
    auto c = p.coeffs();
    while (k < c.size() && c[k] == 0) ++k;
    return k == c.size() ? 0 : k;
}

Polynomial strip_zero_roots(const Polynomial& p) {
    const std::size_t k = zero_root_multiplicity(p);
    return Polynomial(std::vector<Rational>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(k), p.coeffs().end()));
}

std::string to_string(const Polynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (k == 0 || mag != 1) out += to_string(mag);
        if (k > 0) out += (k == 1 ? var : var + "^" + std::to_string(k));
    }
    return out;
}

}  // namespace discrimina
