#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "discrimina/rational.hpp"

namespace discrimina {

/// Dense univariate polynomial over the rationals.
///
/// Coefficients are stored in ascending degree: coeffs()[k] multiplies x^k.
/// The leading coefficient is never zero; the zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
   public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);
    Polynomial(std::initializer_list<Rational> ascending);

    static Polynomial from_descending(std::span<const Rational> descending);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(const Rational& c, std::size_t k);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    /// Zero beyond the degree.
    Rational coeff(std::size_t k) const;
    const Rational& leading() const;
    std::vector<Rational> descending() const;

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    void trim();
    std::vector<Rational> coeffs_;
};

Polynomial derivative(const Polynomial& p);

/// Horner evaluation, exact.
Rational eval(const Polynomial& p, const Rational& x);

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

Polynomial monic(const Polynomial& p);

/// Integer coefficients with gcd 1 and positive leading coefficient.
Polynomial primitive_part(const Polynomial& p);

/// p / gcd(p, p'), monic. Same distinct roots as p, all simple.
Polynomial square_free_part(const Polynomial& p);

/// p(-x).
Polynomial reflect(const Polynomial& p);

/// p(x^2).
Polynomial compose_square(const Polynomial& p);

/// p(x + shift).
Polynomial taylor_shift(const Polynomial& p, const Rational& shift);

/// p(scale * x).
Polynomial scale_argument(const Polynomial& p, const Rational& scale);

Polynomial power(const Polynomial& p, unsigned exponent);

/// Multiplicity of x = 0 as a root (0 for the zero polynomial).
std::size_t zero_root_multiplicity(const Polynomial& p);

/// p / x^k for k = zero_root_multiplicity(p).
Polynomial strip_zero_roots(const Polynomial& p);

/// Human-readable, descending powers of x.
std::string to_string(const Polynomial& p, const std::string& var = "x");

}  // namespace discrimina
