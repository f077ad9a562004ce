#pragma once

#include <vector>

#include "discrimina/polynomial.hpp"

namespace discrimina {

/// Piecewise polynomial on [0, 1]. Piece k is valid on
/// [breakpoints[k], breakpoints[k+1]]; breakpoints start at 0, end at 1 and
/// ascend strictly.
class PiecewisePoly {
   public:
    PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

    static PiecewisePoly constant(const Rational& c);
    static PiecewisePoly polynomial(Polynomial p);
    /// max(c0 + c1 x, d0 + d1 x), split at the exact crossing when it falls in (0,1).
    static PiecewisePoly max_affine(const Rational& c0, const Rational& c1, const Rational& d0, const Rational& d1);

    std::span<const Rational> breakpoints() const noexcept { return breakpoints_; }
    std::span<const Polynomial> pieces() const noexcept { return pieces_; }
    std::size_t piece_count() const noexcept { return pieces_.size(); }

    /// At an interior breakpoint the right-hand piece is used.
    Rational operator()(const Rational& x) const;
    double evaluate(double x) const;

    /// Same function on a finer grid.
    PiecewisePoly refined(std::span<const Rational> extra_breakpoints) const;

    /// Exact sign check: nonnegative everywhere on [0,1] and not identically zero.
    bool nonnegative_and_nontrivial() const;

    friend bool operator==(const PiecewisePoly&, const PiecewisePoly&) = default;

   private:
    std::size_t piece_index(const Rational& x) const;
    std::vector<Rational> breakpoints_;
    std::vector<Polynomial> pieces_;
};

PiecewisePoly pw_multiply(const PiecewisePoly& f, const PiecewisePoly& g);
PiecewisePoly pw_add(const PiecewisePoly& f, const PiecewisePoly& g);
PiecewisePoly pw_scale(const PiecewisePoly& f, const Rational& c);
PiecewisePoly pw_power(const PiecewisePoly& f, unsigned exponent);

/// Exact integral over [0, 1].
Rational pw_integrate01(const PiecewisePoly& f);

}  // namespace discrimina
