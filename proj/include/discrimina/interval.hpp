#pragma once

// Rational interval arithmetic, used to certify solution counts computed
// from moments that are only known to within an error bound.

#include <optional>
#include <span>

#include "discrimina/rational.hpp"

namespace discrimina {

struct RationalRange {
    Rational lo;
    Rational hi;

    static RationalRange around(const Rational& center, const Rational& radius) {
        return {center - radius, center + radius};
    }
    static RationalRange point(const Rational& x) { return {x, x}; }

    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    /// +1 / -1 when every member has that sign, 0 when the range touches zero.
    int certain_sign() const { return lo > 0 ? 1 : (hi < 0 ? -1 : 0); }
    Rational magnitude() const { return std::max(Rational(abs(lo)), Rational(abs(hi))); }
};

RationalRange operator+(const RationalRange& a, const RationalRange& b);
RationalRange operator-(const RationalRange& a, const RationalRange& b);
RationalRange operator*(const RationalRange& a, const RationalRange& b);

/// Range of sum_k coeff_k x^k over coefficient ranges (ascending) and x in [x_lo, x_hi], x_lo >= 0.
RationalRange evaluate_range(std::span<const RationalRange> ascending, const RationalRange& x);

/// Number of distinct positive roots shared by every polynomial whose
/// ascending coefficients lie in the given ranges, or nullopt if the ranges
/// admit polynomials with different counts (or the search budget runs out).
std::optional<int> certified_positive_root_count(std::span<const RationalRange> ascending, int max_depth = 48);

}  // namespace discrimina
