#pragma once

// Exact real-root isolation (Descartes bisection), bisection refinement, and
// the Sturm-chain counting oracle.

#include <vector>

#include "discrimina/polynomial.hpp"

namespace discrimina {

/// Closed rational interval. A zero-width interval certifies an exact root.
struct Interval {
    Rational lo;
    Rational hi;

    bool exact() const { return lo == hi; }
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// 1 + max_k |a_k| / |a_lead|: every real root lies in (-B, B).
Rational cauchy_bound(const Polynomial& f);

/// Radius r > 0 such that f has no root in (x - r, x) or (x, x + r).
Rational root_free_radius(const Polynomial& f, const Rational& x);

/// Isolating intervals for the distinct roots of f in the open interval
/// (lo, hi), ascending. Every returned interval either is a single exact
/// root or has endpoints where the square-free part is nonzero and of
/// opposite sign.
std::vector<Interval> isolate_real_roots(const Polynomial& f, const Rational& lo, const Rational& hi);

/// Isolating intervals in (0, cauchy_bound(f)), one per distinct positive root.
std::vector<Interval> isolate_positive_roots(const Polynomial& f);

struct RefinedRoot {
    Rational value;     // midpoint of the enclosure
    Interval enclosure; // width <= requested tolerance
};

/// Bisects an isolating interval until its width is <= tol. Throws
/// DomainError if the interval does not bracket a sign change of the
/// square-free part.
RefinedRoot refine_root(const Polynomial& f, const Interval& iv, const Rational& tol);

/// Number of distinct real roots of f in the open interval (a, b), by
/// sign variations of the Sturm chain of the square-free part.
int sturm_count(const Polynomial& f, const Rational& a, const Rational& b);

}  // namespace discrimina
