#pragma once

// Complete discrimination system: discrimination matrix, discriminant
// sequence, revised sign lists, and distinct real / positive root counts.

#include <array>
#include <span>
#include <vector>

#include "discrimina/matrix.hpp"
#include "discrimina/polynomial.hpp"

namespace discrimina {

/// Sequence over {-1, 0, +1}.
class SignList {
   public:
    SignList() = default;
    explicit SignList(std::vector<int> entries);
    static SignList of(std::span<const Rational> values);

    std::span<const int> entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }

    /// Number of nonzero entries.
    int nonzero_count() const;
    /// Sign changes between consecutive nonzero entries (zeros skipped).
    int sign_changes() const;

    friend bool operator==(const SignList&, const SignList&) = default;

   private:
    std::vector<int> entries_;
};

struct DiscriminantSequence {
    std::vector<Rational> values;  // D_1..D_n
    SignList signs;
};

struct RootCountReport {
    int mu = 0;  // nonzero entries of the revised list
    int nu = 0;  // sign changes of the revised list
    int count = 0;
    SignList sign_list;
    SignList revised;
    /// True on the positive-root path, where mu - 2 nu counts each root twice.
    bool halved = false;
    /// The sign list started with zeros (left unrevised, excluded from mu).
    bool leading_zero = false;
};

/// (2n+1) x (2n+1) matrix with rows alternating f and f' (descending
/// coefficients), each row pair shifted one column right; n+1 rows of f.
ExactMatrix discrimination_matrix(const Polynomial& f);

/// D_k = leading principal minor of order 2k of Discr(f), k = 1..n.
DiscriminantSequence discriminant_sequence(const Polynomial& f);

/// Fills every zero run bounded on both sides by nonzero entries with
/// -s, -s, s, s, -s, ... where s is the left terminator. Leading and trailing
/// zero runs are left alone.
SignList revise_sign_list(const SignList& s);

/// Number of distinct real roots, mu - 2 nu of the revised discriminant sequence.
RootCountReport count_distinct_real_roots(const Polynomial& f);

/// Number of distinct positive roots from the products d_k d_{k+1} of
/// consecutive leading principal minors of Discr(f(-x)).
/// Requires nonzero leading and constant coefficients.
RootCountReport count_distinct_positive_roots(const Polynomial& f);

struct CubicInvariants {
    Rational p, r, t;
    Rational delta1, delta2, delta3;
    /// [1, -p, -p D1, D1 D2, D2 D3, -t D3^2]: the discriminant sequence of
    /// a0 s^6 + a1 s^4 + a2 s^2 + a3 up to positive factors.
    std::array<Rational, 6> d_list;
};

/// Invariants of alpha0 x^3 + alpha1 x^2 + alpha2 x + alpha3 (alpha in
/// descending order). Requires alpha0 > 0 and alpha3 < 0.
CubicInvariants cubic_invariants(std::span<const Rational> alpha);

}  // namespace discrimina
