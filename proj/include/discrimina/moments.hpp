#pragma once

// Kernel factors, the binomially weighted moments a_{n-i,i}, b_{n-i,i}, and
// the alpha coefficients of the reduced polynomial
//   g(x) = alpha_0 x^{n+1} + alpha_1 x^n + ... + alpha_{n+1}.

#include <functional>
#include <vector>

#include "discrimina/piecewise.hpp"
#include "discrimina/polynomial.hpp"

namespace discrimina {

/// k(x, y) = phi1(x) psi1(y) + phi2(x) psi2(y), integral equation power n.
struct KernelSpec {
    PiecewisePoly phi1;
    PiecewisePoly phi2;
    PiecewisePoly psi1;
    PiecewisePoly psi2;
    int n = 1;

    /// Throws DomainError for n < 1 and PositivityError when a factor is
    /// negative somewhere on [0,1] or identically zero.
    void validate() const;
    /// (phi1, psi1) <-> (phi2, psi2).
    KernelSpec swapped() const;
};

/// a[i] = a_{n-i,i} = C(n,i) * int psi1 phi1^{n-i} phi2^i, b[i] likewise with psi2.
struct MomentTable {
    int n = 0;
    std::vector<Rational> a;
    std::vector<Rational> b;

    friend bool operator==(const MomentTable&, const MomentTable&) = default;
};

/// alpha_0 = b_{n,0}, alpha_i = b_{n-i,i} - a_{n-i+1,i-1}, alpha_{n+1} = -a_{0,n}.
struct AlphaVector {
    std::vector<Rational> alpha;

    int n() const { return static_cast<int>(alpha.size()) - 2; }
    /// g(x) = sum alpha_i x^{n+1-i}.
    Polynomial reduced_polynomial() const;
    /// f(s) = g(s^2).
    Polynomial even_polynomial() const;

    friend bool operator==(const AlphaVector&, const AlphaVector&) = default;
};

MomentTable compute_moments(const KernelSpec& k);

/// Throws ConsistencyError unless alpha_0 > 0 and alpha_{n+1} < 0.
AlphaVector assemble_alpha(const MomentTable& m);

struct NumericKernel {
    std::function<double(double)> phi1, phi2, psi1, psi2;
    int n = 1;
};

/// Moments from adaptive quadrature, rationalized. `a_error[i]` bounds
/// |a[i] - true a_{n-i,i}| (quadrature estimate plus rationalization offset).
struct NumericMoments {
    MomentTable table;
    std::vector<Rational> a_error;
    std::vector<Rational> b_error;
};

NumericMoments numeric_moments(const NumericKernel& k, double tol);

/// Simplest rational within `radius` of `value`.
Rational rationalize(double value, double radius);

}  // namespace discrimina
