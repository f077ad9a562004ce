#pragma once

#include <random>
#include <vector>

#include "discrimina/analyzer.hpp"
#include "discrimina/document.hpp"
#include "discrimina/polynomial.hpp"

namespace testing_support {

using discrimina::PiecewisePoly;
using discrimina::Polynomial;
using discrimina::Rational;

inline Rational q(long p, long d = 1) {
    Rational r(p, d);
    r.canonicalize();
    return r;
}

/// Integer coefficients in [-bound, bound] with nonzero leading and constant terms.
inline Polynomial random_polynomial(std::mt19937_64& rng, int degree, int bound) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::vector<Rational> c(degree + 1);
    for (auto& v : c) v = coeff(rng);
    while (c.front() == 0) c.front() = coeff(rng);
    while (c.back() == 0) c.back() = coeff(rng);
    return Polynomial(c);
}

/// The max-affine kernel family used by the worked examples.
inline discrimina::KernelSpec max_affine_kernel(const Rational& eps, int n) {
    discrimina::KernelSpec k{
        PiecewisePoly::max_affine(eps, 0, 1 + eps, -2),
        PiecewisePoly::max_affine(eps / 3, 0, (eps - 1) / 3, q(2, 3)),
        PiecewisePoly::constant(18),
        PiecewisePoly::max_affine(6, 0, -130, 272),
        n};
    return k;
}

inline discrimina::KernelSpec constant_kernel(const Rational& c, int n) {
    return {PiecewisePoly::constant(1), PiecewisePoly::constant(1), PiecewisePoly::constant(c / 2),
            PiecewisePoly::constant(c / 2), n};
}

/// Random moment table with entries in (0, 5].
inline discrimina::MomentTable random_table(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> den(1, 100);
    discrimina::MomentTable m{n, {}, {}};
    for (int i = 0; i <= n; ++i) {
        const int d1 = den(rng), d2 = den(rng);
        m.a.push_back(q(std::uniform_int_distribution<int>(1, 5 * d1)(rng), d1));
        m.b.push_back(q(std::uniform_int_distribution<int>(1, 5 * d2)(rng), d2));
    }
    return m;
}

}  // namespace testing_support
