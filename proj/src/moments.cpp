#include "discrimina/moments.hpp"

#include <cmath>

#include "discrimina/errors.hpp"
#include "discrimina/quadrature.hpp"

namespace discrimina {

void KernelSpec::validate() const {
    if (n < 1) throw DomainError("the power n must be a positive integer");
    const std::pair<const PiecewisePoly*, const char*> factors[] = {
        {&phi1, "phi1"}, {&phi2, "phi2"}, {&psi1, "psi1"}, {&psi2, "psi2"}};
    for (const auto& [factor, name] : factors)
        if (!factor->nonnegative_and_nontrivial())
            throw PositivityError(std::string("kernel factor ") + name +
                                  " must be nonnegative on [0,1] and not identically zero");
}

KernelSpec KernelSpec::swapped() const { return {phi2, phi1, psi2, psi1, n}; }

Polynomial AlphaVector::reduced_polynomial() const { return Polynomial::from_descending(alpha); }

Polynomial AlphaVector::even_polynomial() const { return compose_square(reduced_polynomial()); }

MomentTable compute_moments(const KernelSpec& k) {
    k.validate();
    const auto n = static_cast<unsigned>(k.n);
    MomentTable m;
    m.n = k.n;
    for (unsigned i = 0; i <= n; ++i) {
        const PiecewisePoly product = pw_multiply(pw_power(k.phi1, n - i), pw_power(k.phi2, i));
        const Rational weight(binomial(n, i));
        m.a.push_back(weight * pw_integrate01(pw_multiply(k.psi1, product)));
        m.b.push_back(weight * pw_integrate01(pw_multiply(k.psi2, product)));
    }
    return m;
}

AlphaVector assemble_alpha(const MomentTable& m) {
    const auto n = static_cast<std::size_t>(m.n);
    if (m.n < 1 || m.a.size() != n + 1 || m.b.size() != n + 1) throw DomainError("moment table has inconsistent size");
    AlphaVector v;
    v.alpha.reserve(n + 2);
    v.alpha.push_back(m.b[0]);
    for (std::size_t i = 1; i <= n; ++i) v.alpha.push_back(m.b[i] - m.a[i - 1]);
    v.alpha.push_back(-m.a[n]);
    if (v.alpha.front() <= 0 || v.alpha.back() >= 0)
        throw ConsistencyError("alpha_0 > 0 and alpha_{n+1} < 0 violated; moments are not positive");
    return v;
}

Rational rationalize(double value, double radius) {
    if (!(radius > 0)) throw DomainError("rationalization radius must be positive");
    const Rational center = from_double(value), r = from_double(radius);
    return simplest_between(Rational(center - r), Rational(center + r));
}

NumericMoments numeric_moments(const NumericKernel& k, double tol) {
    if (!(tol > 0)) throw DomainError("numeric moments need a positive tolerance");
    if (k.n < 1) throw DomainError("the power n must be a positive integer");
    const int n = k.n;
    NumericMoments out;
    out.table.n = n;
    auto moment = [&](const std::function<double(double)>& psi, int i) {
        const double weight = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)).get_d();
        auto integrand = [&](double y) {
            return weight * psi(y) * std::pow(k.phi1(y), n - i) * std::pow(k.phi2(y), i);
        };
        const QuadratureResult q = integrate_adaptive(integrand, 0.0, 1.0, tol / 2);
        // Quadrature and rationalization each get half of the budget.
        const Rational value = rationalize(q.value, tol / 2);
        const Rational offset = abs(value - from_double(q.value));
        return std::pair{value, Rational(from_double(q.error) + offset)};
    };
    for (int i = 0; i <= n; ++i) {
        auto [a, ea] = moment(k.psi1, i);
        auto [b, eb] = moment(k.psi2, i);
        out.table.a.push_back(std::move(a));
        out.table.b.push_back(std::move(b));
        out.a_error.push_back(std::move(ea));
        out.b_error.push_back(std::move(eb));
    }
    return out;
}

}  // namespace discrimina
