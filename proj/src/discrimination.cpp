#include "discrimina/discrimination.hpp"

#include <algorithm>

#include "discrimina/errors.hpp"

namespace discrimina {

SignList::SignList(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < -1 || e > 1) throw DomainError("sign list entries must lie in {-1, 0, 1}");
}

SignList SignList::of(std::span<const Rational> values) {
    std::vector<int> s;
    s.reserve(values.size());
    for (const auto& v : values) s.push_back(sign(v));
    return SignList(std::move(s));
}

int SignList::nonzero_count() const {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](int e) { return e != 0; }));
}

int SignList::sign_changes() const {
    int changes = 0, last = 0;
    for (int e : entries_) {
        if (e == 0) continue;
        if (last != 0 && e != last) ++changes;
        last = e;
    }
    return changes;
}

ExactMatrix discrimination_matrix(const Polynomial& f) {
    if (f.degree() < 1) throw DomainError("discrimination matrix needs a polynomial of degree >= 1");
    const auto n = static_cast<std::size_t>(f.degree());
    const std::vector<Rational> row_f = f.descending();
    const std::vector<Rational> row_df = derivative(f).descending();
    const std::size_t size = 2 * n + 1;
    ExactMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r) {
        const std::size_t shift = r / 2;
        if (r % 2 == 0) {
            for (std::size_t j = 0; j < row_f.size(); ++j) m(r, shift + j) = row_f[j];
        } else {
            for (std::size_t j = 0; j < row_df.size(); ++j) m(r, shift + 1 + j) = row_df[j];
        }
    }
    return m;
}

DiscriminantSequence discriminant_sequence(const Polynomial& f) {
    const auto minors = principal_minor_sequence(discrimination_matrix(f));
    DiscriminantSequence seq;
    for (std::size_t k = 1; 2 * k <= minors.size(); ++k) seq.values.push_back(minors[2 * k - 1]);
    seq.signs = SignList::of(seq.values);
    return seq;
}

SignList revise_sign_list(const SignList& s) {
    std::vector<int> e(s.entries().begin(), s.entries().end());
    std::size_t left = e.size();  // index of the last nonzero seen
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (left != e.size() && k > left + 1) {
            const int terminator = e[left];
            for (std::size_t r = 1; left + r < k; ++r) e[left + r] = ((r + 1) / 2) % 2 == 0 ? terminator : -terminator;
        }
        left = k;
    }
    return SignList(std::move(e));
}

namespace {

RootCountReport count_from_signs(SignList signs) {
    RootCountReport report;
    report.revised = revise_sign_list(signs);
    report.leading_zero = signs.size() > 0 && signs[0] == 0;
    report.sign_list = std::move(signs);
    report.mu = report.revised.nonzero_count();
    report.nu = report.revised.sign_changes();
    report.count = report.mu - 2 * report.nu;
    return report;
}

}  // namespace

RootCountReport count_distinct_real_roots(const Polynomial& f) {
    if (f.degree() < 1) throw DomainError("root counting needs a polynomial of degree >= 1");
    return count_from_signs(discriminant_sequence(f).signs);
}

RootCountReport count_distinct_positive_roots(const Polynomial& f) {
    if (f.degree() < 1) throw DomainError("root counting needs a polynomial of degree >= 1");
    if (f.coeff(0) == 0) throw DomainError("positive-root count needs a nonzero constant term; strip zero roots first");
    const auto d = principal_minor_sequence(discrimination_matrix(reflect(f)));
    std::vector<int> products;
    products.reserve(d.size() - 1);
    for (std::size_t k = 0; k + 1 < d.size(); ++k) products.push_back(sign(d[k]) * sign(d[k + 1]));
    RootCountReport report = count_from_signs(SignList(std::move(products)));
    // The 2n products carry the sign pattern of the discriminant sequence of
    // f(s^2), whose real roots come in +-pairs.
    if (report.count < 0 || report.count % 2 != 0)
        throw ConsistencyError("positive-root sign list yields an odd or negative mu - 2 nu");
    report.count /= 2;
    report.halved = true;
    return report;
}

CubicInvariants cubic_invariants(std::span<const Rational> alpha) {
    if (alpha.size() != 4) throw DomainError("cubic invariants need exactly four coefficients");
    if (alpha[0] <= 0) throw DomainError("cubic invariants need alpha0 > 0");
    CubicInvariants c;
    c.p = alpha[1] / alpha[0];
    c.r = alpha[2] / alpha[0];
    c.t = alpha[3] / alpha[0];
    if (c.t >= 0) throw DomainError("cubic invariants need t = alpha3/alpha0 < 0");
    const Rational &p = c.p, &r = c.r, &t = c.t;
    c.delta1 = p * p - 3 * r;
    c.delta2 = r * p * p + 3 * t * p - 4 * r * r;
    c.delta3 = -4 * r * r * r + 18 * r * t * p + p * p * r * r - 4 * p * p * p * t - 27 * t * t;
    c.d_list = {Rational(1),         Rational(-p),
                Rational(-p * c.delta1), Rational(c.delta1 * c.delta2),
                Rational(c.delta2 * c.delta3), Rational(-t * c.delta3 * c.delta3)};
    return c;
}

}  // namespace discrimina
