#include "discrimina/rootfind.hpp"

#include <algorithm>

#include "discrimina/errors.hpp"

namespace discrimina {

Rational cauchy_bound(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("Cauchy bound of the zero polynomial");
    const Rational lead = abs(f.leading());
    Rational worst = 0;
    for (int k = 0; k < f.degree(); ++k) worst = std::max(worst, Rational(abs(f.coeffs()[k]) / lead));
    return 1 + worst;
}

Rational root_free_radius(const Polynomial& f, const Rational& x) {
    // Roots of q(y) = f(x + y) / y^m other than y = 0 satisfy |y| >= 1 / cauchy_bound(reversed q).
    const Polynomial q = strip_zero_roots(taylor_shift(f, x));
    if (q.degree() < 1) return Rational(1);
    const Polynomial reversed = Polynomial::from_descending(q.coeffs());
    return 1 / cauchy_bound(reversed);
}

namespace {

// Sign variations of (1+x)^d p(lo + (hi-lo)/(1+x)): an upper bound on the
// number of roots of p in (lo, hi), exact when it is 0 or 1.
int descartes_bound(const Polynomial& p, const Rational& lo, const Rational& hi) {
    const Polynomial on_unit = scale_argument(taylor_shift(p, lo), hi - lo);  // root in (0,1)
    const Polynomial reversed = Polynomial::from_descending(on_unit.coeffs());
    const Polynomial shifted = taylor_shift(reversed, Rational(1));
    int variations = 0, last = 0;
    for (const auto& c : shifted.coeffs()) {
        const int s = sign(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

// Moves an endpoint that is a root of p inwards past the root-free radius.
Rational nudge(const Polynomial& p, const Rational& x, const Rational& toward) {
    if (p(x) != 0) return x;
    Rational r = root_free_radius(p, x);
    const Rational gap = abs(toward - x) / 2;
    if (r > gap) r = gap;
    const Rational step = r / 2;
    return toward > x ? Rational(x + step) : Rational(x - step);
}

}  // namespace

std::vector<Interval> isolate_real_roots(const Polynomial& f, const Rational& lo, const Rational& hi) {
    if (f.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
    if (!(lo < hi)) throw DomainError("isolation interval must satisfy lo < hi");
    std::vector<Interval> out;
    if (f.degree() == 0) return out;
    const Polynomial p = square_free_part(f);

    std::vector<Interval> work{{nudge(p, lo, hi), nudge(p, hi, lo)}};
    // Roots exactly at the nudged region are impossible by construction.
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        const int v = descartes_bound(p, iv.lo, iv.hi);
        if (v == 0) continue;
        if (v == 1) {
            out.push_back(iv);
            continue;
        }
        const Rational mid = iv.midpoint();
        if (p(mid) == 0) {
            out.push_back({mid, mid});
            const Rational r = std::min(Rational(root_free_radius(p, mid) / 2), Rational(iv.width() / 4));
            work.push_back({iv.lo, Rational(mid - r)});
            work.push_back({Rational(mid + r), iv.hi});
        } else {
            work.push_back({iv.lo, mid});
            work.push_back({mid, iv.hi});
        }
    }
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return out;
}

std::vector<Interval> isolate_positive_roots(const Polynomial& f) {
    if (f.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
    if (f.degree() < 1) return {};
    return isolate_real_roots(f, Rational(0), cauchy_bound(square_free_part(f)));
}

RefinedRoot refine_root(const Polynomial& f, const Interval& iv, const Rational& tol) {
    if (tol <= 0) throw DomainError("refinement tolerance must be positive");
    if (iv.exact()) return {iv.lo, iv};
    const Polynomial p = square_free_part(f);
    Rational lo = iv.lo, hi = iv.hi;
    int s_lo = sign(p(lo));
    const int s_hi = sign(p(hi));
    if (s_lo == 0) return {lo, {lo, lo}};
    if (s_hi == 0) return {hi, {hi, hi}};
    if (s_lo == s_hi) throw DomainError("interval does not bracket a sign change of the square-free part");
    while (hi - lo > tol) {
        const Rational mid = (lo + hi) / 2;
        const int s = sign(p(mid));
        if (s == 0) return {mid, {mid, mid}};
        if (s == s_lo)
            lo = mid;
        else
            hi = mid;
    }
    Interval enclosure{lo, hi};
    return {enclosure.midpoint(), enclosure};
}

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain{p, derivative(p)};
    while (!chain.back().is_zero()) {
        Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

int variations_at(const std::vector<Polynomial>& chain, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& q : chain) {
        const int s = sign(q(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int sturm_count(const Polynomial& f, const Rational& a, const Rational& b) {
    if (!(a < b)) throw DomainError("Sturm count needs a < b");
    if (f.is_zero()) throw DomainError("Sturm count of the zero polynomial");
    if (f.degree() == 0) return 0;
    const Polynomial p = square_free_part(f);
    const Rational lo = nudge(p, a, b);
    const Rational hi = nudge(p, b, a);
    const auto chain = sturm_chain(p);
    return variations_at(chain, lo) - variations_at(chain, hi);
}

}  // namespace discrimina
