#include "discrimina/piecewise.hpp"

#include <algorithm>

#include "discrimina/errors.hpp"
#include "discrimina/rootfind.hpp"

namespace discrimina {

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() < 2 || breakpoints_.front() != 0 || breakpoints_.back() != 1)
        throw DomainError("piecewise breakpoints must start at 0 and end at 1");
    for (std::size_t k = 1; k < breakpoints_.size(); ++k)
        if (!(breakpoints_[k - 1] < breakpoints_[k])) throw DomainError("piecewise breakpoints must ascend strictly");
    if (pieces_.size() + 1 != breakpoints_.size()) throw DomainError("need exactly one piece per breakpoint interval");
}

PiecewisePoly PiecewisePoly::constant(const Rational& c) { return polynomial(Polynomial::constant(c)); }

PiecewisePoly PiecewisePoly::polynomial(Polynomial p) { return PiecewisePoly({Rational(0), Rational(1)}, {std::move(p)}); }

PiecewisePoly PiecewisePoly::max_affine(const Rational& c0, const Rational& c1, const Rational& d0, const Rational& d1) {
    const Polynomial first{c0, c1}, second{d0, d1};
    const Polynomial diff = first - second;
    auto larger_at = [&](const Rational& x) { return diff(x) >= 0 ? first : second; };
    if (c1 != d1) {
        const Rational crossing = (d0 - c0) / (c1 - d1);
        if (crossing > 0 && crossing < 1)
            return PiecewisePoly({Rational(0), crossing, Rational(1)},
                                 {larger_at(crossing / 2), larger_at((crossing + 1) / 2)});
    }
    return polynomial(larger_at(Rational(1, 2)));
}

std::size_t PiecewisePoly::piece_index(const Rational& x) const {
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
    std::size_t idx = it == breakpoints_.begin() ? 0 : static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
    return std::min(idx, pieces_.size() - 1);
}

Rational PiecewisePoly::operator()(const Rational& x) const { return eval(pieces_[piece_index(x)], x); }

double PiecewisePoly::evaluate(double x) const {
    std::size_t idx = 0;
    while (idx + 1 < pieces_.size() && x >= breakpoints_[idx + 1].get_d()) ++idx;
    double acc = 0;
    auto c = pieces_[idx].coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

PiecewisePoly PiecewisePoly::refined(std::span<const Rational> extra) const {
    std::vector<Rational> grid(breakpoints_.begin(), breakpoints_.end());
    for (const auto& x : extra)
        if (x > 0 && x < 1) grid.push_back(x);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<Polynomial> pieces;
    pieces.reserve(grid.size() - 1);
    for (std::size_t k = 0; k + 1 < grid.size(); ++k) pieces.push_back(pieces_[piece_index((grid[k] + grid[k + 1]) / 2)]);
    return PiecewisePoly(std::move(grid), std::move(pieces));
}

bool PiecewisePoly::nonnegative_and_nontrivial() const {
    bool somewhere_positive = false;
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
        const Polynomial& p = pieces_[k];
        if (p.is_zero()) continue;
        const Rational &lo = breakpoints_[k], &hi = breakpoints_[k + 1];
        // The sign is constant between consecutive distinct roots; probe one
        // point in each gap plus both endpoints.
        std::vector<Rational> probes{lo, hi};
        Rational previous = lo;
        for (const auto& iv : isolate_real_roots(p, lo, hi)) {
            probes.push_back((previous + iv.lo) / 2);
            previous = iv.hi;
        }
        probes.push_back((previous + hi) / 2);
        for (const auto& x : probes) {
            const int s = sign(p(x));
            if (s < 0) return false;
            if (s > 0) somewhere_positive = true;
        }
    }
    return somewhere_positive;
}

namespace {

template <class Op>
PiecewisePoly combine(const PiecewisePoly& f, const PiecewisePoly& g, Op op) {
    std::vector<Rational> grid(f.breakpoints().begin(), f.breakpoints().end());
    grid.insert(grid.end(), g.breakpoints().begin(), g.breakpoints().end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    const PiecewisePoly fr = f.refined(grid), gr = g.refined(grid);
    std::vector<Polynomial> pieces;
    pieces.reserve(fr.piece_count());
    for (std::size_t k = 0; k < fr.piece_count(); ++k) pieces.push_back(op(fr.pieces()[k], gr.pieces()[k]));
    return PiecewisePoly(std::move(grid), std::move(pieces));
}

}  // namespace

PiecewisePoly pw_multiply(const PiecewisePoly& f, const PiecewisePoly& g) {
    return combine(f, g, [](const Polynomial& a, const Polynomial& b) { return a * b; });
}

PiecewisePoly pw_add(const PiecewisePoly& f, const PiecewisePoly& g) {
    return combine(f, g, [](const Polynomial& a, const Polynomial& b) { return a + b; });
}

PiecewisePoly pw_scale(const PiecewisePoly& f, const Rational& c) {
    std::vector<Polynomial> pieces(f.pieces().begin(), f.pieces().end());
    for (auto& p : pieces) p *= c;
    return PiecewisePoly(std::vector<Rational>(f.breakpoints().begin(), f.breakpoints().end()), std::move(pieces));
}

PiecewisePoly pw_power(const PiecewisePoly& f, unsigned exponent) {
    std::vector<Polynomial> pieces;
    pieces.reserve(f.piece_count());
    for (const auto& p : f.pieces()) pieces.push_back(power(p, exponent));
    return PiecewisePoly(std::vector<Rational>(f.breakpoints().begin(), f.breakpoints().end()), std::move(pieces));
}

Rational pw_integrate01(const PiecewisePoly& f) {
    Rational total = 0;
    for (std::size_t k = 0; k < f.piece_count(); ++k) {
        const auto c = f.pieces()[k].coeffs();
        std::vector<Rational> anti(c.size() + 1);
        for (std::size_t j = 0; j < c.size(); ++j) anti[j + 1] = c[j] / static_cast<unsigned long>(j + 1);
        const Polynomial antiderivative(std::move(anti));
        total += antiderivative(f.breakpoints()[k + 1]) - antiderivative(f.breakpoints()[k]);
    }
    return total;
}

}  // namespace discrimina
