#include "discrimina/interval.hpp"

#include <algorithm>
#include <vector>

namespace discrimina {

RationalRange operator+(const RationalRange& a, const RationalRange& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RationalRange operator-(const RationalRange& a, const RationalRange& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RationalRange operator*(const RationalRange& a, const RationalRange& b) {
    const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RationalRange evaluate_range(std::span<const RationalRange> ascending, const RationalRange& x) {
    // x >= 0, so x^k ranges over [x_lo^k, x_hi^k].
    RationalRange total = RationalRange::point(0);
    RationalRange xk = RationalRange::point(1);
    for (const auto& c : ascending) {
        total = total + c * xk;
        xk = {xk.lo * x.lo, xk.hi * x.hi};
    }
    return total;
}

namespace {

struct Cell {
    Rational lo, hi;
    int slope = 0;  // certain sign of the derivative, 0 when the cell is root-free instead
};

}  // namespace

std::optional<int> certified_positive_root_count(std::span<const RationalRange> ascending, int max_depth) {
    if (ascending.size() < 2) return std::nullopt;
    const RationalRange& lead = ascending.back();
    if (lead.certain_sign() == 0) return std::nullopt;

    std::vector<RationalRange> slope_coeffs;
    for (std::size_t k = 1; k < ascending.size(); ++k) {
        const RationalRange factor = RationalRange::point(Rational(static_cast<unsigned long>(k)));
        slope_coeffs.push_back(ascending[k] * factor);
    }

    // Cauchy bound valid for every member polynomial.
    const Rational lead_min = std::min(Rational(abs(lead.lo)), Rational(abs(lead.hi)));
    Rational worst = 0;
    for (std::size_t k = 0; k + 1 < ascending.size(); ++k) worst = std::max(worst, ascending[k].magnitude());
    const Rational bound = 1 + worst / lead_min;

    // Subdivide (0, bound] into cells that are either root-free for every
    // member or on which every member's derivative has one certain sign.
    std::vector<Cell> cells;
    struct Pending {
        Rational lo, hi;
        int depth;
    };
    std::vector<Pending> work{{Rational(0), bound, 0}};
    while (!work.empty()) {
        Pending p = work.back();
        work.pop_back();
        const RationalRange x{p.lo, p.hi};
        if (evaluate_range(ascending, x).certain_sign() != 0) {
            cells.push_back({p.lo, p.hi, 0});
            continue;
        }
        const int slope = evaluate_range(slope_coeffs, x).certain_sign();
        if (slope != 0) {
            cells.push_back({p.lo, p.hi, slope});
            continue;
        }
        if (p.depth >= max_depth) return std::nullopt;
        const Rational mid = (p.lo + p.hi) / 2;
        work.push_back({mid, p.hi, p.depth + 1});
        work.push_back({p.lo, mid, p.depth + 1});
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.lo < b.lo; });

    // Merge adjacent monotone cells of equal slope; each run holds at most one
    // root, and exactly one iff its endpoint values have certain, opposite signs.
    int count = 0;
    std::size_t i = 0;
    while (i < cells.size()) {
        if (cells[i].slope == 0) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < cells.size() && cells[j + 1].slope == cells[i].slope) ++j;
        const int left = evaluate_range(ascending, RationalRange::point(cells[i].lo)).certain_sign();
        const int right = evaluate_range(ascending, RationalRange::point(cells[j].hi)).certain_sign();
        if (left == 0 || right == 0) return std::nullopt;
        if (left != right) ++count;
        i = j + 1;
    }
    return count;
}

}  // namespace discrimina
