#include "discrimina/analyzer.hpp"

#include <cmath>

#include "discrimina/errors.hpp"
#include "discrimina/interval.hpp"
#include "discrimina/quadrature.hpp"

namespace discrimina {

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::NoPositiveSolutions:
            return "NoPositiveSolutions";
        case Classification::InfiniteFamily:
            return "InfiniteFamily";
        case Classification::FiniteCount:
            return "FiniteCount";
    }
    return "?";
}

std::string_view to_string(Mode m) { return m == Mode::Exact ? "exact" : "numeric"; }

LinearCaseResult analyze_n1(const MomentTable& m) {
    if (m.n != 1 || m.a.size() != 2 || m.b.size() != 2) throw DomainError("analyze_n1 needs a moment table with n = 1");
    const Rational &a10 = m.a[0], &a01 = m.a[1], &b10 = m.b[0], &b01 = m.b[1];
    LinearCaseResult r;
    r.a10_minus_1 = a10 - 1;
    r.determinant = r.a10_minus_1 * (b01 - 1) - a01 * b10;
    if (r.a10_minus_1 >= 0 || r.determinant != 0) return r;

    // Null vector of [[a10 - 1, a01], [b10, b01 - 1]].
    Rational l1 = a01, l2 = 1 - a10;
    if (l1 == 0 && l2 == 0) {
        l1 = 1 - b01;
        l2 = b10;
    }
    if (l1 < 0 || l2 < 0 || (l1 == 0 && l2 == 0)) return r;
    const Rational total = l1 + l2;
    r.classification = Classification::InfiniteFamily;
    r.direction = std::array<Rational, 2>{Rational(l1 / total), Rational(l2 / total)};
    return r;
}

SolutionCount count_positive_solutions(const AlphaVector& alpha, int n) {
    if (n < 2) throw DomainError("count_positive_solutions needs n >= 2");
    if (alpha.n() != n) throw DomainError("alpha vector length does not match n + 2");
    if (alpha.alpha.front() <= 0 || alpha.alpha.back() >= 0)
        throw DomainError("alpha vector needs alpha_0 > 0 and alpha_{n+1} < 0");

    SolutionCount out;
    out.even_path = count_distinct_real_roots(alpha.even_polynomial());
    out.reduced_path = count_distinct_positive_roots(alpha.reduced_polynomial());
    if (out.even_path.count % 2 != 0) throw ConsistencyError("even polynomial has an odd number of real roots");
    out.m = out.even_path.count / 2;
    if (out.m != out.reduced_path.count)
        throw ConsistencyError("the even-polynomial and reduced-polynomial counts disagree (" +
                               std::to_string(out.m) + " vs " + std::to_string(out.reduced_path.count) + ")");
    const int upper = (n % 2 == 1 && n > 2) ? n : n + 1;
    if (out.m < 1 || out.m > upper)
        throw ConsistencyError("solution count " + std::to_string(out.m) + " outside [1, " + std::to_string(upper) + "]");
    return out;
}

CubicClassification classify_cubic(const AlphaVector& alpha) {
    if (alpha.alpha.size() != 4) throw DomainError("cubic classification needs n = 2");
    CubicClassification c;
    c.invariants = cubic_invariants(alpha.alpha);
    const auto& inv = c.invariants;
    const bool head = inv.p < 0 && inv.delta1 > 0 && inv.delta2 > 0;
    c.three = head && inv.delta3 > 0;
    c.two = head && inv.delta3 == 0;
    c.one = inv.p >= 0 || inv.delta1 <= 0 || inv.delta2 <= 0 || inv.delta3 < 0;
    if (int(c.three) + int(c.two) + int(c.one) != 1) throw ConsistencyError("cubic conditions are not exclusive");
    c.m = c.three ? 3 : (c.two ? 2 : 1);
    const int general = count_positive_solutions(alpha, 2).m;
    if (general != c.m)
        throw ConsistencyError("cubic conditions give " + std::to_string(c.m) + " but the discriminant sequence gives " +
                               std::to_string(general));
    return c;
}

namespace {

// Exact k-th root of a nonnegative rational, if it is a perfect power.
std::optional<Rational> exact_root(const Rational& p, unsigned long k) {
    Integer num, den;
    if (mpz_root(num.get_mpz_t(), p.get_num_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(den.get_mpz_t(), p.get_den_mpz_t(), k) == 0) return std::nullopt;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// [lo, hi] containing p^(1/k), width <= width, by bisection on y^k - p over y >= 0.
Interval root_enclosure(const Rational& p, unsigned long k, const Rational& width) {
    if (p < 0) throw ConsistencyError("negative radicand while constructing a solution");
    if (auto r = exact_root(p, k)) return {*r, *r};
    Rational lo = 0, hi = p > 1 ? p : Rational(1);
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        if (power(mid, k) <= p)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

Rational homogeneous_value(std::span<const Rational> a, const Rational& x) {
    // sum_i a[i] x^{n-i}: a[0] is the x^n coefficient.
    return eval(Polynomial::from_descending(a), x);
}

}  // namespace

std::vector<SolutionCandidate> construct_solutions(const MomentTable& moments, const AlphaVector& alpha,
                                                   const Rational& tol) {
    const int n = moments.n;
    if (n < 2) throw DomainError("construct_solutions needs n >= 2");
    if (tol <= 0) throw DomainError("construction tolerance must be positive");
    for (const auto& a : moments.a)
        if (a < 0) throw DomainError("moments must be nonnegative");
    const auto k = static_cast<unsigned long>(n - 1);
    const Polynomial g = alpha.reduced_polynomial();

    std::vector<SolutionCandidate> out;
    for (const Interval& iv : isolate_positive_roots(g)) {
        Rational root_tol = tol;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 64) throw ConvergenceError("could not enclose lambda within the requested tolerance");
            const Interval x = refine_root(g, iv, root_tol).enclosure;
            // x / A(x) with A increasing on x >= 0 (nonnegative coefficients).
            const Rational a_hi = homogeneous_value(moments.a, x.hi);
            const Rational a_lo = homogeneous_value(moments.a, x.lo);
            if (a_lo <= 0) {
                root_tol /= 16;
                continue;
            }
            const Interval c_lo = root_enclosure(Rational(x.lo / a_hi), k, Rational(tol / 8));
            const Interval c_hi = root_enclosure(Rational(x.hi / a_lo), k, Rational(tol / 8));
            const Interval lambda2{c_lo.lo, c_hi.hi};
            const Interval lambda1{Rational(c_lo.lo * x.lo), Rational(c_hi.hi * x.hi)};
            if (lambda1.width() <= tol && lambda2.width() <= tol) {
                SolutionCandidate s;
                s.lambda1 = lambda1.midpoint();
                s.lambda2 = lambda2.midpoint();
                s.lambda1_width = lambda1.width();
                s.lambda2_width = lambda2.width();
                s.root = x;
                out.push_back(std::move(s));
                break;
            }
            root_tol /= 16;
        }
    }
    return out;
}

std::vector<SolutionCandidate> construct_solutions(const KernelSpec& k, const Rational& tol) {
    const MomentTable m = compute_moments(k);
    return construct_solutions(m, assemble_alpha(m), tol);
}

Rational verify_solution(const KernelSpec& k, const Rational& lambda1, const Rational& lambda2, int grid_points) {
    if (grid_points < 2) throw DomainError("verification grid needs at least two points");
    const PiecewisePoly u = pw_add(pw_scale(k.phi1, lambda1), pw_scale(k.phi2, lambda2));
    const PiecewisePoly un = pw_power(u, static_cast<unsigned>(k.n));
    const Rational i1 = pw_integrate01(pw_multiply(k.psi1, un));
    const Rational i2 = pw_integrate01(pw_multiply(k.psi2, un));
    Rational worst = 0;
    for (int j = 0; j < grid_points; ++j) {
        Rational x(j, grid_points - 1);
        x.canonicalize();
        const Rational defect = abs(u(x) - k.phi1(x) * i1 - k.phi2(x) * i2);
        if (defect > worst) worst = defect;
    }
    return worst;
}

NegativeCount count_negative_solutions(const AlphaVector& alpha, int n) {
    if (n < 2) throw DomainError("the alpha-based negative count needs n >= 2; use the moment table for n = 1");
    if (n % 2 == 0) return {};
    return {false, count_positive_solutions(alpha, n).m};
}

NegativeCount count_negative_solutions(const MomentTable& m) {
    if (m.n == 1) return {analyze_n1(m).classification == Classification::InfiniteFamily, 0};
    return count_negative_solutions(assemble_alpha(m), m.n);
}

namespace {

OracleCheck run_oracle(const AlphaVector& alpha, int m) {
    const Polynomial g = alpha.reduced_polynomial();
    const Polynomial f = alpha.even_polynomial();
    OracleCheck check;
    check.sturm_positive = sturm_count(g, Rational(0), cauchy_bound(g));
    const Rational bf = cauchy_bound(f);
    check.sturm_even = sturm_count(f, Rational(-bf), bf);
    check.isolated = static_cast<int>(isolate_positive_roots(g).size());
    if (check.sturm_positive != m || check.sturm_even != 2 * m || check.isolated != m)
        throw ConsistencyError("oracle disagreement: discrimination count " + std::to_string(m) + ", Sturm " +
                               std::to_string(check.sturm_positive) + ", Sturm on g(s^2) " +
                               std::to_string(check.sturm_even) + ", isolation " + std::to_string(check.isolated));
    return check;
}

void classify_finite(AnalysisReport& report) {
    report.counts = count_positive_solutions(report.alpha, report.n);
    report.m = report.counts->m;
    report.classification = Classification::FiniteCount;
    if (report.n == 2) report.cubic = classify_cubic(report.alpha);
    report.negative = count_negative_solutions(report.alpha, report.n);
}

}  // namespace

AnalysisReport analyze(const KernelSpec& k, const AnalyzeOptions& options) {
    AnalysisReport report;
    report.n = k.n;
    report.mode = Mode::Exact;
    report.moments = compute_moments(k);
    report.alpha = assemble_alpha(report.moments);

    if (k.n == 1) {
        report.linear = analyze_n1(report.moments);
        report.classification = report.linear->classification;
        report.negative = {report.classification == Classification::InfiniteFamily, 0};
        if (options.solve && report.linear->direction) {
            SolutionCandidate s;
            s.lambda1 = (*report.linear->direction)[0];
            s.lambda2 = (*report.linear->direction)[1];
            s.residual = verify_solution(k, s.lambda1, s.lambda2, options.grid_points);
            s.verified = true;
            report.solutions.push_back(std::move(s));
        }
        return report;
    }

    classify_finite(report);
    if (options.oracle) report.oracle = run_oracle(report.alpha, *report.m);
    if (options.solve) {
        report.solutions = construct_solutions(report.moments, report.alpha, options.tol);
        if (static_cast<int>(report.solutions.size()) != *report.m)
            throw ConsistencyError("number of constructed solutions differs from the count");
        for (auto& s : report.solutions) {
            s.residual = verify_solution(k, s.lambda1, s.lambda2, options.grid_points);
            s.verified = true;
        }
    }
    return report;
}

namespace {

// Numeric defect of a candidate when the factors are only black boxes.
Rational numeric_residual(const NumericKernel& k, const SolutionCandidate& s, int grid_points, double tol) {
    const double l1 = s.lambda1.get_d(), l2 = s.lambda2.get_d();
    auto u = [&](double y) { return l1 * k.phi1(y) + l2 * k.phi2(y); };
    const double i1 = integrate_adaptive([&](double y) { return k.psi1(y) * std::pow(u(y), k.n); }, 0, 1, tol).value;
    const double i2 = integrate_adaptive([&](double y) { return k.psi2(y) * std::pow(u(y), k.n); }, 0, 1, tol).value;
    double worst = 0;
    for (int j = 0; j < grid_points; ++j) {
        const double x = static_cast<double>(j) / (grid_points - 1);
        worst = std::max(worst, std::abs(u(x) - k.phi1(x) * i1 - k.phi2(x) * i2));
    }
    return from_double(worst);
}

}  // namespace

AnalysisReport analyze_numeric(const NumericKernel& k, double quadrature_tol, const AnalyzeOptions& options) {
    AnalysisReport report;
    report.n = k.n;
    report.mode = Mode::Numeric;
    NumericMoments nm = numeric_moments(k, quadrature_tol);
    report.moments = nm.table;
    report.a_error = nm.a_error;
    report.b_error = nm.b_error;
    report.alpha = assemble_alpha(report.moments);

    const auto& a = report.moments.a;
    const auto& b = report.moments.b;
    const auto& ea = report.a_error;
    const auto& eb = report.b_error;

    if (k.n == 1) {
        report.linear = analyze_n1(report.moments);
        report.classification = report.linear->classification;
        const RationalRange a10 = RationalRange::around(a[0], ea[0]), a01 = RationalRange::around(a[1], ea[1]);
        const RationalRange b10 = RationalRange::around(b[0], eb[0]), b01 = RationalRange::around(b[1], eb[1]);
        const RationalRange one = RationalRange::point(1);
        const RationalRange det = (a10 - one) * (b01 - one) - a01 * b10;
        const bool surely_none = (a10 - one).certain_sign() > 0 || det.certain_sign() != 0;
        report.certified = surely_none && report.classification == Classification::NoPositiveSolutions;
        report.notes.push_back("determinant residual " + to_decimal(abs(report.linear->determinant), 6) +
                               ", uncertainty band [" + to_decimal(det.lo, 6) + ", " + to_decimal(det.hi, 6) + "]");
        report.negative = {report.classification == Classification::InfiniteFamily, 0};
        return report;
    }

    classify_finite(report);
    // Coefficient ranges of g, ascending: coefficient of x^k is alpha_{n+1-k}.
    const auto n = static_cast<std::size_t>(k.n);
    std::vector<RationalRange> alpha_ranges(n + 2);
    alpha_ranges[0] = RationalRange::around(report.alpha.alpha[0], eb[0]);
    for (std::size_t i = 1; i <= n; ++i)
        alpha_ranges[i] = RationalRange::around(report.alpha.alpha[i], Rational(eb[i] + ea[i - 1]));
    alpha_ranges[n + 1] = RationalRange::around(report.alpha.alpha[n + 1], ea[n]);
    std::vector<RationalRange> ascending(alpha_ranges.rbegin(), alpha_ranges.rend());
    const auto certified = certified_positive_root_count(ascending);
    report.certified = certified && *certified == *report.m;
    if (!report.certified) {
        if (k.n == 2)
            report.notes.push_back("UNCERTIFIED: count is 2 (boundary) or one of {1, 3} within the moment error band");
        else
            report.notes.push_back("UNCERTIFIED: the moment error band admits a different number of positive roots");
    }
    if (options.oracle) report.oracle = run_oracle(report.alpha, *report.m);
    if (options.solve) {
        report.solutions = construct_solutions(report.moments, report.alpha, options.tol);
        for (auto& s : report.solutions) {
            s.residual = numeric_residual(k, s, options.grid_points, quadrature_tol);
            s.verified = true;
        }
    }
    return report;
}

}  // namespace discrimina
