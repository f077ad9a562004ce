#pragma once

// Classification of positive solutions of
//   phi(x) = int_0^1 k(x, y) phi(y)^n dy,  k = phi1(x) psi1(y) + phi2(x) psi2(y).
// Every positive solution has the form lambda1 phi1 + lambda2 phi2; the
// pairs (lambda1, lambda2) correspond to the positive roots of the reduced
// polynomial g(x) = sum alpha_i x^{n+1-i} through x = lambda1 / lambda2.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "discrimina/discrimination.hpp"
#include "discrimina/moments.hpp"
#include "discrimina/rootfind.hpp"

namespace discrimina {

enum class Classification { NoPositiveSolutions, InfiniteFamily, FiniteCount };
std::string_view to_string(Classification c);

enum class Mode { Exact, Numeric };
std::string_view to_string(Mode m);

struct LinearCaseResult {
    Classification classification = Classification::NoPositiveSolutions;
    Rational a10_minus_1;
    Rational determinant;  // (a_{1,0} - 1)(b_{0,1} - 1) - a_{0,1} b_{1,0}
    /// Direction of the ray c (lambda1 phi1 + lambda2 phi2), normalized to lambda1 + lambda2 = 1.
    std::optional<std::array<Rational, 2>> direction;
};

/// n = 1: infinitely many positive solutions iff a_{1,0} < 1 and the determinant vanishes.
LinearCaseResult analyze_n1(const MomentTable& m);

struct SolutionCount {
    int m = 0;
    RootCountReport even_path;     // distinct real roots of f(s) = g(s^2), m = count / 2
    RootCountReport reduced_path;  // distinct positive roots of g directly
};

/// n >= 2. Both paths are computed and must agree; 1 <= m <= n + 1, and
/// m <= n for odd n > 2. Throws ConsistencyError otherwise.
SolutionCount count_positive_solutions(const AlphaVector& alpha, int n);

struct CubicClassification {
    int m = 0;
    CubicInvariants invariants;
    bool three = false;  // p < 0, D1 > 0, D2 > 0, D3 > 0
    bool two = false;    // p < 0, D1 > 0, D2 > 0, D3 = 0
    bool one = false;    // p >= 0 or D1 <= 0 or D2 <= 0 or D3 < 0
};

/// n = 2 closed-form conditions; cross-checked against count_positive_solutions.
CubicClassification classify_cubic(const AlphaVector& alpha);

struct SolutionCandidate {
    Rational lambda1;
    Rational lambda2;
    Rational lambda1_width;  // width of the enclosure lambda1 is the midpoint of
    Rational lambda2_width;
    Interval root;           // enclosure of the root x = lambda1 / lambda2 of g
    Rational residual = 0;   // max-norm defect on the verification grid
    bool verified = false;
};

/// One candidate per distinct positive root of g, ascending in x. Each lambda
/// is the midpoint of a rigorous enclosure of width <= tol.
std::vector<SolutionCandidate> construct_solutions(const MomentTable& moments, const AlphaVector& alpha,
                                                   const Rational& tol);
std::vector<SolutionCandidate> construct_solutions(const KernelSpec& k, const Rational& tol);

/// max_j |u(x_j) - int_0^1 k(x_j, y) u(y)^n dy| with u = lambda1 phi1 + lambda2 phi2
/// on the uniform grid x_j = j / (grid_points - 1). Exact.
Rational verify_solution(const KernelSpec& k, const Rational& lambda1, const Rational& lambda2, int grid_points);

struct NegativeCount {
    bool infinite = false;
    int count = 0;
};

/// n even: none; n odd: phi -> -phi maps positive solutions onto negative ones.
NegativeCount count_negative_solutions(const AlphaVector& alpha, int n);
NegativeCount count_negative_solutions(const MomentTable& m);

struct OracleCheck {
    int sturm_positive = 0;  // Sturm count of g on (0, B)
    int sturm_even = 0;      // Sturm count of g(s^2) on (-B', B')
    int isolated = 0;        // Descartes isolation intervals of g
};

struct AnalyzeOptions {
    bool solve = false;
    bool oracle = false;
    Rational tol = Rational(1, 1000000000000);
    int grid_points = 1001;
};

struct AnalysisReport {
    int n = 0;
    Mode mode = Mode::Exact;
    Classification classification = Classification::NoPositiveSolutions;
    std::optional<int> m;
    MomentTable moments;
    AlphaVector alpha;
    std::optional<LinearCaseResult> linear;
    std::optional<SolutionCount> counts;
    std::optional<CubicClassification> cubic;
    std::vector<SolutionCandidate> solutions;
    NegativeCount negative;
    bool certified = true;
    std::vector<std::string> notes;
    // Numeric mode only: error bounds of the rationalized moments.
    std::vector<Rational> a_error;
    std::vector<Rational> b_error;
    std::optional<OracleCheck> oracle;
};

/// Exact pipeline: moments, alpha, classification, optional construction.
AnalysisReport analyze(const KernelSpec& k, const AnalyzeOptions& options = {});

/// Quadrature-based pipeline. Counts are certified only when they hold for
/// every moment table inside the error bounds.
AnalysisReport analyze_numeric(const NumericKernel& k, double quadrature_tol, const AnalyzeOptions& options = {});

}  // namespace discrimina
