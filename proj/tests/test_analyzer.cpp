#include <doctest.h>

#include <random>
#include <set>

#include "discrimina/analyzer.hpp"
#include "discrimina/errors.hpp"
#include "support.hpp"

using namespace discrimina;
using testing_support::constant_kernel;
using testing_support::max_affine_kernel;
using testing_support::q;
using testing_support::random_table;

TEST_CASE("first-order classification") {
    const auto unit = analyze_n1(MomentTable{1, {q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}});
    CHECK(unit.classification == Classification::InfiniteFamily);
    REQUIRE(unit.direction);
    CHECK((*unit.direction)[0] == q(1, 2));
    CHECK((*unit.direction)[1] == q(1, 2));

    for (const Rational eps : {Rational(0), Rational(1), Rational(2)}) {
        const auto m = compute_moments(max_affine_kernel(eps, 1));
        const auto r = analyze_n1(m);
        CHECK(r.classification == Classification::NoPositiveSolutions);
        CHECK(r.a10_minus_1 == 18 * eps + q(7, 2));
    }

    const auto linear = analyze_n1(MomentTable{1, {q(2, 5), q(3, 10)}, {q(2, 5), q(3, 10)}});
    CHECK(linear.determinant == q(3, 10));
    CHECK(linear.classification == Classification::NoPositiveSolutions);
}

TEST_CASE("unit kernel family is a genuine solution") {
    const auto report = analyze(constant_kernel(1, 1), {.solve = true});
    CHECK(report.classification == Classification::InfiniteFamily);
    REQUIRE(report.solutions.size() == 1);
    CHECK(report.solutions[0].residual == 0);
    CHECK(report.negative.infinite);
}

TEST_CASE("count_positive_solutions examples") {
    const auto two = count_positive_solutions(AlphaVector{{q(1379, 4), q(2549, 12), q(-170, 9), q(-22073, 540), q(-97, 12)}}, 3);
    CHECK(two.m == 1);
    const auto fifth = count_positive_solutions(
        AlphaVector{{q(37, 20), q(-4691, 1500), q(773, 1125), q(8407, 13500), q(-263, 1500)}}, 3);
    CHECK(fifth.m == 3);
    CHECK(fifth.even_path.revised == SignList({1, 1, 1, -1, -1, -1, -1, -1}));
    const AlphaVector constant{{1, 1, -1, -1}};
    CHECK(constant.reduced_polynomial() == Polynomial{-1, 1} * Polynomial{1, 1} * Polynomial{1, 1});
    CHECK(count_positive_solutions(constant, 2).m == 1);
    CHECK_THROWS_AS(count_positive_solutions(AlphaVector{{1, 1, 1, 1}}, 2), DomainError);
}

TEST_CASE("cubic classification") {
    const auto ex2 = classify_cubic(AlphaVector{{1, -3, 2, q(-1, 3)}});
    CHECK(ex2.three);
    CHECK(ex2.m == 3);
    const auto constant = classify_cubic(AlphaVector{{1, 1, -1, -1}});
    CHECK(constant.one);
    CHECK(constant.m == 1);
    // (x - 1)^2 (x - 3): a double root at 1 and a simple root at 3.
    const auto boundary = classify_cubic(AlphaVector{{1, -5, 7, -3}});
    CHECK(boundary.two);
    CHECK(boundary.invariants.delta3 == 0);
    CHECK(boundary.m == 2);
}

TEST_CASE("constant kernel closed form") {
    const auto s = construct_solutions(constant_kernel(2, 2), q(1, 1000000000000));
    REQUIRE(s.size() == 1);
    CHECK(s[0].lambda1 == q(1, 4));
    CHECK(s[0].lambda2 == q(1, 4));
    CHECK(s[0].lambda1_width == 0);
    CHECK(verify_solution(constant_kernel(2, 2), q(1, 4), q(1, 4), 101) == 0);
    CHECK(verify_solution(constant_kernel(2, 2), q(1, 3), q(1, 3), 101) >= q(1, 18));
}

TEST_CASE("second-order max-affine kernel solutions") {
    const auto k = max_affine_kernel(0, 2);
    const auto s = construct_solutions(k, q(1, 1000000000000));
    REQUIRE(s.size() == 3);
    const Interval brackets[] = {{q(1, 5), q(3, 10)}, {q(3, 10), 1}, {2, q(5, 2)}};
    for (int i = 0; i < 3; ++i) {
        CHECK(brackets[i].contains(s[i].root.midpoint()));
        CHECK(s[i].lambda1_width <= q(1, 1000000000000));
        CHECK(s[i].lambda2_width <= q(1, 1000000000000));
        CHECK(verify_solution(k, s[i].lambda1, s[i].lambda2, 1001) <= q(1, 1000000000));
    }
}

TEST_CASE("third-order kernels") {
    const auto two = analyze(max_affine_kernel(2, 3), {.solve = true, .oracle = true});
    CHECK(two.m == 1);
    CHECK(two.negative.count == 1);
    REQUIRE(two.solutions.size() == 1);
    CHECK(two.solutions[0].residual <= q(1, 1000000000));
    const auto fifth = analyze(max_affine_kernel(q(1, 5), 3), {.solve = true});
    CHECK(fifth.m == 3);
    CHECK(fifth.negative.count == 3);
    CHECK(fifth.solutions.size() == 3);
}

TEST_CASE("negative solutions") {
    for (int n = 2; n <= 6; n += 2) CHECK(count_negative_solutions(compute_moments(max_affine_kernel(q(1, 3), n))).count == 0);
    CHECK(count_negative_solutions(AlphaVector{{1, -3, 2, q(-1, 3)}}, 2).count == 0);
}

TEST_CASE("property: solution-count bounds and dual paths on random tables") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + trial % 6;
        const auto m = random_table(rng, n);
        const auto counts = count_positive_solutions(assemble_alpha(m), n);
        CHECK(counts.m >= 1);
        CHECK(counts.m <= ((n % 2 == 1 && n > 2) ? n : n + 1));
        CHECK(counts.even_path.count == 2 * counts.reduced_path.count);
    }
}

TEST_CASE("property: swap leaves the count unchanged") {
    for (int n = 2; n <= 5; ++n)
        for (const Rational eps : {Rational(0), q(1, 40), q(1, 25), q(1, 5), Rational(2)}) {
            const auto k = max_affine_kernel(eps, n);
            CHECK(analyze(k).m == analyze(k.swapped()).m);
        }
}

TEST_CASE("property: constructed solutions have distinct ratios and small residuals") {
    for (int n = 2; n <= 4; ++n)
        for (const Rational eps : {Rational(0), q(1, 5)}) {
            const auto k = max_affine_kernel(eps, n);
            const auto report = analyze(k, {.solve = true, .oracle = true});
            CHECK(static_cast<int>(report.solutions.size()) == *report.m);
            std::set<Rational> ratios;
            for (const auto& s : report.solutions) {
                CHECK(s.lambda1 > 0);
                CHECK(s.lambda2 > 0);
                CHECK(s.residual <= q(1, 1000000000));
                ratios.insert(s.root.midpoint());
            }
            CHECK(ratios.size() == report.solutions.size());
        }
}

TEST_CASE("numeric pipeline agrees with the exact one") {
    const auto k = max_affine_kernel(0, 2);
    NumericKernel nk{[f = k.phi1](double x) { return f.evaluate(x); }, [f = k.phi2](double x) { return f.evaluate(x); },
                     [f = k.psi1](double x) { return f.evaluate(x); }, [f = k.psi2](double x) { return f.evaluate(x); }, 2};
    const auto report = analyze_numeric(nk, 1e-12, {.solve = true});
    CHECK(report.mode == Mode::Numeric);
    CHECK(report.certified);
    CHECK(report.m == 3);
    CHECK(report.solutions.size() == 3);

    // Near the transition the moment error band straddles the double-root case.
    const auto near = max_affine_kernel(q(3143, 100000), 2);
    NumericKernel coarse{[f = near.phi1](double x) { return f.evaluate(x); },
                         [f = near.phi2](double x) { return f.evaluate(x); },
                         [f = near.psi1](double x) { return f.evaluate(x); },
                         [f = near.psi2](double x) { return f.evaluate(x); }, 2};
    const auto fuzzy = analyze_numeric(coarse, 1e-2);
    CHECK_FALSE(fuzzy.certified);
    REQUIRE_FALSE(fuzzy.notes.empty());
    CHECK(fuzzy.notes.back().find("UNCERTIFIED") != std::string::npos);
}
