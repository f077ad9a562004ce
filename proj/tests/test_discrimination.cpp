#include <doctest.h>

#include <random>

#include "discrimina/discrimination.hpp"
#include "discrimina/errors.hpp"
#include "discrimina/rootfind.hpp"
#include "support.hpp"

using namespace discrimina;
using testing_support::q;

namespace {

Polynomial printed_even_octic() {
    // Reduced polynomial coefficients as printed for the n = 3, eps = 2 case.
    const Rational alpha[] = {q(1379, 4), q(2549, 12), q(-170, 9), q(-21833, 540), q(-97, 12)};
    return compose_square(Polynomial::from_descending(alpha));
}

std::vector<int> ints(const SignList& s) { return {s.entries().begin(), s.entries().end()}; }

}  // namespace

TEST_CASE("sign lists") {
    const SignList s({1, 0, -1, 0, 0, 1});
    CHECK(s.nonzero_count() == 3);
    CHECK(s.sign_changes() == 2);
    CHECK(SignList::of(std::vector<Rational>{q(-1, 2), 0, 3}) == SignList({-1, 0, 1}));
}

TEST_CASE("revise_sign_list") {
    CHECK(ints(revise_sign_list(SignList({1, 0, 0, -1}))) == std::vector<int>{1, -1, -1, -1});
    CHECK(ints(revise_sign_list(SignList({1, 1, 0, 0}))) == std::vector<int>{1, 1, 0, 0});
    CHECK(ints(revise_sign_list(SignList({1, 0, 0, 0, 1}))) == std::vector<int>{1, -1, -1, 1, 1});
    CHECK(ints(revise_sign_list(SignList({-1, 0, 1}))) == std::vector<int>{-1, 1, 1});
    CHECK(ints(revise_sign_list(SignList({0, 0, 1, 0, 1}))) == std::vector<int>{0, 0, 1, -1, 1});
}

TEST_CASE("discriminant sequence examples") {
    CHECK(discriminant_sequence(Polynomial{1, 0, 1}).signs == SignList({1, -1}));
    CHECK(discriminant_sequence(Polynomial{-1, 0, 1}).signs == SignList({1, 1}));
    const auto seq = discriminant_sequence(printed_even_octic());
    CHECK(seq.values.size() == 8);
    CHECK(ints(revise_sign_list(seq.signs)) == std::vector<int>{1, -1, -1, -1, 1, 1, 1, -1});
}

TEST_CASE("count_distinct_real_roots") {
    CHECK(count_distinct_real_roots(Polynomial{-1, 0, 1}).count == 2);
    CHECK(count_distinct_real_roots(Polynomial{1, 0, 1}).count == 0);
    const auto r = count_distinct_real_roots(printed_even_octic());
    CHECK(r.mu == 8);
    CHECK(r.nu == 3);
    CHECK(r.count == 2);
    CHECK(count_distinct_real_roots(power(Polynomial{-2, 1}, 3)).count == 1);
}

TEST_CASE("count_distinct_positive_roots") {
    CHECK(count_distinct_positive_roots(Polynomial{-2, 1, 1}).count == 1);
    CHECK(count_distinct_positive_roots(Polynomial{-1, -1, 1, 1}).count == 1);
    const Rational alpha[] = {q(1379, 4), q(2549, 12), q(-170, 9), q(-21833, 540), q(-97, 12)};
    const auto r = count_distinct_positive_roots(Polynomial::from_descending(alpha));
    CHECK(r.count == 1);
    CHECK(r.halved);
    CHECK(r.mu - 2 * r.nu == 2 * r.count);
    CHECK_THROWS_AS(count_distinct_positive_roots(Polynomial{0, -1, 1}), DomainError);
}

TEST_CASE("cubic invariants") {
    const Rational ex2[] = {1, -3, 2, q(-1, 3)};
    const auto c = cubic_invariants(ex2);
    CHECK(c.p == -3);
    CHECK(c.r == 2);
    CHECK(c.t == q(-1, 3));
    CHECK(c.delta1 == 3);
    CHECK(c.delta2 == 5);
    CHECK(c.delta3 == 1);
    const Rational constant[] = {1, 1, -1, -1};
    CHECK(cubic_invariants(constant).p == 1);
}

TEST_CASE("property: cubic D_list signs equal the discriminant sequence of g(s^2)") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(-12, 12);
    std::uniform_int_distribution<int> positive(1, 12);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Rational alpha[] = {positive(rng), coeff(rng), coeff(rng), -positive(rng)};
        const auto c = cubic_invariants(alpha);
        const auto seq = discriminant_sequence(compose_square(Polynomial::from_descending(alpha)));
        REQUIRE(seq.values.size() == 6);
        for (std::size_t k = 0; k < 6; ++k) CHECK(sign(seq.values[k]) == sign(c.d_list[k]));
        ++checked;
    }
    CHECK(checked == 300);
}

TEST_CASE("property: positive scaling leaves sign lists unchanged") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial f = testing_support::random_polynomial(rng, 2 + trial % 6, 20);
        const Polynomial g = f * q(trial + 3, 7);
        CHECK(discriminant_sequence(f).signs == discriminant_sequence(g).signs);
        CHECK(count_distinct_positive_roots(f).sign_list == count_distinct_positive_roots(g).sign_list);
    }
}

TEST_CASE("property: even composition doubles the positive count") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial g = testing_support::random_polynomial(rng, 1 + trial % 6, 20);
        CHECK(count_distinct_real_roots(compose_square(g)).count == 2 * count_distinct_positive_roots(g).count);
    }
}

TEST_CASE("property: counts agree with the Sturm oracle and recount consistently") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        const Polynomial f = testing_support::random_polynomial(rng, 2 + trial % 7, 20);
        const Rational bound = cauchy_bound(f);
        const auto real = count_distinct_real_roots(f);
        const auto positive = count_distinct_positive_roots(f);
        CHECK(real.count == sturm_count(f, -bound, bound));
        CHECK(positive.count == sturm_count(f, 0, bound));
        CHECK(real.count <= f.degree());
        CHECK(real.mu == real.revised.nonzero_count());
        CHECK(real.nu == real.revised.sign_changes());
    }
}
