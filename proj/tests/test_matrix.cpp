#include <doctest.h>

#include <random>

#include "discrimina/discrimination.hpp"
#include "discrimina/matrix.hpp"

using namespace discrimina;

namespace {

Rational cofactor_determinant(const ExactMatrix& m, std::size_t order) {
    if (order == 1) return m(0, 0);
    Rational det = 0;
    for (std::size_t col = 0; col < order; ++col) {
        if (m(0, col) == 0) continue;
        ExactMatrix sub(order - 1, order - 1);
        for (std::size_t r = 1; r < order; ++r)
            for (std::size_t c = 0, k = 0; c < order; ++c)
                if (c != col) sub(r - 1, k++) = m(r, c);
        const Rational term = m(0, col) * cofactor_determinant(sub, order - 1);
        det += (col % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t size, int bound, double zero_rate) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    std::bernoulli_distribution zero(zero_rate);
    ExactMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) m(r, c) = zero(rng) ? 0 : entry(rng);
    return m;
}

}  // namespace

TEST_CASE("small examples") {
    CHECK(principal_minor_sequence(ExactMatrix(2, 2, {1, 2, 3, 4})) == std::vector<Rational>{1, -2});
    CHECK(principal_minor_sequence(ExactMatrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})) == std::vector<Rational>{1, 1, 1});
    CHECK(principal_minor_sequence(ExactMatrix(2, 2, {0, 1, 1, 0})) == std::vector<Rational>{0, -1});
}

TEST_CASE("rational entries are handled exactly") {
    const ExactMatrix m(2, 2, {Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(1, 7)});
    CHECK(principal_minor_sequence(m) == std::vector<Rational>{Rational(1, 2), Rational(1, 14) - Rational(1, 15)});
}

TEST_CASE("discrimination matrix of x^2 - 1") {
    const auto m = discrimination_matrix(Polynomial{-1, 0, 1});
    const ExactMatrix expected(5, 5, {1, 0, -1, 0, 0,  //
                                      0, 2, 0, 0, 0,   //
                                      0, 1, 0, -1, 0,  //
                                      0, 0, 2, 0, 0,   //
                                      0, 0, 1, 0, -1});
    CHECK(m == expected);
    const auto minors = principal_minor_sequence(m);
    CHECK(minors[1] > 0);
    CHECK(minors[3] > 0);
}

TEST_CASE("property: minors equal cofactor expansion on random 5x5 matrices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const ExactMatrix m = random_matrix(rng, 5, 9, trial % 3 == 0 ? 0.6 : 0.1);
        const auto minors = principal_minor_sequence(m);
        REQUIRE(minors.size() == 5);
        for (std::size_t k = 1; k <= 5; ++k) CHECK(minors[k - 1] == cofactor_determinant(m, k));
    }
}
