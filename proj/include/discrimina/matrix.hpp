#pragma once

#include <cstddef>
#include <vector>

#include "discrimina/rational.hpp"

namespace discrimina {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
   public:
    ExactMatrix(std::size_t rows, std::size_t cols);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;
};

/// All leading principal minors det(M[0..k, 0..k]), k = 1..rows.
///
/// Rows are first scaled to integers by positive factors, then a
/// fraction-free (Bareiss) elimination runs with pivots restricted to the
/// current leading block, so vanishing intermediate minors are handled.
/// The row scales are divided back out: the returned minors are exact.
std::vector<Rational> principal_minor_sequence(const ExactMatrix& m);

}  // namespace discrimina
