#include "discrimina/matrix.hpp"

#include "discrimina/errors.hpp"

namespace discrimina {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw DomainError("matrix entry count does not match its shape");
}

namespace {

// Parity of the permutation that sorts `seq` (inversion count mod 2).
int permutation_sign(const std::vector<std::size_t>& seq) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<Rational> principal_minor_sequence(const ExactMatrix& m) {
    if (!m.square()) throw DomainError("principal minors need a square matrix");
    const std::size_t n = m.rows();

    std::vector<Integer> a(n * n);
    std::vector<Integer> row_scale(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Rational> row(n);
        for (std::size_t c = 0; c < n; ++c) row[c] = m(r, c);
        row_scale[r] = denominator_lcm(row);
        for (std::size_t c = 0; c < n; ++c) a[r * n + c] = row[c].get_num() * (row_scale[r] / row[c].get_den());
    }
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };

    // Invariant after k pivot steps: every unpivoted entry (i, j) equals the
    // (k+1)x(k+1) minor on rows {pivot rows, i} and columns {pivot cols, j}.
    std::vector<bool> row_used(n, false), col_used(n, false);
    std::vector<std::size_t> pivot_rows, pivot_cols;
    Integer previous = 1;
    std::vector<Rational> minors;
    minors.reserve(n);
    Integer scale_product = 1;

    for (std::size_t block = 0; block < n; ++block) {
        scale_product *= row_scale[block];
        for (;;) {
            std::size_t pr = n, pc = n;
            for (std::size_t r = 0; r <= block && pr == n; ++r) {
                if (row_used[r]) continue;
                for (std::size_t c = 0; c <= block; ++c)
                    if (!col_used[c] && at(r, c) != 0) {
                        pr = r;
                        pc = c;
                        break;
                    }
            }
            if (pr == n) break;

            const Integer pivot = at(pr, pc);
            for (std::size_t i = 0; i < n; ++i) {
                if (row_used[i] || i == pr) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (col_used[j] || j == pc) continue;
                    Integer v = pivot * at(i, j) - at(i, pc) * at(pr, j);
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                    at(i, j) = std::move(v);
                }
            }
            row_used[pr] = col_used[pc] = true;
            pivot_rows.push_back(pr);
            pivot_cols.push_back(pc);
            previous = pivot;
        }

        if (pivot_rows.size() == block + 1) {
            const int s = permutation_sign(pivot_rows) * permutation_sign(pivot_cols);
            const Integer signed_pivot = previous * s;
            Rational minor(signed_pivot, scale_product);
            minor.canonicalize();
            minors.push_back(std::move(minor));
        } else {
            minors.emplace_back(0);
        }
    }
    return minors;
}

}  // namespace discrimina
