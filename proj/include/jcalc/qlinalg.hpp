/*
 * qlinalg.hpp
 * -----------
 * Dense exact linear algebra over the rationals: rank (fraction-free and a
 * plain Gaussian cross-check), kernel bases, and linear solves.
 */
#pragma once

#include <jcalc/rational.hpp>

#include <optional>
#include <vector>

namespace jcalc {

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    static QMatrix from_columns(const std::vector<std::vector<Rational>>& cols);

    // Horizontal concatenation [*this | o].
    QMatrix augmented(const QMatrix& o) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

// Rank by fraction-free (Bareiss) elimination on a denominator-cleared copy.
int rank(const QMatrix& m);

// Rank by rational Gaussian elimination; independent of rank().
int rank_gauss(const QMatrix& m);

// Basis of the right null space {x : m x = 0}.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

// One solution of m x = b, if any.
std::optional<std::vector<Rational>> solve(const QMatrix& m,
                                           const std::vector<Rational>& b);

}  // namespace jcalc
