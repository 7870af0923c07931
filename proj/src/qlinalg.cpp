#include <jcalc/qlinalg.hpp>

#include <stdexcept>
#include <utility>

namespace jcalc {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

QMatrix QMatrix::from_columns(const std::vector<std::vector<Rational>>& cols) {
    if (cols.empty()) return QMatrix();
    int rows = static_cast<int>(cols[0].size());
    QMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw std::invalid_argument("ragged column list");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

QMatrix QMatrix::augmented(const QMatrix& o) const {
    if (o.rows() != rows_) throw std::invalid_argument("row count mismatch");
    QMatrix m(rows_, cols_ + o.cols());
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols(); ++j) m.at(i, cols_ + j) = o.at(i, j);
    }
    return m;
}

int rank(const QMatrix& m) {
    // Clear denominators row by row, then run Bareiss elimination over Z.
    int rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < cols; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                    m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < cols; ++j) {
            mpq_class v = m.at(i, j) * Rational(l);
            a[i][j] = v.get_num();
        }
    }
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r) std::swap(a[p], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

int rank_gauss(const QMatrix& m) {
    QMatrix w = m;
    return static_cast<int>(rref(w).size());
}

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    QMatrix w = m;
    std::vector<int> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -w.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const QMatrix& m,
                                           const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("rhs size mismatch");
    QMatrix rhs(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) rhs.at(i, 0) = b[i];
    QMatrix w = m.augmented(rhs);
    std::vector<int> pivots = rref(w);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols(), 0);
    for (size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = w.at(static_cast<int>(r), m.cols());
    return x;
}

}  // namespace jcalc
