#include <jcalc/liealg.hpp>

#include <stdexcept>

namespace jcalc {

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int pos = k - 1;
        while (pos >= 0 && cur[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

std::vector<Rational> to_vector(const Tensor& t,
                                const std::vector<std::vector<int>>& basis) {
    std::vector<Rational> v(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
        ExPoly c = t.coeff(basis[i]);
        if (c.is_zero()) continue;
        if (!c.is_constant())
            throw std::invalid_argument("expected a constant-coefficient form");
        v[i] = c.terms().begin()->second;
    }
    return v;
}

Tensor constant_form(const Chart& ch, int degree,
                     const std::vector<std::vector<int>>& basis,
                     const std::vector<Rational>& v) {
    Tensor t(ch, Kind::form, degree);
    for (size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0) t.add_term(basis[i], ExPoly::constant(ch.dim(), v[i]));
    return t;
}

// Matrix of a linear map Lambda^k -> Lambda^{k+shift} in the monomial bases.
template <typename F>
QMatrix map_matrix(const Chart& ch, int k, int shift, F&& f) {
    auto dom = subsets(ch.dim(), k);
    auto cod = subsets(ch.dim(), k + shift);
    QMatrix m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
    for (size_t j = 0; j < dom.size(); ++j) {
        Tensor b(ch, Kind::form, k);
        b.add_term(dom[j], ExPoly::constant(ch.dim(), 1));
        std::vector<Rational> img = to_vector(f(b), cod);
        for (size_t i = 0; i < cod.size(); ++i) m.at(static_cast<int>(i),
                                                     static_cast<int>(j)) = img[i];
    }
    return m;
}

QMatrix columns_or_empty(const std::vector<std::vector<Rational>>& cols,
                         int rows) {
    if (cols.empty()) return QMatrix(rows, 0);
    return QMatrix::from_columns(cols);
}

}  // namespace

LieAlgebra LieAlgebra::make(int dim, const std::vector<StructEntry>& entries) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
    LieAlgebra g;
    g.dim_ = dim;
    g.c_.assign(static_cast<size_t>(dim) * dim * dim, 0);
    auto slot = [&](int i, int j, int k) -> Rational& {
        return g.c_[(static_cast<size_t>(i) * dim + j) * dim + k];
    };
    for (const auto& e : entries) {
        if (e.i < 1 || e.j < 1 || e.k < 1 || e.i > dim || e.j > dim ||
            e.k > dim || e.i >= e.j)
            throw std::invalid_argument("bad structure constant entry");
        slot(e.i - 1, e.j - 1, e.k - 1) = e.v;
        slot(e.j - 1, e.i - 1, e.k - 1) = -e.v;
    }
    // Jacobi identity on basis triples.
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = j + 1; k < dim; ++k)
                for (int l = 0; l < dim; ++l) {
                    Rational s = 0;
                    for (int m = 0; m < dim; ++m)
                        s += g.c(i, j, m) * g.c(m, k, l) +
                             g.c(j, k, m) * g.c(m, i, l) +
                             g.c(k, i, m) * g.c(m, j, l);
                    if (s != 0)
                        throw std::invalid_argument(
                            "structure constants violate the Jacobi identity");
                }
    return g;
}

LieAlgebra builtin_algebra(const std::string& name) {
    if (name.rfind("abelian", 0) == 0) {
        int n = std::stoi(name.substr(7));
        if (n < 1 || n > 6) throw std::invalid_argument("unknown algebra: " + name);
        return LieAlgebra::make(n, {});
    }
    if (name == "h3") return LieAlgebra::make(3, {{1, 2, 3, 1}});
    if (name == "kt") return LieAlgebra::make(4, {{1, 2, 3, 1}});
    if (name == "aff1") return LieAlgebra::make(2, {{1, 2, 2, 1}});
    if (name == "so3")
        return LieAlgebra::make(3, {{1, 2, 3, 1}, {1, 3, 2, -1}, {2, 3, 1, 1}});
    if (name == "sl2")
        return LieAlgebra::make(3, {{1, 2, 2, 2}, {1, 3, 3, -2}, {2, 3, 1, 1}});
    throw std::invalid_argument("unknown algebra: " + name);
}

Chart dual_chart(const LieAlgebra& g) {
    std::vector<std::string> names;
    for (int i = 1; i <= g.dim(); ++i) names.push_back("x" + std::to_string(i));
    return Chart::make(names);
}

std::vector<Rational> modular_character(const LieAlgebra& g) {
    std::vector<Rational> mu(g.dim(), 0);
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j) mu[i] += g.c(i, j, j);
    return mu;
}

Tensor ce_d(const LieAlgebra& g, const Tensor& form) {
    if (form.kind() != Kind::form)
        throw std::invalid_argument("ce_d acts on forms");
    const Chart& ch = form.chart();
    int n = ch.dim();
    if (n != g.dim()) throw std::invalid_argument("chart dimension mismatch");
    // d theta^k = -sum_{i<j} c_{ij}^k theta^i ^ theta^j, extended as an
    // antiderivation; coefficients must be constant.
    Tensor out(ch, Kind::form, form.degree() + 1);
    for (const auto& [I, coeff] : form.terms()) {
        if (!coeff.is_constant())
            throw std::invalid_argument("expected a constant-coefficient form");
        for (size_t r = 0; r < I.size(); ++r) {
            Rational sgn = (r % 2 == 0) ? 1 : -1;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Rational cv = g.c(i, j, I[r]);
                    if (cv == 0) continue;
                    std::vector<int> idx;
                    idx.push_back(i);
                    idx.push_back(j);
                    for (size_t s = 0; s < I.size(); ++s)
                        if (s != r) idx.push_back(I[s]);
                    ExPoly c = coeff * (-sgn * cv);
                    out.add_term(std::move(idx), c);
                }
        }
    }
    return out;
}

std::vector<int> ce_betti(const LieAlgebra& g) {
    Chart ch = dual_chart(g);
    int n = ch.dim();
    std::vector<int> ranks(n + 1, 0);  // rank of d_k : k -> k+1
    for (int k = 0; k < n; ++k) {
        QMatrix dk = map_matrix(ch, k, 1, [&](const Tensor& b) {
            return ce_d(g, b);
        });
        ranks[k] = rank(dk);
    }
    std::vector<int> betti(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
        int dim_k = static_cast<int>(subsets(n, k).size());
        int prev = (k == 0) ? 0 : ranks[k - 1];
        betti[k] = dim_k - ranks[k] - prev;
    }
    return betti;
}

JacobiStructure lie_poisson(const LieAlgebra& g) {
    Chart ch = dual_chart(g);
    int n = ch.dim();
    Tensor lam(ch, Kind::multivector, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            ExPoly c = ExPoly::zero(n);
            for (int k = 0; k < n; ++k)
                if (g.c(i, j, k) != 0)
                    c += ExPoly::constant(n, g.c(i, j, k)) * ExPoly::variable(n, k);
            if (!c.is_zero()) lam.add_term({i, j}, c);
        }
    Tensor e(ch, Kind::multivector, 1);
    return JacobiStructure::make(ch, lam, e);
}

JacobiStructure sphere_structure(const LieAlgebra& g) {
    JacobiStructure lp = lie_poisson(g);
    const Chart& ch = lp.chart;
    int n = ch.dim();
    Tensor alpha(ch, Kind::form, 1);
    Tensor a_field(ch, Kind::multivector, 1);
    ExPoly constraint = -ExPoly::constant(n, 1);
    for (int i = 0; i < n; ++i) {
        alpha.add_term({i}, ExPoly::variable(n, i));
        a_field.add_term({i}, ExPoly::variable(n, i));
        constraint += ExPoly::variable(n, i) * ExPoly::variable(n, i);
    }
    Tensor e = contract_form(alpha, lp.lambda);
    Tensor lam = lp.lambda - wedge(a_field, e);
    return JacobiStructure::make(ch, lam, e, constraint);
}

std::vector<int> nilmanifold_lj_dims(const LieAlgebra& g, const Tensor& omega2) {
    Chart ch = dual_chart(g);
    int n = ch.dim();
    if (omega2.degree() != 2 || omega2.kind() != Kind::form ||
        omega2.chart() != ch)
        throw std::invalid_argument("omega2 must be a 2-form on the dual chart");
    if (!ce_d(g, omega2).is_zero())
        throw std::invalid_argument("omega2 must be closed");

    auto d_mat = [&](int k) {
        return map_matrix(ch, k, 1, [&](const Tensor& b) { return ce_d(g, b); });
    };
    auto l_mat = [&](int k) {
        return map_matrix(ch, k, 2,
                          [&](const Tensor& b) { return wedge(b, omega2); });
    };

    // Per degree k: Z_k = ker d_k as columns, B_k = image columns of d_{k-1}.
    std::vector<QMatrix> Z(n + 1), B(n + 1);
    std::vector<int> dimH(n + 1, 0), dimB(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
        int rows = static_cast<int>(subsets(n, k).size());
        Z[k] = columns_or_empty(kernel_basis(d_mat(k)), rows);
        if (k == 0) {
            B[k] = QMatrix(rows, 0);
        } else {
            QMatrix prev = d_mat(k - 1);
            std::vector<std::vector<Rational>> cols;
            for (int j = 0; j < prev.cols(); ++j) {
                std::vector<Rational> col(prev.rows());
                for (int i = 0; i < prev.rows(); ++i) col[i] = prev.at(i, j);
                cols.push_back(std::move(col));
            }
            B[k] = columns_or_empty(cols, rows);
        }
        dimB[k] = rank(B[k]);
        dimH[k] = Z[k].cols() - dimB[k];
    }

    auto apply = [&](const QMatrix& mat, const QMatrix& cols) {
        QMatrix out(mat.rows(), cols.cols());
        for (int j = 0; j < cols.cols(); ++j)
            for (int i = 0; i < mat.rows(); ++i) {
                Rational s = 0;
                for (int t = 0; t < mat.cols(); ++t)
                    s += mat.at(i, t) * cols.at(t, j);
                out.at(i, j) = s;
            }
        return out;
    };

    // Image of L : H^{k-2} -> H^k inside H^k.
    auto dim_im_L = [&](int k) {
        if (k < 2 || k > n) return 0;
        QMatrix lz = apply(l_mat(k - 2), Z[k - 2]);
        return rank(lz.augmented(B[k])) - dimB[k];
    };
    // Kernel of L : H^{k} -> H^{k+2}.
    auto dim_ker_L = [&](int k) {
        if (k < 0 || k > n) return 0;
        if (k + 2 > n) return dimH[k];
        QMatrix lz = apply(l_mat(k), Z[k]);
        int induced_rank = rank(lz.augmented(B[k + 2])) - dimB[k + 2];
        return (Z[k].cols() - induced_rank) - dimB[k];
    };

    std::vector<int> dims(n + 2, 0);
    for (int k = 0; k <= n + 1; ++k) {
        int a = (k <= n) ? dimH[k] - dim_im_L(k) : 0;
        int b = dim_ker_L(k - 1);
        dims[k] = a + b;
    }
    return dims;
}

}  // namespace jcalc
