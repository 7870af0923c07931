#include <jcalc/graded.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jcalc {

namespace {

void check_poisson(const Tensor& lambda) {
    if (lambda.kind() != Kind::multivector || lambda.degree() != 2)
        throw std::invalid_argument("graded blocks need a bivector");
    if (!schouten(lambda, lambda).is_zero())
        throw std::invalid_argument("bivector is not Poisson");
}

std::vector<std::vector<int>> monomials(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    // lexicographic enumeration by recursive descent
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
    };
    if (n == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, d);
    return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<MonomialTensor> block_basis(int n, int k, int d, bool reverse) {
    std::vector<MonomialTensor> out;
    if (d < 0) return out;
    for (const auto& idx : subsets(n, k))
        for (const auto& alpha : monomials(n, d))
            out.push_back(MonomialTensor{idx, alpha});
    if (reverse) std::reverse(out.begin(), out.end());
    return out;
}

Tensor basis_tensor(const Chart& ch, const MonomialTensor& m) {
    Tensor t(ch, Kind::multivector,
             static_cast<int>(m.indices.size()));
    t.add_term(m.indices,
               ExPoly::term(1, m.exponents,
                            std::vector<Rational>(ch.dim(), 0)));
    return t;
}

// Coordinates of a homogeneous tensor in a block basis; throws on terms
// outside the basis.
std::vector<Rational> coordinates(const Tensor& t,
                                  const std::vector<MonomialTensor>& basis) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> pos;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        pos.emplace(std::make_pair(basis[i].indices, basis[i].exponents), i);
    std::vector<Rational> v(basis.size(), 0);
    for (const auto& [idx, f] : t.terms()) {
        for (const auto& [key, c] : f.terms()) {
            auto it = pos.find(std::make_pair(idx, key.alpha));
            if (it == pos.end())
                throw std::logic_error("image term outside the target block");
            v[it->second] = c;
        }
    }
    return v;
}

}  // namespace

int homogeneous_degree(const Tensor& t, int fallback) {
    int deg = -1;
    for (const auto& [idx, f] : t.terms()) {
        for (const auto& [key, c] : f.terms()) {
            for (const Rational& l : key.lambda)
                if (l != 0)
                    throw std::invalid_argument(
                        "exponential coefficients are not graded");
            int d = 0;
            for (int e : key.alpha) d += e;
            if (deg == -1) deg = d;
            if (d != deg)
                throw std::invalid_argument("coefficients are not homogeneous");
        }
    }
    return deg == -1 ? fallback : deg;
}

WeightBlock assemble_block(const Tensor& lambda, int k, int d,
                           bool reverse_basis) {
    check_poisson(lambda);
    int q = homogeneous_degree(lambda);
    const Chart& ch = lambda.chart();
    int n = ch.dim();
    WeightBlock b;
    b.k = k;
    b.d = d;
    b.source = block_basis(n, k, d, reverse_basis);
    b.target = block_basis(n, k + 1, d + q - 1, reverse_basis);
    b.matrix = QMatrix(static_cast<int>(b.target.size()),
                       static_cast<int>(b.source.size()));
    for (int col = 0; col < static_cast<int>(b.source.size()); ++col) {
        Tensor image = -schouten(lambda, basis_tensor(ch, b.source[col]));
        std::vector<Rational> v = coordinates(image, b.target);
        for (int row = 0; row < static_cast<int>(v.size()); ++row)
            if (v[row] != 0) b.matrix.at(row, col) = v[row];
    }
    return b;
}

std::vector<std::vector<int>> graded_cohomology_dims(const Tensor& lambda,
                                                     int kmax, int dmax,
                                                     bool reverse_basis) {
    int q = homogeneous_degree(lambda);
    std::vector<std::vector<int>> dims(kmax + 1,
                                       std::vector<int>(dmax + 1, 0));
    for (int k = 0; k <= kmax; ++k) {
        for (int d = 0; d <= dmax; ++d) {
            WeightBlock b = assemble_block(lambda, k, d, reverse_basis);
            int dim_ker = b.matrix.cols() - rank(b.matrix);
            int rank_prev = 0;
            if (k >= 1 && d - q + 1 >= 0) {
                WeightBlock p =
                    assemble_block(lambda, k - 1, d - q + 1, reverse_basis);
                rank_prev = rank(p.matrix);
            }
            dims[k][d] = dim_ker - rank_prev;
        }
    }
    return dims;
}

ExactnessReport graded_is_exact(const Tensor& lambda, const Tensor& cocycle) {
    check_poisson(lambda);
    if (cocycle.kind() != Kind::multivector)
        throw std::invalid_argument("cocycle must be a multivector");
    if (!schouten(lambda, cocycle).is_zero())
        throw std::invalid_argument("input is not a cocycle");
    const Chart& ch = lambda.chart();
    int q = homogeneous_degree(lambda);
    int k = cocycle.degree();
    int d = homogeneous_degree(cocycle);
    ExactnessReport rep;
    if (cocycle.is_zero()) {
        rep.exact = true;
        rep.witness = Tensor(ch, Kind::multivector, std::max(k - 1, 0));
        return rep;
    }
    // the only block that can map onto (k, d)
    int kd = k - 1, dd = d - q + 1;
    if (kd < 0 || dd < 0) {
        rep.witness = Tensor(ch, Kind::multivector, std::max(kd, 0));
        return rep;
    }
    WeightBlock b = assemble_block(lambda, kd, dd);
    std::vector<Rational> rhs = coordinates(cocycle, b.target);
    if (auto x = solve(b.matrix, rhs)) {
        rep.exact = true;
        Tensor w(ch, Kind::multivector, kd);
        for (int i = 0; i < static_cast<int>(x->size()); ++i) {
            if ((*x)[i] == 0) continue;
            w.add_term(b.source[i].indices,
                       ExPoly::term((*x)[i], b.source[i].exponents,
                                    std::vector<Rational>(ch.dim(), 0)));
        }
        rep.witness = w;
        if (!(-schouten(lambda, rep.witness) == cocycle))
            throw std::logic_error("witness verification failed");
        return rep;
    }
    // certificate: a functional vanishing on the image but not on the cocycle
    QMatrix mt(b.matrix.cols(), b.matrix.rows());
    for (int i = 0; i < b.matrix.rows(); ++i)
        for (int j = 0; j < b.matrix.cols(); ++j) mt.at(j, i) = b.matrix.at(i, j);
    for (const auto& c : kernel_basis(mt)) {
        Rational pair = 0;
        for (int i = 0; i < static_cast<int>(rhs.size()); ++i)
            pair += c[i] * rhs[i];
        if (pair != 0) {
            rep.certificate = c;
            break;
        }
    }
    if (rep.certificate.empty())
        throw std::logic_error("no separating functional found");
    rep.witness = Tensor(ch, Kind::multivector, kd);
    return rep;
}

}  // namespace jcalc
