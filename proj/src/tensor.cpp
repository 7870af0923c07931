#include <jcalc/tensor.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jcalc {

namespace {

// Sort indices ascending, tracking the permutation sign.
// Returns 0 for a repeated index, else +1/-1.
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return 0;
    return sign;
}

void check_same_chart(const Tensor& a, const Tensor& b) {
    if (a.chart() != b.chart()) throw std::invalid_argument("chart mismatch");
}

}  // namespace

Chart Chart::make(std::vector<std::string> names) {
    if (names.empty()) throw std::invalid_argument("empty chart");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size())
        throw std::invalid_argument("duplicate coordinate labels");
    return Chart{std::move(names)};
}

Tensor::Tensor(Chart chart, Kind kind, int degree)
    : chart_(std::move(chart)), kind_(kind), degree_(std::max(degree, 0)) {}

Tensor Tensor::scalar(const Chart& chart, Kind kind, const ExPoly& f) {
    Tensor t(chart, kind, 0);
    t.add_term({}, f);
    return t;
}

Tensor Tensor::basis_vector(const Chart& chart, int i) {
    Tensor t(chart, Kind::multivector, 1);
    t.add_term({i}, ExPoly::constant(chart.dim(), 1));
    return t;
}

Tensor Tensor::basis_form(const Chart& chart, int i) {
    Tensor t(chart, Kind::form, 1);
    t.add_term({i}, ExPoly::constant(chart.dim(), 1));
    return t;
}

Tensor Tensor::coordinate_volume(const Chart& chart) {
    Tensor t(chart, Kind::form, chart.dim());
    std::vector<int> all(chart.dim());
    for (int i = 0; i < chart.dim(); ++i) all[i] = i;
    t.add_term(all, ExPoly::constant(chart.dim(), 1));
    return t;
}

void Tensor::add_term(std::vector<int> indices, const ExPoly& coeff) {
    if (static_cast<int>(indices.size()) != degree_)
        throw std::invalid_argument("index tuple size != degree");
    for (int i : indices)
        if (i < 0 || i >= chart_.dim()) throw std::out_of_range("tensor index");
    if (coeff.dim() != chart_.dim())
        throw std::invalid_argument("coefficient dimension mismatch");
    if (coeff.is_zero()) return;
    int sign = sort_sign(indices);
    if (sign == 0) return;
    ExPoly add = (sign > 0) ? coeff : -coeff;
    auto it = terms_.find(indices);
    if (it == terms_.end()) {
        terms_.emplace(std::move(indices), std::move(add));
    } else {
        it->second += add;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExPoly Tensor::coeff(const std::vector<int>& indices) const {
    auto it = terms_.find(indices);
    if (it != terms_.end()) return it->second;
    return ExPoly::zero(chart_.dim());
}

const ExPoly Tensor::scalar_value() const {
    if (degree_ != 0) throw std::logic_error("scalar_value on nonzero degree");
    return coeff({});
}

Tensor Tensor::operator-() const {
    Tensor r(chart_, kind_, degree_);
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
}

Tensor Tensor::operator+(const Tensor& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    check_same_chart(*this, o);
    if (kind_ != o.kind_ || degree_ != o.degree_)
        throw std::invalid_argument("tensor kind/degree mismatch in sum");
    Tensor r = *this;
    for (const auto& [k, v] : o.terms_) r.add_term(k, v);
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + (-o); }

Tensor Tensor::operator*(const ExPoly& f) const {
    Tensor r(chart_, kind_, degree_);
    if (f.is_zero()) return r;
    for (const auto& [k, v] : terms_) {
        ExPoly c = v * f;
        if (!c.is_zero()) r.terms_.emplace(k, std::move(c));
    }
    return r;
}

Tensor Tensor::operator*(const Rational& c) const {
    Tensor r(chart_, kind_, degree_);
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

bool Tensor::operator==(const Tensor& o) const {
    if (is_zero() && o.is_zero()) return chart_ == o.chart_ && kind_ == o.kind_;
    return chart_ == o.chart_ && kind_ == o.kind_ && degree_ == o.degree_ &&
           terms_ == o.terms_;
}

Tensor Tensor::reduced_mod(const ExPoly& q) const {
    Tensor r(chart_, kind_, degree_);
    for (const auto& [k, v] : terms_) {
        ExPoly c = reduce_mod_hypersurface(v, q);
        if (!c.is_zero()) r.terms_.emplace(k, std::move(c));
    }
    return r;
}

Tensor Tensor::extended(const Chart& big) const {
    for (int i = 0; i < chart_.dim(); ++i)
        if (big.names[i] != chart_.names[i])
            throw std::invalid_argument("chart extension mismatch");
    Tensor r(big, kind_, degree_);
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v.extended(big.dim()));
    return r;
}

Tensor Tensor::with_kind(Kind k) const {
    Tensor r(chart_, k, degree_);
    for (const auto& [idx, v] : terms_) r.terms_.emplace(idx, v);
    return r;
}

std::string Tensor::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str(chart_.names) << ")";
        for (int i : k)
            os << (kind_ == Kind::form ? "*d" : "*D") << chart_.names[i];
    }
    return os.str();
}

Tensor wedge(const Tensor& a, const Tensor& b) {
    check_same_chart(a, b);
    if (a.kind() != b.kind())
        throw std::invalid_argument("wedge of mixed kinds");
    Tensor r(a.chart(), a.kind(), a.degree() + b.degree());
    if (a.degree() + b.degree() > a.chart().dim()) return r;
    for (const auto& [ka, va] : a.terms()) {
        for (const auto& [kb, vb] : b.terms()) {
            std::vector<int> idx = ka;
            idx.insert(idx.end(), kb.begin(), kb.end());
            r.add_term(std::move(idx), va * vb);
        }
    }
    return r;
}

Tensor exterior_d(const Tensor& alpha) {
    if (alpha.kind() != Kind::form)
        throw std::invalid_argument("exterior_d needs a form");
    const Chart& ch = alpha.chart();
    Tensor r(ch, Kind::form, alpha.degree() + 1);
    if (alpha.degree() + 1 > ch.dim()) return r;
    for (const auto& [k, v] : alpha.terms()) {
        for (int i = 0; i < ch.dim(); ++i) {
            ExPoly g = v.partial(i);
            if (g.is_zero()) continue;
            std::vector<int> idx;
            idx.reserve(k.size() + 1);
            idx.push_back(i);
            idx.insert(idx.end(), k.begin(), k.end());
            r.add_term(std::move(idx), g);
        }
    }
    return r;
}

Tensor contract(const Tensor& P, const Tensor& alpha) {
    check_same_chart(P, alpha);
    if (P.kind() != Kind::multivector || alpha.kind() != Kind::form)
        throw std::invalid_argument("contract needs (multivector, form)");
    int p = P.degree(), k = alpha.degree();
    if (p > k) return Tensor(P.chart(), Kind::form, 0);
    Tensor r(P.chart(), Kind::form, k - p);
    for (const auto& [J, g] : P.terms()) {
        for (const auto& [I, f] : alpha.terms()) {
            // i(X_1^...^X_p) = i(X_p) o ... o i(X_1): apply X_1 = d/dx_{J[0]} first.
            std::vector<int> idx = I;
            int sign = 1;
            bool dead = false;
            for (int j : J) {
                auto pos = std::find(idx.begin(), idx.end(), j);
                if (pos == idx.end()) { dead = true; break; }
                int r0 = static_cast<int>(pos - idx.begin());
                if (r0 % 2 == 1) sign = -sign;
                idx.erase(pos);
            }
            if (dead) continue;
            r.add_term(std::move(idx), (sign > 0) ? g * f : -(g * f));
        }
    }
    return r;
}

Tensor contract_form(const Tensor& eta, const Tensor& P) {
    check_same_chart(eta, P);
    if (eta.kind() != Kind::form || eta.degree() != 1 ||
        P.kind() != Kind::multivector)
        throw std::invalid_argument("contract_form needs (1-form, multivector)");
    if (P.degree() == 0) return Tensor(P.chart(), Kind::multivector, 0);
    Tensor r(P.chart(), Kind::multivector, P.degree() - 1);
    for (const auto& [J, g] : P.terms()) {
        for (std::size_t pos = 0; pos < J.size(); ++pos) {
            ExPoly c = eta.coeff({J[pos]});
            if (c.is_zero()) continue;
            std::vector<int> idx;
            for (std::size_t t = 0; t < J.size(); ++t)
                if (t != pos) idx.push_back(J[t]);
            ExPoly val = g * c;
            if (pos % 2 == 1) val = -val;
            r.add_term(std::move(idx), std::move(val));
        }
    }
    return r;
}

ExPoly pairing(const Tensor& alpha, const Tensor& P) {
    check_same_chart(alpha, P);
    if (alpha.degree() != P.degree())
        throw std::invalid_argument("pairing degree mismatch");
    Tensor c = contract(P, alpha);
    return c.is_zero() ? ExPoly::zero(alpha.chart().dim()) : c.scalar_value();
}

ExPoly eval_multivector(const Tensor& P, const std::vector<Tensor>& one_forms) {
    if (static_cast<int>(one_forms.size()) != P.degree())
        throw std::invalid_argument("evaluation arity mismatch");
    if (P.degree() == 0) return P.is_zero() ? ExPoly::zero(P.chart().dim()) : P.scalar_value();
    Tensor w = one_forms[0];
    for (std::size_t i = 1; i < one_forms.size(); ++i) w = wedge(w, one_forms[i]);
    return pairing(w, P);
}

ExPoly apply_vector(const Tensor& X, const ExPoly& f) {
    if (X.kind() != Kind::multivector || X.degree() != 1)
        throw std::invalid_argument("apply_vector needs a vector field");
    ExPoly r = ExPoly::zero(X.chart().dim());
    for (const auto& [J, a] : X.terms()) r += a * f.partial(J[0]);
    return r;
}

Tensor differential(const Chart& chart, const ExPoly& f) {
    Tensor r(chart, Kind::form, 1);
    for (int i = 0; i < chart.dim(); ++i) r.add_term({i}, f.partial(i));
    return r;
}

namespace {

// [f, Q] for a function f.
Tensor schouten_function(const ExPoly& f, const Tensor& Q) {
    const Chart& ch = Q.chart();
    int q = Q.degree();
    if (q == 0) return Tensor(ch, Kind::multivector, 0);
    if (q == 1)
        return Tensor::scalar(ch, Kind::multivector, apply_vector(Q, f));
    Tensor r(ch, Kind::multivector, q - 1);
    for (const auto& [J, g] : Q.terms()) {
        // Split g*D_{j0}^...^D_{jq-1} = A ^ B with A = g*D_{j0}.
        Tensor A(ch, Kind::multivector, 1);
        A.add_term({J[0]}, g);
        Tensor B(ch, Kind::multivector, q - 1);
        B.add_term(std::vector<int>(J.begin() + 1, J.end()),
                   ExPoly::constant(ch.dim(), 1));
        // [f, A^B] = [f,A]^B - A^[f,B],  [f,A] = A(f).
        r = r + apply_vector(A, f) * B - wedge(A, schouten_function(f, B));
    }
    return r;
}

// [X, Q] = Lie derivative of a multivector along a vector field.
Tensor schouten_vector(const Tensor& X, const Tensor& Q) {
    const Chart& ch = Q.chart();
    int q = Q.degree();
    if (q == 0) return Tensor::scalar(ch, Kind::multivector, apply_vector(X, Q.scalar_value()));
    Tensor r(ch, Kind::multivector, q);
    for (const auto& [J, g] : Q.terms()) {
        r.add_term(J, apply_vector(X, g));
        for (std::size_t pos = 0; pos < J.size(); ++pos) {
            // [X, d/dx_j] = -sum_i (da_i/dx_j) d/dx_i
            for (const auto& [K, a] : X.terms()) {
                ExPoly da = a.partial(J[pos]);
                if (da.is_zero()) continue;
                std::vector<int> idx = J;
                idx[pos] = K[0];
                r.add_term(std::move(idx), -(g * da));
            }
        }
    }
    return r;
}

}  // namespace

Tensor schouten(const Tensor& P, const Tensor& Q) {
    check_same_chart(P, Q);
    if (P.kind() != Kind::multivector || Q.kind() != Kind::multivector)
        throw std::invalid_argument("schouten needs multivectors");
    const Chart& ch = P.chart();
    int p = P.degree(), q = Q.degree();
    if (p == 0 && q == 0) return Tensor(ch, Kind::multivector, 0);
    if (p == 0) return schouten_function(P.is_zero() ? ExPoly::zero(ch.dim()) : P.scalar_value(), Q);
    if (p == 1) return schouten_vector(P, Q);
    if (q <= 1) {
        // [P,Q] = (-1)^{pq} [Q,P]
        Tensor r = schouten(Q, P);
        return ((p * q) % 2 == 0) ? r : -r;
    }
    Tensor r(ch, Kind::multivector, p + q - 1);
    int sgn = ((p - 1) % 2 == 0) ? 1 : -1;  // (-1)^{(p-1)*1}
    for (const auto& [J, g] : Q.terms()) {
        Tensor A(ch, Kind::multivector, 1);
        A.add_term({J[0]}, g);
        Tensor B(ch, Kind::multivector, q - 1);
        B.add_term(std::vector<int>(J.begin() + 1, J.end()),
                   ExPoly::constant(ch.dim(), 1));
        Tensor t = wedge(schouten(P, A), B);
        Tensor u = wedge(A, schouten(P, B));
        r = r + t + ((sgn > 0) ? u : -u);
    }
    return r;
}

Tensor lie_derivative(const Tensor& X, const Tensor& T) {
    if (X.kind() != Kind::multivector || X.degree() != 1)
        throw std::invalid_argument("lie_derivative needs a vector field");
    if (T.kind() == Kind::multivector) return schouten(X, T);
    return contract(X, exterior_d(T)) + exterior_d(contract(X, T));
}

Tensor sharp(const Tensor& lambda, const Tensor& alpha) {
    check_same_chart(lambda, alpha);
    if (lambda.kind() != Kind::multivector || lambda.degree() != 2)
        throw std::invalid_argument("sharp needs a bivector");
    if (alpha.kind() != Kind::form)
        throw std::invalid_argument("sharp needs a form argument");
    const Chart& ch = lambda.chart();
    int n = ch.dim();
    // v_i = sharp(dx_i) = sum_j Lambda(dx_i, dx_j) d/dx_j
    std::vector<Tensor> v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) {
        Tensor vi(ch, Kind::multivector, 1);
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            ExPoly lij = (i < j) ? lambda.coeff({i, j}) : -lambda.coeff({j, i});
            if (!lij.is_zero()) vi.add_term({j}, lij);
        }
        v.push_back(std::move(vi));
    }
    Tensor r(ch, Kind::multivector, alpha.degree());
    for (const auto& [I, f] : alpha.terms()) {
        Tensor w = Tensor::scalar(ch, Kind::multivector, ExPoly::constant(n, 1));
        for (int i : I) w = wedge(w, v[i]);
        r = r + f * w;
    }
    return r;
}

Tensor d_omega(const Tensor& omega, const Tensor& alpha) {
    if (omega.kind() != Kind::form || omega.degree() != 1)
        throw std::invalid_argument("d_omega needs a 1-form omega");
    if (!exterior_d(omega).is_zero())
        throw std::invalid_argument("d_omega needs a closed omega");
    return exterior_d(alpha) + wedge(omega, alpha);
}

}  // namespace jcalc
