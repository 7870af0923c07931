#include <jcalc/complexes.hpp>
#include <jcalc/qlinalg.hpp>

#include <algorithm>
#include <tuple>
#include <stdexcept>
#include <utility>

namespace jcalc {

namespace {

Tensor normalized(Tensor t, const Chart& chart, Kind kind, int degree) {
    if (degree < 0) degree = 0;
    if (t.is_zero() && (t.degree() != degree || t.kind() != kind))
        return Tensor(chart, kind, degree);
    return t;
}

Rational parity(int k) { return (k % 2 == 0) ? 1 : -1; }

ExPoly eval_on(const Tensor& t, const std::vector<Tensor>& one_forms) {
    if (t.degree() == 0) {
        if (!one_forms.empty())
            throw std::invalid_argument("argument count mismatch");
        return t.scalar_value();
    }
    return eval_multivector(t, one_forms);
}

std::vector<ExPoly> erased(const std::vector<ExPoly>& v, size_t i) {
    std::vector<ExPoly> out;
    for (size_t s = 0; s < v.size(); ++s)
        if (s != i) out.push_back(v[s]);
    return out;
}

Tensor omega_power(const LcsModel& model) {
    Tensor mu = model.Omega;
    Rational fact = 1;
    for (int i = 1; i < model.m; ++i) {
        mu = wedge(mu, model.Omega);
        fact *= (i + 1);
    }
    return mu * Rational(1 / fact);
}

}  // namespace

JetCochain JetCochain::make(int degree, Tensor p, Tensor q) {
    if (degree < 0) throw std::invalid_argument("negative cochain degree");
    const Chart ch = p.chart();  // copy: p is moved below
    p = normalized(std::move(p), ch, Kind::multivector, degree);
    q = normalized(std::move(q), ch, Kind::multivector, degree - 1);
    if (p.kind() != Kind::multivector || q.kind() != Kind::multivector)
        throw std::invalid_argument("cochain parts must be multivectors");
    if (p.degree() != degree || (degree > 0 && q.degree() != degree - 1))
        throw std::invalid_argument("cochain degree mismatch");
    if (degree == 0 && !q.is_zero())
        throw std::invalid_argument("degree-0 cochain has no second part");
    if (q.chart() != ch) throw std::invalid_argument("chart mismatch");
    return JetCochain{degree, std::move(p), std::move(q)};
}

JetCochain JetCochain::make(const Chart& chart, const ExPoly& f) {
    return make(0, Tensor::scalar(chart, Kind::multivector, f),
                Tensor(chart, Kind::multivector, 0));
}

bool JetCochain::operator==(const JetCochain& o) const {
    return degree == o.degree && p == o.p && q == o.q;
}

JetChain JetChain::make(int degree, Tensor alpha, Tensor beta) {
    if (degree < 0) throw std::invalid_argument("negative chain degree");
    const Chart ch = alpha.chart();  // copy: alpha is moved below
    alpha = normalized(std::move(alpha), ch, Kind::form, degree);
    beta = normalized(std::move(beta), ch, Kind::form, degree - 1);
    if (alpha.kind() != Kind::form || beta.kind() != Kind::form)
        throw std::invalid_argument("chain parts must be forms");
    if (alpha.degree() != degree || (degree > 0 && beta.degree() != degree - 1))
        throw std::invalid_argument("chain degree mismatch");
    if (degree == 0 && !beta.is_zero())
        throw std::invalid_argument("degree-0 chain has no second part");
    if (beta.chart() != ch) throw std::invalid_argument("chart mismatch");
    return JetChain{degree, std::move(alpha), std::move(beta)};
}

JetChain JetChain::make(const Chart& chart, const ExPoly& f) {
    return make(0, Tensor::scalar(chart, Kind::form, f),
                Tensor(chart, Kind::form, 0));
}

bool JetChain::operator==(const JetChain& o) const {
    return degree == o.degree && alpha == o.alpha && beta == o.beta;
}

JetChain JetChain::operator+(const JetChain& o) const {
    if (degree != o.degree) throw std::invalid_argument("degree mismatch");
    return make(degree, alpha + o.alpha, beta + o.beta);
}

JetChain JetChain::operator-() const { return make(degree, -alpha, -beta); }

JetCochain sigma(const JacobiStructure& j, const JetCochain& c) {
    int k = c.degree;
    Tensor p = -schouten(j.lambda, c.p) + Rational(k) * wedge(j.e, c.p) +
               wedge(j.lambda, c.q);
    Tensor q = schouten(j.lambda, c.q) - Rational(k - 1) * wedge(j.e, c.q) +
               schouten(j.e, c.p);
    return JetCochain::make(k + 1, std::move(p), std::move(q));
}

JetCochain sigma_tilde(const JacobiStructure& j, const JetCochain& c) {
    int k = c.degree;
    Tensor p = -schouten(j.lambda, c.p) + Rational(k - 1) * wedge(j.e, c.p) +
               wedge(j.lambda, c.q);
    Tensor q = schouten(j.lambda, c.q) - Rational(k - 2) * wedge(j.e, c.q) +
               schouten(j.e, c.p);
    return JetCochain::make(k + 1, std::move(p), std::move(q));
}

Tensor sigma_bar(const Tensor& lambda, const Tensor& p) {
    if (!schouten(lambda, lambda).is_zero())
        throw std::invalid_argument("bivector is not Poisson");
    return -schouten(lambda, p);
}

JetChain delta(const JacobiStructure& j, const JetChain& c) {
    int r = c.degree;
    if (r == 0)
        return JetChain::make(j.chart, ExPoly::zero(j.chart.dim()));
    const Tensor& a = c.alpha;
    const Tensor& b = c.beta;
    Tensor first = contract(j.lambda, exterior_d(a)) -
                   exterior_d(contract(j.lambda, a)) +
                   Rational(r) * contract(j.e, a) +
                   parity(r) * lie_derivative(j.e, b);
    Tensor second = contract(j.lambda, exterior_d(b)) -
                    exterior_d(contract(j.lambda, b)) +
                    Rational(r - 1) * contract(j.e, b) +
                    parity(r) * contract(j.lambda, a);
    return JetChain::make(r - 1, std::move(first), std::move(second));
}

Tensor delta_bar(const Tensor& lambda, const Tensor& alpha) {
    return contract(lambda, exterior_d(alpha)) -
           exterior_d(contract(lambda, alpha));
}

void HCESum::add(ExPoly f, std::vector<ExPoly> factors) {
    if (f.is_zero()) return;
    // The factor slots are linear, so expand every factor in the monomial
    // basis and distribute; cancellation then works term by term.
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].is_zero()) return;
        if (factors[i].term_count() > 1 ||
            factors[i].terms().begin()->second != 1) {
            for (const auto& [key, c] : factors[i].terms()) {
                std::vector<ExPoly> sub = factors;
                sub[i] = ExPoly::term(1, key.alpha, key.lambda);
                add(f * ExPoly::constant(f.dim(), c), std::move(sub));
            }
            return;
        }
    }
    // Insertion-sort the factors; each swap flips the sign, equal factors
    // annihilate the term.
    bool negate = false;
    for (size_t i = 1; i < factors.size(); ++i) {
        size_t pos = i;
        while (pos > 0) {
            int cmp = factors[pos - 1].compare(factors[pos]);
            if (cmp == 0) return;
            if (cmp < 0) break;
            std::swap(factors[pos - 1], factors[pos]);
            negate = !negate;
            --pos;
        }
    }
    if (negate) f = -f;
    auto it = terms_.find(factors);
    if (it == terms_.end()) {
        terms_.emplace(std::move(factors), std::move(f));
    } else {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HCESum HCESum::operator+(const HCESum& o) const {
    HCESum out = *this;
    for (const auto& [factors, f] : o.terms_) out.add(f, factors);
    return out;
}

HCESum delta_H(const JacobiStructure& j, const HCEChain& c) {
    HCESum out;
    int k = static_cast<int>(c.factors.size());
    for (int i = 0; i < k; ++i) {
        Tensor xi = hamiltonian_field(j, c.factors[i]);
        out.add(parity(i + 1) * apply_vector(xi, c.f), erased(c.factors, i));
    }
    for (int i = 0; i < k; ++i)
        for (int l = i + 1; l < k; ++l) {
            std::vector<ExPoly> rest;
            rest.push_back(jacobi_bracket(j, c.factors[i], c.factors[l]));
            for (int s = 0; s < k; ++s)
                if (s != i && s != l) rest.push_back(c.factors[s]);
            out.add(parity(i + 1 + l + 1) * c.f, std::move(rest));
        }
    return out;
}

HCESum delta_H(const JacobiStructure& j, const HCESum& s) {
    HCESum out;
    for (const auto& [factors, f] : s.terms())
        out = out + delta_H(j, HCEChain{f, factors});
    return out;
}

JetChain pi_k(const Chart& chart, const HCEChain& c) {
    int k = static_cast<int>(c.factors.size());
    Tensor alpha = Tensor::scalar(chart, Kind::form, c.f);
    for (const ExPoly& fi : c.factors)
        alpha = wedge(alpha, differential(chart, fi));
    Tensor beta(chart, Kind::form, k - 1 < 0 ? 0 : k - 1);
    for (int i = 0; i < k; ++i) {
        Tensor w = Tensor::scalar(chart, Kind::form, c.f * c.factors[i]);
        for (int s = 0; s < k; ++s)
            if (s != i) w = wedge(w, differential(chart, c.factors[s]));
        beta = beta + parity(i + 1 + k) * w;
    }
    return JetChain::make(k, std::move(alpha), std::move(beta));
}

JetChain pi_k(const Chart& chart, const HCESum& s, int k) {
    JetChain out = JetChain::make(k, Tensor(chart, Kind::form, k),
                                  Tensor(chart, Kind::form, k - 1 < 0 ? 0 : k - 1));
    for (const auto& [factors, f] : s.terms()) {
        if (static_cast<int>(factors.size()) != k)
            throw std::invalid_argument("factor count mismatch");
        out = out + pi_k(chart, HCEChain{f, factors});
    }
    return out;
}

ExPoly j_cochain_eval(const JetCochain& c, const std::vector<ExPoly>& fs) {
    int k = c.degree;
    if (static_cast<int>(fs.size()) != k)
        throw std::invalid_argument("argument count mismatch");
    const Chart& ch = c.p.chart();
    std::vector<Tensor> dfs;
    for (const ExPoly& f : fs) dfs.push_back(differential(ch, f));
    ExPoly out = eval_on(c.p, dfs);
    for (int q = 0; q < k; ++q) {
        std::vector<Tensor> rest;
        for (int s = 0; s < k; ++s)
            if (s != q) rest.push_back(dfs[s]);
        out += parity(q + 1 + 1) * (fs[q] * eval_on(c.q, rest));
    }
    return out;
}

ExPoly partialH_of_j(const JacobiStructure& j, const JetCochain& c,
                     const std::vector<ExPoly>& fs) {
    int k = c.degree;
    if (static_cast<int>(fs.size()) != k + 1)
        throw std::invalid_argument("argument count mismatch");
    ExPoly out = ExPoly::zero(j.chart.dim());
    for (int i = 0; i <= k; ++i) {
        ExPoly inner = j_cochain_eval(c, erased(fs, i));
        out += parity(i) * apply_vector(hamiltonian_field(j, fs[i]), inner);
    }
    for (int i = 0; i <= k; ++i)
        for (int l = i + 1; l <= k; ++l) {
            std::vector<ExPoly> args;
            args.push_back(jacobi_bracket(j, fs[i], fs[l]));
            for (int s = 0; s <= k; ++s)
                if (s != i && s != l) args.push_back(fs[s]);
            out += parity(i + l) * j_cochain_eval(c, args);
        }
    return out;
}

JetChain d_tilde(const LcsModel& model, const JetChain& c) {
    if (exterior_d(model.Omega) != wedge(model.omega, model.Omega))
        throw std::invalid_argument("Lee condition fails");
    Tensor omega0 = Rational(-model.m) * model.omega;
    Tensor omega1 = Rational(-(model.m + 1)) * model.omega;
    Tensor alpha = d_omega(omega1, c.alpha) - wedge(model.Omega, c.beta);
    Tensor beta = -d_omega(omega0, c.beta);
    return JetChain::make(c.degree + 1, std::move(alpha), std::move(beta));
}

Tensor star_lcs(const LcsModel& model, const Tensor& alpha) {
    if (alpha.kind() != Kind::form)
        throw std::invalid_argument("star acts on forms");
    Tensor mu = omega_power(model);
    return parity(alpha.degree()) *
           contract(sharp(model.j.lambda, alpha), mu);
}

JetChain phi_tilde(const LcsModel& model, const JetChain& c) {
    int k = c.degree;
    int out_deg = 2 * model.m + 1 - k;
    Tensor sb = star_lcs(model, c.beta);
    Tensor second = contract(model.j.e, sb) - star_lcs(model, c.alpha);
    return JetChain::make(out_deg, std::move(sb), std::move(second));
}

JetChain phi_tilde_inv(const LcsModel& model, const JetChain& c) {
    int out_deg = 2 * model.m + 1 - c.degree;
    Tensor beta = star_lcs(model, c.alpha);
    Tensor alpha = star_lcs(model, contract(model.j.e, c.alpha) - c.beta);
    return JetChain::make(out_deg, std::move(alpha), std::move(beta));
}

JetCochain contact_F(const ContactModel& model, const JetChain& c) {
    const JacobiStructure& j = model.j;
    Tensor p = sharp(j.lambda, c.alpha) +
               wedge(j.e, sharp(j.lambda, c.beta));
    Tensor q = -sharp(j.lambda, contract(j.e, c.alpha)) +
               wedge(j.e, sharp(j.lambda, contract(j.e, c.beta)));
    return JetCochain::make(c.degree, std::move(p), std::move(q));
}

JetChain contact_G(const ContactModel& model, const JetCochain& c) {
    int k = c.degree;
    Tensor iep = contract_form(model.eta, c.p);
    Tensor ieq = contract_form(model.eta, c.q);
    Tensor alpha =
        parity(k) * (contact_flat(model, c.p) +
                     wedge(model.eta, contact_flat(model, c.q)) -
                     wedge(model.eta, contact_flat(model, iep)));
    Tensor beta = parity(k - 1) * (contact_flat(model, iep) -
                                   wedge(model.eta, contact_flat(model, ieq)));
    return JetChain::make(k, std::move(alpha), std::move(beta));
}

JetCochain lcs_F(const LcsModel& model, const Tensor& alpha) {
    const JacobiStructure& j = model.j;
    Tensor p = sharp(j.lambda, alpha);
    Tensor q = -sharp(j.lambda, contract(j.e, alpha));
    return JetCochain::make(alpha.degree(), std::move(p), std::move(q));
}

Tensor lcs_G(const LcsModel& model, const JetCochain& c) {
    return parity(c.degree) * (-lcs_flat(model, c.q) +
                               contract(model.j.e, lcs_flat(model, c.p)));
}

SpanSolveReport sigma_preimage_in_span(const JacobiStructure& j,
                                       const JetCochain& target,
                                       const std::vector<ExPoly>& span) {
    if (target.degree != 1)
        throw std::invalid_argument("span solve expects a degree-1 target");
    // coordinates indexed by (part, index tuple, scalar term key)
    using Key = std::tuple<int, std::vector<int>, std::vector<int>,
                           std::vector<Rational>>;
    std::map<Key, int> row_of;
    auto vectorize = [&](const JetCochain& c,
                         bool grow) -> std::map<Key, Rational> {
        std::map<Key, Rational> v;
        const Tensor* parts[2] = {&c.p, &c.q};
        for (int s = 0; s < 2; ++s) {
            for (const auto& [idx, f] : parts[s]->terms()) {
                for (const auto& [key, coef] : f.terms()) {
                    Key k{s, idx, key.alpha, key.lambda};
                    if (grow) row_of.emplace(k, 0);
                    v[k] = coef;
                }
            }
        }
        return v;
    };
    std::vector<std::map<Key, Rational>> cols;
    for (const ExPoly& f : span)
        cols.push_back(
            vectorize(sigma(j, JetCochain::make(j.chart, f)), true));
    std::map<Key, Rational> rhs = vectorize(target, true);
    int r = 0;
    for (auto& [k, row] : row_of) row = r++;
    QMatrix m(r, static_cast<int>(cols.size()));
    for (int c = 0; c < static_cast<int>(cols.size()); ++c)
        for (const auto& [k, coef] : cols[c]) m.at(row_of.at(k), c) = coef;
    std::vector<Rational> b(r, 0);
    for (const auto& [k, coef] : rhs) b[row_of.at(k)] = coef;
    SpanSolveReport rep;
    if (auto x = solve(m, b)) {
        ExPoly w(j.chart.dim());
        for (int i = 0; i < static_cast<int>(span.size()); ++i)
            w += span[i] * ExPoly::constant(j.chart.dim(), (*x)[i]);
        if (!(sigma(j, JetCochain::make(j.chart, w)) == target))
            throw std::logic_error("span witness verification failed");
        rep.solved = true;
        rep.witness = w;
        rep.residual = JetCochain::make(1, Tensor(j.chart, Kind::multivector, 1),
                                        Tensor(j.chart, Kind::multivector, 0));
    } else {
        rep.witness = ExPoly::zero(j.chart.dim());
        rep.residual = target;
    }
    return rep;
}

JetChain contact_homotopy(const ContactModel& model, const JetChain& c) {
    if (!delta(model.j, c).is_zero())
        throw std::invalid_argument("input is not a cycle");
    Rational s{1, model.m + 1};
    JetChain h = JetChain::make(c.degree + 1,
                                wedge(model.eta, c.alpha) * s,
                                wedge(model.eta, c.beta) * s);
    if (!(delta(model.j, h) == c))
        throw std::logic_error("homotopy identity failed");
    return h;
}

Tensor lift_pair(const JetCochain& c) {
    const Chart& small = c.p.chart();
    std::vector<std::string> names = small.names;
    std::string tname = "t";
    int suffix = 0;
    while (std::find(names.begin(), names.end(), tname) != names.end())
        tname = "t" + std::to_string(++suffix);
    names.push_back(tname);
    Chart big = Chart::make(names);
    int n = big.dim();
    Tensor p = c.p.extended(big);
    Tensor q = c.q.extended(big);
    Tensor dt = Tensor::basis_vector(big, n - 1);
    std::vector<Rational> freq(n, 0);
    freq[n - 1] = -c.degree;
    ExPoly ekt = ExPoly::term(1, std::vector<int>(n, 0), std::move(freq));
    return ekt * (p + wedge(dt, q));
}

JetChain jet_wedge(const JetChain& a, const JetChain& b) {
    Tensor alpha = wedge(a.alpha, b.alpha);
    Tensor beta = wedge(a.alpha, b.beta) + parity(b.degree) * wedge(a.beta, b.alpha);
    return JetChain::make(a.degree + b.degree, std::move(alpha), std::move(beta));
}

JetChain jet_interior(const JetCochain& s, const JetChain& c) {
    if (s.degree != 1)
        throw std::invalid_argument("interior product needs a degree-1 cochain");
    int r = c.degree;
    if (r == 0) throw std::invalid_argument("cannot contract a degree-0 chain");
    ExPoly f = s.q.scalar_value();
    Tensor alpha = contract(s.p, c.alpha) + parity(r - 1) * (c.beta * f);
    Tensor beta = contract(s.p, c.beta);
    return JetChain::make(r - 1, std::move(alpha), std::move(beta));
}

}  // namespace jcalc
