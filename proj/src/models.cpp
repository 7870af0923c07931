#include <jcalc/models.hpp>

#include <functional>
#include <stdexcept>

namespace jcalc {

namespace {

std::vector<std::string> darboux_names(int m, bool with_t) {
    std::vector<std::string> names;
    if (with_t) names.push_back("t");
    if (m == 1) {
        names.push_back("q");
        names.push_back("p");
    } else {
        for (int i = 1; i <= m; ++i) names.push_back("q" + std::to_string(i));
        for (int i = 1; i <= m; ++i) names.push_back("p" + std::to_string(i));
    }
    return names;
}

// Extend a map on basis vectors (given by its images) factorwise.
Tensor factorwise(const Tensor& t, const std::vector<Tensor>& images, Kind out) {
    const Chart& ch = t.chart();
    if (t.degree() == 0) return t.with_kind(out);
    Tensor r(ch, out, t.degree());
    for (const auto& [J, g] : t.terms()) {
        Tensor w = Tensor::scalar(ch, out, ExPoly::constant(ch.dim(), 1));
        for (int j : J) w = wedge(w, images[j]);
        r = r + g * w;
    }
    return r;
}

std::vector<Tensor> flat_images(const Chart& ch,
                                const std::function<Tensor(const Tensor&)>& f,
                                Kind in) {
    std::vector<Tensor> images;
    for (int i = 0; i < ch.dim(); ++i) {
        Tensor b = (in == Kind::multivector) ? Tensor::basis_vector(ch, i)
                                             : Tensor::basis_form(ch, i);
        images.push_back(f(b));
    }
    return images;
}

}  // namespace

SymplecticModel symplectic_darboux(int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    Chart ch = Chart::make(darboux_names(m, false));
    int n = ch.dim();
    Tensor lam(ch, Kind::multivector, 2);
    Tensor om(ch, Kind::form, 2);
    for (int i = 0; i < m; ++i) {
        lam.add_term({i, m + i}, ExPoly::constant(n, 1));
        om.add_term({i, m + i}, ExPoly::constant(n, 1));
    }
    Tensor e(ch, Kind::multivector, 1);
    return SymplecticModel{m, JacobiStructure::make(ch, lam, e), om};
}

ContactModel contact_darboux(int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    Chart ch = Chart::make(darboux_names(m, true));
    int n = ch.dim();
    // indices: t = 0, q^i = i, p_i = m + i  (1-based i)
    Tensor eta(ch, Kind::form, 1);
    eta.add_term({0}, ExPoly::constant(n, 1));
    for (int i = 1; i <= m; ++i)
        eta.add_term({i}, -ExPoly::variable(n, m + i));
    Tensor lam(ch, Kind::multivector, 2);
    for (int i = 1; i <= m; ++i) {
        lam.add_term({i, m + i}, ExPoly::constant(n, 1));
        lam.add_term({0, m + i}, ExPoly::variable(n, m + i));
    }
    Tensor e = Tensor::basis_vector(ch, 0);
    return ContactModel{m, JacobiStructure::make(ch, lam, e), eta,
                        exterior_d(eta)};
}

LcsModel lcs_darboux(int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    Chart ch = Chart::make(darboux_names(m, false));
    int n = ch.dim();
    std::vector<Rational> plus(n, 0), minus(n, 0);
    plus[0] = 1;
    minus[0] = -1;
    ExPoly ef = ExPoly::term(1, std::vector<int>(n, 0), plus);
    ExPoly emf = ExPoly::term(1, std::vector<int>(n, 0), minus);
    Tensor sum_dqdp(ch, Kind::form, 2);
    Tensor sum_qp(ch, Kind::multivector, 2);
    for (int i = 0; i < m; ++i) {
        sum_dqdp.add_term({i, m + i}, ExPoly::constant(n, 1));
        sum_qp.add_term({i, m + i}, ExPoly::constant(n, 1));
    }
    Tensor omega = Tensor::basis_form(ch, 0);  // d q^1
    Tensor e(ch, Kind::multivector, 1);
    e.add_term({m}, -emf);  // -e^{-q1} d/dp_1
    return LcsModel{m, JacobiStructure::make(ch, emf * sum_qp, e),
                    ef * sum_dqdp, omega};
}

JacobiStructure quadratic_r2() {
    Chart ch = Chart::make({"x", "y"});
    Tensor lam(ch, Kind::multivector, 2);
    lam.add_term({0, 1}, ExPoly::variable(2, 0) * ExPoly::variable(2, 1));
    Tensor e(ch, Kind::multivector, 1);
    return JacobiStructure::make(ch, lam, e);
}

Tensor contact_flat(const ContactModel& model, const Tensor& mv) {
    const Chart& ch = model.j.chart;
    auto flat1 = [&](const Tensor& x) {
        return contract(x, model.deta) + pairing(model.eta, x) * model.eta;
    };
    return factorwise(mv, flat_images(ch, flat1, Kind::multivector), Kind::form);
}

Tensor contact_flat_inv(const ContactModel& model, const Tensor& form) {
    const Chart& ch = model.j.chart;
    auto inv1 = [&](const Tensor& a) {
        return pairing(a, model.j.e) * model.j.e - sharp(model.j.lambda, a);
    };
    return factorwise(form, flat_images(ch, inv1, Kind::form), Kind::multivector);
}

Tensor lcs_flat(const LcsModel& model, const Tensor& mv) {
    const Chart& ch = model.j.chart;
    auto flat1 = [&](const Tensor& x) { return contract(x, model.Omega); };
    return factorwise(mv, flat_images(ch, flat1, Kind::multivector), Kind::form);
}

Tensor lcs_flat_inv(const LcsModel& model, const Tensor& form) {
    const Chart& ch = model.j.chart;
    auto inv1 = [&](const Tensor& a) { return -sharp(model.j.lambda, a); };
    return factorwise(form, flat_images(ch, inv1, Kind::form), Kind::multivector);
}

}  // namespace jcalc
