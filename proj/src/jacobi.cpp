#include <jcalc/jacobi.hpp>

#include <algorithm>
#include <stdexcept>

namespace jcalc {

namespace {

ExPoly divide_by_unit(const ExPoly& p, const ExPoly& unit) {
    return p * inverse_unit(unit);
}

}  // namespace

JacobiStructure JacobiStructure::make(Chart chart, Tensor lambda, Tensor e,
                                      std::optional<ExPoly> constraint) {
    if (lambda.kind() != Kind::multivector || lambda.degree() != 2)
        throw std::invalid_argument("lambda must be a bivector");
    if (e.kind() != Kind::multivector || e.degree() != 1)
        throw std::invalid_argument("e must be a vector field");
    if (lambda.chart() != chart || e.chart() != chart)
        throw std::invalid_argument("chart mismatch");
    if (constraint && constraint->dim() != chart.dim())
        throw std::invalid_argument("constraint dimension mismatch");
    return JacobiStructure{std::move(chart), std::move(lambda), std::move(e),
                           std::move(constraint)};
}

JacobiReport verify_jacobi(const JacobiStructure& j) {
    Tensor r1 = schouten(j.lambda, j.lambda) - Rational(2) * wedge(j.e, j.lambda);
    Tensor r2 = schouten(j.e, j.lambda);
    if (j.constraint) {
        r1 = r1.reduced_mod(*j.constraint);
        r2 = r2.reduced_mod(*j.constraint);
    }
    return JacobiReport{r1.is_zero() && r2.is_zero(), r1, r2};
}

ExPoly jacobi_bracket(const JacobiStructure& j, const ExPoly& f, const ExPoly& g) {
    Tensor df = differential(j.chart, f), dg = differential(j.chart, g);
    ExPoly lam = eval_multivector(j.lambda, {df, dg});
    return lam + f * apply_vector(j.e, g) - g * apply_vector(j.e, f);
}

Tensor hamiltonian_field(const JacobiStructure& j, const ExPoly& f) {
    return sharp(j.lambda, differential(j.chart, f)) + f * j.e;
}

Tensor anchor(const JacobiStructure& j, const Section1Jet& s) {
    return sharp(j.lambda, s.alpha) + s.f * j.e;
}

Section1Jet algebroid_bracket(const JacobiStructure& j, const Section1Jet& s1,
                              const Section1Jet& s2) {
    const Tensor& alpha = s1.alpha;
    const Tensor& beta = s2.alpha;
    const ExPoly& f = s1.f;
    const ExPoly& g = s2.f;
    Tensor sa = sharp(j.lambda, alpha), sb = sharp(j.lambda, beta);
    ExPoly lab = eval_multivector(j.lambda, {alpha, beta});
    Tensor gamma = lie_derivative(sa, beta) - lie_derivative(sb, alpha) -
                   differential(j.chart, lab) + f * lie_derivative(j.e, beta) -
                   g * lie_derivative(j.e, alpha) -
                   contract(j.e, wedge(alpha, beta));
    ExPoly h = pairing(alpha, sb) + apply_vector(sa, g) - apply_vector(sb, f) +
               f * apply_vector(j.e, g) - g * apply_vector(j.e, f);
    return Section1Jet{gamma, h};
}

JacobiStructure conformal_change(const JacobiStructure& j, const ExPoly& a) {
    if (!a.is_unit() || a.terms().begin()->second <= 0)
        throw std::invalid_argument("conformal factor must be a positive unit");
    Tensor da = differential(j.chart, a);
    return JacobiStructure::make(j.chart, a * j.lambda,
                                 sharp(j.lambda, da) + a * j.e, j.constraint);
}

Section1Jet conformal_iso(const ExPoly& a, const Section1Jet& s) {
    if (!a.is_unit() || a.terms().begin()->second <= 0)
        throw std::invalid_argument("conformal factor must be a positive unit");
    ExPoly inv = inverse_unit(a);
    Tensor da = differential(s.alpha.chart(), a);
    return Section1Jet{inv * s.alpha - (s.f * inv * inv) * da, s.f * inv};
}

JacobiStructure poissonize(const JacobiStructure& j) {
    std::vector<std::string> names = j.chart.names;
    std::string tname = "t";
    int suffix = 0;
    while (std::find(names.begin(), names.end(), tname) != names.end())
        tname = "t" + std::to_string(++suffix);
    names.push_back(tname);
    Chart big = Chart::make(names);
    int n = big.dim();
    Tensor lam = j.lambda.extended(big);
    Tensor e = j.e.extended(big);
    Tensor dt = Tensor::basis_vector(big, n - 1);
    std::vector<Rational> freq(n, 0);
    freq[n - 1] = -1;
    ExPoly emt = ExPoly::term(1, std::vector<int>(n, 0), std::move(freq));
    Tensor zero_e(big, Kind::multivector, 1);
    return JacobiStructure::make(big, emt * (lam + wedge(dt, e)), zero_e);
}

Tensor modular_vector_field(const JacobiStructure& j, const Tensor& nu) {
    int n = j.chart.dim();
    if (nu.degree() != n || nu.kind() != Kind::form)
        throw std::invalid_argument("nu must be a top-degree form");
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    ExPoly nc = nu.coeff(all);
    if (!nc.is_unit())
        throw std::invalid_argument("nu must have a unit coefficient");
    Tensor w = exterior_d(contract(j.lambda, nu));
    Tensor x(j.chart, Kind::multivector, 1);
    for (int i = 0; i < n; ++i) {
        Tensor top = wedge(Tensor::basis_form(j.chart, i), w);
        ExPoly comp = top.coeff(all);
        if (!comp.is_zero()) x.add_term({i}, divide_by_unit(comp, nc));
    }
    return x;
}

ExPoly divergence(const JacobiStructure& j, const Tensor& nu) {
    int n = j.chart.dim();
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    ExPoly nc = nu.coeff(all);
    if (!nc.is_unit())
        throw std::invalid_argument("nu must have a unit coefficient");
    Tensor l = lie_derivative(j.e, nu);
    return divide_by_unit(l.coeff(all), nc);
}

ModularPair modular_pair(const JacobiStructure& j, const Tensor& nu) {
    int n = j.chart.dim();
    Tensor x = modular_vector_field(j, nu);
    return ModularPair{x - Rational(n) * j.e, divergence(j, nu)};
}

NablaReport nabla_check(const JacobiStructure& j, const Tensor& nu,
                        const Section1Jet& s) {
    int n = j.chart.dim();
    Tensor ie_nu = contract(j.e, nu);
    Tensor lhs = s.f * exterior_d(ie_nu) +
                 wedge(s.alpha, exterior_d(contract(j.lambda, nu)) -
                                    Rational(n) * ie_nu);
    ModularPair mp = modular_pair(j, nu);
    ExPoly factor = s.f * mp.g + pairing(s.alpha, mp.x);
    Tensor rhs = factor * nu;
    return NablaReport{lhs == rhs, lhs, rhs};
}

}  // namespace jcalc
