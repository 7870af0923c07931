#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <jcalc/liealg.hpp>
#include <jcalc/models.hpp>
#include <jcalc/random_gen.hpp>

using namespace jcalc;

namespace {

std::vector<JacobiStructure> model_structures() {
    std::vector<JacobiStructure> out;
    out.push_back(symplectic_darboux(1).j);
    out.push_back(contact_darboux(1).j);
    out.push_back(contact_darboux(2).j);
    out.push_back(lcs_darboux(1).j);
    out.push_back(lcs_darboux(2).j);
    out.push_back(quadratic_r2());
    out.push_back(lie_poisson(builtin_algebra("so3")));
    out.push_back(lie_poisson(builtin_algebra("aff1")));
    return out;
}

ExPoly reduce_opt(const JacobiStructure& j, const ExPoly& p) {
    return j.constraint ? reduce_mod_hypersurface(p, *j.constraint) : p;
}

}  // namespace

TEST_CASE("structure verification on the model structures") {
    for (const auto& j : model_structures()) CHECK(verify_jacobi(j).pass);
    CHECK(verify_jacobi(sphere_structure(builtin_algebra("so3"))).pass);
    CHECK(verify_jacobi(sphere_structure(builtin_algebra("h3"))).pass);
}

TEST_CASE("structure verification rejects a non-example") {
    Chart ch = Chart::make({"x", "y", "z"});
    Tensor lam = wedge(Tensor::basis_vector(ch, 0), Tensor::basis_vector(ch, 1));
    Tensor e = Tensor::basis_vector(ch, 2);
    JacobiReport rep = verify_jacobi(JacobiStructure::make(ch, lam, e));
    CHECK_FALSE(rep.pass);
    CHECK(rep.r2.is_zero());
    // r1 = -2 E ^ Lambda = -2 d/dz ^ d/dx ^ d/dy = -2 d/dx^d/dy^d/dz
    Tensor expect(ch, Kind::multivector, 3);
    expect.add_term({0, 1, 2}, ExPoly::constant(3, -2));
    CHECK(rep.r1 == expect);
}

TEST_CASE("bracket examples") {
    ContactModel c = contact_darboux(1);
    int n = 3;
    ExPoly t = ExPoly::variable(n, 0), q = ExPoly::variable(n, 1),
           p = ExPoly::variable(n, 2);
    CHECK(jacobi_bracket(c.j, q, p) == ExPoly::constant(n, 1));
    CHECK(jacobi_bracket(c.j, t, q) == -q);
    CHECK(jacobi_bracket(c.j, t, p).is_zero());
    // {1, g} = E(g)
    Rng rng(31);
    for (int it = 0; it < 50; ++it) {
        ExPoly g = rng.expoly(n);
        CHECK(jacobi_bracket(c.j, ExPoly::constant(n, 1), g) ==
              apply_vector(c.j.e, g));
    }

    JacobiStructure so3 = lie_poisson(builtin_algebra("so3"));
    CHECK(jacobi_bracket(so3, ExPoly::variable(3, 0), ExPoly::variable(3, 1)) ==
          ExPoly::variable(3, 2));
}

TEST_CASE("hamiltonian field examples") {
    ContactModel c = contact_darboux(1);
    const Chart& ch = c.j.chart;
    // X_t = p d/dp + t d/dt
    Tensor xt = hamiltonian_field(c.j, ExPoly::variable(3, 0));
    Tensor expect(ch, Kind::multivector, 1);
    expect.add_term({0}, ExPoly::variable(3, 0));
    expect.add_term({2}, ExPoly::variable(3, 2));
    CHECK(xt == expect);
    // X_1 = E
    CHECK(hamiltonian_field(c.j, ExPoly::constant(3, 1)) == c.j.e);
}

TEST_CASE("hamiltonian fields represent the bracket") {
    Rng rng(32);
    for (const auto& j : model_structures()) {
        int n = j.chart.dim();
        for (int it = 0; it < 100; ++it) {
            ExPoly f = rng.expoly(n, false);
            ExPoly g = rng.expoly(n, false);
            Tensor lhs = schouten(hamiltonian_field(j, f), hamiltonian_field(j, g));
            Tensor rhs = hamiltonian_field(j, jacobi_bracket(j, f, g));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("bracket satisfies the Jacobi identity") {
    Rng rng(33);
    for (const auto& j : model_structures()) {
        int n = j.chart.dim();
        for (int it = 0; it < 50; ++it) {
            ExPoly f = rng.expoly(n, false), g = rng.expoly(n, false),
                   h = rng.expoly(n, false);
            ExPoly cyc = jacobi_bracket(j, jacobi_bracket(j, f, g), h) +
                         jacobi_bracket(j, jacobi_bracket(j, g, h), f) +
                         jacobi_bracket(j, jacobi_bracket(j, h, f), g);
            CHECK(cyc.is_zero());
        }
    }
}

TEST_CASE("bracket on the constrained sphere structures") {
    for (const char* name : {"so3", "h3"}) {
        JacobiStructure j = sphere_structure(builtin_algebra(name));
        Rng rng(34);
        for (int it = 0; it < 50; ++it) {
            ExPoly f = rng.expoly(3, false), g = rng.expoly(3, false),
                   h = rng.expoly(3, false);
            ExPoly cyc = jacobi_bracket(j, jacobi_bracket(j, f, g), h) +
                         jacobi_bracket(j, jacobi_bracket(j, g, h), f) +
                         jacobi_bracket(j, jacobi_bracket(j, h, f), g);
            CHECK(reduce_opt(j, cyc).is_zero());
        }
    }
}

TEST_CASE("first-jet bracket axioms") {
    Rng rng(35);
    for (const auto& j : model_structures()) {
        int n = j.chart.dim();
        for (int it = 0; it < 25; ++it) {
            Section1Jet s1{rng.tensor(j.chart, Kind::form, 1), rng.expoly(n, false)};
            Section1Jet s2{rng.tensor(j.chart, Kind::form, 1), rng.expoly(n, false)};
            Section1Jet s3{rng.tensor(j.chart, Kind::form, 1), rng.expoly(n, false)};
            Section1Jet b12 = algebroid_bracket(j, s1, s2);
            Section1Jet b21 = algebroid_bracket(j, s2, s1);
            CHECK(b12.alpha == -b21.alpha);
            CHECK(b12.f == -b21.f);
            // Jacobi identity
            Section1Jet c1 = algebroid_bracket(j, b12, s3);
            Section1Jet c2 = algebroid_bracket(j, algebroid_bracket(j, s2, s3), s1);
            Section1Jet c3 = algebroid_bracket(j, algebroid_bracket(j, s3, s1), s2);
            CHECK((c1.alpha + c2.alpha + c3.alpha).is_zero());
            CHECK((c1.f + c2.f + c3.f).is_zero());
            // anchor is a homomorphism
            CHECK(anchor(j, b12) ==
                  schouten(anchor(j, s1), anchor(j, s2)));
        }
    }
}

TEST_CASE("first jets of functions form a subalgebra") {
    Rng rng(36);
    for (const auto& j : model_structures()) {
        int n = j.chart.dim();
        for (int it = 0; it < 50; ++it) {
            ExPoly f = rng.expoly(n, false), g = rng.expoly(n, false);
            Section1Jet jf{differential(j.chart, f), f};
            Section1Jet jg{differential(j.chart, g), g};
            Section1Jet b = algebroid_bracket(j, jf, jg);
            ExPoly fg = jacobi_bracket(j, f, g);
            CHECK(b.f == fg);
            CHECK(b.alpha == differential(j.chart, fg));
            // the anchor of a first jet is the hamiltonian field
            CHECK(anchor(j, jf) == hamiltonian_field(j, f));
        }
    }
}

TEST_CASE("conformal change produces a structure with matched anchor") {
    Rng rng(37);
    for (const auto& j : model_structures()) {
        int n = j.chart.dim();
        std::vector<Rational> freq(n, 0);
        freq[0] = 1;
        ExPoly a = ExPoly::term(rat(3, 2), std::vector<int>(n, 0), freq);
        JacobiStructure ja = conformal_change(j, a);
        CHECK(verify_jacobi(ja).pass);
        for (int it = 0; it < 25; ++it) {
            Section1Jet s{rng.tensor(j.chart, Kind::form, 1), rng.expoly(n, false)};
            // anchors agree through the section isomorphism
            CHECK(anchor(ja, conformal_iso(a, s)) == anchor(j, s));
        }
        // inverse factor restores the structure
        JacobiStructure back = conformal_change(ja, inverse_unit(a));
        CHECK(back.lambda == j.lambda);
        CHECK(back.e == j.e);
    }
}

TEST_CASE("conformal section map is a bracket isomorphism") {
    Rng rng(38);
    for (const auto& j : model_structures()) {
        int n = j.chart.dim();
        std::vector<Rational> freq(n, 0);
        freq[0] = -1;
        ExPoly a = ExPoly::term(2, std::vector<int>(n, 0), freq);
        JacobiStructure ja = conformal_change(j, a);
        for (int it = 0; it < 25; ++it) {
            Section1Jet s1{rng.tensor(j.chart, Kind::form, 1), rng.expoly(n, false)};
            Section1Jet s2{rng.tensor(j.chart, Kind::form, 1), rng.expoly(n, false)};
            Section1Jet lhs = conformal_iso(a, algebroid_bracket(j, s1, s2));
            Section1Jet rhs =
                algebroid_bracket(ja, conformal_iso(a, s1), conformal_iso(a, s2));
            CHECK(lhs.alpha == rhs.alpha);
            CHECK(lhs.f == rhs.f);
        }
    }
}

TEST_CASE("conformal factor validation") {
    Chart ch = Chart::make({"x", "y"});
    JacobiStructure j = quadratic_r2();
    CHECK_THROWS_AS(conformal_change(j, ExPoly::variable(2, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(conformal_change(j, ExPoly::constant(2, -1)),
                    std::invalid_argument);
}

TEST_CASE("poissonization") {
    for (const auto& j : model_structures()) {
        JacobiStructure p = poissonize(j);
        CHECK(p.chart.dim() == j.chart.dim() + 1);
        CHECK(p.e.is_zero());
        CHECK(schouten(p.lambda, p.lambda).is_zero());
        CHECK(verify_jacobi(p).pass);
    }
    // name collision for the extra coordinate is avoided
    ContactModel c = contact_darboux(1);  // chart (t, q, p)
    JacobiStructure p = poissonize(c.j);
    CHECK(p.chart.names.back() == "t1");
}

TEST_CASE("modular data examples") {
    // quadratic plane: X^nu = x d/dx - y d/dy for nu = dx ^ dy
    JacobiStructure quad = quadratic_r2();
    Tensor nu = Tensor::coordinate_volume(quad.chart);
    Tensor x = modular_vector_field(quad, nu);
    Tensor expect(quad.chart, Kind::multivector, 1);
    expect.add_term({0}, ExPoly::variable(2, 0));
    expect.add_term({1}, -ExPoly::variable(2, 1));
    CHECK(x == expect);
    CHECK(divergence(quad, nu).is_zero());

    // contact m=1 with nu = dt^dq^dp = eta^deta: X^nu = E, pair = (-2E, 0)
    ContactModel c = contact_darboux(1);
    Tensor nuc = Tensor::coordinate_volume(c.j.chart);
    CHECK(wedge(c.eta, c.deta) == nuc);
    CHECK(modular_vector_field(c.j, nuc) == c.j.e);
    ModularPair mp = modular_pair(c.j, nuc);
    CHECK(mp.x == Rational(-2) * c.j.e);
    CHECK(mp.g.is_zero());
}

TEST_CASE("lcs modular pair is -(m+1) times the model vector field") {
    for (int m : {1, 2}) {
        LcsModel l = lcs_darboux(m);
        Tensor nu = l.Omega;
        for (int i = 1; i < m; ++i) nu = wedge(nu, l.Omega);
        ModularPair mp = modular_pair(l.j, nu);
        CHECK(mp.x == Rational(-(m + 1)) * l.j.e);
        CHECK(mp.g.is_zero());
    }
}

TEST_CASE("modular pair satisfies its defining pairing identity") {
    Rng rng(39);
    for (const auto& j : model_structures()) {
        int n = j.chart.dim();
        Tensor nu = Tensor::coordinate_volume(j.chart);
        for (int it = 0; it < 50; ++it) {
            Section1Jet s{rng.tensor(j.chart, Kind::form, 1, false),
                          rng.expoly(n, false)};
            CHECK(nabla_check(j, nu, s).pass);
        }
    }
}

TEST_CASE("modular field input validation") {
    JacobiStructure quad = quadratic_r2();
    Tensor bad = ExPoly::variable(2, 0) * Tensor::coordinate_volume(quad.chart);
    CHECK_THROWS_AS(modular_vector_field(quad, bad), std::invalid_argument);
    CHECK_THROWS_AS(modular_vector_field(quad, Tensor::basis_form(quad.chart, 0)),
                    std::invalid_argument);
}
