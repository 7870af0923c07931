#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <jcalc/complexes.hpp>
#include <jcalc/liealg.hpp>
#include <jcalc/random_gen.hpp>

using namespace jcalc;

namespace {

JetCochain random_cochain(Rng& rng, const Chart& ch, int k) {
    if (k == 0) return JetCochain::make(ch, rng.expoly(ch.dim(), false));
    return JetCochain::make(k, rng.tensor(ch, Kind::multivector, k),
                            rng.tensor(ch, Kind::multivector, k - 1));
}

JetChain random_chain(Rng& rng, const Chart& ch, int k) {
    if (k == 0) return JetChain::make(ch, rng.expoly(ch.dim(), false));
    return JetChain::make(k, rng.tensor(ch, Kind::form, k),
                          rng.tensor(ch, Kind::form, k - 1));
}

std::vector<JacobiStructure> standard_models() {
    return {contact_darboux(1).j, lcs_darboux(1).j, quadratic_r2(),
            lie_poisson(builtin_algebra("so3"))};
}

}  // namespace

TEST_CASE("pair construction and validation") {
    Chart ch = contact_darboux(1).j.chart;
    CHECK_THROWS_AS(JetCochain::make(-1, Tensor(ch, Kind::multivector, 0),
                                     Tensor(ch, Kind::multivector, 0)),
                    std::invalid_argument);
    Tensor x = Tensor::basis_vector(ch, 0);
    CHECK_THROWS_AS(JetCochain::make(0, Tensor(ch, Kind::multivector, 0), x),
                    std::invalid_argument);
    // zero parts are normalized to the expected degree
    JetCochain c = JetCochain::make(2, Tensor(ch, Kind::multivector, 0),
                                    Tensor(ch, Kind::multivector, 0));
    CHECK(c.p.degree() == 2);
    CHECK(c.q.degree() == 1);
    CHECK(c.is_zero());
    // degree-0 scalar path survives the coboundary (regression)
    JetCochain f = JetCochain::make(ch, ExPoly::constant(ch.dim(), -2));
    CHECK_NOTHROW(sigma(contact_darboux(1).j, f));
}

TEST_CASE("multivector coboundary on basic inputs") {
    ContactModel cm = contact_darboux(1);
    const JacobiStructure& j = cm.j;
    const Chart& ch = j.chart;
    // the constant function is closed
    CHECK(sigma(j, JetCochain::make(ch, ExPoly::constant(ch.dim(), 1))).is_zero());
    // the structure pair maps to (Lambda ^ E, 0)
    JetCochain s = sigma(j, JetCochain::make(2, j.lambda, j.e));
    CHECK(s.p == wedge(j.lambda, j.e));
    CHECK(s.q.is_zero());
    // the two coboundary variants differ by E-wedge terms
    Tensor dp = Tensor::basis_vector(ch, 2);
    JetCochain c = JetCochain::make(1, dp, Tensor(ch, Kind::multivector, 0));
    JetCochain a = sigma(j, c);
    JetCochain b = sigma_tilde(j, c);
    CHECK(a.p - b.p == wedge(j.e, dp));
    CHECK(a.q == b.q);
}

TEST_CASE("coboundary squares to zero and kills the modular cocycle") {
    Rng rng(101);
    for (const auto& j : standard_models()) {
        ModularPair mp = modular_pair(j, Tensor::coordinate_volume(j.chart));
        JetCochain mc = JetCochain::make(
            1, mp.x, Tensor::scalar(j.chart, Kind::multivector, mp.g));
        CHECK(sigma(j, mc).is_zero());
        for (int it = 0; it < 15; ++it) {
            JetCochain c = random_cochain(rng, j.chart, rng.uniform(0, 2));
            CHECK(sigma(j, sigma(j, c)).is_zero());
            CHECK(sigma_tilde(j, sigma_tilde(j, c)).is_zero());
        }
    }
}

TEST_CASE("poisson coboundary") {
    Rng rng(103);
    JacobiStructure q = quadratic_r2();
    for (int it = 0; it < 30; ++it) {
        int k = rng.uniform(0, 2);
        JetCochain c = random_cochain(rng, q.chart, k);
        // with E = 0 the scalar part of the pair coboundary is the bracket
        CHECK(sigma(q, c).p == sigma_bar(q.lambda, c.p) + wedge(q.lambda, c.q));
        CHECK(sigma_bar(q.lambda, sigma_bar(q.lambda, c.p)).is_zero());
    }
    // a non-Poisson bivector is rejected
    JacobiStructure ct = contact_darboux(1).j;
    CHECK_THROWS_AS(sigma_bar(ct.lambda, ct.lambda), std::invalid_argument);
}

TEST_CASE("form boundary on basic inputs") {
    Rng rng(107);
    JacobiStructure q = quadratic_r2();
    const Chart& ch = q.chart;
    // degree 0 maps to zero
    CHECK(delta(q, JetChain::make(ch, ExPoly::variable(2, 0))).is_zero());
    // one-form part: i(Lambda) d(f dx + g dy) = xy (g_x - f_y)
    Tensor al(ch, Kind::form, 1);
    al.add_term({0}, ExPoly::variable(2, 1) * ExPoly::variable(2, 1));  // y^2 dx
    al.add_term({1}, ExPoly::variable(2, 0) * ExPoly::variable(2, 0));  // x^2 dy
    ExPoly x = ExPoly::variable(2, 0), y = ExPoly::variable(2, 1);
    CHECK(delta_bar(q.lambda, al) ==
          Tensor::scalar(ch, Kind::form, x * y * (x + x - y - y)));
    // two-form part: -d(xy h) for h dx^dy
    Tensor tw(ch, Kind::form, 2);
    tw.add_term({0, 1}, x);
    CHECK(delta_bar(q.lambda, tw) == -exterior_d(Tensor::scalar(ch, Kind::form,
                                                                x * x * y)));
    // componentwise form of the pair boundary on a Poisson structure
    for (int it = 0; it < 30; ++it) {
        int k = rng.uniform(1, 2);
        JetChain c = random_chain(rng, ch, k);
        JetChain d = delta(q, c);
        Rational sgn = (k % 2 == 0) ? 1 : -1;
        CHECK(d.alpha == delta_bar(q.lambda, c.alpha));
        CHECK(d.beta ==
              delta_bar(q.lambda, c.beta) + sgn * contract(q.lambda, c.alpha));
    }
}

TEST_CASE("form boundary squares to zero") {
    Rng rng(109);
    for (const auto& j : standard_models()) {
        for (int it = 0; it < 15; ++it) {
            int k = rng.uniform(1, std::min(3, j.chart.dim()));
            JetChain c = random_chain(rng, j.chart, k);
            CHECK(delta(j, delta(j, c)).is_zero());
        }
    }
}

TEST_CASE("scalar chains") {
    JacobiStructure j = contact_darboux(1).j;
    int n = j.chart.dim();
    ExPoly f = ExPoly::variable(n, 2);  // p
    ExPoly g = ExPoly::variable(n, 1);  // q
    ExPoly h = ExPoly::variable(n, 0);  // t
    // boundary of f (x) (g ^ h), expanded by hand for two factors
    HCESum expect;
    expect.add(-apply_vector(hamiltonian_field(j, g), f), {h});
    expect.add(apply_vector(hamiltonian_field(j, h), f), {g});
    expect.add(-f, {jacobi_bracket(j, g, h)});
    CHECK(delta_H(j, HCEChain{f, {g, h}}) == expect);
    // normalization: swapped factors flip the sign, repeats vanish
    HCESum s1;
    s1.add(f, {h, g});
    HCESum s2;
    s2.add(-f, {g, h});
    CHECK(s1 == s2);
    HCESum s3;
    s3.add(f, {g, g});
    CHECK(s3.is_zero());
    // factor slots are linear
    HCESum s4;
    s4.add(f, {g + h});
    HCESum s5;
    s5.add(f, {g});
    s5.add(f, {h});
    CHECK(s4 == s5);
}

TEST_CASE("scalar chain boundary squares to zero and commutes with the projection") {
    Rng rng(113);
    std::vector<JacobiStructure> models{contact_darboux(1).j, quadratic_r2()};
    for (const auto& j : models) {
        int n = j.chart.dim();
        for (int it = 0; it < 12; ++it) {
            int k = rng.uniform(1, 3);
            HCEChain c;
            c.f = rng.expoly(n, false);
            for (int s = 0; s < k; ++s) c.factors.push_back(rng.expoly(n, false));
            HCESum d = delta_H(j, c);
            CHECK(delta_H(j, d).is_zero());
            CHECK(delta(j, pi_k(j.chart, c)) == pi_k(j.chart, d, k - 1));
        }
    }
    // projection of a one-factor chain
    JacobiStructure q = quadratic_r2();
    ExPoly f = ExPoly::variable(2, 0), g = ExPoly::variable(2, 1);
    JetChain p1 = pi_k(q.chart, HCEChain{f, {g}});
    CHECK(p1.alpha == f * exterior_d(Tensor::scalar(q.chart, Kind::form, g)));
    CHECK(p1.beta == Tensor::scalar(q.chart, Kind::form, f * g));
}

TEST_CASE("pair cochains act as multilinear scalar cochains") {
    Rng rng(127);
    for (const auto& j : standard_models()) {
        int n = j.chart.dim();
        for (int it = 0; it < 12; ++it) {
            int k = rng.uniform(0, 2);
            JetCochain c = random_cochain(rng, j.chart, k);
            std::vector<ExPoly> fs;
            for (int s = 0; s < k + 1; ++s) fs.push_back(rng.expoly(n, false));
            CHECK(partialH_of_j(j, c, fs) == j_cochain_eval(sigma(j, c), fs));
        }
    }
}

TEST_CASE("deformed differential") {
    for (int m : {1, 2}) {
        LcsModel l = lcs_darboux(m);
        const Chart& ch = l.j.chart;
        ExPoly one = ExPoly::constant(ch.dim(), 1);
        JetChain u = d_tilde(l, JetChain::make(ch, one));
        CHECK(u.alpha == Rational(-(m + 1)) * l.omega);
        CHECK(u.beta.is_zero());
        JetChain v = d_tilde(
            l, JetChain::make(1, Tensor(ch, Kind::form, 1),
                              Tensor::scalar(ch, Kind::form, one)));
        CHECK(v.alpha == -l.Omega);
        CHECK(v.beta == Rational(m) * l.omega);
        Rng rng(131);
        for (int it = 0; it < 10; ++it) {
            JetChain c = random_chain(rng, ch, rng.uniform(1, 2 * m));
            CHECK(d_tilde(l, d_tilde(l, c)).is_zero());
        }
    }
}

TEST_CASE("star operator") {
    Rng rng(137);
    for (int m : {1, 2}) {
        LcsModel l = lcs_darboux(m);
        const Chart& ch = l.j.chart;
        Tensor vol = l.Omega;
        Rational fact = 1;
        for (int i = 1; i < m; ++i) {
            vol = wedge(vol, l.Omega);
            fact *= (i + 1);
        }
        vol = vol * Rational(1 / fact);
        CHECK(star_lcs(l, Tensor::scalar(ch, Kind::form,
                                         ExPoly::constant(ch.dim(), 1))) == vol);
        for (int it = 0; it < 10; ++it) {
            int k = rng.uniform(0, 2 * m);
            Tensor a = rng.tensor(ch, Kind::form, k);
            Tensor sa = star_lcs(l, a);
            Rational sgn = (k % 2 == 0) ? 1 : -1;
            CHECK(star_lcs(l, sa) == a);
            CHECK(contract(l.j.e, sa) == sgn * star_lcs(l, wedge(l.omega, a)));
            CHECK(lie_derivative(l.j.e, sa) ==
                  star_lcs(l, lie_derivative(l.j.e, a)));
            CHECK(contract(l.j.lambda, sa) == star_lcs(l, wedge(a, l.Omega)));
            // the starred form boundary as a first-order operator
            Tensor lhs = star_lcs(l, contract(l.j.lambda, exterior_d(a)) -
                                         exterior_d(contract(l.j.lambda, a)));
            Tensor rhs = exterior_d(sa) -
                         Rational(m - k + 1) * wedge(l.omega, sa) -
                         wedge(l.Omega, contract(l.j.e, sa));
            CHECK(lhs == -sgn * rhs);
        }
    }
}

TEST_CASE("pairing isomorphism intertwines the boundaries") {
    Rng rng(139);
    for (int m : {1, 2}) {
        LcsModel l = lcs_darboux(m);
        const Chart& ch = l.j.chart;
        // image of (0, 1)
        JetChain u = phi_tilde(
            l, JetChain::make(1, Tensor(ch, Kind::form, 1),
                              Tensor::scalar(ch, Kind::form,
                                             ExPoly::constant(ch.dim(), 1))));
        Tensor vol = star_lcs(l, Tensor::scalar(ch, Kind::form,
                                                ExPoly::constant(ch.dim(), 1)));
        CHECK(u.degree == 2 * m);
        CHECK(u.alpha == vol);
        CHECK(u.beta == contract(l.j.e, vol));
        for (int it = 0; it < 10; ++it) {
            int k = rng.uniform(1, 2 * m);
            JetChain c = random_chain(rng, ch, k);
            Rational sgn = (k % 2 == 0) ? 1 : -1;
            JetChain lhs = phi_tilde(l, delta(l.j, c));
            JetChain rhs = d_tilde(l, phi_tilde(l, c));
            CHECK(lhs == JetChain::make(rhs.degree, sgn * rhs.alpha,
                                        sgn * rhs.beta));
            CHECK(phi_tilde_inv(l, phi_tilde(l, c)) == c);
        }
    }
}

TEST_CASE("contact chain isomorphism") {
    Rng rng(149);
    ContactModel cm = contact_darboux(1);
    const Chart& ch = cm.j.chart;
    // the contact form pairs to the constant -1
    JetCochain fe = contact_F(cm, JetChain::make(1, cm.eta,
                                                 Tensor(ch, Kind::form, 0)));
    CHECK(fe.p.is_zero());
    CHECK(fe.q.scalar_value() == ExPoly::constant(ch.dim(), -1));
    for (int it = 0; it < 20; ++it) {
        int k = rng.uniform(1, 2);
        JetChain c = random_chain(rng, ch, k);
        // F (-d (+) d) = sigma F
        JetCochain lhs = contact_F(
            cm, JetChain::make(k + 1, -exterior_d(c.alpha),
                               exterior_d(c.beta)));
        CHECK(lhs == sigma(cm.j, contact_F(cm, c)));
        CHECK(contact_G(cm, contact_F(cm, c)) == c);
    }
}

TEST_CASE("contact contraction identities and homotopy") {
    Rng rng(151);
    for (int m : {1, 2}) {
        ContactModel cm = contact_darboux(m);
        const Chart& ch = cm.j.chart;
        for (int it = 0; it < 10; ++it) {
            int k = rng.uniform(0, 2 * m);
            Tensor a = rng.tensor(ch, Kind::form, k);
            CHECK(contract(cm.j.lambda, wedge(cm.eta, a)) ==
                  wedge(cm.eta, contract(cm.j.lambda, a)));
            CHECK(contract(cm.j.lambda, wedge(a, cm.deta)) -
                      wedge(contract(cm.j.lambda, a), cm.deta) ==
                  Rational(m - k) * a + wedge(cm.eta, contract(cm.j.e, a)));
            int kk = rng.uniform(1, 2 * m);
            JetChain cyc = delta(cm.j, random_chain(rng, ch, kk));
            JetChain h = contact_homotopy(cm, cyc);
            CHECK(delta(cm.j, h) == cyc);
        }
        // non-cycles are rejected
        CHECK_THROWS_AS(
            contact_homotopy(
                cm, JetChain::make(1, cm.eta, Tensor(ch, Kind::form, 0))),
            std::invalid_argument);
    }
}

TEST_CASE("lcs sequence maps") {
    Rng rng(157);
    LcsModel l = lcs_darboux(1);
    const Chart& ch = l.j.chart;
    // the Lee form maps to (-E, 0)
    JetCochain fw = lcs_F(l, l.omega);
    CHECK(fw.p == -l.j.e);
    CHECK(fw.q.is_zero());
    for (int it = 0; it < 20; ++it) {
        Tensor a = rng.tensor(ch, Kind::form, rng.uniform(0, 1));
        JetCochain fa = lcs_F(l, a);
        JetCochain fd = lcs_F(l, exterior_d(a));
        CHECK(sigma(l.j, fa) == JetCochain::make(fd.degree, -fd.p, -fd.q));
        CHECK(lcs_G(l, fa).is_zero());
        int k = rng.uniform(1, 2);
        JetCochain c = random_cochain(rng, ch, k);
        CHECK(lcs_G(l, sigma(l.j, c)) == d_omega(l.omega, lcs_G(l, c)));
    }
}

TEST_CASE("one-jet lift") {
    Rng rng(163);
    ContactModel cm = contact_darboux(1);
    const JacobiStructure& j = cm.j;
    const Chart& ch = j.chart;  // (t, q, p); the lift appends t1
    int n = ch.dim();
    // scalars lift unchanged
    ExPoly f = ExPoly::variable(n, 1);
    Tensor lf = lift_pair(JetCochain::make(ch, f));
    CHECK(lf.chart().dim() == n + 1);
    CHECK(lf.scalar_value() == f.extended(n + 1));
    const Chart& big = lf.chart();
    std::vector<Rational> freq(n + 1, 0);
    freq[n] = -1;
    ExPoly et = ExPoly::term(1, std::vector<int>(n + 1, 0), freq);
    // (d/dq, 0) lifts to e^{-t1} d/dq
    Tensor l1 = lift_pair(JetCochain::make(1, Tensor::basis_vector(ch, 1),
                                           Tensor(ch, Kind::multivector, 0)));
    CHECK(l1 == et * Tensor::basis_vector(big, 1));
    // (0, 1) lifts to e^{-t1} d/dt1
    Tensor l2 = lift_pair(JetCochain::make(
        1, Tensor(ch, Kind::multivector, 1),
        Tensor::scalar(ch, Kind::multivector, ExPoly::constant(n, 1))));
    CHECK(l2 == et * Tensor::basis_vector(big, n));
    // lifts scale by -degree along the extra coordinate and intertwine the
    // coboundary with the one of the associated homogeneous Poisson structure
    JacobiStructure pz = poissonize(j);
    for (int it = 0; it < 15; ++it) {
        int k = rng.uniform(0, 2);
        JetCochain c = random_cochain(rng, ch, k);
        Tensor lc = lift_pair(c);
        CHECK(lie_derivative(Tensor::basis_vector(big, n), lc) ==
              Rational(-k) * lc);
        CHECK(lift_pair(sigma(j, c)) == sigma_bar(pz.lambda, lc));
    }
}

TEST_CASE("pair wedge and interior product") {
    Rng rng(167);
    SymplecticModel sm = symplectic_darboux(1);
    const JacobiStructure& j = sm.j;
    const Chart& ch = j.chart;
    for (int it = 0; it < 10; ++it) {
        // wedge of two pure-form pairs stays a pure-form pair
        int r = rng.uniform(0, 1), s = rng.uniform(0, 1);
        Tensor a = rng.tensor(ch, Kind::form, r);
        Tensor b = rng.tensor(ch, Kind::form, s);
        JetChain w = jet_wedge(JetChain::make(r, a, Tensor(ch, Kind::form, 0)),
                               JetChain::make(s, b, Tensor(ch, Kind::form, 0)));
        CHECK(w.alpha == wedge(a, b));
        CHECK(w.beta.is_zero());
    }
    // contracting a closed degree-1 cochain into the volume chain produces a
    // cycle of the form boundary
    int n = ch.dim();
    Tensor nu = Tensor::coordinate_volume(ch);
    JetChain top = JetChain::make(n + 1, Tensor(ch, Kind::form, n + 1), nu);
    CHECK(delta(j, top).is_zero());
    ModularPair mp = modular_pair(j, nu);
    JetCochain mc = JetCochain::make(
        1, mp.x, Tensor::scalar(ch, Kind::multivector, mp.g));
    CHECK(delta(j, jet_interior(mc, top)).is_zero());
    for (int it = 0; it < 10; ++it) {
        JetCochain c = sigma(j, JetCochain::make(ch, rng.expoly(n, false)));
        REQUIRE(sigma(j, c).is_zero());
        CHECK(delta(j, jet_interior(c, top)).is_zero());
    }
}
