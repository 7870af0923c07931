#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <jcalc/liealg.hpp>
#include <jcalc/random_gen.hpp>

using namespace jcalc;

namespace {

Tensor basis_theta(const Chart& ch, std::vector<int> idx) {
    Tensor t(ch, Kind::form, static_cast<int>(idx.size()));
    t.add_term(std::move(idx), ExPoly::constant(ch.dim(), 1));
    return t;
}

Tensor random_constant_form(Rng& rng, const Chart& ch, int degree) {
    Tensor t(ch, Kind::form, degree);
    if (degree > ch.dim()) return t;
    for (int k = 0; k < 2; ++k) {
        std::vector<int> idx;
        while (static_cast<int>(idx.size()) < degree) {
            int i = rng.uniform(0, ch.dim() - 1);
            if (std::find(idx.begin(), idx.end(), i) == idx.end())
                idx.push_back(i);
        }
        t.add_term(std::move(idx),
                   ExPoly::constant(ch.dim(), rng.coefficient()));
    }
    return t;
}

}  // namespace

TEST_CASE("structure constant validation") {
    CHECK_THROWS_AS(LieAlgebra::make(3, {{1, 2, 3, 1}, {1, 3, 1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(LieAlgebra::make(2, {{2, 1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(builtin_algebra("nope"), std::invalid_argument);
    CHECK_NOTHROW(builtin_algebra("sl2"));
    CHECK(builtin_algebra("abelian5").dim() == 5);
}

TEST_CASE("modular characters") {
    auto mu_aff1 = modular_character(builtin_algebra("aff1"));
    CHECK(mu_aff1 == std::vector<Rational>{1, 0});
    for (const char* name : {"so3", "sl2", "h3", "kt"}) {
        for (const Rational& v : modular_character(builtin_algebra(name)))
            CHECK(v == 0);
    }
}

TEST_CASE("scalar differential squares to zero") {
    Rng rng(41);
    for (const char* name : {"h3", "kt", "so3", "sl2", "aff1"}) {
        LieAlgebra g = builtin_algebra(name);
        Chart ch = dual_chart(g);
        for (int it = 0; it < 50; ++it) {
            Tensor a = random_constant_form(rng, ch, rng.uniform(0, g.dim() - 1));
            CHECK(ce_d(g, ce_d(g, a)).is_zero());
        }
    }
}

TEST_CASE("scalar differential examples") {
    LieAlgebra h3 = builtin_algebra("h3");
    Chart ch = dual_chart(h3);
    // d theta^3 = -theta^1 ^ theta^2, d theta^1 = d theta^2 = 0
    CHECK(ce_d(h3, basis_theta(ch, {2})) == -basis_theta(ch, {0, 1}));
    CHECK(ce_d(h3, basis_theta(ch, {0})).is_zero());
    CHECK(ce_d(h3, basis_theta(ch, {1})).is_zero());
}

TEST_CASE("cohomology dimensions") {
    CHECK(ce_betti(builtin_algebra("h3")) == std::vector<int>{1, 2, 2, 1});
    CHECK(ce_betti(builtin_algebra("kt")) == std::vector<int>{1, 3, 4, 3, 1});
    CHECK(ce_betti(builtin_algebra("abelian4")) ==
          std::vector<int>{1, 4, 6, 4, 1});
    CHECK(ce_betti(builtin_algebra("so3")) == std::vector<int>{1, 0, 0, 1});
    CHECK(ce_betti(builtin_algebra("sl2")) == std::vector<int>{1, 0, 0, 1});
    CHECK(ce_betti(builtin_algebra("aff1")) == std::vector<int>{1, 1, 0});
}

TEST_CASE("linear structures on the dual") {
    for (const char* name : {"so3", "sl2", "h3", "kt", "aff1"}) {
        JacobiStructure lp = lie_poisson(builtin_algebra(name));
        CHECK(verify_jacobi(lp).pass);
    }
    JacobiStructure so3 = lie_poisson(builtin_algebra("so3"));
    Tensor expect(so3.chart, Kind::multivector, 2);
    expect.add_term({0, 1}, ExPoly::variable(3, 2));
    expect.add_term({0, 2}, -ExPoly::variable(3, 1));
    expect.add_term({1, 2}, ExPoly::variable(3, 0));
    CHECK(so3.lambda == expect);
    // the Euler field rescales the structure by -1
    Tensor a(so3.chart, Kind::multivector, 1);
    for (int i = 0; i < 3; ++i) a.add_term({i}, ExPoly::variable(3, i));
    CHECK(lie_derivative(a, so3.lambda) == -so3.lambda);
}

TEST_CASE("modular field of a linear structure is the character") {
    for (const char* name : {"aff1", "so3", "sl2", "h3"}) {
        LieAlgebra g = builtin_algebra(name);
        JacobiStructure lp = lie_poisson(g);
        Tensor nu = Tensor::coordinate_volume(lp.chart);
        Tensor x = modular_vector_field(lp, nu);
        std::vector<Rational> mu = modular_character(g);
        Tensor expect(lp.chart, Kind::multivector, 1);
        for (int i = 0; i < g.dim(); ++i)
            if (mu[i] != 0)
                expect.add_term({i}, ExPoly::constant(g.dim(), mu[i]));
        CHECK(x == expect);
    }
}

TEST_CASE("unit sphere structures") {
    JacobiStructure so3 = sphere_structure(builtin_algebra("so3"));
    CHECK(so3.e.is_zero());
    CHECK(verify_jacobi(so3).pass);

    JacobiStructure h3 = sphere_structure(builtin_algebra("h3"));
    Tensor expect_e(h3.chart, Kind::multivector, 1);
    expect_e.add_term({1}, ExPoly::variable(3, 0) * ExPoly::variable(3, 2));
    expect_e.add_term({0}, -(ExPoly::variable(3, 1) * ExPoly::variable(3, 2)));
    CHECK(h3.e == expect_e);
    CHECK(verify_jacobi(h3).pass);
    REQUIRE(h3.constraint.has_value());
    ExPoly c = *h3.constraint;
    ExPoly expect_c = -ExPoly::constant(3, 1);
    for (int i = 0; i < 3; ++i)
        expect_c += ExPoly::variable(3, i) * ExPoly::variable(3, i);
    CHECK(c == expect_c);
}

TEST_CASE("filtered dimensions for invariant symplectic scalars") {
    LieAlgebra kt = builtin_algebra("kt");
    Chart ch = dual_chart(kt);
    Tensor om = basis_theta(ch, {0, 2}) + basis_theta(ch, {1, 3});
    CHECK(nilmanifold_lj_dims(kt, om) == std::vector<int>{1, 3, 4, 4, 3, 1});

    LieAlgebra ab4 = builtin_algebra("abelian4");
    Chart ch4 = dual_chart(ab4);
    Tensor om4 = basis_theta(ch4, {0, 1}) + basis_theta(ch4, {2, 3});
    CHECK(nilmanifold_lj_dims(ab4, om4) == std::vector<int>{1, 4, 5, 5, 4, 1});

    // non-closed scalars are rejected
    CHECK_THROWS_AS(nilmanifold_lj_dims(kt, basis_theta(ch, {2, 3})),
                    std::invalid_argument);
}
