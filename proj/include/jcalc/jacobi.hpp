/*
 * jacobi.hpp
 * ----------
 * Jacobi structures (Lambda, E) on a chart: verification, bracket,
 * hamiltonian fields, the first-jet Lie algebroid, conformal changes,
 * poissonization, and modular data.
 */
#pragma once

#include <jcalc/tensor.hpp>

#include <optional>

namespace jcalc {

struct JacobiStructure {
    Chart chart;
    Tensor lambda;  // bivector
    Tensor e;       // vector field
    std::optional<ExPoly> constraint;  // identities checked modulo (constraint)

    static JacobiStructure make(Chart chart, Tensor lambda, Tensor e,
                                std::optional<ExPoly> constraint = std::nullopt);
};

struct Section1Jet {
    Tensor alpha;  // 1-form
    ExPoly f;
};

struct ModularPair {
    Tensor x;  // vector field
    ExPoly g;
};

struct JacobiReport {
    bool pass = false;
    Tensor r1;  // [Lambda,Lambda] - 2 E ^ Lambda (reduced when constrained)
    Tensor r2;  // [E, Lambda]
};

JacobiReport verify_jacobi(const JacobiStructure& j);

ExPoly jacobi_bracket(const JacobiStructure& j, const ExPoly& f, const ExPoly& g);

Tensor hamiltonian_field(const JacobiStructure& j, const ExPoly& f);

Section1Jet algebroid_bracket(const JacobiStructure& j, const Section1Jet& s1,
                              const Section1Jet& s2);
Tensor anchor(const JacobiStructure& j, const Section1Jet& s);

JacobiStructure conformal_change(const JacobiStructure& j, const ExPoly& a);
Section1Jet conformal_iso(const ExPoly& a, const Section1Jet& s);

// Poisson structure e^{-t}(Lambda + d/dt ^ E) on chart x {t}.
JacobiStructure poissonize(const JacobiStructure& j);

Tensor modular_vector_field(const JacobiStructure& j, const Tensor& nu);
ExPoly divergence(const JacobiStructure& j, const Tensor& nu);
ModularPair modular_pair(const JacobiStructure& j, const Tensor& nu);

struct NablaReport {
    bool pass = false;
    Tensor lhs;  // second slot of nabla_{(alpha,f)}(0, nu)
    Tensor rhs;  // (f div_nu E + alpha(X^nu - nE)) nu
};

NablaReport nabla_check(const JacobiStructure& j, const Tensor& nu,
                        const Section1Jet& s);

}  // namespace jcalc
