/*
 * liealg.hpp
 * ----------
 * Finite-dimensional real Lie algebras by structure constants, their
 * scalar cohomology, induced linear structures on the dual, and the
 * filtered dimension count used for the compact nilmanifold example.
 */
#pragma once

#include <jcalc/jacobi.hpp>
#include <jcalc/qlinalg.hpp>

#include <string>
#include <vector>

namespace jcalc {

struct StructEntry {
    int i = 0;  // 1-based, i < j
    int j = 0;
    int k = 0;
    Rational v;
};

class LieAlgebra {
public:
    static LieAlgebra make(int dim, const std::vector<StructEntry>& entries);

    int dim() const { return dim_; }
    // c_{ij}^k, antisymmetric in i, j (0-based).
    const Rational& c(int i, int j, int k) const {
        return c_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
    }

private:
    int dim_ = 0;
    std::vector<Rational> c_;
};

// Named algebras: "abelian1".."abelian6", "h3", "kt", "aff1", "so3", "sl2".
LieAlgebra builtin_algebra(const std::string& name);

// Chart (x1..xn) carrying both the dual coordinates and the scalar cochains.
Chart dual_chart(const LieAlgebra& g);

// mu0(e_i) = trace ad(e_i).
std::vector<Rational> modular_character(const LieAlgebra& g);

// Scalar-coefficient cochain differential, acting on constant-coefficient
// forms over dual_chart(g) as an antiderivation.
Tensor ce_d(const LieAlgebra& g, const Tensor& form);

// Cohomology dimensions b_0..b_n.
std::vector<int> ce_betti(const LieAlgebra& g);

// Linear structure sum_{i<j} c_{ij}^k x_k d/dx_i ^ d/dx_j on the dual.
JacobiStructure lie_poisson(const LieAlgebra& g);

// Induced structure on the unit sphere |x|^2 = 1 in the dual:
// E' = i_alpha(Lambda), Lambda' = Lambda - A ^ E', with alpha = sum x_i dx_i
// and A = sum x_i d/dx_i; the constraint |x|^2 - 1 is attached.
JacobiStructure sphere_structure(const LieAlgebra& g);

// Dimensions of the two-term cochain spaces attached to an invariant
// symplectic scalar 2-form on a nilpotent algebra, degrees 0..n+1:
// dim_k = dim(H^k / im L^{k-2}) + dim ker L^{k-1}, L = wedge with omega2.
std::vector<int> nilmanifold_lj_dims(const LieAlgebra& g, const Tensor& omega2);

}  // namespace jcalc
