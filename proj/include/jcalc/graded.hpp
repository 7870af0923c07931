/*
 * graded.hpp
 * ----------
 * Weightwise cohomology of the coboundary -[Lambda, .] for a Poisson
 * bivector with homogeneous polynomial coefficients.  Homogeneity makes the
 * operator map the finite block (multivector degree k, polynomial degree d)
 * into (k+1, d+q-1), so every block is exact finite linear algebra.
 */
#pragma once

#include <jcalc/qlinalg.hpp>
#include <jcalc/tensor.hpp>

namespace jcalc {

// A monomial basis element x^alpha d/dx_{i1} ^ ... ^ d/dx_{ik}.
struct MonomialTensor {
    std::vector<int> indices;    // strictly increasing
    std::vector<int> exponents;  // size n, total degree d
};

struct WeightBlock {
    int k = 0;  // source multivector degree
    int d = 0;  // source polynomial degree
    std::vector<MonomialTensor> source;
    std::vector<MonomialTensor> target;  // degree (k+1, d+q-1)
    QMatrix matrix;                      // target rows x source columns
};

// Common polynomial degree of all coefficients; throws when the tensor has
// exponential factors or mixed degrees.  Zero tensors report the fallback.
int homogeneous_degree(const Tensor& t, int fallback = 0);

// Matrix of P |-> -[Lambda, P] on the monomial basis of block (k, d).
// reverse_basis enumerates both bases backwards (used as an order oracle).
WeightBlock assemble_block(const Tensor& lambda, int k, int d,
                           bool reverse_basis = false);

// dims[k][d] = dim ker(block k,d) - rank(block k-1, d-q+1) for k = 0..kmax,
// d = 0..dmax.
std::vector<std::vector<int>> graded_cohomology_dims(const Tensor& lambda,
                                                     int kmax, int dmax,
                                                     bool reverse_basis = false);

struct ExactnessReport {
    bool exact = false;
    Tensor witness;                      // -[Lambda, witness] = cocycle when exact
    std::vector<Rational> certificate;   // functional: kills the image, not the cocycle
};

// Decide whether a homogeneous cocycle is a coboundary within its weight
// block; throws when the input is not homogeneous or not a cocycle.
ExactnessReport graded_is_exact(const Tensor& lambda, const Tensor& cocycle);

}  // namespace jcalc
