/*
 * models.hpp
 * ----------
 * The coordinate model structures used throughout the test and
 * reproduction suites, with their closed-form flat isomorphisms.
 */
#pragma once

#include <jcalc/jacobi.hpp>

namespace jcalc {

// Chart (q^1..q^m, p_1..p_m), Lambda = sum dq_i ^ dp_i pairing, E = 0.
struct SymplecticModel {
    int m = 1;
    JacobiStructure j;
    Tensor omega2;  // symplectic form sum dq^i ^ dp_i
};
SymplecticModel symplectic_darboux(int m);

// Chart (t, q^1..q^m, p_1..p_m), eta = dt - sum p_i dq^i.
struct ContactModel {
    int m = 1;
    JacobiStructure j;
    Tensor eta;
    Tensor deta;
};
ContactModel contact_darboux(int m);

// Chart (q^1..q^m, p_1..p_m) with f = q^1:
// Omega = e^f sum dq^i ^ dp_i, omega = df.
struct LcsModel {
    int m = 1;
    JacobiStructure j;
    Tensor Omega;
    Tensor omega;  // Lee form
};
LcsModel lcs_darboux(int m);

// Lambda = x y d/dx ^ d/dy on the plane, E = 0.
JacobiStructure quadratic_r2();

// flat maps, extended factorwise to all degrees
Tensor contact_flat(const ContactModel& model, const Tensor& mv);
Tensor contact_flat_inv(const ContactModel& model, const Tensor& form);
Tensor lcs_flat(const LcsModel& model, const Tensor& mv);
Tensor lcs_flat_inv(const LcsModel& model, const Tensor& form);

}  // namespace jcalc
