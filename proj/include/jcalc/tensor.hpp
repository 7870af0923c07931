/*
 * tensor.hpp
 * ----------
 * Graded calculus of multivector fields and differential forms on a chart
 * with ExPoly coefficients: wedge, exterior derivative, contractions, Lie
 * derivative, Schouten-Nijenhuis bracket, the sharp map of a bivector, and
 * d_omega.
 *
 * Conventions (pinned by the test suite):
 *  - interior product i(X_1^...^X_p) = i(X_p) o ... o i(X_1);
 *  - Schouten bracket: [X,f] = X(f), [X,Y] = Lie bracket,
 *    [P,Q^R] = [P,Q]^R + (-1)^{(p-1)q} Q^[P,R], [P,Q] = (-1)^{pq}[Q,P].
 */
#pragma once

#include <jcalc/expoly.hpp>

#include <map>
#include <string>
#include <vector>

namespace jcalc {

struct Chart {
    std::vector<std::string> names;

    int dim() const { return static_cast<int>(names.size()); }
    bool operator==(const Chart& o) const { return names == o.names; }
    bool operator!=(const Chart& o) const { return !(*this == o); }

    static Chart make(std::vector<std::string> names);
};

enum class Kind { form, multivector };

class Tensor {
public:
    Tensor() : degree_(0) {}
    Tensor(Chart chart, Kind kind, int degree);  // zero tensor

    static Tensor scalar(const Chart& chart, Kind kind, const ExPoly& f);
    static Tensor basis_vector(const Chart& chart, int i);          // d/dx_i
    static Tensor basis_form(const Chart& chart, int i);            // dx_i
    static Tensor coordinate_volume(const Chart& chart);            // dx_0^...^dx_{n-1}

    const Chart& chart() const { return chart_; }
    Kind kind() const { return kind_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, ExPoly>& terms() const { return terms_; }

    // Indices may arrive unsorted; they are sorted with the permutation sign.
    void add_term(std::vector<int> indices, const ExPoly& coeff);

    // Coefficient of a strictly increasing index tuple (zero poly if absent).
    ExPoly coeff(const std::vector<int>& indices) const;
    // Degree-0 value.
    const ExPoly scalar_value() const;

    Tensor operator-() const;
    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator*(const ExPoly& f) const;
    Tensor operator*(const Rational& c) const;
    bool operator==(const Tensor& o) const;
    bool operator!=(const Tensor& o) const { return !(*this == o); }

    // Reduce every coefficient modulo a hypersurface polynomial.
    Tensor reduced_mod(const ExPoly& q) const;
    // Re-root on a larger chart (same leading coordinates).
    Tensor extended(const Chart& big) const;
    Tensor with_kind(Kind k) const;

    std::string str() const;

private:
    Chart chart_;
    Kind kind_ = Kind::form;
    int degree_;
    std::map<std::vector<int>, ExPoly> terms_;
};

inline Tensor operator*(const ExPoly& f, const Tensor& t) { return t * f; }
inline Tensor operator*(const Rational& c, const Tensor& t) { return t * c; }

Tensor wedge(const Tensor& a, const Tensor& b);
Tensor exterior_d(const Tensor& alpha);

// i(P)alpha for a multivector P and form alpha (degree k-p; 0 when p > k).
Tensor contract(const Tensor& P, const Tensor& alpha);

// i_eta P: interior product of a 1-form into a multivector.
Tensor contract_form(const Tensor& eta, const Tensor& P);

// Full evaluation <alpha, P> of equal-degree form and multivector.
ExPoly pairing(const Tensor& alpha, const Tensor& P);

// P(a_1,...,a_k) for 1-forms a_i.
ExPoly eval_multivector(const Tensor& P, const std::vector<Tensor>& one_forms);

Tensor schouten(const Tensor& P, const Tensor& Q);

// X vector field; forms use Cartan's formula, multivectors use [X, T].
Tensor lie_derivative(const Tensor& X, const Tensor& T);

// Degree-preserving extension of the bivector sharp map to forms.
Tensor sharp(const Tensor& lambda, const Tensor& alpha);

Tensor d_omega(const Tensor& omega, const Tensor& alpha);

// X(f) for a vector field X.
ExPoly apply_vector(const Tensor& X, const ExPoly& f);

// df as a 1-form.
Tensor differential(const Chart& chart, const ExPoly& f);

}  // namespace jcalc
