/*
 * complexes.hpp
 * -------------
 * Cochain and chain complexes attached to a Jacobi structure: the two-term
 * multivector complex and its operator sigma (with variants), the two-term
 * form complex and its boundary delta, scalar-chain machinery (delta_H,
 * pi_k), evaluation of jet cochains on function tuples, the deformed
 * differential and star operator of the l.c.s. model, the contact and
 * l.c.s. chain maps, the contact homotopy, and the one-jet lift.
 */
#pragma once

#include <jcalc/models.hpp>

#include <map>
#include <vector>

namespace jcalc {

// (P, Q) in V^k + V^{k-1}; q is the zero 0-tensor when degree == 0.
struct JetCochain {
    int degree = 0;
    Tensor p;
    Tensor q;

    static JetCochain make(int degree, Tensor p, Tensor q);
    static JetCochain make(const Chart& chart, const ExPoly& f);  // degree 0
    bool is_zero() const { return p.is_zero() && q.is_zero(); }
    bool operator==(const JetCochain& o) const;
};

// (alpha, beta) in Omega^k + Omega^{k-1}; beta zero 0-tensor when degree == 0.
struct JetChain {
    int degree = 0;
    Tensor alpha;
    Tensor beta;

    static JetChain make(int degree, Tensor alpha, Tensor beta);
    static JetChain make(const Chart& chart, const ExPoly& f);  // degree 0
    bool is_zero() const { return alpha.is_zero() && beta.is_zero(); }
    bool operator==(const JetChain& o) const;
    JetChain operator+(const JetChain& o) const;
    JetChain operator-() const;
};

JetCochain sigma(const JacobiStructure& j, const JetCochain& c);
JetCochain sigma_tilde(const JacobiStructure& j, const JetCochain& c);
Tensor sigma_bar(const Tensor& lambda, const Tensor& p);

JetChain delta(const JacobiStructure& j, const JetChain& c);
Tensor delta_bar(const Tensor& lambda, const Tensor& alpha);

// f (x) (f_1 ^ ... ^ f_k) of scalar factors.
struct HCEChain {
    ExPoly f;
    std::vector<ExPoly> factors;
};

// Formal Q-linear combination of scalar chains, normalized by sorting the
// factor lists (with sign) and merging equal lists.
class HCESum {
public:
    HCESum() = default;
    explicit HCESum(const HCEChain& c) { add(c.f, c.factors); }

    void add(ExPoly f, std::vector<ExPoly> factors);
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<ExPoly>, ExPoly>& terms() const { return terms_; }

    HCESum operator+(const HCESum& o) const;
    bool operator==(const HCESum& o) const { return terms_ == o.terms_; }

private:
    std::map<std::vector<ExPoly>, ExPoly> terms_;
};

HCESum delta_H(const JacobiStructure& j, const HCEChain& c);
HCESum delta_H(const JacobiStructure& j, const HCESum& s);

// pi_k on a single chain or a sum of chains with k factors each.
JetChain pi_k(const Chart& chart, const HCEChain& c);
JetChain pi_k(const Chart& chart, const HCESum& s, int k);

// Evaluation of the cochain attached to (P, Q) on k scalar functions, and of
// its coboundary on k+1 functions.
ExPoly j_cochain_eval(const JetCochain& c, const std::vector<ExPoly>& fs);
ExPoly partialH_of_j(const JacobiStructure& j, const JetCochain& c,
                     const std::vector<ExPoly>& fs);

// Deformed differential d_{omega1} (+) -d_{omega0} with the pairing term,
// omega0 = -m omega, omega1 = -(m+1) omega.  Requires d Omega = omega ^ Omega.
JetChain d_tilde(const LcsModel& model, const JetChain& c);

// (-1)^k i(sharp(alpha)) Omega^m / m!
Tensor star_lcs(const LcsModel& model, const Tensor& alpha);

// (alpha, beta) |-> (star beta, i_E(star beta) - star alpha), degree
// k |-> 2m+1-k, and its inverse.
JetChain phi_tilde(const LcsModel& model, const JetChain& c);
JetChain phi_tilde_inv(const LcsModel& model, const JetChain& c);

// Contact chain isomorphism between the form and multivector pair complexes.
JetCochain contact_F(const ContactModel& model, const JetChain& c);
JetChain contact_G(const ContactModel& model, const JetCochain& c);

// l.c.s. sequence maps.
JetCochain lcs_F(const LcsModel& model, const Tensor& alpha);
Tensor lcs_G(const LcsModel& model, const JetCochain& c);

// Attempt to write a degree-1 cochain as the coboundary of a function drawn
// from the rational span of the given generators.  When no combination
// works, the target is echoed back as the residual.
struct SpanSolveReport {
    bool solved = false;
    ExPoly witness;       // sigma of this equals the target when solved
    JetCochain residual;  // the unresolved target otherwise
};
SpanSolveReport sigma_preimage_in_span(const JacobiStructure& j,
                                       const JetCochain& target,
                                       const std::vector<ExPoly>& span);

// For a cycle c (delta c = 0), a chain h with delta h = c.
JetChain contact_homotopy(const ContactModel& model, const JetChain& c);

// e^{-kt} (P + d/dt ^ Q) on chart x {t} (fresh trailing coordinate).
Tensor lift_pair(const JetCochain& c);

// (alpha,beta) ^ (alpha',beta') = (alpha^alpha', alpha^beta' +
// (-1)^{deg alpha'} beta^alpha').
JetChain jet_wedge(const JetChain& a, const JetChain& b);

// Interior product of a degree-1 cochain (X, f) into a chain pair:
// (i(X)alpha + (-1)^{r-1} f beta, i(X)beta), r = deg alpha.
JetChain jet_interior(const JetCochain& s, const JetChain& c);

}  // namespace jcalc
