/*
 * expoly.hpp
 * ----------
 * Exact exponential-polynomial coefficient ring on an n-dimensional chart:
 * finite sums of terms c * x^alpha * e^{lambda.x} with c in Q, alpha in N^n,
 * lambda in Q^n.  Closed under products and partial derivatives; canonical
 * sorted term map gives unique normal forms for equality testing.
 *
 * Term order: graded-lex on (total alpha-degree, alpha, lambda).
 */
#pragma once

#include <jcalc/rational.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jcalc {

struct TermKey {
    std::vector<int> alpha;       // exponents, size n, entries >= 0
    std::vector<Rational> lambda; // frequencies, size n

    bool operator==(const TermKey& o) const {
        return alpha == o.alpha && lambda == o.lambda;
    }
};

struct TermOrder {
    bool operator()(const TermKey& a, const TermKey& b) const;
};

class ExPoly {
public:
    ExPoly() : dim_(0) {}
    explicit ExPoly(int dim);

    static ExPoly zero(int dim) { return ExPoly(dim); }
    static ExPoly constant(int dim, const Rational& c);
    static ExPoly variable(int dim, int i);
    static ExPoly term(const Rational& c, std::vector<int> alpha,
                       std::vector<Rational> lambda);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const;  // all frequencies zero
    bool is_constant() const;
    // Single term with alpha = 0 (so 1/a is again in the ring).
    bool is_unit() const;
    int total_degree() const;    // max |alpha|; -1 for zero
    std::size_t term_count() const { return terms_.size(); }

    const std::map<TermKey, Rational, TermOrder>& terms() const { return terms_; }

    void add_term(const Rational& c, TermKey key);

    ExPoly operator-() const;
    ExPoly operator+(const ExPoly& o) const;
    ExPoly operator-(const ExPoly& o) const;
    ExPoly operator*(const ExPoly& o) const;
    ExPoly operator*(const Rational& c) const;
    ExPoly& operator+=(const ExPoly& o);
    bool operator==(const ExPoly& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }
    bool operator!=(const ExPoly& o) const { return !(*this == o); }

    ExPoly partial(int i) const;

    // Substitute x_i = 0 (terms with alpha_i > 0 vanish, e^{lambda_i * 0} = 1).
    ExPoly substitute_zero(int i) const;

    // Pure polynomials only.
    Rational evaluate(const std::vector<Rational>& point) const;

    // Append extra coordinates; existing variable indices are unchanged.
    ExPoly extended(int new_dim) const;

    // Total order usable as a sort key (graded-lex on the term maps).
    int compare(const ExPoly& o) const;
    bool operator<(const ExPoly& o) const { return compare(o) < 0; }

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    int dim_;
    std::map<TermKey, Rational, TermOrder> terms_;
};

inline ExPoly operator*(const Rational& c, const ExPoly& p) { return p * c; }

// Remainder of multivariate division of p by {q} under graded-lex order.
// Both must be pure polynomials, q != 0.
ExPoly reduce_mod_hypersurface(const ExPoly& p, const ExPoly& q);

// Inverse of a ring unit (single term, alpha = 0).
ExPoly inverse_unit(const ExPoly& a);

}  // namespace jcalc
