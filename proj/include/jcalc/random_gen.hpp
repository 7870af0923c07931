/*
 * random_gen.hpp
 * --------------
 * Deterministic random generators for property suites.  Small coefficients
 * and degrees keep exact arithmetic fast; everything is seeded.
 */
#pragma once

#include <jcalc/tensor.hpp>

#include <random>

namespace jcalc {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    Rational coefficient() {
        int num = uniform(-3, 3);
        if (num == 0) num = 1;
        int den = uniform(1, 2);
        return rat(num, den);
    }

    // Random exponential polynomial; pure polynomial when allow_exp is false.
    ExPoly expoly(int dim, bool allow_exp = true, int max_terms = 2,
                  int max_deg = 2) {
        ExPoly p(dim);
        int nterms = uniform(1, max_terms);
        for (int t = 0; t < nterms; ++t) {
            std::vector<int> alpha(dim, 0);
            std::vector<Rational> lambda(dim, 0);
            int deg = uniform(0, max_deg);
            for (int d = 0; d < deg; ++d) alpha[uniform(0, dim - 1)] += 1;
            if (allow_exp && uniform(0, 2) == 0)
                lambda[uniform(0, dim - 1)] = uniform(0, 1) ? 1 : -1;
            p.add_term(coefficient(), TermKey{std::move(alpha), std::move(lambda)});
        }
        return p;
    }

    Tensor tensor(const Chart& chart, Kind kind, int degree,
                  bool allow_exp = true, int max_terms = 2, int max_deg = 2) {
        Tensor t(chart, kind, degree);
        if (degree > chart.dim()) return t;  // only the zero tensor exists
        int nterms = uniform(1, 2);
        for (int k = 0; k < nterms; ++k) {
            std::vector<int> idx;
            while (static_cast<int>(idx.size()) < degree) {
                int i = uniform(0, chart.dim() - 1);
                if (std::find(idx.begin(), idx.end(), i) == idx.end())
                    idx.push_back(i);
            }
            t.add_term(std::move(idx), expoly(chart.dim(), allow_exp, max_terms, max_deg));
        }
        return t;
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

}  // namespace jcalc
