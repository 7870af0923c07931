/*
 * rational.hpp
 * ------------
 * Exact rational scalars for the whole library, backed by GMP.
 *
 * Invariants (maintained by mpq canonicalization): denominator > 0 and
 * gcd(|num|, den) = 1.  The textual grammar is "p/q" or "p" with q > 0
 * after normalization.
 */
#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace jcalc {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parse "p/q" or "p" (optional leading '-').
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto digits_ok = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!digits_ok(num) || !digits_ok(den))
        throw std::invalid_argument("bad rational literal: " + s);
    Rational r{mpz_class(num), mpz_class(den)};
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace jcalc
