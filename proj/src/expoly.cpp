#include <jcalc/expoly.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jcalc {

namespace {

int total(const std::vector<int>& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

}  // namespace

bool TermOrder::operator()(const TermKey& a, const TermKey& b) const {
    int da = total(a.alpha), db = total(b.alpha);
    if (da != db) return da < db;
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return std::lexicographical_compare(a.lambda.begin(), a.lambda.end(),
                                        b.lambda.begin(), b.lambda.end());
}

ExPoly::ExPoly(int dim) : dim_(dim) {
    if (dim < 0) throw std::invalid_argument("negative chart dimension");
}

ExPoly ExPoly::constant(int dim, const Rational& c) {
    ExPoly p(dim);
    p.add_term(c, TermKey{std::vector<int>(dim, 0), std::vector<Rational>(dim, 0)});
    return p;
}

ExPoly ExPoly::variable(int dim, int i) {
    if (i < 0 || i >= dim) throw std::out_of_range("variable index");
    ExPoly p(dim);
    std::vector<int> alpha(dim, 0);
    alpha[i] = 1;
    p.add_term(1, TermKey{std::move(alpha), std::vector<Rational>(dim, 0)});
    return p;
}

ExPoly ExPoly::term(const Rational& c, std::vector<int> alpha,
                    std::vector<Rational> lambda) {
    if (alpha.size() != lambda.size())
        throw std::invalid_argument("alpha/lambda size mismatch");
    ExPoly p(static_cast<int>(alpha.size()));
    p.add_term(c, TermKey{std::move(alpha), std::move(lambda)});
    return p;
}

void ExPoly::add_term(const Rational& c, TermKey key) {
    if (static_cast<int>(key.alpha.size()) != dim_ ||
        static_cast<int>(key.lambda.size()) != dim_)
        throw std::invalid_argument("term size mismatch");
    for (int e : key.alpha)
        if (e < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool ExPoly::is_polynomial() const {
    for (const auto& [k, c] : terms_)
        for (const auto& l : k.lambda)
            if (l != 0) return false;
    return true;
}

bool ExPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& k = terms_.begin()->first;
    return total(k.alpha) == 0 &&
           std::all_of(k.lambda.begin(), k.lambda.end(),
                       [](const Rational& l) { return l == 0; });
}

bool ExPoly::is_unit() const {
    return terms_.size() == 1 && total(terms_.begin()->first.alpha) == 0;
}

int ExPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, total(k.alpha));
    return d;
}

ExPoly ExPoly::operator-() const {
    ExPoly r(dim_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

ExPoly ExPoly::operator+(const ExPoly& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    ExPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(c, k);
    return r;
}

ExPoly& ExPoly::operator+=(const ExPoly& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    for (const auto& [k, c] : o.terms_) add_term(c, k);
    return *this;
}

ExPoly ExPoly::operator-(const ExPoly& o) const { return *this + (-o); }

ExPoly ExPoly::operator*(const ExPoly& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
    ExPoly r(dim_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            TermKey k;
            k.alpha.resize(dim_);
            k.lambda.resize(dim_);
            for (int i = 0; i < dim_; ++i) {
                k.alpha[i] = ka.alpha[i] + kb.alpha[i];
                k.lambda[i] = ka.lambda[i] + kb.lambda[i];
            }
            r.add_term(ca * cb, std::move(k));
        }
    }
    return r;
}

ExPoly ExPoly::operator*(const Rational& c) const {
    ExPoly r(dim_);
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

ExPoly ExPoly::partial(int i) const {
    if (i < 0 || i >= dim_) throw std::out_of_range("partial index");
    ExPoly r(dim_);
    for (const auto& [k, c] : terms_) {
        if (k.alpha[i] > 0) {
            TermKey down = k;
            down.alpha[i] -= 1;
            r.add_term(c * k.alpha[i], std::move(down));
        }
        if (k.lambda[i] != 0) r.add_term(c * k.lambda[i], k);
    }
    return r;
}

ExPoly ExPoly::substitute_zero(int i) const {
    if (i < 0 || i >= dim_) throw std::out_of_range("substitute index");
    ExPoly r(dim_);
    for (const auto& [k, c] : terms_) {
        if (k.alpha[i] > 0) continue;
        TermKey nk = k;
        nk.lambda[i] = 0;
        r.add_term(c, std::move(nk));
    }
    return r;
}

Rational ExPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != dim_)
        throw std::invalid_argument("point dimension mismatch");
    if (!is_polynomial())
        throw std::invalid_argument("exact evaluation needs a pure polynomial");
    Rational acc = 0;
    for (const auto& [k, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < dim_; ++i)
            for (int e = 0; e < k.alpha[i]; ++e) t *= point[i];
        acc += t;
    }
    return acc;
}

ExPoly ExPoly::extended(int new_dim) const {
    if (new_dim < dim_) throw std::invalid_argument("cannot shrink chart");
    ExPoly r(new_dim);
    for (const auto& [k, c] : terms_) {
        TermKey nk = k;
        nk.alpha.resize(new_dim, 0);
        nk.lambda.resize(new_dim, Rational(0));
        r.terms_.emplace(std::move(nk), c);
    }
    return r;
}

int ExPoly::compare(const ExPoly& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_ ? -1 : 1;
    auto a = terms_.begin(), b = o.terms_.begin();
    TermOrder lt;
    for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
        if (lt(a->first, b->first)) return -1;
        if (lt(b->first, a->first)) return 1;
        if (a->second != b->second) return a->second < b->second ? -1 : 1;
    }
    if (a != terms_.end()) return 1;
    if (b != o.terms_.end()) return -1;
    return 0;
}

std::string ExPoly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var = [&](int i) {
        if (i < static_cast<int>(names.size())) return names[i];
        return "x" + std::to_string(i);
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational cc = c;
        if (first) {
            if (cc < 0) { os << "-"; cc = -cc; }
        } else {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0) cc = -cc;
        }
        first = false;
        std::vector<std::string> factors;
        for (int i = 0; i < dim_; ++i) {
            if (k.alpha[i] == 1) factors.push_back(var(i));
            else if (k.alpha[i] > 1)
                factors.push_back(var(i) + "^" + std::to_string(k.alpha[i]));
        }
        std::string expo;
        for (int i = 0; i < dim_; ++i) {
            if (k.lambda[i] == 0) continue;
            std::string piece = rat_str(k.lambda[i]);
            if (piece == "1") piece = var(i);
            else if (piece == "-1") piece = "-" + var(i);
            else piece = "(" + piece + ")" + var(i);
            if (expo.empty()) expo = piece;
            else if (!piece.empty() && piece[0] == '-') expo += piece;
            else expo += "+" + piece;
        }
        if (!expo.empty()) factors.push_back("e^{" + expo + "}");
        if (factors.empty()) {
            os << rat_str(cc);
        } else {
            if (cc != 1) os << rat_str(cc) << "*";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
    }
    return os.str();
}

ExPoly reduce_mod_hypersurface(const ExPoly& p, const ExPoly& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("dimension mismatch");
    if (!p.is_polynomial() || !q.is_polynomial())
        throw std::invalid_argument("reduction needs pure polynomials");
    if (q.is_zero()) throw std::invalid_argument("zero divisor");

    // Leading term of q under the graded-lex order (map is ascending).
    const auto& lead = *q.terms().rbegin();
    const TermKey& lk = lead.first;
    const Rational& lc = lead.second;

    auto divisible = [&](const TermKey& k) {
        for (int i = 0; i < p.dim(); ++i)
            if (k.alpha[i] < lk.alpha[i]) return false;
        return true;
    };

    ExPoly r = p;
    for (;;) {
        // Topmost reducible term; restart after each reduction step.
        const TermKey* hit = nullptr;
        Rational coeff;
        for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
            if (divisible(it->first)) {
                hit = &it->first;
                coeff = it->second;
                break;
            }
        }
        if (!hit) return r;
        std::vector<int> quot(p.dim());
        for (int i = 0; i < p.dim(); ++i) quot[i] = hit->alpha[i] - lk.alpha[i];
        ExPoly mono = ExPoly::term(coeff / lc, std::move(quot),
                                   std::vector<Rational>(p.dim(), 0));
        r = r - mono * q;
    }
}

ExPoly inverse_unit(const ExPoly& a) {
    if (!a.is_unit()) throw std::invalid_argument("not a ring unit");
    const auto& [k, c] = *a.terms().begin();
    TermKey ik = k;
    for (auto& l : ik.lambda) l = -l;
    ExPoly r(a.dim());
    r.add_term(Rational(1) / c, std::move(ik));
    return r;
}

}  // namespace jcalc
