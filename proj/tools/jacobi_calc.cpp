/*
 * jacobi-calc
 * -----------
 * Command-line front end: verify structure files, run named reproduction
 * suites, and print dimension tables.  Exit codes: 0 pass, 1 check failed,
 * 2 bad input.
 */
#include <jcalc/complexes.hpp>
#include <jcalc/graded.hpp>
#include <jcalc/json_io.hpp>
#include <jcalc/liealg.hpp>
#include <jcalc/random_gen.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace jcalc;
using nlohmann::json;

namespace {

struct CheckReport {
    std::string name;
    bool pass = true;
    std::vector<std::string> details;
    double ms = 0.0;
};

struct Options {
    std::string format = "table";
    std::uint64_t seed = 2026;
    int samples = 0;  // 0: per-check default (JACOBI_SAMPLES overrides)
};

int effective_samples(const Options& opt, int fallback) {
    if (opt.samples > 0) return opt.samples;
    if (const char* env = std::getenv("JACOBI_SAMPLES")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return fallback;
}

int print_reports(const std::vector<CheckReport>& reports,
                  const Options& opt) {
    bool all = true;
    if (opt.format == "json") {
        json out = json::array();
        for (const auto& r : reports) {
            out.push_back({{"name", r.name},
                           {"status", r.pass ? "pass" : "fail"},
                           {"details", r.details},
                           {"ms", r.ms}});
            all = all && r.pass;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  ("
                      << r.ms << " ms)\n";
            for (const auto& d : r.details) std::cout << "      " << d << "\n";
            all = all && r.pass;
        }
    }
    if (!all) std::cout << "seed: " << opt.seed << "\n";
    return all ? 0 : 1;
}

CheckReport run_check(const std::string& name,
                      const std::function<void(CheckReport&)>& body) {
    CheckReport r;
    r.name = name;
    auto t0 = std::chrono::steady_clock::now();
    body(r);
    r.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
               .count();
    return r;
}

void expect(CheckReport& r, bool ok, const std::string& what) {
    if (!ok) {
        r.pass = false;
        r.details.push_back("failed: " + what);
    }
}

std::string dims_str(const std::vector<int>& d) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << "]";
    return os.str();
}

// --- model helpers ---------------------------------------------------------

Tensor contact_volume(const ContactModel& c) {
    Tensor v = c.eta;
    for (int i = 0; i < c.m; ++i) v = wedge(v, c.deta);
    return v;
}

Tensor lcs_volume(const LcsModel& l) {
    Tensor v = l.Omega;
    for (int i = 1; i < l.m; ++i) v = wedge(v, l.Omega);
    return v;
}

JetCochain modular_cochain(const JacobiStructure& j, const Tensor& nu) {
    ModularPair mp = modular_pair(j, nu);
    return JetCochain::make(
        1, mp.x, Tensor::scalar(j.chart, Kind::multivector, mp.g));
}

JetCochain reference_cochain(const JacobiStructure& j, int scale) {
    return JetCochain::make(1, Rational(scale) * j.e,
                            Tensor(j.chart, Kind::multivector, 0));
}

std::vector<ExPoly> exp_monomial_span(const Chart& ch, int max_deg) {
    int n = ch.dim();
    std::vector<ExPoly> span;
    std::vector<Rational> freq(n, 0);
    freq[0] = -1;  // e^{-q1}
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n) {
            span.push_back(ExPoly::term(1, a, freq));
            return;
        }
        for (int e = 0; e <= left; ++e) {
            a[pos] = e;
            rec(pos + 1, left - e);
            a[pos] = 0;
        }
    };
    rec(0, max_deg);
    return span;
}

Tensor kt_symplectic_scalar(const LieAlgebra& g) {
    Chart ch = dual_chart(g);
    Tensor om(ch, Kind::form, 2);
    om.add_term({0, 2}, ExPoly::constant(g.dim(), 1));
    om.add_term({1, 3}, ExPoly::constant(g.dim(), 1));
    return om;
}

ExPoly bracket_function(const LieAlgebra& g, int i, int j) {
    ExPoly f(g.dim());
    for (int k = 0; k < g.dim(); ++k)
        if (g.c(i, j, k) != 0)
            f += ExPoly::constant(g.dim(), g.c(i, j, k)) *
                 ExPoly::variable(g.dim(), k);
    return f;
}

// --- reproduction suites ---------------------------------------------------

std::vector<CheckReport> suite_kodaira_thurston(const Options&) {
    std::vector<CheckReport> out;
    LieAlgebra kt = builtin_algebra("kt");
    out.push_back(run_check("scalar cohomology dims", [&](CheckReport& r) {
        std::vector<int> b = ce_betti(kt);
        r.details.push_back("dims " + dims_str(b));
        expect(r, b == std::vector<int>{1, 3, 4, 3, 1}, "betti table");
    }));
    out.push_back(run_check("filtered two-term dims", [&](CheckReport& r) {
        std::vector<int> d = nilmanifold_lj_dims(kt, kt_symplectic_scalar(kt));
        r.details.push_back("dims " + dims_str(d));
        expect(r, d == std::vector<int>{1, 3, 4, 4, 3, 1}, "filtered table");
    }));
    return out;
}

std::vector<CheckReport> suite_quadratic_r2(const Options&) {
    std::vector<CheckReport> out;
    JacobiStructure q = quadratic_r2();
    out.push_back(run_check("modular vector field", [&](CheckReport& r) {
        Tensor x = modular_vector_field(q, Tensor::coordinate_volume(q.chart));
        Tensor expectfield(q.chart, Kind::multivector, 1);
        expectfield.add_term({0}, ExPoly::variable(2, 0));
        expectfield.add_term({1}, -ExPoly::variable(2, 1));
        r.details.push_back("field " + x.str());
        expect(r, x == expectfield, "x d/dx - y d/dy");
    }));
    out.push_back(run_check("nontrivial classes", [&](CheckReport& r) {
        Tensor x(q.chart, Kind::multivector, 1);
        x.add_term({0}, ExPoly::variable(2, 0));
        x.add_term({1}, -ExPoly::variable(2, 1));
        expect(r, !graded_is_exact(q.lambda, x).exact,
               "modular class nontrivial in its block");
        expect(r, !graded_is_exact(q.lambda, q.lambda).exact,
               "structure class nontrivial in its block");
    }));
    return out;
}

std::vector<CheckReport> suite_contact(int m, const Options& opt) {
    std::vector<CheckReport> out;
    ContactModel c = contact_darboux(m);
    const Chart& ch = c.j.chart;
    out.push_back(run_check("structure identities", [&](CheckReport& r) {
        expect(r, verify_jacobi(c.j).pass, "structure verification");
        expect(r, contract(c.j.e, c.eta).scalar_value() ==
                      ExPoly::constant(ch.dim(), 1),
               "pairing with the contact form");
        expect(r, contract(c.j.e, c.deta).is_zero(),
               "pairing with its differential");
    }));
    out.push_back(run_check("modular pair", [&](CheckReport& r) {
        JetCochain mc = modular_cochain(c.j, contact_volume(c));
        expect(r, mc == reference_cochain(c.j, -(m + 1)),
               "modular pair value");
    }));
    int samples = effective_samples(opt, 50);
    out.push_back(run_check("homotopy on generated cycles", [&](CheckReport& r) {
        Rng rng(opt.seed);
        for (int it = 0; it < samples && r.pass; ++it) {
            int k = 1 + static_cast<int>(it % (2 * m));
            JetChain cyc = delta(
                c.j, JetChain::make(k, rng.tensor(ch, Kind::form, k),
                                    rng.tensor(ch, Kind::form, k - 1)));
            JetChain h = contact_homotopy(c, cyc);
            expect(r, delta(c.j, h) == cyc, "homotopy reconstruction");
        }
    }));
    int fsamples = effective_samples(opt, 100);
    out.push_back(run_check("contraction identities", [&](CheckReport& r) {
        Rng rng(opt.seed + 1);
        for (int it = 0; it < fsamples && r.pass; ++it) {
            int k = rng.uniform(0, 2 * m);
            Tensor a = rng.tensor(ch, Kind::form, k);
            expect(r, contract(c.j.lambda, wedge(c.eta, a)) ==
                          wedge(c.eta, contract(c.j.lambda, a)),
                   "contact-form commutation");
            expect(r, contract(c.j.lambda, wedge(a, c.deta)) -
                              wedge(contract(c.j.lambda, a), c.deta) ==
                          Rational(m - k) * a +
                              wedge(c.eta, contract(c.j.e, a)),
                   "degree-counting identity");
        }
    }));
    return out;
}

std::vector<CheckReport> suite_lcs(const Options& opt) {
    std::vector<CheckReport> out;
    for (int m : {1, 2}) {
        LcsModel l = lcs_darboux(m);
        const Chart& ch = l.j.chart;
        std::string tag = " (m=" + std::to_string(m) + ")";
        int samples = effective_samples(opt, 100);
        out.push_back(run_check("star identities" + tag, [&](CheckReport& r) {
            Rng rng(opt.seed);
            for (int it = 0; it < samples && r.pass; ++it) {
                int k = rng.uniform(0, 2 * m);
                Tensor a = rng.tensor(ch, Kind::form, k);
                Tensor sa = star_lcs(l, a);
                Rational sgn = (k % 2 == 0) ? 1 : -1;
                expect(r, star_lcs(l, sa) == a, "involution");
                expect(r, contract(l.j.e, sa) ==
                              sgn * star_lcs(l, wedge(l.omega, a)),
                       "anti-Lee contraction");
                expect(r, lie_derivative(l.j.e, sa) ==
                              star_lcs(l, lie_derivative(l.j.e, a)),
                       "infinitesimal invariance");
                expect(r, contract(l.j.lambda, sa) ==
                              star_lcs(l, wedge(a, l.Omega)),
                       "bivector contraction");
                Tensor lhs =
                    star_lcs(l, contract(l.j.lambda, exterior_d(a)) -
                                    exterior_d(contract(l.j.lambda, a)));
                Tensor rhs = exterior_d(sa) -
                             Rational(m - k + 1) * wedge(l.omega, sa) -
                             wedge(l.Omega, contract(l.j.e, sa));
                expect(r, lhs == -sgn * rhs, "first-order expansion");
            }
        }));
        out.push_back(run_check("chain relations" + tag, [&](CheckReport& r) {
            Rng rng(opt.seed + 1);
            for (int it = 0; it < samples && r.pass; ++it) {
                int k = rng.uniform(1, 2 * m);
                JetChain x = JetChain::make(
                    k, rng.tensor(ch, Kind::form, k),
                    rng.tensor(ch, Kind::form, k - 1));
                expect(r, d_tilde(l, d_tilde(l, x)).is_zero(),
                       "deformed differential squares to zero");
                Rational sgn = (k % 2 == 0) ? 1 : -1;
                JetChain lhs = phi_tilde(l, delta(l.j, x));
                JetChain rhs = d_tilde(l, phi_tilde(l, x));
                expect(r, lhs == JetChain::make(rhs.degree, sgn * rhs.alpha,
                                                sgn * rhs.beta),
                       "pairing chain relation");
            }
        }));
        out.push_back(run_check("modular class" + tag, [&](CheckReport& r) {
            JetCochain mc = modular_cochain(l.j, lcs_volume(l));
            expect(r, sigma(l.j, mc).is_zero(), "modular cocycle");
            JetCochain ref = reference_cochain(l.j, -(m + 1));
            JetCochain diff =
                JetCochain::make(1, mc.p - ref.p, mc.q - ref.q);
            SpanSolveReport s =
                sigma_preimage_in_span(l.j, diff, exp_monomial_span(ch, 2));
            if (s.solved) {
                r.details.push_back("witness " + s.witness.str());
            } else {
                r.details.push_back("unresolved residual (" +
                                    s.residual.p.str() + ", " +
                                    s.residual.q.str() + ")");
            }
            expect(r, s.solved, "difference from the reference pair is exact");
        }));
    }
    return out;
}

std::vector<CheckReport> suite_so3_liepoisson(const Options&) {
    std::vector<CheckReport> out;
    LieAlgebra g = builtin_algebra("so3");
    JacobiStructure lp = lie_poisson(g);
    out.push_back(run_check("linear structure", [&](CheckReport& r) {
        expect(r, verify_jacobi(lp).pass, "structure verification");
        Tensor a(lp.chart, Kind::multivector, 1);
        for (int i = 0; i < 3; ++i) a.add_term({i}, ExPoly::variable(3, i));
        expect(r, lie_derivative(a, lp.lambda) == -lp.lambda,
               "Euler field rescales by -1");
    }));
    out.push_back(run_check("modular field", [&](CheckReport& r) {
        expect(r, modular_vector_field(lp, Tensor::coordinate_volume(lp.chart))
                      .is_zero(),
               "unimodular: zero field");
    }));
    return out;
}

std::vector<CheckReport> suite_so3_graded(const Options&) {
    std::vector<CheckReport> out;
    Tensor lam = lie_poisson(builtin_algebra("so3")).lambda;
    out.push_back(run_check("weightwise grid", [&](CheckReport& r) {
        std::vector<std::vector<int>> dims = graded_cohomology_dims(lam, 3, 4);
        std::vector<int> cas{1, 0, 1, 0, 1}, zero{0, 0, 0, 0, 0};
        for (int k = 0; k <= 3; ++k)
            r.details.push_back("k=" + std::to_string(k) + " " +
                                dims_str(dims[k]));
        expect(r, dims[0] == cas && dims[3] == cas, "invariant rows");
        expect(r, dims[1] == zero && dims[2] == zero, "vanishing rows");
        expect(r, graded_cohomology_dims(lam, 3, 4, true) == dims,
               "basis-order independence");
    }));
    out.push_back(run_check("rank oracle agreement", [&](CheckReport& r) {
        for (int k = 0; k <= 3; ++k)
            for (int d = 0; d <= 4; ++d) {
                WeightBlock b = assemble_block(lam, k, d);
                expect(r, rank(b.matrix) == rank_gauss(b.matrix),
                       "independent elimination");
            }
    }));
    return out;
}

std::vector<CheckReport> suite_sphere(const std::string& alg,
                                      const Options&) {
    std::vector<CheckReport> out;
    LieAlgebra g = builtin_algebra(alg);
    JacobiStructure s = sphere_structure(g);
    int n = g.dim();
    ExPoly con = *s.constraint;
    out.push_back(run_check("induced structure", [&](CheckReport& r) {
        expect(r, verify_jacobi(s).pass, "structure verification");
        if (alg == "so3") expect(r, s.e.is_zero(), "zero vector part");
        Tensor a(s.chart, Kind::multivector, 1);
        for (int i = 0; i < n; ++i) a.add_term({i}, ExPoly::variable(n, i));
        expect(r, lie_derivative(a, s.e) == s.e,
               "Euler field fixes the vector part");
    }));
    out.push_back(run_check("tangency", [&](CheckReport& r) {
        ExPoly norm2 = con + ExPoly::constant(n, 1);
        expect(r, reduce_mod_hypersurface(apply_vector(s.e, norm2), con)
                      .is_zero(),
               "vector part tangent");
        Tensor dn = exterior_d(Tensor::scalar(s.chart, Kind::form, norm2));
        expect(r, sharp(s.lambda, dn).reduced_mod(con).is_zero(),
               "bivector tangent");
    }));
    out.push_back(run_check("linear bracket compatibility",
                            [&](CheckReport& r) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                ExPoly lhs = jacobi_bracket(s, ExPoly::variable(n, i),
                                            ExPoly::variable(n, j));
                expect(r, reduce_mod_hypersurface(
                              lhs - bracket_function(g, i, j), con)
                              .is_zero(),
                       "coordinate bracket");
            }
    }));
    out.push_back(run_check("cone lift", [&](CheckReport& r) {
        JetCochain c = JetCochain::make(2, s.lambda, s.e);
        Tensor lc = lift_pair(c);
        const Chart& big = lc.chart();
        expect(r, lie_derivative(Tensor::basis_vector(big, n), lc) ==
                      Rational(-2) * lc,
               "homogeneity along the cone");
        std::vector<Tensor> dxi;
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> fr(n + 1, 0);
            fr[n] = 1;
            std::vector<int> al(n + 1, 0);
            al[i] = 1;
            dxi.push_back(exterior_d(
                Tensor::scalar(big, Kind::form, ExPoly::term(1, al, fr))));
        }
        ExPoly conb = con.extended(n + 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                ExPoly lhs =
                    eval_multivector(lc, {dxi[i], dxi[j]}).substitute_zero(n);
                ExPoly rhs =
                    j_cochain_eval(c, {ExPoly::variable(n, i),
                                       ExPoly::variable(n, j)})
                        .extended(n + 1);
                expect(r, reduce_mod_hypersurface(lhs - rhs, conb).is_zero(),
                       "evaluation identity");
            }
    }));
    return out;
}

std::vector<CheckReport> suite_conformal(const Options& opt) {
    std::vector<CheckReport> out;
    int samples = effective_samples(opt, 50);
    out.push_back(run_check("conformal change", [&](CheckReport& r) {
        Rng rng(opt.seed);
        std::vector<JacobiStructure> models{contact_darboux(1).j,
                                            lcs_darboux(1).j, quadratic_r2()};
        for (const auto& j : models) {
            int n = j.chart.dim();
            std::vector<Rational> freq(n, 0);
            freq[0] = 1;
            ExPoly a = ExPoly::term(rat(3, 2), std::vector<int>(n, 0), freq);
            JacobiStructure cj = conformal_change(j, a);
            expect(r, verify_jacobi(cj).pass, "changed structure");
            JacobiStructure back = conformal_change(cj, inverse_unit(a));
            expect(r, back.lambda == j.lambda && back.e == j.e,
                   "inverse factor restores the structure");
            for (int it = 0; it < samples / 3 && r.pass; ++it) {
                Section1Jet s1{rng.tensor(j.chart, Kind::form, 1),
                               rng.expoly(n, false)};
                Section1Jet s2{rng.tensor(j.chart, Kind::form, 1),
                               rng.expoly(n, false)};
                expect(r, anchor(cj, conformal_iso(a, s1)) == anchor(j, s1),
                       "anchor match");
                Section1Jet lhs =
                    conformal_iso(a, algebroid_bracket(j, s1, s2));
                Section1Jet rhs = algebroid_bracket(cj, conformal_iso(a, s1),
                                                    conformal_iso(a, s2));
                expect(r, lhs.alpha == rhs.alpha && lhs.f == rhs.f,
                       "bracket isomorphism");
            }
        }
    }));
    return out;
}

std::vector<CheckReport> suite_poissonize(const Options& opt) {
    std::vector<CheckReport> out;
    int samples = effective_samples(opt, 50);
    out.push_back(run_check("homogeneous structure", [&](CheckReport& r) {
        for (const auto& j :
             {contact_darboux(1).j, lcs_darboux(1).j, quadratic_r2()}) {
            JacobiStructure p = poissonize(j);
            expect(r, p.e.is_zero(), "vector part vanishes");
            expect(r, verify_jacobi(p).pass, "structure verification");
        }
    }));
    out.push_back(run_check("lift intertwines coboundaries",
                            [&](CheckReport& r) {
        Rng rng(opt.seed);
        for (const auto& j : {contact_darboux(1).j, quadratic_r2()}) {
            JacobiStructure p = poissonize(j);
            for (int it = 0; it < samples / 2 && r.pass; ++it) {
                int k = rng.uniform(0, 2);
                JetCochain c =
                    (k == 0)
                        ? JetCochain::make(j.chart,
                                           rng.expoly(j.chart.dim(), false))
                        : JetCochain::make(
                              k, rng.tensor(j.chart, Kind::multivector, k),
                              rng.tensor(j.chart, Kind::multivector, k - 1));
                expect(r, lift_pair(sigma(j, c)) ==
                              sigma_bar(p.lambda, lift_pair(c)),
                       "lift chain law");
            }
        }
    }));
    return out;
}

std::vector<CheckReport> suite_hce_compat(const Options& opt) {
    std::vector<CheckReport> out;
    int samples = effective_samples(opt, 50);
    out.push_back(run_check("scalar cochain compatibility",
                            [&](CheckReport& r) {
        Rng rng(opt.seed);
        for (const auto& j : {contact_darboux(1).j, quadratic_r2()}) {
            int n = j.chart.dim();
            for (int it = 0; it < samples / 2 && r.pass; ++it) {
                int k = rng.uniform(0, 2);
                JetCochain c =
                    (k == 0)
                        ? JetCochain::make(j.chart, rng.expoly(n, false))
                        : JetCochain::make(
                              k, rng.tensor(j.chart, Kind::multivector, k),
                              rng.tensor(j.chart, Kind::multivector, k - 1));
                std::vector<ExPoly> fs;
                for (int s = 0; s < k + 1; ++s)
                    fs.push_back(rng.expoly(n, false));
                expect(r, partialH_of_j(j, c, fs) ==
                              j_cochain_eval(sigma(j, c), fs),
                       "cochain coboundary compatibility");
            }
        }
    }));
    out.push_back(run_check("scalar chain compatibility",
                            [&](CheckReport& r) {
        Rng rng(opt.seed + 1);
        for (const auto& j : {contact_darboux(1).j, quadratic_r2()}) {
            int n = j.chart.dim();
            for (int it = 0; it < samples / 2 && r.pass; ++it) {
                int k = rng.uniform(1, 3);
                HCEChain c;
                c.f = rng.expoly(n, false);
                for (int s = 0; s < k; ++s)
                    c.factors.push_back(rng.expoly(n, false));
                HCESum d = delta_H(j, c);
                expect(r, delta_H(j, d).is_zero(), "boundary squares to zero");
                expect(r, delta(j, pi_k(j.chart, c)) ==
                              pi_k(j.chart, d, k - 1),
                       "projection chain law");
            }
        }
    }));
    return out;
}

int cmd_verify(const std::string& file, const Options& opt) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot open " << file << "\n";
        return 2;
    }
    JacobiStructure s;
    try {
        json j = json::parse(in);
        s = structure_from_json(j);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    JacobiReport rep = verify_jacobi(s);
    std::vector<CheckReport> out;
    out.push_back(run_check("structure identities", [&](CheckReport& r) {
        if (!rep.r1.is_zero())
            r.details.push_back("residual (bivector identity): " +
                                rep.r1.str());
        if (!rep.r2.is_zero())
            r.details.push_back("residual (vector identity): " + rep.r2.str());
        expect(r, rep.pass, "defining identities");
    }));
    return print_reports(out, opt);
}

int cmd_reproduce(const std::string& name, const Options& opt) {
    std::vector<CheckReport> reports;
    if (name == "kodaira-thurston")
        reports = suite_kodaira_thurston(opt);
    else if (name == "quadratic-r2")
        reports = suite_quadratic_r2(opt);
    else if (name == "contact-m1")
        reports = suite_contact(1, opt);
    else if (name == "contact-m2")
        reports = suite_contact(2, opt);
    else if (name == "lcs-darboux")
        reports = suite_lcs(opt);
    else if (name == "so3-liepoisson")
        reports = suite_so3_liepoisson(opt);
    else if (name == "so3-graded")
        reports = suite_so3_graded(opt);
    else if (name == "sphere-so3")
        reports = suite_sphere("so3", opt);
    else if (name == "sphere-h3")
        reports = suite_sphere("h3", opt);
    else if (name == "conformal")
        reports = suite_conformal(opt);
    else if (name == "poissonize")
        reports = suite_poissonize(opt);
    else if (name == "hce-compat")
        reports = suite_hce_compat(opt);
    else {
        std::cerr << "error: unknown suite " << name << "\n";
        return 2;
    }
    return print_reports(reports, opt);
}

int cmd_table(const std::string& kind, const std::string& algebra, int kmax,
              int dmax, const Options& opt) {
    try {
        if (kind == "ce") {
            std::vector<int> dims = ce_betti(builtin_algebra(algebra));
            if (opt.format == "json") {
                json rows = json::array();
                for (size_t k = 0; k < dims.size(); ++k)
                    rows.push_back({{"k", k}, {"dim", dims[k]}});
                std::cout << rows.dump(2) << "\n";
            } else {
                std::cout << "k   dim\n";
                for (size_t k = 0; k < dims.size(); ++k)
                    std::cout << k << "   " << dims[k] << "\n";
            }
            return 0;
        }
        if (kind == "nilmanifold-lj") {
            LieAlgebra g = builtin_algebra(algebra);
            Chart ch = dual_chart(g);
            Tensor om(ch, Kind::form, 2);
            if (algebra == "kt") {
                om = kt_symplectic_scalar(g);
            } else if (algebra == "abelian4") {
                om.add_term({0, 1}, ExPoly::constant(4, 1));
                om.add_term({2, 3}, ExPoly::constant(4, 1));
            } else {
                std::cerr << "error: no invariant symplectic scalar for "
                          << algebra << "\n";
                return 2;
            }
            std::vector<int> dims = nilmanifold_lj_dims(g, om);
            if (opt.format == "json") {
                json rows = json::array();
                for (size_t k = 0; k < dims.size(); ++k)
                    rows.push_back({{"k", k}, {"dim", dims[k]}});
                std::cout << rows.dump(2) << "\n";
            } else {
                std::cout << "k   dim\n";
                for (size_t k = 0; k < dims.size(); ++k)
                    std::cout << k << "   " << dims[k] << "\n";
            }
            return 0;
        }
        if (kind == "graded-lp") {
            Tensor lam = lie_poisson(builtin_algebra(algebra)).lambda;
            std::vector<std::vector<int>> dims =
                graded_cohomology_dims(lam, kmax, dmax);
            if (opt.format == "json") {
                json rows = json::array();
                for (int k = 0; k <= kmax; ++k)
                    for (int d = 0; d <= dmax; ++d)
                        rows.push_back(
                            {{"k", k}, {"d", d}, {"dim", dims[k][d]}});
                std::cout << rows.dump(2) << "\n";
            } else {
                std::cout << "k   d   dim\n";
                for (int k = 0; k <= kmax; ++k)
                    for (int d = 0; d <= dmax; ++d)
                        std::cout << k << "   " << d << "   " << dims[k][d]
                                  << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: unknown table kind " << kind << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic checks for Jacobi-type structures"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--seed", opt.seed, "seed for random suites");
    app.add_option("--samples", opt.samples, "sample count override");

    std::string file;
    auto* verify = app.add_subcommand("verify", "verify a structure file");
    verify->add_option("file", file, "JSON structure file")->required();

    std::string name;
    auto* reproduce =
        app.add_subcommand("reproduce", "run a named verification suite");
    reproduce->add_option("name", name, "suite name")->required();

    std::string kind, algebra = "so3";
    int kmax = 3, dmax = 4;
    auto* table = app.add_subcommand("table", "print a dimension table");
    table->add_option("kind", kind, "table kind")->required();
    table->add_option("--algebra", algebra, "built-in algebra name");
    table->add_option("--kmax", kmax, "largest multivector degree");
    table->add_option("--dmax", dmax, "largest polynomial degree");

    CLI11_PARSE(app, argc, argv);
    try {
        if (verify->parsed()) return cmd_verify(file, opt);
        if (reproduce->parsed()) return cmd_reproduce(name, opt);
        if (table->parsed()) return cmd_table(kind, algebra, kmax, dmax, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
