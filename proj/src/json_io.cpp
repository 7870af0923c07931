#include <jcalc/json_io.hpp>

#include <stdexcept>

namespace jcalc {

using nlohmann::json;

nlohmann::json rational_to_json(const Rational& r) { return rat_str(r); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational must be a string");
    return rat_parse(j.get<std::string>());
}

nlohmann::json expoly_to_json(const ExPoly& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms()) {
        json lam = json::array();
        for (const Rational& l : key.lambda) lam.push_back(rat_str(l));
        terms.push_back(
            {{"c", rat_str(c)}, {"alpha", key.alpha}, {"lambda", lam}});
    }
    return terms;
}

ExPoly expoly_from_json(const json& j, int dim) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be an array");
    ExPoly p(dim);
    for (const json& t : j) {
        TermKey key;
        key.alpha = t.at("alpha").get<std::vector<int>>();
        for (const json& l : t.at("lambda"))
            key.lambda.push_back(rational_from_json(l));
        if (static_cast<int>(key.alpha.size()) != dim ||
            static_cast<int>(key.lambda.size()) != dim)
            throw std::invalid_argument("term arity mismatch");
        p.add_term(rational_from_json(t.at("c")), std::move(key));
    }
    return p;
}

nlohmann::json tensor_to_json(const Tensor& t) {
    json terms = json::array();
    for (const auto& [idx, f] : t.terms())
        terms.push_back({{"indices", idx}, {"coeff", expoly_to_json(f)}});
    return {{"kind", t.kind() == Kind::form ? "form" : "multivector"},
            {"degree", t.degree()},
            {"terms", terms}};
}

Tensor tensor_from_json(const json& j, const Chart& chart) {
    std::string kind_s = j.at("kind").get<std::string>();
    Kind kind;
    if (kind_s == "form")
        kind = Kind::form;
    else if (kind_s == "multivector")
        kind = Kind::multivector;
    else
        throw std::invalid_argument("unknown tensor kind");
    Tensor t(chart, kind, j.at("degree").get<int>());
    for (const json& term : j.at("terms")) {
        std::vector<int> idx = term.at("indices").get<std::vector<int>>();
        t.add_term(std::move(idx),
                   expoly_from_json(term.at("coeff"), chart.dim()));
    }
    return t;
}

nlohmann::json structure_to_json(const JacobiStructure& s) {
    json out = {{"chart", {{"names", s.chart.names}}},
                {"lambda", tensor_to_json(s.lambda)},
                {"e", tensor_to_json(s.e)}};
    out["constraint"] =
        s.constraint ? expoly_to_json(*s.constraint) : json(nullptr);
    return out;
}

JacobiStructure structure_from_json(const json& j) {
    Chart chart = Chart::make(
        j.at("chart").at("names").get<std::vector<std::string>>());
    Tensor lambda = tensor_from_json(j.at("lambda"), chart);
    Tensor e = tensor_from_json(j.at("e"), chart);
    std::optional<ExPoly> constraint;
    if (j.contains("constraint") && !j.at("constraint").is_null())
        constraint = expoly_from_json(j.at("constraint"), chart.dim());
    return JacobiStructure::make(std::move(chart), std::move(lambda),
                                 std::move(e), std::move(constraint));
}

nlohmann::json algebra_to_json(const LieAlgebra& g) {
    json entries = json::array();
    int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (g.c(i, j, k) != 0)
                    entries.push_back({{"i", i + 1},
                                       {"j", j + 1},
                                       {"k", k + 1},
                                       {"v", rat_str(g.c(i, j, k))}});
    return {{"dim", n}, {"c", entries}};
}

LieAlgebra algebra_from_json(const json& j) {
    int n = j.at("dim").get<int>();
    std::vector<StructEntry> entries;
    for (const json& e : j.at("c"))
        entries.push_back(StructEntry{e.at("i").get<int>(), e.at("j").get<int>(),
                                      e.at("k").get<int>(),
                                      rational_from_json(e.at("v"))});
    return LieAlgebra::make(n, entries);
}

}  // namespace jcalc
