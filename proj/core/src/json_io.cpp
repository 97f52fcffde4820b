#include "raagrep/json_io.hpp"

namespace raagrep {

json to_json(const FieldElement& x) {
    json terms = json::array();
    for (const auto& t : x.terms()) {
        json subset = json::array();
        for (auto p : t.subset) subset.push_back(p);
        terms.push_back({{"subset", subset},
                         {"num", numerator(t.coefficient).str()},
                         {"den", denominator(t.coefficient).str()}});
    }
    json basis = json::array();
    for (auto p : x.basis().primes()) basis.push_back(p);
    return {{"basis", basis}, {"terms", terms}};
}

FieldElement field_element_from_json(const json& j) {
    FieldElement acc;
    for (const auto& t : j.at("terms")) {
        std::vector<std::int64_t> subset;
        for (const auto& p : t.at("subset")) subset.push_back(p.get<std::int64_t>());
        const Rational c(parse_integer(t.at("num").get<std::string>()),
                         parse_integer(t.at("den").get<std::string>()));
        acc += FieldElement::term(c, std::move(subset));
    }
    return acc;
}

json to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"dim", m.dim()}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const json& j) {
    const int dim = j.at("dim").get<int>();
    ExactMatrix m(dim);
    const auto& rows = j.at("entries");
    if (static_cast<int>(rows.size()) != dim) throw ParseError("matrix: wrong row count");
    for (int i = 0; i < dim; ++i) {
        if (static_cast<int>(rows[std::size_t(i)].size()) != dim)
            throw ParseError("matrix: wrong column count");
        for (int k = 0; k < dim; ++k)
            m.at(i, k) = field_element_from_json(rows[std::size_t(i)][std::size_t(k)]);
    }
    return m;
}

json to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (const auto& [v, w] : g.edges()) edges.push_back(json::array({v, w}));
    return {{"vertex_count", g.vertex_count()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const json& j) {
    SimpleGraph g(j.at("vertex_count").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

namespace {

json form_to_json(const GroupForm& form) {
    if (form.kind() == FormKind::special_linear)
        return {{"kind", "special_linear"}, {"dim", form.dim()}};
    int p = 0;
    for (int i = 0; i < form.dim(); ++i)
        if (form.form_matrix().at(i, i) == FieldElement(1L)) ++p;
    return {{"kind", "orthogonal"}, {"p", p}, {"q", form.dim() - p}};
}

GroupForm form_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "special_linear") return GroupForm::special_linear(j.at("dim").get<int>());
    if (kind == "orthogonal")
        return GroupForm::orthogonal(j.at("p").get<int>(), j.at("q").get<int>());
    throw ParseError("unknown group form kind: " + kind);
}

} // namespace

json to_json(const Configuration& c) {
    json generators = json::array();
    for (const auto& g : c.generators()) generators.push_back(to_json(g));
    json edges = json::array();
    for (const auto& e : c.edges()) {
        json members = json::array();
        json directions = json::array();
        for (const auto& s : e.singular_set) {
            members.push_back(to_json(s.isometry));
            directions.push_back(json::array({s.dir_a.str(), s.dir_b.str()}));
        }
        edges.push_back({{"pair", json::array({e.v, e.w})},
                         {"singular_set", std::move(members)},
                         {"directions", std::move(directions)}});
    }
    json params = json::object();
    for (const auto& [k, v] : c.provenance().params) params[k] = v;
    return {{"graph", to_json(c.graph())},
            {"form", form_to_json(c.form())},
            {"generators", std::move(generators)},
            {"edges", std::move(edges)},
            {"provenance", {{"construction", c.provenance().construction}, {"params", params}}}};
}

Configuration configuration_from_json(const json& j) {
    SimpleGraph g = graph_from_json(j.at("graph"));
    GroupForm form = form_from_json(j.at("form"));
    std::vector<ExactMatrix> gens;
    for (const auto& m : j.at("generators")) gens.push_back(matrix_from_json(m));
    std::vector<EdgeData> edges;
    for (const auto& e : j.at("edges")) {
        EdgeData d;
        d.v = e.at("pair").at(0).get<int>();
        d.w = e.at("pair").at(1).get<int>();
        const auto& members = e.at("singular_set");
        const auto& dirs = e.at("directions");
        if (members.size() != dirs.size())
            throw ParseError("configuration: singular_set/directions size mismatch");
        for (std::size_t k = 0; k < members.size(); ++k) {
            SingularMember s{matrix_from_json(members[k]),
                             parse_integer(dirs[k].at(0).get<std::string>()),
                             parse_integer(dirs[k].at(1).get<std::string>())};
            d.singular_set.push_back(std::move(s));
        }
        d.span = flat_span_of_pair(gens.at(std::size_t(d.v)), gens.at(std::size_t(d.w)));
        edges.push_back(std::move(d));
    }
    Provenance prov;
    prov.construction = j.at("provenance").at("construction").get<std::string>();
    for (const auto& [k, v] : j.at("provenance").at("params").items())
        prov.params.push_back({k, v.get<std::string>()});
    return Configuration(std::move(g), std::move(form), std::move(gens), std::move(edges),
                         std::move(prov));
}

json to_json(const Certificate& cert) {
    json edge_checks = json::array();
    for (const auto& e : cert.edge_checks) {
        json c = {{"pair", json::array({e.v, e.w})},
                  {"unique_flat", e.unique_flat},
                  {"set_matches", e.set_matches}};
        if (e.infinite_singular)
            c["singular_count"] = "infinite";
        else
            c["singular_count"] = e.singular_count;
        edge_checks.push_back(std::move(c));
    }
    json pairs = json::array();
    for (const auto& p : cert.pairs) {
        json entry = {{"left", p.requirement.left.label()},
                      {"right", p.requirement.right.label()},
                      {"reason", reason_name(p.requirement.reason)}};
        if (p.witness)
            entry["witness"] = {{"row", p.witness->row},
                                {"col", p.witness->col},
                                {"value", to_json(p.witness->value)}};
        else
            entry["witness"] = nullptr;
        pairs.push_back(std::move(entry));
    }
    json failures = json::array();
    for (const auto& f : cert.failures) failures.push_back(f);
    return {{"construction", cert.construction},
            {"verdict", cert.verdict()},
            {"first_failure", cert.first_failure()},
            {"adjacency_ok", cert.adjacency_ok},
            {"accounting",
             {{"distinct_pairs", cert.accounting.distinct_pairs},
              {"rule_instances", cert.accounting.rule_instances},
              {"explicit_checks", cert.accounting.explicit_checks}}},
            {"edges", std::move(edge_checks)},
            {"pairs", std::move(pairs)},
            {"failures", std::move(failures)}};
}

json to_json(const SmokeReport& report) {
    json j = {{"words_checked", report.words_checked},
              {"all_nonidentity", report.all_nonidentity}};
    if (report.counterexample)
        j["counterexample"] = report.counterexample->str();
    else
        j["counterexample"] = nullptr;
    return j;
}

json fingerprint_json(const Configuration& c) {
    json prints = json::array();
    for (const auto& poly : conjugacy_fingerprint(c)) {
        json coeffs = json::array();
        for (const auto& x : poly) coeffs.push_back(to_json(x));
        prints.push_back(std::move(coeffs));
    }
    return {{"construction", c.provenance().construction}, {"fingerprints", prints}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

} // namespace raagrep
