#include "raagrep/certify.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace raagrep;

namespace {

Configuration paper_sl3() { return build_sl3(sl3_default_r1(), sl3_default_r2()); }
Configuration paper_so32() {
    return build_so32(so32_default_r1(), so32_default_r2(), so32_default_r3());
}

std::map<PairReason, std::size_t> reason_histogram(const std::vector<PairRequirement>& reqs) {
    std::map<PairReason, std::size_t> h;
    for (const auto& r : reqs) ++h[r.reason];
    return h;
}

} // namespace

TEST_CASE("required pair counts follow the three accountings") {
    const Configuration sl3 = paper_sl3();
    const auto sl3_pairs = required_pairs(sl3);
    CHECK(sl3_pairs.size() == 30); // 5 vertex pairs + 10 eta-eta + 15 eta-gamma
    const auto sl3_hist = reason_histogram(sl3_pairs);
    CHECK(sl3_hist.at(PairReason::non_edge_vertices) == 5);
    CHECK(sl3_hist.at(PairReason::eta_pairs) == 10);
    std::size_t sl3_mixed = 0;
    for (const auto& [reason, count] : sl3_hist)
        if (reason == PairReason::shared_endpoint || reason == PairReason::disjoint_edges)
            sl3_mixed += count;
    CHECK(sl3_mixed == 15); // the eta-gamma class
    const PairAccounting sl3_acc = pair_accounting(sl3);
    CHECK(sl3_acc.distinct_pairs == 30);
    CHECK(sl3_acc.rule_instances == 65);
    CHECK(sl3_acc.explicit_checks == 25);

    const Configuration so32 = paper_so32();
    const PairAccounting so32_acc = pair_accounting(so32);
    CHECK(so32_acc.distinct_pairs == 117); // 9 vertex pairs + 48 mixed + 60 eta-eta
    CHECK(so32_acc.explicit_checks == 93); // the paper's reported check count
    CHECK(so32_acc.rule_instances == 201);
    const auto so32_hist = reason_histogram(required_pairs(so32));
    CHECK(so32_hist.at(PairReason::non_edge_vertices) == 9);
    CHECK(so32_hist.at(PairReason::eta_pairs) == 60);

    const Configuration sl5 = build_sl5z(2);
    const PairAccounting sl5_acc = pair_accounting(sl5);
    CHECK(sl5_acc.distinct_pairs == 75); // 5 vertex pairs + 30 mixed + 40 eta-eta
    CHECK(sl5_acc.rule_instances == 125); // the paper's reported pair count
    CHECK(sl5_acc.explicit_checks == 55);
    const auto sl5_hist = reason_histogram(required_pairs(sl5));
    CHECK(sl5_hist.at(PairReason::non_edge_vertices) == 5);
    CHECK(sl5_hist.at(PairReason::eta_pairs) == 40);
}

TEST_CASE("required pairs never repeat a geodesic pair") {
    for (const Configuration& c : {paper_sl3(), build_sl5z(3)}) {
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& req : required_pairs(c)) {
            const std::string l = req.left.label();
            const std::string r = req.right.label();
            const auto key = std::minmax(l, r);
            CHECK(seen.insert(std::pair<std::string, std::string>(key.first, key.second)).second);
            // a requirement never pairs a geodesic with itself
            CHECK(!(resolve(c, req.left) == resolve(c, req.right)));
        }
    }
}

TEST_CASE("all three certificates pass with sound witnesses") {
    for (const Configuration& c : {paper_sl3(), paper_so32(), build_sl5z(2)}) {
        const Certificate cert = certify_configuration(c);
        CHECK(cert.pass);
        CHECK(cert.verdict() == "pass");
        CHECK(cert.adjacency_ok);
        CHECK(cert.failures.empty());
        for (const auto& e : cert.edge_checks) {
            CHECK(e.unique_flat);
            CHECK(!e.infinite_singular);
            CHECK(e.set_matches);
        }
        // witness soundness: recompute the commutator entry
        for (const auto& p : cert.pairs) {
            REQUIRE(p.witness.has_value());
            const ExactMatrix comm =
                additive_commutator(resolve(c, p.requirement.left), resolve(c, p.requirement.right));
            CHECK(comm.at(p.witness->row, p.witness->col) == p.witness->value);
            CHECK(!p.witness->value.is_zero());
        }
    }
}

TEST_CASE("the lattice witness for the first non-adjacent generator pair") {
    const Configuration c = build_sl5z(2);
    const Certificate cert = certify_configuration(c);
    bool found = false;
    for (const auto& p : cert.pairs) {
        if (p.requirement.left.label() == "g0" && p.requirement.right.label() == "g2") {
            found = true;
            CHECK(p.requirement.reason == PairReason::non_edge_vertices);
            CHECK(p.witness.has_value());
        }
    }
    CHECK(found);
}

TEST_CASE("a corrupted configuration fails fast with a named failure") {
    const Configuration good = paper_sl3();
    std::vector<ExactMatrix> gens = good.generators();
    gens[2] = gens[0]; // duplicate generators commute where they must not
    std::vector<EdgeData> edges = good.edges();
    const Configuration bad(good.graph(), good.form(), std::move(gens), std::move(edges),
                            {"sl3-corrupted", {}});
    const Certificate cert = certify_configuration(bad);
    CHECK(!cert.pass);
    CHECK(!cert.adjacency_ok);
    CHECK(!cert.first_failure().empty());
    CHECK(cert.first_failure().find("adjacency mismatch") != std::string::npos);
}

TEST_CASE("every single-generator duplication flips the verdict") {
    const Configuration good = paper_sl3();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (i == j) continue;
            std::vector<ExactMatrix> gens = good.generators();
            gens[std::size_t(i)] = gens[std::size_t(j)];
            const Configuration bad(good.graph(), good.form(), std::move(gens), good.edges(),
                                    {"sl3-mutated", {}});
            CHECK(!certify_configuration(bad).pass);
        }
}

TEST_CASE("a triangle graph is rejected as certificate data") {
    // three commuting diagonal transvections on C3: adjacency matches, but
    // the graph fails the triangle-free hypothesis
    SimpleGraph c3 = cycle_graph(3);
    std::vector<ExactMatrix> gens{sl3_t(1), sl3_t(2), sl3_t(3)};
    std::vector<EdgeData> edges;
    for (const auto& [v, w] : c3.edges()) {
        EdgeData e;
        e.v = v;
        e.w = w;
        e.span = flat_span_of_pair(gens[std::size_t(v)], gens[std::size_t(w)]);
        e.singular_set.push_back({gens[std::size_t(v)], 1, 0});
        e.singular_set.push_back({gens[std::size_t(w)], 0, 1});
        e.singular_set.push_back({gens[std::size_t(v)] * gens[std::size_t(w)], 1, 1});
        edges.push_back(std::move(e));
    }
    const Configuration c(c3, GroupForm::special_linear(3), std::move(gens), std::move(edges),
                          {"triangle", {}});
    const Certificate cert = certify_configuration(c);
    CHECK(!cert.pass);
    CHECK(cert.first_failure() == "graph contains a triangle");
}

TEST_CASE("certification survives power scaling") {
    const Configuration base = build_sl5z(2);
    for (long e : {1L, 2L, 3L}) {
        const Configuration powered = power_scale(base, {e, e, e, e, e});
        const Certificate cert = certify_configuration(powered);
        CHECK(cert.pass);
        CHECK(cert.accounting.distinct_pairs == 75);
    }
    const Configuration sl3 = paper_sl3();
    CHECK(certify_configuration(power_scale(sl3, {2, 2, 2, 2, 2})).pass);
    const Configuration so32 = paper_so32();
    CHECK(certify_configuration(power_scale(so32, {2, 2, 2, 2, 2, 2})).pass);
}

TEST_CASE("faithfulness smoke on small windows") {
    const Configuration c = build_sl5z(2);
    const SmokeReport r = faithfulness_smoke(c, 3, 1);
    CHECK(r.all_nonidentity);
    CHECK(!r.counterexample.has_value());
    CHECK(r.words_checked == 390); // 10 + 60 + 320 canonical spellings

    const SmokeReport r3 = faithfulness_smoke(paper_sl3(), 3, 2);
    CHECK(r3.all_nonidentity);

    // enumerate_words and the smoke traversal walk the same spellings
    std::size_t enumerated = 0;
    enumerate_words(c.graph(), 3, 1, [&](const Word&) { ++enumerated; });
    CHECK(enumerated == r.words_checked);
}

TEST_CASE("a non-faithful assignment is caught by the smoke test") {
    // trivial representation on a single vertex: s0^k maps to the identity
    SimpleGraph g(2);
    g.add_edge(0, 1);
    std::vector<ExactMatrix> gens{ExactMatrix::identity(2), ExactMatrix::identity(2)};
    EdgeData e;
    e.v = 0;
    e.w = 1;
    e.singular_set.push_back({gens[0], 1, 0});
    e.singular_set.push_back({gens[1], 0, 1});
    const Configuration c(g, GroupForm::special_linear(2), std::move(gens), {e}, {"trivial", {}});
    const SmokeReport r = faithfulness_smoke(c, 2, 1);
    CHECK(!r.all_nonidentity);
    REQUIRE(r.counterexample.has_value());
    CHECK(word_reduce(*r.counterexample, g) == *r.counterexample);
}

TEST_CASE("conjugacy fingerprints separate and conjugation preserves them") {
    const auto f2 = conjugacy_fingerprint(build_sl5z(2));
    const auto f2p = conjugacy_fingerprint(power_scale(build_sl5z(2), {2, 2, 2, 2, 2}));
    const auto f3 = conjugacy_fingerprint(build_sl5z(3));
    CHECK(f2 != f2p);
    CHECK(f2 != f3);
    CHECK(f2p != f3);
    // char polys of the squared generators have trace 14 blocks: the
    // fingerprint reflects eigenvalues 7 +- 4 sqrt(3)
    CHECK(f2.size() == 5);
    CHECK(f2p.size() == 5);
}
