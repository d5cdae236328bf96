#include <algorithm>

#include <gtest/gtest.h>

#include <cliquebound/verify.hpp>

#include "oracles.hpp"

using namespace cliquebound;

namespace {

bool has_witness(const VerifyReport& r, const Graph& g) {
    std::string key = key_to_hex(canonical_form(g));
    return std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const Witness& w) { return w.key == key; });
}

} // namespace

TEST(ExtremalParams, Split) {
    ExtremalParams p = extremal_params(9, 3);
    EXPECT_EQ(p.a, 2);
    EXPECT_EQ(p.b, 1);
    EXPECT_THROW(extremal_params(-1, 3), InputError);
}

TEST(ExtremalSearch, GlsExamples) {
    VerifyReport a = extremal_clique_search(8, 3, 3);
    EXPECT_EQ(a.target, "gls");
    EXPECT_EQ(a.extremal_value, 8);
    EXPECT_EQ(a.conjectured_value, 8);
    ASSERT_EQ(a.witnesses.size(), 1U);
    EXPECT_TRUE(has_witness(a, copies(2, complete_graph(4))));
    EXPECT_TRUE(a.passed());

    VerifyReport b = extremal_clique_search(7, 3, 3);
    EXPECT_EQ(b.extremal_value, 5);
    EXPECT_TRUE(has_witness(b, disjoint_union(complete_graph(4), complete_graph(3))));
    EXPECT_TRUE(b.passed());

    VerifyReport c = extremal_clique_search(5, 2, 3);
    EXPECT_EQ(c.extremal_value, 1);
    EXPECT_TRUE(c.passed());

    VerifyReport d = extremal_clique_search(8, 3, 4);
    EXPECT_EQ(d.extremal_value, 2);
    EXPECT_TRUE(d.passed());

    EXPECT_THROW(extremal_clique_search(5, 2, 2), InputError);
    EXPECT_THROW(extremal_clique_search(5, -1, 3), InputError);
}

TEST(ExtremalSearch, ExaminedMatchesEnumeration) {
    SearchSpace space;
    space.n = 7;
    space.max_degree = 3;
    EXPECT_EQ(extremal_clique_search(7, 3, 3).examined, static_cast<std::int64_t>(enumerate_graphs(space).size()));
}

TEST(ExtremalSearch, TotalExamples) {
    VerifyReport a = extremal_total_clique_search(7, 2);
    EXPECT_EQ(a.target, "total");
    EXPECT_EQ(a.extremal_value, 15);
    EXPECT_EQ(a.witnesses.size(), 2U);
    EXPECT_TRUE(has_witness(a, disjoint_union(copies(2, complete_graph(3)), complete_graph(1))));
    EXPECT_TRUE(has_witness(a, disjoint_union(complete_graph(3), cycle_graph(4))));
    EXPECT_TRUE(a.passed());

    VerifyReport b = extremal_total_clique_search(8, 2);
    EXPECT_EQ(b.extremal_value, 17);
    EXPECT_TRUE(has_witness(b, disjoint_union(complete_graph(3), cycle_graph(5))));
    EXPECT_TRUE(b.passed());

    VerifyReport c = extremal_total_clique_search(8, 3);
    EXPECT_EQ(c.extremal_value, 30);
    EXPECT_EQ(c.witnesses.size(), 1U);
    EXPECT_TRUE(c.passed());
}

TEST(ExtremalSearch, ExpectedMaximizers) {
    EXPECT_EQ(expected_total_maximizers(6, 2).size(), 1U);
    EXPECT_EQ(expected_total_maximizers(7, 2).size(), 2U);
    EXPECT_EQ(expected_total_maximizers(8, 2).size(), 2U);
    EXPECT_EQ(expected_total_maximizers(8, 3).size(), 1U);
    EXPECT_EQ(expected_total_maximizers(2, 2).size(), 1U);
}

TEST(ExtremalSearch, SpanOverloadFlagsAMismatch) {
    // Feed only the empty graph: the search must report a violation.
    auto [g, key] = canonical_graph(empty_graph(6));
    std::vector<GraphClass> one{{g, key}};
    VerifyReport r = extremal_clique_search(one, 6, 2, 3);
    EXPECT_EQ(r.extremal_value, 0);
    EXPECT_FALSE(r.passed());
    VerifyReport t = extremal_total_clique_search(one, 6, 2);
    EXPECT_FALSE(t.passed());
}

TEST(MuProblems, LexMu) {
    VerifyReport r = verify_lex_mu(4);
    EXPECT_EQ(r.target, "lex-mu");
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(mu(lex_graph(4, 3)), 3);
    EXPECT_EQ(r.detail("edge_counts"), 7);
    EXPECT_EQ(r.extremal_value, 2 * 4);
    EXPECT_THROW(verify_lex_mu(8), InputError);
}

TEST(MuProblems, StarMatching) {
    VerifyReport r = verify_star_matching(7);
    EXPECT_EQ(r.target, "star-matching");
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.extremal_value, 6);
    EXPECT_TRUE(has_witness(r, disjoint_union(star_graph(4), complete_graph(2))));
    EXPECT_EQ(r.detail("edge_counts"), 2);  // m = 4, 5
}

TEST(Clusters, Dichotomy) {
    VerifyReport r = verify_cluster_dichotomy(6, 3);
    EXPECT_EQ(r.target, "dichotomy");
    EXPECT_TRUE(r.passed());
    EXPECT_GT(*r.detail("clusters"), 0);
    EXPECT_THROW(verify_cluster_dichotomy(10, 3), InputError);
}

TEST(Clusters, StarMatchingGadgets) {
    VerifyReport r = verify_star_matching_clusters();
    EXPECT_TRUE(r.passed()) << (r.violations.empty() ? "" : r.violations[0]);
    EXPECT_EQ(r.detail("folds"), r.examined);
    EXPECT_GT(r.examined, 0);
}

TEST(Clusters, GadgetShape) {
    Graph g = make_cluster_gadget(3, path_graph(3), true);
    EXPECT_EQ(g.order(), 3 + 3 + 4);
    EXPECT_EQ(g.max_degree(), 5);
    for (Vertex v = 0; v < 6; ++v) {
        EXPECT_EQ(g.degree(v), 5);
    }
    EXPECT_THROW(make_cluster_gadget(0, path_graph(3), false), InputError);
}

TEST(Arithmetic, WeightSum) {
    EXPECT_EQ(extremal_weight_sum(2, 3, 0), 24);
    EXPECT_EQ(extremal_weight_sum(1, 2, 0), 3);
    for (int a = 0; a <= 3; ++a) {
        for (int r = 1; r <= 4; ++r) {
            for (int b = 0; b <= r; ++b) {
                Graph g = disjoint_union(copies(a, complete_graph(r + 1)), complete_graph(b));
                // Σ w(e) = 3κ_3
                EXPECT_EQ(extremal_weight_sum(a, r, b), 3 * static_cast<std::int64_t>(oracle::clique_count(g, 3)));
            }
        }
    }
}

TEST(Arithmetic, AvgwtCondition) {
    EXPECT_TRUE(avgwt_condition_holds(2, 3));
    EXPECT_FALSE(avgwt_condition_holds(1, 3));
    EXPECT_TRUE(avgwt_condition_holds(0, 0));
    EXPECT_EQ(avgwt_min_a(3), 2);
    EXPECT_EQ(avgwt_min_a(12), 5);
    VerifyReport r = verify_avgwt_lemma(12);
    EXPECT_EQ(r.target, "avgwt");
    EXPECT_TRUE(r.passed());
    EXPECT_GT(*r.extremal_value, 0);
    EXPECT_THROW(verify_avgwt_lemma(0), InputError);
    EXPECT_THROW(verify_avgwt_lemma(13), InputError);
}

TEST(Arithmetic, FiniteCalculation) {
    EXPECT_EQ(finite_calculation_max_n(3), 7);
    EXPECT_EQ(finite_calculation_max_n(4), 11);
    EXPECT_EQ(finite_calculation_max_n(5), 16);
    EXPECT_EQ(finite_calculation_max_n(6), 22);
    EXPECT_TRUE(finite_calculation_holds(6, 22));
    EXPECT_TRUE(finite_calculation_holds(3, 8));
    // a <= 1 lies outside the inequality's range
    EXPECT_FALSE(finite_calculation_holds(3, 3));
    for (int r = 3; r <= 6; ++r) {
        VerifyReport rep = verify_finite_calculation(r);
        EXPECT_TRUE(rep.passed()) << r;
        EXPECT_EQ(*rep.detail("checked") + *rep.detail("settled_a_le_1"), finite_calculation_max_n(r));
    }
    EXPECT_THROW(verify_finite_calculation(2), InputError);
    EXPECT_THROW(verify_finite_calculation(7), InputError);
}

TEST(Pipeline, SmallCases) {
    for (auto [n, r] : {std::pair{8, 3}, std::pair{7, 2}, std::pair{5, 4}, std::pair{7, 4}}) {
        VerifyReport rep = verify_main_pipeline(n, r);
        EXPECT_EQ(rep.target, "pipeline");
        EXPECT_TRUE(rep.passed()) << n << " " << r << ": " << (rep.violations.empty() ? "" : rep.violations[0]);
        EXPECT_EQ(rep.extremal_value, rep.conjectured_value);
        ASSERT_EQ(rep.witnesses.size(), 1U);
    }
    VerifyReport eight = verify_main_pipeline(8, 3);
    EXPECT_TRUE(has_witness(eight, copies(2, complete_graph(4))));
    EXPECT_GT(*eight.detail("folds"), 0);
    EXPECT_THROW(verify_main_pipeline(10, 3), InputError);
}

TEST(Report, JsonFields) {
    VerifyReport r = extremal_clique_search(5, 2, 3);
    auto j = to_json(r);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    std::vector<std::string> expected = {"target",     "space",    "examined", "extremal_value", "conjectured_value",
                                         "witnesses", "violations", "millis", "details",        "passed"};
    EXPECT_EQ(keys, expected);
    EXPECT_EQ(j["space"]["n"], 5);
    EXPECT_EQ(j["passed"], true);
    EXPECT_TRUE(j["witnesses"][0].contains("graph6"));

    VerifyReport empty;
    auto e = to_json(empty);
    EXPECT_TRUE(e["extremal_value"].is_null());
}
