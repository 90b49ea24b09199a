#include "doctest.h"
#include "oracles.hpp"

#include "planram/canonical.hpp"
#include "planram/construct.hpp"
#include "planram/error.hpp"
#include "planram/graph6.hpp"
#include "planram/ramsey.hpp"
#include "planram/subgraph.hpp"

#include <fstream>

using namespace planram;

namespace {

VerifyOptions workers(int w)
{
    VerifyOptions o;
    o.workers = w;
    return o;
}

// Independent census of the wheel condition over every labelled-up-to-isomorphism class
// from the brute-force oracle (n <= 6).
bool oracle_all_complements_have_wheel(int n, int m)
{
    for (const Graph& g : oracle::c4free_planar_classes(n))
        if (!oracle::has_wheel(g.complement(), m))
            return false;
    return true;
}

} // namespace

TEST_CASE("certificate JSON has sorted keys, integer fields and round-trips")
{
    Certificate c;
    c.claim_id = "fact1";
    c.verdict = Verdict::refuted;
    c.exhaustive = true;
    c.witnesses = {"Dhc"};
    c.counts = {{"zeta", 1}, {"alpha", -2}};
    c.params = {{"n", 16}};
    c.notes = {{"why", "test"}};
    c.runtime_ms = 12;
    c.version = "test";
    const std::string text = to_json(c);
    CHECK(text.find("\"claim_id\"") < text.find("\"counts\""));
    CHECK(text.find("\"alpha\"") < text.find("\"zeta\""));
    CHECK(text.find('.') == std::string::npos);
    CHECK(text.back() == '\n');
    Certificate back = certificate_from_json(text);
    CHECK(to_json(back) == text);
    CHECK(to_json(c, false).find("runtime_ms") == std::string::npos);
    CHECK_THROWS_AS(certificate_from_json("{"), Error);
    CHECK_THROWS_AS(certificate_from_json("{\"claim_id\": 1}"), Error);
}

TEST_CASE("exit codes")
{
    std::vector<Certificate> cs(2);
    cs[0].verdict = Verdict::verified;
    cs[1].verdict = Verdict::verified;
    CHECK(exit_code(cs) == 0);
    cs[1].verdict = Verdict::infeasible;
    CHECK(exit_code(cs) == 2);
    cs[0].verdict = Verdict::refuted;
    CHECK(exit_code(cs) == 1);
}

TEST_CASE("PR table")
{
    CHECK(pr_table(3).claimed_pr == 10);
    CHECK(pr_table(7).claimed_pr == 11);
    CHECK(pr_table(40).claimed_pr == 45);
    Certificate lower = verify_pr_lower(6);
    Certificate upper = verify_pr_upper(6, 9);
    std::vector<Certificate> stored{lower, upper};
    RamseyVerdict v = pr_table(6, stored);
    CHECK(v.lower_ok);
    CHECK(v.upper_ok);
    CHECK(v.lower_witness.order() == 8);
    CHECK_FALSE(pr_table(5, stored).lower_ok);
}

TEST_CASE("edge bound")
{
    // delta >= 5 is impossible for every n; delta 4 exactly below 30.
    for (int n = 5; n <= 64; ++n) {
        CHECK(edge_bound_excludes(n, 5));
        CHECK(edge_bound_excludes(n, 4) == (n < 30));
    }
}

TEST_CASE("pr upper: small cases and the maximality reduction")
{
    Certificate c = verify_pr_upper(6, 9);
    CHECK(c.verdict == Verdict::verified);
    CHECK(c.exhaustive);
    CHECK(c.witnesses.empty());
    CHECK(c.counts.at("maximal_classes") > 0);

    Certificate r = verify_pr_upper(5, 9);
    CHECK(r.verdict == Verdict::refuted);
    REQUIRE(r.witnesses.size() == 1);
    const Graph w = from_graph6(r.witnesses[0]);
    CHECK(w.order() == 9);
    CHECK_FALSE(oracle::has_c4(w));
    CHECK(oracle::planar(w));
    CHECK_FALSE(oracle::has_wheel(w.complement(), 5));
    CHECK(revalidate(r).empty());

    // The maximal and full runs agree up to 8 vertices (checked inside), and on orders
    // the brute-force oracle covers they agree with it.
    for (int n = 4; n <= 6; ++n)
        for (int m = 3; m + 1 <= n; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            Certificate x = verify_pr_upper(m, n);
            CHECK((x.verdict == Verdict::verified) == oracle_all_complements_have_wheel(n, m));
            CHECK(x.counts.count("full_classes") == 1);
        }
    for (int n = 7; n <= 8; ++n)
        for (int m = 3; m <= 6; ++m)
            CHECK_NOTHROW(verify_pr_upper(m, n));
}

TEST_CASE("pr upper beyond the desk-scale limit is infeasible, never verified")
{
    Certificate c = verify_pr_upper(8, 12);
    CHECK(c.verdict == Verdict::infeasible);
    CHECK_FALSE(c.exhaustive);
    VerifyOptions tiny;
    tiny.budget_nodes = 10;
    Certificate b = verify_pr_upper(6, 9, tiny);
    CHECK(b.verdict == Verdict::infeasible);
}

TEST_CASE("pr lower witnesses")
{
    for (int m = 3; m <= 7; ++m) {
        CAPTURE(m);
        Certificate c = verify_pr_lower(m);
        CHECK(c.verdict == Verdict::verified);
        REQUIRE(c.witnesses.size() == 1);
        const Graph g = from_graph6(c.witnesses[0]);
        CHECK(g.order() == claimed_pr(m) - 1);
        CHECK_FALSE(oracle::has_wheel(g.complement(), m));
        CHECK(revalidate(c).empty());
    }
    CHECK(from_graph6(verify_pr_lower(4).witnesses[0]) == load_seed("fig12a").graph);
    Certificate c26 = verify_pr_lower(26);
    CHECK(c26.verdict == Verdict::verified);
    CHECK(c26.notes.at("wheel_check") == "exact_search");
    CHECK(c26.counts.at("complement_max_degree") == 25);
    Certificate c40 = verify_pr_lower(40);
    CHECK(c40.verdict == Verdict::verified);
    CHECK(c40.notes.at("wheel_check") == "degree_argument");
    CHECK(from_graph6(c40.witnesses[0]).order() == 44);
    CHECK(verify_pr_lower(61).verdict == Verdict::infeasible);
}

TEST_CASE("delta: exhaustive upper bounds up to 12, edge bound above")
{
    for (int n = 5; n <= 12; ++n) {
        CAPTURE(n);
        Certificate c = verify_delta(n);
        CHECK(c.verdict == Verdict::verified);
        CHECK(c.exhaustive);
        CHECK(c.params.at("claimed_delta") == (n <= 9 ? 2 : 3));
        CHECK(c.notes.at("upper_bound_method") == "enumeration");
        CHECK(c.counts.at("upper_classes") == 0);
        CHECK(revalidate(c).empty());
    }
    CHECK(from_graph6(verify_delta(9).witnesses[0]) == graphs::cycle(9));
    CHECK(verify_delta(10).counts.at("euler_route_classes") == 0);
    Certificate c30 = verify_delta(30);
    CHECK(c30.verdict == Verdict::verified);
    CHECK(c30.notes.at("upper_bound_method") == "edge_bound");
    CHECK(c30.notes.at("witness_seed") == "fig8a");
    for (int n : {31, 35, 43}) {
        Certificate c = verify_delta(n);
        CHECK(c.verdict == Verdict::infeasible);
        CHECK(c.witnesses.size() == 1);
        CHECK(revalidate(c).empty());
    }
    CHECK_THROWS_AS(verify_delta(4), Error);
}

TEST_CASE("delta upper bounds: oracle cross-check at small orders")
{
    // Nothing with minimum degree 3 on 6 vertices or fewer, by brute force.
    for (int n = 5; n <= 6; ++n)
        for (const Graph& g : oracle::c4free_planar_classes(n))
            CHECK(g.min_degree() <= 2);
}

TEST_CASE("facts 1 and 2 and their property checks")
{
    Certificate f1 = check_fact("fact1");
    CHECK(f1.verdict == Verdict::verified);
    CHECK(f1.counts.at("classes") == 3);
    CHECK(f1.witnesses.size() == 3);
    CHECK(revalidate(f1).empty());
    Certificate f2 = check_fact("fact2");
    CHECK(f2.verdict == Verdict::verified);
    CHECK(f2.counts.at("classes") == 4);
    CHECK(revalidate(f2).empty());
    CHECK(check_fact("fact1_property").verdict == Verdict::verified);
    Certificate p2 = check_fact("fact2_property");
    CHECK(p2.verdict == Verdict::verified);
    CHECK(p2.counts.at("in_scope") == 3);
    CHECK(p2.counts.at("unscoped_hits") == 1);

    // The stored census files agree with the certificates.
    for (auto [file, cert] : {std::pair{"triangulations_16_mindeg5.g6", &f1}, std::pair{"triangulations_17_mindeg5.g6", &f2}}) {
        std::ifstream in(oracle::data_path(file));
        const std::vector<Graph> stored = read_graph6_lines(in);
        REQUIRE(stored.size() == cert->witnesses.size());
        for (const Graph& s : stored) {
            bool found = false;
            for (const std::string& w : cert->witnesses)
                found = found || isomorphic(s, from_graph6(w));
            CHECK(found);
        }
    }
}

TEST_CASE("fact3 needs the long-running flag")
{
    Certificate c = check_fact("fact3");
    CHECK(c.verdict == Verdict::infeasible);
    CHECK_FALSE(c.exhaustive);
    CHECK_THROWS_AS(check_fact("fact4"), Error);
}

TEST_CASE("lemma suite")
{
    Certificate c = lemma_property_suite(9);
    CHECK(c.verdict == Verdict::verified);
    CHECK(c.exhaustive);
    CHECK(c.counts.at("lemma15_violations") == 0);
    CHECK(c.counts.at("lemma16_violations") == 0);
    CHECK(c.counts.at("lemma16_applicable") > 0);
    CHECK(c.counts.at("pancyclic_violations") == 0);
    CHECK(c.counts.at("lemma17_violations") == 0);
    CHECK(c.counts.at("classes_n8") == 351);
    CHECK(c.witnesses.empty());
    CHECK_THROWS_AS(lemma_property_suite(12), Error);

    // Oracle: complements of C4-free planar graphs on 6 vertices have independence <= 3.
    for (const Graph& g : oracle::c4free_planar_classes(6))
        CHECK(oracle::independence(g.complement()) <= 3);
}

TEST_CASE("certificates are identical across worker counts")
{
    for (int w : {1, 2, 3}) {
        CAPTURE(w);
        CHECK(to_json(verify_pr_upper(6, 9, workers(w)), false) == to_json(verify_pr_upper(6, 9, workers(1)), false));
        CHECK(to_json(check_fact("fact1", workers(w)), false) == to_json(check_fact("fact1", workers(1)), false));
        CHECK(to_json(verify_delta(10, workers(w)), false) == to_json(verify_delta(10, workers(1)), false));
        CHECK(to_json(lemma_property_suite(8, workers(w)), false) == to_json(lemma_property_suite(8, workers(1)), false));
    }
}

TEST_CASE("revalidation catches tampered witnesses")
{
    Certificate c = verify_pr_lower(5);
    REQUIRE(revalidate(c).empty());
    Certificate bad = c;
    bad.witnesses[0] = to_graph6(graphs::cycle(4));
    CHECK_FALSE(revalidate(bad).empty());
    Certificate d = verify_delta(10);
    d.witnesses[0] = to_graph6(graphs::cycle(10));
    CHECK_FALSE(revalidate(d).empty());
    Certificate f = check_fact("fact1");
    f.witnesses[1] = f.witnesses[0];
    CHECK_FALSE(revalidate(f).empty());
    Certificate u;
    u.claim_id = "nonsense";
    CHECK_FALSE(revalidate(u).empty());
}
