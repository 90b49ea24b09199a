#include "doctest.h"
#include "oracles.hpp"

#include "planram/canonical.hpp"
#include "planram/construct.hpp"
#include "planram/error.hpp"
#include "planram/planar_code.hpp"
#include "planram/subgraph.hpp"

#include <algorithm>
#include <random>

using namespace planram;

namespace {

ErrorKind kind_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::OutOfRange;
}

int long_face(const PlaneEmbedding& e)
{
    for (int f = 0; f < static_cast<int>(e.faces().size()); ++f)
        if (e.faces()[f].length() >= 6)
            return f;
    return -1;
}

// First valid Operation A on e.
PlaneEmbedding grow_a(const PlaneEmbedding& e)
{
    for (int f = 0; f < static_cast<int>(e.faces().size()); ++f) {
        const auto& w = e.faces()[f].boundary;
        const int k = static_cast<int>(w.size());
        if (k < 6)
            continue;
        for (int i = 0; i < k; ++i)
            try {
                return operation_a(e, f, w[i], w[(i + 3) % k]);
            } catch (const Error&) {
            }
    }
    FAIL("no valid Operation A");
    return e;
}

void check_independently(const Graph& g)
{
    CHECK_FALSE(oracle::has_c4(g));
    CHECK(oracle::planar(g));
}

} // namespace

TEST_CASE("seeds load and their claims hold")
{
    for (const std::string& name : seed_names()) {
        CAPTURE(name);
        SeedGraphRecord r = load_seed(name);
        CHECK(r.graph.order() == r.claimed.order);
        CHECK(r.embedding.is_plane());
        check_independently(r.graph);
    }
    SeedGraphRecord a = load_seed("fig8a");
    CHECK(a.graph.order() == 30);
    CHECK(a.graph.min_degree() == 4);
    CHECK(a.graph.max_degree() == 4);
    CHECK(a.graph.edge_count() == 60);
    for (const char* name : {"fig8b", "fig8c", "fig8d", "fig8e"})
        CHECK(load_seed(name).graph.min_degree() == 4);
    CHECK(load_seed("fig8b").graph.order() == 36);
    CHECK(load_seed("fig8c").graph.order() == 44);
    CHECK(load_seed("fig8d").graph.order() == 46);
    CHECK(load_seed("fig8e").graph.order() == 47);
    SeedGraphRecord t = load_seed("fig10");
    CHECK(t.graph.order() == 10);
    CHECK(t.graph.min_degree() == 3);
    CHECK_FALSE(oracle::has_wheel(load_seed("fig12a").graph.complement(), 4));
    CHECK_FALSE(oracle::has_wheel(load_seed("fig12b").graph.complement(), 5));
    CHECK_FALSE(oracle::has_wheel(load_seed("fig12c").graph.complement(), 6));
    CHECK(load_seed("fig12b").graph.order() == 9);
}

TEST_CASE("seed loading rejects unknown names and wrong claims")
{
    CHECK(kind_of([] { load_seed("fig9"); }) == ErrorKind::UnknownSeed);
    SeedGraphRecord r = load_seed("fig8a");
    ClaimedProperties wrong = r.claimed;
    wrong.order = 31;
    CHECK_FALSE(failed_claim(r.embedding, wrong).empty());
    wrong = r.claimed;
    wrong.edges = 61;
    CHECK_FALSE(failed_claim(r.embedding, wrong).empty());
    wrong = r.claimed;
    wrong.long_faces = 1;
    CHECK_FALSE(failed_claim(r.embedding, wrong).empty());
    // A 4-cycle is caught.
    PlaneEmbedding c4 = embed(graphs::cycle(4));
    CHECK(failed_claim(c4, ClaimedProperties{4, 2, true, true, 4, 0, 0}) == "graph contains a 4-cycle");
}

TEST_CASE("operation A grows fig8b by three vertices at a time")
{
    PlaneEmbedding e = load_seed("fig8b").embedding;
    const int f = long_face(e);
    REQUIRE(f >= 0);
    PlaneEmbedding e39 = grow_a(e);
    CHECK(e39.order() == 39);
    CHECK(e39.graph().edge_count() == e.graph().edge_count() + 6);
    CHECK(e39.graph().min_degree() == 4);
    CHECK(long_face(e39) >= 0);
    check_independently(e39.graph());
    PlaneEmbedding e42 = grow_a(e39);
    CHECK(e42.order() == 42);
    CHECK(e42.graph().min_degree() == 4);
    check_independently(e42.graph());
}

TEST_CASE("operation A parameter errors")
{
    PlaneEmbedding e = load_seed("fig8b").embedding;
    const int f = long_face(e);
    const auto& w = e.faces()[f].boundary;
    CHECK(kind_of([&] { operation_a(e, -1, 0, 1); }) == ErrorKind::BadFace);
    CHECK(kind_of([&] { operation_a(e, f, w[0], w[2]); }) == ErrorKind::BadDistance);
    int short_face = 0;
    while (e.faces()[short_face].length() >= 6)
        ++short_face;
    const auto& s = e.faces()[short_face].boundary;
    CHECK(kind_of([&] { operation_a(e, short_face, s[0], s[1]); }) == ErrorKind::BadFace);
}

TEST_CASE("operation A sweep: vertex and edge deltas, degrees of the halves")
{
    for (const char* name : {"fig8b", "fig8d", "fig8e"}) {
        PlaneEmbedding e = load_seed(name).embedding;
        const Graph& g = e.graph();
        int applied = 0;
        for (int f = 0; f < static_cast<int>(e.faces().size()); ++f) {
            const auto& w = e.faces()[f].boundary;
            const int k = static_cast<int>(w.size());
            if (k < 6)
                continue;
            for (int i = 0; i < k; ++i) {
                const int u = w[i], v = w[(i + 3) % k];
                PlaneEmbedding out;
                try {
                    out = operation_a(e, f, u, v);
                } catch (const Error& err) {
                    CHECK(err.kind() != ErrorKind::PropertyViolation);
                    continue;
                }
                ++applied;
                const Graph& h = out.graph();
                const int n = g.order();
                CHECK(h.order() == n + 3);
                CHECK(h.edge_count() == g.edge_count() + 6);
                CHECK(h.degree(n + 2) == 4);
                CHECK(h.degree(u) + h.degree(n) == g.degree(u) + 4);
                CHECK(h.degree(v) + h.degree(n + 1) == g.degree(v) + 4);
                CHECK(h.min_degree() == 4);
                check_independently(h);
            }
        }
        CAPTURE(name);
        CHECK(applied > 0);
    }
}

TEST_CASE("operation B from fig8a")
{
    PlaneEmbedding e = load_seed("fig8a").embedding;
    PlaneEmbedding b = operation_b(e, 0);
    CHECK(b.order() == 31);
    CHECK(b.graph().min_degree() == 3);
    check_independently(b.graph());
    const auto seq = b.graph().degree_sequence();
    CHECK(seq.count(3) == 2);
    CHECK(seq.count(4) == 29);

    // Thirteen times reaches 43 vertices.
    PlaneEmbedding cur = e;
    for (int step = 0; step < 13; ++step) {
        bool done = false;
        for (int v = 0; v < cur.order() && !done; ++v) {
            if (cur.graph().degree(v) != 4)
                continue;
            for (int i = 0; i < 4 && !done; ++i)
                try {
                    cur = operation_b(cur, v, i);
                    done = true;
                } catch (const Error&) {
                }
        }
        REQUIRE(done);
    }
    CHECK(cur.order() == 43);
    CHECK(cur.graph().min_degree() == 3);
    check_independently(cur.graph());
}

TEST_CASE("operation B sweep and inverse round trip")
{
    for (const char* name : {"fig8a", "fig8b", "fig8c", "fig10"}) {
        PlaneEmbedding e = load_seed(name).embedding;
        const Graph& g = e.graph();
        int applied = 0;
        for (int v = 0; v < e.order(); ++v) {
            if (g.degree(v) != 4) {
                CHECK(kind_of([&] { operation_b(e, v); }) == ErrorKind::BadVertex);
                continue;
            }
            for (int i = 0; i < 4; ++i) {
                PlaneEmbedding out;
                try {
                    out = operation_b(e, v, i);
                } catch (const Error& err) {
                    CHECK(err.kind() != ErrorKind::PropertyViolation);
                    continue;
                }
                ++applied;
                const Graph& h = out.graph();
                CHECK(h.order() == g.order() + 1);
                CHECK(h.degree(v) == 3);
                CHECK(h.degree(g.order()) == 3);
                CHECK(h.degree_sequence().count(4) == g.degree_sequence().count(4) - 1);
                CHECK(h.degree_sequence().count(3) == g.degree_sequence().count(3) + 2);
                check_independently(h);
                PlaneEmbedding back = operation_b_inverse(out, v, g.order());
                CHECK(isomorphic(back.graph(), g));
                CHECK(back == e);
            }
        }
        CAPTURE(name);
        CHECK(applied > 0);
    }
}

TEST_CASE("operation B inverse errors")
{
    PlaneEmbedding e = load_seed("fig10").embedding;
    CHECK(kind_of([&] { operation_b_inverse(e, 0, 2); }) == ErrorKind::BadEdge);
    // Both ends of 8-0 do not have degree 3.
    CHECK(kind_of([&] { operation_b_inverse(e, 0, 8); }) == ErrorKind::BadEdge);
    // Merging the ends of a path inside a triangle-free region can close a 4-cycle.
    bool saw_violation = false;
    for (int n = 11; n <= 29 && !saw_violation; ++n) {
        PlaneEmbedding w = build_delta_witness(n).final_embedding;
        for (const Edge& uv : w.graph().edges()) {
            try {
                operation_b_inverse(w, uv.u, uv.v);
            } catch (const Error& err) {
                if (err.kind() == ErrorKind::PropertyViolation)
                    saw_violation = true;
            }
        }
    }
    CHECK(saw_violation);
}

TEST_CASE("operation C adds two vertices and keeps minimum degree 3")
{
    PlaneEmbedding e = load_seed("fig10").embedding;
    // fig10 has no face of length >= 6.
    for (const Edge& uv : e.graph().edges())
        CHECK(kind_of([&] { operation_c(e, uv.u, uv.v); }) == ErrorKind::BadEdge);
    PlaneEmbedding b = operation_b(e, 8);
    int applied = 0;
    for (const Edge& uv : b.graph().edges())
        for (bool mirrored : {false, true})
            for (auto [t, s] : {std::pair{uv.u, uv.v}, std::pair{uv.v, uv.u}}) {
                PlaneEmbedding out;
                try {
                    out = operation_c(b, t, s, mirrored);
                } catch (const Error& err) {
                    CHECK(err.kind() != ErrorKind::PropertyViolation);
                    continue;
                }
                ++applied;
                CHECK(out.order() == b.order() + 2);
                CHECK(out.graph().edge_count() == b.graph().edge_count() + 4);
                CHECK(out.graph().min_degree() == 3);
                CHECK(out.graph().degree(b.order()) == 3);
                CHECK(out.graph().degree(b.order() + 1) == 3);
                check_independently(out.graph());
            }
    CHECK(applied > 0);
}

TEST_CASE("operation C sweep on grown graphs, both chiralities")
{
    std::mt19937_64 rng(7);
    int applied[2] = {0, 0};
    for (int n : {14, 19, 25, 33, 40}) {
        PlaneEmbedding e = build_delta_witness(n).final_embedding;
        for (const Edge& uv : e.graph().edges())
            for (int mirrored = 0; mirrored < 2; ++mirrored) {
                PlaneEmbedding out;
                try {
                    out = operation_c(e, uv.u, uv.v, mirrored != 0);
                } catch (const Error& err) {
                    CHECK(err.kind() != ErrorKind::PropertyViolation);
                    continue;
                }
                ++applied[mirrored];
                CHECK(out.order() == e.order() + 2);
                CHECK(out.graph().min_degree() == e.graph().min_degree());
                if (rng() % 4 == 0)
                    check_independently(out.graph());
            }
    }
    CHECK(applied[0] > 0);
    CHECK(applied[1] > 0);
}

TEST_CASE("traces serialize and replay byte for byte")
{
    for (int n : {7, 12, 23, 31, 39, 44, 50}) {
        CAPTURE(n);
        ConstructionTrace t = build_delta_witness(n);
        const std::string text = trace_to_text(t);
        ConstructionTrace back = trace_from_text(text);
        CHECK(back.seed == t.seed);
        CHECK(back.steps.size() == t.steps.size());
        CHECK(trace_to_text(back) == text);
        CHECK(to_planar_code(back.final_embedding) == to_planar_code(t.final_embedding));
        CHECK(to_planar_code(replay(t)) == to_planar_code(replay(t)));
    }
    CHECK(kind_of([] { trace_from_text("seed fig10\nend\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { trace_from_text("planram-trace v1\nseed fig10\nB 8\nend\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { trace_from_text("planram-trace v1\nseed fig10\nD 1 2\nend\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { trace_from_text("planram-trace v1\nseed fig10\nB 8 -1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { trace_from_text("planram-trace v1\nseed fig10\nB 0 -1\nend\n"); }) == ErrorKind::BadVertex);
    CHECK(kind_of([] { trace_from_text("planram-trace v1\nseed nope\nend\n"); }) == ErrorKind::UnknownSeed);
}

TEST_CASE("delta table")
{
    for (int n = 5; n <= 9; ++n)
        CHECK(claimed_delta(n) == 2);
    for (int n : {30, 36, 39, 42, 44, 45, 64})
        CHECK(claimed_delta(n) == 4);
    for (int n : {10, 29, 31, 35, 37, 38, 40, 41, 43})
        CHECK(claimed_delta(n) == 3);
    CHECK(kind_of([] { claimed_delta(4); }) == ErrorKind::UnsupportedOrder);
}

TEST_CASE("delta witnesses for every order 5..47")
{
    for (int n = 5; n <= 47; ++n) {
        CAPTURE(n);
        ConstructionTrace t = build_delta_witness(n);
        const Graph& g = t.final_embedding.graph();
        CHECK(g.order() == n);
        CHECK(g.min_degree() == claimed_delta(n));
        CHECK(t.final_embedding.is_plane());
        check_independently(g);
    }
    CHECK(build_delta_witness(7).seed == "cycle:7");
    CHECK(build_delta_witness(7).final_embedding.graph() == graphs::cycle(7));
    CHECK(build_delta_witness(30).seed == "fig8a");
    CHECK(build_delta_witness(30).steps.empty());
    CHECK(build_delta_witness(44).seed == "fig8c");
    CHECK(build_delta_witness(44).steps.empty());
    CHECK(build_delta_witness(39).seed == "fig8b");
    CHECK(build_delta_witness(39).steps.size() == 1);
    for (int n = 48; n <= 64; ++n)
        CHECK(build_delta_witness(n).final_embedding.graph().min_degree() == 4);
    CHECK(kind_of([] { build_delta_witness(4); }) == ErrorKind::UnsupportedOrder);
    CHECK(kind_of([] { build_delta_witness(65); }) == ErrorKind::UnsupportedOrder);
}

TEST_CASE("planar Ramsey table")
{
    CHECK(claimed_pr(3) == 10);
    CHECK(claimed_pr(4) == 9);
    CHECK(claimed_pr(5) == 10);
    CHECK(claimed_pr(6) == 9);
    for (int n = 7; n <= 25; ++n)
        CHECK(claimed_pr(n) == n + 4);
    for (int n : {26, 32, 35, 38, 40, 41, 59})
        CHECK(claimed_pr(n) == n + 5);
    for (int n : {27, 28, 29, 30, 31, 33, 34, 36, 37, 39})
        CHECK(claimed_pr(n) == n + 4);
}

TEST_CASE("Ramsey lower witnesses")
{
    for (int m = 3; m <= 8; ++m) {
        CAPTURE(m);
        Graph g = build_ramsey_lower_witness(m);
        CHECK(g.order() == claimed_pr(m) - 1);
        check_independently(g);
        CHECK_FALSE(oracle::has_wheel(g.complement(), m));
    }
    CHECK(build_ramsey_lower_witness(5) == load_seed("fig12b").graph);
    CHECK(build_ramsey_lower_witness(7).min_degree() == 3);
    Graph g26 = build_ramsey_lower_witness(26);
    CHECK(g26.order() == 30);
    CHECK(g26.complement().max_degree() == 25);
    Graph g40 = build_ramsey_lower_witness(40);
    CHECK(g40.order() == 44);
    CHECK(g40.min_degree() == 4);
    CHECK(g40.complement().max_degree() < 40);
    CHECK(kind_of([] { build_ramsey_lower_witness(61); }) == ErrorKind::UnsupportedOrder);
    CHECK(kind_of([] { build_ramsey_lower_witness(2); }) == ErrorKind::UnsupportedOrder);
}
