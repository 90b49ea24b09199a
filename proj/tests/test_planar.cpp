#include "doctest.h"
#include "oracles.hpp"

#include "planram/error.hpp"
#include "planram/graph6.hpp"
#include "planram/planar.hpp"
#include "planram/planar_code.hpp"
#include "planram/subgraph.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace planram;

namespace {

void check_embedding_invariants(const PlaneEmbedding& e)
{
    const Graph& g = e.graph();
    int total = 0;
    for (const Face& f : e.faces())
        total += f.length();
    REQUIRE(total == 2 * g.edge_count());
    REQUIRE(e.euler_characteristic() == 2);
    // Each dart lies on exactly one face walk.
    std::map<std::pair<int, int>, int> darts;
    for (const Face& f : e.faces())
        for (int i = 0; i < f.length(); ++i)
            ++darts[{f.boundary[i], f.boundary[(i + 1) % f.length()]}];
    REQUIRE(static_cast<int>(darts.size()) == 2 * g.edge_count());
    for (auto& [d, c] : darts)
        REQUIRE(c == 1);
}

} // namespace

TEST_CASE("planarity of small named graphs")
{
    CHECK(is_planar(graphs::complete(4)));
    CHECK_FALSE(is_planar(graphs::complete(5)));
    CHECK_FALSE(is_planar(graphs::complete_bipartite(3, 3)));
    CHECK(is_planar(graphs::icosahedron()));
    CHECK(is_planar(graphs::dodecahedron()));
    Graph petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.add_edge(i, (i + 1) % 5);
        petersen.add_edge(i, i + 5);
        petersen.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    CHECK_FALSE(is_planar(petersen));
}

TEST_CASE("planarity agrees with boyer-myrvold on random graphs")
{
    std::mt19937_64 rng(43);
    for (int i = 0; i < 4000; ++i) {
        const int n = 5 + i % 10;
        Graph g = oracle::random_graph(n, 2.6 / n + 0.05 * (i % 4), rng);
        bool p = is_planar(g);
        REQUIRE(p == oracle::planar(g));
        if (p && g.is_connected())
            check_embedding_invariants(embed(g));
    }
}

TEST_CASE("embeddings of cycles and K4")
{
    PlaneEmbedding c5 = embed(graphs::cycle(5));
    CHECK(c5.faces().size() == 2);
    CHECK(c5.face_census() == std::map<int, int>{{5, 2}});
    PlaneEmbedding k4 = embed(graphs::complete(4));
    CHECK(k4.face_census() == std::map<int, int>{{3, 4}});
    CHECK_THROWS_AS(embed(graphs::complete(5)), Error);
    CHECK_THROWS_AS(embed(graphs::empty(3)), Error);
    PlaneEmbedding k1 = embed(graphs::empty(1));
    CHECK(k1.faces().size() == 1);
    CHECK(k1.faces()[0].length() == 0);
}

TEST_CASE("gamma and tau")
{
    CHECK(gamma(graphs::complete(4)).tau == 0);
    CHECK(gamma(graphs::cycle(5)).tau == 5);
    Graph g = graphs::complete(3);
    g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    GammaReport r = gamma(g);
    CHECK(r.tau == 1);
    CHECK(r.gamma_edges[0] == Edge{2, 3});
    CHECK(r.induced.order() == 2);
}

TEST_CASE("gamma does not depend on the embedding")
{
    Graph g = graphs::dodecahedron();
    PlaneEmbedding e = embed(g);
    std::vector<int> p(20);
    for (int i = 0; i < 20; ++i)
        p[i] = (7 * i + 3) % 20;
    Graph h = g.relabeled(p);
    CHECK(gamma(h).tau == gamma(g).tau);
    CHECK(gamma(e.graph()).tau == 30);
}

TEST_CASE("vertex-edge dual")
{
    CHECK(vertex_edge_dual(embed(graphs::complete(4))).order() == 0);
    Graph c6dual = vertex_edge_dual(embed(graphs::cycle(6)));
    CHECK(c6dual.order() == 2);
    CHECK(c6dual.edge_count() == 0);
    Graph d = vertex_edge_dual(embed(graphs::dodecahedron()));
    CHECK(d.order() == 12);
    CHECK(d.edge_count() == 30);
    CHECK(d.degree_sequence().to_string() == "5^12");
    CHECK(vertex_edge_dual(embed(graphs::icosahedron())).order() == 0);
    CHECK(vertex_edge_dual(embed(graphs::octahedron())).order() == 0);
}

TEST_CASE("edge identity on small graphs")
{
    EdgeIdentity c5 = edge_identity(embed(graphs::cycle(5)));
    CHECK(c5.residual == 0);
    CHECK(c5.within_bound);
    Graph k4 = graphs::complete(4);
    CHECK_THROWS_AS(edge_identity(embed(k4)), Error);
    CHECK_THROWS_AS(edge_identity(embed(graphs::cycle(4))), Error);
    CHECK(edge_identity(embed(graphs::dodecahedron())).residual == 0);
    CHECK(edge_identity(embed(graphs::path(5))).residual == 0);
    // Degenerate orders: the identity does not hold below four vertices.
    CHECK(edge_identity(embed(graphs::empty(1))).residual == 15);
    CHECK(edge_identity(embed(graphs::path(2))).residual == 9);
    CHECK(edge_identity(embed(graphs::path(3))).residual == 3);
    CHECK(edge_identity(embed(graphs::complete(3))).residual == 6);
}

TEST_CASE("each separating triangle lowers the residual by six")
{
    // Triangle 0,1,2 with a pendant path inside and outside: both embeddings exist.
    Graph g = Graph::from_edges(7, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {1, 5}, {5, 6}});
    PlaneEmbedding good = embed(g);
    CHECK(nonfacial_triangles(good) == 0);
    CHECK(edge_identity(good).residual == 0);
    // Put the pendant path at 1 on the other side of the triangle.
    auto rot = good.rotations();
    std::vector<std::vector<int>> flipped = rot;
    auto& r1 = flipped[1];
    // Move 5 to the opposite corner at vertex 1.
    r1.erase(std::find(r1.begin(), r1.end(), 5));
    std::vector<int> others;
    for (int x : r1)
        others.push_back(x);
    // Vertex 1 has neighbours 0, 2 and 5; the two cyclic orders differ in which side 5 is on.
    std::vector<int> alt1{others[0], 5, others[1]}, alt2{others[1], 5, others[0]};
    int seen_nonfacial = 0;
    for (auto alt : {alt1, alt2}) {
        flipped[1] = alt;
        PlaneEmbedding e(g, flipped);
        REQUIRE(e.is_plane());
        int t = nonfacial_triangles(e);
        seen_nonfacial += t;
        CHECK(edge_identity(e).residual == -6 * t);
    }
    CHECK(seen_nonfacial >= 1);
}

TEST_CASE("separating cycles")
{
    PlaneEmbedding c5 = embed(graphs::cycle(5));
    std::vector<int> cyc{0, 1, 2, 3, 4};
    CHECK_FALSE(separating_cycle(c5, cyc));
    PlaneEmbedding k4 = embed(graphs::complete(4));
    for (auto t : std::vector<std::vector<int>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}})
        CHECK_FALSE(separating_cycle(k4, t));
    CHECK_THROWS_AS(separating_cycle(k4, std::vector<int>{0, 1}), Error);
    Graph c5g = graphs::cycle(5);
    CHECK_THROWS_AS(separating_cycle(c5, std::vector<int>{0, 2, 4}), Error);

    // Octahedron: all eight triangles are faces, the three 4-cycles through opposite pairs separate.
    PlaneEmbedding oct = embed(graphs::octahedron());
    const Graph& o = oct.graph();
    int sep_triangles = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                if (o.adjacent(a, b) && o.adjacent(b, c) && o.adjacent(a, c))
                    sep_triangles += separating_cycle(oct, std::vector<int>{a, b, c});
    CHECK(sep_triangles == 0);
    // Non-edges are {0,1}, {2,3}, {4,5}; the equator avoiding 0 and 1 is 2-4-3-5.
    CHECK(separating_cycle(oct, std::vector<int>{2, 4, 3, 5}));
    CHECK(separating_cycle(oct, std::vector<int>{0, 2, 1, 3}));
    CHECK(separating_cycle(oct, std::vector<int>{0, 4, 1, 5}));
}

TEST_CASE("planar_code round trip")
{
    PlaneEmbedding e = embed(graphs::icosahedron());
    std::ostringstream out;
    write_planar_code(out, {e, embed(graphs::cycle(5))});
    std::string bytes = out.str();
    CHECK(bytes.substr(0, 15) == ">>planar_code<<");
    auto back = read_planar_code(bytes);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == e);
    CHECK(back[0].rotations() == e.rotations());
    CHECK(back[1].face_census() == std::map<int, int>{{5, 2}});
    // K4 written by hand: vertex 1 has neighbours 2, 3, 4 and so on.
    std::string k4 = std::string(">>planar_code<<") + std::string("\x04\x02\x03\x04\x00\x01\x04\x03\x00\x01\x02\x04\x00\x01\x03\x02\x00", 17);
    auto kk = read_planar_code(k4);
    REQUIRE(kk.size() == 1);
    CHECK(kk[0].face_census() == std::map<int, int>{{3, 4}});
    CHECK(to_planar_code(kk[0]) == k4.substr(15));
}

TEST_CASE("rotation text round trip")
{
    PlaneEmbedding e = embed(graphs::dodecahedron());
    PlaneEmbedding back = from_rotation_text(to_rotation_text(e));
    CHECK(back.rotations() == e.rotations());
    CHECK_THROWS_AS(from_rotation_text("order 3\n0: 1\n1: 0\n"), Error);
}

TEST_CASE("triangle-facial embeddings for C4-free graphs with triangles and cut vertices")
{
    // Triangles sharing a cut vertex, plus pendant trees.
    Graph g = Graph::from_edges(9, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 0}, {1, 7}, {7, 8}});
    REQUIRE_FALSE(contains_c4(g));
    PlaneEmbedding e = embed(g);
    CHECK(nonfacial_triangles(e) == 0);
    CHECK(edge_identity(e).residual == 0);
}
