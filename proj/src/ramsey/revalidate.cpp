#include "planram/ramsey.hpp"

#include "planram/error.hpp"
#include "planram/graph6.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/isomorphism.hpp>

#include <functional>

namespace planram {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

// Plain adjacency matrix; nothing below uses the bitset routines of the library.
struct Matrix {
    int n = 0;
    std::vector<std::vector<char>> a;

    explicit Matrix(const Graph& g) : n(g.order()), a(n, std::vector<char>(n, 0))
    {
        for (const Edge& e : g.edges())
            a[e.u][e.v] = a[e.v][e.u] = 1;
    }
    int degree(int v) const
    {
        int d = 0;
        for (int w = 0; w < n; ++w)
            d += a[v][w];
        return d;
    }
    int edges() const
    {
        int e = 0;
        for (int v = 0; v < n; ++v)
            e += degree(v);
        return e / 2;
    }
    int min_degree() const
    {
        int d = n;
        for (int v = 0; v < n; ++v)
            d = std::min(d, degree(v));
        return n ? d : 0;
    }
    Matrix complement() const
    {
        Matrix c = *this;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                c.a[u][v] = u != v && !a[u][v];
        return c;
    }
};

BoostGraph to_boost(const Matrix& m)
{
    BoostGraph b(m.n);
    for (int u = 0; u < m.n; ++u)
        for (int v = u + 1; v < m.n; ++v)
            if (m.a[u][v])
                boost::add_edge(u, v, b);
    return b;
}

bool planar(const Matrix& m)
{
    BoostGraph b = to_boost(m);
    return boost::boyer_myrvold_planarity_test(b);
}

bool has_c4(const Matrix& m)
{
    for (int u = 0; u < m.n; ++u)
        for (int v = u + 1; v < m.n; ++v) {
            int common = 0;
            for (int w = 0; w < m.n; ++w)
                common += m.a[u][w] && m.a[v][w];
            if (common >= 2)
                return true;
        }
    return false;
}

// Cycle of length k through vertices of `allowed`, by plain depth-first search from its smallest vertex.
bool has_cycle_among(const Matrix& m, const std::vector<int>& allowed, int k)
{
    std::vector<char> in(m.n, 0), used(m.n, 0);
    for (int v : allowed)
        in[v] = 1;
    std::function<bool(int, int, int)> extend = [&](int start, int last, int len) {
        if (len == k)
            return static_cast<bool>(m.a[last][start]);
        for (int w = start + 1; w < m.n; ++w)
            if (in[w] && !used[w] && m.a[last][w]) {
                used[w] = 1;
                if (extend(start, w, len + 1))
                    return true;
                used[w] = 0;
            }
        return false;
    };
    for (int s : allowed) {
        used[s] = 1;
        if (extend(s, s, 1))
            return true;
        used[s] = 0;
    }
    return false;
}

bool has_wheel(const Matrix& m, int rim)
{
    for (int h = 0; h < m.n; ++h) {
        std::vector<int> nb;
        for (int w = 0; w < m.n; ++w)
            if (m.a[h][w])
                nb.push_back(w);
        if (static_cast<int>(nb.size()) >= rim && has_cycle_among(m, nb, rim))
            return true;
    }
    return false;
}

// Degree argument above 30 vertices, plain search below.
bool complement_wheel_free(const Matrix& g, int rim, std::string& method)
{
    const Matrix c = g.complement();
    int max_degree = 0;
    for (int v = 0; v < c.n; ++v)
        max_degree = std::max(max_degree, c.degree(v));
    if (max_degree < rim) {
        method = "degree argument";
        return true;
    }
    method = "search";
    return !has_wheel(c, rim);
}

std::int64_t param(const Certificate& c, const std::string& key)
{
    auto it = c.params.find(key);
    if (it == c.params.end())
        throw Error(ErrorKind::ParseError, c.claim_id + ": missing parameter " + key);
    return it->second;
}

bool starts_with(const std::string& s, std::string_view p)
{
    return s.rfind(p, 0) == 0;
}

int wheel_of(const std::string& id)
{
    // thm2.pr.w<m>.<...>
    const auto at = id.find(".w") + 2;
    return std::stoi(id.substr(at, id.find('.', at) - at));
}

} // namespace

std::vector<std::string> revalidate(const Certificate& c)
{
    std::vector<std::string> problems;
    std::vector<Graph> graphs;
    for (const std::string& text : c.witnesses) {
        try {
            graphs.push_back(from_graph6(text));
        } catch (const Error& e) {
            problems.push_back("witness '" + text + "' does not parse: " + e.what());
            return problems;
        }
    }
    auto complain = [&](std::size_t i, const std::string& what) {
        problems.push_back(c.claim_id + " witness " + std::to_string(i) + ": " + what);
    };
    auto c4free_planar = [&](std::size_t i, const Matrix& m) {
        if (has_c4(m))
            complain(i, "contains a 4-cycle");
        if (!planar(m))
            complain(i, "is not planar");
    };
    const std::string& id = c.claim_id;
    if (starts_with(id, "thm2.pr.")) {
        const int rim = wheel_of(id);
        const bool lower = id.size() >= 6 && id.compare(id.size() - 6, 6, ".lower") == 0;
        const int order = static_cast<int>(lower ? param(c, "order") : param(c, "host"));
        if (!lower && c.verdict == Verdict::verified && !graphs.empty())
            problems.push_back(id + ": a verified upper bound carries no counterexample");
        if (c.verdict != Verdict::infeasible && (lower || c.verdict == Verdict::refuted) && graphs.empty())
            problems.push_back(id + ": witness missing");
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const Matrix m(graphs[i]);
            if (m.n != order)
                complain(i, "has " + std::to_string(m.n) + " vertices, expected " + std::to_string(order));
            c4free_planar(i, m);
            std::string method;
            if (!complement_wheel_free(m, rim, method))
                complain(i, "complement contains W" + std::to_string(rim) + " (" + method + ")");
        }
    } else if (starts_with(id, "thm1.delta.")) {
        const int n = static_cast<int>(param(c, "n"));
        const int d = static_cast<int>(param(c, "claimed_delta"));
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const Matrix m(graphs[i]);
            if (m.n != n)
                complain(i, "wrong order");
            c4free_planar(i, m);
            // The first witness is the lower bound; any others refute the upper bound.
            if (i == 0 && m.min_degree() != d)
                complain(i, "minimum degree " + std::to_string(m.min_degree()) + " differs from " + std::to_string(d));
            if (i > 0 && m.min_degree() <= d)
                complain(i, "does not exceed the claimed minimum degree");
        }
        if (graphs.empty() && c.verdict != Verdict::infeasible)
            problems.push_back(id + ": witness missing");
    } else if (starts_with(id, "fact")) {
        const int n = static_cast<int>(param(c, "n"));
        std::vector<BoostGraph> seen;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const Matrix m(graphs[i]);
            if (m.n != n)
                complain(i, "wrong order");
            if (m.edges() != 3 * n - 6 || !planar(m))
                complain(i, "is not a triangulation");
            if (m.min_degree() < 5)
                complain(i, "minimum degree below 5");
            BoostGraph b = to_boost(m);
            for (const BoostGraph& other : seen)
                if (boost::isomorphism(b, other))
                    complain(i, "is isomorphic to an earlier witness");
            seen.push_back(std::move(b));
        }
        auto expected = c.counts.find("expected_classes");
        if (expected != c.counts.end() && c.verdict == Verdict::verified &&
            static_cast<std::int64_t>(graphs.size()) != expected->second)
            problems.push_back(id + ": witness count differs from the class count");
    } else if (starts_with(id, "lemmas.")) {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            c4free_planar(i, Matrix(graphs[i]));
    } else {
        problems.push_back("unknown claim id '" + id + "'");
    }
    return problems;
}

} // namespace planram
