#include "planram/graph.hpp"

#include "planram/error.hpp"

#include <algorithm>
#include <map>

namespace planram {

const char* error_kind_name(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotC4Free: return "NotC4Free";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::InfeasibleScale: return "InfeasibleScale";
    case ErrorKind::UnknownSeed: return "UnknownSeed";
    case ErrorKind::PropertyCheckFailed: return "PropertyCheckFailed";
    case ErrorKind::BadFace: return "BadFace";
    case ErrorKind::BadDistance: return "BadDistance";
    case ErrorKind::BadVertex: return "BadVertex";
    case ErrorKind::BadEdge: return "BadEdge";
    case ErrorKind::PropertyViolation: return "PropertyViolation";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
{
}

int DegreeSequence::order() const
{
    int n = 0;
    for (auto [d, m] : terms)
        n += m;
    return n;
}

int DegreeSequence::degree_sum() const
{
    int s = 0;
    for (auto [d, m] : terms)
        s += d * m;
    return s;
}

int DegreeSequence::count(int degree) const
{
    for (auto [d, m] : terms)
        if (d == degree)
            return m;
    return 0;
}

std::string DegreeSequence::to_string() const
{
    std::string out;
    for (auto [d, m] : terms) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(d) + '^' + std::to_string(m);
    }
    return out;
}

Graph::Graph(int order) : n_(order)
{
    if (order < 0 || order > kMaxOrder)
        throw Error(ErrorKind::OutOfRange, "graph order " + std::to_string(order) + " outside 0..64");
}

Graph Graph::from_edges(int order, std::span<const Edge> edges)
{
    Graph g(order);
    for (const Edge& e : edges)
        g.add_edge(e.u, e.v);
    return g;
}

int Graph::edge_count() const noexcept
{
    int s = 0;
    for (int v = 0; v < n_; ++v)
        s += std::popcount(adj_[v]);
    return s / 2;
}

int Graph::min_degree() const noexcept
{
    if (n_ == 0)
        return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v)
        d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const noexcept
{
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for_each(adj_[u] & ~first_n(u + 1), [&](int v) { out.push_back({u, v}); });
    return out;
}

DegreeSequence Graph::degree_sequence() const
{
    std::map<int, int> m;
    for (int v = 0; v < n_; ++v)
        ++m[degree(v)];
    DegreeSequence s;
    s.terms.assign(m.begin(), m.end());
    return s;
}

void Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
        throw Error(ErrorKind::OutOfRange, "bad edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw Error(ErrorKind::OutOfRange, "bad edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

int Graph::add_vertex()
{
    if (n_ == kMaxOrder)
        throw Error(ErrorKind::OutOfRange, "graph already has 64 vertices");
    adj_[n_] = 0;
    return n_++;
}

void Graph::remove_vertex_swap_last(int v)
{
    if (v < 0 || v >= n_)
        throw Error(ErrorKind::OutOfRange, "bad vertex " + std::to_string(v));
    const int last = n_ - 1;
    for_each(adj_[v], [&](int w) { adj_[w] &= ~bit(v); });
    adj_[v] = 0;
    if (v != last) {
        VertexSet nb = adj_[last];
        for_each(nb, [&](int w) {
            adj_[w] &= ~bit(last);
            adj_[w] |= bit(v);
        });
        adj_[v] = nb;
        adj_[last] = 0;
    }
    --n_;
}

Graph Graph::complement() const
{
    Graph c(n_);
    const VertexSet all = vertices();
    for (int v = 0; v < n_; ++v)
        c.adj_[v] = all & ~adj_[v] & ~bit(v);
    return c;
}

Graph Graph::induced(VertexSet s) const
{
    std::array<int, kMaxOrder> id{};
    int k = 0;
    for_each(s, [&](int v) { id[v] = k++; });
    Graph h(k);
    for_each(s, [&](int v) {
        for_each(adj_[v] & s, [&](int w) { h.adj_[id[v]] |= bit(id[w]); });
    });
    return h;
}

Graph Graph::relabeled(std::span<const int> new_id) const
{
    Graph h(n_);
    for (int v = 0; v < n_; ++v)
        for_each(adj_[v], [&](int w) { h.adj_[new_id[v]] |= bit(new_id[w]); });
    h.label_ = label_;
    return h;
}

VertexSet Graph::component_of(int v, VertexSet within) const
{
    VertexSet seen = bit(v);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for_each(frontier, [&](int w) { next |= adj_[w]; });
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool Graph::is_connected() const
{
    if (n_ <= 1)
        return true;
    return component_of(0, vertices()) == vertices();
}

int Graph::component_count() const
{
    int c = 0;
    VertexSet left = vertices();
    while (left) {
        left &= ~component_of(lowest(left), left);
        ++c;
    }
    return c;
}

bool operator==(const Graph& a, const Graph& b) noexcept
{
    if (a.n_ != b.n_)
        return false;
    return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

namespace graphs {

Graph empty(int n) { return Graph(n); }

Graph complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph cycle(int n)
{
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

Graph wheel(int rim)
{
    Graph g(rim + 1);
    for (int v = 0; v < rim; ++v) {
        g.add_edge(v, (v + 1) % rim);
        g.add_edge(v, rim);
    }
    return g;
}

Graph complete_bipartite(int a, int b)
{
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v)
            g.add_edge(u, a + v);
    return g;
}

Graph octahedron()
{
    Graph g = complete(6);
    g.remove_edge(0, 1);
    g.remove_edge(2, 3);
    g.remove_edge(4, 5);
    return g;
}

Graph icosahedron()
{
    // Two poles 0 and 11, upper ring 1..5, lower ring 6..10.
    Graph g(12);
    for (int i = 0; i < 5; ++i) {
        int a = 1 + i, b = 1 + (i + 1) % 5;
        int c = 6 + i, d = 6 + (i + 1) % 5;
        g.add_edge(0, a);
        g.add_edge(11, c);
        g.add_edge(a, b);
        g.add_edge(c, d);
        g.add_edge(a, c);
        g.add_edge(b, c);
    }
    return g;
}

Graph dodecahedron()
{
    // Outer 5-cycle 0..4, middle 10-cycle 5..14, inner 5-cycle 15..19.
    Graph g(20);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5 + 2 * i);
        g.add_edge(15 + i, 15 + (i + 1) % 5);
        g.add_edge(15 + i, 5 + 2 * i + 1);
    }
    for (int i = 0; i < 10; ++i)
        g.add_edge(5 + i, 5 + (i + 1) % 10);
    return g;
}

} // namespace graphs

} // namespace planram
