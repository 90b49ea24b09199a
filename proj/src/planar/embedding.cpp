#include "planram/planar.hpp"

#include "planram/error.hpp"
#include "planram/subgraph.hpp"

#include <algorithm>
#include <set>

namespace planram {

PlaneEmbedding::PlaneEmbedding(Graph base, std::vector<std::vector<int>> rotation)
    : base_(std::move(base)), rotation_(std::move(rotation))
{
    const int n = base_.order();
    if (static_cast<int>(rotation_.size()) != n)
        throw Error(ErrorKind::OutOfRange, "rotation system has wrong vertex count");
    for (int v = 0; v < n; ++v) {
        VertexSet seen = 0;
        for (int u : rotation_[v]) {
            if (u < 0 || u >= n || !base_.adjacent(v, u) || (seen & bit(u)))
                throw Error(ErrorKind::OutOfRange, "rotation at " + std::to_string(v) + " is not a neighbour ordering");
            seen |= bit(u);
        }
        if (seen != base_.neighbors(v))
            throw Error(ErrorKind::OutOfRange, "rotation at " + std::to_string(v) + " misses neighbours");
    }
    trace_faces();
}

int PlaneEmbedding::position(int v, int u) const
{
    const auto& r = rotation_[v];
    auto it = std::find(r.begin(), r.end(), u);
    if (it == r.end())
        throw Error(ErrorKind::OutOfRange, std::to_string(u) + " is not a neighbour of " + std::to_string(v));
    return static_cast<int>(it - r.begin());
}

int PlaneEmbedding::successor(int v, int u) const
{
    const auto& r = rotation_[v];
    return r[(position(v, u) + 1) % r.size()];
}

int PlaneEmbedding::predecessor(int v, int u) const
{
    const auto& r = rotation_[v];
    return r[(position(v, u) + r.size() - 1) % r.size()];
}

void PlaneEmbedding::trace_faces()
{
    const int n = base_.order();
    faces_.clear();
    face_index_.assign(n, {});
    for (int v = 0; v < n; ++v)
        face_index_[v].assign(rotation_[v].size(), -1);
    for (int v = 0; v < n; ++v) {
        if (rotation_[v].empty()) {
            faces_.push_back(Face{});
            continue;
        }
        for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
            if (face_index_[v][i] >= 0)
                continue;
            const int id = static_cast<int>(faces_.size());
            Face f;
            int a = v, ai = static_cast<int>(i);
            while (face_index_[a][ai] < 0) {
                face_index_[a][ai] = id;
                f.boundary.push_back(a);
                int b = rotation_[a][ai];
                int c = successor(b, a);
                a = b;
                ai = position(b, c);
            }
            faces_.push_back(std::move(f));
        }
    }
}

int PlaneEmbedding::face_of(int u, int v) const
{
    return face_index_[u][position(u, v)];
}

int PlaneEmbedding::euler_characteristic() const
{
    return base_.order() - base_.edge_count() + static_cast<int>(faces_.size());
}

bool PlaneEmbedding::is_plane() const
{
    // Each component is drawn separately, so a plane embedding has n - e + f = 2c.
    return euler_characteristic() == 2 * base_.component_count();
}

std::map<int, int> PlaneEmbedding::face_census() const
{
    std::map<int, int> census;
    for (const Face& f : faces_)
        ++census[f.length()];
    return census;
}

PlaneEmbedding PlaneEmbedding::normalized() const
{
    auto rot = rotation_;
    for (auto& r : rot)
        if (!r.empty())
            std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
    return PlaneEmbedding(base_, std::move(rot));
}

bool operator==(const PlaneEmbedding& a, const PlaneEmbedding& b)
{
    if (!(a.base_ == b.base_))
        return false;
    return a.normalized().rotation_ == b.normalized().rotation_;
}

GammaReport gamma(const Graph& g)
{
    GammaReport r;
    for (const Edge& e : g.edges())
        if (!(g.neighbors(e.u) & g.neighbors(e.v))) {
            r.gamma_edges.push_back(e);
            r.endpoints |= bit(e.u) | bit(e.v);
        }
    r.tau = static_cast<int>(r.gamma_edges.size());
    r.induced = g.induced(r.endpoints);
    return r;
}

int triangle_count(const Graph& g)
{
    int t = 0;
    for (const Edge& e : g.edges())
        t += set_size(g.neighbors(e.u) & g.neighbors(e.v) & ~first_n(e.v + 1));
    return t;
}

Graph vertex_edge_dual(const PlaneEmbedding& e)
{
    std::vector<int> big;
    for (std::size_t i = 0; i < e.faces().size(); ++i)
        if (e.faces()[i].length() >= 5)
            big.push_back(static_cast<int>(i));
    struct FaceSets {
        VertexSet vertices = 0;
        std::set<std::pair<int, int>> edges;
    };
    std::vector<FaceSets> sets(big.size());
    for (std::size_t i = 0; i < big.size(); ++i) {
        const auto& w = e.faces()[big[i]].boundary;
        for (std::size_t j = 0; j < w.size(); ++j) {
            int a = w[j], b = w[(j + 1) % w.size()];
            sets[i].vertices |= bit(a);
            sets[i].edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    Graph d(static_cast<int>(big.size()));
    for (std::size_t i = 0; i < big.size(); ++i)
        for (std::size_t j = i + 1; j < big.size(); ++j) {
            int shared_edges = 0;
            for (const auto& ed : sets[i].edges)
                shared_edges += static_cast<int>(sets[j].edges.count(ed));
            int shared_vertices = set_size(sets[i].vertices & sets[j].vertices);
            if (shared_edges == 1 || (shared_edges == 0 && shared_vertices == 1))
                d.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return d;
}

EdgeIdentity edge_identity(const PlaneEmbedding& e)
{
    const Graph& g = e.graph();
    if (!g.is_connected())
        throw Error(ErrorKind::Disconnected, "edge identity needs a connected graph");
    if (contains_c4(g))
        throw Error(ErrorKind::NotC4Free, "edge identity needs a C4-free graph");
    if (!e.is_plane())
        throw Error(ErrorKind::NotPlanar, "rotation system is not a plane embedding");
    const long long n = g.order();
    const long long m = g.edge_count();
    long long long_faces = 0;
    for (const Face& f : e.faces())
        if (f.length() >= 6)
            long_faces += 3LL * (f.length() - 5);
    const long long rhs = 15 * (n - 2) - 2LL * gamma(g).tau - long_faces;
    return EdgeIdentity{7 * m - rhs, 7 * m <= 15 * (n - 2)};
}

int nonfacial_triangles(const PlaneEmbedding& e)
{
    const Graph& g = e.graph();
    std::set<std::array<int, 3>> facial;
    for (const Face& f : e.faces())
        if (f.length() == 3) {
            std::array<int, 3> t{f.boundary[0], f.boundary[1], f.boundary[2]};
            std::sort(t.begin(), t.end());
            facial.insert(t);
        }
    int count = 0;
    for (const Edge& ed : g.edges())
        for_each(g.neighbors(ed.u) & g.neighbors(ed.v) & ~first_n(ed.v + 1), [&](int w) {
            if (!facial.count({ed.u, ed.v, w}))
                ++count;
        });
    return count;
}

bool separating_cycle(const PlaneEmbedding& e, std::span<const int> cycle)
{
    const Graph& g = e.graph();
    const int k = static_cast<int>(cycle.size());
    if (k < 3)
        throw Error(ErrorKind::NotACycle, "a cycle needs at least 3 vertices");
    VertexSet on = 0;
    for (int i = 0; i < k; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % k];
        if (a < 0 || a >= g.order() || (on & bit(a)) || b < 0 || b >= g.order() || !g.adjacent(a, b))
            throw Error(ErrorKind::NotACycle, "vertex sequence is not a cycle");
        on |= bit(a);
    }
    VertexSet left = 0, right = 0;
    for (int i = 0; i < k; ++i) {
        int c = cycle[i], p = cycle[(i + k - 1) % k], q = cycle[(i + 1) % k];
        // Walking the rotation from p to q sweeps one side of the path p-c-q.
        bool in_left = true;
        for (int x = e.successor(c, p); x != p; x = e.successor(c, x)) {
            if (x == q) {
                in_left = false;
                continue;
            }
            if (on & bit(x))
                continue;
            (in_left ? left : right) |= bit(x);
        }
    }
    const VertexSet rest = g.vertices() & ~on;
    VertexSet inside = 0, outside = 0;
    for_each(left, [&](int v) { inside |= g.component_of(v, rest); });
    for_each(right, [&](int v) { outside |= g.component_of(v, rest); });
    return inside != 0 && outside != 0;
}

} // namespace planram
