#include "planram/construct.hpp"

#include "planram/error.hpp"
#include "planram/subgraph.hpp"

#include <algorithm>

namespace planram {

namespace {

using Rotation = std::vector<std::vector<int>>;

PlaneEmbedding from_rotation(Rotation rot)
{
    const int n = static_cast<int>(rot.size());
    if (n > kMaxOrder)
        throw Error(ErrorKind::OutOfRange, "result would exceed 64 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int w : rot[v])
            if (v < w)
                g.add_edge(v, w);
    return PlaneEmbedding(std::move(g), std::move(rot));
}

void replace_in(std::vector<int>& r, int old_u, int new_u)
{
    *std::find(r.begin(), r.end(), old_u) = new_u;
}

void insert_after(std::vector<int>& r, int ref, int x)
{
    r.insert(std::find(r.begin(), r.end(), ref) + 1, x);
}

// Rotation of v listed from `start`.
std::vector<int> from(const PlaneEmbedding& e, int v, int start)
{
    const auto& r = e.rotation(v);
    auto it = std::find(r.begin(), r.end(), start);
    std::vector<int> out(it, r.end());
    out.insert(out.end(), r.begin(), it);
    return out;
}

void check_vertex(const PlaneEmbedding& e, int v)
{
    if (v < 0 || v >= e.order())
        throw Error(ErrorKind::BadVertex, "no vertex " + std::to_string(v));
}

// A triangle v-a-b with a and b on different sides of a split of v's rotation.
bool straddling_triangle(const Graph& g, const std::vector<int>& side1, const std::vector<int>& side2)
{
    for (int a : side1)
        for (int b : side2)
            if (g.adjacent(a, b))
                return true;
    return false;
}

void post_check(const PlaneEmbedding& before, const PlaneEmbedding& after, int dv, const char* op)
{
    const std::string name(op);
    if (after.order() != before.order() + dv)
        throw Error(ErrorKind::PropertyViolation, name + ": unexpected vertex count");
    if (!after.is_plane())
        throw Error(ErrorKind::PropertyViolation, name + ": result is not a plane embedding");
    if (contains_c4(after.graph()))
        throw Error(ErrorKind::PropertyViolation, name + ": result contains a 4-cycle");
}

} // namespace

PlaneEmbedding operation_a(const PlaneEmbedding& e, int face, int u, int v)
{
    if (face < 0 || face >= static_cast<int>(e.faces().size()))
        throw Error(ErrorKind::BadFace, "no face " + std::to_string(face));
    const auto& w = e.faces()[face].boundary;
    const int k = static_cast<int>(w.size());
    if (k < 6)
        throw Error(ErrorKind::BadFace, "face " + std::to_string(face) + " has length " + std::to_string(k) + " < 6");
    auto at = std::find(w.begin(), w.end(), u);
    if (at == w.end())
        throw Error(ErrorKind::BadDistance, std::to_string(u) + " is not on face " + std::to_string(face));
    const int i0 = static_cast<int>(at - w.begin());
    auto W = [&](int j) { return w[(i0 + j) % k]; };
    if (W(3) != v)
        throw Error(ErrorKind::BadDistance, std::to_string(v) + " is not three steps after " + std::to_string(u));
    if (std::count(w.begin(), w.end(), u) != 1 || std::count(w.begin(), w.end(), v) != 1)
        throw Error(ErrorKind::BadFace, "face walk passes u or v twice");
    const Graph& g = e.graph();
    if (g.degree(u) < 3 || g.degree(v) < 3)
        throw Error(ErrorKind::BadVertex, "operation A needs degree >= 3 at both split vertices");
    if (g.adjacent(u, v) || (g.neighbors(u) & g.neighbors(v)))
        throw Error(ErrorKind::PropertyViolation, "split vertices are adjacent or share a neighbour");

    // u: [w1, o.., w_{k-1}], first half to u, second half to u_l.
    std::vector<int> ru = from(e, u, W(1));
    const int du = static_cast<int>(ru.size());
    const int hu = 1 + (du - 2 + 1) / 2;
    std::vector<int> us(ru.begin(), ru.begin() + hu), ul(ru.begin() + hu, ru.end());
    // v: [w4, q.., w2], first half stays with v.
    std::vector<int> rv = from(e, v, W(4));
    const int dvv = static_cast<int>(rv.size());
    const int hv = 1 + (dvv - 2 + 1) / 2;
    std::vector<int> vl(rv.begin(), rv.begin() + hv), vs(rv.begin() + hv, rv.end());
    if (straddling_triangle(g, us, ul) || straddling_triangle(g, vl, vs))
        throw Error(ErrorKind::PropertyViolation, "a triangle straddles the split");

    const int n = e.order();
    const int u_l = n, v_s = n + 1, x = n + 2;
    Rotation rot = e.rotations();
    rot.resize(n + 3);
    for (int y : ul)
        replace_in(rot[y], u, u_l);
    for (int y : vs)
        replace_in(rot[y], v, v_s);
    rot[u] = us;
    rot[u].push_back(u_l);
    rot[u].push_back(x);
    rot[u_l] = ul;
    rot[u_l].push_back(x);
    rot[u_l].push_back(u);
    rot[v] = vl;
    rot[v].push_back(v_s);
    rot[v].push_back(x);
    rot[v_s] = vs;
    rot[v_s].push_back(x);
    rot[v_s].push_back(v);
    rot[x] = {u, u_l, v, v_s};
    PlaneEmbedding out = from_rotation(std::move(rot));
    post_check(e, out, 3, "operation A");
    if (out.graph().edge_count() != g.edge_count() + 6)
        throw Error(ErrorKind::PropertyViolation, "operation A: unexpected edge count");
    if (std::none_of(out.faces().begin(), out.faces().end(), [](const Face& f) { return f.length() >= 6; }))
        throw Error(ErrorKind::PropertyViolation, "operation A: no face of length >= 6 is left");
    if (out.graph().min_degree() < std::min(g.min_degree(), 4))
        throw Error(ErrorKind::PropertyViolation, "operation A: minimum degree dropped");
    return out;
}

PlaneEmbedding operation_b(const PlaneEmbedding& e, int v, std::optional<int> split)
{
    check_vertex(e, v);
    const Graph& g = e.graph();
    if (g.degree(v) != 4)
        throw Error(ErrorKind::BadVertex, "operation B needs a degree-4 vertex, " + std::to_string(v) + " has degree " +
                                              std::to_string(g.degree(v)));
    const auto& r = e.rotation(v);
    auto valid_split = [&](int i) {
        // The faces at the corners (n_{i+1}, n_{i+2}) and (n_{i+3}, n_i) grow.
        const int f1 = e.face_of(r[(i + 1) % 4], v), f2 = e.face_of(r[(i + 3) % 4], v);
        return e.faces()[f1].length() >= 5 && e.faces()[f2].length() >= 5;
    };
    int i = -1;
    if (split) {
        if (*split < 0 || *split > 3)
            throw Error(ErrorKind::BadVertex, "split index must be 0..3");
        if (!valid_split(*split))
            throw Error(ErrorKind::BadVertex, "the faces beside the split are shorter than 5");
        i = *split;
    } else {
        for (int j = 0; j < 2 && i < 0; ++j)
            if (valid_split(j))
                i = j;
        if (i < 0)
            throw Error(ErrorKind::BadVertex, "no split of " + std::to_string(v) + " has faces of length >= 5 beside it");
    }
    std::vector<int> keep{r[i % 4], r[(i + 1) % 4]}, move{r[(i + 2) % 4], r[(i + 3) % 4]};
    if (straddling_triangle(g, keep, move))
        throw Error(ErrorKind::PropertyViolation, "a triangle straddles the split");
    const int n = e.order();
    Rotation rot = e.rotations();
    rot.resize(n + 1);
    for (int y : move)
        replace_in(rot[y], v, n);
    rot[v] = {keep[0], keep[1], n};
    rot[n] = {move[0], move[1], v};
    PlaneEmbedding out = from_rotation(std::move(rot));
    post_check(e, out, 1, "operation B");
    return out;
}

PlaneEmbedding operation_b_inverse(const PlaneEmbedding& e, int u, int v)
{
    if (u < 0 || v < 0 || u >= e.order() || v >= e.order() || !e.graph().adjacent(u, v))
        throw Error(ErrorKind::BadEdge, "not an edge");
    const Graph& g = e.graph();
    if (g.degree(u) != 3 || g.degree(v) != 3)
        throw Error(ErrorKind::BadEdge, "both ends must have degree 3");
    if (g.neighbors(u) & g.neighbors(v))
        throw Error(ErrorKind::BadEdge, "ends share a neighbour; merging would create a multiple edge");
    std::vector<int> ru = from(e, u, v), rv = from(e, v, u);
    std::vector<int> merged{ru[1], ru[2], rv[1], rv[2]};
    const int keep = std::min(u, v), gone = std::max(u, v);
    Rotation rot = e.rotations();
    for (int y : {ru[1], ru[2]})
        replace_in(rot[y], u, keep);
    for (int y : {rv[1], rv[2]})
        replace_in(rot[y], v, keep);
    rot[keep] = merged;
    // The last vertex takes over the freed id.
    const int last = e.order() - 1;
    if (gone != last) {
        for (int y : rot[last])
            replace_in(rot[y], last, gone);
        rot[gone] = rot[last];
    }
    rot.pop_back();
    PlaneEmbedding out = from_rotation(std::move(rot));
    post_check(e, out, -1, "inverse of operation B");
    return out;
}

PlaneEmbedding operation_c(const PlaneEmbedding& e, int t, int b, bool mirrored)
{
    if (t < 0 || b < 0 || t >= e.order() || b >= e.order() || !e.graph().adjacent(t, b))
        throw Error(ErrorKind::BadEdge, "not an edge");
    const int fx = e.face_of(b, t), fy = e.face_of(t, b);
    if (fx == fy)
        throw Error(ErrorKind::BadEdge, "the edge has the same face on both sides");
    // X walk: b, t, x1 .. x_{k-2}; Y walk: t, b, y1 .. y_{k'-2}.
    auto walk_from = [&](int f, int first, int second) {
        const auto& w = e.faces()[f].boundary;
        const int k = static_cast<int>(w.size());
        for (int i = 0; i < k; ++i)
            if (w[i] == first && w[(i + 1) % k] == second) {
                std::vector<int> out;
                for (int j = 0; j < k; ++j)
                    out.push_back(w[(i + j) % k]);
                return out;
            }
        return std::vector<int>{};
    };
    const std::vector<int> X = walk_from(fx, b, t), Y = walk_from(fy, t, b);
    const int kx = static_cast<int>(X.size()), ky = static_cast<int>(Y.size());
    if (kx < 6 || ky < 6)
        throw Error(ErrorKind::BadEdge, "the faces beside the edge must have length >= 6");
    // X[j] = x_{j-1}, Y[j] = y_{j-1}.
    const int zp = mirrored ? Y[3] : X[kx - 2];
    const int zq = mirrored ? X[3] : Y[ky - 2];
    const Graph& g = e.graph();
    auto once = [](const std::vector<int>& w, int z) { return std::count(w.begin(), w.end(), z) == 1; };
    if (zp == zq || zp == t || zp == b || zq == t || zq == b || !once(mirrored ? Y : X, zp) ||
        !once(mirrored ? X : Y, zq))
        throw Error(ErrorKind::BadEdge, "chord ends are not distinct face vertices");
    if (g.adjacent(b, zp) || g.adjacent(t, zq) || g.adjacent(zp, zq) ||
        (g.neighbors(t) & ~bit(b) & g.neighbors(zp)) || (g.neighbors(b) & ~bit(t) & g.neighbors(zq)))
        throw Error(ErrorKind::PropertyViolation, "the chords would close a 4-cycle");

    const int n = e.order();
    const int p = n, q = n + 1;
    Rotation rot = e.rotations();
    rot.resize(n + 2);
    replace_in(rot[t], b, p);
    replace_in(rot[b], t, q);
    rot[p] = {t, q};
    rot[q] = {p, b};
    // After the subdivision the walks read X' = b q p t x1 .. and Y' = t p q b y1 ...
    auto pred = [](const std::vector<int>& w, int z) {
        auto it = std::find(w.begin(), w.end(), z);
        return it == w.begin() ? w.back() : *(it - 1);
    };
    if (!mirrored) {
        insert_after(rot[p], q, zp);
        insert_after(rot[zp], pred(X, zp), p);
        insert_after(rot[q], p, zq);
        insert_after(rot[zq], pred(Y, zq), q);
    } else {
        insert_after(rot[p], t, zp);
        insert_after(rot[zp], pred(Y, zp), p);
        insert_after(rot[q], b, zq);
        insert_after(rot[zq], pred(X, zq), q);
    }
    PlaneEmbedding out = from_rotation(std::move(rot));
    post_check(e, out, 2, "operation C");
    return out;
}

} // namespace planram
