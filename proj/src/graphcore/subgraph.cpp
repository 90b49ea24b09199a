#include "planram/subgraph.hpp"

#include "planram/error.hpp"

#include <algorithm>
#include <numeric>

namespace planram {

std::optional<std::array<int, 4>> find_c4(const Graph& g)
{
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c) {
            VertexSet common = g.neighbors(a) & g.neighbors(c);
            if (set_size(common) >= 2) {
                int b = lowest(common);
                int d = lowest(common & (common - 1));
                return std::array<int, 4>{a, b, c, d};
            }
        }
    return std::nullopt;
}

bool contains_c4(const Graph& g)
{
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c)
            if (set_size(g.neighbors(a) & g.neighbors(c)) >= 2)
                return true;
    return false;
}

bool edge_closes_c4(const Graph& g, int u, int v)
{
    // A new 4-cycle through uv is a path u-x-y-v with x, y outside {u, v}.
    const VertexSet nv = g.neighbors(v) & ~bit(u);
    VertexSet nu = g.neighbors(u) & ~bit(v);
    while (nu) {
        int x = lowest(nu);
        nu &= nu - 1;
        if (g.neighbors(x) & nv)
            return true;
    }
    return false;
}

namespace {

struct CycleSearch {
    const Graph& g;
    int k;
    int s = 0;
    VertexSet avail = 0;
    std::vector<int> path;

    VertexSet reach_from(int v, VertexSet free) const
    {
        VertexSet seen = bit(v), frontier = bit(v);
        while (frontier) {
            VertexSet next = 0;
            for_each(frontier, [&](int w) { next |= g.neighbors(w); });
            next &= free & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    bool extend(VertexSet used)
    {
        const int d = static_cast<int>(path.size());
        const int last = path.back();
        if (d == k)
            return g.adjacent(last, s) && path[1] < path[k - 1];
        VertexSet free = avail & ~used;
        VertexSet cand = g.neighbors(last) & free;
        if (d == k - 1)
            cand &= g.neighbors(s);
        if (!cand)
            return false;
        if (d < k - 1) {
            // The rest of the cycle must fit in what last can still reach, and return to s.
            VertexSet r = reach_from(last, free) & ~bit(last);
            if (set_size(r) < k - d || !(r & g.neighbors(s)))
                return false;
        }
        bool done = false;
        for_each(cand, [&](int w) {
            if (done)
                return;
            path.push_back(w);
            if (extend(used | bit(w)))
                done = true;
            else
                path.pop_back();
        });
        return done;
    }
};

} // namespace

std::optional<std::vector<int>> cycle_of_length_in(const Graph& g, VertexSet within, int k)
{
    if (k < 3 || k > set_size(within))
        return std::nullopt;
    CycleSearch cs{g, k, 0, 0, {}};
    VertexSet todo = within;
    while (todo) {
        int s = lowest(todo);
        todo &= todo - 1;
        // Cycles with minimum vertex s use only vertices above s.
        VertexSet avail = todo;
        if (set_size(avail) + 1 < k)
            break;
        cs.s = s;
        cs.avail = avail;
        cs.path.assign(1, s);
        if (cs.extend(bit(s)))
            return cs.path;
    }
    return std::nullopt;
}

std::optional<std::vector<int>> cycle_of_length(const Graph& g, int k)
{
    if (k < 3 || k > g.order())
        throw Error(ErrorKind::OutOfRange, "cycle length " + std::to_string(k) + " outside 3.." + std::to_string(g.order()));
    return cycle_of_length_in(g, g.vertices(), k);
}

int independence_number(const Graph& g)
{
    struct Mis {
        const Graph& g;
        int best = 0;
        void go(VertexSet p, int size)
        {
            if (!p) {
                best = std::max(best, size);
                return;
            }
            if (size + set_size(p) <= best)
                return;
            // A vertex of degree <= 1 inside p belongs to some maximum independent set.
            int pick = -1, maxdeg = -1, maxv = -1;
            for_each(p, [&](int v) {
                int d = set_size(g.neighbors(v) & p);
                if (pick < 0 && d <= 1)
                    pick = v;
                if (d > maxdeg) {
                    maxdeg = d;
                    maxv = v;
                }
            });
            if (pick >= 0) {
                go(p & ~bit(pick) & ~g.neighbors(pick), size + 1);
                return;
            }
            go(p & ~bit(maxv) & ~g.neighbors(maxv), size + 1);
            go(p & ~bit(maxv), size);
        }
    } m{g};
    m.go(g.vertices(), 0);
    return m.best;
}

int local_connectivity(const Graph& g, int s, int t)
{
    if (s == t || g.adjacent(s, t))
        throw Error(ErrorKind::OutOfRange, "local connectivity needs distinct non-adjacent vertices");
    // Vertex-disjoint s-t paths by augmenting paths on the split graph:
    // node 2v is v_in, 2v+1 is v_out, with unit capacity v_in -> v_out.
    const int n = g.order();
    const int m = 2 * n;
    std::vector<signed char> flow(static_cast<std::size_t>(m) * m, 0);
    auto cap = [&](int a, int b) -> int {
        int va = a / 2, vb = b / 2;
        if (va == vb)
            return (a % 2 == 0 && b == a + 1) ? ((va == s || va == t) ? n : 1) : 0;
        if (a % 2 == 1 && b % 2 == 0 && g.adjacent(va, vb))
            return 1;
        return 0;
    };
    const int source = 2 * s + 1, sink = 2 * t;
    int total = 0;
    std::vector<int> prev(m);
    while (true) {
        std::fill(prev.begin(), prev.end(), -1);
        std::vector<int> queue{source};
        prev[source] = source;
        for (std::size_t qi = 0; qi < queue.size() && prev[sink] < 0; ++qi) {
            int a = queue[qi];
            int va = a / 2;
            // Neighbours in the split graph: the twin node and nodes of adjacent vertices.
            auto visit = [&](int b) {
                if (prev[b] >= 0)
                    return;
                if (cap(a, b) - flow[a * m + b] > 0) {
                    prev[b] = a;
                    queue.push_back(b);
                }
            };
            visit(a ^ 1);
            for_each(g.neighbors(va), [&](int w) {
                visit(2 * w);
                visit(2 * w + 1);
            });
        }
        if (prev[sink] < 0)
            break;
        for (int b = sink; b != source; b = prev[b]) {
            int a = prev[b];
            ++flow[a * m + b];
            --flow[b * m + a];
        }
        ++total;
    }
    return total;
}

int connectivity(const Graph& g)
{
    const int n = g.order();
    if (n <= 1)
        return 0;
    if (!g.is_connected())
        return 0;
    int best = n - 1;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) < n - 1)
            best = std::min(best, g.degree(v));
    // A minimum separator misses one of the first best+1 vertices.
    for (int i = 0; i < n && i <= best; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j))
                best = std::min(best, local_connectivity(g, i, j));
    return best;
}

namespace {

bool dirac_holds(const Graph& h)
{
    const int m = h.order();
    return m >= 3 && 2 * h.min_degree() >= m;
}

bool chvatal_erdos_holds(const Graph& h)
{
    return h.order() >= 3 && independence_number(h) <= connectivity(h);
}

} // namespace

WheelSearch find_wheel(const Graph& g, int m, bool want_witness)
{
    if (m < 3 || m + 1 > g.order())
        throw Error(ErrorKind::OutOfRange, "rim length " + std::to_string(m) + " invalid for order " + std::to_string(g.order()));
    std::vector<int> hubs(g.order());
    std::iota(hubs.begin(), hubs.end(), 0);
    std::stable_sort(hubs.begin(), hubs.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    WheelSearch out;
    for (int x : hubs) {
        if (g.degree(x) < m)
            break;
        ++out.hubs_examined;
        const VertexSet nb = g.neighbors(x);
        if (g.degree(x) == m) {
            Graph h = g.induced(nb);
            if (dirac_holds(h))
                out.shortcut = WheelShortcut::dirac;
            else if (chvatal_erdos_holds(h))
                out.shortcut = WheelShortcut::chvatal_erdos;
            if (out.shortcut != WheelShortcut::none) {
                out.found = true;
                if (want_witness) {
                    auto rim = cycle_of_length_in(g, nb, m);
                    if (!rim)
                        throw Error(ErrorKind::PropertyViolation, "hamiltonicity condition held but no rim was found");
                    out.witness = WheelWitness{x, *rim};
                }
                return out;
            }
        }
        if (auto rim = cycle_of_length_in(g, nb, m)) {
            out.found = true;
            if (want_witness)
                out.witness = WheelWitness{x, *rim};
            return out;
        }
    }
    return out;
}

bool contains_wheel(const Graph& g, int m)
{
    return find_wheel(g, m, false).found;
}

bool validate_wheel(const Graph& g, const WheelWitness& w, int m)
{
    if (static_cast<int>(w.rim.size()) != m || w.hub < 0 || w.hub >= g.order())
        return false;
    VertexSet seen = bit(w.hub);
    for (int i = 0; i < m; ++i) {
        int a = w.rim[i], b = w.rim[(i + 1) % m];
        if (a < 0 || a >= g.order() || (seen & bit(a)))
            return false;
        seen |= bit(a);
        if (!g.adjacent(a, b) || !g.adjacent(w.hub, a))
            return false;
    }
    return true;
}

} // namespace planram
