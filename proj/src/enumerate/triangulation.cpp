#include "planram/enumerate.hpp"

#include "planram/canonical.hpp"
#include "planram/error.hpp"
#include "search.hpp"

#include <array>
#include <set>

namespace planram {

namespace {

constexpr int kMaxTri = 32;

// Plane triangulation as a rotation system with fixed-size rows (clockwise order).
struct Tri {
    int n = 0;
    std::array<std::uint8_t, kMaxTri> deg{};
    std::array<std::array<std::uint8_t, kMaxTri>, kMaxTri> rot{};
    std::array<VertexSet, kMaxTri> adj{};

    int pos(int v, int u) const
    {
        for (int i = 0; i < deg[v]; ++i)
            if (rot[v][i] == u)
                return i;
        return -1;
    }
    int succ(int v, int u) const { return rot[v][(pos(v, u) + 1) % deg[v]]; }
    int at(int v, int i) const { return rot[v][((i % deg[v]) + deg[v]) % deg[v]]; }
    bool adjacent(int u, int v) const { return (adj[u] >> v) & 1U; }

    void insert_after(int v, int ref, int x)
    {
        int p = pos(v, ref) + 1;
        for (int i = deg[v]; i > p; --i)
            rot[v][i] = rot[v][i - 1];
        rot[v][p] = static_cast<std::uint8_t>(x);
        ++deg[v];
        adj[v] |= bit(x);
    }
    void remove(int v, int u)
    {
        int p = pos(v, u);
        for (int i = p; i + 1 < deg[v]; ++i)
            rot[v][i] = rot[v][i + 1];
        --deg[v];
        adj[v] &= ~bit(u);
    }
    void replace(int v, int old_u, int new_u)
    {
        rot[v][pos(v, old_u)] = static_cast<std::uint8_t>(new_u);
        adj[v] = (adj[v] & ~bit(old_u)) | bit(new_u);
    }
    int add_vertex(std::initializer_list<int> ring)
    {
        int x = n++;
        deg[x] = 0;
        adj[x] = 0;
        for (int r : ring) {
            rot[x][deg[x]++] = static_cast<std::uint8_t>(r);
            adj[x] |= bit(r);
        }
        return x;
    }
};

Tri k4()
{
    Tri t;
    // Vertex 3 in the middle of triangle 0,1,2.
    t.add_vertex({1, 3, 2});
    t.add_vertex({2, 3, 0});
    t.add_vertex({0, 3, 1});
    t.add_vertex({0, 1, 2});
    return t;
}

// Expansions; x is always the new last vertex. Each assumes the orientation rule that the
// face after dart a->b continues with b -> succ_b(a).

// New degree-3 vertex in the face a -> b -> c.
Tri expand3(const Tri& p, int a, int b)
{
    Tri t = p;
    int c = p.succ(b, a);
    int x = t.n;
    t.insert_after(a, c, x);
    t.insert_after(b, a, x);
    t.insert_after(c, b, x);
    t.add_vertex({a, c, b});
    return t;
}

// Remove edge a-c and put a degree-4 vertex into the quadrilateral; x gets ring a, b, c, d.
Tri expand4(const Tri& p, int a, int c)
{
    Tri t = p;
    int b = p.succ(c, a);
    int d = p.succ(a, c);
    int x = t.n;
    t.replace(a, c, x);
    t.replace(c, a, x);
    t.insert_after(b, c, x);
    t.insert_after(d, a, x);
    t.add_vertex({a, b, c, d});
    return t;
}

// a has consecutive neighbours b, c, d, e; remove a-c, a-d and put a degree-5 vertex into
// the pentagon; x gets ring a, b, c, d, e.
Tri expand5(const Tri& p, int a, int i)
{
    Tri t = p;
    int b = p.at(a, i), c = p.at(a, i + 1), d = p.at(a, i + 2), e = p.at(a, i + 3);
    int x = t.n;
    t.replace(a, c, x);
    t.remove(a, d);
    t.insert_after(b, c, x);
    t.insert_after(e, a, x);
    t.replace(d, a, x);
    t.replace(c, a, x);
    t.add_vertex({a, b, c, d, e});
    return t;
}

// A reduction removes vertex x; for degree 4 the diagonal runs r_i - r_{i+2}, for degree
// 5 the apex is r_i.
struct Reduction {
    int x = 0;
    int type = 0;
    int i = 0;
};

bool valid(const Tri& t, const Reduction& r)
{
    if (t.n <= 4)
        return false;
    switch (r.type) {
    case 3:
        return true;
    case 4:
        return !t.adjacent(t.at(r.x, r.i), t.at(r.x, r.i + 2));
    default: {
        int a = t.at(r.x, r.i);
        return !t.adjacent(a, t.at(r.x, r.i + 2)) && !t.adjacent(a, t.at(r.x, r.i + 3));
    }
    }
}

std::uint64_t reduction_key(const Tri& t, const Reduction& r)
{
    auto d = [&](int k) -> std::uint64_t { return t.deg[t.at(r.x, r.i + k)]; };
    auto lo = [](std::uint64_t a, std::uint64_t b) { return std::min(a, b); };
    auto hi = [](std::uint64_t a, std::uint64_t b) { return std::max(a, b); };
    switch (r.type) {
    case 3: {
        std::array<std::uint64_t, 3> v{d(0), d(1), d(2)};
        std::sort(v.begin(), v.end());
        return v[0] << 16 | v[1] << 8 | v[2];
    }
    case 4:
        return lo(d(0), d(2)) << 24 | hi(d(0), d(2)) << 16 | lo(d(1), d(3)) << 8 | hi(d(1), d(3));
    default:
        return d(0) << 32 | lo(d(1), d(4)) << 24 | hi(d(1), d(4)) << 16 | lo(d(2), d(3)) << 8 | hi(d(2), d(3));
    }
}

using Code = std::array<std::uint8_t, 3 * kMaxTri * 2 + kMaxTri>;

// Breadth-first code of the embedding rooted at dart v->w, walking rotations forwards
// (dir = 1) or backwards (dir = -1). Complete invariant of the rooted, oriented map.
int bfs_code(const Tri& t, int v, int w, int dir, Code& out)
{
    std::array<std::uint8_t, kMaxTri> number{}, first{}, order{};
    int count = 1, len = 0;
    number[v] = 1;
    order[0] = static_cast<std::uint8_t>(v);
    first[v] = static_cast<std::uint8_t>(w);
    for (int q = 0; q < count; ++q) {
        const int u = order[q];
        const int s = t.pos(u, first[u]);
        for (int j = 0; j < t.deg[u]; ++j) {
            const int y = t.at(u, s + dir * j);
            if (!number[y]) {
                number[y] = static_cast<std::uint8_t>(++count);
                order[count - 1] = static_cast<std::uint8_t>(y);
                first[y] = static_cast<std::uint8_t>(u);
            }
            out[len++] = number[y];
        }
        out[len++] = 0;
    }
    return len;
}

struct CodeBuf {
    Code code{};
    int len = -1;
};

int compare(const CodeBuf& a, const CodeBuf& b)
{
    int l = std::min(a.len, b.len);
    for (int i = 0; i < l; ++i)
        if (a.code[i] != b.code[i])
            return a.code[i] < b.code[i] ? -1 : 1;
    return a.len == b.len ? 0 : (a.len < b.len ? -1 : 1);
}

class TriSpace {
public:
    explicit TriSpace(const EnumerationTask& task) : task_(task), target_(task.n), sign_(task.reduction_order == ReductionOrder::ascending ? 1 : -1) {}

    Tri root() const { return k4(); }
    int depth(const Tri& t) const { return t.n - 4; }
    int frontier_depth() const
    {
        if (task_.frontier_depth >= 0)
            return std::min(task_.frontier_depth, target_ - 4);
        return std::max(0, std::min(target_ - 4, target_ >= 14 ? 7 : 4));
    }

    bool emit(const Tri& t, detail::Emitted& out)
    {
        if (t.n != target_)
            return false;
        int mind = 64;
        for (int v = 0; v < t.n; ++v)
            mind = std::min<int>(mind, t.deg[v]);
        if (mind < task_.min_degree)
            return false;
        Graph g(t.n);
        for (int v = 0; v < t.n; ++v)
            for (int i = 0; i < t.deg[v]; ++i)
                if (t.rot[v][i] > v)
                    g.add_edge(v, t.rot[v][i]);
        CanonicalResult c = canonical_search(g);
        const auto& lab = c.form.labeling;
        out.graph = g.relabeled(lab);
        std::vector<std::vector<int>> rot(t.n);
        for (int v = 0; v < t.n; ++v)
            for (int i = 0; i < t.deg[v]; ++i)
                rot[lab[v]].push_back(lab[t.rot[v][i]]);
        out.embedding = PlaneEmbedding(out.graph, std::move(rot));
        out.code = std::move(c.form.code);
        return true;
    }

    template <class F>
    void children(const Tri& p, F&& f)
    {
        if (p.n >= target_)
            return;
        std::set<std::vector<std::uint8_t>> seen;
        auto consider = [&](Tri&& child) {
            if (!admissible(child)) {
                ++stats["pruned_degree"];
                return;
            }
            CodeBuf code;
            if (!canonical(child, code))
                return;
            if (seen.insert(std::vector<std::uint8_t>(code.code.begin(), code.code.begin() + code.len)).second)
                f(std::move(child));
        };
        for (int a = 0; a < p.n; ++a)
            for (int i = 0; i < p.deg[a]; ++i) {
                const int b = p.rot[a][i];
                // Faces once each: a is the smallest vertex of the face a -> b -> c.
                const int c = p.succ(b, a);
                if (a < b && a < c)
                    consider(expand3(p, a, b));
                if (a < b)
                    consider(expand4(p, a, b));
                if (p.deg[a] >= 4)
                    consider(expand5(p, a, i));
            }
    }

    std::map<std::string, std::uint64_t> stats;

private:
    EnumerationTask task_;
    int target_;
    int sign_;

    // Each expansion lowers the total degree deficit by at most max_repair.
    bool admissible(const Tri& t) const
    {
        const int k = task_.min_degree;
        if (k <= 3)
            return true;
        int deficit = 0;
        for (int v = 0; v < t.n; ++v)
            deficit += std::max(0, k - t.deg[v]);
        const int max_repair = 2;
        return deficit <= max_repair * (target_ - t.n);
    }

    void best_code(const Tri& t, const Reduction& r, CodeBuf& out) const
    {
        auto roots = [&](auto&& g) {
            switch (r.type) {
            case 3:
                for (int j = 0; j < 3; ++j)
                    g(t.at(r.x, j));
                break;
            case 4:
                g(t.at(r.x, r.i));
                g(t.at(r.x, r.i + 2));
                break;
            default:
                g(t.at(r.x, r.i));
            }
        };
        out.len = -1;
        roots([&](int w) {
            for (int dir : {1, -1}) {
                CodeBuf c;
                c.len = bfs_code(t, r.x, w, dir, c.code);
                if (out.len < 0 || sign_ * compare(c, out) < 0)
                    out = c;
            }
        });
    }

    // Canonical construction path test: the reduction removing the newest vertex must be
    // the canonical one. On success `code` identifies the child up to isomorphism.
    bool canonical(const Tri& t, CodeBuf& code)
    {
        const int x = t.n - 1;
        const int type = t.deg[x];
        if (type > 5)
            return false;
        Reduction mine{x, type, 0};
        // Degree 3 and 4 vertices always reduce, so a lower degree wins outright.
        for (int v = 0; v < t.n; ++v)
            if (t.deg[v] < type)
                return false;
        std::vector<Reduction> cands;
        for (int v = 0; v < t.n; ++v) {
            if (t.deg[v] != type)
                continue;
            const int choices = type == 3 ? 1 : (type == 4 ? 2 : 5);
            for (int i = 0; i < choices; ++i) {
                Reduction r{v, type, i};
                if (valid(t, r))
                    cands.push_back(r);
            }
        }
        // The choice at x that undoes the expansion is i = 0 by construction.
        const std::uint64_t my_key = reduction_key(t, mine);
        std::vector<Reduction> tied;
        for (const Reduction& r : cands) {
            const std::uint64_t k = reduction_key(t, r);
            if (sign_ > 0 ? k < my_key : k > my_key)
                return false;
            if (k == my_key)
                tied.push_back(r);
        }
        best_code(t, mine, code);
        for (const Reduction& r : tied) {
            if (r.x == mine.x && r.i == mine.i)
                continue;
            CodeBuf other;
            best_code(t, r, other);
            if (sign_ * compare(other, code) < 0)
                return false;
        }
        return true;
    }
};

void check_feasible(const EnumerationTask& task)
{
    validate(task);
    if (task.mode != EnumerationMode::triangulation)
        throw Error(ErrorKind::OutOfRange, "task mode is not triangulation");
    if (!task.allow_large && task.n > 17)
        throw Error(ErrorKind::InfeasibleScale, "triangulation enumeration above n=17 is a long-running mode and needs an explicit override");
    if (!task.allow_large && predicted_nodes(task) > effective_budget(task))
        throw Error(ErrorKind::InfeasibleScale, "predicted search size for n=" + std::to_string(task.n) +
                                                    " exceeds the node budget");
}

} // namespace

EnumerationResult enumerate_triangulations(const EnumerationTask& task, const GraphVisitor& visit)
{
    check_feasible(task);
    return detail::run_parallel(TriSpace(task), task, visit);
}

EnumerationResult enumerate_triangulations_serial(const EnumerationTask& task, const GraphVisitor& visit)
{
    check_feasible(task);
    if (task.split.count != 1)
        throw Error(ErrorKind::OutOfRange, "the serial enumerator does not split work");
    return detail::run_serial(TriSpace(task), task, visit);
}

namespace detail {

EnumerationResult run_triangulations_with(const EnumerationTask& task, const GraphVisitor& visit,
                                          const std::vector<std::size_t>* skip, const ItemDone& on_done,
                                          std::size_t* frontier_size, int* depth)
{
    check_feasible(task);
    return run_parallel(TriSpace(task), task, visit, skip, on_done, frontier_size, depth);
}

} // namespace detail

} // namespace planram
