#include "planram/enumerate.hpp"

#include "planram/canonical.hpp"
#include "planram/error.hpp"
#include "planram/subgraph.hpp"
#include "search.hpp"

#include <numeric>

namespace planram {

namespace {

// A node of the augmentation tree: a C4-free planar graph with its automorphism
// generators and canonical labelling.
struct C4Node {
    Graph g;
    int edges = 0;
    std::vector<Permutation> gens;
    std::vector<int> labeling;
};

std::uint64_t vertex_invariant(const Graph& g, int v)
{
    int sum = 0;
    for_each(g.neighbors(v), [&](int w) { sum += g.degree(w); });
    return static_cast<std::uint64_t>(g.degree(v)) << 12 | static_cast<std::uint64_t>(sum);
}

std::uint64_t edge_invariant(const Graph& g, int u, int v)
{
    std::uint64_t a = vertex_invariant(g, u), b = vertex_invariant(g, v);
    return std::min(a, b) << 32 | std::max(a, b);
}

int degree_deficit(const Graph& g, int k)
{
    int d = 0;
    for (int v = 0; v < g.order(); ++v)
        d += std::max(0, k - g.degree(v));
    return d;
}

class C4Space {
public:
    C4Space(const EnumerationTask& task) : task_(task)
    {
        n_ = task.n;
        cap_ = task.euler_cap_only ? (n_ >= 3 ? 3 * n_ - 6 : n_ * (n_ - 1) / 2) : c4free_edge_cap(n_);
    }

    C4Node root() const
    {
        C4Node r;
        r.g = Graph(n_);
        CanonicalResult c = canonical_search(r.g);
        r.gens = std::move(c.generators);
        r.labeling = std::move(c.form.labeling);
        return r;
    }

    int depth(const C4Node& node) const { return node.edges; }

    int frontier_depth() const
    {
        if (task_.frontier_depth >= 0)
            return task_.frontier_depth;
        return std::min(cap_, n_ <= 6 ? 2 : 6);
    }

    bool emit(const C4Node& node, detail::Emitted& out)
    {
        const Graph& g = node.g;
        if (task_.min_degree > 0 && g.min_degree() < task_.min_degree)
            return false;
        if (task_.connected_only && !g.is_connected())
            return false;
        if (task_.maximal_only && !is_maximal_c4free_planar(g))
            return false;
        out.graph = g.relabeled(node.labeling);
        if (task_.collect)
            out.code = adjacency_code(out.graph);
        return true;
    }

    template <class F>
    void children(const C4Node& p, F&& f)
    {
        const Graph& g = p.g;
        const int e1 = p.edges + 1;
        if (e1 > cap_)
            return;
        for (const Edge& uv : nonedge_orbit_representatives(p)) {
            const int u = uv.u, v = uv.v;
            if (edge_closes_c4(g, u, v))
                continue;
            Graph h = g;
            h.add_edge(u, v);
            if (task_.min_degree > 0 && degree_deficit(h, task_.min_degree) > 2 * (cap_ - e1)) {
                ++stats["pruned_degree"];
                continue;
            }
            const std::uint64_t inv = edge_invariant(h, u, v);
            std::uint64_t best = 0;
            for (int a = 0; a < n_; ++a)
                for_each(h.neighbors(a) & ~first_n(a + 1), [&](int b) { best = std::max(best, edge_invariant(h, a, b)); });
            if (inv < best)
                continue;
            if (!is_planar(h))
                continue;
            CanonicalResult c = canonical_search(h);
            const auto& lab = c.form.labeling;
            Edge m{-1, -1};
            std::pair<int, int> mkey{-1, -1};
            for (int a = 0; a < n_; ++a)
                for_each(h.neighbors(a) & ~first_n(a + 1), [&](int b) {
                    if (edge_invariant(h, a, b) != best)
                        return;
                    std::pair<int, int> key{std::max(lab[a], lab[b]), std::min(lab[a], lab[b])};
                    if (key > mkey) {
                        mkey = key;
                        m = Edge{a, b};
                    }
                });
            if (!same_edge_orbit(c.generators, uv, m))
                continue;
            f(C4Node{std::move(h), e1, std::move(c.generators), lab});
        }
    }

    std::map<std::string, std::uint64_t> stats;

private:
    EnumerationTask task_;
    int n_ = 0;
    int cap_ = 0;

    std::vector<Edge> nonedge_orbit_representatives(const C4Node& p) const
    {
        const Graph& g = p.g;
        // Union-find over vertex pairs, indexed u * n + v with u < v.
        std::vector<int> parent(n_ * n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Permutation& perm : p.gens)
            for (int u = 0; u < n_; ++u)
                for (int v = u + 1; v < n_; ++v) {
                    if (g.adjacent(u, v))
                        continue;
                    int a = perm[u], b = perm[v];
                    int x = find(u * n_ + v), y = find(std::min(a, b) * n_ + std::max(a, b));
                    if (x != y)
                        parent[std::max(x, y)] = std::min(x, y);
                }
        std::vector<Edge> reps;
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!g.adjacent(u, v) && find(u * n_ + v) == u * n_ + v)
                    reps.push_back(Edge{u, v});
        return reps;
    }
};

void check_feasible(const EnumerationTask& task)
{
    validate(task);
    if (task.mode != EnumerationMode::c4free_planar)
        throw Error(ErrorKind::OutOfRange, "task mode is not c4free_planar");
    if (!task.allow_large && task.n > 12)
        throw Error(ErrorKind::InfeasibleScale, "C4-free planar enumeration above n=12 is a long-running mode and needs an explicit override");
    if (!task.allow_large && predicted_nodes(task) > effective_budget(task))
        throw Error(ErrorKind::InfeasibleScale, "predicted search size for n=" + std::to_string(task.n) +
                                                    " exceeds the node budget");
}

} // namespace

bool is_maximal_c4free_planar(const Graph& g)
{
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v) || edge_closes_c4(g, u, v))
                continue;
            Graph h = g;
            h.add_edge(u, v);
            if (is_planar(h))
                return false;
        }
    return true;
}

EnumerationResult enumerate_c4free_planar(const EnumerationTask& task, const GraphVisitor& visit)
{
    check_feasible(task);
    return detail::run_parallel(C4Space(task), task, visit);
}

EnumerationResult enumerate_c4free_planar_serial(const EnumerationTask& task, const GraphVisitor& visit)
{
    check_feasible(task);
    if (task.split.count != 1)
        throw Error(ErrorKind::OutOfRange, "the serial enumerator does not split work");
    return detail::run_serial(C4Space(task), task, visit);
}

namespace detail {

EnumerationResult run_c4free_with(const EnumerationTask& task, const GraphVisitor& visit,
                                  const std::vector<std::size_t>* skip, const ItemDone& on_done,
                                  std::size_t* frontier_size, int* depth)
{
    check_feasible(task);
    return run_parallel(C4Space(task), task, visit, skip, on_done, frontier_size, depth);
}

} // namespace detail

} // namespace planram
