#include "oracles.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace oracle {

bool has_c4(const Graph& g)
{
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    int q[3][4] = {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}};
                    for (auto& o : q)
                        if (g.adjacent(o[0], o[1]) && g.adjacent(o[1], o[2]) && g.adjacent(o[2], o[3]) && g.adjacent(o[3], o[0]))
                            return true;
                }
    return false;
}

namespace {

bool cycle_from(const Graph& g, std::vector<int>& path, std::vector<char>& used, int k, const std::vector<int>& pool)
{
    if (static_cast<int>(path.size()) == k)
        return g.adjacent(path.back(), path.front());
    for (int v : pool) {
        if (used[v] || !g.adjacent(path.back(), v))
            continue;
        used[v] = 1;
        path.push_back(v);
        if (cycle_from(g, path, used, k, pool))
            return true;
        path.pop_back();
        used[v] = 0;
    }
    return false;
}

bool cycle_within(const Graph& g, const std::vector<int>& pool, int k)
{
    if (static_cast<int>(pool.size()) < k)
        return false;
    for (int s : pool) {
        std::vector<char> used(g.order(), 0);
        std::vector<int> path{s};
        used[s] = 1;
        if (cycle_from(g, path, used, k, pool))
            return true;
    }
    return false;
}

} // namespace

bool has_cycle(const Graph& g, int k)
{
    std::vector<int> all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return cycle_within(g, all, k);
}

bool has_wheel(const Graph& g, int m)
{
    for (int x = 0; x < g.order(); ++x) {
        std::vector<int> nb;
        for (int v = 0; v < g.order(); ++v)
            if (g.adjacent(x, v))
                nb.push_back(v);
        if (cycle_within(g, nb, m))
            return true;
    }
    return false;
}

int independence(const Graph& g)
{
    const int n = g.order();
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if ((s >> u) & 1U)
                ok = (g.neighbors(u) & s) == 0;
        if (ok)
            best = std::max(best, __builtin_popcountll(s));
    }
    return best;
}

int connectivity(const Graph& g)
{
    const int n = g.order();
    if (n <= 1)
        return 0;
    int best = n - 1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        int k = __builtin_popcountll(s);
        if (k >= best || n - k < 2)
            continue;
        planram::VertexSet rest = planram::first_n(n) & ~s;
        if (g.component_of(__builtin_ctzll(rest), rest) != rest)
            best = k;
    }
    return best;
}

bool planar(const Graph& g)
{
    using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BG bg(g.order());
    for (const auto& e : g.edges())
        boost::add_edge(e.u, e.v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

std::uint64_t brute_code(const Graph& g)
{
    const int n = g.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                code = (code << 1) | (g.adjacent(p[i], p[j]) ? 1U : 0U);
        best = std::min(best, code);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

bool isomorphic(const Graph& a, const Graph& b)
{
    return a.order() == b.order() && brute_code(a) == brute_code(b);
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& f)
{
    std::vector<planram::Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.push_back({i, j});
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        Graph g(n);
        for (std::size_t k = 0; k < slots.size(); ++k)
            if ((mask >> k) & 1U)
                g.add_edge(slots[k].u, slots[k].v);
        f(g);
    }
}

std::vector<Graph> c4free_planar_classes(int n)
{
    std::map<std::uint64_t, Graph> classes;
    for_each_labeled_graph(n, [&](const Graph& g) {
        if (!has_c4(g) && planar(g))
            classes.emplace(brute_code(g), g);
    });
    std::vector<Graph> out;
    for (auto& [c, g] : classes)
        out.push_back(g);
    return out;
}

std::vector<Graph> triangulation_classes(int n)
{
    std::vector<planram::Edge> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            slots.push_back({i, j});
    const int m = 3 * n - 6;
    std::vector<char> pick(slots.size(), 0);
    std::fill(pick.end() - m, pick.end(), 1);
    std::map<std::uint64_t, Graph> classes;
    do {
        Graph g(n);
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (pick[k])
                g.add_edge(slots[k].u, slots[k].v);
        if (g.min_degree() >= 3 && planar(g))
            classes.emplace(brute_code(g), g);
    } while (std::next_permutation(pick.begin(), pick.end()));
    std::vector<Graph> out;
    for (auto& [c, g] : classes)
        out.push_back(g);
    return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng))
                g.add_edge(i, j);
    return g;
}

std::string data_path(const std::string& file)
{
#ifdef PLANRAM_TEST_DATA
    return std::string(PLANRAM_TEST_DATA) + "/" + file;
#else
    return "tests/data/" + file;
#endif
}

} // namespace oracle
