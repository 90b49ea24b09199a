#include "planram/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace planram {

std::vector<std::uint8_t> adjacency_code(const Graph& g)
{
    const int n = g.order();
    std::vector<std::uint8_t> code(1 + (n * (n - 1) / 2 + 7) / 8, 0);
    code[0] = static_cast<std::uint8_t>(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
            if (g.adjacent(i, j))
                code[1 + k / 8] |= static_cast<std::uint8_t>(0x80U >> (k % 8));
    return code;
}

namespace {

using Cells = std::vector<VertexSet>;

class Search {
public:
    Search(const Graph& g, std::span<const int> colors) : g_(g), n_(g.order())
    {
        colors_.assign(n_, 0);
        if (!colors.empty())
            std::copy(colors.begin(), colors.begin() + n_, colors_.begin());
    }

    CanonicalResult run()
    {
        std::map<int, VertexSet> by_color;
        for (int v = 0; v < n_; ++v)
            by_color[colors_[v]] |= bit(v);
        Cells cells;
        for (auto& [c, s] : by_color)
            cells.push_back(s);
        explore(cells, {});
        CanonicalResult out;
        out.form.labeling = best_lab_;
        out.form.code = best_code_;
        if (!colors_.empty() && std::any_of(colors_.begin(), colors_.end(), [](int c) { return c != 0; })) {
            std::vector<int> inv(n_);
            for (int v = 0; v < n_; ++v)
                inv[best_lab_[v]] = v;
            for (int i = 0; i < n_; ++i)
                out.form.code.push_back(static_cast<std::uint8_t>(colors_[inv[i]]));
        }
        out.generators = std::move(gens_);
        out.leaves = leaves_;
        return out;
    }

private:
    const Graph& g_;
    int n_;
    std::vector<int> colors_;
    std::vector<Permutation> gens_;
    std::vector<int> first_lab_, best_lab_;
    std::vector<std::uint8_t> first_code_, best_code_;
    std::uint64_t leaves_ = 0;

    // Splits cell ci by neighbour counts into cells[si]; groups are ordered by count.
    bool split(Cells& cells, std::size_t ci, VertexSet w) const
    {
        VertexSet x = cells[ci];
        if (set_size(x) == 1)
            return false;
        std::array<VertexSet, kMaxOrder + 1> groups{};
        int lo = kMaxOrder + 1, hi = -1;
        for_each(x, [&](int v) {
            int c = set_size(g_.neighbors(v) & w);
            groups[c] |= bit(v);
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        });
        if (lo == hi)
            return false;
        Cells parts;
        for (int c = lo; c <= hi; ++c)
            if (groups[c])
                parts.push_back(groups[c]);
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(ci));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(ci), parts.begin(), parts.end());
        return true;
    }

    void refine(Cells& cells) const
    {
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t si = 0; si < cells.size() && !again; ++si)
                for (std::size_t ci = 0; ci < cells.size() && !again; ++ci)
                    if (split(cells, ci, cells[si]))
                        again = true;
        }
    }

    void leaf(const Cells& cells)
    {
        ++leaves_;
        std::vector<int> lab(n_);
        for (std::size_t i = 0; i < cells.size(); ++i)
            lab[lowest(cells[i])] = static_cast<int>(i);
        std::vector<std::uint8_t> code = adjacency_code(g_.relabeled(lab));
        if (first_lab_.empty()) {
            first_lab_ = lab;
            first_code_ = code;
            best_lab_ = lab;
            best_code_ = code;
            return;
        }
        if (code == first_code_) {
            add_automorphism(first_lab_, lab);
            return;
        }
        if (code == best_code_) {
            add_automorphism(best_lab_, lab);
            return;
        }
        if (code > best_code_) {
            best_code_ = std::move(code);
            best_lab_ = std::move(lab);
        }
    }

    void add_automorphism(const std::vector<int>& ref, const std::vector<int>& lab)
    {
        std::vector<int> inv(n_);
        for (int v = 0; v < n_; ++v)
            inv[ref[v]] = v;
        Permutation p(n_);
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            p[v] = inv[lab[v]];
            identity = identity && p[v] == v;
        }
        if (!identity)
            gens_.push_back(std::move(p));
    }

    int find(std::vector<int>& parent, int v) const
    {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }

    void explore(Cells cells, const std::vector<int>& prefix)
    {
        refine(cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (set_size(cells[i]) > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        VertexSet done = 0;
        std::size_t gens_seen = 0;
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<int> next_prefix = prefix;
        next_prefix.push_back(-1);
        for_each(cells[target], [&](int v) {
            // Fold in automorphisms found so far that fix the prefix pointwise.
            for (; gens_seen < gens_.size(); ++gens_seen) {
                const Permutation& p = gens_[gens_seen];
                bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int u) { return p[u] == u; });
                if (!fixes)
                    continue;
                for (int u = 0; u < n_; ++u) {
                    int a = find(parent, u), b = find(parent, p[u]);
                    if (a != b)
                        parent[std::max(a, b)] = std::min(a, b);
                }
            }
            bool equivalent = false;
            for_each(done, [&](int w) { equivalent = equivalent || find(parent, w) == find(parent, v); });
            if (equivalent)
                return;
            done |= bit(v);
            Cells child = cells;
            child[target] &= ~bit(v);
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), bit(v));
            next_prefix.back() = v;
            explore(std::move(child), next_prefix);
        });
    }
};

} // namespace

CanonicalResult canonical_search(const Graph& g, std::span<const int> colors)
{
    if (g.order() == 0)
        return CanonicalResult{CanonicalForm{{0}, {}}, {}, 1};
    return Search(g, colors).run();
}

CanonicalForm canonical_form(const Graph& g)
{
    return canonical_search(g).form;
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors)
{
    return canonical_search(g, colors).form;
}

Graph canonical_graph(const Graph& g)
{
    return g.relabeled(canonical_form(g).labeling);
}

bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence())
        return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<int> vertex_orbits(int n, std::span<const Permutation> generators)
{
    std::vector<int> orbit(n);
    std::iota(orbit.begin(), orbit.end(), 0);
    auto find = [&](int v) {
        while (orbit[v] != v)
            v = orbit[v] = orbit[orbit[v]];
        return v;
    };
    for (const Permutation& p : generators)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(p[v]);
            if (a != b)
                orbit[std::max(a, b)] = std::min(a, b);
        }
    for (int v = 0; v < n; ++v)
        orbit[v] = find(v);
    return orbit;
}

bool same_edge_orbit(std::span<const Permutation> generators, Edge a, Edge b)
{
    auto norm = [](Edge e) { return e.u < e.v ? e : Edge{e.v, e.u}; };
    a = norm(a);
    b = norm(b);
    if (a == b)
        return true;
    std::vector<Edge> seen{a};
    for (std::size_t i = 0; i < seen.size(); ++i)
        for (const Permutation& p : generators) {
            Edge e = norm(Edge{p[seen[i].u], p[seen[i].v]});
            if (e == b)
                return true;
            if (std::find(seen.begin(), seen.end(), e) == seen.end())
                seen.push_back(e);
        }
    return false;
}

} // namespace planram
