#ifndef PLANRAM_GRAPH_HPP
#define PLANRAM_GRAPH_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace planram {

inline constexpr int kMaxOrder = 64;

// Vertex subsets of a graph are single machine words.
using VertexSet = std::uint64_t;

constexpr VertexSet bit(int v) noexcept { return VertexSet{1} << v; }
constexpr int set_size(VertexSet s) noexcept { return std::popcount(s); }
constexpr int lowest(VertexSet s) noexcept { return std::countr_zero(s); }
constexpr VertexSet first_n(int n) noexcept { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

template <class F>
void for_each(VertexSet s, F&& f)
{
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        f(v);
    }
}

struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Degree multiset in d^e notation, ascending by degree.
struct DegreeSequence {
    std::vector<std::pair<int, int>> terms;

    int order() const;
    int degree_sum() const;
    int count(int degree) const;
    std::string to_string() const;
    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    static Graph from_edges(int order, std::span<const Edge> edges);

    int order() const noexcept { return n_; }
    VertexSet vertices() const noexcept { return first_n(n_); }
    VertexSet neighbors(int v) const noexcept { return adj_[v]; }
    bool adjacent(int u, int v) const noexcept { return (adj_[u] >> v) & 1U; }
    int degree(int v) const noexcept { return std::popcount(adj_[v]); }
    int edge_count() const noexcept;
    int min_degree() const noexcept;
    int max_degree() const noexcept;
    std::vector<Edge> edges() const;
    DegreeSequence degree_sequence() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    // Appends an isolated vertex and returns its id.
    int add_vertex();
    // Removes v; the last vertex takes over its id.
    void remove_vertex_swap_last(int v);

    Graph complement() const;
    // Vertices of s renumbered in ascending order.
    Graph induced(VertexSet s) const;
    // new_id[v] is the id of v in the result.
    Graph relabeled(std::span<const int> new_id) const;

    bool is_connected() const;
    VertexSet component_of(int v, VertexSet within) const;
    int component_count() const;

    const std::string& label() const noexcept { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    friend bool operator==(const Graph& a, const Graph& b) noexcept;

private:
    int n_ = 0;
    std::array<VertexSet, kMaxOrder> adj_{};
    std::string label_;
};

namespace graphs {
Graph empty(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph wheel(int rim);
Graph complete_bipartite(int a, int b);
Graph octahedron();
Graph icosahedron();
Graph dodecahedron();
} // namespace graphs

} // namespace planram

#endif
