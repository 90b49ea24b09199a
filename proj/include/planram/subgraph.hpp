#ifndef PLANRAM_SUBGRAPH_HPP
#define PLANRAM_SUBGRAPH_HPP

#include "planram/graph.hpp"

#include <array>
#include <optional>
#include <vector>

namespace planram {

bool contains_c4(const Graph& g);
std::optional<std::array<int, 4>> find_c4(const Graph& g);
// True when adding uv to g would close a 4-cycle.
bool edge_closes_c4(const Graph& g, int u, int v);

// Vertices of a k-cycle in traversal order, or nothing. Requires 3 <= k <= n.
std::optional<std::vector<int>> cycle_of_length(const Graph& g, int k);
// Same search restricted to the vertices of `within`.
std::optional<std::vector<int>> cycle_of_length_in(const Graph& g, VertexSet within, int k);

enum class WheelShortcut { none, dirac, chvatal_erdos };

struct WheelWitness {
    int hub = -1;
    std::vector<int> rim;
};

struct WheelSearch {
    bool found = false;
    WheelShortcut shortcut = WheelShortcut::none;
    int hubs_examined = 0;
    std::optional<WheelWitness> witness;
};

// Hubs are tried by descending degree. On a neighbourhood of exactly m vertices the
// Dirac and Chvatal-Erdos conditions are tried before the exact rim search; they can
// only answer yes. With want_witness the rim is then found by the exact search.
WheelSearch find_wheel(const Graph& g, int m, bool want_witness = true);
bool contains_wheel(const Graph& g, int m);
bool validate_wheel(const Graph& g, const WheelWitness& w, int m);

int independence_number(const Graph& g);
int connectivity(const Graph& g);
// Minimum number of vertices separating non-adjacent s and t.
int local_connectivity(const Graph& g, int s, int t);

} // namespace planram

#endif
