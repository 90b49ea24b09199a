#ifndef PLANRAM_CANONICAL_HPP
#define PLANRAM_CANONICAL_HPP

#include "planram/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace planram {

using Permutation = std::vector<int>;

// code: n, then the upper triangle of the relabelled graph row by row, packed
// eight bits per byte from the most significant bit. Coloured forms append the
// colour of each canonical position.
// labeling[v] is the canonical position of v.
struct CanonicalForm {
    std::vector<std::uint8_t> code;
    std::vector<int> labeling;

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.code == b.code; }
};

struct CanonicalResult {
    CanonicalForm form;
    // Generate the automorphism group (of the coloured graph when colours are given).
    std::vector<Permutation> generators;
    std::uint64_t leaves = 0;
};

CanonicalResult canonical_search(const Graph& g, std::span<const int> colors = {});
CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors);
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

std::vector<std::uint8_t> adjacency_code(const Graph& g);

// orbit[v] is the smallest vertex in the orbit of v.
std::vector<int> vertex_orbits(int n, std::span<const Permutation> generators);
bool same_edge_orbit(std::span<const Permutation> generators, Edge a, Edge b);

} // namespace planram

#endif
