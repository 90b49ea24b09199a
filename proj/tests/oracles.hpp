#ifndef PLANRAM_TESTS_ORACLES_HPP
#define PLANRAM_TESTS_ORACLES_HPP

// Slow reference implementations used only to cross-check the library.

#include "planram/graph.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using planram::Graph;

bool has_c4(const Graph& g);
bool has_cycle(const Graph& g, int k);
bool has_wheel(const Graph& g, int m);
int independence(const Graph& g);
int connectivity(const Graph& g);
bool planar(const Graph& g);

// Smallest upper-triangle bit string over all relabellings (n <= 9).
std::uint64_t brute_code(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& f);
// One representative per isomorphism class of C4-free planar graphs on n <= 6 vertices.
std::vector<Graph> c4free_planar_classes(int n);
// Triangulations on n <= 7 vertices by choosing 3n-6 edges and testing planarity.
std::vector<Graph> triangulation_classes(int n);

Graph random_graph(int n, double p, std::mt19937_64& rng);
std::string data_path(const std::string& file);

} // namespace oracle

#endif
