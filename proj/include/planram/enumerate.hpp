#ifndef PLANRAM_ENUMERATE_HPP
#define PLANRAM_ENUMERATE_HPP

#include "planram/graph.hpp"
#include "planram/planar.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace planram {

enum class EnumerationMode { c4free_planar, triangulation };

// Which canonical reduction a triangulation keeps when several have the same degree type.
// Both orders define a valid construction tree; they share no subtrees beyond the root.
enum class ReductionOrder { ascending, descending };

struct WorkSplit {
    int index = 0;
    int count = 1;
};

struct EnumerationTask {
    int n = 0;
    EnumerationMode mode = EnumerationMode::c4free_planar;
    int min_degree = 0;
    bool maximal_only = false;
    bool connected_only = false;
    WorkSplit split;

    // 0 means: PLANRAM_BUDGET_NODES if set, else kDefaultBudgetNodes.
    std::uint64_t budget_nodes = 0;
    // Skip the predicted-size check (the node budget still applies).
    bool allow_large = false;
    // Threads for the parallel driver; 0 lets OpenMP decide.
    int workers = 0;
    // Frontier depth for splitting; negative picks a default from n.
    int frontier_depth = -1;
    // Drop to a plain Euler bound instead of the face-identity edge cap (C4-free mode).
    bool euler_cap_only = false;
    ReductionOrder reduction_order = ReductionOrder::ascending;
    // Keep emitted graphs in the result (otherwise only counts and visitor calls).
    bool collect = true;
};

inline constexpr std::uint64_t kDefaultBudgetNodes = 200'000'000ULL;

// Throws OutOfRange for inconsistent tasks.
void validate(const EnumerationTask& task);
std::uint64_t effective_budget(const EnumerationTask& task);
// Rough search-tree size, from measured runs; used for the InfeasibleScale check.
std::uint64_t predicted_nodes(const EnumerationTask& task);

struct EnumerationResult {
    std::uint64_t count = 0;
    // Canonically labelled, sorted by canonical code.
    std::vector<Graph> graphs;
    // Triangulation mode: embeddings of graphs[i], same labelling.
    std::vector<PlaneEmbedding> embeddings;
    bool exhaustive = true;
    std::uint64_t nodes = 0;
    // Statistics keyed by name (edge-count histogram, pruned nodes, ...).
    std::map<std::string, std::uint64_t> stats;
};

// Called once per emitted class with the canonically labelled graph and the calling
// worker's index; may run concurrently on different workers.
using GraphVisitor = std::function<void(const Graph&, int worker)>;

// Edge cap used for pruning: floor(15(n-2)/7) for n >= 4, else n(n-1)/2.
int c4free_edge_cap(int n);
bool is_maximal_c4free_planar(const Graph& g);

EnumerationResult enumerate_c4free_planar(const EnumerationTask& task, const GraphVisitor& visit = {});
// Single-threaded recursion over the whole tree, without frontier splitting.
EnumerationResult enumerate_c4free_planar_serial(const EnumerationTask& task, const GraphVisitor& visit = {});

EnumerationResult enumerate_triangulations(const EnumerationTask& task, const GraphVisitor& visit = {});
EnumerationResult enumerate_triangulations_serial(const EnumerationTask& task, const GraphVisitor& visit = {});

EnumerationResult enumerate(const EnumerationTask& task, const GraphVisitor& visit = {});

int max_edges_c4free_planar(int n);

// Checkpoints: completed frontier items with their emitted graphs, so that an interrupted
// run can continue. Text format:
//   planram-checkpoint v1
//   task <mode> <n> <min_degree> <maximal_only> <connected_only> <split.index> <split.count>
//   depth <d> frontier <size>
//   item <index> <count> <graph6>...
struct Checkpoint {
    std::string task_line;
    int depth = 0;
    std::size_t frontier_size = 0;
    std::map<std::size_t, std::vector<std::string>> done;
};

std::string checkpoint_task_line(const EnumerationTask& task);
void write_checkpoint(std::ostream& out, const Checkpoint& cp);
Checkpoint read_checkpoint(std::istream& in);

// Runs the task and keeps `path` up to date after every finished frontier item. Items
// already recorded in an existing file at `path` are not searched again.
EnumerationResult enumerate_resumable(const EnumerationTask& task, const std::string& path);

} // namespace planram

#endif
