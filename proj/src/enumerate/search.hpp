#ifndef PLANRAM_SRC_SEARCH_HPP
#define PLANRAM_SRC_SEARCH_HPP

// Shared tree-search driver for both generators. A Space provides:
//   Node root();
//   int depth(const Node&);
//   template <class F> void children(const Node&, F&& f);   // f(Node&&) per accepted child
//   bool emit(const Node&, Emitted& out);                   // fills out when the node is output
//   std::map<std::string, std::uint64_t> stats;             // per-copy counters, summed on merge
// Each worker works on its own copy of the Space.

#include "planram/canonical.hpp"
#include "planram/enumerate.hpp"
#include "planram/error.hpp"
#include "planram/graph6.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <omp.h>
#include <optional>

namespace planram::detail {

struct Emitted {
    std::vector<std::uint8_t> code;
    Graph graph;
    std::optional<PlaneEmbedding> embedding;
};

struct Sink {
    bool collect = true;
    const GraphVisitor* visit = nullptr;
    int worker = 0;
    std::uint64_t count = 0;
    std::vector<Emitted> items;

    void take(Emitted&& e)
    {
        ++count;
        if (visit && *visit)
            (*visit)(e.graph, worker);
        if (collect)
            items.push_back(std::move(e));
    }
};

struct Budget {
    std::uint64_t limit = 0;
    std::atomic<std::uint64_t> used{0};
    std::atomic<bool> exceeded{false};

    bool charge()
    {
        if (used.fetch_add(1, std::memory_order_relaxed) + 1 > limit) {
            exceeded.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }
    bool stopped() const { return exceeded.load(std::memory_order_relaxed); }
};

template <class Space, class Node>
void descend(Space& space, const Node& node, Sink& sink, Budget& budget)
{
    if (budget.stopped() || !budget.charge())
        return;
    Emitted e;
    if (space.emit(node, e))
        sink.take(std::move(e));
    space.children(node, [&](Node&& child) { descend(space, child, sink, budget); });
}

inline void finish(EnumerationResult& r, std::vector<Sink>& sinks, bool collect)
{
    for (Sink& s : sinks)
        r.count += s.count;
    if (!collect)
        return;
    std::vector<Emitted> all;
    for (Sink& s : sinks)
        for (Emitted& e : s.items)
            all.push_back(std::move(e));
    std::sort(all.begin(), all.end(), [](const Emitted& a, const Emitted& b) { return a.code < b.code; });
    r.graphs.reserve(all.size());
    for (Emitted& e : all) {
        r.graphs.push_back(std::move(e.graph));
        if (e.embedding)
            r.embeddings.push_back(std::move(*e.embedding));
    }
}

template <class Space>
void merge_stats(EnumerationResult& r, const Space& space)
{
    for (const auto& [k, v] : space.stats)
        r.stats[k] += v;
}

template <class Space>
EnumerationResult run_serial(Space space, const EnumerationTask& task, const GraphVisitor& visit)
{
    Budget budget;
    budget.limit = effective_budget(task);
    std::vector<Sink> sinks(1);
    sinks[0].collect = task.collect;
    sinks[0].visit = &visit;
    descend(space, space.root(), sinks[0], budget);
    EnumerationResult r;
    finish(r, sinks, task.collect);
    merge_stats(r, space);
    r.nodes = std::min(budget.used.load(), budget.limit);
    r.exhaustive = !budget.stopped();
    return r;
}

// Frontier: nodes at the split depth, in deterministic DFS order. Shallower nodes are
// emitted into `shallow`.
template <class Space, class Node>
void collect_frontier(Space& space, const Node& node, int depth, std::vector<Node>& frontier, Sink& shallow,
                      Budget& budget)
{
    if (space.depth(node) == depth) {
        frontier.push_back(node);
        return;
    }
    if (!budget.charge())
        return;
    Emitted e;
    if (space.emit(node, e))
        shallow.take(std::move(e));
    space.children(node, [&](Node&& child) { collect_frontier(space, child, depth, frontier, shallow, budget); });
}

// Per-item callback for checkpointing; called in a critical section.
using ItemDone = std::function<void(std::size_t index, const std::vector<Emitted>& items, std::uint64_t count)>;

template <class Space>
EnumerationResult run_parallel(const Space& proto, const EnumerationTask& task, const GraphVisitor& visit,
                               const std::vector<std::size_t>* skip = nullptr, const ItemDone& on_done = {},
                               std::size_t* frontier_size = nullptr, int* frontier_depth = nullptr)
{
    using Node = decltype(std::declval<Space&>().root());
    Budget budget;
    budget.limit = effective_budget(task);
    const int depth = proto.frontier_depth();
    if (frontier_depth)
        *frontier_depth = depth;

    Space front_space = proto;
    std::vector<Node> frontier;
    Sink shallow;
    shallow.collect = task.collect || static_cast<bool>(on_done);
    shallow.visit = task.split.index == 0 ? &visit : nullptr;
    collect_frontier(front_space, front_space.root(), depth, frontier, shallow, budget);
    if (frontier_size)
        *frontier_size = frontier.size();

    std::vector<std::size_t> mine;
    for (std::size_t i = 0; i < frontier.size(); ++i)
        if (static_cast<int>(i % task.split.count) == task.split.index &&
            !(skip && std::binary_search(skip->begin(), skip->end(), i)))
            mine.push_back(i);

    int threads = task.workers > 0 ? task.workers : omp_get_max_threads();
    threads = std::max(1, threads);
    std::vector<Sink> sinks(threads);
    std::vector<Space> spaces(threads, proto);
    for (int t = 0; t < threads; ++t) {
        sinks[t].collect = task.collect;
        sinks[t].visit = &visit;
        sinks[t].worker = t;
    }
    const long long items = static_cast<long long>(mine.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (long long i = 0; i < items; ++i) {
        const int t = omp_get_thread_num();
        if (!on_done) {
            descend(spaces[t], frontier[mine[i]], sinks[t], budget);
            continue;
        }
        Sink local;
        local.collect = true;
        local.visit = &visit;
        local.worker = t;
        descend(spaces[t], frontier[mine[i]], local, budget);
#pragma omp critical(planram_item_done)
        {
            if (!budget.stopped())
                on_done(mine[i], local.items, local.count);
            sinks[t].count += local.count;
            if (task.collect)
                for (Emitted& e : local.items)
                    sinks[t].items.push_back(std::move(e));
        }
    }

    EnumerationResult r;
    if (task.split.index == 0) {
        if (!task.collect)
            shallow.items.clear();
        sinks.push_back(std::move(shallow));
    }
    finish(r, sinks, task.collect);
    merge_stats(r, front_space);
    for (const Space& s : spaces)
        merge_stats(r, s);
    r.nodes = std::min(budget.used.load(), budget.limit);
    r.exhaustive = !budget.stopped();
    return r;
}

} // namespace planram::detail

#endif
