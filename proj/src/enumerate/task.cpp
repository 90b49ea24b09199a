#include "planram/enumerate.hpp"

#include "planram/error.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <vector>

namespace planram {

void validate(const EnumerationTask& task)
{
    if (task.n < 1 || task.n > kMaxOrder)
        throw Error(ErrorKind::OutOfRange, "order must be in 1..64");
    if (task.min_degree < 0 || task.min_degree > 5)
        throw Error(ErrorKind::OutOfRange, "min_degree must be in 0..5");
    if (task.maximal_only && task.mode != EnumerationMode::c4free_planar)
        throw Error(ErrorKind::OutOfRange, "maximal_only applies to C4-free planar enumeration only");
    if (task.split.count < 1 || task.split.index < 0 || task.split.index >= task.split.count)
        throw Error(ErrorKind::OutOfRange, "invalid work split");
    if (task.workers < 0)
        throw Error(ErrorKind::OutOfRange, "workers must be >= 0");
    if (task.mode == EnumerationMode::triangulation && (task.n < 4 || task.n > 32))
        throw Error(ErrorKind::OutOfRange, "triangulations are generated for 4 <= n <= 32");
}

std::uint64_t effective_budget(const EnumerationTask& task)
{
    if (task.budget_nodes > 0)
        return task.budget_nodes;
    if (const char* env = std::getenv("PLANRAM_BUDGET_NODES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
    }
    return kDefaultBudgetNodes;
}

std::uint64_t predicted_nodes(const EnumerationTask& task)
{
    // Measured tree sizes; beyond the table each order multiplies the size by `growth`.
    auto extrapolate = [](const std::vector<std::uint64_t>& table, int first, int n, double growth) {
        if (n < first)
            return std::uint64_t{1};
        const int last = first + static_cast<int>(table.size()) - 1;
        if (n <= last)
            return table[n - first];
        double v = static_cast<double>(table.back());
        for (int k = last; k < n && v < 1e19; ++k)
            v *= growth;
        return v >= 1.8e19 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(v);
    };
    if (task.mode == EnumerationMode::c4free_planar) {
        static const std::vector<std::uint64_t> full{1, 2, 4, 8, 18, 44, 117, 351, 1229, 5045, 24730, 143587};
        return extrapolate(full, 1, task.n, 6.5);
    }
    if (task.min_degree >= 5) {
        static const std::vector<std::uint64_t> pruned{57, 169, 584, 2328, 10096, 46129, 219067};
        return extrapolate(pruned, 12, task.n, 4.8);
    }
    static const std::vector<std::uint64_t> full{1, 2, 4, 9, 23, 73, 306, 1555, 9150, 58716};
    return extrapolate(full, 4, task.n, 6.8);
}

int c4free_edge_cap(int n)
{
    if (n < 4)
        return n * (n - 1) / 2;
    return 15 * (n - 2) / 7;
}

EnumerationResult enumerate(const EnumerationTask& task, const GraphVisitor& visit)
{
    if (task.mode == EnumerationMode::triangulation)
        return enumerate_triangulations(task, visit);
    return enumerate_c4free_planar(task, visit);
}

int max_edges_c4free_planar(int n)
{
    EnumerationTask task;
    task.n = n;
    task.collect = false;
    std::atomic<int> best{0};
    EnumerationResult r = enumerate_c4free_planar(task, [&](const Graph& g, int) {
        int e = g.edge_count();
        int cur = best.load();
        while (e > cur && !best.compare_exchange_weak(cur, e)) {
        }
    });
    if (!r.exhaustive)
        throw Error(ErrorKind::InfeasibleScale, "node budget exhausted before the search finished");
    return best.load();
}

} // namespace planram
