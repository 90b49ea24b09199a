#include "planram/enumerate.hpp"

#include "planram/error.hpp"
#include "planram/graph6.hpp"
#include "planram/planar.hpp"
#include "search.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace planram {

namespace detail {
EnumerationResult run_c4free_with(const EnumerationTask& task, const GraphVisitor& visit,
                                  const std::vector<std::size_t>* skip, const ItemDone& on_done,
                                  std::size_t* frontier_size, int* depth);
EnumerationResult run_triangulations_with(const EnumerationTask& task, const GraphVisitor& visit,
                                          const std::vector<std::size_t>* skip, const ItemDone& on_done,
                                          std::size_t* frontier_size, int* depth);
} // namespace detail

namespace {
constexpr const char* kHeader = "planram-checkpoint v1";
}

std::string checkpoint_task_line(const EnumerationTask& task)
{
    std::ostringstream s;
    s << "task " << (task.mode == EnumerationMode::triangulation ? "triangulation" : "c4free_planar") << ' ' << task.n
      << ' ' << task.min_degree << ' ' << task.maximal_only << ' ' << task.connected_only << ' ' << task.split.index
      << ' ' << task.split.count;
    if (task.mode == EnumerationMode::triangulation && task.reduction_order == ReductionOrder::descending)
        s << " descending";
    if (task.euler_cap_only)
        s << " euler_cap";
    return s.str();
}

void write_checkpoint(std::ostream& out, const Checkpoint& cp)
{
    out << kHeader << '\n' << cp.task_line << '\n' << "depth " << cp.depth << " frontier " << cp.frontier_size << '\n';
    for (const auto& [index, graphs] : cp.done) {
        out << "item " << index << ' ' << graphs.size();
        for (const std::string& g : graphs)
            out << ' ' << g;
        out << '\n';
    }
}

Checkpoint read_checkpoint(std::istream& in)
{
    Checkpoint cp;
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw Error(ErrorKind::ParseError, "not a checkpoint file");
    if (!std::getline(in, cp.task_line) || cp.task_line.rfind("task ", 0) != 0)
        throw Error(ErrorKind::ParseError, "checkpoint lacks a task line");
    if (!std::getline(in, line))
        throw Error(ErrorKind::ParseError, "checkpoint lacks a depth line");
    {
        std::istringstream s(line);
        std::string d, f;
        if (!(s >> d >> cp.depth >> f >> cp.frontier_size) || d != "depth" || f != "frontier")
            throw Error(ErrorKind::ParseError, "bad depth line: " + line);
    }
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream s(line);
        std::string tag;
        std::size_t index = 0, count = 0;
        if (!(s >> tag >> index >> count) || tag != "item")
            throw Error(ErrorKind::ParseError, "bad item line: " + line);
        std::vector<std::string> graphs(count);
        for (std::string& g : graphs)
            if (!(s >> g))
                throw Error(ErrorKind::ParseError, "item line is short: " + line);
        cp.done[index] = std::move(graphs);
    }
    return cp;
}

EnumerationResult enumerate_resumable(const EnumerationTask& task, const std::string& path)
{
    Checkpoint cp;
    cp.task_line = checkpoint_task_line(task);
    if (std::filesystem::exists(path)) {
        std::ifstream in(path);
        Checkpoint old = read_checkpoint(in);
        if (old.task_line != cp.task_line)
            throw Error(ErrorKind::ParseError, "checkpoint belongs to a different task: " + old.task_line);
        cp = std::move(old);
    }
    std::vector<std::size_t> skip;
    for (const auto& [index, graphs] : cp.done)
        skip.push_back(index);

    auto save = [&] {
        const std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            write_checkpoint(out, cp);
        }
        std::filesystem::rename(tmp, path);
    };
    detail::ItemDone on_done = [&](std::size_t index, const std::vector<detail::Emitted>& items, std::uint64_t) {
        std::vector<std::string>& out = cp.done[index];
        for (const detail::Emitted& e : items)
            out.push_back(to_graph6(e.graph));
        save();
    };

    EnumerationTask run = task;
    run.collect = true;
    std::size_t frontier_size = 0;
    int depth = 0;
    EnumerationResult r = task.mode == EnumerationMode::triangulation
                              ? detail::run_triangulations_with(run, {}, &skip, on_done, &frontier_size, &depth)
                              : detail::run_c4free_with(run, {}, &skip, on_done, &frontier_size, &depth);
    if (!skip.empty() && (static_cast<int>(cp.depth) != depth || cp.frontier_size != frontier_size))
        throw Error(ErrorKind::ParseError, "checkpoint frontier does not match this build");
    cp.depth = depth;
    cp.frontier_size = frontier_size;
    save();

    // Fold the graphs of items finished in earlier runs back in.
    std::vector<std::pair<std::vector<std::uint8_t>, Graph>> all;
    for (Graph& g : r.graphs)
        all.emplace_back(adjacency_code(g), std::move(g));
    for (std::size_t index : skip)
        for (const std::string& s : cp.done[index]) {
            Graph g = from_graph6(s);
            all.emplace_back(adjacency_code(g), std::move(g));
            ++r.count;
        }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    r.graphs.clear();
    r.embeddings.clear();
    for (auto& [code, g] : all) {
        if (task.mode == EnumerationMode::triangulation)
            r.embeddings.push_back(embed(g));
        r.graphs.push_back(std::move(g));
    }
    return r;
}

} // namespace planram
