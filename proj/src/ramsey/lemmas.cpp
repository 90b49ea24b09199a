#include "planram/ramsey.hpp"

#include "common.hpp"
#include "planram/error.hpp"
#include "planram/graph6.hpp"
#include "planram/subgraph.hpp"

#include <omp.h>

namespace planram {

namespace {

// Some z with all of its complement neighbours inside a pair {x, y}, such that
// G - {x, y, z} is non-empty and has no path of length 2.
bool has_isolating_cut_pair(const Graph& g)
{
    const int n = g.order();
    const Graph comp = g.complement();
    for (int z = 0; z < n; ++z) {
        const VertexSet nz = comp.neighbors(z);
        if (set_size(nz) > 2)
            continue;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                if (x == z || y == z || (nz & ~(bit(x) | bit(y))))
                    continue;
                const VertexSet rest = g.vertices() & ~(bit(x) | bit(y) | bit(z));
                if (!rest)
                    continue;
                bool path = false;
                for_each(rest, [&](int v) { path = path || set_size(g.neighbors(v) & rest) >= 2; });
                if (!path)
                    return true;
            }
    }
    return false;
}

struct Flags {
    bool l15 = false;
    bool l16_applies = false;
    bool l16 = false;
    bool hamiltonian_complement = false;
    bool pancyclic = true;
    bool long_cycle = false;
};

Flags examine(const Graph& g)
{
    const int n = g.order();
    const Graph comp = g.complement();
    Flags f;
    f.l15 = independence_number(comp) <= 3;
    if (n >= 6 && connectivity(comp) <= 2) {
        f.l16_applies = true;
        f.l16 = has_isolating_cut_pair(g);
    }
    if (n >= 3)
        f.hamiltonian_complement = cycle_of_length(comp, n).has_value();
    if (n >= 7) {
        f.long_cycle = cycle_of_length(comp, n - 1).has_value();
        f.pancyclic = f.long_cycle;
        for (int k = 3; k < n - 1 && f.pancyclic; ++k)
            f.pancyclic = cycle_of_length(comp, k).has_value();
    }
    return f;
}

} // namespace

Certificate lemma_property_suite(int n_max, const VerifyOptions& opt)
{
    detail::Stopwatch clock;
    if (n_max < 1 || n_max > 11)
        throw Error(ErrorKind::OutOfRange, "the lemma suite covers orders up to 11");
    Certificate c;
    c.claim_id = "lemmas.n" + std::to_string(n_max);
    c.params = {{"n_max", n_max}};
    c.notes["lemma16_reading"] = "z with complement neighbours inside {x,y}; G-{x,y,z} non-empty without a 2-path";
    c.notes["lemma17"] = "PR(C4,Cn) = n+1: every graph on n+1 vertices has C_n in its complement, some graph on n does not";
    c.notes["lemma18"] = "out of range: its hypothesis needs N >= 12";
    std::int64_t checked = 0, v15 = 0, c16 = 0, v16 = 0, cpan = 0, vpan = 0, c17 = 0, v17 = 0;
    std::vector<std::string> violators;
    c.exhaustive = true;
    for (int n = 1; n <= n_max; ++n) {
        EnumerationResult r;
        try {
            r = enumerate(detail::task_for(n, EnumerationMode::c4free_planar, opt));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InfeasibleScale)
                throw;
            c = detail::infeasible(std::move(c), e.what());
            c.runtime_ms = clock.ms();
            return c;
        }
        c.exhaustive = c.exhaustive && r.exhaustive;
        const auto count = static_cast<std::int64_t>(r.graphs.size());
        std::vector<Flags> flags(r.graphs.size());
        const int threads = opt.workers > 0 ? opt.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (std::int64_t i = 0; i < count; ++i)
            flags[i] = examine(r.graphs[i]);
        std::int64_t lower_witnesses = 0;
        for (std::int64_t i = 0; i < count; ++i) {
            const Flags& f = flags[i];
            bool bad = !f.l15;
            v15 += !f.l15;
            if (f.l16_applies) {
                ++c16;
                v16 += !f.l16;
                bad = bad || !f.l16;
            }
            if (n >= 7) {
                ++cpan;
                vpan += !f.pancyclic;
                bad = bad || !f.pancyclic;
                // Upper half of PR(C4, C_{n-1}) = n.
                ++c17;
                v17 += !f.long_cycle;
            }
            lower_witnesses += !f.hamiltonian_complement;
            if (bad)
                violators.push_back(to_graph6(r.graphs[i]));
        }
        checked += count;
        c.counts["classes_n" + std::to_string(n)] = count;
        if (n >= 6 && n <= 10 && n + 1 <= n_max) {
            // Lower half of PR(C4, C_n) = n + 1.
            c.counts["lemma17_lower_witnesses_n" + std::to_string(n)] = lower_witnesses;
            ++c17;
            v17 += lower_witnesses == 0;
        }
    }
    c.counts["graphs_checked"] = checked;
    c.counts["lemma15_violations"] = v15;
    c.counts["lemma16_applicable"] = c16;
    c.counts["lemma16_violations"] = v16;
    c.counts["pancyclic_checked"] = cpan;
    c.counts["pancyclic_violations"] = vpan;
    c.counts["lemma17_checks"] = c17;
    c.counts["lemma17_violations"] = v17;
    c.witnesses = std::move(violators);
    const bool ok = v15 == 0 && v16 == 0 && vpan == 0 && v17 == 0;
    c.verdict = ok ? Verdict::verified : Verdict::refuted;
    if (ok && !c.exhaustive)
        c = detail::infeasible(std::move(c), "enumeration did not complete");
    c.runtime_ms = clock.ms();
    return c;
}

} // namespace planram
