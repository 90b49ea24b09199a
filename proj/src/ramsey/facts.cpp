#include "planram/ramsey.hpp"

#include "common.hpp"
#include "planram/error.hpp"
#include "planram/graph6.hpp"
#include "planram/subgraph.hpp"

namespace planram {

namespace {

VertexSet of_degree(const Graph& g, int d)
{
    VertexSet s = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == d)
            s |= bit(v);
    return s;
}

bool has_triangle_in(const Graph& g, VertexSet s)
{
    bool found = false;
    for_each(s, [&](int a) {
        for_each(g.neighbors(a) & s & ~first_n(a + 1), [&](int b) {
            if (g.neighbors(a) & g.neighbors(b) & s & ~first_n(b + 1))
                found = true;
        });
    });
    return found;
}

// Four degree-6 vertices, three forming a triangle; or two of degree 6 and two of degree 7.
bool fact1_predicate(const Graph& g)
{
    const VertexSet six = of_degree(g, 6), seven = of_degree(g, 7);
    if (set_size(six) == 4 && has_triangle_in(g, six))
        return true;
    return set_size(six) == 2 && set_size(seven) == 2;
}

// A degree-5 vertex adjacent to every degree-6 vertex.
bool fact2_predicate(const Graph& g)
{
    const VertexSet six = of_degree(g, 6);
    bool found = false;
    for_each(of_degree(g, 5), [&](int v) { found = found || (g.neighbors(v) & six) == six; });
    return found;
}

VertexSet degree_at_least(const Graph& g, int d)
{
    VertexSet s = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) >= d)
            s |= bit(v);
    return s;
}

struct FactDef {
    std::string_view id;
    int n;
    int expected_count;
};

constexpr FactDef kFacts[] = {
    {"fact1", 16, 3}, {"fact2", 17, 4}, {"fact3", 18, -1}, {"fact1_property", 16, -1}, {"fact2_property", 17, -1},
};

} // namespace

std::vector<std::string> fact_ids()
{
    std::vector<std::string> ids;
    for (const FactDef& f : kFacts)
        ids.emplace_back(f.id);
    return ids;
}

Certificate check_fact(std::string_view fact_id, const VerifyOptions& opt)
{
    detail::Stopwatch clock;
    const FactDef* def = nullptr;
    for (const FactDef& f : kFacts)
        if (f.id == fact_id)
            def = &f;
    if (!def)
        throw Error(ErrorKind::OutOfRange, "unknown fact id '" + std::string(fact_id) + "'");
    Certificate c;
    c.claim_id = std::string(fact_id);
    c.params = {{"n", def->n}, {"min_degree", 5}};
    if (fact_id == "fact3" && !opt.long_running) {
        c = detail::infeasible(std::move(c), "fact3 is a long-running check; pass the long-running flag");
        c.runtime_ms = clock.ms();
        return c;
    }
    EnumerationTask task = detail::task_for(def->n, EnumerationMode::triangulation, opt);
    task.min_degree = 5;
    EnumerationResult r;
    try {
        r = enumerate(task);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InfeasibleScale)
            throw;
        c = detail::infeasible(std::move(c), e.what());
        c.runtime_ms = clock.ms();
        return c;
    }
    c.exhaustive = r.exhaustive;
    c.counts["classes"] = static_cast<std::int64_t>(r.count);
    c.counts["nodes"] = static_cast<std::int64_t>(r.nodes);
    for (const auto& [k, v] : r.stats)
        c.counts["search_" + k] = static_cast<std::int64_t>(v);

    std::vector<const Graph*> hits;
    if (def->expected_count >= 0) {
        c.counts["expected_classes"] = def->expected_count;
        c.verdict = static_cast<int>(r.count) == def->expected_count ? Verdict::verified : Verdict::refuted;
        for (const Graph& g : r.graphs)
            c.witnesses.push_back(to_graph6(g));
    } else if (fact_id == "fact1_property") {
        for (const Graph& g : r.graphs)
            if (fact1_predicate(g))
                hits.push_back(&g);
    } else if (fact_id == "fact2_property") {
        // Only duals with degree sequence 5^12 6^5 arise in the argument this predicate serves.
        std::int64_t in_scope = 0, unscoped_hits = 0;
        for (const Graph& g : r.graphs) {
            const bool pred = fact2_predicate(g);
            unscoped_hits += pred;
            const DegreeSequence ds = g.degree_sequence();
            if (ds.count(5) == 12 && ds.count(6) == 5) {
                ++in_scope;
                if (pred)
                    hits.push_back(&g);
            }
        }
        c.counts["in_scope"] = in_scope;
        c.counts["out_of_scope"] = static_cast<std::int64_t>(r.count) - in_scope;
        c.counts["unscoped_hits"] = unscoped_hits;
        c.notes["scope"] = "degree sequence 5^12 6^5";
    } else {
        std::int64_t five_cycle_checks = 0;
        for (const Graph& g : r.graphs) {
            const VertexSet t = degree_at_least(g, 6);
            ++five_cycle_checks;
            if (set_size(t) >= 5 && cycle_of_length_in(g, t, 5))
                hits.push_back(&g);
        }
        c.counts["induced_subgraphs_checked"] = five_cycle_checks;
    }
    if (def->expected_count < 0) {
        c.counts["property_hits"] = static_cast<std::int64_t>(hits.size());
        c.verdict = hits.empty() ? Verdict::verified : Verdict::refuted;
        if (hits.empty())
            for (const Graph& g : r.graphs)
                c.witnesses.push_back(to_graph6(g));
        else
            for (const Graph* g : hits)
                c.witnesses.push_back(to_graph6(*g));
    }
    if (!c.exhaustive && c.verdict == Verdict::verified)
        c = detail::infeasible(std::move(c), "enumeration did not complete");
    c.runtime_ms = clock.ms();
    return c;
}

} // namespace planram
