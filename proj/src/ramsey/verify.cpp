#include "planram/ramsey.hpp"

#include "common.hpp"
#include "planram/error.hpp"
#include "planram/graph6.hpp"
#include "planram/planar.hpp"
#include "planram/subgraph.hpp"

namespace planram {

namespace {

struct WheelTally {
    std::int64_t graphs = 0;
    std::int64_t without_wheel = 0;
    std::int64_t hubs_examined = 0;
    std::int64_t dirac = 0;
    std::int64_t chvatal_erdos = 0;
    std::vector<Graph> counterexamples;
};

bool complement_has_wheel(const Graph& g, int m, WheelTally& t)
{
    if (m + 1 > g.order())
        return false;
    WheelSearch s = find_wheel(g.complement(), m, false);
    t.hubs_examined += s.hubs_examined;
    t.dirac += s.shortcut == WheelShortcut::dirac;
    t.chvatal_erdos += s.shortcut == WheelShortcut::chvatal_erdos;
    return s.found;
}

WheelTally tally(const std::vector<Graph>& graphs, int m)
{
    WheelTally t;
    for (const Graph& g : graphs) {
        ++t.graphs;
        if (!complement_has_wheel(g, m, t)) {
            ++t.without_wheel;
            t.counterexamples.push_back(g);
        }
    }
    return t;
}

} // namespace

Certificate verify_pr_upper(int n_wheel, int host, const VerifyOptions& opt)
{
    detail::Stopwatch clock;
    if (n_wheel < 3)
        throw Error(ErrorKind::OutOfRange, "rim length must be >= 3");
    if (host < 1 || host > kMaxOrder)
        throw Error(ErrorKind::OutOfRange, "host order must be in 1..64");
    Certificate c;
    c.claim_id = pr_upper_id(n_wheel, host);
    c.params = {{"n_wheel", n_wheel}, {"host", host}};
    c.notes["reduction"] = "maximal C4-free planar graphs; complements of subgraphs only gain edges";
    if (host > 11 && !opt.long_running) {
        c = detail::infeasible(std::move(c), "host order above 11 needs the long-running flag");
        c.runtime_ms = clock.ms();
        return c;
    }
    EnumerationTask task = detail::task_for(host, EnumerationMode::c4free_planar, opt);
    task.maximal_only = true;
    EnumerationResult maximal;
    try {
        maximal = enumerate(task);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InfeasibleScale)
            throw;
        c = detail::infeasible(std::move(c), e.what());
        c.runtime_ms = clock.ms();
        return c;
    }
    const WheelTally t = tally(maximal.graphs, n_wheel);
    c.counts["maximal_classes"] = t.graphs;
    c.counts["counterexamples"] = t.without_wheel;
    c.counts["hubs_examined"] = t.hubs_examined;
    c.counts["shortcut_dirac"] = t.dirac;
    c.counts["shortcut_chvatal_erdos"] = t.chvatal_erdos;
    c.counts["nodes"] = static_cast<std::int64_t>(maximal.nodes);
    if (host <= 8) {
        // Cross-check of the maximality reduction against every class.
        task.maximal_only = false;
        EnumerationResult all = enumerate(task);
        const WheelTally full = tally(all.graphs, n_wheel);
        c.counts["full_classes"] = full.graphs;
        c.counts["full_counterexamples"] = full.without_wheel;
        if ((full.without_wheel == 0) != (t.without_wheel == 0))
            throw Error(ErrorKind::PropertyViolation, "maximal and full enumerations disagree for " + c.claim_id);
    }
    c.exhaustive = maximal.exhaustive;
    c.verdict = t.without_wheel == 0 ? Verdict::verified : Verdict::refuted;
    if (!t.counterexamples.empty())
        c.witnesses.push_back(to_graph6(t.counterexamples.front()));
    c.runtime_ms = clock.ms();
    return c;
}

Certificate verify_pr_lower(int n_wheel, const VerifyOptions&)
{
    detail::Stopwatch clock;
    Certificate c;
    c.claim_id = pr_lower_id(n_wheel);
    const int pr = claimed_pr(n_wheel);
    c.params = {{"n_wheel", n_wheel}, {"claimed_pr", pr}, {"order", pr - 1}};
    Graph g;
    try {
        g = build_ramsey_lower_witness(n_wheel);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedOrder)
            throw;
        c = detail::infeasible(std::move(c), e.what());
        c.runtime_ms = clock.ms();
        return c;
    }
    const Graph comp = g.complement();
    bool ok = g.order() == pr - 1 && !contains_c4(g) && is_planar(g);
    c.counts["complement_max_degree"] = comp.max_degree();
    if (g.order() > 30 && comp.max_degree() < n_wheel) {
        c.notes["wheel_check"] = "degree_argument";
    } else {
        c.notes["wheel_check"] = "exact_search";
        WheelSearch s = find_wheel(comp, n_wheel, false);
        c.counts["hubs_examined"] = s.hubs_examined;
        ok = ok && !s.found;
    }
    c.verdict = ok ? Verdict::verified : Verdict::refuted;
    c.witnesses.push_back(to_graph6(g));
    c.runtime_ms = clock.ms();
    return c;
}

Certificate verify_delta(int n, const VerifyOptions& opt)
{
    detail::Stopwatch clock;
    if (n < 5 || n > kMaxOrder)
        throw Error(ErrorKind::UnsupportedOrder, "minimum degree claims cover orders 5..64, not " + std::to_string(n));
    const DeltaVerdict dv = delta_verdict(n);
    Certificate c;
    c.claim_id = delta_id(n);
    c.params = {{"n", n}, {"claimed_delta", dv.claimed_delta}};
    c.notes["witness_seed"] = dv.witness.seed;
    c.notes["upper_bound_method"] = method_name(dv.upper_bound_method);
    c.counts["witness_steps"] = static_cast<std::int64_t>(dv.witness.steps.size());
    const Graph& w = dv.witness.final_embedding.graph();
    c.witnesses.push_back(to_graph6(w));
    c.counts["witness_min_degree"] = w.min_degree();
    const bool lower_ok = w.order() == n && w.min_degree() == dv.claimed_delta && !contains_c4(w) && is_planar(w);

    bool upper_ok = false;
    switch (dv.upper_bound_method) {
    case UpperBoundMethod::enumeration: {
        EnumerationTask task = detail::task_for(n, EnumerationMode::c4free_planar, opt);
        task.min_degree = dv.claimed_delta + 1;
        try {
            EnumerationResult r = enumerate(task);
            c.counts["upper_classes"] = static_cast<std::int64_t>(r.count);
            c.counts["upper_nodes"] = static_cast<std::int64_t>(r.nodes);
            for (const Graph& g : r.graphs)
                c.witnesses.push_back(to_graph6(g));
            if (n == 10 || n == 11) {
                // Second route: Euler's 3n - 6 in place of the face-identity cap.
                task.euler_cap_only = true;
                EnumerationResult e = enumerate(task);
                c.counts["euler_route_classes"] = static_cast<std::int64_t>(e.count);
                c.counts["euler_route_nodes"] = static_cast<std::int64_t>(e.nodes);
                if (e.count != r.count)
                    throw Error(ErrorKind::PropertyViolation, "edge-cap and Euler routes disagree at n=" + std::to_string(n));
            }
            upper_ok = r.count == 0;
            c.exhaustive = r.exhaustive;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::InfeasibleScale)
                throw;
            c = detail::infeasible(std::move(c), e.what());
            c.runtime_ms = clock.ms();
            return c;
        }
        break;
    }
    case UpperBoundMethod::edge_bound: {
        const int d = dv.claimed_delta + 1;
        c.counts["edge_bound_lhs"] = 7 * ((static_cast<std::int64_t>(d) * n + 1) / 2);
        c.counts["edge_bound_rhs"] = 15 * static_cast<std::int64_t>(n - 2);
        upper_ok = edge_bound_excludes(n, d);
        break;
    }
    case UpperBoundMethod::none:
        c.verdict = lower_ok ? Verdict::infeasible : Verdict::refuted;
        c.notes["reason"] = "upper bound for this order needs the dual/triangulation case analysis; see the fact checks";
        c.runtime_ms = clock.ms();
        return c;
    }
    c.verdict = lower_ok && upper_ok ? Verdict::verified : Verdict::refuted;
    c.runtime_ms = clock.ms();
    return c;
}

} // namespace planram
