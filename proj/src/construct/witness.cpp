#include "planram/construct.hpp"

#include "planram/canonical.hpp"
#include "planram/enumerate.hpp"
#include "planram/error.hpp"
#include "planram/subgraph.hpp"

#include <functional>
#include <set>

namespace planram {

namespace {

struct Candidate {
    TraceStep step;
    PlaneEmbedding result;
};

// Every valid application of Operation A, in face and start order.
std::vector<Candidate> a_moves(const PlaneEmbedding& e)
{
    std::vector<Candidate> out;
    for (int f = 0; f < static_cast<int>(e.faces().size()); ++f) {
        const auto& w = e.faces()[f].boundary;
        const int k = static_cast<int>(w.size());
        if (k < 6)
            continue;
        for (int i = 0; i < k; ++i) {
            TraceStep s{OperationKind::a, {f, w[i], w[(i + 3) % k]}};
            try {
                out.push_back({s, apply(e, s)});
            } catch (const Error&) {
            }
        }
    }
    return out;
}

std::vector<Candidate> b_moves(const PlaneEmbedding& e)
{
    std::vector<Candidate> out;
    for (int v = 0; v < e.order(); ++v) {
        if (e.graph().degree(v) != 4)
            continue;
        for (int i = 0; i < 2; ++i) {
            TraceStep s{OperationKind::b, {v, i}};
            try {
                out.push_back({s, apply(e, s)});
            } catch (const Error&) {
            }
        }
    }
    return out;
}

std::vector<Candidate> c_moves(const PlaneEmbedding& e)
{
    std::vector<Candidate> out;
    for (const Edge& uv : e.graph().edges())
        for (int mirrored = 0; mirrored < 2; ++mirrored)
            for (auto [t, b] : {std::pair{uv.u, uv.v}, std::pair{uv.v, uv.u}}) {
                TraceStep s{OperationKind::c, {t, b, mirrored}};
                try {
                    out.push_back({s, apply(e, s)});
                } catch (const Error&) {
                }
            }
    return out;
}

std::vector<Candidate> b_inverse_moves(const PlaneEmbedding& e)
{
    std::vector<Candidate> out;
    const Graph& g = e.graph();
    for (const Edge& uv : g.edges()) {
        if (g.degree(uv.u) != 3 || g.degree(uv.v) != 3)
            continue;
        TraceStep s{OperationKind::b_inverse, {uv.u, uv.v}};
        try {
            out.push_back({s, apply(e, s)});
        } catch (const Error&) {
        }
    }
    return out;
}

// Depth-first search for a step sequence reaching `target` vertices with minimum degree 3.
// States are deduplicated up to isomorphism.
bool search_delta3(const PlaneEmbedding& e, int target, int max_order, std::vector<TraceStep>& steps,
                   std::set<std::vector<std::uint8_t>>& seen)
{
    if (e.order() == target)
        return e.graph().min_degree() == 3;
    if (!seen.insert(canonical_form(e.graph()).code).second)
        return false;
    std::vector<Candidate> moves;
    auto add = [&](std::vector<Candidate> more) {
        for (Candidate& c : more)
            if (c.result.order() <= max_order)
                moves.push_back(std::move(c));
    };
    if (target - e.order() >= 2)
        add(c_moves(e));
    if (target > e.order())
        add(b_moves(e));
    add(b_inverse_moves(e));
    if (target - e.order() < 2)
        add(c_moves(e));
    for (Candidate& c : moves) {
        steps.push_back(c.step);
        if (search_delta3(c.result, target, max_order, steps, seen))
            return true;
        steps.pop_back();
    }
    return false;
}

ConstructionTrace finish(std::string seed, std::vector<TraceStep> steps)
{
    ConstructionTrace t{std::move(seed), std::move(steps), {}};
    t.final_embedding = replay(t);
    return t;
}

ConstructionTrace grow_with_a(const std::string& seed, int target)
{
    PlaneEmbedding e = seed_embedding(seed);
    std::vector<TraceStep> steps;
    while (e.order() < target) {
        auto moves = a_moves(e);
        if (moves.empty())
            throw Error(ErrorKind::PropertyViolation, "no valid Operation A on the way to " + std::to_string(target));
        steps.push_back(moves.front().step);
        e = std::move(moves.front().result);
    }
    return finish(seed, std::move(steps));
}

} // namespace

bool in_delta4_set(int n)
{
    return n == 30 || n == 36 || n == 39 || n == 42 || n >= 44;
}

int claimed_delta(int n)
{
    if (n < 5)
        throw Error(ErrorKind::UnsupportedOrder, "minimum degree table starts at n = 5");
    if (n <= 9)
        return 2;
    return in_delta4_set(n) ? 4 : 3;
}

int claimed_pr(int n_wheel)
{
    const int n = n_wheel;
    if (n < 3)
        throw Error(ErrorKind::UnsupportedOrder, "wheels have rim length >= 3");
    if (n == 3)
        return 10;
    if (n == 6)
        return 9;
    if (n == 4 || n == 5 || n == 26 || n == 32 || n == 35 || n == 38 || n >= 40)
        return n + 5;
    return n + 4;
}

ConstructionTrace build_delta_witness(int n)
{
    if (n < 5 || n > kMaxOrder)
        throw Error(ErrorKind::UnsupportedOrder, "witnesses exist for orders 5..64, not " + std::to_string(n));
    if (n <= 9)
        return finish("cycle:" + std::to_string(n), {});
    if (n == 30)
        return finish("fig8a", {});
    if (n == 44)
        return finish("fig8c", {});
    if (in_delta4_set(n)) {
        static const char* by_residue[3] = {"fig8b", "fig8d", "fig8e"};
        return grow_with_a(by_residue[n % 3], n);
    }
    std::vector<TraceStep> steps;
    std::set<std::vector<std::uint8_t>> seen;
    if (n > 30) {
        // Repeated Operation B from the 4-regular seed.
        if (!search_delta3(load_seed("fig8a").embedding, n, n, steps, seen))
            throw Error(ErrorKind::PropertyViolation, "no Operation B sequence reaches " + std::to_string(n));
        return finish("fig8a", std::move(steps));
    }
    if (!search_delta3(load_seed("fig10").embedding, n, n + 1, steps, seen))
        throw Error(ErrorKind::PropertyViolation, "no B/C sequence reaches " + std::to_string(n));
    return finish("fig10", std::move(steps));
}

Graph build_ramsey_lower_witness(int n_wheel)
{
    const int order = claimed_pr(n_wheel) - 1;
    if (order > kMaxOrder)
        throw Error(ErrorKind::UnsupportedOrder, "witness order " + std::to_string(order) + " exceeds 64");
    Graph g;
    if (n_wheel == 3) {
        EnumerationTask task;
        task.n = order;
        task.mode = EnumerationMode::c4free_planar;
        for (const Graph& h : enumerate(task).graphs)
            if (!contains_wheel(h.complement(), 3)) {
                g = h;
                break;
            }
        if (g.order() != order)
            throw Error(ErrorKind::PropertyViolation, "no K4-free complement among C4-free planar graphs on 9 vertices");
    } else if (n_wheel <= 6) {
        static const char* seeds[3] = {"fig12a", "fig12b", "fig12c"};
        g = load_seed(seeds[n_wheel - 4]).graph;
    } else {
        g = build_delta_witness(order).final_embedding.graph();
    }
    if (contains_c4(g) || !is_planar(g) || contains_wheel(g.complement(), n_wheel))
        throw Error(ErrorKind::PropertyViolation, "lower-bound witness for W" + std::to_string(n_wheel) + " fails its checks");
    g.set_label("W" + std::to_string(n_wheel) + " lower bound");
    return g;
}

} // namespace planram
